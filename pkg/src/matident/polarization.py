"""Reconstruct a symmetric multiadditive function from its diagonal.

Given only F(x) = f(x, ..., x) for a symmetric function f that is additive in
each argument, the full value f(x_1, ..., x_n) is an alternating sum of F over
all subset sums shifted by a free base point, divided by n!.  The operator
treats F as opaque: it only ever calls it, exactly 2**n times.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any, Callable, Sequence

from .rings import Ring


@dataclass(frozen=True)
class DiagonalFunction:
    """The diagonal restriction F(x) = f(x, ..., x) of an n-ary function."""

    arity: int
    evaluate: Callable[[Any], Any]


def componentwise_add(ring: Ring) -> Callable[[tuple, tuple], tuple]:
    """Addition of equal-length tuples of ring elements, componentwise."""

    def add(u: tuple, v: tuple) -> tuple:
        return tuple(ring.add(a, b) for a, b in zip(u, v))

    return add


def polarize(
    func: DiagonalFunction,
    xs: Sequence[Any],
    gamma: Any,
    add: Callable[[Any, Any], Any],
    ring: Ring,
) -> Any:
    """Recover f(x_1, ..., x_n) from the diagonal restriction F.

    `add` combines input-space points (which need not be ring elements, e.g.
    matrix columns); `ring` supplies the output-side arithmetic including the
    exact division by n!.  Subsets are visited in binary-counter order; the
    empty subset contributes F(gamma) with sign (-1)**n, and the result does
    not depend on gamma.
    """
    n = func.arity
    if n < 1:
        raise ValueError("diagonal function arity must be at least 1")
    points = tuple(xs)
    if len(points) != n:
        raise ValueError(f"expected {n} input points, got {len(points)}")
    total = None
    for mask in range(1 << n):
        shifted = gamma
        for j in range(n):
            if mask >> j & 1:
                shifted = add(shifted, points[j])
        value = func.evaluate(shifted)
        positive = (n - mask.bit_count()) % 2 == 0
        if total is None:
            total = value if positive else ring.neg(value)
        elif positive:
            total = ring.add(total, value)
        else:
            total = ring.sub(total, value)
    return ring.div_int(total, math.factorial(n))
