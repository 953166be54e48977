"""Exact ring arithmetic behind one small interface.

Three concrete rings are provided: arbitrary-precision rationals, sparse
multivariate polynomials over the rationals, and small square matrices of
rationals (the stock noncommutative test ring).  Every evaluator in this
package performs arithmetic exclusively through a :class:`Ring` object, which
is what lets the benchmark layer swap in a counting wrapper without touching
evaluator code.
"""

from __future__ import annotations

import re
from abc import ABC, abstractmethod
from fractions import Fraction
from typing import Any, Callable, Iterable, Mapping

VARIABLE_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")

_ZERO = Fraction(0)
_ONE = Fraction(1)


def binary_power(one: Any, mul: Callable[[Any, Any], Any], x: Any, exponent: int) -> Any:
    """Square-and-multiply exponentiation.

    Shared by every ring (and by the counting wrapper) so that instrumented
    and plain evaluations multiply in exactly the same order.
    """
    if exponent < 0:
        raise ValueError("ring exponent must be nonnegative")
    if exponent == 0:
        return one
    result = None
    base = x
    e = exponent
    while True:
        if e & 1:
            result = base if result is None else mul(result, base)
        e >>= 1
        if not e:
            return result
        base = mul(base, base)


class Ring(ABC):
    """Minimal exact-arithmetic ring contract used by all evaluators."""

    name: str = "ring"
    commutative: bool = True

    @abstractmethod
    def zero(self) -> Any: ...

    @abstractmethod
    def one(self) -> Any: ...

    @abstractmethod
    def from_int(self, value: int) -> Any: ...

    @abstractmethod
    def add(self, x: Any, y: Any) -> Any: ...

    @abstractmethod
    def sub(self, x: Any, y: Any) -> Any: ...

    @abstractmethod
    def neg(self, x: Any) -> Any: ...

    @abstractmethod
    def mul(self, x: Any, y: Any) -> Any: ...

    @abstractmethod
    def eq(self, x: Any, y: Any) -> bool: ...

    @abstractmethod
    def is_element(self, x: Any) -> bool: ...

    @abstractmethod
    def _div_exact(self, x: Any, k: int) -> Any: ...

    def div_int(self, x: Any, k: int) -> Any:
        """Exact division by a nonzero integer.

        Identity evaluators divide by the full product n! in one call rather
        than by 2..n successively.
        """
        if k == 0:
            raise ZeroDivisionError("division of a ring element by integer zero")
        return self._div_exact(x, k)

    def power(self, x: Any, exponent: int) -> Any:
        """x**exponent for exponent >= 0, with x**0 = one."""
        return binary_power(self.one(), self.mul, x, exponent)

    def is_zero(self, x: Any) -> bool:
        return self.eq(x, self.zero())

    def sum(self, items: Iterable[Any]) -> Any:
        """Fold items with add; the empty sum is zero."""
        total = None
        for item in items:
            total = item if total is None else self.add(total, item)
        return self.zero() if total is None else total

    def product(self, items: Iterable[Any]) -> Any:
        """Fold items with mul (left to right); the empty product is one."""
        total = None
        for item in items:
            total = item if total is None else self.mul(total, item)
        return self.one() if total is None else total


class RationalRing(Ring):
    """Arbitrary-precision rationals backed by fractions.Fraction.

    Fraction already keeps values reduced with a positive denominator, which
    is the canonical form this package relies on.
    """

    name = "rationals"
    commutative = True

    def zero(self) -> Fraction:
        return _ZERO

    def one(self) -> Fraction:
        return _ONE

    def from_int(self, value: int) -> Fraction:
        return Fraction(value)

    def add(self, x: Fraction, y: Fraction) -> Fraction:
        return x + y

    def sub(self, x: Fraction, y: Fraction) -> Fraction:
        return x - y

    def neg(self, x: Fraction) -> Fraction:
        return -x

    def mul(self, x: Fraction, y: Fraction) -> Fraction:
        return x * y

    def eq(self, x: Fraction, y: Fraction) -> bool:
        return x == y

    def is_element(self, x: Any) -> bool:
        return isinstance(x, Fraction)

    def _div_exact(self, x: Fraction, k: int) -> Fraction:
        return x / k


def _merge_monomials(a: tuple, b: tuple) -> tuple:
    """Merge two sorted (name, exponent) tuples, adding exponents on ties."""
    if not a:
        return b
    if not b:
        return a
    out = []
    i = j = 0
    while i < len(a) and j < len(b):
        name_a, exp_a = a[i]
        name_b, exp_b = b[j]
        if name_a == name_b:
            out.append((name_a, exp_a + exp_b))
            i += 1
            j += 1
        elif name_a < name_b:
            out.append(a[i])
            i += 1
        else:
            out.append(b[j])
            j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return tuple(out)


class Poly:
    """Sparse multivariate polynomial over the rationals.

    A monomial is a tuple of (variable name, exponent) pairs sorted by name;
    the empty tuple is the constant monomial.  Terms with zero coefficient are
    never stored, so structural equality of the term maps is polynomial
    equality and the printed form is canonical.  Instances are immutable
    values.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple, Fraction | int] | None = None):
        normalized: dict[tuple, Fraction] = {}
        if terms:
            for monomial, coeff in terms.items():
                value = Fraction(coeff)
                if value:
                    normalized[monomial] = value
        object.__setattr__(self, "_terms", normalized)

    def __setattr__(self, name: str, value: Any) -> None:
        raise AttributeError("Poly instances are immutable")

    @classmethod
    def zero(cls) -> "Poly":
        return cls()

    @classmethod
    def one(cls) -> "Poly":
        return cls.constant(1)

    @classmethod
    def constant(cls, value: Fraction | int) -> "Poly":
        return cls({(): Fraction(value)})

    @classmethod
    def variable(cls, name: str) -> "Poly":
        if not VARIABLE_NAME_RE.match(name):
            raise ValueError(f"invalid variable name: {name!r}")
        return cls({((name, 1),): _ONE})

    def terms(self) -> list[tuple[tuple, Fraction]]:
        """Terms in canonical (sorted monomial) order."""
        return sorted(self._terms.items())

    def coefficient(self, monomial: tuple) -> Fraction:
        return self._terms.get(monomial, _ZERO)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or set(self._terms) == {()}

    def constant_value(self) -> Fraction:
        """The value of a constant polynomial."""
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self._terms.get((), _ZERO)

    def variables(self) -> set[str]:
        return {name for monomial in self._terms for name, _ in monomial}

    @staticmethod
    def _coerce(value: Any) -> "Poly | None":
        if isinstance(value, Poly):
            return value
        if isinstance(value, (int, Fraction)):
            return Poly.constant(value)
        return None

    def __add__(self, other: Any) -> "Poly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self._terms)
        for monomial, coeff in other._terms.items():
            terms[monomial] = terms.get(monomial, _ZERO) + coeff
        return Poly(terms)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly({m: -c for m, c in self._terms.items()})

    def __sub__(self, other: Any) -> "Poly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self._terms)
        for monomial, coeff in other._terms.items():
            terms[monomial] = terms.get(monomial, _ZERO) - coeff
        return Poly(terms)

    def __rsub__(self, other: Any) -> "Poly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other: Any) -> "Poly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms: dict[tuple, Fraction] = {}
        for mono_a, coeff_a in self._terms.items():
            for mono_b, coeff_b in other._terms.items():
                monomial = _merge_monomials(mono_a, mono_b)
                terms[monomial] = terms.get(monomial, _ZERO) + coeff_a * coeff_b
        return Poly(terms)

    __rmul__ = __mul__

    def __truediv__(self, other: Any) -> "Poly":
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        if other == 0:
            raise ZeroDivisionError("division of a polynomial by zero")
        return Poly({m: c / other for m, c in self._terms.items()})

    def __pow__(self, exponent: int) -> "Poly":
        if not isinstance(exponent, int):
            return NotImplemented
        return binary_power(Poly.one(), Poly.__mul__, self, exponent)

    def __eq__(self, other: Any) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def evaluate(self, values: Mapping[str, Fraction | int]) -> Fraction:
        """Substitute rationals for every variable."""
        total = _ZERO
        for monomial, coeff in self._terms.items():
            factor = coeff
            for name, exponent in monomial:
                factor *= Fraction(values[name]) ** exponent
            total += factor
        return total

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for monomial, coeff in self.terms():
            body = "*".join(
                name if exp == 1 else f"{name}^{exp}" for name, exp in monomial
            )
            if not body:
                parts.append(str(coeff))
            elif coeff == 1:
                parts.append(body)
            elif coeff == -1:
                parts.append(f"-{body}")
            else:
                parts.append(f"{coeff}*{body}")
        text = parts[0]
        for part in parts[1:]:
            if part.startswith("-"):
                text += f" - {part[1:]}"
            else:
                text += f" + {part}"
        return text

    def __repr__(self) -> str:
        return f"Poly({self})"


class PolynomialRing(Ring):
    """Multivariate polynomials over the rationals as a commutative ring."""

    name = "polynomials over the rationals"
    commutative = True

    def zero(self) -> Poly:
        return Poly.zero()

    def one(self) -> Poly:
        return Poly.one()

    def from_int(self, value: int) -> Poly:
        return Poly.constant(value)

    def variable(self, name: str) -> Poly:
        return Poly.variable(name)

    def add(self, x: Poly, y: Poly) -> Poly:
        return x + y

    def sub(self, x: Poly, y: Poly) -> Poly:
        return x - y

    def neg(self, x: Poly) -> Poly:
        return -x

    def mul(self, x: Poly, y: Poly) -> Poly:
        return x * y

    def eq(self, x: Poly, y: Poly) -> bool:
        return x == y

    def is_element(self, x: Any) -> bool:
        return isinstance(x, Poly)

    def _div_exact(self, x: Poly, k: int) -> Poly:
        return x / k


class MatrixElement:
    """Square matrix of rationals used as a noncommutative ring element."""

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable[Fraction | int]]):
        frozen = tuple(tuple(Fraction(entry) for entry in row) for row in rows)
        if not frozen:
            raise ValueError("matrix element needs at least one row")
        dim = len(frozen)
        if any(len(row) != dim for row in frozen):
            raise ValueError("matrix element must be square")
        object.__setattr__(self, "rows", frozen)

    def __setattr__(self, name: str, value: Any) -> None:
        raise AttributeError("MatrixElement instances are immutable")

    @classmethod
    def zeros(cls, dim: int) -> "MatrixElement":
        return cls([[0] * dim for _ in range(dim)])

    @classmethod
    def identity(cls, dim: int) -> "MatrixElement":
        return cls([[1 if i == j else 0 for j in range(dim)] for i in range(dim)])

    @classmethod
    def scalar(cls, dim: int, value: Fraction | int) -> "MatrixElement":
        return cls([[value if i == j else 0 for j in range(dim)] for i in range(dim)])

    @property
    def dim(self) -> int:
        return len(self.rows)

    def _check_dim(self, other: "MatrixElement") -> None:
        if self.dim != other.dim:
            raise ValueError("matrix elements have mismatched dimensions")

    def __add__(self, other: Any) -> "MatrixElement":
        if not isinstance(other, MatrixElement):
            return NotImplemented
        self._check_dim(other)
        return MatrixElement(
            tuple(a + b for a, b in zip(row_a, row_b))
            for row_a, row_b in zip(self.rows, other.rows)
        )

    def __sub__(self, other: Any) -> "MatrixElement":
        if not isinstance(other, MatrixElement):
            return NotImplemented
        self._check_dim(other)
        return MatrixElement(
            tuple(a - b for a, b in zip(row_a, row_b))
            for row_a, row_b in zip(self.rows, other.rows)
        )

    def __neg__(self) -> "MatrixElement":
        return MatrixElement(tuple(-a for a in row) for row in self.rows)

    def __mul__(self, other: Any) -> "MatrixElement":
        if not isinstance(other, MatrixElement):
            return NotImplemented
        self._check_dim(other)
        dim = self.dim
        cols = tuple(zip(*other.rows))
        return MatrixElement(
            tuple(sum(a * b for a, b in zip(row, col)) for col in cols)
            for row in self.rows
        )

    def __truediv__(self, other: Any) -> "MatrixElement":
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        if other == 0:
            raise ZeroDivisionError("division of a matrix element by zero")
        return MatrixElement(tuple(a / other for a in row) for row in self.rows)

    def __pow__(self, exponent: int) -> "MatrixElement":
        if not isinstance(exponent, int):
            return NotImplemented
        return binary_power(
            MatrixElement.identity(self.dim), MatrixElement.__mul__, self, exponent
        )

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, MatrixElement):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __str__(self) -> str:
        return "[" + ", ".join(
            "[" + ", ".join(str(a) for a in row) + "]" for row in self.rows
        ) + "]"

    def __repr__(self) -> str:
        return f"MatrixElement({self})"


class MatrixRing(Ring):
    """Ring of dim x dim rational matrices; noncommutative for dim >= 2."""

    def __init__(self, dim: int = 2):
        if dim < 1:
            raise ValueError("matrix ring dimension must be at least 1")
        self.dim = dim
        self.name = f"{dim}x{dim} rational matrices"
        self.commutative = dim == 1

    def zero(self) -> MatrixElement:
        return MatrixElement.zeros(self.dim)

    def one(self) -> MatrixElement:
        return MatrixElement.identity(self.dim)

    def from_int(self, value: int) -> MatrixElement:
        return MatrixElement.scalar(self.dim, value)

    def add(self, x: MatrixElement, y: MatrixElement) -> MatrixElement:
        return x + y

    def sub(self, x: MatrixElement, y: MatrixElement) -> MatrixElement:
        return x - y

    def neg(self, x: MatrixElement) -> MatrixElement:
        return -x

    def mul(self, x: MatrixElement, y: MatrixElement) -> MatrixElement:
        return x * y

    def eq(self, x: MatrixElement, y: MatrixElement) -> bool:
        return x == y

    def is_element(self, x: Any) -> bool:
        return isinstance(x, MatrixElement) and x.dim == self.dim

    def _div_exact(self, x: MatrixElement, k: int) -> MatrixElement:
        return x / k


RATIONAL = RationalRing()
SYMBOLIC = PolynomialRing()
MATRIX2 = MatrixRing(2)
