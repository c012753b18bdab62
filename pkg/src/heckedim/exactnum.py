"""Exact scalars over Q or a real quadratic field Q(sqrt(D)), and integer
Laurent polynomials in the grading variable v.

All arithmetic is exact; nothing in this package ever touches floating point.
"""

from __future__ import annotations

from fractions import Fraction
from functools import total_ordering
from typing import Iterable, Mapping, Union

from .errors import (
    DivisionByZero,
    FieldMismatch,
    MaxExpOfZero,
    MinExpOfZero,
)

RationalLike = Union[int, Fraction]


def _is_squarefree(d: int) -> bool:
    if d < 2:
        return False
    p = 2
    while p * p <= d:
        if d % (p * p) == 0:
            return False
        p += 1
    return True


class FieldSpec:
    """Coefficient field: the rationals (``d == 0``) or Q(sqrt(d)).

    >>> FieldSpec(5).sqrt_str()
    'sqrt(5)'
    """

    __slots__ = ("d",)

    def __init__(self, d: int = 0) -> None:
        if d != 0 and not _is_squarefree(d):
            raise ValueError(f"d must be 0 or a square-free integer >= 2, got {d}")
        self.d = d

    @property
    def is_rational(self) -> bool:
        return self.d == 0

    def sqrt_str(self) -> str:
        return f"sqrt({self.d})" if self.d else ""

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FieldSpec) and self.d == other.d

    def __hash__(self) -> int:
        return hash(("FieldSpec", self.d))

    def __repr__(self) -> str:
        return "FieldSpec(rationals)" if self.d == 0 else f"FieldSpec(sqrt {self.d})"


RATIONALS = FieldSpec(0)


def _join(f: FieldSpec, g: FieldSpec, xb: Fraction, yb: Fraction) -> FieldSpec:
    """Common field for two operands; rational values embed anywhere."""
    if f == g:
        return f
    if f.is_rational:
        return g
    if g.is_rational:
        return f
    # Distinct irrationalities only mix when one side is actually rational.
    if yb == 0:
        return f
    if xb == 0:
        return g
    raise FieldMismatch(f"cannot mix {f!r} and {g!r}")


@total_ordering
class Scalar:
    """Exact element a + b*sqrt(d) with a, b rational.

    Sign and comparisons use the real embedding with sqrt(d) > 0.

    >>> phi = Scalar.of(Fraction(1, 2), Fraction(1, 2), FieldSpec(5))
    >>> phi * phi == phi + 1
    True
    """

    __slots__ = ("a", "b", "field")

    def __init__(self, a: Fraction, b: Fraction, field: FieldSpec) -> None:
        if field.is_rational and b != 0:
            raise FieldMismatch("rational field cannot carry a sqrt coefficient")
        self.a = a
        self.b = b
        self.field = field

    @classmethod
    def of(cls, a: RationalLike, b: RationalLike = 0, field: FieldSpec = RATIONALS) -> Scalar:
        return cls(Fraction(a), Fraction(b), field)

    @classmethod
    def rational(cls, a: RationalLike) -> Scalar:
        return cls(Fraction(a), Fraction(0), RATIONALS)

    @classmethod
    def sqrt(cls, d: int) -> Scalar:
        return cls(Fraction(0), Fraction(1), FieldSpec(d))

    # -- structure ---------------------------------------------------------

    def key(self) -> tuple:
        return (self.a.numerator, self.a.denominator, self.b.numerator, self.b.denominator)

    @property
    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    @property
    def is_rational_value(self) -> bool:
        return self.b == 0

    def in_field(self, field: FieldSpec) -> Scalar:
        if self.field == field:
            return self
        if self.b != 0:
            raise FieldMismatch(f"cannot move {self} from {self.field!r} into {field!r}")
        return Scalar(self.a, Fraction(0), field)

    def _coerce(self, other: Union[Scalar, RationalLike]) -> Scalar:
        if isinstance(other, Scalar):
            return other
        if isinstance(other, (int, Fraction)):
            return Scalar(Fraction(other), Fraction(0), RATIONALS)
        return NotImplemented  # type: ignore[return-value]

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: Union[Scalar, RationalLike]) -> Scalar:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        field = _join(self.field, o.field, self.b, o.b)
        return Scalar(self.a + o.a, self.b + o.b, field)

    __radd__ = __add__

    def __neg__(self) -> Scalar:
        return Scalar(-self.a, -self.b, self.field)

    def __sub__(self, other: Union[Scalar, RationalLike]) -> Scalar:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: RationalLike) -> Scalar:
        return (-self) + other

    def __mul__(self, other: Union[Scalar, RationalLike]) -> Scalar:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        field = _join(self.field, o.field, self.b, o.b)
        d = field.d
        return Scalar(
            self.a * o.a + self.b * o.b * d,
            self.a * o.b + self.b * o.a,
            field,
        )

    __rmul__ = __mul__

    def inverse(self) -> Scalar:
        if self.is_zero:
            raise DivisionByZero("scalar inverse of zero")
        norm = self.a * self.a - self.b * self.b * self.field.d
        # norm == 0 would force sqrt(d) rational; impossible for square-free d.
        return Scalar(self.a / norm, -self.b / norm, self.field)

    def __truediv__(self, other: Union[Scalar, RationalLike]) -> Scalar:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: RationalLike) -> Scalar:
        return Scalar.rational(other) / self

    def __pow__(self, n: int) -> Scalar:
        if n < 0:
            return self.inverse() ** (-n)
        out = Scalar(Fraction(1), Fraction(0), self.field)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def sign(self) -> int:
        """Sign under the real embedding with sqrt(d) > 0; always decidable."""
        a, b = self.a, self.b
        if b == 0:
            return (a > 0) - (a < 0)
        if a == 0:
            return 1 if b > 0 else -1
        if a > 0 and b > 0:
            return 1
        if a < 0 and b < 0:
            return -1
        # Opposite signs: compare a^2 with b^2 d.
        lhs, rhs = a * a, b * b * self.field.d
        bigger_rational = lhs > rhs
        if a > 0:
            return 1 if bigger_rational else -1
        return -1 if bigger_rational else 1

    # -- comparisons -------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        if not isinstance(other, Scalar):
            return NotImplemented
        if self.b == 0 and other.b == 0:
            return self.a == other.a
        return self.field == other.field and self.a == other.a and self.b == other.b

    def __lt__(self, other: Union[Scalar, RationalLike]) -> bool:
        o = self._coerce(other)
        return (self - o).sign() < 0

    def __hash__(self) -> int:
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.field.d))

    def __bool__(self) -> bool:
        return not self.is_zero

    # -- text form ---------------------------------------------------------

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        root = self.field.sqrt_str()
        bpart = f"{self.b}*{root}" if self.b != 1 else root
        if self.b < 0:
            bpart = f"{-self.b}*{root}" if self.b != -1 else root
            return f"{self.a}-{bpart}" if self.a != 0 else f"-{bpart}"
        return f"{self.a}+{bpart}" if self.a != 0 else bpart

    def __repr__(self) -> str:
        return f"Scalar({self})"


def parse_scalar(text: str, field: FieldSpec | None = None) -> Scalar:
    """Parse ``"a"`` or ``"a+b*sqrt(D)"`` with rationals written ``p/q``.

    >>> str(parse_scalar("1/2+1/2*sqrt(5)"))
    '1/2+1/2*sqrt(5)'
    """
    s = text.strip().replace(" ", "")
    if "sqrt" not in s:
        value = Scalar.rational(Fraction(s))
        return value if field is None else value.in_field(field)
    # Split at the sign of the sqrt term.  Normalize "a-b*sqrt(D)" to a plus.
    head, _, tail = s.partition("sqrt(")
    d_text, _, rest = tail.partition(")")
    if rest:
        raise ValueError(f"trailing garbage in scalar {text!r}")
    d = int(d_text)
    head = head[:-1] if head.endswith("*") else head  # drop the '*' before sqrt
    if head in ("", "+"):
        a_text, b_text = "0", "1"
    elif head == "-":
        a_text, b_text = "0", "-1"
    else:
        cut = max(head.rfind("+", 1), head.rfind("-", 1))
        if cut <= 0:
            a_text, b_text = "0", head
        else:
            a_text, b_text = head[:cut], head[cut:]
            if b_text in ("+", "-"):
                b_text += "1"
    spec = FieldSpec(d)
    if field is not None and field != spec:
        raise FieldMismatch(f"scalar {text!r} does not live in {field!r}")
    return Scalar(Fraction(a_text), Fraction(b_text), spec)


class LaurentPoly:
    """Sparse integer Laurent polynomial in v.

    >>> p = LaurentPoly({1: 1, -1: 1})
    >>> str(p * p)
    'v^-2 + 2 + v^2'
    >>> str(p.bar())
    'v^-1 + v'
    """

    __slots__ = ("c", "_hash")

    def __init__(self, coeffs: Mapping[int, int] | None = None) -> None:
        self.c = {e: v for e, v in (coeffs or {}).items() if v != 0}
        self._hash: int | None = None

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> LaurentPoly:
        return cls()

    @classmethod
    def one(cls) -> LaurentPoly:
        return cls({0: 1})

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> LaurentPoly:
        return cls({exp: coeff})

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]]) -> LaurentPoly:
        out: dict[int, int] = {}
        for e, v in pairs:
            out[e] = out.get(e, 0) + v
        return cls(out)

    # -- queries -----------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.c

    def coeff(self, k: int) -> int:
        return self.c.get(k, 0)

    def minexp(self) -> int:
        if not self.c:
            raise MinExpOfZero("minexp of the zero polynomial")
        return min(self.c)

    def maxexp(self) -> int:
        if not self.c:
            raise MaxExpOfZero("maxexp of the zero polynomial")
        return max(self.c)

    def is_bar_invariant(self) -> bool:
        return all(self.c.get(-e, 0) == v for e, v in self.c.items())

    def has_constant_parity(self, parity: int) -> bool:
        return all(e % 2 == parity % 2 for e in self.c)

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other: Union[LaurentPoly, int]) -> LaurentPoly:
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly({0: other})
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other: Union[LaurentPoly, int]) -> LaurentPoly:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        out = dict(self.c)
        for e, v in o.c.items():
            out[e] = out.get(e, 0) + v
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly({e: -v for e, v in self.c.items()})

    def __sub__(self, other: Union[LaurentPoly, int]) -> LaurentPoly:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: int) -> LaurentPoly:
        return (-self) + other

    def __mul__(self, other: Union[LaurentPoly, int]) -> LaurentPoly:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        out: dict[int, int] = {}
        for e1, v1 in self.c.items():
            for e2, v2 in o.c.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + v1 * v2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPoly:
        if n < 0:
            raise ValueError("negative powers of Laurent polynomials are not defined here")
        out = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def bar(self) -> LaurentPoly:
        """Substitute v -> v^-1."""
        return LaurentPoly({-e: v for e, v in self.c.items()})

    def shifted(self, k: int) -> LaurentPoly:
        return LaurentPoly({e + k: v for e, v in self.c.items()})

    def eval_at_one(self) -> int:
        return sum(self.c.values())

    # -- protocol ----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self.c == ({0: other} if other else {})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.c == other.c

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(sorted(self.c.items())))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self.c)

    def pairs(self) -> list[list[int]]:
        """Serialized form: sorted [exponent, coefficient] pairs."""
        return [[e, self.c[e]] for e in sorted(self.c)]

    def __str__(self) -> str:
        if not self.c:
            return "0"
        chunks = []
        for e in sorted(self.c):
            v = self.c[e]
            if e == 0:
                term = str(abs(v))
            else:
                vpart = "v" if e == 1 else f"v^{e}"
                term = vpart if abs(v) == 1 else f"{abs(v)}*{vpart}"
            sign = "-" if v < 0 else "+"
            chunks.append((sign, term))
        first_sign, first_term = chunks[0]
        text = ("-" if first_sign == "-" else "") + first_term
        for sign, term in chunks[1:]:
            text += f" {sign} {term}"
        return text

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"


V = LaurentPoly.monomial(1)
V_INV = LaurentPoly.monomial(-1)
GRADED_TWO = V + V_INV  # decategorified B_i circle value: v + v^-1
