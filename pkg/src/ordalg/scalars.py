"""Exact scalar subgroups of the real line.

Three kinds of subgroups containing 1 are supported: the cyclic groups
(1/n)Z, the full rationals Q, and the quadratic groups Z + Z*sqrt(d) for a
square-free d >= 2.  Rational values are plain ``fractions.Fraction``;
quadratic values are :class:`QuadraticNumber`.  Every order decision is made
exactly; no floating point is used anywhere.
"""

from __future__ import annotations

import enum
import functools
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainMismatchError, NoElementError, PreconditionError

Rational = Fraction


class Ordering(enum.IntEnum):
    LT = -1
    EQ = 0
    GT = 1


def _is_square_free(d: int) -> bool:
    if d < 1:
        return False
    k = 2
    while k * k <= d:
        if d % (k * k) == 0:
            return False
        k += 1
    return True


@dataclass(frozen=True)
class QuadraticNumber:
    """Exact value a + b*sqrt(d) with rational a, b and a fixed non-square d."""

    a: Fraction
    b: Fraction
    d: int

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))
        if self.d < 2 or math.isqrt(self.d) ** 2 == self.d:
            raise ValueError(f"d must be a non-square integer >= 2, got {self.d}")
        if not _is_square_free(self.d):
            raise ValueError(f"d must be square-free, got {self.d}")

    def _check(self, other: "QuadraticNumber") -> "QuadraticNumber":
        if isinstance(other, (int, Fraction)):
            other = QuadraticNumber(Fraction(other), Fraction(0), self.d)
        if not isinstance(other, QuadraticNumber) or other.d != self.d:
            raise DomainMismatchError(f"mixed operands: sqrt({self.d}) vs {other!r}")
        return other

    def __add__(self, other):
        other = self._check(other)
        return QuadraticNumber(self.a + other.a, self.b + other.b, self.d)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._check(other)
        return QuadraticNumber(self.a - other.a, self.b - other.b, self.d)

    def __neg__(self):
        return QuadraticNumber(-self.a, -self.b, self.d)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return QuadraticNumber(self.a * q, self.b * q, self.d)
        other = self._check(other)
        return QuadraticNumber(
            self.a * other.a + self.b * other.b * self.d,
            self.a * other.b + self.b * other.a,
            self.d,
        )

    __rmul__ = __mul__

    def sign(self) -> int:
        """Sign of a + b*sqrt(d), decided by exact case analysis on a and b."""
        a, b = self.a, self.b
        if b == 0:
            return 0 if a == 0 else (1 if a > 0 else -1)
        if a == 0:
            return 1 if b > 0 else -1
        if a > 0 and b > 0:
            return 1
        if a < 0 and b < 0:
            return -1
        # opposite signs: compare a^2 with b^2*d (equality impossible, d non-square)
        lhs, rhs = a * a, b * b * self.d
        assert lhs != rhs, "sqrt(d) cannot be rational"
        if a > 0:  # b < 0
            return 1 if lhs > rhs else -1
        return 1 if rhs > lhs else -1  # a < 0, b > 0

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def __lt__(self, other):
        return (self - self._check(other)).sign() < 0

    def __le__(self, other):
        return (self - self._check(other)).sign() <= 0

    def __gt__(self, other):
        return (self - self._check(other)).sign() > 0

    def __ge__(self, other):
        return (self - self._check(other)).sign() >= 0

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        return f"{self.a} + {self.b}*sqrt({self.d})"

    def floor(self) -> int:
        """Exact integer floor, found by bracketing and bisection with exact compares."""
        bound = abs(self.a) + abs(self.b) * (math.isqrt(self.d) + 1) + 1
        lo = -(int(bound.numerator // bound.denominator) + 2)
        hi = -lo
        # invariant: lo <= self < hi
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if (self - QuadraticNumber(Fraction(mid), Fraction(0), self.d)).sign() >= 0:
                lo = mid
            else:
                hi = mid
        return lo


class SubgroupKind(enum.Enum):
    CYCLIC = "cyclic"
    FULL_Q = "rationals"
    QUADRATIC = "quadratic"


@dataclass(frozen=True)
class ScalarSubgroup:
    """A computable subgroup of the reals containing 1."""

    kind: SubgroupKind
    n: int = 1  # cyclic order for CYCLIC: the group (1/n)Z
    d: int = 0  # radicand for QUADRATIC: the group Z + Z*sqrt(d)

    @staticmethod
    def cyclic(n: int) -> "ScalarSubgroup":
        if n < 1:
            raise ValueError("cyclic order must be >= 1")
        return ScalarSubgroup(SubgroupKind.CYCLIC, n=n)

    @staticmethod
    def rationals() -> "ScalarSubgroup":
        return ScalarSubgroup(SubgroupKind.FULL_Q)

    @staticmethod
    def quadratic(d: int) -> "ScalarSubgroup":
        QuadraticNumber(0, 0, d)  # validates d
        return ScalarSubgroup(SubgroupKind.QUADRATIC, d=d)

    @property
    def is_dense(self) -> bool:
        return self.kind is not SubgroupKind.CYCLIC

    def zero(self):
        if self.kind is SubgroupKind.QUADRATIC:
            return QuadraticNumber(0, 0, self.d)
        return Fraction(0)

    def one(self):
        if self.kind is SubgroupKind.QUADRATIC:
            return QuadraticNumber(1, 0, self.d)
        return Fraction(1)

    def coerce(self, x):
        """Convert ints/Fractions to this subgroup's value type (no membership check)."""
        if self.kind is SubgroupKind.QUADRATIC:
            if isinstance(x, QuadraticNumber):
                if x.d != self.d:
                    raise DomainMismatchError(f"sqrt({x.d}) value in Q[sqrt {self.d}]")
                return x
            return QuadraticNumber(Fraction(x), Fraction(0), self.d)
        if isinstance(x, QuadraticNumber):
            if x.b == 0:
                return Fraction(x.a)
            raise DomainMismatchError(f"quadratic value in {self}")
        return Fraction(x)

    def contains(self, x) -> bool:
        if isinstance(x, QuadraticNumber) and x.b == 0:
            x = x.a
        if self.kind is SubgroupKind.QUADRATIC:
            if not isinstance(x, QuadraticNumber):
                return isinstance(x, (int, Fraction)) and Fraction(x).denominator == 1
            if x.d != self.d:
                return False
            return x.a.denominator == 1 and x.b.denominator == 1
        if isinstance(x, QuadraticNumber):
            return False
        x = Fraction(x)
        if self.kind is SubgroupKind.FULL_Q:
            return True
        return (x * self.n).denominator == 1

    def __str__(self):
        if self.kind is SubgroupKind.CYCLIC:
            return f"Z/{self.n}"
        if self.kind is SubgroupKind.FULL_Q:
            return "Q"
        return f"Q[sqrt {self.d}]"


def _same_domain(H: ScalarSubgroup, *xs):
    for x in xs:
        if not H.contains(x):
            raise DomainMismatchError(f"{x} is not a member of {H}")


def compare(x, y) -> Ordering:
    """Exact order of two values of the same scalar domain."""
    if isinstance(x, QuadraticNumber) or isinstance(y, QuadraticNumber):
        if not isinstance(x, QuadraticNumber):
            x = QuadraticNumber(Fraction(x), Fraction(0), y.d)
        s = (x - y).sign()
    else:
        diff = Fraction(x) - Fraction(y)
        s = 0 if diff == 0 else (1 if diff > 0 else -1)
    return Ordering(s)


def classify(H: ScalarSubgroup):
    """Return ("cyclic", n) for (1/n)Z and ("dense", None) otherwise."""
    if H.kind is SubgroupKind.CYCLIC:
        return ("cyclic", H.n)
    return ("dense", None)


def simplest_between(lo: Fraction, hi: Fraction) -> Fraction:
    """The smallest-denominator rational in the open interval (lo, hi).

    Among the integers (denominator 1) the one closest to zero is chosen;
    for every denominator >= 2 the minimal-denominator fraction is unique.
    """
    lo, hi = Fraction(lo), Fraction(hi)
    if not lo < hi:
        raise PreconditionError(f"empty open interval ({lo}, {hi})")
    if lo < 0 < hi:
        return Fraction(0)
    if hi <= 0:
        return -_simplest_nonneg(-hi, -lo)
    return _simplest_nonneg(lo, hi)


def _simplest_nonneg(lo: Fraction, hi: Fraction) -> Fraction:
    # 0 <= lo < hi; Stern-Brocot / continued-fraction descent
    fl = lo.numerator // lo.denominator
    if fl + 1 < hi:
        return Fraction(fl + 1)
    lo2, hi2 = lo - fl, hi - fl  # 0 <= lo2 < hi2 <= 1
    if lo2 == 0:
        k = hi2.denominator // hi2.numerator + 1  # least integer > 1/hi2
        return fl + Fraction(1, k)
    return fl + 1 / _simplest_nonneg(1 / hi2, 1 / lo2)


def _int_range_between(lo, hi):
    """Inclusive range of integers m with lo < m < hi, exact endpoints."""
    if isinstance(lo, QuadraticNumber):
        m_lo = lo.floor() + 1
    else:
        m_lo = Fraction(lo).numerator // Fraction(lo).denominator + 1
    if isinstance(hi, QuadraticNumber):
        m_hi = -((-hi).floor()) - 1  # ceil(hi) - 1
    else:
        h = Fraction(hi)
        m_hi = -((-h).numerator // h.denominator) - 1
    return m_lo, m_hi


def _smallest_abs_int(m_lo: int, m_hi: int):
    """Integer of least absolute value in [m_lo, m_hi], or None if empty."""
    if m_lo > m_hi:
        return None
    if m_lo <= 0 <= m_hi:
        return 0
    return m_lo if m_lo > 0 else m_hi


def pick_strictly_between(H: ScalarSubgroup, lo, hi):
    """A deterministic element t of H with lo < t < hi.

    FullQ uses the smallest-denominator rule; cyclic groups take the leftmost
    grid point; quadratic groups try integers first, then m + k*(sqrt(d) -
    floor(sqrt(d))) with smallest k >= 1 and then smallest |m|.
    """
    lo, hi = H.coerce(lo), H.coerce(hi)
    if compare(lo, hi) is not Ordering.LT:
        raise PreconditionError(f"empty open interval ({lo}, {hi})")
    if H.kind is SubgroupKind.FULL_Q:
        return simplest_between(lo, hi)
    if H.kind is SubgroupKind.CYCLIC:
        n = H.n
        k = (lo * n).numerator // (lo * n).denominator + 1  # least k with k/n > lo
        t = Fraction(k, n)
        if t < hi:
            return t
        raise NoElementError(f"no point of (1/{n})Z inside ({lo}, {hi})")
    # quadratic: integers first
    m_lo, m_hi = _int_range_between(lo, hi)
    m = _smallest_abs_int(m_lo, m_hi)
    if m is not None:
        return QuadraticNumber(Fraction(m), Fraction(0), H.d)
    beta = QuadraticNumber(Fraction(-math.isqrt(H.d)), Fraction(1), H.d)  # sqrt(d) - floor
    k = 1
    while True:
        kb = beta * k
        m_lo, m_hi = _int_range_between(lo - kb, hi - kb)
        m = _smallest_abs_int(m_lo, m_hi)
        if m is not None:
            return QuadraticNumber(Fraction(m - k * math.isqrt(H.d)), Fraction(k), H.d)
        k += 1


def floor_multiple_below(x, step) -> int:
    """Largest k >= 0 with k*step < x, for exact positive scalars."""
    lo, hi = 0, 1
    while compare(step * hi, x) is Ordering.LT:
        hi *= 2
    # invariant: lo*step < x <= hi*step
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if compare(step * mid, x) is Ordering.LT:
            lo = mid
        else:
            hi = mid
    return lo


def grid_points(H: ScalarSubgroup, max_den: int = 6, coeff_bound: int = 4):
    """A sorted finite witness grid of [0,1] in H.

    Cyclic groups yield the full grid k/n; FullQ yields all fractions with
    denominator <= max_den; quadratic groups yield all m + k*sqrt(d) in [0,1]
    with |k| <= coeff_bound.
    """
    zero, one = H.zero(), H.one()
    if H.kind is SubgroupKind.CYCLIC:
        return [Fraction(k, H.n) for k in range(H.n + 1)]
    if H.kind is SubgroupKind.FULL_Q:
        pts = {Fraction(p, q) for q in range(1, max_den + 1) for p in range(q + 1)}
        return sorted(pts)
    pts = []
    for k in range(-coeff_bound, coeff_bound + 1):
        kb = QuadraticNumber(Fraction(0), Fraction(k), H.d)
        m_lo = (zero - kb).floor()
        m_hi = (one - kb).floor() + 1
        for m in range(m_lo, m_hi + 1):
            x = QuadraticNumber(Fraction(m), Fraction(k), H.d)
            if (x - zero).sign() >= 0 and (x - one).sign() <= 0:
                pts.append(x)
    pts.sort(key=functools.cmp_to_key(lambda u, v: (u - v).sign()))
    out = []
    for p in pts:
        if not out or (p - out[-1]).sign() != 0:
            out.append(p)
    return out


def format_scalar(x) -> str:
    if isinstance(x, QuadraticNumber):
        return str(x)
    return str(Fraction(x))
