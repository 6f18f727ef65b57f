"""Descriptor-driven partially ordered groups.

A :class:`GroupDescriptor` is a composition tree built from four primitives
and two combinators:

* ``Scalar(H)``        -- a linearly ordered scalar subgroup of the reals,
* ``IntVector(k)``     -- Z^k with the componentwise order,
* ``AffineQ``          -- pairs (a, b), a a positive rational, b rational,
                          composed by (a,b)+(c,e) = (a*c, a*e+b); linearly
                          ordered by the cone {a > 1} or {a = 1, b > 0},
* ``Lex(top, bottom)`` -- the lexicographic product (top must be linear),
* ``Product(l, r)``    -- the direct product with componentwise order.

Elements are plain Python values mirroring the tree: Fractions or quadratic
numbers for scalars, int tuples for ``IntVector``, pairs of Fractions for
``AffineQ`` and 2-tuples for the combinators.  All groups are written
additively, including the non-commutative ``AffineQ``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import PreconditionError, ShapeError, UnsupportedError
from .scalars import (
    Ordering,
    QuadraticNumber,
    ScalarSubgroup,
    SubgroupKind,
    compare,
    format_scalar,
    pick_strictly_between,
)


class GroupDescriptor:
    """Base class; concrete descriptors below."""

    def __str__(self):
        return describe(self)


@dataclass(frozen=True)
class Scalar(GroupDescriptor):
    H: ScalarSubgroup


@dataclass(frozen=True)
class IntVector(GroupDescriptor):
    k: int

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("IntVector needs k >= 1")


@dataclass(frozen=True)
class AffineQ(GroupDescriptor):
    pass


@dataclass(frozen=True)
class Lex(GroupDescriptor):
    top: GroupDescriptor
    bottom: GroupDescriptor

    def __post_init__(self):
        if not is_linearly_ordered(self.top):
            raise PreconditionError("lex head must be linearly ordered")


@dataclass(frozen=True)
class Product(GroupDescriptor):
    left: GroupDescriptor
    right: GroupDescriptor


ZZ = Scalar(ScalarSubgroup.cyclic(1))
QQ = Scalar(ScalarSubgroup.rationals())


def describe(desc: GroupDescriptor) -> str:
    if isinstance(desc, Scalar):
        H = desc.H
        if H.kind is SubgroupKind.CYCLIC:
            return "Z" if H.n == 1 else f"Z/{H.n}"
        return str(H)
    if isinstance(desc, IntVector):
        return f"Z^{desc.k}"
    if isinstance(desc, AffineQ):
        return "Aff"
    if isinstance(desc, Lex):
        return f"lex({describe(desc.top)}, {describe(desc.bottom)})"
    if isinstance(desc, Product):
        return f"prod({describe(desc.left)}, {describe(desc.right)})"
    raise ShapeError(f"unknown descriptor {desc!r}")


# ---------------------------------------------------------------------------
# structural predicates


def is_abelian(desc) -> bool:
    if isinstance(desc, (Scalar, IntVector)):
        return True
    if isinstance(desc, AffineQ):
        return False
    if isinstance(desc, Lex):
        return is_abelian(desc.top) and is_abelian(desc.bottom)
    if isinstance(desc, Product):
        return is_abelian(desc.left) and is_abelian(desc.right)
    raise ShapeError(f"unknown descriptor {desc!r}")


def is_linearly_ordered(desc) -> bool:
    if isinstance(desc, Scalar) or isinstance(desc, AffineQ):
        return True
    if isinstance(desc, IntVector):
        return desc.k == 1
    if isinstance(desc, Lex):
        return is_linearly_ordered(desc.bottom)  # the head is linear already
    if isinstance(desc, Product):
        return False
    raise ShapeError(f"unknown descriptor {desc!r}")


def is_lattice(desc) -> bool:
    if isinstance(desc, (Scalar, IntVector, AffineQ)):
        return True
    if isinstance(desc, Lex):
        return is_lattice(desc.bottom)
    if isinstance(desc, Product):
        return is_lattice(desc.left) and is_lattice(desc.right)
    raise ShapeError(f"unknown descriptor {desc!r}")


def is_directed(desc) -> bool:
    if isinstance(desc, (Scalar, IntVector, AffineQ)):
        return True
    if isinstance(desc, Lex):
        return True  # linear head: (min head - delta, 0) bounds any pair below
    if isinstance(desc, Product):
        return is_directed(desc.left) and is_directed(desc.right)
    raise ShapeError(f"unknown descriptor {desc!r}")


def is_torsion_free(desc) -> bool:
    if isinstance(desc, (Scalar, IntVector, AffineQ)):
        return True
    if isinstance(desc, Lex):
        return is_torsion_free(desc.top) and is_torsion_free(desc.bottom)
    if isinstance(desc, Product):
        return is_torsion_free(desc.left) and is_torsion_free(desc.right)
    raise ShapeError(f"unknown descriptor {desc!r}")


def is_scalar_discrete(desc) -> bool:
    return isinstance(desc, Scalar) and not desc.H.is_dense


# ---------------------------------------------------------------------------
# element shape and arithmetic


def check_element(desc, x):
    """Validate that x is shaped per desc; returns the canonical value."""
    if isinstance(desc, Scalar):
        try:
            return desc.H.coerce(x)
        except (TypeError, ValueError):
            raise ShapeError(f"{x!r} is not a scalar of {desc}")
    if isinstance(desc, IntVector):
        if isinstance(x, int):
            x = (x,)
        if not (isinstance(x, tuple) and len(x) == desc.k and all(isinstance(v, int) for v in x)):
            raise ShapeError(f"{x!r} is not an integer {desc.k}-vector")
        return x
    if isinstance(desc, AffineQ):
        if not (isinstance(x, tuple) and len(x) == 2):
            raise ShapeError(f"{x!r} is not an affine pair")
        a, b = Fraction(x[0]), Fraction(x[1])
        if a <= 0:
            raise ShapeError(f"affine pair needs a positive first component, got {a}")
        return (a, b)
    if isinstance(desc, Lex):
        if not (isinstance(x, tuple) and len(x) == 2):
            raise ShapeError(f"{x!r} is not a lex pair")
        return (check_element(desc.top, x[0]), check_element(desc.bottom, x[1]))
    if isinstance(desc, Product):
        if not (isinstance(x, tuple) and len(x) == 2):
            raise ShapeError(f"{x!r} is not a product pair")
        return (check_element(desc.left, x[0]), check_element(desc.right, x[1]))
    raise ShapeError(f"unknown descriptor {desc!r}")


def zero(desc):
    if isinstance(desc, Scalar):
        return desc.H.zero()
    if isinstance(desc, IntVector):
        return (0,) * desc.k
    if isinstance(desc, AffineQ):
        return (Fraction(1), Fraction(0))
    if isinstance(desc, Lex):
        return (zero(desc.top), zero(desc.bottom))
    if isinstance(desc, Product):
        return (zero(desc.left), zero(desc.right))
    raise ShapeError(f"unknown descriptor {desc!r}")


def add(desc, x, y):
    if isinstance(desc, Scalar):
        return x + y
    if isinstance(desc, IntVector):
        return tuple(u + v for u, v in zip(x, y))
    if isinstance(desc, AffineQ):
        (a, b), (c, e) = x, y
        return (a * c, a * e + b)
    if isinstance(desc, Lex):
        return (add(desc.top, x[0], y[0]), add(desc.bottom, x[1], y[1]))
    if isinstance(desc, Product):
        return (add(desc.left, x[0], y[0]), add(desc.right, x[1], y[1]))
    raise ShapeError(f"unknown descriptor {desc!r}")


def neg(desc, x):
    if isinstance(desc, Scalar):
        return -x
    if isinstance(desc, IntVector):
        return tuple(-v for v in x)
    if isinstance(desc, AffineQ):
        a, b = x
        return (1 / a, -b / a)
    if isinstance(desc, Lex):
        return (neg(desc.top, x[0]), neg(desc.bottom, x[1]))
    if isinstance(desc, Product):
        return (neg(desc.left, x[0]), neg(desc.right, x[1]))
    raise ShapeError(f"unknown descriptor {desc!r}")


def sub_right(desc, x, y):
    """x - y, i.e. x + (-y)."""
    return add(desc, x, neg(desc, y))


def sub_left(desc, y, x):
    """-y + x."""
    return add(desc, neg(desc, y), x)


def g_op(desc, op: str, *args):
    """Thin dispatcher used by the CLI: op in {add, neg, zero}."""
    args = [check_element(desc, a) for a in args]
    if op == "add":
        return add(desc, *args)
    if op == "neg":
        return neg(desc, *args)
    if op == "zero":
        return zero(desc)
    raise UnsupportedError(f"unknown group op {op!r}")


def scale(desc, x, n: int):
    """n-fold sum of x (n may be negative)."""
    if n < 0:
        return neg(desc, scale(desc, x, -n))
    acc = zero(desc)
    for _ in range(n):
        acc = add(desc, acc, x)
    return acc


def divide(desc, x, n: int):
    """The unique y with n*y = x, or None when x is not n-divisible."""
    if n < 1:
        raise PreconditionError("divisor must be >= 1")
    if n == 1:
        return x
    if isinstance(desc, Scalar):
        if isinstance(x, QuadraticNumber):
            y = QuadraticNumber(x.a / n, x.b / n, x.d)
        else:
            y = Fraction(x) / n
        return y if desc.H.contains(y) else None
    if isinstance(desc, IntVector):
        if all(v % n == 0 for v in x):
            return tuple(v // n for v in x)
        return None
    if isinstance(desc, AffineQ):
        a, b = x
        c = _rational_nth_root(a, n)
        if c is None:
            return None
        s = sum(c**i for i in range(n))  # 1 + c + ... + c^(n-1)
        return (c, b / s)
    if isinstance(desc, Lex):
        t = divide(desc.top, x[0], n)
        g = divide(desc.bottom, x[1], n)
        return None if t is None or g is None else (t, g)
    if isinstance(desc, Product):
        left = divide(desc.left, x[0], n)
        right = divide(desc.right, x[1], n)
        return None if left is None or right is None else (left, right)
    raise ShapeError(f"unknown descriptor {desc!r}")


def _rational_nth_root(q: Fraction, n: int):
    """Exact positive n-th root of a positive rational, or None."""
    q = Fraction(q)
    if q <= 0:
        return None

    def iroot(m: int):
        if m == 0:
            return 0
        r = round(m ** (1.0 / n))
        for c in (r - 1, r, r + 1):
            if c >= 0 and c**n == m:
                return c
        return None

    p, d = iroot(q.numerator), iroot(q.denominator)
    if p is None or d is None:
        return None
    return Fraction(p, d)


# ---------------------------------------------------------------------------
# order


def leq(desc, x, y) -> bool:
    if isinstance(desc, Scalar):
        return compare(x, y) is not Ordering.GT
    if isinstance(desc, IntVector):
        return all(u <= v for u, v in zip(x, y))
    if isinstance(desc, AffineQ):
        a, b = add(desc, y, neg(desc, x))  # y - x in the positive cone?
        return a > 1 or (a == 1 and b >= 0)
    if isinstance(desc, Lex):
        c = _linear_compare(desc.top, x[0], y[0])
        if c is Ordering.LT:
            return True
        if c is Ordering.GT:
            return False
        return leq(desc.bottom, x[1], y[1])
    if isinstance(desc, Product):
        return leq(desc.left, x[0], y[0]) and leq(desc.right, x[1], y[1])
    raise ShapeError(f"unknown descriptor {desc!r}")


def _linear_compare(desc, x, y) -> Ordering:
    """Total-order comparison; only valid on linearly ordered descriptors."""
    if isinstance(desc, Scalar):
        return compare(x, y)
    if x == y:
        return Ordering.EQ
    return Ordering.LT if leq(desc, x, y) else Ordering.GT


def lt(desc, x, y) -> bool:
    return x != y and leq(desc, x, y)


def positive_cone_member(desc, x) -> bool:
    return leq(desc, zero(desc), x)


def meet(desc, x, y):
    """Lattice meet; every supported descriptor is a lattice."""
    if is_linearly_ordered(desc):
        return x if leq(desc, x, y) else y
    if isinstance(desc, IntVector):
        return tuple(min(u, v) for u, v in zip(x, y))
    if isinstance(desc, Lex):
        c = _linear_compare(desc.top, x[0], y[0])
        if c is Ordering.LT:
            return x
        if c is Ordering.GT:
            return y
        return (x[0], meet(desc.bottom, x[1], y[1]))
    if isinstance(desc, Product):
        return (meet(desc.left, x[0], y[0]), meet(desc.right, x[1], y[1]))
    raise UnsupportedError(f"no meet on {desc}")


def join(desc, x, y):
    return neg(desc, meet(desc, neg(desc, x), neg(desc, y)))


def a_positive_element(desc):
    """A fixed strictly positive element of a linearly ordered descriptor."""
    if isinstance(desc, Scalar):
        H = desc.H
        if H.is_dense:
            return pick_strictly_between(H, H.zero(), H.one())
        return Fraction(1)
    if isinstance(desc, AffineQ):
        return (Fraction(2), Fraction(0))
    if isinstance(desc, IntVector) and desc.k == 1:
        return (1,)
    if isinstance(desc, Lex):
        return (a_positive_element(desc.top), zero(desc.bottom))
    raise UnsupportedError(f"{desc} is not linearly ordered")


def lower_bound(desc, xs):
    """A deterministic element below every member of xs (desc must be directed).

    Lattices return the meet.  For lex pairs whose heads differ (or whose
    bottom is not directed) the bound is (min head - delta, 0) with delta = 1
    for discrete scalar heads and a fixed positive element otherwise.
    """
    if not xs:
        raise PreconditionError("lower_bound of an empty list")
    xs = [check_element(desc, x) for x in xs]
    if not is_directed(desc):
        raise UnsupportedError(f"{desc} is not directed")
    if isinstance(desc, Lex):
        heads = [x[0] for x in xs]
        head_min = heads[0]
        for h in heads[1:]:
            if _linear_compare(desc.top, h, head_min) is Ordering.LT:
                head_min = h
        if all(h == head_min for h in heads) and is_directed(desc.bottom):
            return (head_min, lower_bound(desc.bottom, [x[1] for x in xs]))
        if is_scalar_discrete(desc.top):
            delta = Fraction(1)
        else:
            delta = a_positive_element(desc.top)
        return (add(desc.top, head_min, neg(desc.top, delta)), zero(desc.bottom))
    if is_lattice(desc):
        out = xs[0]
        for x in xs[1:]:
            out = meet(desc, out, x)
        return out
    if isinstance(desc, Product):
        return (
            lower_bound(desc.left, [x[0] for x in xs]),
            lower_bound(desc.right, [x[1] for x in xs]),
        )
    raise UnsupportedError(f"no lower_bound rule for {desc}")


def upper_bound(desc, xs):
    return neg(desc, lower_bound(desc, [neg(desc, x) for x in xs]))


# ---------------------------------------------------------------------------
# commutation


def center_member(desc, x) -> bool:
    """Structural membership in the commutative center."""
    if is_abelian(desc):
        return True
    if isinstance(desc, AffineQ):
        return x == (Fraction(1), Fraction(0))
    if isinstance(desc, Lex):
        return center_member(desc.top, x[0]) and center_member(desc.bottom, x[1])
    if isinstance(desc, Product):
        return center_member(desc.left, x[0]) and center_member(desc.right, x[1])
    raise ShapeError(f"unknown descriptor {desc!r}")


def interval_is_finite(desc, hi) -> bool:
    """Whether the order interval [0, hi] has finitely many elements."""
    if isinstance(desc, Scalar):
        return not desc.H.is_dense or compare(hi, desc.H.zero()) is Ordering.EQ
    if isinstance(desc, IntVector):
        return True
    if isinstance(desc, AffineQ):
        return hi == zero(desc)
    if isinstance(desc, Lex):
        if compare_is_zero(desc.top, hi[0]):
            return interval_is_finite(desc.bottom, hi[1])
        return False  # a strictly positive head lets all of {0} x bottom+ below
    if isinstance(desc, Product):
        return interval_is_finite(desc.left, hi[0]) and interval_is_finite(desc.right, hi[1])
    raise ShapeError(f"unknown descriptor {desc!r}")


def compare_is_zero(desc, x) -> bool:
    return x == zero(desc)


def enumerate_interval(desc, hi):
    """All elements of [0, hi]; only valid when interval_is_finite holds."""
    if isinstance(desc, Scalar):
        H = desc.H
        if compare(hi, H.zero()) is Ordering.EQ:
            return [H.zero()]
        if H.is_dense:
            raise UnsupportedError(f"infinite interval in {desc}")
        top = Fraction(hi) * H.n
        return [Fraction(k, H.n) for k in range(int(top) + 1)]
    if isinstance(desc, IntVector):
        out = [()]
        for v in hi:
            if v < 0:
                return []
            out = [t + (w,) for t in out for w in range(v + 1)]
        return out
    if isinstance(desc, AffineQ):
        if hi == zero(desc):
            return [zero(desc)]
        raise UnsupportedError("infinite interval in Aff")
    if isinstance(desc, Lex):
        if not compare_is_zero(desc.top, hi[0]):
            raise UnsupportedError("infinite lex interval")
        return [(hi[0], g) for g in enumerate_interval(desc.bottom, hi[1])]
    if isinstance(desc, Product):
        return [
            (l, r)
            for l in enumerate_interval(desc.left, hi[0])
            for r in enumerate_interval(desc.right, hi[1])
        ]
    raise ShapeError(f"unknown descriptor {desc!r}")


@dataclass(frozen=True)
class ComResult:
    status: str  # "holds", "fails", "inconclusive"
    witness: tuple | None = None
    exhaustive: bool = False

    @property
    def holds(self):
        return self.status == "holds"


def com_check(desc, a, b, budget: int = 200, rng=None) -> ComResult:
    """Do all x in [0,a] and y in [0,b] commute?

    Abelian descriptors and zero endpoints answer immediately; finite
    intervals are enumerated exhaustively; otherwise pairs are sampled up to
    the budget and the answer is a witness or "inconclusive".
    """
    a = check_element(desc, a)
    b = check_element(desc, b)
    if not positive_cone_member(desc, a) or not positive_cone_member(desc, b):
        raise PreconditionError("com_check needs positive endpoints")
    if is_abelian(desc):
        return ComResult("holds", exhaustive=True)
    if a == zero(desc) or b == zero(desc):
        return ComResult("holds", exhaustive=True)
    if interval_is_finite(desc, a) and interval_is_finite(desc, b):
        for x in enumerate_interval(desc, a):
            for y in enumerate_interval(desc, b):
                if add(desc, x, y) != add(desc, y, x):
                    return ComResult("fails", witness=(x, y), exhaustive=True)
        return ComResult("holds", exhaustive=True)
    from .sampling import sample_interval  # local import to avoid a cycle

    rng = rng or random.Random(0)
    if add(desc, a, b) != add(desc, b, a):
        return ComResult("fails", witness=(a, b))
    for _ in range(budget):
        x = sample_interval(desc, a, rng)
        y = sample_interval(desc, b, rng)
        if add(desc, x, y) != add(desc, y, x):
            return ComResult("fails", witness=(x, y))
    return ComResult("inconclusive")


# ---------------------------------------------------------------------------
# unital po-groups


def is_strong_unit(desc, u) -> bool:
    """Whether positive u bounds every element up to a multiple."""
    if not positive_cone_member(desc, u):
        return False
    if isinstance(desc, Scalar):
        return compare(u, desc.H.zero()) is Ordering.GT
    if isinstance(desc, IntVector):
        return all(v >= 1 for v in u)
    if isinstance(desc, AffineQ):
        return u[0] > 1
    if isinstance(desc, Lex):
        # multiples of a head strong unit eventually strictly dominate any head
        return is_strong_unit(desc.top, u[0])
    if isinstance(desc, Product):
        return is_strong_unit(desc.left, u[0]) and is_strong_unit(desc.right, u[1])
    raise ShapeError(f"unknown descriptor {desc!r}")


@dataclass(frozen=True)
class UnitalPoGroup:
    group: GroupDescriptor
    unit: object

    def __post_init__(self):
        u = check_element(self.group, self.unit)
        object.__setattr__(self, "unit", u)
        if not is_strong_unit(self.group, u):
            raise PreconditionError(f"{format_element(self.group, u)} is not a strong unit")


def format_element(desc, x) -> str:
    if isinstance(desc, Scalar):
        return format_scalar(x)
    if isinstance(desc, IntVector):
        return "(" + ", ".join(str(v) for v in x) + ")"
    if isinstance(desc, AffineQ):
        return f"({x[0]}, {x[1]})"
    if isinstance(desc, Lex):
        return f"({format_element(desc.top, x[0])}, {format_element(desc.bottom, x[1])})"
    if isinstance(desc, Product):
        return f"({format_element(desc.left, x[0])}, {format_element(desc.right, x[1])})"
    raise ShapeError(f"unknown descriptor {desc!r}")
