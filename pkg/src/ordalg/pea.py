"""Pseudo effect algebras: finite tables and unit intervals of po-groups.

A finite algebra is a partial addition table over elements 0..n-1 with
designated zero and one; :func:`check_pea_axioms` verifies the four defining
axioms exhaustively and returns a witness on failure.  An interval algebra
is the segment [0, u] of a unital po-group with addition defined whenever
the group sum stays below the unit; its elements are never enumerated, all
queries go through exact group arithmetic.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from . import groups as g
from .errors import PreconditionError, UnsupportedError
from .sampling import sample_interval
from .scalars import Ordering, ScalarSubgroup, compare

MAX_FINITE_SIZE = 64


@dataclass(frozen=True)
class AxiomFailure:
    axiom: str  # "PE1".."PE4" or a table sanity tag
    witness: tuple

    def __str__(self):
        return f"{self.axiom} fails at {self.witness}"


class FinitePea:
    """A finite pseudo effect algebra; construct via :func:`check_pea_axioms`."""

    def __init__(self, size, zero, one, table, _validated=False):
        self.size = size
        self.zero = zero
        self.one = one
        self.table = table  # dict (i, j) -> k for defined sums
        if not _validated:
            failure = _axiom_failure(size, zero, one, table)
            if failure is not None:
                raise PreconditionError(str(failure))
        self._leq = self._derive_order()
        self._assert_derived()

    # -- construction helpers ------------------------------------------------

    def elements(self):
        return range(self.size)

    def add(self, a, b):
        return self.table.get((a, b))

    def defined(self, a, b):
        return (a, b) in self.table

    def _derive_order(self):
        rel = [[False] * self.size for _ in range(self.size)]
        for a in self.elements():
            for c in self.elements():
                s = self.add(a, c)
                if s is not None:
                    rel[a][s] = True
        return rel

    def leq(self, a, b):
        return self._leq[a][b]

    def _assert_derived(self):
        # antisymmetry, bounds, cancellativity and the left/right agreement
        # of the derived order all follow from the axioms; assert them.
        for a in self.elements():
            if not self.leq(self.zero, a) or not self.leq(a, self.one):
                raise AssertionError("derived order lost its bounds")
            for b in self.elements():
                if self.leq(a, b) and self.leq(b, a) and a != b:
                    raise AssertionError(f"derived order not antisymmetric at ({a}, {b})")
                right = any(self.add(a, c) == b for c in self.elements())
                left = any(self.add(d, a) == b for d in self.elements())
                if right != left:
                    raise AssertionError(f"left/right order disagree at ({a}, {b})")
        for a, b in itertools.product(self.elements(), repeat=2):
            for c in self.elements():
                if self.add(a, b) is not None and self.add(a, c) == self.add(a, b) and b != c:
                    raise AssertionError(f"left cancellation fails at {a}")
                if self.add(b, a) is not None and self.add(c, a) == self.add(b, a) and b != c:
                    raise AssertionError(f"right cancellation fails at {a}")

    # -- derived operations ----------------------------------------------------

    def minus_right(self, a, b):
        """The c with a + c = b, or None."""
        for c in self.elements():
            if self.add(a, c) == b:
                return c
        return None

    def minus_left(self, b, a):
        """The d with d + a = b, or None."""
        for d in self.elements():
            if self.add(d, a) == b:
                return d
        return None

    def lneg(self, a):
        return self.minus_left(self.one, a)

    def rneg(self, a):
        return self.minus_right(a, self.one)

    def times(self, n, a):
        """n-fold sum, or None when undefined."""
        acc = self.zero
        for _ in range(n):
            acc = self.add(acc, a)
            if acc is None:
                return None
        return acc

    def __repr__(self):
        return f"FinitePea(size={self.size})"


def _axiom_failure(size, zero, one, table):
    els = range(size)
    for (i, j), k in table.items():
        if not (0 <= i < size and 0 <= j < size and 0 <= k < size):
            return AxiomFailure("table", (i, j, k))

    def add(a, b):
        return table.get((a, b))

    # PE1: associativity of definedness and of values
    for a, b, c in itertools.product(els, repeat=3):
        ab = add(a, b)
        left_def = ab is not None and add(ab, c) is not None
        bc = add(b, c)
        right_def = bc is not None and add(a, bc) is not None
        if left_def != right_def:
            return AxiomFailure("PE1", (a, b, c))
        if left_def and add(ab, c) != add(a, bc):
            return AxiomFailure("PE1", (a, b, c))
    # PE2: unique right and left complements to one
    for a in els:
        rights = [d for d in els if add(a, d) == one]
        lefts = [e for e in els if add(e, a) == one]
        if len(rights) != 1 or len(lefts) != 1:
            return AxiomFailure("PE2", (a,))
    # PE3: every defined sum shifts to both sides
    for a, b in itertools.product(els, repeat=2):
        s = add(a, b)
        if s is None:
            continue
        if not any(add(d, a) == s for d in els):
            return AxiomFailure("PE3", (a, b))
        if not any(add(b, e) == s for e in els):
            return AxiomFailure("PE3", (a, b))
    # PE4: one is a forbidden summand except against zero
    for a in els:
        if (add(a, one) is not None or add(one, a) is not None) and a != zero:
            return AxiomFailure("PE4", (a,))
    return None


@dataclass(frozen=True)
class AxiomVerdict:
    valid: bool
    pea: FinitePea | None = None
    failure: AxiomFailure | None = None


def check_pea_axioms(size, zero, one, table) -> AxiomVerdict:
    """Exhaustively verify PE1-PE4 for a partial addition table."""
    if size > MAX_FINITE_SIZE:
        raise UnsupportedError(f"finite algebras are capped at {MAX_FINITE_SIZE} elements")
    if not (0 <= zero < size and 0 <= one < size):
        raise PreconditionError("zero/one designators out of range")
    failure = _axiom_failure(size, zero, one, dict(table))
    if failure is not None:
        return AxiomVerdict(False, failure=failure)
    return AxiomVerdict(True, pea=FinitePea(size, zero, one, dict(table), _validated=True))


# ---------------------------------------------------------------------------
# stock finite algebras


def finite_chain(n: int) -> FinitePea:
    """The chain 0 < 1 < ... < n with k + m defined iff k + m <= n."""
    table = {}
    for i in range(n + 1):
        for j in range(n + 1):
            if i + j <= n:
                table[(i, j)] = i + j
    return FinitePea(n + 1, 0, n, table)


def boolean_algebra(k: int) -> FinitePea:
    """The Boolean algebra 2^k: subsets of {0..k-1}, sums of disjoint sets."""
    table = {}
    for i in range(1 << k):
        for j in range(1 << k):
            if i & j == 0:
                table[(i, j)] = i | j
    return FinitePea(1 << k, 0, (1 << k) - 1, table)


# ---------------------------------------------------------------------------
# interval algebras


class IntervalPea:
    """The interval [0, unit] of a unital po-group."""

    def __init__(self, group: g.GroupDescriptor, unit):
        self.group = group
        self.unit = g.check_element(group, unit)
        if not g.is_strong_unit(group, self.unit):
            raise PreconditionError("interval algebras need a strong unit")

    @property
    def zero(self):
        return g.zero(self.group)

    @property
    def one(self):
        return self.unit

    def contains(self, x):
        return g.leq(self.group, self.zero, x) and g.leq(self.group, x, self.unit)

    def add(self, a, b):
        s = g.add(self.group, a, b)
        return s if g.leq(self.group, s, self.unit) else None

    def defined(self, a, b):
        return self.add(a, b) is not None

    def leq(self, a, b):
        return g.leq(self.group, a, b)

    def lneg(self, a):
        return g.add(self.group, self.unit, g.neg(self.group, a))

    def rneg(self, a):
        return g.add(self.group, g.neg(self.group, a), self.unit)

    def minus_left(self, b, a):
        """d with d + a = b, defined iff a <= b."""
        if not self.leq(a, b):
            return None
        return g.sub_right(self.group, b, a)  # b - a

    def minus_right(self, a, b):
        """c with a + c = b, defined iff a <= b."""
        if not self.leq(a, b):
            return None
        return g.sub_left(self.group, a, b)  # -a + b

    def times(self, n, a):
        acc = self.zero
        for _ in range(n):
            acc = self.add(acc, a)
            if acc is None:
                return None
        return acc

    def sample(self, rng, bound=8):
        return sample_interval(self.group, self.unit, rng, bound)

    # -- lexicographic structure helpers ------------------------------------

    @property
    def is_lex_scalar(self):
        return isinstance(self.group, g.Lex) and isinstance(self.group.top, g.Scalar)

    @property
    def head_subgroup(self) -> ScalarSubgroup:
        if not self.is_lex_scalar:
            raise UnsupportedError("not a scalar-headed lexicographic interval")
        return self.group.top.H

    @property
    def tail_group(self):
        if not self.is_lex_scalar:
            raise UnsupportedError("not a scalar-headed lexicographic interval")
        return self.group.bottom

    @property
    def tail_unit(self):
        """The bottom component g0 of the unit (1, g0)."""
        if not self.is_lex_scalar:
            raise UnsupportedError("not a scalar-headed lexicographic interval")
        return self.unit[1]

    def __repr__(self):
        return f"IntervalPea({g.describe(self.group)}, unit={g.format_element(self.group, self.unit)})"


def interval_chain(n: int) -> IntervalPea:
    """Gamma(Z, n): the (n+1)-element chain as an interval algebra."""
    return IntervalPea(g.ZZ, Fraction(n))


def check_interval_axioms_sampled(E: IntervalPea, rng, rounds=120):
    """Sampled PE1-PE4 probe for interval algebras; returns a witness or None."""
    for _ in range(rounds):
        a, b, c = E.sample(rng), E.sample(rng), E.sample(rng)
        ab = E.add(a, b)
        left = ab is not None and E.add(ab, c) is not None
        bc = E.add(b, c)
        right = bc is not None and E.add(a, bc) is not None
        if left != right:
            return AxiomFailure("PE1", (a, b, c))
        if left and E.add(ab, c) != E.add(a, bc):
            return AxiomFailure("PE1", (a, b, c))
        if E.add(a, E.rneg(a)) != E.one or E.add(E.lneg(a), a) != E.one:
            return AxiomFailure("PE2", (a,))
        if ab is not None:
            d = E.minus_left(ab, a)
            e = E.minus_right(b, ab)
            if d is None or E.add(d, a) != ab:
                return AxiomFailure("PE3", (a, b))
            if e is None or E.add(b, e) != ab:
                return AxiomFailure("PE3", (a, b))
        if a != E.zero and (E.add(a, E.one) is not None or E.add(E.one, a) is not None):
            return AxiomFailure("PE4", (a,))
    return None


# ---------------------------------------------------------------------------
# ideals and radicals (finite)


def _ideal_closure(E: FinitePea, seed):
    members = set(seed) | {E.zero}
    changed = True
    while changed:
        changed = False
        for a in list(members):
            for b in list(members):
                s = E.add(a, b)
                if s is not None and s not in members:
                    members.add(s)
                    changed = True
        for x in E.elements():
            if x in members:
                continue
            if any(E.leq(x, a) for a in members):
                members.add(x)
                changed = True
    return frozenset(members)


def _is_normal_ideal(E: FinitePea, ideal):
    for x in E.elements():
        left = {E.add(x, i) for i in ideal if E.defined(x, i)}
        right = {E.add(j, x) for j in ideal if E.defined(j, x)}
        left.discard(None)
        right.discard(None)
        if left != right:
            return False
    return True


@dataclass(frozen=True)
class IdealInfo:
    members: frozenset
    maximal: bool
    normal: bool


@dataclass(frozen=True)
class IdealsReport:
    ideals: tuple
    radical: frozenset
    normal_radical: frozenset


def ideals_enumerate(E: FinitePea) -> IdealsReport:
    """All ideals by closure growth, with maximality/normality flags."""
    found = {_ideal_closure(E, [])}
    frontier = list(found)
    while frontier:
        base = frontier.pop()
        for x in E.elements():
            if x in base:
                continue
            grown = _ideal_closure(E, set(base) | {x})
            if grown not in found:
                found.add(grown)
                frontier.append(grown)
    all_elements = frozenset(E.elements())
    proper = [i for i in found if i != all_elements]
    maximal = {
        i for i in proper if not any(i < j for j in proper)
    }
    infos = tuple(
        IdealInfo(i, i in maximal, _is_normal_ideal(E, i))
        for i in sorted(found, key=lambda s: (len(s), sorted(s)))
    )
    radical = all_elements
    for i in maximal:
        radical &= i
    normal_radical = all_elements
    for info in infos:
        if info.maximal and info.normal:
            normal_radical &= info.members
    return IdealsReport(infos, frozenset(radical), frozenset(normal_radical))


# ---------------------------------------------------------------------------
# infinitesimals


@dataclass(frozen=True)
class SymbolicInfinitesimals:
    """The slice {(0, g): g >= 0} of a scalar-headed lex interval."""

    pea: IntervalPea

    def contains(self, x) -> bool:
        head, tail = x
        H = self.pea.head_subgroup
        return (
            compare(head, H.zero()) is Ordering.EQ
            and g.positive_cone_member(self.pea.tail_group, tail)
        )

    def __str__(self):
        return "{(0, g): g in G+}"


def infinitesimals(E):
    """All a with na defined for every n: a set for finite E, symbolic for lex."""
    if isinstance(E, FinitePea):
        out = set()
        for a in E.elements():
            acc, ok = E.zero, True
            seen = set()
            for _ in range(E.size + 1):
                acc = E.add(acc, a)
                if acc is None:
                    ok = False
                    break
                if acc in seen:
                    break
                seen.add(acc)
            if ok:
                out.add(a)
        assert out == {E.zero}, "finite cancellative algebras admit only 0"
        return out
    if isinstance(E, IntervalPea) and E.is_lex_scalar:
        return SymbolicInfinitesimals(E)
    raise UnsupportedError("infinitesimals need a finite algebra or a scalar-headed lex interval")


# ---------------------------------------------------------------------------
# cyclic elements, symmetry, exchange


def _finite_commutes_with_all(E: FinitePea, a) -> bool:
    for x in E.elements():
        if E.defined(x, a) != E.defined(a, x):
            return False
        if E.defined(x, a) and E.add(x, a) != E.add(a, x):
            return False
    return True


@dataclass(frozen=True)
class CyclicElement:
    element: object
    order: int
    strong: bool


def cyclic_elements(E, n: int):
    """All a with na = 1, each flagged strong when central.

    Finite algebras search exhaustively and use commutation inside E as the
    strength probe; interval algebras over Lex(Scalar(H), G) solve
    n*(t, g) = unit exactly and test group-center membership.
    """
    if n < 1:
        raise PreconditionError("order must be >= 1")
    if isinstance(E, FinitePea):
        return [
            CyclicElement(a, n, _finite_commutes_with_all(E, a))
            for a in E.elements()
            if E.times(n, a) == E.one
        ]
    if isinstance(E, IntervalPea):
        # all supported descriptors are torsion-free, so the root is unique
        c = g.divide(E.group, E.unit, n)
        if c is None or not E.contains(c):
            return []
        assert g.scale(E.group, c, n) == E.unit
        return [CyclicElement(c, n, g.center_member(E.group, c))]
    raise UnsupportedError(f"unsupported algebra {E!r}")


@dataclass(frozen=True)
class SymmetryVerdict:
    symmetric: bool
    witness: object = None


def is_symmetric(E, rng=None, samples=200) -> SymmetryVerdict:
    """Do left and right negation agree everywhere?"""
    if isinstance(E, FinitePea):
        for a in E.elements():
            if E.lneg(a) != E.rneg(a):
                return SymmetryVerdict(False, a)
        return SymmetryVerdict(True)
    if isinstance(E, IntervalPea) and E.is_lex_scalar:
        if g.center_member(E.tail_group, E.tail_unit):
            return SymmetryVerdict(True)
        # produce a concrete witness by sampling
        import random

        rng = rng or random.Random(0)
        for _ in range(samples):
            x = E.sample(rng)
            if E.lneg(x) != E.rneg(x):
                return SymmetryVerdict(False, x)
        raise AssertionError("center test says asymmetric but no witness sampled")
    raise UnsupportedError(f"unsupported algebra {E!r}")


@dataclass(frozen=True)
class ExchangeVerdict:
    holds: bool
    counterexample: object = None
    exhaustive: bool = False


def cyclic_exchange_check(E, c, max_order=64, rng=None, samples=200) -> ExchangeVerdict:
    """x + c defined iff c + x defined, for a cyclic element c."""
    order = None
    for n in range(1, max_order + 1):
        if E.times(n, c) == E.one:
            order = n
            break
    if order is None:
        raise PreconditionError("c is not cyclic (no n <= max_order with nc = 1)")
    if isinstance(E, FinitePea):
        for x in E.elements():
            if E.defined(x, c) != E.defined(c, x):
                return ExchangeVerdict(False, x, exhaustive=True)
        return ExchangeVerdict(True, exhaustive=True)
    import random

    rng = rng or random.Random(0)
    for _ in range(samples):
        x = E.sample(rng)
        if (E.add(x, c) is not None) != (E.add(c, x) is not None):
            return ExchangeVerdict(False, x)
    return ExchangeVerdict(True)
