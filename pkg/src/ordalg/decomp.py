"""Decompositions of pseudo effect algebras into scalar-indexed slices.

A decomposition over a scalar subgroup H partitions the algebra into
nonempty slices (E_t : t in [0,1] of H) compatible with the negations
(E_t maps to E_{1-t}) and with addition (sums land in the index sum).
Finite algebras carry explicit slice sets; intervals of Lex(Scalar(H'), G)
carry the symbolic slice-by-head decomposition with a finite witness grid.

States and decompositions determine each other: slices are state preimages
and the slice index is the state value.  The checks in this module verify
the correspondence, the ordered/type-I properties with their consequences,
and classify perfectness (ordered decomposition, directness, cyclic
systems, divisibility, torsion-freeness).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from . import groups as g
from .errors import PreconditionError, UnsupportedError
from .pea import (
    FinitePea,
    IntervalPea,
    cyclic_elements,
    ideals_enumerate,
    infinitesimals,
    is_symmetric,
)
from .sampling import sample_element, sample_positive
from .scalars import (
    Ordering,
    ScalarSubgroup,
    compare,
    floor_multiple_below,
    format_scalar,
    grid_points,
)
from .states import FiniteState, FirstCoordinateState, states_finite


# ---------------------------------------------------------------------------
# decomposition containers


@dataclass(frozen=True)
class FiniteDecomposition:
    H: ScalarSubgroup
    pea: FinitePea
    slices: tuple  # ((t, frozenset), ...) sorted by t
    proper: bool  # False: the flagged variant where some slices stay empty

    def slice_items(self):
        return self.slices

    def slice_of(self, x):
        for t, members in self.slices:
            if x in members:
                return t
        raise KeyError(x)


@dataclass(frozen=True)
class LexDecomposition:
    """Symbolic slices E_t = {(t, g)} of an interval over Lex(Scalar(H'), G)."""

    H: ScalarSubgroup
    pea: IntervalPea
    grid: tuple  # witness grid of [0,1]_H
    proper: bool = True

    def slice_of(self, x):
        return x[0]

    def contains_in_slice(self, t, x):
        return compare(x[0], t) is Ordering.EQ and self.pea.contains(x)

    def sample_slice(self, t, rng, bound=6):
        E = self.pea
        H = E.head_subgroup
        head = H.coerce(t)
        G = E.tail_group
        if compare(head, H.zero()) is Ordering.EQ:
            return (head, sample_positive(G, rng, bound))
        if compare(head, H.one()) is Ordering.EQ:
            extra = sample_positive(G, rng, bound)
            return (head, g.add(G, E.tail_unit, g.neg(G, extra)))
        return (head, sample_element(G, rng, bound))


# ---------------------------------------------------------------------------
# state <-> decomposition


def _index_values(H: ScalarSubgroup, max_den=6, coeff_bound=4):
    return grid_points(H, max_den=max_den, coeff_bound=coeff_bound)


def decomposition_from_state(E, s, H: ScalarSubgroup, allow_subset=False):
    """Slices as preimages of an H-valued state.

    A state value outside H is an error naming the element; attained values
    that miss part of [0,1] of H are tolerated only with ``allow_subset``
    (the empty-slice variant) and yield ``proper=False``.
    """
    if isinstance(E, FinitePea):
        if not isinstance(s, FiniteState):
            raise UnsupportedError("finite algebras need a finite state table")
        for a in E.elements():
            if not H.contains(s(a)):
                raise PreconditionError(
                    f"state is not valued in {H}: s({a}) = {s(a)}"
                )
        buckets = {}
        for a in E.elements():
            buckets.setdefault(H.coerce(s(a)), set()).add(a)
        proper = True
        if H.is_dense:
            proper = False
        else:
            full = {Fraction(k, H.n) for k in range(H.n + 1)}
            proper = set(buckets) == full
        if not proper and not allow_subset:
            missing = "a dense set" if H.is_dense else "some grid points"
            raise PreconditionError(
                f"state range misses {missing} of [0,1] in {H}; "
                "pass allow_subset=True for the empty-slice variant"
            )
        slices = tuple(
            sorted(((t, frozenset(m)) for t, m in buckets.items()), key=lambda p: p[0])
        )
        D = FiniteDecomposition(H, E, slices, proper)
        witness = _finite_type_ii_violation(D)
        assert witness is None, f"state preimages violate a decomposition law: {witness}"
        return D
    if isinstance(E, IntervalPea) and E.is_lex_scalar:
        if not isinstance(s, FirstCoordinateState):
            raise UnsupportedError("interval algebras use the first coordinate state")
        head_H = E.head_subgroup
        # every attained value must lie in H
        for t in _index_values(head_H):
            if not H.contains(t):
                raise PreconditionError(
                    f"state is not valued in {H}: s({g.format_element(E.group, (t, g.zero(E.tail_group)))}) = {format_scalar(t)}"
                )
        # every H index must be attained, else slices are empty
        missing = [t for t in _index_values(H) if not head_H.contains(t)]
        proper = not missing
        if missing and not allow_subset:
            raise PreconditionError(
                f"slice at t = {format_scalar(missing[0])} is empty; "
                "pass allow_subset=True for the empty-slice variant"
            )
        return LexDecomposition(H, E, tuple(_index_values(H)), proper)
    raise UnsupportedError(f"unsupported algebra {E!r}")


def state_from_decomposition(E, D):
    """The indexing state of a decomposition, after validating its laws."""
    if isinstance(D, FiniteDecomposition):
        witness = _finite_type_ii_violation(D)
        if witness is not None:
            raise PreconditionError(f"decomposition law fails: {witness}")
        values = [None] * E.size
        for t, members in D.slices:
            for a in members:
                values[a] = Fraction(t) if not isinstance(t, Fraction) else t
        if any(v is None for v in values):
            raise PreconditionError("slices do not cover the algebra")
        return FiniteState(tuple(values))
    if isinstance(D, LexDecomposition):
        witness = lex_type_ii_violation(D, random.Random(0))
        if witness is not None:
            raise PreconditionError(f"decomposition law fails: {witness}")
        return FirstCoordinateState(D.pea)
    raise UnsupportedError(f"unsupported decomposition {D!r}")


def _finite_type_ii_violation(D: FiniteDecomposition):
    """Exhaustive check of the negation and addition laws; None if clean."""
    E, H = D.pea, D.H
    one = H.one()
    index = {t: members for t, members in D.slices}
    covered = set()
    for t, members in D.slices:
        if not members:
            return ("empty slice", t)
        if covered & members:
            return ("overlapping slices", t)
        covered |= members
    if covered != set(E.elements()):
        return ("cover", None)
    for t, members in D.slices:
        mirror = index.get(one - t)
        for x in members:
            ln, rn = E.lneg(x), E.rneg(x)
            if mirror is None or ln not in mirror or rn not in mirror:
                return ("negation law", (t, x))
    for s, ms in D.slices:
        for t, mt in D.slices:
            for x in ms:
                for y in mt:
                    z = E.add(x, y)
                    if z is None:
                        continue
                    if compare(s + t, one) is Ordering.GT:
                        return ("sum above one", (s, t, x, y))
                    target = index.get(s + t)
                    if target is None or z not in target:
                        return ("sum slice law", (s, t, x, y))
    return None


def lex_type_ii_violation(D: LexDecomposition, rng, rounds=150):
    """Sampled check of the negation and addition laws on a lex interval."""
    E = D.pea
    H = D.H
    one = H.one()
    grid = D.grid
    for _ in range(rounds):
        t = rng.choice(grid)
        if not E.head_subgroup.contains(t):
            continue
        x = D.sample_slice(t, rng)
        if not E.contains(x):
            return ("slice sample escaped the interval", (t, x))
        ln, rn = E.lneg(x), E.rneg(x)
        mirror = one - H.coerce(t)
        if compare(ln[0], mirror) is not Ordering.EQ:
            return ("negation law", (t, x))
        if compare(rn[0], mirror) is not Ordering.EQ:
            return ("negation law", (t, x))
        s = rng.choice(grid)
        if not E.head_subgroup.contains(s):
            continue
        y = D.sample_slice(s, rng)
        z = E.add(x, y)
        if z is not None:
            if compare(H.coerce(t) + H.coerce(s), one) is Ordering.GT:
                return ("sum above one", (t, s, x, y))
            if compare(z[0], H.coerce(t) + H.coerce(s)) is not Ordering.EQ:
                return ("sum slice law", (t, s, x, y))
    return None


# ---------------------------------------------------------------------------
# ordered decompositions


@dataclass(frozen=True)
class OrderedReport:
    ordered: bool
    witness: object = None
    defined_iff_ordered_agrees: bool = True
    e0_matches_infinitesimals: bool = True
    e0_normal: bool = True
    slice_additivity_ok: bool = True
    no_oversum_ok: bool = True


def check_ordered(E, D, rng=None, sample_pairs=200) -> OrderedReport:
    """Pointwise slice comparability, its sum-definedness equivalent, and
    the three consequences (infinitesimal bottom slice, slice additivity,
    nonexistence of oversums)."""
    rng = rng or random.Random(0)
    if isinstance(D, FiniteDecomposition):
        return _check_ordered_finite(E, D)
    return _check_ordered_lex(E, D, rng, sample_pairs)


def _check_ordered_finite(E: FinitePea, D: FiniteDecomposition) -> OrderedReport:
    one = D.H.one()
    ordered, witness = True, None
    for s, ms in D.slices:
        for t, mt in D.slices:
            if compare(s, t) is Ordering.LT:
                for x in ms:
                    for y in mt:
                        if not E.leq(x, y):
                            ordered, witness = False, (x, y)
    defined_all = True
    for s, ms in D.slices:
        for t, mt in D.slices:
            if compare(s + t, one) is Ordering.LT:
                for x in ms:
                    for y in mt:
                        if not E.defined(x, y):
                            defined_all = False
    agrees = ordered == defined_all
    if not ordered:
        return OrderedReport(False, witness, agrees)
    index = {t: members for t, members in D.slices}
    e0 = index.get(D.H.zero(), frozenset())
    inf_ok = set(e0) == infinitesimals(E)
    from .pea import _is_normal_ideal

    normal_ok = _is_normal_ideal(E, e0)
    additivity_ok, oversum_ok = True, True
    for s, ms in D.slices:
        for t, mt in D.slices:
            total = s + t
            if compare(total, one) is Ordering.LT:
                sums = {E.add(x, y) for x in ms for y in mt}
                if sums != set(index.get(total, frozenset())):
                    additivity_ok = False
            if compare(total, one) is Ordering.GT:
                for x in ms:
                    for y in mt:
                        if E.defined(x, y) or E.defined(y, x):
                            oversum_ok = False
    return OrderedReport(True, None, agrees, inf_ok, normal_ok, additivity_ok, oversum_ok)


def _check_ordered_lex(E: IntervalPea, D: LexDecomposition, rng, rounds) -> OrderedReport:
    H = D.H
    one, zero = H.one(), H.zero()
    grid = [t for t in D.grid if E.head_subgroup.contains(t)]
    ordered, witness = True, None
    defined_all = True
    inf = infinitesimals(E)
    inf_ok, normal_ok = True, True
    additivity_ok, oversum_ok = True, True
    G = E.tail_group
    for _ in range(rounds):
        s, t = rng.choice(grid), rng.choice(grid)
        x, y = D.sample_slice(s, rng), D.sample_slice(t, rng)
        if compare(s, t) is Ordering.LT and not E.leq(x, y):
            ordered, witness = False, (x, y)
        total = H.coerce(s) + H.coerce(t)
        cmp_total = compare(total, one)
        if cmp_total is Ordering.LT:
            z = E.add(x, y)
            if z is None:
                defined_all = False
            else:
                if compare(z[0], total) is not Ordering.EQ:
                    additivity_ok = False
                if compare(H.coerce(t), zero) is Ordering.GT:
                    # reverse inclusion: any w in the sum slice splits past x
                    w = D.sample_slice(total, rng)
                    if not E.leq(x, w):
                        ordered, witness = False, (x, w)
                    else:
                        rest = E.minus_right(x, w)
                        if rest is None or compare(rest[0], H.coerce(t)) is not Ordering.EQ:
                            additivity_ok = False
        elif cmp_total is Ordering.GT:
            if E.add(x, y) is not None or E.add(y, x) is not None:
                oversum_ok = False
        # infinitesimal agreement and normality probes at the bottom slice
        i = D.sample_slice(zero, rng)
        if not inf.contains(i) or E.times(8, i) is None:
            inf_ok = False
        v = E.sample(rng)
        if E.add(v, i) is not None:
            conj = g.add(E.group, g.add(E.group, v, i), g.neg(E.group, v))
            if not inf.contains(conj) or not E.contains(conj):
                normal_ok = False
        if compare(v[0], zero) is Ordering.GT:
            # elements above the bottom slice stop being addable exactly when
            # the head multiples pass 1
            k = floor_multiple_below(H.one(), v[0]) + 1
            while compare(v[0] * k, H.one()) is not Ordering.GT:
                k += 1
            if E.times(k, v) is not None:
                inf_ok = False
    if not ordered:
        return OrderedReport(False, witness, ordered == defined_all)
    return OrderedReport(
        True, None, ordered == defined_all, inf_ok, normal_ok, additivity_ok, oversum_ok
    )


# ---------------------------------------------------------------------------
# type I


@dataclass(frozen=True)
class TypeIReport:
    is_type_i: bool
    sums_defined: bool
    e0_unique_maximal: bool
    e0_idempotent: bool
    detail: str = ""


def check_type_i(E, D, rng=None, rounds=120) -> TypeIReport:
    """(Ii) sums below one are defined; (Iii) the bottom slice is the unique
    maximal ideal; plus the bottom-slice idempotence consequence."""
    rng = rng or random.Random(0)
    if isinstance(D, FiniteDecomposition):
        one = D.H.one()
        sums_ok = True
        for s, ms in D.slices:
            for t, mt in D.slices:
                if compare(s + t, one) is Ordering.LT:
                    if any(not E.defined(x, y) for x in ms for y in mt):
                        sums_ok = False
        index = {t: m for t, m in D.slices}
        e0 = index.get(D.H.zero(), frozenset())
        report = ideals_enumerate(E)
        maximal = [i.members for i in report.ideals if i.maximal]
        unique_max = maximal == [e0]
        idem = {E.add(x, y) for x in e0 for y in e0 if E.defined(x, y)} == set(e0)
        detail = "" if unique_max else f"maximal ideals: {sorted(map(sorted, maximal))}"
        return TypeIReport(sums_ok and unique_max, sums_ok, unique_max, idem, detail)
    if isinstance(D, LexDecomposition):
        H = D.H
        one, zero = H.one(), H.zero()
        grid = [t for t in D.grid if E.head_subgroup.contains(t)]
        sums_ok = True
        for _ in range(rounds):
            s, t = rng.choice(grid), rng.choice(grid)
            if compare(H.coerce(s) + H.coerce(t), one) is Ordering.LT:
                x, y = D.sample_slice(s, rng), D.sample_slice(t, rng)
                if E.add(x, y) is None:
                    sums_ok = False
        e0_max = True
        for t in grid:
            if compare(t, zero) is Ordering.EQ:
                continue
            for _ in range(4):
                x = D.sample_slice(t, rng)
                if not _maximality_probe(E, x):
                    e0_max = False
        idem = True
        for _ in range(rounds // 2):
            x = D.sample_slice(zero, rng)
            y = D.sample_slice(zero, rng)
            z = E.add(x, y)
            if z is None or compare(z[0], zero) is not Ordering.EQ:
                idem = False
        return TypeIReport(sums_ok and e0_max, sums_ok, e0_max, idem)
    raise UnsupportedError(f"unsupported decomposition {D!r}")


def _maximality_probe(E: IntervalPea, x) -> bool:
    """Exact witness chain showing the ideal generated by E_0 and x is all of E.

    For a slice index t with room below it, multiples of (h, 0) for a head
    0 < h < t climb to just under the unit and the leftover falls below x.
    For the least positive discrete index, x is first shifted into the
    nonnegative part of its slice by a directedness witness from E_0.
    """
    from .errors import NoElementError
    from .scalars import pick_strictly_between

    H = E.head_subgroup
    G = E.tail_group
    t, gx = x
    g0 = E.tail_unit
    if compare(t, H.zero()) is not Ordering.GT:
        return False
    if compare(t, H.one()) is Ordering.EQ:
        # top slice: rneg(x) lands in E_0 and restores the unit
        r = E.rneg(x)
        return compare(r[0], H.zero()) is Ordering.EQ and E.add(x, r) == E.one
    try:
        h = pick_strictly_between(H, H.zero(), t)
    except NoElementError:
        h = None
    if h is not None:
        # (h, 0) < x so all its defined multiples live in the ideal
        w = (h, g.zero(G))
        if not E.leq(w, x):
            return False
        k = 1
        while compare(H.coerce(h * (k + 1)), H.one()) is Ordering.LT:
            k += 1
        y = (h * k, g.zero(G))  # k maximal with k*h < 1
        leftover = E.lneg(y)  # (1 - k*h, g0), head at most h < t
        if not E.leq(leftover, x):
            return False
        return E.add(leftover, y) == E.one
    # discrete head, t = 1/n with n >= 2: shift x by e >= -gx, -gx + g0
    n = H.n
    e = g.upper_bound(G, [g.neg(G, gx), g.zero(G), g.add(G, g.neg(G, gx), g0)])
    lifted = E.add(x, (H.zero(), e))
    if lifted is None:
        return False
    w = (Fraction(1, n), g.zero(G))
    if not E.leq(w, lifted):
        return False
    y = (Fraction(n - 1, n), g.zero(G))  # (n-1)-fold sum of w
    leftover = E.lneg(y)  # (1/n, g0) <= lifted by the choice of e
    if not E.leq(leftover, lifted):
        return False
    return E.add(leftover, y) == E.one


# ---------------------------------------------------------------------------
# cyclic systems and perfectness


@dataclass(frozen=True)
class CyclicSystem:
    entries: tuple  # ((t, element), ...) over the witness grid
    strong: bool


def find_cyclic_system(E, D, strong=False):
    """A grid family c_t in E_t with c_s + c_t = c_{s+t} and c_1 = 1, or None."""
    if isinstance(D, FiniteDecomposition):
        H = D.H
        if H.is_dense:
            return None  # finite algebras cannot meet a dense grid
        n = H.n
        from .pea import _finite_commutes_with_all

        for cand in cyclic_elements(E, n):
            if strong and not cand.strong:
                continue
            entries = []
            ok = True
            for k in range(n + 1):
                ck = E.times(k, cand.element)
                if ck is None or ck not in dict(D.slices)[Fraction(k, n)]:
                    ok = False
                    break
                entries.append((Fraction(k, n), ck))
            if ok:
                strong_flag = _finite_commutes_with_all(E, cand.element)
                return CyclicSystem(tuple(entries), strong_flag)
        return None
    if isinstance(D, LexDecomposition):
        E = D.pea
        H = D.H
        G = E.tail_group
        g0 = E.tail_unit
        entries = []
        all_strong = True
        for t in D.grid:
            tail = _integral_action(G, g0, t)
            if tail is None:
                return None
            c = (t, tail)
            if not E.contains(c):
                return None
            entries.append((t, c))
            if not g.center_member(E.group, c):
                all_strong = False
        # additivity of the family on grid pairs
        for s, cs in entries:
            for t, ct in entries:
                total = H.coerce(s) + H.coerce(t)
                if compare(total, H.one()) is Ordering.GT:
                    continue
                match = [cv for tv, cv in entries if compare(tv, total) is Ordering.EQ]
                if match and E.add(cs, ct) != match[0]:
                    return None
        if strong and not all_strong:
            return None
        return CyclicSystem(tuple(entries), all_strong)
    raise UnsupportedError(f"unsupported decomposition {D!r}")


def _integral_action(G, g0, t):
    """t * g0 for an index t, via exact division: (p/q) g0 = p (g0 / q).

    Quadratic indices m + k sqrt(d) act through their integer part m; this is
    the canonical additive choice fixing 1 -> g0 and sqrt(d) -> 0.
    """
    from .scalars import QuadraticNumber

    if isinstance(t, QuadraticNumber):
        if t.a.denominator != 1 or t.b.denominator != 1:
            return None
        return g.scale(G, g0, int(t.a))
    t = Fraction(t)
    part = g.divide(G, g0, t.denominator)
    if part is None:
        return None
    return g.scale(G, part, t.numerator)


@dataclass(frozen=True)
class PerfectReport:
    is_h_perfect: bool
    ordered: OrderedReport | None
    type_i: TypeIReport | None
    directness: bool
    cyclic_system: CyclicSystem | None
    strong_cyclic: bool
    one_divisible: bool
    strong_one_divisible: bool
    first_divisibility_failure: int | None
    unique_roots: bool
    torsion_free: bool | None
    symmetric: bool
    is_strong_h_perfect: bool
    missing_slice: object = None


def classify_perfect(E, H: ScalarSubgroup, n_max=6, seed=0, samples=150) -> PerfectReport:
    """Full perfectness report for a finite algebra or a lex interval."""
    rng = random.Random(seed)
    if isinstance(E, FinitePea):
        return _classify_finite(E, H, n_max, rng)
    if isinstance(E, IntervalPea) and E.is_lex_scalar:
        return _classify_lex(E, H, n_max, rng, samples)
    raise UnsupportedError(f"unsupported algebra {E!r}")


def _divisibility_scan(E, n_max):
    one_div, strong_div, first_fail = True, True, None
    for n in range(1, n_max + 1):
        found = cyclic_elements(E, n)
        if not found:
            one_div = strong_div = False
            if first_fail is None:
                first_fail = n
        elif not any(c.strong for c in found):
            strong_div = False
            if first_fail is None:
                first_fail = n
    return one_div, strong_div, first_fail


def _unique_roots(E, n_max):
    return all(len(cyclic_elements(E, n)) <= 1 for n in range(1, n_max + 1))


def _classify_finite(E: FinitePea, H, n_max, rng):
    decomposition = None
    ordered_report = None
    for s in states_finite(E):
        try:
            D = decomposition_from_state(E, s, H)
        except PreconditionError:
            continue
        report = check_ordered(E, D)
        if report.ordered:
            decomposition, ordered_report = D, report
            break
    is_perfect = decomposition is not None
    type_i = check_type_i(E, decomposition) if is_perfect else None
    directness = False
    cyc = None
    if is_perfect:
        directness = all(
            _finite_slice_directed(E, members) for _, members in decomposition.slices
        )
        cyc = find_cyclic_system(E, decomposition)
    one_div, strong_div, first_fail = _divisibility_scan(E, n_max)
    sym = is_symmetric(E).symmetric
    strong = bool(is_perfect and directness and cyc is not None and cyc.strong)
    # torsion-freeness of an abstract ambient group is not determinable here
    return PerfectReport(
        is_perfect,
        ordered_report,
        type_i,
        directness,
        cyc,
        bool(cyc and cyc.strong),
        one_div,
        strong_div,
        first_fail,
        _unique_roots(E, n_max),
        None,
        sym,
        strong,
    )


def _finite_slice_directed(E: FinitePea, members) -> bool:
    for a in members:
        for b in members:
            if not any(E.leq(c, a) and E.leq(c, b) for c in members):
                return False
            if not any(E.leq(a, c) and E.leq(b, c) for c in members):
                return False
    return True


def _classify_lex(E: IntervalPea, H, n_max, rng, samples):
    head_H = E.head_subgroup
    missing = next((t for t in _index_values(H) if not head_H.contains(t)), None)
    if missing is not None:
        one_div, strong_div, first_fail = _divisibility_scan(E, n_max)
        return PerfectReport(
            False,
            None,
            None,
            g.is_directed(E.tail_group),
            None,
            False,
            one_div,
            strong_div,
            first_fail,
            _unique_roots(E, n_max),
            g.is_torsion_free(E.group),
            is_symmetric(E, rng).symmetric,
            False,
            missing_slice=missing,
        )
    D = decomposition_from_state(E, FirstCoordinateState(E), H)
    ordered_report = check_ordered(E, D, rng, samples)
    type_i = check_type_i(E, D, rng, samples)
    directness = g.is_directed(E.tail_group) and _lex_slices_directed_probe(E, D, rng)
    cyc = find_cyclic_system(E, D)
    one_div, strong_div, first_fail = _divisibility_scan(E, n_max)
    sym = is_symmetric(E, rng).symmetric
    tf = g.is_torsion_free(E.group)
    strong = bool(
        ordered_report.ordered and directness and cyc is not None and cyc.strong and tf
    )
    return PerfectReport(
        ordered_report.ordered,
        ordered_report,
        type_i,
        directness,
        cyc,
        bool(cyc and cyc.strong),
        one_div,
        strong_div,
        first_fail,
        _unique_roots(E, n_max),
        tf,
        sym,
        strong,
    )


def _lex_slices_directed_probe(E: IntervalPea, D: LexDecomposition, rng, rounds=60) -> bool:
    G = E.tail_group
    grid = [t for t in D.grid if E.head_subgroup.contains(t)]
    for _ in range(rounds):
        t = rng.choice(grid)
        a, b = D.sample_slice(t, rng), D.sample_slice(t, rng)
        lo = (t, g.lower_bound(G, [a[1], b[1]]))
        hi = (t, g.upper_bound(G, [a[1], b[1]]))
        if not (E.leq(lo, a) and E.leq(lo, b) and E.leq(a, hi) and E.leq(b, hi)):
            return False
        if not (E.contains(lo) and E.contains(hi)):
            # boundary slices clamp the witnesses back into the interval
            zero_t = compare(t, D.H.zero()) is Ordering.EQ
            one_t = compare(t, D.H.one()) is Ordering.EQ
            if zero_t and not E.contains(hi):
                return False
            if one_t and not E.contains(lo):
                return False
            if not zero_t and not one_t:
                return False
    return True


# ---------------------------------------------------------------------------
# strong cyclic property vs strong 1-divisibility


@dataclass(frozen=True)
class EquivalenceVerdict:
    cyclic_side: bool
    divisibility_side: bool
    agree: bool
    uniqueness_ok: bool


def strong_cyclic_vs_divisibility(E: IntervalPea, n_max=6) -> EquivalenceVerdict:
    """Both sides computed independently and compared; also asserts that a
    strong cyclic element of order n is the only cyclic element of order n."""
    if not (isinstance(E, IntervalPea) and g.is_torsion_free(E.group)):
        raise PreconditionError("needs an interval algebra over a torsion-free group")
    strong_side = True
    div_side = True
    uniqueness = True
    for n in range(1, n_max + 1):
        found = cyclic_elements(E, n)
        strong_found = [c for c in found if c.strong]
        if not strong_found:
            div_side = False
        if strong_found and len(found) != 1:
            uniqueness = False
    # cyclic-system side over the rational grid with denominators <= n_max
    if E.is_lex_scalar:
        D = LexDecomposition(
            E.head_subgroup, E, tuple(_index_values(E.head_subgroup, max_den=n_max)), True
        )
        cyc = find_cyclic_system(E, D, strong=True)
        strong_side = cyc is not None and cyc.strong
    else:
        strong_side = div_side
    return EquivalenceVerdict(strong_side, div_side, strong_side == div_side, uniqueness)
