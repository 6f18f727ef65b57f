"""Representation of strongly perfect interval algebras over lex products.

``build_lex_pea`` constructs the canonical interval Gamma(Lex(Scalar(H), G),
(1, 0)); ``phi_represent`` maps any strong perfect presentation onto it by
subtracting the cyclic-system entry of each slice; ``verify_isomorphism``
stress-tests such a map on seeded samples (homomorphism, injectivity, order
both ways, surjectivity by explicit preimages).  ``difference_group`` builds
the group of formal differences of a grid-restricted bottom slice and
``functor_map`` lifts group homomorphisms to interval-algebra homomorphisms.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from . import groups as g
from .decomp import _integral_action, classify_perfect
from .errors import PreconditionError, UnsupportedError
from .pea import IntervalPea
from .sampling import sample_element, sample_positive
from .scalars import Ordering, ScalarSubgroup, compare


def build_lex_pea(H: ScalarSubgroup, G, g0=None) -> IntervalPea:
    """The interval algebra of Lex(Scalar(H), G) with unit (1, g0)."""
    if not g.is_directed(G):
        raise PreconditionError("the bottom group must be directed")
    if not g.is_torsion_free(G):
        raise PreconditionError("the bottom group must be torsion-free")
    if g0 is None:
        g0 = g.zero(G)
    return IntervalPea(g.Lex(g.Scalar(H), G), (H.one(), g0))


# ---------------------------------------------------------------------------
# the representation map


@dataclass(frozen=True)
class PhiMap:
    """x in slice t maps to (t, x - c_t), with c_t from the cyclic system."""

    source: IntervalPea
    target: IntervalPea
    corrupt: bool = False  # drop the c_t subtraction (negative control)

    def cyclic_entry(self, t):
        tail = _integral_action(self.source.tail_group, self.source.tail_unit, t)
        if tail is None:
            raise PreconditionError(
                f"no cyclic-system entry for slice {t}; extend the witness grid"
            )
        return (t, tail)

    def __call__(self, x):
        t, gx = x
        if self.corrupt:
            return (t, gx)
        c = self.cyclic_entry(t)
        # c_t is central, so left and right differences agree
        return (t, g.sub_right(self.source.tail_group, gx, c[1]))

    def preimage(self, z):
        t, gz = z
        c = self.cyclic_entry(t)
        return (t, g.add(self.source.tail_group, gz, c[1]))


def phi_represent(E: IntervalPea, n_max=6, seed=0) -> PhiMap:
    """The representation map of a strong perfect interval algebra.

    The algebra is classified first; the canonical target shares the tail
    group and carries the unit (1, 0).
    """
    if not (isinstance(E, IntervalPea) and E.is_lex_scalar):
        raise UnsupportedError("representation needs a scalar-headed lex interval")
    H = E.head_subgroup
    report = classify_perfect(E, H, n_max=n_max, seed=seed)
    if not report.is_strong_h_perfect:
        raise PreconditionError(
            "not a strong perfect algebra: "
            f"perfect={report.is_h_perfect} directness={report.directness} "
            f"strong_cyclic={report.strong_cyclic} torsion_free={report.torsion_free}"
        )
    target = build_lex_pea(H, E.tail_group)
    return PhiMap(E, target)


# ---------------------------------------------------------------------------
# isomorphism verification


@dataclass
class PeaIsomorphismReport:
    sample_count: int = 0
    homomorphism_failures: int = 0
    injectivity_failures: int = 0
    order_reflection_failures: int = 0
    surjectivity_probes: int = 0
    surjectivity_probes_hit: int = 0

    @property
    def clean(self):
        return (
            self.homomorphism_failures == 0
            and self.injectivity_failures == 0
            and self.order_reflection_failures == 0
            and self.surjectivity_probes_hit == self.surjectivity_probes
        )

    def summary(self):
        return (
            f"samples={self.sample_count} hom_failures={self.homomorphism_failures} "
            f"inj_failures={self.injectivity_failures} "
            f"order_failures={self.order_reflection_failures} "
            f"surjectivity={self.surjectivity_probes_hit}/{self.surjectivity_probes}"
        )


def verify_isomorphism(phi, E: IntervalPea, F: IntervalPea, samples=500, seed=0, preimage=None):
    """Sampled homomorphism/injectivity/order/surjectivity report for phi.

    Surjectivity probes run through the staged preimage construction when
    phi is a :class:`PhiMap`, or through an explicit ``preimage`` callable.
    """
    rng = random.Random(seed)
    report = PeaIsomorphismReport()
    can_probe = preimage is not None or hasattr(phi, "cyclic_entry")
    for _ in range(samples):
        report.sample_count += 1
        x, y = E.sample(rng), E.sample(rng)
        fx, fy = phi(x), phi(y)
        if not (F.contains(fx) and F.contains(fy)):
            report.homomorphism_failures += 1
            continue
        # addition: definedness both ways and equality of values
        z = E.add(x, y)
        fz = F.add(fx, fy)
        if (z is None) != (fz is None):
            report.homomorphism_failures += 1
        elif z is not None and phi(z) != fz:
            report.homomorphism_failures += 1
        # negations
        if phi(E.lneg(x)) != F.lneg(fx) or phi(E.rneg(x)) != F.rneg(fx):
            report.homomorphism_failures += 1
        # injectivity
        if x != y and fx == fy:
            report.injectivity_failures += 1
        # order preservation and reflection
        if E.leq(x, y) != F.leq(fx, fy):
            report.order_reflection_failures += 1
        if not can_probe:
            continue
        target = F.sample(rng)
        report.surjectivity_probes += 1
        if preimage is not None:
            w = preimage(target)
            if E.contains(w) and phi(w) == target:
                report.surjectivity_probes_hit += 1
        elif _surjectivity_probe(phi, E, F, target):
            report.surjectivity_probes_hit += 1
    return report


def _surjectivity_probe(phi, E, F, z) -> bool:
    """Hit z through the proof-style preimage construction.

    Bottom-slice targets use the ideal embedding directly; interior targets
    split the tail into a difference of positives, climb from the cyclic
    entry and cancel; top-slice targets go through the left negation.
    """
    H = E.head_subgroup
    G = E.tail_group
    t, gz = z
    zero_t, one_t = H.zero(), H.one()
    if compare(t, zero_t) is Ordering.EQ:
        x = (t, g.add(G, gz, phi.cyclic_entry(t)[1]))
        return E.contains(x) and phi(x) == z
    if compare(t, one_t) is Ordering.EQ:
        # z = lneg(w) for the bottom-slice preimage w of lneg(z)
        w_target = F.lneg(z)
        wx = (zero_t, g.add(G, w_target[1], phi.cyclic_entry(zero_t)[1]))
        if not E.contains(wx):
            return False
        x = E.lneg(wx)
        return phi(x) == z
    # interior slice: gz = g1 - g2 with positive parts, staged through E
    lower = g.lower_bound(G, [gz, g.zero(G)])
    g2 = g.neg(G, lower)
    g1 = g.add(G, gz, g2)
    if not (g.positive_cone_member(G, g1) and g.positive_cone_member(G, g2)):
        return False
    c = phi.cyclic_entry(t)
    step = E.add((zero_t, g1), c)
    if step is None:
        return False
    x = E.minus_left(step, (zero_t, g2))  # step - (0, g2) from the right
    if x is None:
        x_alt = (t, g.add(G, gz, c[1]))
        x = x_alt if E.contains(x_alt) else None
    if x is None:
        return False
    return E.contains(x) and phi(x) == z


# ---------------------------------------------------------------------------
# shuffled encodings (test doubles for abstract presentations)


def make_shuffled(H: ScalarSubgroup, G, spec):
    """An isomorphic re-encoding of the canonical algebra and the map onto it.

    spec is one of ("identity",), ("permute", perm) for integer-vector
    tails, ("translate", z) for discrete H (the unit moves to (1, n*z)), or
    ("conjugate", h) twisting tails by an inner automorphism.
    """
    base = build_lex_pea(H, G)
    kind = spec[0]
    if kind == "identity":
        return base, lambda x: x
    if kind == "permute":
        perm = spec[1]
        if not isinstance(G, g.IntVector) or sorted(perm) != list(range(G.k)):
            raise PreconditionError("permute shuffles need an IntVector tail")

        def alpha(x):
            t, tail = x
            return (t, tuple(tail[p] for p in perm))

        return base, alpha
    if kind == "translate":
        z = g.check_element(G, spec[1])
        if H.is_dense:
            raise UnsupportedError("translate shuffles need a discrete head")
        if not g.center_member(G, z):
            raise PreconditionError("translate shuffles need a central offset")
        n = H.n
        unit_tail = g.scale(G, z, n)
        shuffled = IntervalPea(base.group, (H.one(), unit_tail))

        def alpha(x):
            t, tail = x
            k = int(Fraction(t) * n)
            return (t, g.add(G, tail, g.scale(G, z, k)))

        return shuffled, alpha
    if kind == "conjugate":
        h = g.check_element(G, spec[1])

        def alpha(x):
            t, tail = x
            return (t, g.add(G, g.add(G, h, tail), g.neg(G, h)))

        return base, alpha
    raise UnsupportedError(f"unknown shuffle {spec!r}")


# ---------------------------------------------------------------------------
# difference group of a bottom slice


@dataclass(frozen=True)
class DifferenceClass:
    plus: object
    minus: object


class DifferenceGroup:
    """Formal differences of a commutative cancellative grid with zero.

    The grid must be closed enough that positivity can be decided inside it:
    a class [a - b] is positive exactly when a = c + b for some grid c.
    """

    def __init__(self, pea, grid):
        self.pea = pea
        self.grid = list(grid)
        if pea.zero not in self.grid:
            self.grid.insert(0, pea.zero)
        for a in self.grid:
            for b in self.grid:
                sab, sba = pea.add(a, b), pea.add(b, a)
                if sab is None or sba is None:
                    raise UnsupportedError("grid addition must be total on the slice")
                if sab != sba:
                    raise UnsupportedError(
                        f"slice addition is not commutative at ({a}, {b}); "
                        "difference groups need a commutative bottom slice"
                    )
        self._reps = []

    def _equivalent(self, p: DifferenceClass, q: DifferenceClass) -> bool:
        return self.pea.add(p.plus, q.minus) == self.pea.add(q.plus, p.minus)

    def make(self, plus, minus) -> DifferenceClass:
        cand = DifferenceClass(plus, minus)
        for rep in self._reps:
            if self._equivalent(cand, rep):
                return rep
        self._reps.append(cand)
        return cand

    def embed(self, x) -> DifferenceClass:
        return self.make(x, self.pea.zero)

    @property
    def zero(self):
        return self.embed(self.pea.zero)

    def add(self, p, q):
        return self.make(self.pea.add(p.plus, q.plus), self.pea.add(p.minus, q.minus))

    def neg(self, p):
        return self.make(p.minus, p.plus)

    def is_positive(self, p) -> bool:
        return any(self.pea.add(c, p.minus) == p.plus for c in self.grid)

    def leq(self, p, q) -> bool:
        return self.is_positive(self.add(q, self.neg(p)))


def difference_group(E, grid):
    """Difference group of a grid-restricted bottom slice plus the embedding.

    Returns (group, embed); errors on non-commutative slices, which are out
    of range for this construction.
    """
    dg = DifferenceGroup(E, grid)
    return dg, dg.embed


# ---------------------------------------------------------------------------
# homomorphisms and the interval-algebra functor


@dataclass(frozen=True)
class GroupHom:
    source: g.GroupDescriptor
    target: g.GroupDescriptor
    rule: tuple

    def __call__(self, x):
        return _hom_apply(self.rule, self.source, self.target, x)


def _hom_apply(rule, source, target, x):
    kind = rule[0]
    if kind == "identity":
        return x
    if kind == "scale":
        return g.scale(target, x, rule[1])
    if kind == "permute":
        return tuple(x[p] for p in rule[1])
    if kind == "project":
        return tuple(x[i] for i in rule[1])
    if kind == "compose":
        h2, h1 = rule[1], rule[2]
        return h2(h1(x))
    raise UnsupportedError(f"unknown homomorphism rule {rule!r}")


def hom_compose(h2: GroupHom, h1: GroupHom) -> GroupHom:
    if h1.target != h2.source:
        raise PreconditionError("homomorphisms do not compose")
    return GroupHom(h1.source, h2.target, ("compose", h2, h1))


def hom_verify(h: GroupHom, rng, samples=200):
    """Sampled additivity and order preservation; a witness or None."""
    for _ in range(samples):
        x = sample_element(h.source, rng, 6)
        y = sample_element(h.source, rng, 6)
        if h(g.add(h.source, x, y)) != g.add(h.target, h(x), h(y)):
            return ("additivity", x, y)
        if g.leq(h.source, x, y) and not g.leq(h.target, h(x), h(y)):
            return ("order", x, y)
    return None


@dataclass(frozen=True)
class PeaHom:
    """(t, g) -> (t, h(g)) between canonical lex interval algebras."""

    source: IntervalPea
    target: IntervalPea
    hom: GroupHom

    def __call__(self, x):
        return (x[0], self.hom(x[1]))


def functor_map(h: GroupHom, H: ScalarSubgroup, rng=None, samples=100) -> PeaHom:
    """Lift a verified group homomorphism to the canonical interval algebras."""
    rng = rng or random.Random(0)
    witness = hom_verify(h, rng, samples)
    if witness is not None:
        raise PreconditionError(f"not a po-group homomorphism: {witness[0]} at {witness[1:]}")
    return PeaHom(build_lex_pea(H, h.source), build_lex_pea(H, h.target), h)


def reconstruct_hom(f, source: IntervalPea, target: IntervalPea):
    """Recover the tail homomorphism of an interval-algebra map.

    Positive tails are read off the bottom slice; arbitrary tails split as a
    difference of positives.
    """
    G = source.tail_group
    Gt = target.tail_group
    zero_t = source.head_subgroup.zero()

    def on_positive(gp):
        image = f((zero_t, gp))
        if compare(image[0], target.head_subgroup.zero()) is not Ordering.EQ:
            raise PreconditionError("map does not preserve the bottom slice")
        return image[1]

    def hom(x):
        lower = g.lower_bound(G, [x, g.zero(G)])
        g2 = g.neg(G, lower)
        g1 = g.add(G, x, g2)
        return g.sub_right(Gt, on_positive(g1), on_positive(g2))

    return hom
