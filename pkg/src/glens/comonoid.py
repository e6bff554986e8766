"""Commutative comonoids, coKleisli fibers and lenses in a strict symmetric monoidal category.

A symmetric monoidal category is any object implementing the small
:class:`StrictSMC` interface.  Two implementations ship: :class:`FinSetCartesian`
(skeletal finite sets under ×, morphisms are :class:`FinFn` values, objects are
unbounded) and :class:`TabulatedSMC` (a finite category with tensor tables).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Hashable, Iterator, NamedTuple, Sequence

from . import finset
from .catkit import (
    FinCategory,
    FunctorData,
    IsoReport,
    LawReport,
    build_category,
    check_isomorphism,
    finset_category,
)
from .errors import MalformedData, check_bound
from .finset import FinFn
from .indexed import IndexedCat, lens_category, projection


class StrictSMC:
    """Interface of a strict symmetric monoidal category ``(C, I, ⊗, σ)``."""

    name = "abstract"
    unit: int

    def hom(self, a: int, b: int) -> Sequence[Hashable]:
        raise NotImplementedError

    def count(self, a: int, b: int) -> int:
        return len(self.hom(a, b))

    def dom(self, f) -> int:
        raise NotImplementedError

    def cod(self, f) -> int:
        raise NotImplementedError

    def compose(self, f, g):
        raise NotImplementedError

    def identity(self, a: int):
        raise NotImplementedError

    def tensor_ob(self, a: int, b: int) -> int:
        raise NotImplementedError

    def tensor_mor(self, f, g):
        raise NotImplementedError

    def symmetry(self, a: int, b: int):
        raise NotImplementedError

    def mor_id(self, f) -> int:
        """Serialisable id of a morphism (used by the comonoid JSON schema)."""
        raise NotImplementedError

    def mor_from_id(self, a: int, b: int, k: int):
        raise NotImplementedError

    def compose_all(self, *fs):
        out = fs[0]
        for g in fs[1:]:
            out = self.compose(out, g)
        return out

    def tensor_all(self, *fs):
        out = fs[0]
        for g in fs[1:]:
            out = self.tensor_mor(out, g)
        return out


class FinSetCartesian(StrictSMC):
    """Skeletal finite sets with the row-major cartesian product; morphism ids are table ranks."""

    name = "finset-cartesian"
    unit = 1

    def hom(self, a, b):
        return list(finset.all_maps(a, b))

    def count(self, a, b):
        return b**a

    def dom(self, f):
        return f.dom

    def cod(self, f):
        return f.cod

    def compose(self, f, g):
        return finset.compose(f, g)

    def identity(self, a):
        return finset.identity(a)

    def tensor_ob(self, a, b):
        return a * b

    def tensor_mor(self, f, g):
        return finset.tensor(f, g)

    def symmetry(self, a, b):
        return finset.symmetry(a, b)

    def mor_id(self, f):
        return finset.rank(f)

    def mor_from_id(self, a, b, k):
        return finset.unrank(a, b, k)


class TabulatedSMC(StrictSMC):
    """A finite strict SMC: a :class:`FinCategory` plus tensor and symmetry tables."""

    name = "tabulated"

    def __init__(self, carrier: FinCategory, unit: int, tensor_ob, tensor_mor, symmetry):
        self.carrier = carrier
        self.unit = unit
        self._tob = dict(tensor_ob)
        self._tmor = dict(tensor_mor)
        self._sym = dict(symmetry)

    def hom(self, a, b):
        return self.carrier.hom(a, b)

    def dom(self, f):
        return self.carrier.dom(f)

    def cod(self, f):
        return self.carrier.cod(f)

    def compose(self, f, g):
        return self.carrier.compose(f, g)

    def identity(self, a):
        return self.carrier.identity[a]

    def tensor_ob(self, a, b):
        try:
            return self._tob[(a, b)]
        except KeyError:
            raise MalformedData(f"tensor of objects {a}, {b} is not tabulated") from None

    def tensor_mor(self, f, g):
        try:
            return self._tmor[(f, g)]
        except KeyError:
            raise MalformedData(f"tensor of morphisms {f}, {g} is not tabulated") from None

    def symmetry(self, a, b):
        return self._sym[(a, b)]

    def mor_id(self, f):
        return f

    def mor_from_id(self, a, b, k):
        if self.carrier.morphisms[k] != (a, b):
            raise MalformedData(f"morphism {k} is not in hom({a}, {b})")
        return k


def finset_restricted_smc(sizes: Sequence[int] = (0, 1)) -> TabulatedSMC:
    """Cartesian finite sets on a set of sizes closed under products, tabulated."""
    C = finset_category(sizes=sizes)
    tob, tmor, sym = {}, {}, {}
    for a, n in enumerate(C.object_labels):
        for b, m in enumerate(C.object_labels):
            if n * m not in C.object_labels:
                raise MalformedData(f"sizes {sizes} are not closed under products")
            tob[(a, b)] = C.find_object(n * m)
            sym[(a, b)] = C.find(finset.symmetry(n, m))
    for f, g in itertools.product(range(C.n_morphisms), repeat=2):
        tmor[(f, g)] = C.find(finset.tensor(C.labels[f], C.labels[g]))
    return TabulatedSMC(C, C.find_object(1), tob, tmor, sym)


def check_smc(M: StrictSMC, objects: Sequence[int]) -> LawReport:
    """Bifunctoriality, strict unit, involutive and natural symmetry, and the hexagon over ``objects``."""
    report = LawReport(f"symmetric monoidal laws ({M.name})")
    I = M.unit
    homs = {(a, b): M.hom(a, b) for a in objects for b in objects}
    pairs = [(f, g) for (a, b), fs in homs.items() for f in fs for c in objects for g in homs[(b, c)]]
    for a in objects:
        report.checks += 2
        if M.tensor_ob(I, a) != a or M.tensor_ob(a, I) != a:
            report.fail("strict unit on objects", a)
        for b in objects:
            ab = M.tensor_ob(a, b)
            report.checks += 2
            if M.tensor_mor(M.identity(a), M.identity(b)) != M.identity(ab):
                report.fail("tensor preserves identities", a, b)
            s, s2 = M.symmetry(a, b), M.symmetry(b, a)
            if M.compose(s, s2) != M.identity(ab):
                report.fail("σ ⨟ σ = id", a, b)
            for c in objects:
                report.checks += 1
                lhs = M.symmetry(M.tensor_ob(a, b), c)
                rhs = M.compose(
                    M.tensor_mor(M.identity(a), M.symmetry(b, c)),
                    M.tensor_mor(M.symmetry(a, c), M.identity(b)),
                )
                if lhs != rhs:
                    report.fail("hexagon", a, b, c)
    for (a, b), fs in homs.items():
        for f in fs:
            report.checks += 2
            iI = M.identity(I)
            if M.tensor_mor(iI, f) != f or M.tensor_mor(f, iI) != f:
                report.fail("strict unit on morphisms", f)
            for (c, d), gs in homs.items():
                for g in gs:
                    report.checks += 1
                    if M.compose(M.tensor_mor(f, g), M.symmetry(b, d)) != M.compose(
                        M.symmetry(a, c), M.tensor_mor(g, f)
                    ):
                        report.fail("σ natural", f, g)
    for (f1, g1), (f2, g2) in itertools.product(pairs, repeat=2):
        report.checks += 1
        if M.compose(M.tensor_mor(f1, f2), M.tensor_mor(g1, g2)) != M.tensor_mor(
            M.compose(f1, g1), M.compose(f2, g2)
        ):
            report.fail("interchange", f1, g1, f2, g2)
    return report


# -- comonoids ---------------------------------------------------------------


@dataclass(frozen=True)
class Comonoid:
    carrier: int
    counit: Hashable
    comult: Hashable

    def to_json(self, M: StrictSMC) -> dict:
        return {"object": self.carrier, "counit": M.mor_id(self.counit), "comult": M.mor_id(self.comult)}

    @classmethod
    def from_json(cls, M: StrictSMC, data: dict) -> Comonoid:
        c = int(data["object"])
        cc = M.tensor_ob(c, c)
        return cls(c, M.mor_from_id(c, M.unit, int(data["counit"])), M.mor_from_id(c, cc, int(data["comult"])))


def fox_comonoid(n: int) -> Comonoid:
    """The cartesian comonoid ``(n, !, Δ)`` on a finite set."""
    return Comonoid(n, finset.terminal(n), finset.diagonal(n))


def check_comonoid(M: StrictSMC, K: Comonoid) -> LawReport:
    """The counit, cocommutativity and coassociativity axioms, plus the derived left counit law."""
    report = LawReport(f"comonoid on {K.carrier}")
    c, eps, delta = K.carrier, K.counit, K.comult
    cc = M.tensor_ob(c, c)
    report.checks += 1
    if (M.dom(eps), M.cod(eps)) != (c, M.unit) or (M.dom(delta), M.cod(delta)) != (c, cc):
        raise MalformedData(f"counit/comultiplication have the wrong type for carrier {c}")
    ic = M.identity(c)
    axioms = [
        ("axiom 1: δ ⨟ (c ⊗ ε) = id", M.compose(delta, M.tensor_mor(ic, eps)), ic),
        ("axiom 2: δ ⨟ σ = δ", M.compose(delta, M.symmetry(c, c)), delta),
        (
            "axiom 3: δ ⨟ (δ ⊗ c) = δ ⨟ (c ⊗ δ)",
            M.compose(delta, M.tensor_mor(delta, ic)),
            M.compose(delta, M.tensor_mor(ic, delta)),
        ),
        ("derived: δ ⨟ (ε ⊗ c) = id", M.compose(delta, M.tensor_mor(eps, ic)), ic),
    ]
    for name, lhs, rhs in axioms:
        report.checks += 1
        if lhs != rhs:
            report.fail(name, c)
    return report


def enumerate_comonoids(M: StrictSMC, c: int, limit: int | None = None) -> list[Comonoid]:
    """Every comonoid structure on ``c``, by brute force over all ``(ε, δ)``, in lexicographic order."""
    cc = M.tensor_ob(c, c)
    check_bound(M.count(c, M.unit) * M.count(c, cc), limit, f"comonoid candidates on {c}")
    found = []
    for eps in M.hom(c, M.unit):
        for delta in M.hom(c, cc):
            K = Comonoid(c, eps, delta)
            if check_comonoid(M, K).ok:
                found.append(K)
    return found


def is_comonoid_morphism(M: StrictSMC, K1: Comonoid, K2: Comonoid, f) -> bool:
    return M.compose(f, K2.counit) == K1.counit and M.compose(K1.comult, M.tensor_mor(f, f)) == M.compose(
        f, K2.comult
    )


def tensor_comonoids(M: StrictSMC, K1: Comonoid, K2: Comonoid) -> Comonoid:
    """``(c ⊗ d, ε_c ⊗ ε_d, (δ_c ⊗ δ_d) ⨟ (c ⊗ σ_{c,d} ⊗ d))``."""
    c, d = K1.carrier, K2.carrier
    shuffle = M.tensor_all(M.identity(c), M.symmetry(c, d), M.identity(d))
    return Comonoid(
        M.tensor_ob(c, d),
        M.tensor_mor(K1.counit, K2.counit),
        M.compose(M.tensor_mor(K1.comult, K2.comult), shuffle),
    )


def comon_category(M: StrictSMC, comonoids: Sequence[Comonoid]) -> FinCategory:
    """The full subcategory of ``Comon_C`` on the given comonoids; labels ``(i, j, f)``."""
    for K in comonoids:
        report = check_comonoid(M, K)
        if not report.ok:
            raise MalformedData(f"not a comonoid: {report.violations[0][0]} on {K.carrier}")
    labels, ends = [], []
    for i, K1 in enumerate(comonoids):
        for j, K2 in enumerate(comonoids):
            for f in M.hom(K1.carrier, K2.carrier):
                if is_comonoid_morphism(M, K1, K2, f):
                    labels.append((i, j, f))
                    ends.append((i, j))
    return build_category(
        tuple(comonoids),
        labels,
        ends,
        lambda i: (i, i, M.identity(comonoids[i].carrier)),
        lambda m1, m2: (m1[0], m2[1], M.compose(m1[2], m2[2])),
    )


def cokleisli_fiber(M: StrictSMC, K: Comonoid, objects: Sequence[int]) -> FinCategory:
    """coKleisli category of ``K ⊗ -`` on ``objects``; labels ``(x, y, h)`` with ``h: c ⊗ x -> y``."""
    c = K.carrier
    labels, ends = [], []
    for a, x in enumerate(objects):
        for b, y in enumerate(objects):
            for h in M.hom(M.tensor_ob(c, x), y):
                labels.append((a, b, h))
                ends.append((a, b))

    def ident(a):
        x = objects[a]
        return (a, a, M.tensor_mor(K.counit, M.identity(x)))

    def comp(m1, m2):
        a, _, h = m1
        _, e, k = m2
        x = objects[a]
        return (a, e, M.compose_all(M.tensor_mor(K.comult, M.identity(x)), M.tensor_mor(M.identity(c), h), k))

    return build_category(tuple(objects), labels, ends, ident, comp)


def cokleisli_indexed(M: StrictSMC, comonoids: Sequence[Comonoid], objects: Sequence[int]) -> IndexedCat:
    """``coKl: Comon_Cᵒᵖ -> Cat``; reindexing along ``p: c -> d`` sends ``h`` to ``(p ⊗ x) ⨟ h``."""
    base = comon_category(M, comonoids)
    fibers = tuple(cokleisli_fiber(M, K, objects) for K in comonoids)
    reindex = []
    for f, (i, j, p) in enumerate(base.labels):
        src, tgt = fibers[j], fibers[i]
        mor_map = tuple(
            tgt.find((a, b, M.compose(M.tensor_mor(p, M.identity(objects[a])), h))) for a, b, h in src.labels
        )
        reindex.append(FunctorData(src, tgt, tuple(range(len(objects))), mor_map))
    return IndexedCat(base, fibers, tuple(reindex))


class SMCLens(NamedTuple):
    """``⟨f | f♯⟩: ⟨c | x⟩ -> ⟨d | y⟩`` with ``f`` a comonoid morphism id and ``f♯: c ⊗ y -> x``."""

    get: int
    put: Hashable
    x: int
    y: int


def smc_lens_category(
    M: StrictSMC, comonoids: Sequence[Comonoid], objects: Sequence[int], base: FinCategory | None = None
) -> FinCategory:
    """``Lens_{C,⊗}`` built directly: identity ``ε_c ⊗ x``, composite
    ``(δ_c ⊗ z) ⨟ (c ⊗ f ⊗ z) ⨟ (c ⊗ g♯) ⨟ f♯``.  Objects are ``(comonoid index, object index)``."""
    base = base if base is not None else comon_category(M, comonoids)
    lens_objects = [(i, a) for i in range(len(comonoids)) for a in range(len(objects))]
    obj_index = {o: k for k, o in enumerate(lens_objects)}
    labels, ends = [], []
    for f, (i, j, _) in enumerate(base.labels):
        c = comonoids[i].carrier
        for b, y in enumerate(objects):
            for a, x in enumerate(objects):
                for h in M.hom(M.tensor_ob(c, y), x):
                    labels.append(SMCLens(f, h, a, b))
                    ends.append((obj_index[(i, a)], obj_index[(j, b)]))

    def ident(o):
        i, a = lens_objects[o]
        K = comonoids[i]
        return SMCLens(base.identity[i], M.tensor_mor(K.counit, M.identity(objects[a])), a, a)

    def comp(m1, m2):
        i = base.dom(m1.get)
        K = comonoids[i]
        c, z = K.carrier, objects[m2.y]
        f = base.labels[m1.get][2]
        ic, iz = M.identity(c), M.identity(z)
        put = M.compose_all(
            M.tensor_mor(K.comult, iz),
            M.tensor_all(ic, f, iz),
            M.tensor_mor(ic, m2.put),
            m1.put,
        )
        return SMCLens(base.compose(m1.get, m2.get), put, m1.x, m2.y)

    return build_category(lens_objects, labels, ends, ident, comp)


def check_recover_usual(
    M: StrictSMC, comonoids: Sequence[Comonoid], objects: Sequence[int], raise_on_failure: bool = True
) -> IsoReport:
    """``Lens_coKl ≅ Lens_{C,⊗}``, identity on objects and on ``(f, f♯)`` data."""
    F = cokleisli_indexed(M, comonoids, objects)
    L = lens_category(F)
    S = smc_lens_category(M, comonoids, objects, base=F.base)
    obj_map = [S.find_object(tuple(o)) for o in L.object_labels]
    mor_map = []
    for m in L.labels:
        c = F.base.dom(m.get)
        b, a, h = F.fibers[c].labels[m.put]
        mor_map.append(S.find(SMCLens(m.get, h, a, m.y)))
    P = projection(L, F.base)
    Q = FunctorData(S, F.base, tuple(i for i, _ in S.object_labels), tuple(m.get for m in S.labels))
    report = check_isomorphism(L, S, obj_map, mor_map, "Lens_coKl ≅ Lens_{C,⊗}", over=(P, Q))
    report.counts["identical morphism ids"] = sum(1 for k, v in enumerate(mor_map) if k == v)
    if raise_on_failure:
        report.require()
    return report


def comonoid_candidates(M: StrictSMC, c: int) -> Iterator[tuple]:
    """All ``(ε, δ)`` pairs on ``c``, the search space of :func:`enumerate_comonoids`."""
    return itertools.product(M.hom(c, M.unit), M.hom(c, M.tensor_ob(c, c)))
