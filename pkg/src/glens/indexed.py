"""Strict indexed categories, Grothendieck constructions and F-lenses.

An :class:`IndexedCat` is a strict functor ``Cᵒᵖ -> Cat`` given as data: one
fiber category per base object and one reindexing functor per base morphism.
For a base morphism ``f: c -> d`` the functor ``reindex[f]`` goes
``fiber(d) -> fiber(c)``.  Setting ``covariant=True`` reads the same data as a
functor ``C -> Cat`` (``reindex[f]: fiber(c) -> fiber(d)``), which is what the
covariant Grothendieck construction consumes.

All three total categories below label their morphisms by tuples
``(f, φ, t)``: a base morphism id, a fiber morphism id, and the fiber object
that pins down the far end (``φ`` alone does not determine it when
reindexing is not injective on objects).  Enumeration is lexicographic in
``(f, φ, t)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, NamedTuple, Sequence

from .catkit import (
    FinCategory,
    FunctorData,
    IsoReport,
    LawReport,
    build_category,
    check_category_laws,
    check_functor_laws,
    check_isomorphism,
    identity_functor,
    opposite,
    opposite_functor,
    terminal_category,
)
from .errors import LaxatorIncoherent, MalformedData, check_bound


class LensObject(NamedTuple):
    base_obj: int
    fiber_obj: int


class LensMorphism(NamedTuple):
    """``⟨get | put⟩: ⟨c | x⟩ -> ⟨d | y⟩`` with ``put: reindex[get](y) -> x`` in ``fiber(c)``."""

    get: int
    put: int
    y: int


@dataclass(frozen=True, eq=True)
class IndexedCat:
    base: FinCategory
    fibers: tuple[FinCategory, ...]
    reindex: tuple[FunctorData, ...]
    covariant: bool = False

    def fiber(self, c: int) -> FinCategory:
        return self.fibers[c]

    def along(self, f: int) -> FunctorData:
        return self.reindex[f]

    def objects(self) -> list[LensObject]:
        return [LensObject(c, x) for c in range(self.base.n_objects) for x in range(self.fibers[c].n_objects)]

    def to_json(self) -> dict:
        return {
            "base": self.base.to_json(),
            "fibers": [fib.to_json() for fib in self.fibers],
            "reindex": [
                {"mor": f, "obj_map": list(R.obj_map), "mor_map": list(R.mor_map)}
                for f, R in enumerate(self.reindex)
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> IndexedCat:
        base = FinCategory.from_json(data["base"])
        fibers = tuple(FinCategory.from_json(fb) for fb in data["fibers"])
        if len(fibers) != base.n_objects:
            raise MalformedData(f"{len(fibers)} fibers for {base.n_objects} base objects")
        entries = {int(r["mor"]): r for r in data["reindex"]}
        reindex = []
        for f, (c, d) in enumerate(base.morphisms):
            if f not in entries:
                raise MalformedData(f"no reindexing functor for base morphism {f}")
            r = entries[f]
            reindex.append(
                FunctorData(fibers[d], fibers[c], tuple(r["obj_map"]), tuple(r["mor_map"]))
            )
        return cls(base, fibers, tuple(reindex))


def _source_target(F: IndexedCat, f: int) -> tuple[int, int]:
    """Fiber indices ``(src, tgt)`` of the reindexing functor along ``f``."""
    c, d = F.base.morphisms[f]
    return (c, d) if F.covariant else (d, c)


def check_indexed_laws(F: IndexedCat, fibers: bool = True) -> LawReport:
    """Exhaustively check strict functoriality of ``F`` (and, optionally, every fiber)."""
    report = LawReport("indexed category laws")
    B = F.base
    if len(F.fibers) != B.n_objects or len(F.reindex) != B.n_morphisms:
        raise MalformedData("fiber/reindex counts do not match the base")
    report.merge(check_category_laws(B), "base: ")
    if fibers:
        for c, fib in enumerate(F.fibers):
            report.merge(check_category_laws(fib), f"fiber {c}: ")
    for f, R in enumerate(F.reindex):
        src, tgt = _source_target(F, f)
        report.checks += 1
        if R.source is not F.fibers[src] and R.source != F.fibers[src]:
            report.fail("reindex source", f)
            continue
        if R.target is not F.fibers[tgt] and R.target != F.fibers[tgt]:
            report.fail("reindex target", f)
            continue
        report.merge(check_functor_laws(R), f"reindex {f}: ")
    if not report.ok:
        return report
    for c in range(B.n_objects):
        R = F.reindex[B.identity[c]]
        fib = F.fibers[c]
        for x in range(fib.n_objects):
            report.checks += 1
            if R.obj_map[x] != x:
                report.fail("reindex(id) on objects", c, x)
        for m in range(fib.n_morphisms):
            report.checks += 1
            if R.mor_map[m] != m:
                report.fail("reindex(id) on morphisms", c, m)
    for f, g in B.composable_pairs():
        fg = B.compose(f, g)
        # contravariant: reindex(f ⨟ g) = reindex(g) then reindex(f)
        first, second = (F.reindex[f], F.reindex[g]) if F.covariant else (F.reindex[g], F.reindex[f])
        R = F.reindex[fg]
        for y, y1 in enumerate(first.obj_map):
            report.checks += 1
            if R.obj_map[y] != second.obj_map[y1]:
                report.fail("strict composition on objects", f, g, y)
        for m, m1 in enumerate(first.mor_map):
            report.checks += 1
            if R.mor_map[m] != second.mor_map[m1]:
                report.fail("strict composition on morphisms", f, g, m)
    return report


def constant_indexed(base: FinCategory, fiber: FinCategory | None = None) -> IndexedCat:
    """Every fiber is ``fiber`` (default: the terminal category), every reindexing the identity."""
    fiber = fiber if fiber is not None else terminal_category()
    ident = identity_functor(fiber)
    return IndexedCat(base, (fiber,) * base.n_objects, (ident,) * base.n_morphisms)


def pointwise_opposite(F: IndexedCat) -> IndexedCat:
    ops = tuple(opposite(fib) for fib in F.fibers)
    reindex = []
    for f, R in enumerate(F.reindex):
        src, tgt = _source_target(F, f)
        reindex.append(FunctorData(ops[src], ops[tgt], R.obj_map, R.mor_map))
    return IndexedCat(F.base, ops, tuple(reindex), F.covariant)


def as_covariant(F: IndexedCat) -> IndexedCat:
    """Read ``F: Cᵒᵖ -> Cat`` as a covariant functor on the base ``Cᵒᵖ``."""
    if F.covariant:
        raise MalformedData("indexed category is already covariant")
    return IndexedCat(opposite(F.base), F.fibers, F.reindex, covariant=True)


def _preimages(R: FunctorData) -> dict[int, list[int]]:
    pre: dict[int, list[int]] = {}
    for y, fy in enumerate(R.obj_map):
        pre.setdefault(fy, []).append(y)
    return pre


def groth_cov(F: IndexedCat, limit: int | None = None) -> FinCategory:
    """Covariant Grothendieck construction of a covariant ``F``.

    ``(c, x) -> (d, y)`` is ``(f, f♯)`` with ``f♯: F(f)(x) -> y`` in ``fiber(d)``;
    labels are ``(f, f♯, x)``.
    """
    if not F.covariant:
        raise MalformedData("groth_cov needs a covariant indexed category; see as_covariant")
    B = F.base
    objects = F.objects()
    obj_index = {o: k for k, o in enumerate(objects)}
    labels, ends = [], []
    for f, (c, d) in enumerate(B.morphisms):
        R = F.reindex[f]
        pre = _preimages(R)
        fib_d = F.fibers[d]
        for phi, (a, b) in enumerate(fib_d.morphisms):
            for x in pre.get(a, ()):
                labels.append((f, phi, x))
                ends.append((obj_index[(c, x)], obj_index[(d, b)]))
        check_bound(len(labels), limit, "groth_cov morphisms")

    def ident(o):
        c, x = objects[o]
        return (B.identity[c], F.fibers[c].identity[x], x)

    def comp(m1, m2):
        f, phi, x = m1
        g, psi, _ = m2
        e = B.cod(g)
        return (B.compose(f, g), F.fibers[e].compose(F.reindex[g].mor_map[phi], psi), x)

    return build_category(objects, labels, ends, ident, comp, limit)


def groth_contra(F: IndexedCat, limit: int | None = None) -> FinCategory:
    """Contravariant Grothendieck construction.

    ``(c, x) -> (d, y)`` is ``(f, f♯)`` with ``f♯: x -> F(f)(y)`` in ``fiber(c)``;
    labels are ``(f, f♯, y)``.
    """
    if F.covariant:
        raise MalformedData("groth_contra needs a contravariant indexed category")
    B = F.base
    objects = F.objects()
    obj_index = {o: k for k, o in enumerate(objects)}
    labels, ends = [], []
    for f, (c, d) in enumerate(B.morphisms):
        pre = _preimages(F.reindex[f])
        for phi, (a, b) in enumerate(F.fibers[c].morphisms):
            for y in pre.get(b, ()):
                labels.append((f, phi, y))
                ends.append((obj_index[(c, a)], obj_index[(d, y)]))
        check_bound(len(labels), limit, "groth_contra morphisms")

    def ident(o):
        c, x = objects[o]
        return (B.identity[c], F.fibers[c].identity[x], x)

    def comp(m1, m2):
        f, phi, _ = m1
        g, psi, z = m2
        c = B.dom(f)
        return (B.compose(f, g), F.fibers[c].compose(phi, F.reindex[f].mor_map[psi]), z)

    return build_category(objects, labels, ends, ident, comp, limit)


class LensCat:
    """The category of F-lenses, available lazily.

    ``⟨f | f♯⟩ ⨟ ⟨g | g♯⟩ = ⟨f ⨟ g | reindex(f)(g♯) ⨟ f♯⟩``.  Use :meth:`build`
    to tabulate it as a :class:`FinCategory`.
    """

    def __init__(self, F: IndexedCat):
        if F.covariant:
            raise MalformedData("lens category needs a contravariant indexed category")
        self.F = F
        self.base = F.base
        self._pre = [None] * F.base.n_morphisms

    def _preimage(self, f: int) -> dict[int, list[int]]:
        if self._pre[f] is None:
            self._pre[f] = _preimages(self.F.reindex[f])
        return self._pre[f]

    def objects(self) -> list[LensObject]:
        return self.F.objects()

    def source(self, m: LensMorphism) -> LensObject:
        c = self.base.dom(m.get)
        return LensObject(c, self.F.fibers[c].cod(m.put))

    def target(self, m: LensMorphism) -> LensObject:
        return LensObject(self.base.cod(m.get), m.y)

    def identity(self, o: LensObject) -> LensMorphism:
        c, x = o
        return LensMorphism(self.base.identity[c], self.F.fibers[c].identity[x], x)

    def compose(self, m1: LensMorphism, m2: LensMorphism) -> LensMorphism:
        f, phi, y = m1
        g, psi, z = m2
        if self.base.cod(f) != self.base.dom(g) or y != self.F.fibers[self.base.dom(g)].cod(psi):
            raise MalformedData(f"lens morphisms {m1} and {m2} are not composable")
        c = self.base.dom(f)
        put = self.F.fibers[c].compose(self.F.reindex[f].mor_map[psi], phi)
        return LensMorphism(self.base.compose(f, g), put, z)

    def hom(self, a: LensObject, b: LensObject) -> list[LensMorphism]:
        (c, x), (d, y) = a, b
        out = []
        fx = self.F.fibers[c]
        for f in self.base.hom(c, d):
            fy = self.F.reindex[f].obj_map[y]
            for phi in fx.hom(fy, x):
                out.append(LensMorphism(f, phi, y))
        out.sort()
        return out

    def morphisms(self) -> list[LensMorphism]:
        out = []
        for f, (c, d) in enumerate(self.base.morphisms):
            pre = self._preimage(f)
            for phi, (a, _) in enumerate(self.F.fibers[c].morphisms):
                for y in pre.get(a, ()):
                    out.append(LensMorphism(f, phi, y))
        return out

    def build(self, limit: int | None = None) -> FinCategory:
        objects = self.objects()
        obj_index = {o: k for k, o in enumerate(objects)}
        labels = self.morphisms()
        check_bound(len(labels), limit, "lens category morphisms")
        ends = [(obj_index[self.source(m)], obj_index[self.target(m)]) for m in labels]
        return build_category(
            objects, labels, ends, lambda o: self.identity(objects[o]), self.compose, limit
        )


def lens_category(F: IndexedCat, limit: int | None = None) -> FinCategory:
    """``Lens_F`` built directly from the explicit hom-set formula; labels are :class:`LensMorphism`."""
    return LensCat(F).build(limit)


def projection(total: FinCategory, base: FinCategory) -> FunctorData:
    """The functor ``π: total -> base`` reading the base part off object and morphism labels."""
    return FunctorData(
        total,
        base,
        tuple(o[0] for o in total.object_labels),
        tuple(m[0] for m in total.labels),
    )


def check_tfae_iso(F: IndexedCat, raise_on_failure: bool = True) -> IsoReport:
    """Build ``(∫F)ᵒᵖ``, the contravariant construction on ``Fᵖ`` and ``Lens_F``; check all pairs isomorphic over the base."""
    B = F.base
    covF = as_covariant(F)
    pi_one = opposite_functor(projection(groth_cov(covF), covF.base))
    one = pi_one.source
    two = groth_contra(pointwise_opposite(F))
    three = lens_category(F)
    pi_two = projection(two, B)
    pi_three = projection(three, B)

    report = IsoReport("tfae isomorphism")
    report.counts = {
        "objects": three.n_objects,
        "morphisms": three.n_morphisms,
        "base morphisms": B.n_morphisms,
    }
    # The three constructions share (f, f♯, t) labels; the isomorphisms are identity on that data.
    sides = [("(∫F)ᵒᵖ", one, pi_one), ("∫Fᵖ", two, pi_two), ("Lens_F", three, pi_three)]
    for (n1, C1, P1), (n2, C2, P2) in itertools.combinations(sides, 2):
        try:
            obj_map = [C2.find_object(o) for o in C1.object_labels]
            mor_map = [C2.find(m) for m in C1.labels]
        except KeyError:
            obj_map, mor_map = [], []
        sub = check_isomorphism(C1, C2, obj_map, mor_map, f"{n1} ≅ {n2}", over=(P1, P2))
        report.merge(sub, f"{n1} ≅ {n2}: ")
    for name, C, P in sides:
        report.merge(check_functor_laws(P), f"π on {name}: ")
    if raise_on_failure:
        report.require()
    return report


# -- monoidal structure -----------------------------------------------------


@dataclass(frozen=True)
class BaseMonoidal:
    """A (possibly partial) strict monoidal structure on a tabulated base.

    ``tensor_ob``/``tensor_mor`` return ``None`` when the result lies outside
    the tabulated base.
    """

    unit: int
    tensor_ob: Callable[[int, int], int | None]
    tensor_mor: Callable[[int, int], int | None]


@dataclass(frozen=True)
class Laxator:
    """``φ: F(c) × F(d) -> F(c ⊗ d)`` on objects and morphisms, plus the unit object in ``F(I)``."""

    unit: int
    ob: Callable[[int, int, int, int], int]
    mor: Callable[[int, int, int, int], int]


def check_laxator(
    F: IndexedCat, M: BaseMonoidal, phi: Laxator, objects: Sequence[int] | None = None
) -> LawReport:
    """Functoriality of each ``φ_{c,d}`` and its strict naturality with respect to reindexing."""
    report = LawReport("laxator coherence")
    B = F.base
    objects = range(B.n_objects) if objects is None else objects
    for c, d in itertools.product(objects, repeat=2):
        cd = M.tensor_ob(c, d)
        if cd is None:
            continue
        Fc, Fd, Fcd = F.fibers[c], F.fibers[d], F.fibers[cd]
        for x, y in itertools.product(range(Fc.n_objects), range(Fd.n_objects)):
            report.checks += 1
            if phi.mor(c, d, Fc.identity[x], Fd.identity[y]) != Fcd.identity[phi.ob(c, d, x, y)]:
                report.fail("φ preserves identities", c, d, x, y)
        for (a1, a2), (b1, b2) in itertools.product(Fc.composable_pairs(), Fd.composable_pairs()):
            report.checks += 1
            lhs = phi.mor(c, d, Fc.compose(a1, a2), Fd.compose(b1, b2))
            rhs = Fcd.compose(phi.mor(c, d, a1, b1), phi.mor(c, d, a2, b2))
            if lhs != rhs:
                report.fail("φ preserves composition", c, d, a1, a2, b1, b2)
    obj_set = set(objects)
    for f, g in itertools.product(range(B.n_morphisms), repeat=2):
        (c, c2), (d, d2) = B.morphisms[f], B.morphisms[g]
        if not {c, c2, d, d2} <= obj_set:
            continue
        fg = M.tensor_mor(f, g)
        if fg is None:
            continue
        Rf, Rg, Rfg = F.reindex[f], F.reindex[g], F.reindex[fg]
        Fc2, Fd2 = F.fibers[c2], F.fibers[d2]
        for y, y2 in itertools.product(range(Fc2.n_objects), range(Fd2.n_objects)):
            report.checks += 1
            if Rfg.obj_map[phi.ob(c2, d2, y, y2)] != phi.ob(c, d, Rf.obj_map[y], Rg.obj_map[y2]):
                report.fail("naturality on objects", f, g, y, y2)
        for a, b in itertools.product(range(Fc2.n_morphisms), range(Fd2.n_morphisms)):
            report.checks += 1
            if Rfg.mor_map[phi.mor(c2, d2, a, b)] != phi.mor(c, d, Rf.mor_map[a], Rg.mor_map[b]):
                report.fail("naturality on morphisms", f, g, a, b)
    return report


class LensTensor:
    """``⟨c | x⟩ ⊗ ⟨d | y⟩ = ⟨c ⊗ d | φ(x, y)⟩`` on the lens category of ``F``."""

    def __init__(self, F: IndexedCat, M: BaseMonoidal, phi: Laxator, objects: Sequence[int] | None = None):
        self.lens = LensCat(F)
        self.F, self.M, self.phi = F, M, phi
        self.coherence = check_laxator(F, M, phi, objects)
        if not self.coherence.ok:
            law, witness = self.coherence.violations[0]
            raise LaxatorIncoherent(f"{law} fails at {witness}")

    @property
    def unit(self) -> LensObject:
        return LensObject(self.M.unit, self.phi.unit)

    def ob(self, a: LensObject, b: LensObject) -> LensObject | None:
        cd = self.M.tensor_ob(a.base_obj, b.base_obj)
        if cd is None:
            return None
        return LensObject(cd, self.phi.ob(a.base_obj, b.base_obj, a.fiber_obj, b.fiber_obj))

    def mor(self, m1: LensMorphism, m2: LensMorphism) -> LensMorphism | None:
        fg = self.M.tensor_mor(m1.get, m2.get)
        if fg is None:
            return None
        B = self.F.base
        c, d = B.dom(m1.get), B.dom(m2.get)
        c2, d2 = B.cod(m1.get), B.cod(m2.get)
        return LensMorphism(fg, self.phi.mor(c, d, m1.put, m2.put), self.phi.ob(c2, d2, m1.y, m2.y))


def lens_tensor(F: IndexedCat, M: BaseMonoidal, phi: Laxator, objects: Sequence[int] | None = None) -> LensTensor:
    return LensTensor(F, M, phi, objects)


def check_interchange(T: LensTensor, objects: Sequence[LensObject]) -> LawReport:
    """``(α ⊗ β) ⨟ (γ ⊗ δ) = (α ⨟ γ) ⊗ (β ⨟ δ)`` and ``id ⊗ id = id`` over the given lens objects."""
    report = LawReport("lens tensor interchange")
    L = T.lens
    homs = {(a, b): L.hom(a, b) for a in objects for b in objects}
    pairs = [
        (a1, a2)
        for (x, y), hs in homs.items()
        for a1 in hs
        for z in objects
        for a2 in homs[(y, z)]
    ]
    for a in objects:
        for b in objects:
            ab = T.ob(a, b)
            if ab is None:
                continue
            report.checks += 1
            if T.mor(L.identity(a), L.identity(b)) != L.identity(ab):
                report.fail("identity", a, b)
    for (al, ga), (be, de) in itertools.product(pairs, repeat=2):
        left1, left2 = T.mor(al, be), T.mor(ga, de)
        if left1 is None or left2 is None:
            continue
        report.checks += 1
        lhs = L.compose(left1, left2)
        rhs = T.mor(L.compose(al, ga), L.compose(be, de))
        if lhs != rhs:
            report.fail("interchange", al, ga, be, de)
    return report
