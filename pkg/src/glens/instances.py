"""Concrete lens categories over finite sets.

* dependent lenses: the slice indexed category, with slice objects stored as
  fiber families so that reindexing is strictly functorial;
* classical lenses ``(get: c -> d, put: c × y -> x)`` composed by the
  string-diagram formula, and prisms, the same machinery run on ``(FinSetᵒᵖ, +)``;
* the coslice indexed category, whose lens category is the twisted arrow category.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import cache, lru_cache
from typing import Iterator, NamedTuple, Sequence

from . import finset
from .catkit import (
    FinCategory,
    FunctorData,
    IsoReport,
    LawReport,
    build_category,
    check_isomorphism,
    finset_category,
    opposite,
    twisted_arrow,
)
from .errors import CodomainMismatch, InterfaceMismatch, MalformedData, check_bound
from .finset import FinFn
from .indexed import BaseMonoidal, IndexedCat, Laxator, LensCat, LensMorphism, LensObject, lens_category

# -- fiber families ---------------------------------------------------------


@dataclass(frozen=True)
class FiberFamily:
    """A set over ``base_size`` in fiber form: ``fibers[i]`` is the size of the fiber over ``i``."""

    base_size: int
    fibers: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "fibers", tuple(int(n) for n in self.fibers))
        if len(self.fibers) != self.base_size:
            raise MalformedData(f"family over {self.base_size} has {len(self.fibers)} fibers")
        if any(n < 0 for n in self.fibers):
            raise MalformedData("fiber sizes must be non-negative")

    @classmethod
    def of(cls, fibers: Sequence[int]) -> FiberFamily:
        return cls(len(fibers), tuple(fibers))

    @property
    def total(self) -> int:
        return sum(self.fibers)

    def to_json(self) -> dict:
        return {"base": self.base_size, "fibers": list(self.fibers)}

    @classmethod
    def from_json(cls, data: dict) -> FiberFamily:
        return cls(int(data["base"]), tuple(data["fibers"]))


def reindex_family(f: FinFn, X: FiberFamily) -> FiberFamily:
    """Pull the family ``X`` over ``f.cod`` back along ``f``."""
    if X.base_size != f.cod:
        raise CodomainMismatch(f"family over {X.base_size} cannot be pulled back along {f!r}")
    return FiberFamily(f.dom, tuple(X.fibers[t] for t in f.table))


def family_maps(X: Sequence[int], Y: Sequence[int]) -> Iterator[tuple[FinFn, ...]]:
    """All family morphisms ``X -> Y`` (componentwise functions), lexicographic by table."""
    return itertools.product(*(list(finset.all_maps(a, b)) for a, b in zip(X, Y)))


def count_family_maps(X: Sequence[int], Y: Sequence[int]) -> int:
    return math.prod(b**a for a, b in zip(X, Y))


def bundle_to_family(p: FinFn) -> FiberFamily:
    counts = [0] * p.cod
    for t in p.table:
        counts[t] += 1
    return FiberFamily(p.cod, tuple(counts))


def family_to_bundle(X: FiberFamily) -> FinFn:
    """Concatenate the fibers in index order: elements over ``i`` precede those over ``i + 1``."""
    table = tuple(i for i, n in enumerate(X.fibers) for _ in range(n))
    return FinFn(len(table), X.base_size, table)


def sorting_bijection(p: FinFn) -> FinFn:
    """The bijection ``σ`` with ``σ ⨟ family_to_bundle(bundle_to_family(p)) = p``."""
    order = sorted(range(p.dom), key=lambda k: (p.table[k], k))
    position = [0] * p.dom
    for pos, k in enumerate(order):
        position[k] = pos
    return FinFn(p.dom, p.dom, tuple(position))


def pullback_reindex(f: FinFn, p: FinFn) -> FinFn:
    """Bundle-form reindexing: the leg ``b ×_c x -> b`` of the pullback of ``p`` along ``f``."""
    return finset.pullback(f, p).p1


def dep_sum(f: FinFn, X: FiberFamily) -> FiberFamily:
    """Σ_f X: fiber over ``j`` is the sum of the fibers over ``f⁻¹(j)``."""
    if X.base_size != f.dom:
        raise CodomainMismatch(f"family over {X.base_size} does not sit over dom {f.dom}")
    out = [0] * f.cod
    for i, j in enumerate(f.table):
        out[j] += X.fibers[i]
    return FiberFamily(f.cod, tuple(out))


def dep_prod(f: FinFn, X: FiberFamily) -> FiberFamily:
    """Π_f X: fiber over ``j`` is the product of the fibers over ``f⁻¹(j)``; empty product is 1."""
    if X.base_size != f.dom:
        raise CodomainMismatch(f"family over {X.base_size} does not sit over dom {f.dom}")
    out = [1] * f.cod
    for i, j in enumerate(f.table):
        out[j] *= X.fibers[i]
    return FiberFamily(f.cod, tuple(out))


def _preimage(f: FinFn, j: int) -> list[int]:
    return [i for i, t in enumerate(f.table) if t == j]


def sum_transpose(f: FinFn, X: FiberFamily, Y: FiberFamily, psi: Sequence[FinFn]) -> tuple[FinFn, ...]:
    """``hom(Σ_f X, Y) -> hom(X, f* Y)``: restrict each ``ψ_j`` to the summands of its fiber."""
    out = []
    offsets = {}
    for i, j in enumerate(f.table):
        start = offsets.get(j, 0)
        offsets[j] = start + X.fibers[i]
        comp = psi[j]
        out.append(FinFn(X.fibers[i], Y.fibers[j], comp.table[start:start + X.fibers[i]]))
    return tuple(out)


def sum_untranspose(f: FinFn, X: FiberFamily, Y: FiberFamily, phi: Sequence[FinFn]) -> tuple[FinFn, ...]:
    """Inverse of :func:`sum_transpose`: concatenate components over each fiber of ``f``."""
    return tuple(
        FinFn(
            sum(X.fibers[i] for i in _preimage(f, j)),
            Y.fibers[j],
            tuple(t for i in _preimage(f, j) for t in phi[i].table),
        )
        for j in range(f.cod)
    )


def _encode(digits: Sequence[int], radices: Sequence[int]) -> int:
    k = 0
    for d, r in zip(digits, radices):
        k = k * r + d
    return k


def _decode(k: int, radices: Sequence[int]) -> list[int]:
    digits = []
    for r in reversed(radices):
        k, d = divmod(k, r)
        digits.append(d)
    return digits[::-1]


def prod_transpose(f: FinFn, X: FiberFamily, Y: FiberFamily, phi: Sequence[FinFn]) -> tuple[FinFn, ...]:
    """``hom(f* Y, X) -> hom(Y, Π_f X)``: tuple up the components over each fiber (row-major)."""
    PX = dep_prod(f, X)
    out = []
    for j in range(f.cod):
        pre = _preimage(f, j)
        radices = [X.fibers[i] for i in pre]
        table = tuple(_encode([phi[i].table[y] for i in pre], radices) for y in range(Y.fibers[j]))
        out.append(FinFn(Y.fibers[j], PX.fibers[j], table))
    return tuple(out)


def prod_untranspose(f: FinFn, X: FiberFamily, Y: FiberFamily, psi: Sequence[FinFn]) -> tuple[FinFn, ...]:
    """Inverse of :func:`prod_transpose`: project each tuple onto its coordinates."""
    out: list[FinFn | None] = [None] * f.dom
    for j in range(f.cod):
        pre = _preimage(f, j)
        radices = [X.fibers[i] for i in pre]
        decoded = [_decode(t, radices) for t in psi[j].table]
        for pos, i in enumerate(pre):
            out[i] = FinFn(Y.fibers[j], X.fibers[i], tuple(d[pos] for d in decoded))
    return tuple(out)


def check_adjoint_triple(max_size: int = 2) -> LawReport:
    """Σ_f ⊣ f* ⊣ Π_f as explicit hom-set bijections, for every ``f`` and all families with entries ≤ max_size."""
    report = LawReport("adjoint triple")
    fams = {n: [FiberFamily(n, t) for t in itertools.product(range(max_size + 1), repeat=n)] for n in range(max_size + 1)}
    for c, d in itertools.product(range(max_size + 1), repeat=2):
        for f in finset.all_maps(c, d):
            for X in fams[c]:
                SX, PX = dep_sum(f, X), dep_prod(f, X)
                for Y in fams[d]:
                    fY = reindex_family(f, Y)
                    # Σ_f ⊣ f*
                    left = list(family_maps(SX.fibers, Y.fibers))
                    right = set(family_maps(X.fibers, fY.fibers))
                    images = {sum_transpose(f, X, Y, psi) for psi in left}
                    report.checks += 1
                    if len(left) != len(right) or images != right:
                        report.fail("Σ ⊣ f* bijection", f, X.fibers, Y.fibers)
                    for phi in right:
                        report.checks += 1
                        if sum_transpose(f, X, Y, sum_untranspose(f, X, Y, phi)) != phi:
                            report.fail("Σ ⊣ f* round trip", f, X.fibers, Y.fibers)
                    # f* ⊣ Π_f
                    left = list(family_maps(fY.fibers, X.fibers))
                    right = set(family_maps(Y.fibers, PX.fibers))
                    images = {prod_transpose(f, X, Y, phi) for phi in left}
                    report.checks += 1
                    if len(left) != len(right) or images != right:
                        report.fail("f* ⊣ Π bijection", f, X.fibers, Y.fibers)
                    for phi in left:
                        report.checks += 1
                        if prod_untranspose(f, X, Y, prod_transpose(f, X, Y, phi)) != phi:
                            report.fail("f* ⊣ Π round trip", f, X.fibers, Y.fibers)
    return report


# -- the slice indexed category --------------------------------------------


def family_category(c: int, fiber_max: int) -> FinCategory:
    """Families over ``c`` with fiber sizes ``<= fiber_max``; labels ``(X, Y, tables)``."""
    objects = list(itertools.product(range(fiber_max + 1), repeat=c))
    labels, ends = [], []
    for a, X in enumerate(objects):
        for b, Y in enumerate(objects):
            for comps in family_maps(X, Y):
                labels.append((X, Y, tuple(g.table for g in comps)))
                ends.append((a, b))

    def comp(m1, m2):
        X, _, t1 = m1
        _, Z, t2 = m2
        return (X, Z, tuple(tuple(b[k] for k in a) for a, b in zip(t1, t2)))

    def ident(o):
        X = objects[o]
        return (X, X, tuple(tuple(range(n)) for n in X))

    return build_category(objects, labels, ends, ident, comp)


def slice_indexed(
    max_size: int | None = None,
    fiber_max: int | None = None,
    sizes: Sequence[int] | None = None,
    limit: int | None = None,
) -> IndexedCat:
    """Dependent-lens indexed category over finite sets.

    The base is finite sets of the given sizes (default ``0..max_size``); the
    fiber over ``c`` is families over ``c`` with fiber sizes at most
    ``fiber_max`` (default ``max_size``).  Reindexing along ``f: b -> c`` sends
    ``(X_i)_{i<c}`` to ``(X_{f(i)})_{i<b}``.
    """
    base = finset_category(max_size, sizes, limit)
    sizes = base.object_labels
    if fiber_max is None:
        fiber_max = max(sizes) if max_size is None else max_size
    total = sum(count_family_maps(X, Y) for n in sizes for X in itertools.product(range(fiber_max + 1), repeat=n)
                for Y in itertools.product(range(fiber_max + 1), repeat=n))
    check_bound(total, limit, "slice fiber morphisms")
    fibers = tuple(family_category(n, fiber_max) for n in sizes)
    reindex = []
    for f, lab in enumerate(base.labels):
        c, d = base.morphisms[f]
        src, tgt = fibers[d], fibers[c]
        t = lab.table
        obj_map = tuple(tgt.find_object(tuple(X[k] for k in t)) for X in src.object_labels)
        mor_map = tuple(
            tgt.find((tuple(X[k] for k in t), tuple(Y[k] for k in t), tuple(tabs[k] for k in t)))
            for X, Y, tabs in src.labels
        )
        reindex.append(FunctorData(src, tgt, obj_map, mor_map))
    return IndexedCat(base, fibers, tuple(reindex))


def slice_monoidal(F: IndexedCat) -> tuple[BaseMonoidal, Laxator]:
    """Cartesian product on the base and ``φ((X_i), (Y_j)) = (X_i × Y_j)`` on families.

    Partial: defined where the product sizes are present in ``F``.
    """
    B = F.base

    def tensor_ob(c, d):
        try:
            return B.find_object(B.object_labels[c] * B.object_labels[d])
        except KeyError:
            return None

    def tensor_mor(f, g):
        try:
            return B.find(finset.tensor(B.labels[f], B.labels[g]))
        except KeyError:
            return None

    @cache
    def lax_ob(c, d, x, y):
        cd = tensor_ob(c, d)
        X, Y = F.fibers[c].object_labels[x], F.fibers[d].object_labels[y]
        return F.fibers[cd].find_object(tuple(a * b for a in X for b in Y))

    @cache
    def lax_mor(c, d, a, b):
        cd = tensor_ob(c, d)
        X1, X2, s = F.fibers[c].labels[a]
        Y1, Y2, t = F.fibers[d].labels[b]
        # componentwise product of the fiber maps, row-major as in finset.tensor
        tables = tuple(
            tuple(u * m2 + v for u in p for v in q)
            for p in s
            for q, m2 in zip(t, Y2)
        )
        return F.fibers[cd].find(
            (tuple(u * v for u in X1 for v in Y1), tuple(u * v for u in X2 for v in Y2), tables)
        )

    one = B.find_object(1)
    M = BaseMonoidal(one, tensor_ob, tensor_mor)
    return M, Laxator(F.fibers[one].find_object((1,)), lax_ob, lax_mor)


# -- generic lenses in a cartesian category -----------------------------------


class Cartesian:
    """Finite sets with a strict cartesian structure, used by the lens formula.

    Morphisms are :class:`FinFn` values, possibly read in the opposite direction.
    """

    name = "abstract"

    def hom(self, a: int, b: int) -> Iterator[FinFn]:
        raise NotImplementedError

    def count(self, a: int, b: int) -> int:
        raise NotImplementedError

    def compose(self, f: FinFn, g: FinFn) -> FinFn:
        raise NotImplementedError

    def identity(self, a: int) -> FinFn:
        return finset.identity(a)

    def hom_shape(self, a: int, b: int) -> tuple[int, int]:
        """``(dom, cod)`` of the underlying function of a morphism ``a -> b``."""
        raise NotImplementedError

    def times_ob(self, a: int, b: int) -> int:
        raise NotImplementedError

    def times(self, f: FinFn, g: FinFn) -> FinFn:
        raise NotImplementedError

    def diagonal(self, c: int) -> FinFn:
        raise NotImplementedError

    def terminal(self, c: int) -> FinFn:
        raise NotImplementedError

    def compose_all(self, *fs: FinFn) -> FinFn:
        out = fs[0]
        for g in fs[1:]:
            out = self.compose(out, g)
        return out


class FinSetTimes(Cartesian):
    """``(FinSet, ×, 1)``."""

    name = "finset-cartesian"

    def hom(self, a, b):
        return finset.all_maps(a, b)

    def count(self, a, b):
        return b**a

    def hom_shape(self, a, b):
        return (a, b)

    def compose(self, f, g):
        return finset.compose(f, g)

    def times_ob(self, a, b):
        return a * b

    def times(self, f, g):
        return finset.tensor(f, g)

    def diagonal(self, c):
        return finset.diagonal(c)

    def terminal(self, c):
        return finset.terminal(c)


class FinSetOpPlus(Cartesian):
    """``(FinSetᵒᵖ, +, 0)``: a morphism ``a -> b`` is a function ``b -> a``."""

    name = "finset-op-cocartesian"

    def hom(self, a, b):
        return finset.all_maps(b, a)

    def count(self, a, b):
        return a**b

    def hom_shape(self, a, b):
        return (b, a)

    def compose(self, f, g):
        return finset.compose(g, f)

    def times_ob(self, a, b):
        return a + b

    def times(self, f, g):
        return finset.cosum(f, g)

    def diagonal(self, c):
        return finset.codiagonal(c)

    def terminal(self, c):
        return finset.initial(c)


FINSET_TIMES = FinSetTimes()
FINSET_OP_PLUS = FinSetOpPlus()


def lens_identity_put(K: Cartesian, c: int, x: int) -> FinFn:
    """``ε_c × x``."""
    return K.times(K.terminal(c), K.identity(x))


def lens_compose_put(K: Cartesian, c: int, z: int, f: FinFn, f_put: FinFn, g_put: FinFn) -> FinFn:
    """``(δ_c × z) ⨟ (c × f × z) ⨟ (c × g♯) ⨟ f♯``."""
    return K.compose_all(
        K.times(K.diagonal(c), K.identity(z)),
        K.times(K.times(K.identity(c), f), K.identity(z)),
        K.times(K.identity(c), g_put),
        f_put,
    )


class Bimorphic(NamedTuple):
    """A lens ``⟨c | x⟩ -> ⟨d | y⟩`` in a cartesian category, with its ends spelled out."""

    c: int
    x: int
    d: int
    y: int
    get: FinFn
    put: FinFn


def generic_lens_category(K: Cartesian, max_size: int, limit: int | None = None) -> FinCategory:
    """``Lens_{K}`` on objects ``⟨c | x⟩`` with ``c, x <= max_size``; labels are :class:`Bimorphic`."""
    objects = list(itertools.product(range(max_size + 1), repeat=2))
    total = sum(K.count(c, d) * K.count(K.times_ob(c, y), x) for (c, x) in objects for (d, y) in objects)
    check_bound(total, limit, "lens category morphisms")
    labels, ends = [], []
    for a, (c, x) in enumerate(objects):
        for b, (d, y) in enumerate(objects):
            for get in K.hom(c, d):
                for put in K.hom(K.times_ob(c, y), x):
                    labels.append(Bimorphic(c, x, d, y, get, put))
                    ends.append((a, b))

    def ident(o):
        c, x = objects[o]
        return Bimorphic(c, x, c, x, K.identity(c), lens_identity_put(K, c, x))

    def comp(m1, m2):
        put = lens_compose_put(K, m1.c, m2.y, m1.get, m1.put, m2.put)
        return Bimorphic(m1.c, m1.x, m2.d, m2.y, K.compose(m1.get, m2.get), put)

    return build_category(objects, labels, ends, ident, comp, limit)


# -- classical lenses ----------------------------------------------------------


@dataclass(frozen=True)
class ClassicLensMor:
    """``⟨get | put⟩: ⟨c | x⟩ -> ⟨d | y⟩`` with ``get: c -> d`` and ``put: c × y -> x``.

    ``y`` is stored because it cannot be recovered from ``put`` when ``c = 0``.
    """

    get: FinFn
    put: FinFn
    y: int

    def __post_init__(self):
        if self.put.dom != self.get.dom * self.y:
            raise MalformedData(f"put has domain {self.put.dom}, expected {self.get.dom}×{self.y}")

    @property
    def source(self) -> tuple[int, int]:
        return (self.get.dom, self.put.cod)

    @property
    def target(self) -> tuple[int, int]:
        return (self.get.cod, self.y)

    def to_json(self) -> dict:
        return {"get": self.get.to_json(), "put": self.put.to_json(), "y": self.y}

    @classmethod
    def from_json(cls, data: dict) -> ClassicLensMor:
        get, put = FinFn.from_json(data["get"]), FinFn.from_json(data["put"])
        if "y" in data:
            y = int(data["y"])
        elif get.dom:
            y = put.dom // get.dom
        else:
            raise MalformedData("field 'y' is required when get has an empty domain")
        return cls(get, put, y)


def classic_identity(c: int, x: int) -> ClassicLensMor:
    return ClassicLensMor(finset.identity(c), lens_identity_put(FINSET_TIMES, c, x), x)


@lru_cache(maxsize=1 << 16)
def compose_classic(l1: ClassicLensMor, l2: ClassicLensMor) -> ClassicLensMor:
    if l1.target != l2.source:
        raise InterfaceMismatch(f"lens into ⟨{l1.target[0]}|{l1.target[1]}⟩ cannot feed ⟨{l2.source[0]}|{l2.source[1]}⟩")
    c = l1.get.dom
    put = lens_compose_put(FINSET_TIMES, c, l2.y, l1.get, l1.put, l2.put)
    return ClassicLensMor(finset.compose(l1.get, l2.get), put, l2.y)


def classic_homs(c: int, x: int, d: int, y: int) -> Iterator[ClassicLensMor]:
    for get in finset.all_maps(c, d):
        for put in finset.all_maps(c * y, x):
            yield ClassicLensMor(get, put, y)


def classic_lens_category(max_size: int, limit: int | None = None) -> FinCategory:
    """``Lens_{FinSet,×}`` on sizes ``<= max_size``; labels are :class:`ClassicLensMor`."""
    L = generic_lens_category(FINSET_TIMES, max_size, limit)
    labels = tuple(ClassicLensMor(m.get, m.put, m.y) for m in L.labels)
    return FinCategory(L.n_objects, L.morphisms, L.identity, L.comp, labels, L.object_labels)


def classic_tensor(l1: ClassicLensMor, l2: ClassicLensMor) -> ClassicLensMor:
    """``⟨f | f♯⟩ ⊗ ⟨g | g♯⟩ = ⟨f × g | (c × d × y × y' ≅ c × y × d × y') ⨟ (f♯ × g♯)⟩``."""
    c, d = l1.get.dom, l2.get.dom
    y1, y2 = l1.y, l2.y
    shuffle = finset.tensor_all(finset.identity(c), finset.symmetry(d, y1), finset.identity(y2))
    put = finset.compose(shuffle, finset.tensor(l1.put, l2.put))
    return ClassicLensMor(finset.tensor(l1.get, l2.get), put, y1 * y2)


# -- prisms -------------------------------------------------------------------


@dataclass(frozen=True)
class PrismMor:
    """Lens data ``(get: d -> c, put: x -> c + y)`` in ``(FinSetᵒᵖ, +)`` from ``⟨c | x⟩`` to ``⟨d | y⟩``.

    In :func:`prism_category`, which is the opposite of that lens category, this
    is an arrow ``⟨d | y⟩ -> ⟨c | x⟩``.
    """

    get: FinFn
    put: FinFn

    def __post_init__(self):
        if self.put.cod < self.get.cod:
            raise MalformedData(f"put codomain {self.put.cod} is smaller than c = {self.get.cod}")

    @property
    def c(self) -> int:
        return self.get.cod

    @property
    def d(self) -> int:
        return self.get.dom

    @property
    def x(self) -> int:
        return self.put.dom

    @property
    def y(self) -> int:
        return self.put.cod - self.get.cod

    def to_json(self) -> dict:
        return {"get": self.get.to_json(), "put": self.put.to_json()}

    @classmethod
    def from_json(cls, data: dict) -> PrismMor:
        return cls(FinFn.from_json(data["get"]), FinFn.from_json(data["put"]))


def prism_identity(c: int, x: int) -> PrismMor:
    return PrismMor(finset.identity(c), finset.coproduct(c, x).inr)


def compose_prism(p1: PrismMor, p2: PrismMor) -> PrismMor:
    """Lens-order composite (``p1: ⟨c|x⟩ -> ⟨d|y⟩``, then ``p2: ⟨d|y⟩ -> ⟨e|z⟩``) via the generic formula."""
    if (p1.d, p1.y) != (p2.c, p2.x):
        raise InterfaceMismatch("prisms do not compose: interfaces differ")
    K = FINSET_OP_PLUS
    put = lens_compose_put(K, p1.c, p2.y, p1.get, p1.put, p2.put)
    return PrismMor(K.compose(p1.get, p2.get), put)


def compose_prism_direct(p1: PrismMor, p2: PrismMor) -> PrismMor:
    """The coproduct formula ``f♯ ⨟ (c + g♯) ⨟ (c + f + z) ⨟ (∇_c + z)``, written out in FinSet."""
    if (p1.d, p1.y) != (p2.c, p2.x):
        raise InterfaceMismatch("prisms do not compose: interfaces differ")
    c, z = p1.c, p2.y
    ident = finset.identity
    put = finset.compose_all(
        p1.put,
        finset.cosum(ident(c), p2.put),
        finset.cosum_all(ident(c), p1.get, ident(z)),
        finset.cosum(finset.codiagonal(c), ident(z)),
    )
    return PrismMor(finset.compose(p2.get, p1.get), put)


def prism_category(max_size: int, limit: int | None = None) -> FinCategory:
    """``(Lens_{FinSetᵒᵖ,+})ᵒᵖ``, built by running the lens machinery on ``(FinSetᵒᵖ, +)``."""
    L = generic_lens_category(FINSET_OP_PLUS, max_size, limit)
    labels = tuple(PrismMor(m.get, m.put) for m in L.labels)
    return opposite(FinCategory(L.n_objects, L.morphisms, L.identity, L.comp, labels, L.object_labels))


def prism_respects_labels(
    p: PrismMor, c_labels: Sequence, x_labels: Sequence, d_labels: Sequence, y_labels: Sequence
) -> bool:
    """Whether ``p`` is a morphism over a label set ``T`` (the ``FinSet/T`` variant of wiring diagrams)."""
    if (len(c_labels), len(x_labels), len(d_labels), len(y_labels)) != (p.c, p.x, p.d, p.y):
        raise MalformedData("label vectors do not match the prism's interfaces")
    cy = list(c_labels) + list(y_labels)
    return all(c_labels[p.get(j)] == d_labels[j] for j in range(p.d)) and all(
        cy[p.put(k)] == x_labels[k] for k in range(p.x)
    )


# -- classical lenses inside dependent lenses -----------------------------------


def embed_classic(F: IndexedCat, c: int, x: int) -> LensObject:
    """``⟨c | x⟩ -> ⟨c | (x, ..., x)⟩`` in ``Lens_Slice``."""
    B = F.base
    cid = B.find_object(c)
    return LensObject(cid, F.fibers[cid].find_object((x,) * c))


def embed_classic_mor(F: IndexedCat, m: ClassicLensMor) -> LensMorphism:
    """Send ``(get, put)`` to ``(get, (j ↦ put(i, j))_{i<c})`` in ``Lens_Slice``."""
    (c, x), (d, y) = m.source, m.target
    B = F.base
    cid = B.find_object(c)
    fiber_c = F.fibers[cid]
    tables = tuple(tuple(m.put.table[i * y + j] for j in range(y)) for i in range(c))
    put = fiber_c.find(((y,) * c, (x,) * c, tables))
    did = B.find_object(d)
    return LensMorphism(B.find(m.get), put, F.fibers[did].find_object((y,) * d))


def check_classic_embedding(
    max_size: int = 2, F: IndexedCat | None = None, C: FinCategory | None = None
) -> LawReport:
    """The classic lens category embeds fully faithfully into ``Lens_Slice``, preserving composition.

    Checks for every object pair that the induced map on hom-sets is a
    bijection, and for every composable pair that composing by the
    string-diagram formula and then embedding equals embedding and then
    composing in ``Lens_Slice``.
    """
    F = F if F is not None else slice_indexed(max_size)
    C = C if C is not None else classic_lens_category(max_size)
    L = LensCat(F)
    report = LawReport("classic lens embedding")
    objects = C.object_labels
    emb_ob = {o: embed_classic(F, *o) for o in objects}
    emb = [embed_classic_mor(F, m) for m in C.labels]
    for a, oa in enumerate(objects):
        for b, ob in enumerate(objects):
            report.checks += 1
            image = sorted(emb[k] for k in C.hom(a, b))
            if image != L.hom(emb_ob[oa], emb_ob[ob]):
                report.fail("hom-set bijection", oa, ob)
    for a, o in enumerate(objects):
        report.checks += 1
        if emb[C.identity[a]] != L.identity(emb_ob[o]):
            report.fail("identity", o)
    for f, g in C.composable_pairs():
        report.checks += 1
        if emb[C.compose(f, g)] != L.compose(emb[f], emb[g]):
            report.fail("composition", C.labels[f], C.labels[g])
    return report


# -- coslices and twisted arrows ----------------------------------------------


def coslice_category(C: FinCategory, c: int) -> FinCategory:
    """``c/C``: objects are morphisms out of ``c``; labels ``(x, x', h)`` with ``x ⨟ h = x'``."""
    objects = C.out_of(c)
    pos = {x: k for k, x in enumerate(objects)}
    labels, ends = [], []
    for x in objects:
        for x2 in objects:
            for h in C.hom(C.cod(x), C.cod(x2)):
                if C.compose(x, h) == x2:
                    labels.append((x, x2, h))
                    ends.append((pos[x], pos[x2]))
    return build_category(
        objects,
        labels,
        ends,
        lambda o: (objects[o], objects[o], C.identity[C.cod(objects[o])]),
        lambda m1, m2: (m1[0], m2[1], C.compose(m1[2], m2[2])),
    )


def coslice_indexed(C: FinCategory) -> IndexedCat:
    """``c ↦ c/C``; reindexing along ``f: b -> c`` precomposes with ``f``."""
    fibers = tuple(coslice_category(C, c) for c in range(C.n_objects))
    reindex = []
    for f, (b, c) in enumerate(C.morphisms):
        src, tgt = fibers[c], fibers[b]
        obj_map = tuple(tgt.find_object(C.compose(f, x)) for x in src.object_labels)
        mor_map = tuple(tgt.find((C.compose(f, x), C.compose(f, x2), h)) for x, x2, h in src.labels)
        reindex.append(FunctorData(src, tgt, obj_map, mor_map))
    return IndexedCat(C, fibers, tuple(reindex))


def check_twisted_iso(C: FinCategory) -> IsoReport:
    """``Lens_Coslice(C) ≅ tw(C)`` via ``⟨c | x⟩ ↦ x`` and ``⟨f | h⟩ ↦ (f, h)``."""
    F = coslice_indexed(C)
    L = lens_category(F)
    T = twisted_arrow(C)
    obj_map = [T.find_object(F.fibers[c].object_labels[x]) for c, x in L.object_labels]
    mor_map = []
    for m in L.labels:
        c, d = C.morphisms[m.get]
        _, x, h = F.fibers[c].labels[m.put]
        y = F.fibers[d].object_labels[m.y]
        mor_map.append(T.find((x, y, m.get, h)))
    return check_isomorphism(L, T, obj_map, mor_map, "Lens_Coslice ≅ tw")
