"""Finite categories and functors as explicit tables, with exhaustive law checkers.

Morphisms are integer ids and composition is stored in diagrammatic order:
``comp[(f, g)]`` is ``f ⨟ g`` and is defined exactly when ``cod f == dom g``.
Constructed categories carry optional ``labels`` (the structured data each id
stands for); labels never take part in equality.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Callable, Hashable, Iterable, Mapping, Sequence

from . import finset
from .errors import IsoFailure, MalformedData, check_bound


@dataclass
class LawReport:
    """Outcome of an exhaustive check. Empty ``violations`` means pass."""

    name: str
    checks: int = 0
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def fail(self, law: str, *witness):
        self.violations.append((law, witness))

    def merge(self, other: LawReport, prefix: str = "") -> LawReport:
        self.checks += other.checks
        for law, witness in other.violations:
            self.violations.append((prefix + law, witness))
        return self

    def summary(self) -> str:
        status = "pass" if self.ok else f"FAIL ({len(self.violations)} violations)"
        return f"{self.name}: {status} after {self.checks} checks"

    def to_json(self, max_violations: int = 5) -> dict:
        return {
            "name": self.name,
            "status": "pass" if self.ok else "fail",
            "checks": self.checks,
            "violations": len(self.violations),
            "counterexamples": [
                {"law": law, "witness": _plain(w)} for law, w in self.violations[:max_violations]
            ],
        }


class IsoReport(LawReport):
    """A LawReport for an explicit isomorphism; ``counts`` records the sizes compared."""

    def __init__(self, name: str, **kwargs):
        super().__init__(name, **kwargs)
        self.counts: dict[str, int] = {}

    def require(self) -> IsoReport:
        if not self.ok:
            law, witness = self.violations[0]
            raise IsoFailure(f"{self.name}: {law} fails at {_plain(witness)}")
        return self

    def to_json(self, max_violations: int = 5) -> dict:
        out = super().to_json(max_violations)
        out["counts"] = dict(sorted(self.counts.items()))
        return out


def _plain(x):
    if isinstance(x, tuple):
        return [_plain(y) for y in x]
    if isinstance(x, (int, str, bool)) or x is None:
        return x
    if isinstance(x, list):
        return [_plain(y) for y in x]
    return repr(x)


@dataclass(frozen=True, eq=True)
class FinCategory:
    n_objects: int
    morphisms: tuple[tuple[int, int], ...]
    identity: tuple[int, ...]
    comp: Mapping[tuple[int, int], int]
    labels: tuple | None = field(default=None, compare=False, repr=False)
    object_labels: tuple | None = field(default=None, compare=False, repr=False)

    @property
    def n_morphisms(self) -> int:
        return len(self.morphisms)

    def dom(self, f: int) -> int:
        return self.morphisms[f][0]

    def cod(self, f: int) -> int:
        return self.morphisms[f][1]

    def compose(self, f: int, g: int) -> int:
        try:
            return self.comp[(f, g)]
        except KeyError:
            if self.cod(f) != self.dom(g):
                raise MalformedData(f"morphisms {f} and {g} are not composable") from None
            raise MalformedData(f"composition table is missing ({f}, {g})") from None

    def compose_all(self, *fs: int) -> int:
        out = fs[0]
        for g in fs[1:]:
            out = self.compose(out, g)
        return out

    @cached_property
    def _homs(self) -> dict[tuple[int, int], list[int]]:
        homs: dict[tuple[int, int], list[int]] = {}
        for k, (a, b) in enumerate(self.morphisms):
            homs.setdefault((a, b), []).append(k)
        return homs

    @cached_property
    def _out(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.n_objects)]
        for k, (a, _) in enumerate(self.morphisms):
            out[a].append(k)
        return out

    def hom(self, a: int, b: int) -> list[int]:
        return self._homs.get((a, b), [])

    def out_of(self, a: int) -> list[int]:
        return self._out[a]

    def into(self, b: int) -> list[int]:
        return [k for k, (_, c) in enumerate(self.morphisms) if c == b]

    @cached_property
    def _label_index(self) -> dict:
        if self.labels is None:
            raise MalformedData("category has no morphism labels")
        return {lab: k for k, lab in enumerate(self.labels)}

    def find(self, label: Hashable) -> int:
        """Morphism id carrying ``label``."""
        return self._label_index[label]

    @cached_property
    def _object_index(self) -> dict:
        if self.object_labels is None:
            raise MalformedData("category has no object labels")
        return {lab: k for k, lab in enumerate(self.object_labels)}

    def find_object(self, label: Hashable) -> int:
        return self._object_index[label]

    def composable_pairs(self) -> Iterable[tuple[int, int]]:
        for f, (_, b) in enumerate(self.morphisms):
            for g in self._out[b]:
                yield f, g

    def to_json(self) -> dict:
        return {
            "objects": self.n_objects,
            "morphisms": [{"dom": a, "cod": b} for a, b in self.morphisms],
            "identity": list(self.identity),
            "comp": [[f, g, h] for (f, g), h in sorted(self.comp.items())],
        }

    @classmethod
    def from_json(cls, data: dict) -> FinCategory:
        morphisms = tuple((int(m["dom"]), int(m["cod"])) for m in data["morphisms"])
        comp = {(int(f), int(g)): int(h) for f, g, h in data["comp"]}
        return cls(int(data["objects"]), morphisms, tuple(int(i) for i in data["identity"]), comp)


def build_category(
    object_labels: Sequence[Hashable],
    labels: Sequence[Hashable],
    ends: Sequence[tuple[int, int]],
    identity_label: Callable[[int], Hashable],
    compose_label: Callable[[Any, Any], Hashable],
    limit: int | None = None,
) -> FinCategory:
    """Tabulate a category whose morphisms are given by hashable labels.

    ``compose_label`` receives two composable labels and returns the label of
    their composite; it must land among ``labels``.
    """
    check_bound(len(labels), limit, "morphism enumeration")
    index = {lab: k for k, lab in enumerate(labels)}
    if len(index) != len(labels):
        raise MalformedData("duplicate morphism labels")
    n = len(object_labels)
    identity = []
    for o in range(n):
        lab = identity_label(o)
        if lab not in index:
            raise MalformedData(f"identity on object {o} is not among the morphisms")
        identity.append(index[lab])
    out: list[list[int]] = [[] for _ in range(n)]
    for k, (a, _) in enumerate(ends):
        out[a].append(k)
    comp = {}
    for f, (_, b) in enumerate(ends):
        lf = labels[f]
        for g in out[b]:
            lab = compose_label(lf, labels[g])
            try:
                comp[(f, g)] = index[lab]
            except KeyError:
                raise MalformedData(f"composite of {lf!r} and {labels[g]!r} is {lab!r}, not a morphism") from None
    return FinCategory(n, tuple(ends), tuple(identity), comp, tuple(labels), tuple(object_labels))


# -- law checks -------------------------------------------------------------


def check_category_laws(C: FinCategory, name: str = "category laws") -> LawReport:
    report = LawReport(name)
    n = C.n_objects
    for o, i in enumerate(C.identity):
        report.checks += 1
        if not 0 <= i < C.n_morphisms or C.morphisms[i] != (o, o):
            report.fail("identity typing", o, i)
    for k, (a, b) in enumerate(C.morphisms):
        if not (0 <= a < n and 0 <= b < n):
            raise MalformedData(f"morphism {k} has endpoints ({a}, {b}) outside {n} objects")
    comp = C.comp
    for (f, g), h in comp.items():
        report.checks += 1
        if C.cod(f) != C.dom(g):
            report.fail("composite of non-composable pair", f, g)
        elif not 0 <= h < C.n_morphisms or C.morphisms[h] != (C.dom(f), C.cod(g)):
            report.fail("composite typing", f, g, h)
    for f, g in C.composable_pairs():
        if (f, g) not in comp:
            raise MalformedData(f"composition table is missing composable pair ({f}, {g})")
    if report.violations:
        return report
    ident = C.identity
    for f, (a, b) in enumerate(C.morphisms):
        report.checks += 2
        if comp[(ident[a], f)] != f:
            report.fail("left unit", ident[a], f)
        if comp[(f, ident[b])] != f:
            report.fail("right unit", f, ident[b])
    out = C._out
    morphisms = C.morphisms
    for f, (_, b) in enumerate(morphisms):
        for g in out[b]:
            fg = comp[(f, g)]
            c = morphisms[g][1]
            for h in out[c]:
                report.checks += 1
                if comp[(fg, h)] != comp[(f, comp[(g, h)])]:
                    report.fail("associativity", f, g, h)
    return report


@dataclass(frozen=True)
class FunctorData:
    source: FinCategory
    target: FinCategory
    obj_map: tuple[int, ...]
    mor_map: tuple[int, ...]

    def __call__(self, f: int) -> int:
        return self.mor_map[f]

    def on_object(self, x: int) -> int:
        return self.obj_map[x]


def identity_functor(C: FinCategory) -> FunctorData:
    return FunctorData(C, C, tuple(range(C.n_objects)), tuple(range(C.n_morphisms)))


def compose_functors(F: FunctorData, G: FunctorData) -> FunctorData:
    """``F ⨟ G``: apply F first."""
    return FunctorData(
        F.source,
        G.target,
        tuple(G.obj_map[o] for o in F.obj_map),
        tuple(G.mor_map[m] for m in F.mor_map),
    )


def check_functor_laws(F: FunctorData, name: str = "functor laws") -> LawReport:
    report = LawReport(name)
    S, T = F.source, F.target
    if len(F.obj_map) != S.n_objects or len(F.mor_map) != S.n_morphisms:
        raise MalformedData("functor maps do not match the source category's size")
    for o, p in enumerate(F.obj_map):
        if not 0 <= p < T.n_objects:
            raise MalformedData(f"object {o} maps outside the target")
    for f, g in enumerate(F.mor_map):
        if not 0 <= g < T.n_morphisms:
            raise MalformedData(f"morphism {f} maps outside the target")
        report.checks += 1
        a, b = S.morphisms[f]
        if T.morphisms[g] != (F.obj_map[a], F.obj_map[b]):
            report.fail("endpoints", f)
    for o in range(S.n_objects):
        report.checks += 1
        if F.mor_map[S.identity[o]] != T.identity[F.obj_map[o]]:
            report.fail("identity", o)
    if report.violations:
        return report
    for f, g in S.composable_pairs():
        report.checks += 1
        if F.mor_map[S.compose(f, g)] != T.compose(F.mor_map[f], F.mor_map[g]):
            report.fail("composition", f, g)
    return report


def check_isomorphism(
    C: FinCategory,
    D: FinCategory,
    obj_map: Sequence[int],
    mor_map: Sequence[int],
    name: str = "isomorphism",
    over: tuple[FunctorData, FunctorData] | None = None,
) -> IsoReport:
    """Check that the given maps form an isomorphism of categories ``C ≅ D``.

    With ``over = (P, Q)`` also check ``P = (obj_map, mor_map) ⨟ Q``, i.e. that
    the isomorphism commutes with the projections to a common base.
    """
    report = IsoReport(name)
    report.counts = {
        "source objects": C.n_objects,
        "target objects": D.n_objects,
        "source morphisms": C.n_morphisms,
        "target morphisms": D.n_morphisms,
    }
    report.checks += 2
    if sorted(obj_map) != list(range(D.n_objects)) or len(obj_map) != C.n_objects:
        report.fail("object bijection")
    if sorted(mor_map) != list(range(D.n_morphisms)) or len(mor_map) != C.n_morphisms:
        report.fail("morphism bijection")
    if report.violations:
        return report
    F = FunctorData(C, D, tuple(obj_map), tuple(mor_map))
    report.merge(check_functor_laws(F))
    if over is not None:
        P, Q = over
        for m in range(C.n_morphisms):
            report.checks += 1
            if P.mor_map[m] != Q.mor_map[mor_map[m]]:
                report.fail("projection square", m)
        for o in range(C.n_objects):
            report.checks += 1
            if P.obj_map[o] != Q.obj_map[obj_map[o]]:
                report.fail("projection on objects", o)
    return report


# -- constructions ----------------------------------------------------------


def opposite(C: FinCategory) -> FinCategory:
    return FinCategory(
        C.n_objects,
        tuple((b, a) for a, b in C.morphisms),
        C.identity,
        {(g, f): h for (f, g), h in C.comp.items()},
        C.labels,
        C.object_labels,
    )


def opposite_functor(F: FunctorData) -> FunctorData:
    """``Fᵒᵖ: Cᵒᵖ -> Dᵒᵖ`` with the same object and morphism maps."""
    return FunctorData(opposite(F.source), opposite(F.target), F.obj_map, F.mor_map)


def finset_category(
    max_size: int | None = None, sizes: Iterable[int] | None = None, limit: int | None = None
) -> FinCategory:
    """Full subcategory of finite sets on the given sizes (default ``0..max_size``).

    Morphism labels are :class:`FinFn` values; object labels are sizes.
    """
    if sizes is None:
        if max_size is None or max_size < 0:
            raise MalformedData("finset_category needs max_size >= 0 or explicit sizes")
        sizes = range(max_size + 1)
    sizes = tuple(sorted(set(sizes)))
    total = sum(m**n for n in sizes for m in sizes)
    check_bound(total, limit, "finset_category morphisms")
    labels, ends = [], []
    for a, n in enumerate(sizes):
        for b, m in enumerate(sizes):
            for f in finset.all_maps(n, m):
                labels.append(f)
                ends.append((a, b))
    return build_category(
        sizes,
        labels,
        ends,
        lambda o: finset.identity(sizes[o]),
        finset.compose,
        limit,
    )


def twisted_arrow(C: FinCategory) -> FinCategory:
    """``tw(C)``: objects are morphisms of C; ``x -> y`` is ``(f, f♯)`` with ``x = f ⨟ y ⨟ f♯``.

    Morphism labels are ``(x, y, f, f♯)``; object labels are morphism ids of C.
    """
    labels, ends = [], []
    for x, (a, b) in enumerate(C.morphisms):
        for y, (c, d) in enumerate(C.morphisms):
            for f in C.hom(a, c):
                fy = C.compose(f, y)
                for fs in C.hom(d, b):
                    if C.compose(fy, fs) == x:
                        labels.append((x, y, f, fs))
                        ends.append((x, y))

    def ident(x):
        a, b = C.morphisms[x]
        return (x, x, C.identity[a], C.identity[b])

    def comp(m1, m2):
        x, _, f, fs = m1
        _, z, g, gs = m2
        return (x, z, C.compose(f, g), C.compose(gs, fs))

    return build_category(tuple(range(C.n_morphisms)), labels, ends, ident, comp)


# -- small named categories -------------------------------------------------


def terminal_category() -> FinCategory:
    return FinCategory(1, ((0, 0),), (0,), {(0, 0): 0}, ("id",), ("*",))


def poset_category(n: int, relations: Iterable[tuple[int, int]]) -> FinCategory:
    """Thin category on ``0..n-1`` generated by the given ``a <= b`` relations."""
    leq = {(a, a) for a in range(n)} | set(relations)
    changed = True
    while changed:
        changed = False
        for (a, b), (c, d) in itertools.product(list(leq), repeat=2):
            if b == c and (a, d) not in leq:
                leq.add((a, d))
                changed = True
    ends = sorted(leq)
    for a, b in ends:
        if a != b and (b, a) in leq:
            raise MalformedData("relations are not antisymmetric")
    return build_category(
        tuple(range(n)), ends, ends, lambda o: (o, o), lambda f, g: (f[0], g[1])
    )


def walking_arrow() -> FinCategory:
    """``0 -> 1``: morphisms id₀, the arrow, id₁."""
    return poset_category(2, [(0, 1)])


def commutative_square() -> FinCategory:
    """``0 -> 1 -> 3`` and ``0 -> 2 -> 3`` with both composites equal."""
    return poset_category(4, [(0, 1), (0, 2), (1, 3), (2, 3)])


def constant_functor(C: FinCategory, D: FinCategory, obj: int) -> FunctorData:
    i = D.identity[obj]
    return FunctorData(C, D, (obj,) * C.n_objects, (i,) * C.n_morphisms)
