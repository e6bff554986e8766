"""Skeletal finite sets and functions between them.

A finite set is just its size ``n``; its elements are ``0, ..., n-1``.  Products
use the row-major pairing ``(i, j) -> i * b + j`` everywhere, which makes the
product strictly associative on elements as well as on sizes.  Composition is
written in diagrammatic order: ``compose(f, g)`` is "first f, then g".
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .errors import CodomainMismatch, MalformedData, NoFactorization


@dataclass(frozen=True)
class FinFn:
    """A total function ``dom -> cod`` stored as a lookup table."""

    dom: int
    cod: int
    table: tuple[int, ...]

    def __post_init__(self):
        table = tuple(int(t) for t in self.table)
        object.__setattr__(self, "table", table)
        if self.dom < 0 or self.cod < 0:
            raise MalformedData(f"negative set size in {self.dom} -> {self.cod}")
        if len(table) != self.dom:
            raise MalformedData(f"table has {len(table)} entries, domain has {self.dom}")
        for i, t in enumerate(table):
            if not 0 <= t < self.cod:
                raise MalformedData(f"table[{i}] = {t} is outside codomain {self.cod}")

    @classmethod
    def _trusted(cls, dom: int, cod: int, table: tuple[int, ...]) -> FinFn:
        # Skips validation; only for tables built by the operations in this module.
        f = object.__new__(cls)
        object.__setattr__(f, "dom", dom)
        object.__setattr__(f, "cod", cod)
        object.__setattr__(f, "table", table)
        return f

    def __call__(self, i: int) -> int:
        return self.table[i]

    def then(self, g: FinFn) -> FinFn:
        return compose(self, g)

    def __rshift__(self, g: FinFn) -> FinFn:
        return compose(self, g)

    def __repr__(self):
        return f"FinFn({self.dom}->{self.cod}, {list(self.table)})"

    def to_json(self) -> dict:
        return {"dom": self.dom, "cod": self.cod, "table": list(self.table)}

    @classmethod
    def from_json(cls, data: dict) -> FinFn:
        return cls(data["dom"], data["cod"], tuple(data["table"]))


def fn(cod: int, table: Sequence[int]) -> FinFn:
    """Shorthand: the function with the given table into ``cod``."""
    return FinFn(len(table), cod, tuple(table))


@lru_cache(maxsize=None)
def identity(n: int) -> FinFn:
    return FinFn._trusted(n, n, tuple(range(n)))


def compose(f: FinFn, g: FinFn) -> FinFn:
    """Diagrammatic composite ``f ⨟ g``."""
    if f.cod != g.dom:
        raise CodomainMismatch(f"cannot compose {f.dom}->{f.cod} with {g.dom}->{g.cod}")
    gt = g.table
    return FinFn._trusted(f.dom, g.cod, tuple([gt[t] for t in f.table]))


def compose_all(*fs: FinFn) -> FinFn:
    out = fs[0]
    for g in fs[1:]:
        out = compose(out, g)
    return out


def all_maps(n: int, m: int) -> Iterator[FinFn]:
    """Every function ``n -> m`` in lexicographic order of tables."""
    for table in itertools.product(range(m), repeat=n):
        yield FinFn(n, m, table)


def count_maps(n: int, m: int) -> int:
    return m**n


def rank(f: FinFn) -> int:
    """Position of ``f`` in ``all_maps(f.dom, f.cod)``."""
    r = 0
    for t in f.table:
        r = r * f.cod + t
    return r


def unrank(n: int, m: int, r: int) -> FinFn:
    if not 0 <= r < m**n:
        raise MalformedData(f"rank {r} out of range for maps {n} -> {m}")
    table = []
    for _ in range(n):
        r, t = divmod(r, m)
        table.append(t)
    return FinFn(n, m, tuple(reversed(table)))


# -- products ---------------------------------------------------------------


@dataclass(frozen=True)
class Product:
    """The product ``a × b`` with its row-major encoding."""

    a: int
    b: int

    @property
    def size(self) -> int:
        return self.a * self.b

    def pair(self, i: int, j: int) -> int:
        return i * self.b + j

    def unpair(self, k: int) -> tuple[int, int]:
        return divmod(k, self.b)

    @property
    def proj1(self) -> FinFn:
        return FinFn(self.size, self.a, tuple(k // self.b for k in range(self.size)))

    @property
    def proj2(self) -> FinFn:
        return FinFn(self.size, self.b, tuple(k % self.b for k in range(self.size)))

    def tupling(self, f: FinFn, g: FinFn) -> FinFn:
        """The pairing ``⟨f, g⟩: c -> a × b``."""
        if f.dom != g.dom or f.cod != self.a or g.cod != self.b:
            raise CodomainMismatch(f"cannot pair {f!r} and {g!r} into {self.a}×{self.b}")
        return FinFn(f.dom, self.size, tuple(self.pair(x, y) for x, y in zip(f.table, g.table)))


def product(a: int, b: int) -> Product:
    return Product(a, b)


def pair(i: int, j: int, b: int) -> int:
    return i * b + j


def tensor(f: FinFn, g: FinFn) -> FinFn:
    """``f × g: f.dom × g.dom -> f.cod × g.cod``."""
    gd, gc = g.dom, g.cod
    table = tuple([x * gc + y for x in f.table for y in g.table])
    return FinFn._trusted(f.dom * gd, f.cod * gc, table)


def tensor_all(*fs: FinFn) -> FinFn:
    out = fs[0]
    for g in fs[1:]:
        out = tensor(out, g)
    return out


# -- coproducts -------------------------------------------------------------


@dataclass(frozen=True)
class Coproduct:
    """The coproduct ``a + b``; left elements come first."""

    a: int
    b: int

    @property
    def size(self) -> int:
        return self.a + self.b

    @property
    def inl(self) -> FinFn:
        return FinFn(self.a, self.size, tuple(range(self.a)))

    @property
    def inr(self) -> FinFn:
        return FinFn(self.b, self.size, tuple(range(self.a, self.size)))

    def copair(self, f: FinFn, g: FinFn) -> FinFn:
        """The copairing ``[f, g]: a + b -> c``."""
        if f.dom != self.a or g.dom != self.b or f.cod != g.cod:
            raise CodomainMismatch(f"cannot copair {f!r} and {g!r} out of {self.a}+{self.b}")
        return FinFn(self.size, f.cod, f.table + g.table)


def coproduct(a: int, b: int) -> Coproduct:
    return Coproduct(a, b)


def cosum(f: FinFn, g: FinFn) -> FinFn:
    """``f + g: f.dom + g.dom -> f.cod + g.cod``."""
    table = f.table + tuple([f.cod + y for y in g.table])
    return FinFn._trusted(f.dom + g.dom, f.cod + g.cod, table)


def cosum_all(*fs: FinFn) -> FinFn:
    out = fs[0]
    for g in fs[1:]:
        out = cosum(out, g)
    return out


@lru_cache(maxsize=None)
def codiagonal(c: int) -> FinFn:
    """``∇: c + c -> c``."""
    return Coproduct(c, c).copair(identity(c), identity(c))


@lru_cache(maxsize=None)
def initial(c: int) -> FinFn:
    """The unique map ``0 -> c``."""
    return FinFn(0, c, ())


# -- structural maps --------------------------------------------------------


@lru_cache(maxsize=None)
def diagonal(c: int) -> FinFn:
    return FinFn(c, c * c, tuple(i * c + i for i in range(c)))


@lru_cache(maxsize=None)
def terminal(c: int) -> FinFn:
    return FinFn(c, 1, (0,) * c)


@lru_cache(maxsize=None)
def symmetry(a: int, b: int) -> FinFn:
    """``σ_{a,b}: a × b -> b × a``."""
    return FinFn(a * b, b * a, tuple(j * a + i for i in range(a) for j in range(b)))


# -- pullbacks --------------------------------------------------------------


@dataclass(frozen=True)
class Pullback:
    """Pullback of ``f`` and ``g``: pairs ``(i, j)`` with ``f(i) = g(j)`` in lexicographic order."""

    f: FinFn
    g: FinFn
    pairs: tuple[tuple[int, int], ...]

    @property
    def size(self) -> int:
        return len(self.pairs)

    @property
    def p1(self) -> FinFn:
        return FinFn(self.size, self.f.dom, tuple(i for i, _ in self.pairs))

    @property
    def p2(self) -> FinFn:
        return FinFn(self.size, self.g.dom, tuple(j for _, j in self.pairs))

    def factor(self, q1: FinFn, q2: FinFn) -> FinFn:
        """The unique map into the carrier induced by the cone ``(q1, q2)``."""
        if q1.dom != q2.dom or q1.cod != self.f.dom or q2.cod != self.g.dom:
            raise CodomainMismatch("cone legs do not match the pullback legs")
        index = {p: k for k, p in enumerate(self.pairs)}
        table = []
        for k, (i, j) in enumerate(zip(q1.table, q2.table)):
            if (i, j) not in index:
                raise NoFactorization(f"cone does not commute at element {k}")
            table.append(index[(i, j)])
        return FinFn(q1.dom, self.size, tuple(table))


def pullback(f: FinFn, g: FinFn) -> Pullback:
    if f.cod != g.cod:
        raise CodomainMismatch(f"pullback legs have codomains {f.cod} and {g.cod}")
    pairs = tuple(
        (i, j) for i in range(f.dom) for j in range(g.dom) if f.table[i] == g.table[j]
    )
    return Pullback(f, g, pairs)
