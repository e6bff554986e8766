import itertools

import pytest

from glens import catkit, finset
from glens.catkit import FinCategory, FunctorData, check_category_laws, check_functor_laws
from glens.errors import MalformedData


def test_walking_arrow_passes():
    C = catkit.walking_arrow()
    assert (C.n_objects, C.n_morphisms) == (2, 3)
    assert check_category_laws(C).ok


def test_planted_unit_violation_is_cited():
    C = catkit.walking_arrow()
    f = C.hom(0, 1)[0]
    comp = dict(C.comp)
    # a second arrow 0 -> 1 so the corruption stays well typed
    ends = C.morphisms + ((0, 1),)
    g = len(ends) - 1
    comp.update({(0, g): g, (g, 2): g})
    comp[(f, 2)] = g
    D = FinCategory(2, ends, C.identity, comp)
    report = check_category_laws(D)
    assert not report.ok
    assert ("right unit", (f, 2)) in report.violations


def test_missing_composite_is_malformed():
    C = catkit.walking_arrow()
    comp = dict(C.comp)
    del comp[(0, 1)]
    with pytest.raises(MalformedData):
        check_category_laws(FinCategory(2, C.morphisms, C.identity, comp))


def test_finset_small():
    C = catkit.finset_category(1)
    assert C.n_objects == 2 and C.n_morphisms == 3
    assert check_category_laws(C).ok
    C2 = catkit.finset_category(2)
    two = C2.find_object(2)
    assert len(C2.hom(two, two)) == 4


def test_finset_sizes_one_two():
    # hom(1,1)=1, hom(1,2)=2, hom(2,1)=1, hom(2,2)=4
    C = catkit.finset_category(sizes=(1, 2))
    assert C.n_morphisms == 8
    assert check_category_laws(C).ok


def test_finset_hom_counts():
    C = catkit.finset_category(3)
    for a, b in itertools.product(range(C.n_objects), repeat=2):
        n, m = C.object_labels[a], C.object_labels[b]
        assert len(C.hom(a, b)) == m**n


def test_functor_laws():
    C = catkit.walking_arrow()
    assert check_functor_laws(catkit.identity_functor(C)).ok
    assert check_functor_laws(catkit.constant_functor(C, C, 1)).ok
    F = FunctorData(C, C, (0, 1), (0, 0, 2))
    report = check_functor_laws(F)
    assert not report.ok


def test_perturbed_functor_cites_pair():
    C = catkit.commutative_square()
    ident = catkit.identity_functor(C)
    # send one non-identity arrow to the other arrow with the same ends, if any
    for f in range(C.n_morphisms):
        a, b = C.morphisms[f]
        if a != b:
            break
    bad = list(ident.mor_map)
    bad[f] = C.identity[a]
    report = check_functor_laws(FunctorData(C, C, ident.obj_map, tuple(bad)))
    assert not report.ok


def test_opposite_involution():
    for C in (catkit.walking_arrow(), catkit.commutative_square(), catkit.finset_category(2)):
        assert catkit.opposite(catkit.opposite(C)) == C
        D = catkit.opposite(C)
        for a, b in itertools.product(range(C.n_objects), repeat=2):
            assert len(C.hom(a, b)) == len(D.hom(b, a))
        assert check_category_laws(D).ok


def test_opposite_walking_arrow():
    D = catkit.opposite(catkit.walking_arrow())
    assert D.morphisms[1] == (1, 0)


def test_twisted_arrow():
    W = catkit.walking_arrow()
    T = catkit.twisted_arrow(W)
    assert T.n_objects == 3
    assert check_category_laws(T).ok
    one = catkit.twisted_arrow(catkit.terminal_category())
    assert (one.n_objects, one.n_morphisms) == (1, 1)
    for o in range(T.n_objects):
        x, y, f, fs = T.labels[T.identity[o]]
        assert f == W.identity[W.dom(T.object_labels[o])] and fs == W.identity[W.cod(T.object_labels[o])]


def test_twisted_arrow_hom_counts_brute_force():
    C = catkit.commutative_square()
    T = catkit.twisted_arrow(C)
    for a, b in itertools.product(range(T.n_objects), repeat=2):
        x, y = T.object_labels[a], T.object_labels[b]
        expect = sum(
            1
            for f in C.hom(C.dom(x), C.dom(y))
            for g in C.hom(C.cod(y), C.cod(x))
            if C.compose_all(f, y, g) == x
        )
        assert len(T.hom(a, b)) == expect


def test_category_json_roundtrip():
    C = catkit.commutative_square()
    D = FinCategory.from_json(C.to_json())
    assert D == C


def test_finset_category_compose_is_function_composition():
    C = catkit.finset_category(2)
    for f, g in C.composable_pairs():
        assert C.labels[C.compose(f, g)] == finset.compose(C.labels[f], C.labels[g])
