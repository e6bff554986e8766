from hypothesis import given, settings
from hypothesis import strategies as st

from glens import finset
from glens.dynamics import MooreMachine, machine_to_lens, run, run_via_lens, tensor_machines
from glens.errors import NoFactorization
from glens.finset import FinFn
from glens.instances import (
    ClassicLensMor,
    PrismMor,
    classic_identity,
    classic_tensor,
    compose_classic,
    compose_prism,
    compose_prism_direct,
    prism_identity,
)

settings.register_profile("glens", max_examples=150, deadline=None)
settings.load_profile("glens")

size = st.integers(0, 4)
pos = st.integers(1, 4)


def maps(dom, cod):
    if cod == 0:
        return st.just(FinFn(dom, 0, ())) if dom == 0 else st.nothing()
    return st.lists(st.integers(0, cod - 1), min_size=dom, max_size=dom).map(lambda t: FinFn(dom, cod, tuple(t)))


@st.composite
def chain(draw, length):
    sizes = [draw(pos) for _ in range(length + 1)]
    return [draw(maps(a, b)) for a, b in zip(sizes, sizes[1:])]


@st.composite
def lens(draw, c, x, d=None, y=None):
    d = draw(pos) if d is None else d
    y = draw(pos) if y is None else y
    return ClassicLensMor(draw(maps(c, d)), draw(maps(c * y, x)), y)


@st.composite
def lens_chain(draw):
    c, x = draw(pos), draw(pos)
    l1 = draw(lens(c, x))
    l2 = draw(lens(*l1.target))
    l3 = draw(lens(*l2.target))
    return l1, l2, l3


@st.composite
def prism(draw, c, x):
    d, y = draw(size), draw(size)
    return PrismMor(draw(maps(d, c)), draw(maps(x, c + y)))


@st.composite
def machine(draw):
    S, A, B = draw(pos), draw(pos), draw(pos)
    return MooreMachine(S, A, B, draw(maps(S, B)), draw(maps(A * S, S)))


@given(chain(3))
def test_composition_associative(fs):
    f, g, h = fs
    assert finset.compose(finset.compose(f, g), h) == finset.compose(f, finset.compose(g, h))


@given(chain(1))
def test_identities_are_neutral(fs):
    (f,) = fs
    assert finset.compose(finset.identity(f.dom), f) == f == finset.compose(f, finset.identity(f.cod))


@given(chain(1), chain(1))
def test_symmetry_is_natural(fs, gs):
    (f,), (g,) = fs, gs
    lhs = finset.compose(finset.tensor(f, g), finset.symmetry(f.cod, g.cod))
    rhs = finset.compose(finset.symmetry(f.dom, g.dom), finset.tensor(g, f))
    assert lhs == rhs


@given(size, size)
def test_symmetry_is_involutive(a, b):
    assert finset.compose(finset.symmetry(a, b), finset.symmetry(b, a)) == finset.identity(a * b)


@given(chain(2), chain(2))
def test_tensor_is_functorial(fs, gs):
    (f1, f2), (g1, g2) = fs, gs
    assert finset.tensor(finset.compose(f1, f2), finset.compose(g1, g2)) == finset.compose(
        finset.tensor(f1, g1), finset.tensor(f2, g2)
    )


@given(chain(1))
def test_json_roundtrip(fs):
    (f,) = fs
    assert FinFn.from_json(f.to_json()) == f


@given(pos, st.data())
def test_rank_roundtrip(n, data):
    m = data.draw(pos)
    f = data.draw(maps(n, m))
    assert finset.unrank(n, m, finset.rank(f)) == f


@given(st.data())
def test_pullback_universal_property(data):
    c = data.draw(pos)
    f = data.draw(maps(data.draw(size), c))
    g = data.draw(maps(data.draw(size), c))
    P = finset.pullback(f, g)
    assert finset.compose(P.p1, f) == finset.compose(P.p2, g)
    n = data.draw(size)
    q1, q2 = data.draw(maps(n, f.dom)), data.draw(maps(n, g.dom))
    if finset.compose(q1, f) == finset.compose(q2, g):
        u = P.factor(q1, q2)
        assert finset.compose(u, P.p1) == q1 and finset.compose(u, P.p2) == q2
    else:
        try:
            P.factor(q1, q2)
        except NoFactorization:
            pass
        else:
            raise AssertionError("non-commuting cone factored")


@given(lens_chain())
def test_lens_composition_associative(ls):
    l1, l2, l3 = ls
    assert compose_classic(compose_classic(l1, l2), l3) == compose_classic(l1, compose_classic(l2, l3))


@given(st.data())
def test_lens_identities(data):
    c, x = data.draw(pos), data.draw(pos)
    m = data.draw(lens(c, x))
    assert compose_classic(classic_identity(c, x), m) == m == compose_classic(m, classic_identity(*m.target))


@given(lens_chain(), lens_chain())
def test_lens_tensor_interchange(ls, ms):
    (a1, a2, _), (b1, b2, _) = ls, ms
    lhs = classic_tensor(compose_classic(a1, a2), compose_classic(b1, b2))
    rhs = compose_classic(classic_tensor(a1, b1), classic_tensor(a2, b2))
    assert lhs == rhs


@given(st.data())
def test_prism_generic_matches_direct(data):
    c, x = data.draw(size), data.draw(size)
    p1 = data.draw(prism(c, x))
    p2 = data.draw(prism(p1.d, p1.y))
    assert compose_prism(p1, p2) == compose_prism_direct(p1, p2)
    assert compose_prism(prism_identity(c, x), p1) == p1


@given(machine(), st.data())
def test_run_agrees_with_lens(m, data):
    s0 = data.draw(st.integers(0, m.states - 1))
    word = data.draw(st.lists(st.integers(0, m.inputs - 1), max_size=6))
    assert run(m, s0, word) == run_via_lens(machine_to_lens(m), s0, word)


@given(machine(), machine(), st.data())
def test_tensor_runs_in_parallel(m1, m2, data):
    n = data.draw(st.integers(0, 5))
    w1 = data.draw(st.lists(st.integers(0, m1.inputs - 1), min_size=n, max_size=n))
    w2 = data.draw(st.lists(st.integers(0, m2.inputs - 1), min_size=n, max_size=n))
    r1, r2 = run(m1, 0, w1), run(m2, 0, w2)
    r = run(tensor_machines(m1, m2), 0, [a * m2.inputs + b for a, b in zip(w1, w2)])
    assert r.outputs == tuple(o1 * m2.outputs + o2 for o1, o2 in zip(r1.outputs, r2.outputs))
    assert r.final == r1.final * m2.states + r2.final
