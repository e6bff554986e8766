import itertools

import pytest

from glens import finset
from glens.dynamics import (
    MooreMachine,
    all_machines,
    check_wiring,
    count_machines,
    lens_to_machine,
    machine_to_lens,
    run,
    run_via_lens,
    step,
    tensor_machines,
    tensor_via_lens,
    toggle,
    wire,
)
from glens.errors import IndexOutOfRange, InterfaceMismatch, MalformedData
from glens.finset import fn
from glens.instances import ClassicLensMor, classic_homs, classic_identity


def words(alphabet, max_len):
    for n in range(max_len + 1):
        yield from itertools.product(range(alphabet), repeat=n)


def test_toggle_lens():
    lens = machine_to_lens(toggle())
    assert lens.get.table == (0, 1)
    assert lens.put.table == (0, 1, 1, 0)
    assert lens.source == (2, 2) and lens.target == (2, 2)


def test_one_state_machine_is_forced():
    assert count_machines(1, 3, 1) == 1
    assert sum(1 for _ in classic_homs(1, 1, 1, 3)) == 1


def test_lens_roundtrip():
    for S, A, B in itertools.product(range(3), repeat=3):
        for m in all_machines(S, A, B):
            assert lens_to_machine(machine_to_lens(m)) == m
    assert count_machines(2, 2, 2) == sum(1 for _ in all_machines(2, 2, 2))


def test_lens_to_machine_needs_simple_source():
    with pytest.raises(InterfaceMismatch):
        lens_to_machine(ClassicLensMor(fn(1, [0, 0]), fn(3, [0, 0]), 1))


def test_step():
    assert step(toggle(), 0, 1) == (0, 1)
    with pytest.raises(IndexOutOfRange):
        step(toggle(), 0, 2)
    m = MooreMachine.from_tables(1, 3, 2, [1], [0, 0, 0])
    assert all(step(m, 0, a)[1] == 0 for a in range(3))
    # update that ignores the input
    stay = MooreMachine.from_tables(3, 2, 3, [0, 1, 2], [0, 1, 2, 0, 1, 2])
    assert all(step(stay, s, a)[1] == s for s in range(3) for a in range(2))


def test_toggle_trace():
    t = run(toggle(), 0, [1, 1, 0, 1])
    assert t.outputs == (0, 1, 0, 0, 1) and t.final == 1
    assert run_via_lens(machine_to_lens(toggle()), 0, [1, 1, 0, 1]) == t


def test_empty_word_and_constant_dynamics():
    t = run(toggle(), 1, [])
    assert t.outputs == (1,) and t.final == 1
    stay = MooreMachine.from_tables(2, 2, 2, [0, 1], [0, 1, 0, 1])
    assert set(run(stay, 1, [0, 1, 1, 0]).outputs) == {1}


def test_direct_and_lens_simulation_agree():
    for m in all_machines(2, 2, 2):
        lens = machine_to_lens(m)
        for s0 in range(2):
            for w in words(2, 3):
                assert run(m, s0, w) == run_via_lens(lens, s0, w)


def test_malformed_machine():
    with pytest.raises(MalformedData):
        MooreMachine.from_tables(2, 2, 2, [0, 1], [0, 1, 1])


def test_tensor_sizes_and_unit():
    tt = tensor_machines(toggle(), toggle())
    assert (tt.states, tt.inputs, tt.outputs) == (4, 4, 4)
    unit = MooreMachine.from_tables(1, 1, 1, [0], [0])
    assert tensor_machines(toggle(), unit) == toggle()
    assert tensor_machines(unit, toggle()) == toggle()


def test_tensor_trace_is_zip():
    t = toggle()
    tt = tensor_machines(t, t)
    for w1 in itertools.product(range(2), repeat=3):
        for w2 in itertools.product(range(2), repeat=3):
            paired = [a * 2 + b for a, b in zip(w1, w2)]
            for s1, s2 in itertools.product(range(2), repeat=2):
                r1, r2, r = run(t, s1, w1), run(t, s2, w2), run(tt, s1 * 2 + s2, paired)
                assert r.outputs == tuple(a * 2 + b for a, b in zip(r1.outputs, r2.outputs))
                assert r.final == r1.final * 2 + r2.final


def test_tensor_via_lens_agrees():
    for m1 in all_machines(2, 1, 2):
        for m2 in all_machines(1, 2, 2):
            assert tensor_machines(m1, m2) == tensor_via_lens(m1, m2)
            assert tensor_machines(m2, m1) == tensor_via_lens(m2, m1)


def test_wire_identity():
    for m in all_machines(2, 2, 2):
        assert wire(m, classic_identity(2, 2)) == m


def test_wire_mismatch():
    with pytest.raises(InterfaceMismatch):
        wire(toggle(), classic_identity(1, 1))


def test_feedback_wiring():
    # ⟨B|A⟩ -> ⟨1|1⟩: close the loop by feeding the output back in as the input
    feedback = ClassicLensMor(finset.terminal(2), fn(2, [0, 1]), 1)
    for m in all_machines(2, 2, 2):
        closed = wire(m, feedback)
        assert (closed.states, closed.inputs, closed.outputs) == (2, 1, 1)
        for s0 in range(2):
            s, states = s0, [s0]
            for _ in range(4):
                s = m.update(m.readout(s) * 2 + s)
                states.append(s)
            assert run(closed, s0, [0] * 4).final == states[-1]
    closed = wire(toggle(), feedback)
    assert run(closed, 0, [0, 0, 0]).final == 0
    inverted = MooreMachine.from_tables(2, 2, 2, [1, 0], [0, 1, 1, 0])
    assert run(wire(inverted, feedback), 0, [0, 0, 0]).final == 1


def test_relabel_wiring():
    for relabel in finset.all_maps(2, 3):
        # get relabels outputs, put passes inputs through
        w = ClassicLensMor(relabel, finset.product(2, 2).proj2, 2)
        for m in all_machines(2, 2, 2):
            wired = wire(m, w)
            for s0 in range(2):
                for word in words(2, 3):
                    a, b = run(m, s0, word), run(wired, s0, word)
                    assert b.outputs == tuple(relabel(o) for o in a.outputs)
                    assert b.final == a.final


def test_wiring_functorial_small():
    report = check_wiring(1)
    assert report.ok and report.checks > 0
