"""Moore machines as lenses, wired together by lens composition.

A machine with states ``S``, inputs ``A`` and outputs ``B`` is the lens
``⟨S | S⟩ -> ⟨B | A⟩`` whose get part is the readout ``S -> B`` and whose put
part is the update ``S × A -> S``.  The update is stored with domain ``A × S``
and moved across by the symmetry when converting.  The interface is written
``⟨B | A⟩`` (outputs first) so that get lands in the outputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as cartesian
from typing import Sequence

from . import finset
from .catkit import LawReport
from .errors import IndexOutOfRange, InterfaceMismatch, MalformedData
from .finset import FinFn
from .instances import ClassicLensMor, classic_homs, classic_tensor, compose_classic

CONVENTION = "interface <B|A>: get = readout S -> B, put = update S x A -> S"


@dataclass(frozen=True)
class MooreMachine:
    states: int
    inputs: int
    outputs: int
    readout: FinFn
    update: FinFn

    def __post_init__(self):
        if (self.readout.dom, self.readout.cod) != (self.states, self.outputs):
            raise MalformedData(f"readout must be {self.states} -> {self.outputs}, got {self.readout!r}")
        if (self.update.dom, self.update.cod) != (self.inputs * self.states, self.states):
            raise MalformedData(
                f"update must be {self.inputs}x{self.states} -> {self.states}, got {self.update.dom} -> {self.update.cod}"
            )

    @classmethod
    def from_tables(cls, states: int, inputs: int, outputs: int, readout, update) -> MooreMachine:
        return cls(
            states,
            inputs,
            outputs,
            FinFn(states, outputs, tuple(readout)),
            FinFn(inputs * states, states, tuple(update)),
        )

    def to_json(self) -> dict:
        return {
            "states": self.states,
            "inputs": self.inputs,
            "outputs": self.outputs,
            "readout": list(self.readout.table),
            "update": list(self.update.table),
        }

    @classmethod
    def from_json(cls, data: dict) -> MooreMachine:
        return cls.from_tables(
            int(data["states"]), int(data["inputs"]), int(data["outputs"]), data["readout"], data["update"]
        )


@dataclass(frozen=True)
class Trace:
    initial: int
    inputs: tuple[int, ...]
    outputs: tuple[int, ...]
    final: int

    def to_json(self) -> dict:
        return {
            "initial": self.initial,
            "inputs": list(self.inputs),
            "outputs": list(self.outputs),
            "final": self.final,
        }


def toggle() -> MooreMachine:
    """Two states, output the state, input 1 flips it."""
    return MooreMachine.from_tables(2, 2, 2, [0, 1], [0, 1, 1, 0])


def machine_to_lens(m: MooreMachine) -> ClassicLensMor:
    put = finset.compose(finset.symmetry(m.states, m.inputs), m.update)
    return ClassicLensMor(m.readout, put, m.inputs)


def lens_to_machine(lens: ClassicLensMor) -> MooreMachine:
    (s, s2), (b, a) = lens.source, lens.target
    if s != s2:
        raise InterfaceMismatch(f"a machine lens must start at a simple object ⟨S|S⟩, got ⟨{s}|{s2}⟩")
    update = finset.compose(finset.symmetry(a, s), lens.put)
    return MooreMachine(s, a, b, lens.get, update)


def step(m: MooreMachine, s: int, a: int) -> tuple[int, int]:
    """Observe the output at ``s``, then consume ``a``: returns ``(output, next_state)``."""
    if not 0 <= s < m.states:
        raise IndexOutOfRange(f"state {s} out of range for {m.states} states")
    if not 0 <= a < m.inputs:
        raise IndexOutOfRange(f"input {a} out of range for {m.inputs} inputs")
    return m.readout(s), m.update(a * m.states + s)


def run(m: MooreMachine, s0: int, word: Sequence[int]) -> Trace:
    if not 0 <= s0 < m.states:
        raise IndexOutOfRange(f"initial state {s0} out of range for {m.states} states")
    s = s0
    outputs = []
    for a in word:
        out, s = step(m, s, a)
        outputs.append(out)
    outputs.append(m.readout(s))
    return Trace(s0, tuple(word), tuple(outputs), s)


def run_via_lens(lens: ClassicLensMor, s0: int, word: Sequence[int]) -> Trace:
    """Simulate straight from a machine lens ``⟨S|S⟩ -> ⟨B|A⟩``: ``out = get(s)``, ``s' = put(s, a)``."""
    (s_count, _), (_, a_count) = lens.source, lens.target
    if not 0 <= s0 < s_count:
        raise IndexOutOfRange(f"initial state {s0} out of range for {s_count} states")
    s = s0
    outputs = []
    for a in word:
        if not 0 <= a < a_count:
            raise IndexOutOfRange(f"input {a} out of range for {a_count} inputs")
        outputs.append(lens.get(s))
        s = lens.put(s * a_count + a)
    outputs.append(lens.get(s))
    return Trace(s0, tuple(word), tuple(outputs), s)


def tensor_machines(m1: MooreMachine, m2: MooreMachine) -> MooreMachine:
    """Run side by side: states, inputs and outputs are paired componentwise."""
    S1, S2 = m1.states, m2.states
    A2 = m2.inputs
    readout = finset.tensor(m1.readout, m2.readout)
    update = []
    for a in range(m1.inputs * A2):
        a1, a2 = divmod(a, A2)
        for s in range(S1 * S2):
            s1, s2 = divmod(s, S2)
            update.append(m1.update(a1 * S1 + s1) * S2 + m2.update(a2 * S2 + s2))
    return MooreMachine(
        S1 * S2, m1.inputs * A2, m1.outputs * m2.outputs, readout, FinFn(len(update), S1 * S2, tuple(update))
    )


def tensor_via_lens(m1: MooreMachine, m2: MooreMachine) -> MooreMachine:
    return lens_to_machine(classic_tensor(machine_to_lens(m1), machine_to_lens(m2)))


def wire(m: MooreMachine, w: ClassicLensMor) -> MooreMachine:
    """Post-compose the machine lens with a wiring lens ``⟨B|A⟩ -> ⟨B'|A'⟩``."""
    if w.source != (m.outputs, m.inputs):
        raise InterfaceMismatch(
            f"wiring expects interface ⟨{w.source[0]}|{w.source[1]}⟩, machine has ⟨{m.outputs}|{m.inputs}⟩"
        )
    return lens_to_machine(compose_classic(machine_to_lens(m), w))


def count_machines(S: int, A: int, B: int) -> int:
    return B**S * S ** (S * A)


def all_machines(S: int, A: int, B: int):
    for readout in finset.all_maps(S, B):
        for update in finset.all_maps(A * S, S):
            yield MooreMachine(S, A, B, readout, update)


def check_wiring(max_size: int = 2, sizes=None):
    """``wire(wire(m, w1), w2) == wire(m, w1 ⨟ w2)`` for every machine and wiring pair in range."""
    sizes = tuple(range(max_size + 1)) if sizes is None else tuple(sizes)
    report = LawReport("wiring functoriality")
    checks = 0
    iface = list(cartesian(sizes, sizes))
    homs = {
        (p, q): list(classic_homs(p[0], p[1], q[0], q[1])) for p in iface for q in iface
    }
    for S, A, B in cartesian(sizes, sizes, sizes):
        machines = list(all_machines(S, A, B))
        for mid in iface:
            for w1 in homs[((B, A), mid)]:
                stage = [wire(m, w1) for m in machines]
                for end in iface:
                    for w2 in homs[(mid, end)]:
                        w12 = compose_classic(w1, w2)
                        for m, m1 in zip(machines, stage):
                            checks += 1
                            if wire(m1, w2) != wire(m, w12):
                                report.fail("wire(wire(m, w1), w2) = wire(m, w1 ⨟ w2)", m.to_json(), w1.to_json(), w2.to_json())
    report.checks = checks
    return report
