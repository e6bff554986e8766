"""End-to-end acceptance checks, one test per criterion.

Each test prints a single ``criterion N: PASS|FAIL ...`` line; the lines are
also collected into a terminal summary section.
"""

import itertools
import time
from contextlib import contextmanager
from pathlib import Path

from conftest import ACCEPTANCE_LINES

from glens import catkit, finset
from glens.catkit import check_category_laws
from glens.cli import main
from glens.comonoid import (
    FinSetCartesian,
    check_recover_usual,
    cokleisli_indexed,
    comon_category,
    comonoid_candidates,
    enumerate_comonoids,
    fox_comonoid,
    smc_lens_category,
)
from glens.dynamics import check_wiring, machine_to_lens, run, run_via_lens, toggle
from glens.indexed import check_interchange, check_tfae_iso, constant_indexed, lens_category, lens_tensor
from glens.instances import (
    check_adjoint_triple,
    check_classic_embedding,
    check_twisted_iso,
    classic_homs,
    coslice_indexed,
    slice_indexed,
    slice_monoidal,
)

FIXTURES = Path(__file__).parent / "fixtures"
M = FinSetCartesian()
BUDGET = 60.0


@contextmanager
def criterion(n, what):
    start = time.perf_counter()
    notes = []
    status = "FAIL"
    try:
        yield notes
        status = "PASS"
    finally:
        elapsed = time.perf_counter() - start
        extra = f" ({'; '.join(notes)})" if notes else ""
        line = f"criterion {n}: {status} {what}{extra} [{elapsed:.1f}s]"
        print(line)
        ACCEPTANCE_LINES.append(line)


def timed(fn, *args):
    start = time.perf_counter()
    out = fn(*args)
    elapsed = time.perf_counter() - start
    assert elapsed < BUDGET, f"{elapsed:.1f}s over budget"
    return out


def fox(n):
    return [fox_comonoid(k) for k in range(n + 1)]


def test_criterion_1_lens_category_laws():
    with criterion(1, "lens category laws") as notes:
        instances = {
            "slice(2)": lambda: slice_indexed(2),
            "coslice(walking arrow)": lambda: coslice_indexed(catkit.walking_arrow()),
            "coKleisli(finset, ≤2)": lambda: cokleisli_indexed(M, fox(2), [0, 1, 2]),
        }
        for name, build in instances.items():
            report = timed(lambda: check_category_laws(lens_category(build())))
            assert report.ok, report.summary()
            notes.append(f"{name}: {report.checks} checks")


def test_criterion_2_tfae():
    with criterion(2, "three-way isomorphism over the base") as notes:
        for name, F in (("slice(2)", slice_indexed(2)), ("constant terminal", constant_indexed(catkit.finset_category(2)))):
            report = timed(check_tfae_iso, F)
            assert report.ok
            notes.append(f"{name}: {report.counts['morphisms']} morphisms")


def test_criterion_3_recover_usual():
    with criterion(3, "coKleisli lenses equal SMC lenses") as notes:
        comonoids, objects = fox(2), [0, 1, 2]
        report = timed(check_recover_usual, M, comonoids, objects)
        F = cokleisli_indexed(M, comonoids, objects)
        L = lens_category(F)
        S = smc_lens_category(M, comonoids, objects, base=F.base)
        assert [tuple(o) for o in L.object_labels] == [tuple(o) for o in S.object_labels]
        assert report.counts["identical morphism ids"] == L.n_morphisms == S.n_morphisms
        # same hom ends, identities and full composition table
        assert L == S
        notes.append(f"{L.n_objects} objects, {L.n_morphisms} morphisms, {len(L.comp)} composites")


def test_criterion_4_classic_embedding():
    with criterion(4, "classic lens composition agrees with the dependent embedding") as notes:
        report = timed(check_classic_embedding, 2)
        assert report.ok, report.summary()
        count = sum(1 for _ in classic_homs(2, 2, 2, 2))
        assert count == 64
        notes.append(f"{report.checks} checks; |hom(<2|2>, <2|2>)| = {count}")


def test_criterion_5_fox():
    with criterion(5, "unique comonoid structures") as notes:
        for n in range(4):
            candidates = sum(1 for _ in comonoid_candidates(M, n))
            found = enumerate_comonoids(M, n)
            assert found == [fox_comonoid(n)]
            notes.append(f"n={n}: 1 of {candidates}")
        C = comon_category(M, fox(3))
        for i, j in itertools.product(range(4), repeat=2):
            assert len(C.hom(i, j)) == finset.count_maps(i, j)


def test_criterion_6_twisted_arrow():
    with criterion(6, "coslice lenses are twisted arrows") as notes:
        for name, C, n in (("walking arrow", catkit.walking_arrow(), 3), ("commutative square", catkit.commutative_square(), 9)):
            report = timed(check_twisted_iso, C)
            assert report.ok
            assert report.counts["source objects"] == report.counts["target objects"] == n
            notes.append(f"{name}: {n} objects")


def test_criterion_7_wiring():
    with criterion(7, "wiring compositionality and toggle trace") as notes:
        report = timed(check_wiring, 2)
        assert report.ok, report.summary()
        direct = run(toggle(), 0, [1, 1, 0, 1])
        via = run_via_lens(machine_to_lens(toggle()), 0, [1, 1, 0, 1])
        assert direct.outputs == via.outputs == (0, 1, 0, 0, 1)
        assert direct.final == via.final == 1
        notes.append(f"{report.checks} wiring checks")


def test_criterion_8_interchange():
    with criterion(8, "lens tensor interchange on the slice instance") as notes:
        # base sizes up to 4 so that products of sizes ≤ 2 are tabulated
        F = slice_indexed(sizes=(0, 1, 2, 4), fiber_max=1)
        B = F.base
        small = [B.find_object(n) for n in (0, 1, 2)]
        M_, phi = slice_monoidal(F)
        T = lens_tensor(F, M_, phi, small)
        objects = [o for o in F.objects() if o.base_obj in small]
        report = timed(check_interchange, T, objects)
        assert report.ok, report.summary()
        notes.append(f"{report.checks} checks over {len(objects)} lens objects")


def test_criterion_9_adjoint_triple():
    with criterion(9, "dependent sum, reindexing, dependent product") as notes:
        report = timed(check_adjoint_triple, 2)
        assert report.ok, report.summary()
        notes.append(f"{report.checks} hom-set bijections")


MATRIX = [
    (["laws", "--kind", "category", "walking_arrow.json"], 0),
    (["laws", "--kind", "category", "walking_arrow_bad_comp.json"], 1),
    (["laws", "--kind", "category", "nonassociative.json"], 1),
    (["laws", "--kind", "smc", "bad_comonoid.json"], 1),
    (["compose", "--kind", "classic", "lens_2_1.json", "relabel_wiring.json"], 1),
    (["laws", "--kind", "category", "missing_pair.json"], 2),
    (["laws", "--kind", "category", "truncated.json"], 2),
    (["laws", "--kind", "category", "garbage.json"], 2),
    (["laws", "--kind", "category", "wrong_schema.json"], 2),
    (["simulate", "toggle_bad_update.json"], 2),
    (["iso", "--construction", "twisted-arrow", "commutative_square.json"], 0),
    (["simulate", "toggle.json", "--inputs", "1,1,0,1", "--oracle"], 0),
]


def test_criterion_10_cli(capsys):
    with criterion(10, "CLI determinism and exit codes") as notes:
        for argv, expected in MATRIX:
            argv = [str(FIXTURES / a) if a.endswith(".json") else a for a in argv]
            outputs = []
            for fmt in ("text", "json", "text", "json"):
                code = main(["--format", fmt, *argv])
                assert code == expected, argv
                outputs.append(capsys.readouterr())
            assert outputs[0] == outputs[2] and outputs[1] == outputs[3]
        notes.append(f"{len(MATRIX)} fixtures, byte-identical reruns")
