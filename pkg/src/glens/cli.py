"""Command-line front end.

Every input file is JSON with a ``"schema": "glens/v1/<kind>"`` header.  Exit
codes: 0 when every check passes, 1 on a semantic failure (law violation,
failed isomorphism, interface mismatch, index out of range, resource bound),
2 when an input cannot be parsed or does not match its schema.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import __version__, catkit
from .catkit import FinCategory, LawReport, check_category_laws
from .comonoid import (
    Comonoid,
    FinSetCartesian,
    check_comonoid,
    check_recover_usual,
    check_smc,
    cokleisli_indexed,
    comonoid_candidates,
    enumerate_comonoids,
    finset_restricted_smc,
    fox_comonoid,
)
from .dynamics import CONVENTION, MooreMachine, lens_to_machine, machine_to_lens, run, run_via_lens
from .errors import GlensError, InterfaceMismatch, MalformedData, ParseError, bounded
from .finset import FinFn
from .indexed import IndexedCat, check_indexed_laws, check_tfae_iso, constant_indexed, lens_category
from .instances import (
    FINSET_OP_PLUS,
    FINSET_TIMES,
    Bimorphic,
    ClassicLensMor,
    PrismMor,
    check_twisted_iso,
    classic_lens_category,
    compose_classic,
    compose_prism,
    coslice_indexed,
    lens_compose_put,
    prism_category,
    slice_indexed,
)

SCHEMA_PREFIX = "glens/v1/"
STRUCTURES = {FINSET_TIMES.name: FINSET_TIMES, FINSET_OP_PLUS.name: FINSET_OP_PLUS}


def dump_json(doc) -> str:
    """Canonical text form: sorted keys, two-space indent, trailing newline."""
    return json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


# -- loading ------------------------------------------------------------------


def load_document(path: str) -> dict:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read file ({exc.strerror})", path) from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, f"{path}:{exc.lineno}:{exc.colno}") from None
    if not isinstance(doc, dict):
        raise ParseError("top level must be a JSON object", f"{path}:$")
    schema = doc.get("schema")
    if not isinstance(schema, str) or not schema.startswith(SCHEMA_PREFIX):
        raise ParseError(f"missing or unknown schema header {schema!r}", f"{path}:$.schema")
    return doc


def kind_of(doc: dict) -> str:
    return doc["schema"][len(SCHEMA_PREFIX):]


def _field(doc, key, where):
    if not isinstance(doc, dict):
        raise ParseError("expected an object", where)
    if key not in doc:
        raise ParseError(f"missing field {key!r}", where)
    return doc[key]


def _int(value, where, lo=0, hi=None) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ParseError(f"expected an integer, got {value!r}", where)
    if value < lo or (hi is not None and value >= hi):
        bound = f"[{lo}, {hi})" if hi is not None else f">= {lo}"
        raise ParseError(f"value {value} outside {bound}", where)
    return value


def _int_list(value, where, lo=0, hi=None) -> list[int]:
    if not isinstance(value, list):
        raise ParseError("expected a list", where)
    return [_int(v, f"{where}[{k}]", lo, hi) for k, v in enumerate(value)]


def parse_fn(doc, where) -> FinFn:
    dom = _int(_field(doc, "dom", where), f"{where}.dom")
    cod = _int(_field(doc, "cod", where), f"{where}.cod")
    table = _int_list(_field(doc, "table", where), f"{where}.table", 0, cod)
    if len(table) != dom:
        raise ParseError(f"table has {len(table)} entries, dom is {dom}", f"{where}.table")
    return FinFn(dom, cod, tuple(table))


def parse_category(doc, where) -> FinCategory:
    n = _int(_field(doc, "objects", where), f"{where}.objects")
    mors = _field(doc, "morphisms", where)
    if not isinstance(mors, list):
        raise ParseError("expected a list", f"{where}.morphisms")
    ends = tuple(
        (
            _int(_field(m, "dom", f"{where}.morphisms[{k}]"), f"{where}.morphisms[{k}].dom", 0, n),
            _int(_field(m, "cod", f"{where}.morphisms[{k}]"), f"{where}.morphisms[{k}].cod", 0, n),
        )
        for k, m in enumerate(mors)
    )
    identity = _int_list(_field(doc, "identity", where), f"{where}.identity", 0, len(ends))
    if len(identity) != n:
        raise ParseError(f"{len(identity)} identities for {n} objects", f"{where}.identity")
    rows = _field(doc, "comp", where)
    if not isinstance(rows, list):
        raise ParseError("expected a list", f"{where}.comp")
    comp = {}
    for k, row in enumerate(rows):
        triple = _int_list(row, f"{where}.comp[{k}]", 0, len(ends))
        if len(triple) != 3:
            raise ParseError("expected [f, g, f⨟g]", f"{where}.comp[{k}]")
        f, g, h = triple
        if (f, g) in comp:
            raise ParseError(f"pair ({f}, {g}) listed twice", f"{where}.comp[{k}]")
        comp[(f, g)] = h
    C = FinCategory(n, ends, tuple(identity), comp)
    for f, g in C.composable_pairs():
        if (f, g) not in comp:
            raise ParseError(f"composable pair ({f}, {g}) has no composite", f"{where}.comp")
    return C


def _indexed_from_doc(doc, where) -> IndexedCat:
    base = parse_category(_field(doc, "base", where), f"{where}.base")
    fibers_doc = _field(doc, "fibers", where)
    if not isinstance(fibers_doc, list):
        raise ParseError("expected a list", f"{where}.fibers")
    fibers = [parse_category(fb, f"{where}.fibers[{k}]") for k, fb in enumerate(fibers_doc)]
    if len(fibers) != base.n_objects:
        raise ParseError(f"{len(fibers)} fibers for {base.n_objects} base objects", f"{where}.fibers")
    covariant = bool(doc.get("covariant", False))
    entries = {}
    for k, r in enumerate(_field(doc, "reindex", where)):
        entries[_int(_field(r, "mor", f"{where}.reindex[{k}]"), f"{where}.reindex[{k}].mor", 0, base.n_morphisms)] = (k, r)
    reindex = []
    for f, (c, d) in enumerate(base.morphisms):
        if f not in entries:
            raise ParseError(f"no reindexing functor for base morphism {f}", f"{where}.reindex")
        k, r = entries[f]
        src, tgt = (fibers[c], fibers[d]) if covariant else (fibers[d], fibers[c])
        at = f"{where}.reindex[{k}]"
        obj_map = _int_list(_field(r, "obj_map", at), f"{at}.obj_map", 0, tgt.n_objects)
        mor_map = _int_list(_field(r, "mor_map", at), f"{at}.mor_map", 0, tgt.n_morphisms)
        if len(obj_map) != src.n_objects or len(mor_map) != src.n_morphisms:
            raise ParseError("functor tables do not cover the source fiber", at)
        reindex.append(catkit.FunctorData(src, tgt, tuple(obj_map), tuple(mor_map)))
    return IndexedCat(base, tuple(fibers), tuple(reindex), covariant)


def _size(doc, key, where, default):
    return _int(doc.get(key, default), f"{where}.{key}")


def resolve_instance(desc, where):
    """A named built-in: returns ``("category" | "indexed" | "smc", value)``."""
    if isinstance(desc, str):
        desc = {"instance": desc}
    if isinstance(desc, dict) and "objects" in desc and "instance" not in desc:
        return "category", parse_category(desc, where)
    name = _field(desc, "instance", where)
    if name == "walking-arrow":
        return "category", catkit.walking_arrow()
    if name == "commutative-square":
        return "category", catkit.commutative_square()
    if name == "terminal":
        return "category", catkit.terminal_category()
    if name == "finset":
        return "category", catkit.finset_category(_size(desc, "max_size", where, 2))
    if name == "classic-lenses":
        return "category", classic_lens_category(_size(desc, "max_size", where, 1))
    if name == "prisms":
        return "category", prism_category(_size(desc, "max_size", where, 1))
    if name == "twisted-arrow":
        return "category", catkit.twisted_arrow(_category(desc.get("of", "walking-arrow"), f"{where}.of"))
    if name == "lens":
        return "category", lens_category(_indexed(_field(desc, "of", where), f"{where}.of"))
    if name == "slice":
        m = _size(desc, "max_size", where, 2)
        return "indexed", slice_indexed(m, _size(desc, "fiber_max", where, m))
    if name == "constant-terminal":
        base = _category(desc.get("base", {"instance": "finset", "max_size": 2}), f"{where}.base")
        return "indexed", constant_indexed(base)
    if name == "coslice":
        return "indexed", coslice_indexed(_category(desc.get("of", "walking-arrow"), f"{where}.of"))
    if name == "cokleisli":
        M, comonoids, objects = _smc(desc.get("smc", {"smc": "finset-cartesian"}), f"{where}.smc")
        return "indexed", cokleisli_indexed(M, comonoids, objects)
    raise ParseError(f"unknown instance {name!r}", f"{where}.instance")


def _category(desc, where) -> FinCategory:
    kind, value = resolve_instance(desc, where)
    if kind != "category":
        raise ParseError(f"expected a category, {desc!r} names an {kind} instance", where)
    return value


def _indexed(desc, where) -> IndexedCat:
    if isinstance(desc, dict) and "base" in desc and "instance" not in desc:
        return _indexed_from_doc(desc, where)
    kind, value = resolve_instance(desc, where)
    if kind != "indexed":
        raise ParseError(f"expected an indexed category, {desc!r} names a {kind}", where)
    return value


def _smc(doc, where):
    name = _field(doc, "smc", where)
    if name == "finset-cartesian":
        M = FinSetCartesian()
        objects = _int_list(doc.get("objects", [0, 1, 2]), f"{where}.objects")
    elif name == "finset-restricted":
        sizes = _int_list(doc.get("sizes", [0, 1]), f"{where}.sizes")
        try:
            M = finset_restricted_smc(sizes)
        except MalformedData as exc:
            raise ParseError(str(exc), f"{where}.sizes") from None
        objects = _int_list(doc.get("objects", list(range(len(sizes)))), f"{where}.objects", 0, len(sizes))
    else:
        raise ParseError(f"unknown symmetric monoidal category {name!r}", f"{where}.smc")
    if "comonoids" in doc:
        comonoids = []
        for k, c in enumerate(doc["comonoids"]):
            at = f"{where}.comonoids[{k}]"
            _int(_field(c, "object", at), f"{at}.object")
            _int(_field(c, "counit", at), f"{at}.counit")
            _int(_field(c, "comult", at), f"{at}.comult")
            try:
                comonoids.append(Comonoid.from_json(M, c))
            except (MalformedData, KeyError, IndexError) as exc:
                raise ParseError(str(exc), at) from None
    elif name == "finset-cartesian":
        comonoids = [fox_comonoid(n) for n in objects]
    else:
        raise ParseError("finset-restricted needs an explicit comonoid list", f"{where}.comonoids")
    return M, comonoids, objects


def load_category(path) -> FinCategory:
    doc = load_document(path)
    kind = kind_of(doc)
    if kind == "category":
        return parse_category(doc, f"{path}:$")
    if kind == "instance":
        return _category(doc, f"{path}:$")
    raise ParseError(f"expected a category or instance file, got {kind!r}", f"{path}:$.schema")


def load_indexed(path) -> IndexedCat:
    doc = load_document(path)
    kind = kind_of(doc)
    if kind == "indexed":
        return _indexed_from_doc(doc, f"{path}:$")
    if kind == "instance":
        return _indexed(doc, f"{path}:$")
    raise ParseError(f"expected an indexed or instance file, got {kind!r}", f"{path}:$.schema")


def load_smc(path):
    doc = load_document(path)
    if kind_of(doc) != "smc":
        raise ParseError(f"expected an smc file, got {kind_of(doc)!r}", f"{path}:$.schema")
    return _smc(doc, f"{path}:$")


def parse_machine(doc, where) -> MooreMachine:
    S = _int(_field(doc, "states", where), f"{where}.states")
    A = _int(_field(doc, "inputs", where), f"{where}.inputs")
    B = _int(_field(doc, "outputs", where), f"{where}.outputs")
    readout = _int_list(_field(doc, "readout", where), f"{where}.readout", 0, B)
    update = _int_list(_field(doc, "update", where), f"{where}.update", 0, S)
    if len(readout) != S:
        raise ParseError(f"readout has {len(readout)} entries for {S} states", f"{where}.readout")
    if len(update) != A * S:
        raise ParseError(f"update has {len(update)} entries, expected inputs×states = {A * S}", f"{where}.update")
    return MooreMachine.from_tables(S, A, B, readout, update)


def parse_classic(doc, where) -> ClassicLensMor:
    get = parse_fn(_field(doc, "get", where), f"{where}.get")
    put = parse_fn(_field(doc, "put", where), f"{where}.put")
    if "y" in doc:
        y = _int(doc["y"], f"{where}.y")
    elif get.dom:
        y = put.dom // get.dom
    else:
        raise ParseError("field 'y' is required when get has an empty domain", where)
    if put.dom != get.dom * y:
        raise ParseError(f"put has domain {put.dom}, expected {get.dom}×{y}", f"{where}.put")
    return ClassicLensMor(get, put, y)


def parse_prism(doc, where) -> PrismMor:
    get = parse_fn(_field(doc, "get", where), f"{where}.get")
    put = parse_fn(_field(doc, "put", where), f"{where}.put")
    if put.cod < get.cod:
        raise ParseError(f"put codomain {put.cod} is smaller than c = {get.cod}", f"{where}.put")
    return PrismMor(get, put)


def parse_generic(doc, where):
    name = _field(doc, "structure", where)
    if name not in STRUCTURES:
        raise ParseError(f"unknown structure {name!r}, expected one of {sorted(STRUCTURES)}", f"{where}.structure")
    K = STRUCTURES[name]
    c, x, d, y = (_int(_field(doc, k, where), f"{where}.{k}") for k in "cxdy")
    get = parse_fn(_field(doc, "get", where), f"{where}.get")
    put = parse_fn(_field(doc, "put", where), f"{where}.put")
    if (get.dom, get.cod) != K.hom_shape(c, d):
        raise ParseError(f"get must have shape {K.hom_shape(c, d)}", f"{where}.get")
    if (put.dom, put.cod) != K.hom_shape(K.times_ob(c, y), x):
        raise ParseError(f"put must have shape {K.hom_shape(K.times_ob(c, y), x)}", f"{where}.put")
    return K, Bimorphic(c, x, d, y, get, put)


def generic_to_json(K, m: Bimorphic) -> dict:
    return {
        "schema": SCHEMA_PREFIX + "lens",
        "structure": K.name,
        "c": m.c,
        "x": m.x,
        "d": m.d,
        "y": m.y,
        "get": m.get.to_json(),
        "put": m.put.to_json(),
    }


def compose_generic(K, m1: Bimorphic, m2: Bimorphic) -> Bimorphic:
    if (m1.d, m1.y) != (m2.c, m2.x):
        raise InterfaceMismatch(f"lens into ⟨{m1.d}|{m1.y}⟩ cannot feed ⟨{m2.c}|{m2.x}⟩")
    put = lens_compose_put(K, m1.c, m2.y, m1.get, m1.put, m2.put)
    return Bimorphic(m1.c, m1.x, m2.d, m2.y, K.compose(m1.get, m2.get), put)


# -- reports ------------------------------------------------------------------


class Report:
    """Collects law reports and counts; renders deterministically."""

    def __init__(self, command: list[str]):
        self.command = command
        self.results: list[LawReport] = []
        self.counts: dict[str, int] = {}
        self.extra: dict = {}
        self.error: str | None = None
        self.wall_time: float | None = None

    @property
    def ok(self) -> bool:
        return self.error is None and all(r.ok for r in self.results)

    def to_json(self) -> dict:
        doc = {
            "schema": SCHEMA_PREFIX + "report",
            "command": self.command,
            "status": "pass" if self.ok else "fail",
            "results": [r.to_json() for r in self.results],
            "counts": dict(sorted(self.counts.items())),
        }
        doc.update(self.extra)
        if self.error is not None:
            doc["error"] = self.error
        if self.wall_time is not None:
            doc["wall_time_s"] = round(self.wall_time, 3)
        return doc

    def to_text(self) -> str:
        lines = ["glens " + " ".join(self.command)]
        for r in self.results:
            lines.append(r.summary())
            for law, witness in r.violations[:5]:
                lines.append(f"  {law}: {', '.join(map(str, witness))}")
        for key, value in sorted(self.counts.items()):
            lines.append(f"{key}: {value}")
        for key, value in self.extra.items():
            lines.append(f"{key}: {value}")
        if self.error is not None:
            lines.append(f"error: {self.error}")
        if self.wall_time is not None:
            lines.append(f"wall time: {self.wall_time:.3f}s")
        lines.append("status: " + ("pass" if self.ok else "fail"))
        return "\n".join(lines) + "\n"


def _category_counts(report: Report, C: FinCategory, prefix: str = ""):
    report.counts[prefix + "objects"] = C.n_objects
    report.counts[prefix + "morphisms"] = C.n_morphisms


# -- commands -----------------------------------------------------------------


def cmd_laws(args, report: Report):
    if args.kind == "category":
        C = load_category(args.input)
        _category_counts(report, C)
        report.results.append(check_category_laws(C))
    elif args.kind == "indexed":
        F = load_indexed(args.input)
        report.counts["base objects"] = F.base.n_objects
        report.counts["base morphisms"] = F.base.n_morphisms
        report.counts["fiber morphisms"] = sum(fb.n_morphisms for fb in F.fibers)
        report.results.append(check_indexed_laws(F))
    else:
        M, comonoids, objects = load_smc(args.input)
        report.counts["objects"] = len(objects)
        report.counts["comonoids"] = len(comonoids)
        report.results.append(check_smc(M, objects))
        for K in comonoids:
            report.results.append(check_comonoid(M, K))


def cmd_iso(args, report: Report):
    if args.construction == "tfae":
        iso = check_tfae_iso(load_indexed(args.input), raise_on_failure=False)
    elif args.construction == "recover-usual":
        M, comonoids, objects = load_smc(args.input)
        iso = check_recover_usual(M, comonoids, objects, raise_on_failure=False)
    else:
        C = load_category(args.input)
        laws = check_category_laws(C, "input category laws")
        report.results.append(laws)
        if not laws.ok:
            return
        iso = check_twisted_iso(C)
    report.results.append(iso)
    report.counts.update(iso.counts)


def cmd_compose(args, report: Report):
    first, second = load_document(args.first), load_document(args.second)
    k1, k2 = kind_of(first), kind_of(second)
    w1, w2 = f"{args.first}:$", f"{args.second}:$"
    if args.kind == "classic":
        if k2 != "classic-lens":
            raise ParseError(f"expected a classic-lens file, got {k2!r}", f"{w2}.schema")
        lens2 = parse_classic(second, w2)
        if k1 == "machine":
            machine = lens_to_machine(compose_classic(machine_to_lens(parse_machine(first, w1)), lens2))
            out = {"schema": SCHEMA_PREFIX + "machine", **machine.to_json()}
        elif k1 == "classic-lens":
            out = {"schema": SCHEMA_PREFIX + "classic-lens", **compose_classic(parse_classic(first, w1), lens2).to_json()}
        else:
            raise ParseError(f"expected a classic-lens or machine file, got {k1!r}", f"{w1}.schema")
    elif args.kind == "prism":
        for k, w in ((k1, w1), (k2, w2)):
            if k != "prism":
                raise ParseError(f"expected a prism file, got {k!r}", f"{w}.schema")
        out = {"schema": SCHEMA_PREFIX + "prism", **compose_prism(parse_prism(first, w1), parse_prism(second, w2)).to_json()}
    else:
        for k, w in ((k1, w1), (k2, w2)):
            if k != "lens":
                raise ParseError(f"expected a lens file, got {k!r}", f"{w}.schema")
        K1, m1 = parse_generic(first, w1)
        K2, m2 = parse_generic(second, w2)
        if K1 is not K2:
            raise ParseError("both lenses must live over the same structure", f"{w2}.structure")
        out = generic_to_json(K1, compose_generic(K1, m1, m2))
    text = dump_json(out)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
        report.extra["output"] = args.output
        return None
    return text


def parse_word(text: str) -> list[int]:
    if not text.strip():
        return []
    word = []
    for k, item in enumerate(text.split(",")):
        try:
            word.append(int(item.strip()))
        except ValueError:
            raise ParseError(f"input {item.strip()!r} is not an integer", f"--inputs[{k}]") from None
    return word


def cmd_simulate(args, report: Report):
    doc = load_document(args.machine)
    if kind_of(doc) != "machine":
        raise ParseError(f"expected a machine file, got {kind_of(doc)!r}", f"{args.machine}:$.schema")
    m = parse_machine(doc, f"{args.machine}:$")
    word = parse_word(args.inputs)
    trace = run(m, args.initial, word)
    report.extra["convention"] = CONVENTION
    report.extra["initial"] = trace.initial
    report.extra["inputs"] = list(trace.inputs)
    report.extra["outputs"] = list(trace.outputs)
    report.extra["final"] = trace.final
    if args.oracle:
        oracle = run_via_lens(machine_to_lens(m), args.initial, word)
        check = LawReport("lens-composition oracle", checks=1)
        if oracle != trace:
            check.fail("direct and lens traces differ", trace.to_json(), oracle.to_json())
        report.results.append(check)


def cmd_enumerate(args, report: Report):
    M = FinSetCartesian()
    n = args.size
    found = enumerate_comonoids(M, n)
    candidates = sum(1 for _ in comonoid_candidates(M, n))
    report.counts["candidates"] = candidates
    report.counts["comonoids"] = len(found)
    report.extra["structures"] = [
        {
            **K.to_json(M),
            "counit_table": list(K.counit.table),
            "comult_table": list(K.comult.table),
        }
        for K in found
    ]
    check = LawReport("comonoid count", checks=1)
    if len(found) != 1:
        check.fail("expected exactly one comonoid structure", n, len(found))
    report.results.append(check)


# -- entry point ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    def global_flags(parser, default):
        # Defaults live on the top-level parser only, so a flag given before the command survives.
        parser.add_argument("--format", choices=("text", "json"), default=default("text"))
        parser.add_argument("--limit", type=int, default=default(None), help="resource bound (default: $GLENS_LIMIT or built-in)")
        parser.add_argument("--timing", action="store_true", default=default(False), help="include wall time in the report")

    common = argparse.ArgumentParser(add_help=False)
    global_flags(common, lambda v: argparse.SUPPRESS)
    p = argparse.ArgumentParser(prog="glens", description="Exhaustive law checks for finite lens categories.")
    p.add_argument("--version", action="version", version=f"glens {__version__}")
    global_flags(p, lambda v: v)
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("laws", parents=[common], help="run a law suite")
    s.add_argument("--kind", choices=("category", "indexed", "smc"), required=True)
    s.add_argument("input")

    s = sub.add_parser("iso", parents=[common], help="check an isomorphism of constructions")
    s.add_argument("--construction", choices=("tfae", "recover-usual", "twisted-arrow"), required=True)
    s.add_argument("input")

    s = sub.add_parser("compose", parents=[common], help="compose two lenses")
    s.add_argument("--kind", choices=("classic", "prism", "generic"), required=True)
    s.add_argument("--output", "-o", default=None)
    s.add_argument("first")
    s.add_argument("second")

    s = sub.add_parser("simulate", parents=[common], help="run a Moore machine")
    s.add_argument("machine")
    s.add_argument("--inputs", default="")
    s.add_argument("--initial", type=int, default=0)
    s.add_argument("--oracle", action="store_true", help="re-run through the lens path and compare")

    s = sub.add_parser("enumerate-comonoids", parents=[common], help="brute-force comonoid structures")
    s.add_argument("--smc", choices=("finset-cartesian",), default="finset-cartesian")
    s.add_argument("--size", type=int, required=True)
    return p


COMMANDS = {
    "laws": cmd_laws,
    "iso": cmd_iso,
    "compose": cmd_compose,
    "simulate": cmd_simulate,
    "enumerate-comonoids": cmd_enumerate,
}


def _echo(argv: list[str]) -> list[str]:
    # Drop the presentation flags so text and json reports describe the same run.
    out, skip = [], False
    for a in argv:
        if skip:
            skip = False
            continue
        if a == "--format":
            skip = True
            continue
        if a.startswith("--format=") or a == "--timing":
            continue
        out.append(a)
    return out


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    report = Report(_echo(argv))
    start = time.perf_counter()
    payload = None
    code = 0
    try:
        with bounded(args.limit):
            payload = COMMANDS[args.command](args, report)
    except (ParseError, MalformedData) as exc:
        report.error = f"malformed input: {exc}"
        code = 2
    except GlensError as exc:
        report.error = f"{type(exc).__name__}: {exc}"
        code = 1
    if code == 0 and not report.ok:
        code = 1
    if args.timing:
        report.wall_time = time.perf_counter() - start
    if payload is not None and code == 0:
        sys.stdout.write(payload)
    else:
        sys.stdout.write(dump_json(report.to_json()) if args.format == "json" else report.to_text())
    if code == 2:
        sys.stderr.write(f"glens: {report.error}\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
