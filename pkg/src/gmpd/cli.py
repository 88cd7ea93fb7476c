"""Command-line front end: JSON count reports, DOT diagrams, spectrum
enumeration, and the exhaustive verification sweep.

Model documents are JSON objects in exactly one of two forms:

    {"counts": {"K1": 0, "K2": 0, "K3": 1, "K4": 2}}
    {"maximal_ideals": ["K3", "K4", "K4"]}

Exit codes: 0 success, 1 verification failure, 2 input error, 3 resource
guard (lattice size or search bound exceeded).  Identical invocations
produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import counting, lattice, spectrum
from .constructors import count_tuples, from_counts
from .model import DomainModel, LocalClass, is_mpd, is_prufer

EXIT_OK = 0
EXIT_VERIFICATION = 1
EXIT_INPUT = 2
EXIT_RESOURCE = 3

TAG_NAMES = [cls.value for cls in LocalClass]


class DocumentError(ValueError):
    """Malformed model document or command input."""


def parse_model_document(text: str) -> DomainModel:
    """Parse a JSON model document in counts or maximal-ideals form."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise DocumentError("model document must be a JSON object")
    has_counts = "counts" in doc
    has_list = "maximal_ideals" in doc
    if has_counts == has_list:
        raise DocumentError(
            'model document needs exactly one of "counts" and "maximal_ideals"'
        )
    unknown = set(doc) - {"counts", "maximal_ideals"}
    if unknown:
        raise DocumentError(f"unknown document keys: {sorted(unknown)}")
    if has_counts:
        counts = doc["counts"]
        if not isinstance(counts, dict):
            raise DocumentError('"counts" must map class tags to integers')
        bad = set(counts) - set(TAG_NAMES)
        if bad:
            raise DocumentError(f"unknown local class tags: {sorted(bad)}")
        quartet = []
        for tag in TAG_NAMES:
            k = counts.get(tag, 0)
            if not isinstance(k, int) or isinstance(k, bool) or k < 0:
                raise DocumentError(f"count for {tag} must be a non-negative integer")
            quartet.append(k)
        return from_counts(*quartet)
    tags = doc["maximal_ideals"]
    if not isinstance(tags, list):
        raise DocumentError('"maximal_ideals" must be a list of class tags')
    try:
        return DomainModel.from_tags(tags)
    except (TypeError, ValueError) as exc:
        raise DocumentError(str(exc)) from None


def load_model_argument(arg: str) -> DomainModel:
    """Accept an inline JSON object, "-" for stdin, or a path to a JSON file."""
    if arg.lstrip().startswith("{"):
        return parse_model_document(arg)
    if arg == "-":
        return parse_model_document(sys.stdin.read())
    try:
        with open(arg, "r", encoding="utf-8") as fh:
            return parse_model_document(fh.read())
    except OSError as exc:
        raise DocumentError(f"cannot read model document: {exc}") from None


def model_json(model: DomainModel) -> dict:
    return {
        "maximal_ideals": model.tags,
        "counts": dict(zip(TAG_NAMES, model.counts)),
    }


def build_report(
    model: DomainModel,
    include_lattice: bool = False,
    size_guard: int = lattice.DEFAULT_SIZE_GUARD,
) -> dict:
    """Assemble the full JSON report; every count is cross-checked before emission."""
    rep = counting.count_report(model)
    ch = counting.characterize(model)
    shape = spectrum.canonical_shape(spectrum.spectrum_of(model))
    doc = {
        "model": model_json(model),
        "max_count": rep.max_count,
        "total_overrings": rep.total_overrings,
        "quasi_local_overrings": rep.quasi_local_overrings,
        "characterization": {
            "noetherian": ch.noetherian,
            "prufer": ch.prufer,
            "dedekind": ch.dedekind,
            "count_noetherian_formula": ch.count_noetherian_formula,
            "count_prufer_formula": ch.count_prufer_formula,
            "count_dedekind_formula": ch.count_dedekind_formula,
        },
        "spectrum_shape": {"a": shape.a, "b": shape.b},
    }
    if include_lattice:
        lat = lattice.build(model, max_elements=size_guard)
        element_count = sum(1 for _ in lat.elements())
        ql_count = len(lattice.quasi_local_elements(lat))
        if element_count != rep.total_overrings or ql_count != rep.quasi_local_overrings:
            raise counting.InconsistencyError(
                "lattice census disagrees with the count formulas"
            )
        doc["lattice"] = {
            "element_count": element_count,
            "quasi_local_count": ql_count,
            "longest_chain_length": lattice.longest_chain_length(lat),
        }
    return doc


def run_verification(max_maximals: int) -> dict:
    """Exhaustive sweep over all class multisets with at most max_maximals ideals.

    Per model: counting formulas against the lattice census, count
    characterizations against the structural predicates in both
    directions, the quasi-local count dichotomy on Pruefer submodels,
    branch selection on MPD submodels, and the spectrum against its
    axioms and expected shape.
    """
    checks = {
        "counts_vs_lattice": 0,
        "characterization": 0,
        "prufer_dichotomy": 0,
        "mpd_branches": 0,
        "spectrum": 0,
    }
    failures: list[dict] = []
    models = 0

    def record(model, name, ok, detail):
        if ok:
            checks[name] += 1
        else:
            failures.append({"model": model.tags, "check": name, "detail": detail})

    for quartet in count_tuples(max_maximals):
        model = from_counts(*quartet)
        models += 1
        n1, n2, n3, n4 = quartet
        n = len(model)
        ql = counting.quasi_local_count(model)
        total = counting.total_count(model)

        lat = lattice.build(model)
        census_total = sum(1 for _ in lat.elements())
        census_ql = len(lattice.quasi_local_elements(lat))
        record(
            model,
            "counts_vs_lattice",
            census_total == total and census_ql == ql,
            f"formulas ({total}, {ql}) vs census ({census_total}, {census_ql})",
        )

        try:
            ch = counting.characterize(model)
            ok = (
                ch.noetherian == (ql == ch.count_noetherian_formula)
                and ch.prufer == (ql == ch.count_prufer_formula)
                and ch.dedekind == (ql == ch.count_dedekind_formula)
            )
            record(model, "characterization", ok, "characterization fields disagree")
        except counting.InconsistencyError as exc:
            record(model, "characterization", False, str(exc))

        if is_prufer(model):
            ok = ((ql == n + 1) == (n3 == 0)) and ((ql == 2 * n + 1) == (n3 == n))
            record(model, "prufer_dichotomy", ok, f"ql={ql}, n={n}, n3={n3}")

        if is_mpd(model):
            mc = counting.mpd_counts(model)
            three_chain = any(cls.chain_length == 3 for cls in model)
            expected = (3 * 2 ** (n - 1), n + 2) if three_chain else (2**n, n + 1)
            record(
                model,
                "mpd_branches",
                (mc.total, mc.quasi_local) == expected
                and mc.total == total
                and mc.quasi_local == ql,
                f"mpd counts {(mc.total, mc.quasi_local)}, expected {expected}",
            )

        poset = spectrum.spectrum_of(model)
        res = spectrum.validate(poset)
        shape_ok = False
        if res.ok:
            shape = spectrum.canonical_shape(poset)
            shape_ok = (shape.a, shape.b) == (n3, n1 + n2 + n4)
        record(
            model,
            "spectrum",
            res.ok and shape_ok,
            f"violations {list(res.violations)}, expected shape ({n3}, {n1 + n2 + n4})",
        )

    return {
        "max_maximals": max_maximals,
        "models_checked": models,
        "checks": checks,
        "failures": failures,
        "ok": not failures,
    }


def _cmd_count(args) -> int:
    model = load_model_argument(args.model)
    doc = build_report(model, include_lattice=args.lattice, size_guard=args.size_guard)
    print(json.dumps(doc, indent=2))
    return EXIT_OK


def _cmd_lattice(args) -> int:
    model = load_model_argument(args.model)
    lat = lattice.build(model, max_elements=args.size_guard)
    if args.emit == "dot":
        sys.stdout.write(lattice.emit_hasse(lat))
        return EXIT_OK
    nodes = [lattice.vector_label(v) for v in lat.elements()]
    covers = [
        [lattice.vector_label(a), lattice.vector_label(b)]
        for a, b in lattice.cover_edges(lat)
    ]
    doc = {
        "model": model_json(model),
        "element_count": len(nodes),
        "quasi_local_count": len(lattice.quasi_local_elements(lat)),
        "longest_chain_length": lattice.longest_chain_length(lat),
        "nodes": nodes,
        "covers": covers,
    }
    print(json.dumps(doc, indent=2))
    return EXIT_OK


def _cmd_enum_spec(args) -> int:
    if args.n < 1:
        raise DocumentError("the spectrum size must be at least 1")
    shapes = spectrum.enumerate_shapes(args.n)
    doc = {
        "n": args.n,
        "shape_count": len(shapes),
        "shapes": [
            {
                "a": s.a,
                "b": s.b,
                "realizing_model": spectrum.realizing_model(s).tags,
            }
            for s in shapes
        ],
    }
    if args.oracle:
        reps = spectrum.enumerate_bruteforce(args.n)
        oracle_shapes = sorted(spectrum.canonical_shape(p) for p in reps)
        doc["oracle"] = {
            "class_count": len(reps),
            "agree": oracle_shapes == sorted(shapes),
        }
    print(json.dumps(doc, indent=2))
    return EXIT_OK


def _cmd_verify(args) -> int:
    if args.max_maximals < 0:
        raise DocumentError("--max-maximals must be non-negative")
    result = run_verification(args.max_maximals)
    print(json.dumps(result, indent=2))
    if not result["ok"]:
        for failure in result["failures"]:
            print(f"counterexample: {failure}", file=sys.stderr)
        return EXIT_VERIFICATION
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gmpd",
        description="Exact overring counts, lattices, and spectra of GMPD domain models.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    count = sub.add_parser("count", help="JSON count report for a model document")
    count.add_argument(
        "model", help='model document: inline JSON, "-" for stdin, or a file path'
    )
    count.add_argument(
        "--lattice", action="store_true", help="include brute-force lattice statistics"
    )
    count.add_argument(
        "--size-guard",
        type=int,
        default=lattice.DEFAULT_SIZE_GUARD,
        help="element bound for lattice construction",
    )
    count.set_defaults(func=_cmd_count)

    lat = sub.add_parser("lattice", help="overring lattice as DOT or JSON")
    lat.add_argument(
        "model", help='model document: inline JSON, "-" for stdin, or a file path'
    )
    lat.add_argument("--emit", choices=["dot", "json"], default="dot")
    lat.add_argument(
        "--size-guard",
        type=int,
        default=lattice.DEFAULT_SIZE_GUARD,
        help="element bound for lattice construction",
    )
    lat.set_defaults(func=_cmd_lattice)

    enum_spec = sub.add_parser(
        "enum-spec", help="admissible spectrum shapes for a given spectrum size"
    )
    enum_spec.add_argument("n", type=int, help="number of prime ideals")
    enum_spec.add_argument(
        "--oracle",
        action="store_true",
        help="cross-check against the brute-force poset search",
    )
    enum_spec.set_defaults(func=_cmd_enum_spec)

    verify = sub.add_parser(
        "verify", help="exhaustive formula-vs-lattice verification sweep"
    )
    verify.add_argument("--max-maximals", type=int, default=8)
    verify.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except DocumentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (lattice.LatticeTooLargeError, spectrum.EnumerationBoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
