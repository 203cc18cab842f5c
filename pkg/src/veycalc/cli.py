"""Command-line front end.

Subcommands: cohomology, vey, model, manifold, validate, kappa.  Results are
emitted as byte-deterministic JSON or aligned fixed-width tables; heavyweight
results are cached content-addressed under the configured cache directory.
Exit codes: 0 success, 2 invalid input, 3 resource-budget refusal.
"""

from __future__ import annotations

import argparse
import sys

from . import __version__, complexes, manifold, minimal_model, vey
from .cache import Config, ConfigError, ResultCache, canonical_json, load_config
from .complexes import ResourceBudgetError
from .gca import Monomial
from .manifold import ManifoldDescriptor, UnsupportedInputError
from .minimal_model import ModelBudgetError

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_BUDGET = 3


def _progress(message: str) -> None:
    print(message, file=sys.stderr)


def _table(headers: list[str], rows: list[list[str]]) -> str:
    widths = [len(h) for h in headers]
    for row in rows:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))
    lines = [
        "  ".join(h.ljust(w) for h, w in zip(headers, widths)).rstrip(),
        "  ".join("-" * w for w in widths),
    ]
    for row in rows:
        lines.append("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())
    return "\n".join(lines) + "\n"


def _element_label(terms: list[dict]) -> str:
    bits = []
    for t in terms:
        label = Monomial.from_json_obj(t["m"]).label()
        coeff = t["coeff"]
        bits.append(label if coeff == "1" else f"{coeff}*{label}")
    return " + ".join(bits) if bits else "0"


# -- table renderers ---------------------------------------------------------


def _render_cohomology(doc: dict) -> str:
    rows = []
    for deg in sorted(doc["dims"], key=int):
        reps = doc["representatives"].get(deg, [])
        rows.append(
            [deg, str(doc["dims"][deg]), "; ".join(_element_label(r) for r in reps)]
        )
    head = f"H*({doc['kind']}_{doc['q']})  total dim {doc['total_dim_check']}\n"
    return head + _table(["degree", "dim", "representatives"], rows)


def _render_vey(doc: dict) -> str:
    rows = []
    for c in doc["classes"]:
        rows.append(
            [
                c["name"],
                str(c["degree"]),
                "x" if c["generalized_gv"] else "",
                "x" if c["residual"] else "",
                "x" if c["rigid"] else "",
                "x" if c["variable_candidate"] else "",
            ]
        )
    head = f"Vey basis of {doc['complex']}_{doc['q']} ({len(rows)} classes)\n"
    return head + _table(["name", "degree", "gv", "residual", "rigid", "variable"], rows)


def _render_validation(doc: dict) -> str:
    rows = []
    for c in doc["per_degree"]:
        rows.append(
            [
                str(c["degree"]),
                str(c["enumerated"]),
                str(c["oracle_dim"]),
                "yes" if c["independent"] else "NO",
                "; ".join(c["notes"]),
            ]
        )
    head = (
        f"validate {doc['kind']}_{doc['q']}: "
        f"{'ok' if doc['ok'] else 'FAILED'}\n"
    )
    return head + _table(
        ["degree", "enumerated", "oracle", "independent", "notes"], rows
    )


def _render_model(doc: dict) -> str:
    rows = []
    for deg in sorted(doc["generators"], key=int):
        rows.append([deg, str(len(doc["generators"][deg])), ", ".join(doc["generators"][deg])])
    out = f"minimal model of I_{doc['q']} through degree {doc['degree_cap'] - 1}\n"
    out += _table(["degree", "rank", "generators"], rows)
    diff_lines = []
    for gid in sorted(doc["differentials"]):
        terms = doc["differentials"][gid]
        expr = " + ".join(
            t["word"] if t["coeff"] == "1" else f"{t['coeff']}*{t['word']}"
            for t in terms
        )
        diff_lines.append(f"d({gid}) = {expr}")
    if diff_lines:
        out += "\n" + "\n".join(diff_lines) + "\n"
    ok = all(doc["quasi_iso_check"].values())
    out += f"quasi_iso_check: {'ok' if ok else 'FAILED'}\n"
    return out


def _render_manifold(doc: dict) -> str:
    rows = []
    for r in doc["records"]:
        rows.append(
            [
                r["name"],
                str(r["degree"]),
                r["target"],
                r["method"],
                str(r["detection_rank"]),
                r["survives_to_BDiff_delta"],
                r.get("note", ""),
            ]
        )
    label = doc["descriptor"].get("label") or f"q={doc['descriptor']['q']}"
    head = f"class inventory for {label} ({len(rows)} records)\n"
    return head + _table(
        ["name", "degree", "target", "method", "rank", "survives", "note"], rows
    )


def _render_kappa(doc: dict) -> str:
    return f"{doc['kappa']}\n"


# -- commands ----------------------------------------------------------------


def _cmd_cohomology(args, config: Config, cache: ResultCache | None) -> dict:
    params = {"q": args.q, "kind": args.complex, "q_cap": config.q_cap}
    if cache:
        hit = cache.get("cohomology", params)
        if hit is not None:
            return hit
    _progress(f"computing H*({args.complex}_{args.q}) ...")
    cx = complexes.build_complex(args.q, args.complex, q_cap=config.q_cap)
    doc = complexes.cohomology(cx).to_json_obj()
    if cache:
        cache.put("cohomology", params, doc)
    return doc


def _vey_doc(q: int, kind: str, wo_condition: str, degree: int | None) -> dict:
    classes = vey.vey_basis(q, kind, wo_condition)
    if degree is not None:
        classes = [c for c in classes if c.degree == degree]
    return {
        "q": q,
        "complex": kind,
        "wo_condition": wo_condition,
        "classes": [c.to_json_obj() for c in classes],
    }


def _cmd_vey(args, config: Config, cache: ResultCache | None) -> dict:
    if args.validate:
        return _cmd_validate(args, config, cache)
    return _vey_doc(args.q, args.complex, config.vey_wo_condition, args.degree)


def _cmd_validate(args, config: Config, cache: ResultCache | None) -> dict:
    params = {
        "q": args.q,
        "kind": args.complex,
        "wo_condition": config.vey_wo_condition,
        "q_cap": config.q_cap,
    }
    if cache:
        hit = cache.get("validate", params)
        if hit is not None:
            return hit
    _progress(f"validating Vey basis of {args.complex}_{args.q} against the oracle ...")
    doc = vey.validate_vey(
        args.q, args.complex, config.vey_wo_condition, q_cap=config.q_cap
    ).to_json_obj()
    if cache:
        cache.put("validate", params, doc)
    return doc


def _cmd_model(args, config: Config, cache: ResultCache | None) -> dict:
    if args.max_degree > config.model_degree_cap:
        raise ModelBudgetError(
            f"--max-degree {args.max_degree} exceeds the configured cap "
            f"{config.model_degree_cap}",
            attempted_dimension=args.max_degree,
        )
    params = {"q": args.q, "max_degree": args.max_degree}
    if cache:
        hit = cache.get("model", params)
        if hit is not None:
            return hit
    _progress(f"building the minimal model of I_{args.q} to degree {args.max_degree} ...")
    model = minimal_model.build_model(args.q, args.max_degree)
    doc = model.to_json_obj()
    doc["ranks"] = minimal_model.rank_table(model).to_json_obj()["ranks"]
    if cache:
        cache.put("model", params, doc)
    return doc


def _parse_cospherical(text: str) -> tuple[tuple[int, int], ...]:
    out = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        k, _, count = chunk.partition(":")
        try:
            out.append((int(k), int(count or "1")))
        except ValueError as exc:
            raise UnsupportedInputError(
                f"bad --cospherical entry {chunk!r}; expected k:count"
            ) from exc
    return tuple(out)


def _cmd_manifold(args, config: Config, cache: ResultCache | None) -> dict:
    if args.preset:
        descriptor = manifold.preset(args.preset)
    else:
        if args.dim is None:
            raise UnsupportedInputError("either --preset or --dim is required")
        descriptor = ManifoldDescriptor(
            q=args.dim,
            compact=args.compact,
            closed=args.closed or args.compact,
            orientable=not args.non_orientable,
            parallelizable=args.parallelizable,
            cospherical_degrees=_parse_cospherical(args.cospherical or ""),
            trivialized_over_cycles=args.trivialized_over_cycles,
        )
    params = {"descriptor": descriptor.to_json_obj()}
    if cache:
        hit = cache.get("manifold", params)
        if hit is not None:
            return hit
    records = manifold.report(descriptor)
    doc = {
        "descriptor": descriptor.to_json_obj(),
        "records": [r.to_json_obj() for r in records],
    }
    if cache:
        cache.put("manifold", params, doc)
    return doc


def _cmd_kappa(args, config: Config, cache: ResultCache | None) -> dict:
    return {"q": args.q, "kappa": vey.kappa(args.q)}


_RENDERERS = {
    "cohomology": _render_cohomology,
    "vey": _render_vey,
    "validate": _render_validation,
    "model": _render_model,
    "manifold": _render_manifold,
    "kappa": _render_kappa,
}

_COMMANDS = {
    "cohomology": _cmd_cohomology,
    "vey": _cmd_vey,
    "validate": _cmd_validate,
    "model": _cmd_model,
    "manifold": _cmd_manifold,
    "kappa": _cmd_kappa,
}


def build_parser() -> argparse.ArgumentParser:
    # Common flags are accepted both before and after the subcommand; the
    # SUPPRESS defaults keep a subparser from clobbering a value given earlier.
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--config", default=argparse.SUPPRESS, help="path to a JSON config file"
    )
    common.add_argument(
        "--format",
        choices=("table", "json"),
        default=argparse.SUPPRESS,
        help="output format",
    )
    common.add_argument(
        "--cache-dir", default=argparse.SUPPRESS, help="override the cache directory"
    )
    common.add_argument(
        "--no-cache",
        action="store_true",
        default=argparse.SUPPRESS,
        help="bypass the result cache",
    )
    parser = argparse.ArgumentParser(
        prog="veycalc",
        description="Exact secondary characteristic classes of foliations.",
        parents=[common],
    )
    parser.add_argument(
        "--version", action="store_true", help="print version and config digest"
    )
    sub = parser.add_subparsers(dest="command")

    def add_parser(name: str, **kwargs):
        return sub.add_parser(name, parents=[common], **kwargs)

    p = add_parser("cohomology", help="exact cohomology of W_q / WO_q / I_q")
    p.add_argument("--complex", choices=complexes.KINDS, required=True)
    p.add_argument("--q", type=int, required=True)

    p = add_parser("vey", help="Vey basis enumeration and classification")
    p.add_argument("--complex", choices=("W", "WO"), required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--degree", type=int)
    p.add_argument("--classify", action="store_true", help="included for symmetry; flags are always computed")
    p.add_argument("--validate", action="store_true", help="cross-check against the oracle")

    p = add_parser("validate", help="cross-check the Vey basis against the oracle")
    p.add_argument("--complex", choices=("W", "WO"), required=True)
    p.add_argument("--q", type=int, required=True)

    p = add_parser("model", help="bigraded minimal model of I_q")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--max-degree", type=int, required=True)

    p = add_parser("manifold", help="characteristic-class inventory for a manifold")
    p.add_argument("--preset", help="S1|S2|T2|Sigma_g:g|S3|T3|Rq:q")
    p.add_argument("--dim", type=int)
    p.add_argument("--compact", action="store_true")
    p.add_argument("--closed", action="store_true")
    p.add_argument("--parallelizable", action="store_true")
    p.add_argument("--non-orientable", action="store_true")
    p.add_argument("--trivialized-over-cycles", action="store_true")
    p.add_argument("--cospherical", help="comma list of k:count")

    p = add_parser("kappa", help="number of Pontrjagin classes usable for bracing")
    p.add_argument("--q", type=int, required=True)

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        # SUPPRESS defaults leave the attribute unset when the flag is absent
        config = load_config(getattr(args, "config", None))
        cache_dir = getattr(args, "cache_dir", None)
        if cache_dir:
            config = Config(**{**config.to_json_obj(), "cache_dir": cache_dir})
        if args.version:
            print(f"veycalc {__version__} (config {config.digest()})")
            return EXIT_OK
        if not args.command:
            parser.print_usage(sys.stderr)
            print("veycalc: a subcommand is required", file=sys.stderr)
            return EXIT_INVALID
        cache = None if getattr(args, "no_cache", False) else ResultCache(config.cache_dir)
        doc = _COMMANDS[args.command](args, config, cache)
    except (ConfigError, UnsupportedInputError, ValueError) as exc:
        print(f"veycalc: invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except ResourceBudgetError as exc:
        print(
            f"veycalc: resource budget exceeded: {exc} "
            f"(dimension estimate {exc.estimate})",
            file=sys.stderr,
        )
        return EXIT_BUDGET
    except ModelBudgetError as exc:
        print(
            f"veycalc: resource budget exceeded: {exc} "
            f"(attempted dimension {exc.attempted_dimension})",
            file=sys.stderr,
        )
        return EXIT_BUDGET
    fmt = getattr(args, "format", None) or config.output_format
    if fmt == "json":
        sys.stdout.write(canonical_json(doc) + "\n")
    else:
        sys.stdout.write(_RENDERERS[args.command](doc))
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
