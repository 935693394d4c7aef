"""Command-line front door: parse monoid specs, run the engines, report.

Commands: ``analyze`` (property matrix, suites, spectrum, axiom battery),
``closure``, ``factor``, ``spectrum``, ``verify`` (TFAE suites), ``corpus``
(list or write the built-in corpus).  Reports are deterministic for a fixed
configuration; timing goes to stderr.  Exit status 1 means a suite
disagreed, an axiom check failed, or (under --strict) an input was not
certified; usage, parse, and I/O problems exit 2.
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from . import __version__, corpus as corpus_mod, report as report_mod
from .classify import classify, suite_battery, suite_names
from .factor import radical_factor_principal, sp_factor
from .ideals import ideal_from
from .monoid import MonoidModel, parse_monoid
from .spectrum import UncertifiedModel, spectrum_json
from .systems import axioms_check, close, system

AXIOM_SAMPLES = 200


class CliError(Exception):
    """Usage or input problem; maps to exit status 2."""


def _default_radius() -> int:
    raw = os.environ.get("IDEALIS_RADIUS", "")
    if not raw:
        return 8
    try:
        radius = int(raw)
    except ValueError:
        raise CliError(f"IDEALIS_RADIUS={raw!r} is not an integer") from None
    if radius < 1:
        raise CliError("IDEALIS_RADIUS must be at least 1")
    return radius


def _radius_arg(text: str) -> int:
    try:
        radius = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if radius < 1:
        raise argparse.ArgumentTypeError("radius must be at least 1")
    return radius


def parse_element(text: str) -> tuple:
    """Generator list: vectors separated by ';', coordinates by ',' or space."""
    gens = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        try:
            gens.append(tuple(int(x) for x in chunk.replace(",", " ").split()))
        except ValueError:
            raise CliError(f"--element: {chunk!r} is not an integer vector") from None
    if not gens:
        raise CliError("--element is empty")
    if len({len(g) for g in gens}) != 1:
        raise CliError("--element vectors have mixed dimensions")
    return tuple(gens)


def _collect_specs(inputs) -> list:
    paths = []
    for raw in inputs:
        path = Path(raw)
        if path.is_dir():
            found = sorted(path.glob("*.spec"))
            if not found:
                raise CliError(f"{raw}: directory contains no .spec files")
            paths.extend(found)
        elif path.is_file():
            paths.append(path)
        else:
            raise CliError(f"{raw}: no such file or directory")
    return paths


def _load_models(paths) -> list:
    models = []
    for path in paths:
        try:
            models.append(parse_monoid(path.read_text()))
        except OSError as exc:
            raise CliError(f"{path}: {exc.strerror or exc}") from None
        except ValueError as exc:
            raise CliError(f"{path}: {exc}") from None
    return models


def _check_element_dim(gens, H: MonoidModel) -> None:
    if len(gens[0]) != H.dim:
        raise CliError(
            f"--element vectors have {len(gens[0])} coordinates; "
            f"{H.name} has {H.dim}")


# Per-monoid workers.  Each returns (report dict, flags dict); flags feed
# the exit-status aggregation.

_OK = {"disagreement": False, "axiom_failure": False, "uncertified": False}


def _uncertified_report(H: MonoidModel, exc) -> tuple:
    doc = {"monoid": H.name, "certified": False, "note": str(exc)}
    return doc, {**_OK, "uncertified": True}


def _cmd_analyze(H: MonoidModel, args) -> tuple:
    doc = classify(H, args.radius)
    if not doc["certified"]:
        return doc, {**_OK, "uncertified": True}
    checks = {}
    failed = False
    for lbl in ("s", "w", "t"):
        rep = axioms_check(system(lbl, H), AXIOM_SAMPLES,
                           min(args.radius, 6), args.seed)
        checks[lbl] = rep.to_json()
        failed = failed or not rep.ok
    doc["axioms"] = checks
    disagree = any(not s["agreement"] for s in doc["suites"].values())
    return doc, {**_OK, "disagreement": disagree, "axiom_failure": failed}


def _cmd_closure(H: MonoidModel, args) -> tuple:
    _check_element_dim(args.element, H)
    if not H.certified:
        return _uncertified_report(
            H, f"{H.name}: ideal arithmetic needs a certified product model")
    try:
        sysH = system(args.system, H)
        X = ideal_from(args.element, H)
        closed = close(sysH, X)
    except UncertifiedModel as exc:
        return _uncertified_report(H, exc)
    except ValueError as exc:
        raise CliError(f"{H.name}: {exc}") from None
    doc = {
        "monoid": H.name,
        "certified": True,
        "system": sysH.label,
        "input": X.to_json(),
        "closed": closed.to_json(),
        "already_closed": closed.gens == X.gens,
    }
    return doc, dict(_OK)


def _cmd_factor(H: MonoidModel, args) -> tuple:
    _check_element_dim(args.element, H)
    if not H.certified:
        return _uncertified_report(
            H, f"{H.name}: ideal arithmetic needs a certified product model")
    try:
        sysH = system(args.system, H)
        if len(args.element) == 1 and sysH.label == "t":
            result = radical_factor_principal(H, args.element[0])
        else:
            target = close(sysH, ideal_from(args.element, H))
            result = sp_factor(target, sysH)
    except UncertifiedModel as exc:
        return _uncertified_report(H, exc)
    except ValueError as exc:
        raise CliError(f"{H.name}: {exc}") from None
    doc = {
        "monoid": H.name,
        "certified": True,
        "system": sysH.label,
        "element": [list(g) for g in args.element],
        "ok": result.ok,
        "result": result.to_json(),
    }
    return doc, dict(_OK)


def _cmd_spectrum(H: MonoidModel, args) -> tuple:
    try:
        sysH = system(args.system, H)
        body = spectrum_json(H, sysH)
    except UncertifiedModel as exc:
        return _uncertified_report(H, exc)
    except ValueError as exc:
        raise CliError(f"{H.name}: {exc}") from None
    doc = {"monoid": H.name, "certified": True, "system": sysH.label, **body}
    return doc, dict(_OK)


def _cmd_verify(H: MonoidModel, args) -> tuple:
    names = (args.suite,) if args.suite else None
    try:
        battery = suite_battery(H, args.radius, names)
    except UncertifiedModel as exc:
        return _uncertified_report(H, exc)
    suites = {name: rep.to_json() for name, rep in battery.items()}
    disagree = any(not s["agreement"] for s in suites.values())
    doc = {
        "monoid": H.name,
        "certified": True,
        "radius": args.radius,
        "suites": suites,
    }
    return doc, {**_OK, "disagreement": disagree}


_WORKERS = {
    "analyze": _cmd_analyze,
    "closure": _cmd_closure,
    "factor": _cmd_factor,
    "spectrum": _cmd_spectrum,
    "verify": _cmd_verify,
}


def _run_models(models, worker, args) -> list:
    """Run the worker per model, concurrently, results in input order."""

    def timed(H):
        t0 = time.perf_counter()
        doc, flags = worker(H, args)
        return doc, flags, time.perf_counter() - t0

    if args.jobs <= 1 or len(models) <= 1:
        results = [timed(H) for H in models]
    else:
        with ThreadPoolExecutor(max_workers=args.jobs) as pool:
            futures = [pool.submit(timed, H) for H in models]
            results = [f.result() for f in futures]
    for H, (_, _, dt) in zip(models, results):
        print(f"{H.name}: {dt:.2f}s", file=sys.stderr)
    return [(doc, flags) for doc, flags, _ in results]


# Text rendering, one compact block per report.

def _verdict_counts(table: dict) -> str:
    counts = {"true": 0, "false": 0, "unknown-beyond-radius": 0}
    for cell in table.values():
        counts[cell["verdict"]] += 1
    return (f"{counts['true']} true, {counts['false']} false, "
            f"{counts['unknown-beyond-radius']} unknown")


def _suite_digest(suite: dict) -> str:
    verdicts = {c["verdict"] for c in suite["conditions"]}
    if verdicts == {"true"}:
        overall = "true"
    elif verdicts == {"false"}:
        overall = "false"
    else:
        overall = "mixed"
    return overall if suite["agreement"] else f"{overall} DISAGREE"


def _text_analyze(doc, lines) -> None:
    name = doc["monoid"]
    if not doc["certified"]:
        lines.append(f"{name}: uncertified ({doc.get('note', '')})")
        return
    lines.append(f"{name}: certified, radius {doc['radius']}")
    ax = doc.get("axioms", {})
    if ax:
        lines.append("  axioms: " + "  ".join(
            f"{lbl} {'ok' if ax[lbl]['ok'] else 'FAIL'}" for lbl in sorted(ax)))
    for lbl in ("s", "w", "t"):
        lines.append(f"  {lbl}-matrix: {_verdict_counts(doc['systems'][lbl])}")
    suites = doc["suites"]
    lines.append("  suites: " + "  ".join(
        f"{n}={_suite_digest(suites[n])}" for n in sorted(suites)))
    heights = ",".join(str(p["height"]) for p in doc["spectrum"]["primes"])
    lines.append(f"  primes: {len(doc['spectrum']['primes'])} (heights {heights})")


def _text_verify(doc, lines) -> None:
    name = doc["monoid"]
    if not doc["certified"]:
        lines.append(f"{name}: uncertified ({doc.get('note', '')})")
        return
    for suite_name in sorted(doc["suites"]):
        suite = doc["suites"][suite_name]
        head = "agreement" if suite["agreement"] else "DISAGREEMENT"
        lines.append(f"{name} {suite_name}: {head}")
        for cond in suite["conditions"]:
            tag = f"({cond['id']})" if not cond["group"] else \
                f"({cond['group']}{cond['id']})"
            row = f"  {tag} {cond['verdict']:22s} {cond['text']}"
            notes = [n for n in (cond["note"],
                                 "vacuous" if cond["vacuous"] else "") if n]
            if notes:
                row += f"  [{'; '.join(notes)}]"
            lines.append(row)


def _gens_str(ideal_doc) -> str:
    return "; ".join(",".join(str(x) for x in g) for g in ideal_doc["gens"])


def _text_generic(command, doc, lines) -> None:
    name = doc["monoid"]
    if not doc["certified"]:
        lines.append(f"{name}: uncertified ({doc.get('note', '')})")
        return
    if command == "closure":
        status = "already closed" if doc["already_closed"] else "grew"
        lines.append(f"{name} {doc['system']}-closure: "
                     f"[{_gens_str(doc['closed'])}] ({status})")
    elif command == "factor":
        if doc["ok"]:
            chain = " | ".join(f"[{_gens_str(f)}]"
                               for f in doc["result"]["factors"])
            lines.append(f"{name} {doc['system']}-chain: {chain or '[unit]'}")
        else:
            res = doc["result"]
            msg = f"{name}: no factorization ({res['failure']})"
            if "witness" in res:
                msg += f" witness [{_gens_str(res['witness'])}]"
            lines.append(msg)
    elif command == "spectrum":
        lbl = doc["system"]
        for p in doc["primes"]:
            face = "{" + ",".join(str(i) for i in p["face"]) + "}"
            flags = [f"height {p['height']}"]
            if p[f"{lbl}_ideal"]:
                flags.append(f"{lbl}-closed")
            if p[f"{lbl}_max"]:
                flags.append(f"{lbl}-max")
            lines.append(f"{name} prime {face}: {', '.join(flags)}")


def _render(command, args, reports) -> str:
    config = _config_echo(command, args)
    doc = report_mod.envelope(__version__, command, config, reports)
    if args.format == "json":
        return report_mod.dumps(doc)
    if args.format == "csv":
        return report_mod.csv_text(doc)
    lines: list = []
    for rep in reports:
        if command == "analyze":
            _text_analyze(rep, lines)
        elif command == "verify":
            _text_verify(rep, lines)
        elif command == "corpus":
            lines.append(f"{rep['name']:14s} {rep['family']:12s} "
                         f"{'certified' if rep['certified'] else 'uncertified'}")
        else:
            _text_generic(command, rep, lines)
    return "\n".join(lines) + "\n" if lines else ""


def _config_echo(command, args) -> dict:
    config = {
        "radius": getattr(args, "radius", None),
        "seed": getattr(args, "seed", None),
        "strict": args.strict,
        "format": args.format,
    }
    if command != "corpus":
        config["inputs"] = [str(p) for p in args.inputs]
    if hasattr(args, "system"):
        config["system"] = args.system
    if command == "verify":
        config["suite"] = args.suite or "all"
    if command in ("closure", "factor"):
        config["element"] = [list(g) for g in args.element]
    if command == "corpus":
        config["family"] = args.family or "all"
        config["dest"] = args.dest
    return config


def _cmd_corpus(args) -> tuple:
    entries = corpus_mod.members(args.family)
    if args.dest:
        paths = corpus_mod.build(Path(args.dest), args.family)
        reports = [
            {"name": e.name, "family": e.family,
             "certified": e.model.certified, "file": str(p)}
            for e, p in zip(entries, paths)
        ]
    else:
        reports = [
            {"name": e.name, "family": e.family,
             "certified": e.model.certified, "dim": e.model.dim,
             "note": e.note}
            for e in entries
        ]
    return reports, any(not e.model.certified for e in entries)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="idealis",
        description="Ideal-system calculator for finitely generated monoids.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--radius", type=_radius_arg, default=None,
                        help="enumeration radius (default 8, or IDEALIS_RADIUS)")
    common.add_argument("--seed", type=int, default=0,
                        help="seed for sampled checks (recorded in reports)")
    common.add_argument("--strict", action="store_true",
                        help="uncertified inputs fail the run")
    common.add_argument("--jobs", type=int, default=min(4, os.cpu_count() or 1),
                        help="concurrent monoid tasks")
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="format", action="store_const",
                     const="json", help="canonical JSON report")
    fmt.add_argument("--csv", dest="format", action="store_const",
                     const="csv", help="flat CSV projection")
    common.set_defaults(format="text")

    def inputs(p):
        p.add_argument("inputs", nargs="+", metavar="SPEC",
                       help=".spec files or directories of them")

    p = sub.add_parser("analyze", parents=[common],
                       help="property matrix, suites, spectrum, axioms")
    inputs(p)

    p = sub.add_parser("closure", parents=[common],
                       help="close a finitely generated set")
    inputs(p)
    p.add_argument("--system", default="t", help="s | t | v | w | mod(p,r)")
    p.add_argument("--element", required=True,
                   help="generators, e.g. \"2,1\" or \"2,0;0,3\"")

    p = sub.add_parser("factor", parents=[common],
                       help="radical factorization of an element or ideal")
    inputs(p)
    p.add_argument("--system", default="t", help="s | t | v | w | mod(p,r)")
    p.add_argument("--element", required=True,
                   help="element or generator list to factor")

    p = sub.add_parser("spectrum", parents=[common],
                       help="prime spectrum with closure/maximality flags")
    inputs(p)
    p.add_argument("--system", default="t", help="s | t | v | w | mod(p,r)")

    p = sub.add_parser("verify", parents=[common],
                       help="run TFAE suites and check agreement")
    inputs(p)
    p.add_argument("--suite", choices=suite_names(), default=None,
                   help="one suite (default: all)")

    p = sub.add_parser("corpus", parents=[common],
                       help="list or write the built-in corpus")
    p.add_argument("--family", choices=corpus_mod.FAMILIES, default=None,
                   help="restrict to one family")
    p.add_argument("--dest", default=None,
                   help="write .spec files into this directory")
    return parser


def run(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "radius", None) is None:
        args.radius = _default_radius()
    if getattr(args, "element", None) is not None:
        args.element = parse_element(args.element)

    if args.command == "corpus":
        reports, any_uncertified = _cmd_corpus(args)
        sys.stdout.write(_render("corpus", args, reports))
        return 1 if (args.strict and any_uncertified) else 0

    models = _load_models(_collect_specs(args.inputs))
    worker = _WORKERS[args.command]
    with report_mod.stopwatch("total"):
        outcomes = _run_models(models, worker, args)
    reports = [doc for doc, _ in outcomes]
    sys.stdout.write(_render(args.command, args, reports))

    fail = False
    for _, flags in outcomes:
        fail = fail or flags["disagreement"] or flags["axiom_failure"]
        fail = fail or (args.strict and flags["uncertified"])
    return 1 if fail else 0


def main(argv=None) -> int:
    try:
        return run(argv)
    except CliError as exc:
        print(f"idealis: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
