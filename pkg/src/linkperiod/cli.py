"""Command-line front end: invariant computation, periodicity checks,
batch CSV runs, and a built-in fixture selftest.

Exit codes: 0 success (including "undecided"), 1 usage error,
2 computation error, 3 selftest failure.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

from . import __version__, classical, criteria, skein, statemodel
from .diagram import (BraidWord, ParseError, PlanarDiagram, linking_tuple,
                      parse_braid, parse_pd, pd_from_braid, writhe)
from .laurent import (IdealVariant, LaurentPoly, format_bilaurent, format_poly,
                      is_prime)

ALL_CRITERIA = ("quantum-minus", "quantum-plus", "jones", "p0", "alexander")
KNOT_ONLY = frozenset({"quantum-plus", "p0", "alexander"})


class UsageError(ValueError):
    pass


def _parse_input(braid_text, pd_text):
    """Returns (kind, echo, braid_or_none, diagram)."""
    if (braid_text is None) == (pd_text is None):
        raise UsageError("exactly one of --braid and --pd is required")
    if braid_text is not None:
        b = parse_braid(braid_text)
        return "braid", braid_text, b, pd_from_braid(b)
    d = parse_pd(pd_text)
    return "pd", pd_text, None, d


def _parse_n_list(text: str) -> list[int]:
    try:
        ns = sorted({int(tok) for tok in text.split(",") if tok.strip()})
    except ValueError:
        raise UsageError(f"bad --n list: {text!r}") from None
    if not ns or any(n < 2 for n in ns):
        raise UsageError("--n needs a comma list of integers >= 2")
    return ns


def _poly_json(f: LaurentPoly):
    return f.serialize()


def build_invariant_report(kind, echo, braid, diagram, n_list, oracle=False,
                           max_crossings=skein.DEFAULT_MAX_CROSSINGS) -> dict:
    P = skein.homfly(diagram, max_crossings=max_crossings)
    m = diagram.component_count()
    report = {
        "tool": {"name": "linkperiod", "version": __version__},
        "input": {"type": kind, "value": echo},
        "components": m,
        "writhe": diagram.writhe(),
        "homfly": P.serialize(),
        "quantum": {},
    }
    for N in n_list:
        inv = skein.quantum_sln(P, N, m)
        report["quantum"][str(N)] = _poly_json(inv)
        if oracle:
            if braid is None:
                raise UsageError("--oracle needs a braid input")
            other = statemodel.invariant_statesum(braid, N)
            if other != inv:
                raise RuntimeError(
                    f"internal inconsistency: state-sum and skein routes "
                    f"disagree at N={N}")
    V = skein.jones(P)
    report["jones"] = {"variable": V.var, "coeffs": _poly_json(V)}
    if m == 1:
        report["alexander"] = _poly_json(skein.alexander(P))
        report["p0"] = _poly_json(skein.p0_part(P))
    return report


def _pm_closure(entries: frozenset[int], p: int) -> list[int]:
    out = set()
    for k in entries:
        out.add(k % p)
        out.add((-k) % p)
    return sorted(out)


def build_check_report(kind, echo, braid, diagram, p, n_list, criteria_list,
                       r=1, max_crossings=skein.DEFAULT_MAX_CROSSINGS) -> dict:
    if not is_prime(p):
        raise UsageError(f"p must be prime: {p}")
    P = skein.homfly(diagram, max_crossings=max_crossings)
    m = diagram.component_count()
    is_knot = m == 1
    report = {
        "tool": {"name": "linkperiod", "version": __version__},
        "input": {"type": kind, "value": echo},
        "p": p,
        "n_list": n_list,
        "components": m,
        "criteria": {},
        "notes": [],
    }
    quantum = {N: skein.quantum_sln(P, N, m) for N in n_list}
    report["quantum"] = {str(N): _poly_json(f) for N, f in quantum.items()}

    excluded = False          # some criterion certified non-periodicity
    combined: set[int] | None = None   # running +-closed residue intersection

    def merge(residues: list[int]):
        nonlocal combined, excluded
        if combined is None:
            combined = set(residues)
        else:
            combined &= set(residues)
        if not combined:
            excluded = True

    for crit in criteria_list:
        if crit in KNOT_ONLY and not is_knot:
            report["notes"].append(f"criterion {crit} skipped: knots only")
            continue
        if crit == "quantum-minus":
            if is_knot:
                per_n = {N: criteria.knot_candidates(quantum[N], p, N,
                                                     IdealVariant.QP_MINUS)
                         for N in n_list}
                linking = criteria.possible_linking(per_n)
                entry = {
                    "per_n": {str(N): sorted(c.entries) for N, c in per_n.items()},
                    "possible_linking": sorted(linking),
                }
                if any(c.is_empty() for c in per_n.values()) or not linking:
                    excluded = True
                else:
                    merge(sorted(linking))
            else:
                per_n = {N: criteria.link_candidates(quantum[N], p, N, m)
                         for N in n_list}
                entry = {"per_n": {str(N): sorted(list(t) for t in s)
                                   for N, s in per_n.items()}}
                if any(not s for s in per_n.values()):
                    excluded = True
        elif crit == "quantum-plus":
            per_n = {N: criteria.knot_candidates(quantum[N], p, N,
                                                 IdealVariant.QP_PLUS)
                     for N in n_list}
            entry = {"per_n": {str(N): [[k, s] for k, s in c.sorted_entries()]
                               for N, c in per_n.items()}}
            if any(c.is_empty() for c in per_n.values()):
                excluded = True
            else:
                for N, c in per_n.items():
                    merge(_pm_closure(c.residues(), p))
        elif crit == "jones":
            V = skein.jones(P)
            ok = classical.traczyk_jones_check(V, p)
            entry = {"passes": ok}
            if not ok:
                excluded = True
        elif crit == "p0":
            c = classical.traczyk_p0_candidates(skein.p0_part(P), p)
            entry = {"candidates": sorted(c.entries)}
            if c.is_empty():
                excluded = True
            else:
                merge(_pm_closure(c.entries, p))
        elif crit == "alexander":
            lams = classical.murasugi_candidates(skein.alexander(P), p, r)
            if lams is None:
                entry = {"inconclusive": True}
                report["notes"].append(
                    "alexander criterion inconclusive: polynomial vanishes mod p")
            else:
                entry = {"r": r, "candidates": sorted(lams)}
                if not lams:
                    excluded = True
                else:
                    merge(_pm_closure(lams, p))
        else:
            raise UsageError(f"unknown criterion: {crit}")
        report["criteria"][crit] = entry

    if combined is not None:
        report["combined_candidates"] = sorted(combined)
    report["verdict"] = f"not-{p}-periodic" if excluded else "undecided"
    return report


def _render_text(report: dict, out) -> None:
    def poly_line(pairs, var="q"):
        return format_poly(LaurentPoly.deserialize(pairs, var))

    print(f"input ({report['input']['type']}): {report['input']['value']}", file=out)
    if "homfly" in report:
        P = skein.BiLaurent.deserialize(report["homfly"])
        print(f"components: {report['components']}  writhe: {report['writhe']}", file=out)
        print(f"homfly: {format_bilaurent(P)}", file=out)
    for N, pairs in sorted(report.get("quantum", {}).items(), key=lambda kv: int(kv[0])):
        print(f"quantum N={N}: {poly_line(pairs)}", file=out)
    if "jones" in report:
        j = report["jones"]
        print(f"jones: {poly_line(j['coeffs'], j['variable'])}", file=out)
    if "alexander" in report and isinstance(report["alexander"], list):
        print(f"alexander: {poly_line(report['alexander'], 't')}", file=out)
    if "p0" in report:
        print(f"p0: {poly_line(report['p0'], 'a')}", file=out)
    for name, entry in report.get("criteria", {}).items():
        print(f"criterion {name}: {json.dumps(entry, sort_keys=True)}", file=out)
    if "combined_candidates" in report:
        print(f"combined candidates: {report['combined_candidates']}", file=out)
    if "verdict" in report:
        print(f"verdict: {report['verdict']}", file=out)
    for note in report.get("notes", []):
        print(f"note: {note}", file=out)


def _emit(report: dict, fmt: str, out_path: str | None) -> None:
    if fmt == "json":
        payload = json.dumps(report, sort_keys=True, indent=2) + "\n"
        if out_path:
            with open(out_path, "w") as fh:
                fh.write(payload)
        else:
            sys.stdout.write(payload)
    else:
        out = open(out_path, "w") if out_path else sys.stdout
        try:
            _render_text(report, out)
        finally:
            if out_path:
                out.close()


def cmd_invariant(args) -> int:
    kind, echo, braid, diagram = _parse_input(args.braid, args.pd)
    n_list = _parse_n_list(args.n)
    report = build_invariant_report(kind, echo, braid, diagram, n_list,
                                    oracle=args.oracle,
                                    max_crossings=args.max_crossings)
    _emit(report, args.format, args.out)
    return 0


def cmd_check(args) -> int:
    kind, echo, braid, diagram = _parse_input(args.braid, args.pd)
    n_list = _parse_n_list(args.n)
    crits = [c.strip() for c in args.criteria.split(",") if c.strip()]
    for c in crits:
        if c not in ALL_CRITERIA:
            raise UsageError(f"unknown criterion: {c}")
    report = build_check_report(kind, echo, braid, diagram, args.p, n_list,
                                crits, r=args.r,
                                max_crossings=args.max_crossings)
    _emit(report, args.format, args.out)
    return 0


def cmd_batch(args) -> int:
    n_list = _parse_n_list(args.n)
    crits = [c.strip() for c in args.criteria.split(",") if c.strip()]
    try:
        fh = open(args.csv, newline="")
    except OSError as exc:
        raise UsageError(f"cannot read {args.csv}: {exc}") from None
    with fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None or \
                [f.strip() for f in reader.fieldnames] != ["name", "input_type", "input"]:
            raise UsageError(
                'batch CSV needs the header "name,input_type,input"')
        rows = list(reader)
    reports = []
    for row in rows:
        name = row.get("name", "")
        try:
            kind = row["input_type"].strip()
            if kind == "braid":
                rep = build_check_report(
                    "braid", row["input"], parse_braid(row["input"]),
                    pd_from_braid(parse_braid(row["input"])),
                    args.p, n_list, crits, r=args.r,
                    max_crossings=args.max_crossings)
            elif kind == "pd":
                rep = build_check_report(
                    "pd", row["input"], None, parse_pd(row["input"]),
                    args.p, n_list, crits, r=args.r,
                    max_crossings=args.max_crossings)
            else:
                raise UsageError(f"input_type must be braid or pd: {kind!r}")
            rep["name"] = name
            reports.append(rep)
        except Exception as exc:
            reports.append({
                "name": name,
                "input": {"type": row.get("input_type", ""),
                          "value": row.get("input", "")},
                "error": f"{type(exc).__name__}: {exc}",
            })
    payload = json.dumps(reports, sort_keys=True, indent=2) + "\n"
    if args.out:
        with open(args.out, "w") as out:
            out.write(payload)
    else:
        sys.stdout.write(payload)
    return 0


def cmd_selftest(args) -> int:
    from . import selftest
    results = selftest.run(name_filter=args.filter)
    failed = 0
    for name, ok, detail in results:
        status = "PASS" if ok else "FAIL"
        line = f"[{status}] {name}"
        if detail and not ok:
            line += f": {detail}"
        print(line)
    failed = sum(1 for _, ok, _ in results if not ok)
    print(f"{len(results) - failed}/{len(results)} checks passed")
    return 3 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="linkperiod",
        description="Quantum-invariant periodicity criteria for links")
    sub = ap.add_subparsers(dest="command", required=True)

    def add_common(sp, with_p):
        sp.add_argument("--braid", help='braid word, e.g. "1 1 1" or "n=3; 1 -2"')
        sp.add_argument("--pd", help='PD code, e.g. "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"')
        sp.add_argument("--n", default="2,3", help="comma list of N values (default 2,3)")
        if with_p:
            sp.add_argument("-p", type=int, required=True, help="prime period to test")
            sp.add_argument("--criteria", default=",".join(ALL_CRITERIA),
                            help="comma list of criteria to run")
            sp.add_argument("--r", type=int, default=1,
                            help="prime-power exponent for the alexander criterion")
        sp.add_argument("--max-crossings", type=int,
                        default=skein.DEFAULT_MAX_CROSSINGS)
        sp.add_argument("--out", help="write the report to this path")
        sp.add_argument("--format", choices=("json", "text"), default="text")

    sp = sub.add_parser("invariant", help="compute link invariants")
    add_common(sp, with_p=False)
    sp.add_argument("--oracle", action="store_true",
                    help="cross-check the quantum invariant against the state sum")
    sp.set_defaults(func=cmd_invariant)

    sp = sub.add_parser("check", help="run periodicity criteria")
    add_common(sp, with_p=True)
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("batch", help="run checks over a CSV of links")
    sp.add_argument("csv", help='CSV with header "name,input_type,input"')
    sp.add_argument("-p", type=int, required=True)
    sp.add_argument("--n", default="2,3")
    sp.add_argument("--criteria", default=",".join(ALL_CRITERIA))
    sp.add_argument("--r", type=int, default=1)
    sp.add_argument("--max-crossings", type=int,
                    default=skein.DEFAULT_MAX_CROSSINGS)
    sp.add_argument("--out", help="write the JSON report array to this path")
    sp.set_defaults(func=cmd_batch)

    sp = sub.add_parser("selftest", help="run the built-in fixture suite")
    sp.add_argument("--filter", default="", help="run only checks whose name contains this")
    sp.set_defaults(func=cmd_selftest)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except (UsageError, ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except Exception as exc:
        print(f"computation error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
