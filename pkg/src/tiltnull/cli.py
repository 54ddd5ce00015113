"""Command-line interface.

Exit codes: 0 success, 1 domain error (the library rejected the input or
the quantity does not exist), 2 malformed invocation (bad flag syntax,
unsupported combination).  ``--format`` selects json (default for most
commands), csv, or table; ``facets`` defaults to table.  With
``--stdin-jsonl`` the positional command reads one JSON object of
parameters per line and emits one JSON result line per input, in order.
"""

from __future__ import annotations

import argparse
import csv
import json
import re
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from . import cells, dims, facets
from .laurent import InfiniteValuationError
from .roots import root_system
from .tl import (
    FULL_WIDTH_LIMIT,
    colored_invariant,
    invariant_jet,
    modified_invariant,
    object_nullity_tl,
)

_TYPE_RE = re.compile(r"^[A-G][0-9]+$")


class UsageError(Exception):
    """Invalid invocation; maps to exit code 2."""


def _fail(flag: str, message: str):
    raise UsageError(f"{flag}: {message}")


def _json_default(value):
    if isinstance(value, Fraction):
        return (
            str(value.numerator)
            if value.denominator == 1
            else f"{value.numerator}/{value.denominator}"
        )
    raise TypeError(f"not JSON serializable: {type(value)!r}")


def _dumps(payload) -> str:
    return json.dumps(payload, sort_keys=True, default=_json_default)


def _int_tuple(flag: str, value, allow_empty: bool = False) -> tuple[int, ...]:
    """Parse '4,1' (or a JSON list in batch mode) into a tuple of ints."""
    if value is None:
        _fail(flag, "is required")
    if isinstance(value, (list, tuple)):
        items = list(value)
    else:
        items = [s for s in str(value).split(",") if s.strip() != ""]
    try:
        out = tuple(int(x) for x in items)
    except (TypeError, ValueError):
        _fail(flag, f"expected comma-separated integers, got {value!r}")
    if not out and not allow_empty:
        _fail(flag, "must be nonempty")
    return out


def _int(flag: str, value) -> int:
    if value is None:
        _fail(flag, "is required")
    try:
        return int(value)
    except (TypeError, ValueError):
        _fail(flag, f"expected an integer, got {value!r}")


def _cartan_type(flag: str, value) -> str:
    if value is None:
        _fail(flag, "is required")
    s = str(value).strip().upper()
    if not _TYPE_RE.match(s):
        _fail(flag, f"expected a type like A2 or D4, got {value!r}")
    return s


# ---------------------------------------------------------------------------
# command handlers: params dict -> (payload, rows)
#
# payload is the JSON result; rows is a list of flat dicts for csv/table.
# ---------------------------------------------------------------------------


def _scalar_rows(payload: dict) -> list[dict]:
    row = {}
    for key, value in payload.items():
        row[key] = value if isinstance(value, (int, str, bool)) else _dumps(value)
    return [row]


def cmd_qdim(p: dict):
    report = dims.quantum_nullity(
        _cartan_type("--type", p.get("type")),
        _int_tuple("--weight", p.get("weight")),
        _int("--l", p.get("l")),
    )
    return report.to_json(), None


def cmd_pdim(p: dict):
    report = dims.modular_nullity_simple(
        _cartan_type("--type", p.get("type")),
        _int_tuple("--weight", p.get("weight")),
        _int("--p", p.get("p")),
    )
    return report.to_json(), None


def cmd_steinberg(p: dict):
    ctype = _cartan_type("--type", p.get("type"))
    ell = _int("--l", p.get("l"))
    weight = dims.steinberg_weight(ctype, ell)
    report = dims.quantum_nullity(ctype, weight, ell)
    payload = report.to_json()
    payload["positive_roots"] = len(root_system(ctype).positive_roots)
    return payload, None


def cmd_telescope(p: dict):
    ctype = _cartan_type("--type", p.get("type"))
    base = _int_tuple("--weight", p.get("weight"))
    r = _int("--r", p.get("r"))
    prime = _int("--p", p.get("p"))
    tele = dims.telescope_weight(ctype, base, r, prime)
    report = dims.modular_nullity_simple(ctype, tele, prime)
    payload = {
        "cartan_type": ctype,
        "base_weight": list(base),
        "r": r,
        "prime": prime,
        "weight": list(tele),
        "nullity": report.nullity,
    }
    return payload, None


def cmd_facets(p: dict):
    lam = _int_tuple("--partition", p.get("partition"))
    ell = p.get("l")
    ell = sum(lam) + 1 if ell is None else _int("--l", ell)
    mins = facets.strongly_minimal_facets(lam, ell)
    rows = [
        {
            "pattern": facets.pattern_str(f),
            "k": facets.facet_k(f),
            "roots": facets.roots_str(f),
        }
        for f in mins
    ]
    payload = {"partition": list(lam), "l": ell, "facets": rows}
    return payload, rows


def cmd_cell(p: dict):
    report = cells.cell_report(
        _int_tuple("--point", p.get("point")), _int("--l", p.get("l"))
    )
    return report.to_json(), None


def cmd_ideal_member(p: dict):
    nu = _int_tuple("--weight", p.get("weight"), allow_empty=True)
    lam = _int_tuple("--partition", p.get("partition"))
    ell = _int("--l", p.get("l"))
    payload = {
        "weight": list(nu),
        "partition": list(lam),
        "l": ell,
        "member": cells.ideal_member(nu, lam, ell),
    }
    return payload, None


def cmd_nk(p: dict):
    nu = _int_tuple("--weight", p.get("weight"), allow_empty=True)
    ell = _int("--l", p.get("l"))
    k = _int("--k", p.get("k"))
    payload = {
        "weight": list(nu),
        "l": ell,
        "k": k,
        "member": cells.nk_member(nu, ell, k),
    }
    return payload, None


def cmd_region(p: dict):
    nu = _int_tuple("--weight", p.get("weight"), allow_empty=True)
    lam = _int_tuple("--partition", p.get("partition"), allow_empty=True)
    prime = _int("--p", p.get("p"))
    r = _int("--r", p.get("r"))
    payload = {
        "weight": list(nu),
        "partition": list(lam),
        "p": prime,
        "r": r,
        "member": cells.modular_region_member(nu, lam, prime, r),
    }
    return payload, None


def cmd_link(p: dict):
    word = _int_tuple("--word", p.get("word"), allow_empty=True)
    strands = _int("--strands", p.get("strands"))
    colors = p.get("colors")
    colors = (
        (1,) * strands if colors is None else _int_tuple("--colors", colors)
    )
    writhe = bool(p.get("writhe_correct", False))
    payload = {
        "word": list(word),
        "strands": strands,
        "colors": list(colors),
    }
    ell, k = p.get("l"), p.get("k")
    if (ell is None) != (k is None):
        _fail("--k", "--l and --k must be given together")
    if ell is not None:
        ell, k = _int("--l", ell), _int("--k", k)
        value = modified_invariant(word, strands, colors, ell, k)
        payload["l"] = ell
        payload["order"] = k
        payload["modified_value"] = value.to_json()
        if sum(colors) <= FULL_WIDTH_LIMIT:
            payload["invariant"] = colored_invariant(
                word, strands, colors, writhe_correct=writhe
            ).to_json()
    else:
        payload["invariant"] = colored_invariant(
            word, strands, colors, writhe_correct=writhe
        ).to_json()
    return payload, None


def cmd_object_nullity(p: dict):
    colors = _int_tuple("--colors", p.get("colors"))
    ell = _int("--l", p.get("l"))
    widths = [(c, colors.count(c)) for c in sorted(set(colors))]
    payload = {
        "colors": sorted(colors),
        "l": ell,
        "nullity": object_nullity_tl(widths, ell),
    }
    return payload, None


def cmd_a2_cells(p: dict):
    prime = _int("--p", p.get("p"))
    s_max = 3 if p.get("smax") is None else _int("--smax", p.get("smax"))
    families = dims.a2_modular_cells(prime, s_max)
    rows = [
        {
            "s": fam["s"],
            "family": fam["family"],
            "nullity": fam["nullity"],
            "sample_weight": ",".join(str(x) for x in fam["sample_weight"]),
            "constraints": "; ".join(fam["constraints"]),
        }
        for fam in families
    ]
    payload = {"p": prime, "s_max": s_max, "families": families}
    return payload, rows


def cmd_plot(p: dict):
    ctype = _cartan_type("--type", p.get("type"))
    if ctype not in ("A2", "B2", "G2"):
        _fail("--type", f"plot supports A2, B2, G2; got {ctype}")
    ell = _int("--l", p.get("l"))
    what = p.get("what") or "nullity"
    if what not in ("nullity", "nk"):
        _fail("--what", f"expected nullity or nk, got {what!r}")
    if what == "nk" and ctype != "A2":
        _fail("--what", "nk heatmaps are defined for --type A2 only")
    bound = 9 if p.get("max") is None else _int("--max", p.get("max"))
    out = p.get("out")
    if not out:
        _fail("--out", "is required")
    values = {}
    for a in range(bound + 1):
        for b in range(bound + 1):
            if what == "nullity":
                values[(a, b)] = dims.quantum_nullity(
                    ctype, (a, b), ell, verify_dimension=False
                ).nullity
            else:
                values[(a, b)] = max(
                    k for k in range(4) if cells.nk_member((a, b), ell, k)
                )
    from .plotting import render_grid

    render_grid(values, bound, f"{ctype} {what} at l={ell}", str(out))
    rows = [
        {"a": a, "b": b, "value": values[(a, b)]}
        for a in range(bound + 1)
        for b in range(bound + 1)
    ]
    payload = {"out": str(out), "points": rows}
    return payload, rows


COMMANDS = {
    "qdim": cmd_qdim,
    "pdim": cmd_pdim,
    "steinberg": cmd_steinberg,
    "telescope": cmd_telescope,
    "facets": cmd_facets,
    "cell": cmd_cell,
    "ideal-member": cmd_ideal_member,
    "nk": cmd_nk,
    "region": cmd_region,
    "link": cmd_link,
    "object-nullity": cmd_object_nullity,
    "a2-cells": cmd_a2_cells,
    "plot": cmd_plot,
}


# ---------------------------------------------------------------------------
# output formatting
# ---------------------------------------------------------------------------


def _emit(command: str, payload, rows, fmt: str, out=None):
    out = out or sys.stdout
    if fmt == "json":
        print(_dumps(payload), file=out)
        return
    if rows is None:
        rows = _scalar_rows(payload)
    if fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        if rows:
            header = list(rows[0])
            writer.writerow(header)
            for row in rows:
                writer.writerow([row[h] for h in header])
        return
    # table
    if command == "facets":
        for row in rows:
            print(f"{row['pattern']} | {row['k']} | {row['roots']}".rstrip(), file=out)
        return
    for row in rows:
        for key, value in row.items():
            print(f"{key} = {value}", file=out)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tiltnull", description="exact cell, nullity, and link calculations"
    )
    parser.add_argument(
        "--stdin-jsonl",
        action="store_true",
        help="read one JSON object of parameters per stdin line; write JSONL",
    )
    parser.add_argument(
        "--jobs", type=int, default=4, help="worker threads for --stdin-jsonl"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, *flags, fmt_default="json", help=None):
        sp = sub.add_parser(name, help=help)
        for flag in flags:
            sp.add_argument(flag)
        sp.add_argument(
            "--format", choices=["json", "csv", "table"], default=fmt_default
        )
        return sp

    add("qdim", "--type", "--weight", "--l", help="quantum dimension nullity report")
    add("pdim", "--type", "--weight", "--p", help="modular dimension nullity report")
    add("steinberg", "--type", "--l", help="top quantum nullity at the Steinberg weight")
    add("telescope", "--type", "--weight", "--r", "--p",
        help="telescoped weight and its modular nullity")
    add("facets", "--partition", "--l", fmt_default="table",
        help="strongly minimal facet table for a partition (default l = n+1)")
    add("cell", "--point", "--l", help="cell invariants of a dominant point")
    add("ideal-member", "--weight", "--partition", "--l",
        help="membership of a weight in a cell ideal")
    add("nk", "--weight", "--l", "--k", help="membership in the k-negligible region")
    add("region", "--weight", "--partition", "--p", "--r",
        help="membership in a modular region")
    link = add("link", "--word", "--strands", "--colors", "--l", "--k",
               help="colored bracket invariant of a braid closure")
    link.add_argument("--writhe-correct", action="store_true",
                      dest="writhe_correct")
    add("object-nullity", "--colors", "--l",
        help="negligibility order of a colored object")
    add("a2-cells", "--p", "--smax", help="rank-2 modular cell families")
    plot = add("plot", "--type", "--l", "--what", "--out", fmt_default="csv",
               help="rank-2 heatmap (figure file + CSV rows on stdout)")
    plot.add_argument("--max", type=int, default=9)
    return parser


def _run_line(command: str, line: str) -> str:
    try:
        params = json.loads(line)
        if not isinstance(params, dict):
            raise UsageError("each line must be a JSON object")
        payload, _ = COMMANDS[command](params)
        return _dumps(payload)
    except UsageError as exc:
        return _dumps({"error": str(exc)})
    except (ValueError, KeyError, ZeroDivisionError) as exc:
        return _dumps({"error": str(exc)})


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    command = args.command
    if args.stdin_jsonl:
        lines = [line for line in sys.stdin if line.strip()]
        with ThreadPoolExecutor(max_workers=max(1, args.jobs)) as pool:
            for result in pool.map(lambda s: _run_line(command, s), lines):
                print(result)
        return 0
    params = {
        key: value
        for key, value in vars(args).items()
        if key not in ("command", "stdin_jsonl", "jobs", "format")
    }
    try:
        payload, rows = COMMANDS[command](params)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InfiniteValuationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, KeyError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    _emit(command, payload, rows, args.format)
    return 0


if __name__ == "__main__":
    sys.exit(main())
