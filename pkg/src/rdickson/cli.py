"""Command line front end.

Subcommands:
  eval        one value D(n,k; a,x), optionally cross-checked
  poly        reduced polynomial mod x^q - x plus the integer form
  pp          permutation scan over an (n, k) grid
  verify      both-sides check of a named statement, or of the sum tables
  sums        full-field sum table for one kind
  field-info  parameters of a field descriptor

Shared flags: --field, --format {pretty,json,csv}, --out FILE, --check,
--unsafe-large.  Fields are given as "q", "p^e" or "p^e/c0,c1,...,1";
elements as comma-separated coordinates ("3" or "1,2").  Sizes are
guarded by q <= RDK_MAX_Q (environment, default 343) and grids by
10^6 points; --unsafe-large lifts both.

Exit codes: 0 verified/ok, 1 a check failed or an internal
cross-check tripped, 2 usage error.  Output is deterministic: equal
invocations produce identical bytes.
"""

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass, field as dataclass_field

from . import charsum, gf, permcheck, rdpoly
from .gf import InternalCheckError

DEFAULT_MAX_Q = 343
GRID_LIMIT = 10 ** 6
SMALL_N = 5000          # bound for the O(n) and O(n^2) cross-check routes


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    """Serializable record of one invocation (dict round-trip exact)."""

    command: str
    fmt: str = "pretty"
    out: str | None = None
    check: bool = False
    unsafe_large: bool = False
    max_q: int = DEFAULT_MAX_Q
    params: tuple = ()

    _FLAGS = ("command", "fmt", "out", "check", "unsafe_large", "max_q")

    @classmethod
    def from_args(cls, args):
        known = {"command", "format", "out", "check", "unsafe_large"}
        params = tuple(sorted(
            (name, str(value))
            for name, value in vars(args).items()
            if name not in known and value is not None))
        return cls(command=args.command, fmt=args.format, out=args.out,
                   check=getattr(args, "check", False),
                   unsafe_large=args.unsafe_large,
                   max_q=_max_q_from_env(), params=params)

    def to_dict(self):
        d = {name: getattr(self, name) for name in self._FLAGS}
        d["params"] = dict(self.params)
        return d

    @classmethod
    def from_dict(cls, d):
        return cls(params=tuple(sorted(d["params"].items())),
                   **{name: d[name] for name in cls._FLAGS})


def _max_q_from_env():
    raw = os.environ.get("RDK_MAX_Q")
    if raw is None:
        return DEFAULT_MAX_Q
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"RDK_MAX_Q must be an integer, got {raw!r}")


# -- parsing helpers -------------------------------------------------------


def _parse_range_list(text, what):
    """Accept "4", "1..10", "5,7,9" and mixtures like "0..2,6"."""
    out = []
    for token in text.split(","):
        token = token.strip()
        try:
            if ".." in token:
                lo, _, hi = token.partition("..")
                out.extend(range(int(lo), int(hi) + 1))
            else:
                out.append(int(token))
        except ValueError:
            raise UsageError(
                f"bad {what} {text!r}: expected N, N..M or a comma list")
    if not out:
        raise UsageError(f"empty {what} {text!r}")
    return out


def _parse_int(text, what, minimum=None):
    try:
        value = int(text)
    except ValueError:
        raise UsageError(f"bad {what} {text!r}: expected an integer")
    if minimum is not None and value < minimum:
        raise UsageError(f"{what} must be at least {minimum}")
    return value


def _load_field(args, cfg):
    if not getattr(args, "field", None):
        raise UsageError("--field is required for this command")
    try:
        F = gf.parse_field_descriptor(args.field)
    except ValueError as exc:
        raise UsageError(str(exc))
    _guard_field(F, cfg)
    return F


def _guard_field(F, cfg):
    if F.q > cfg.max_q and not cfg.unsafe_large:
        raise UsageError(
            f"field size {F.q} exceeds the bound q <= {cfg.max_q}; "
            "raise RDK_MAX_Q or pass --unsafe-large")


def _guard_grid(n_points, cfg):
    if n_points > GRID_LIMIT and not cfg.unsafe_large:
        raise UsageError(
            f"grid of {n_points} points exceeds {GRID_LIMIT}; "
            "pass --unsafe-large to proceed")


def _parse_element(F, text, what):
    try:
        coords = [int(t) for t in text.split(",")]
    except ValueError:
        raise UsageError(
            f"bad {what} {text!r}: expected comma-separated coordinates")
    try:
        return F.element(coords)
    except ValueError as exc:
        raise UsageError(f"bad {what} {text!r}: {exc}")


def _coords(F, v):
    return ",".join(str(c) for c in F.coeffs(v))


def _bool(v):
    return "true" if v else "false"


# -- output ----------------------------------------------------------------


def _render(fmt, pretty_lines, json_obj, csv_header, csv_rows):
    if fmt == "json":
        return json.dumps(json_obj, sort_keys=True, indent=2)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(csv_header)
        writer.writerows(csv_rows)
        return buf.getvalue().rstrip("\n")
    return "\n".join(pretty_lines)


def _emit(args, pretty_lines, json_obj, csv_header, csv_rows):
    text = _render(args.format, pretty_lines, json_obj, csv_header, csv_rows)
    text += "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# -- eval --------------------------------------------------------------


def cmd_eval(args, cfg):
    F = _load_field(args, cfg)
    n = _parse_int(args.n, "--n", minimum=0)
    k = _parse_int(args.k, "--k")
    x = _parse_element(F, args.x, "--x")
    a = _parse_element(F, args.a, "--a")
    if F.p == 2 and a not in (0, 1):
        # the rescale shortcut in eval_recurrence is scoped to odd
        # characteristic, so this corner runs the definition directly
        if n > SMALL_N:
            raise UsageError(
                "over characteristic 2 a scale outside {0, 1} is evaluated "
                f"by the defining recurrence; keep --n at or below {SMALL_N}")
        value = rdpoly.eval_definition(F, n, k, x, a)
    else:
        value = rdpoly.eval_recurrence(F, n, k, x, a)
    methods = {"recurrence": value}
    if args.check:
        if n <= SMALL_N:
            methods["definition"] = rdpoly.eval_definition(F, n, k, x, a)
        if a == 0:
            methods["a0"] = rdpoly.eval_a0(F, n, k, x)
        if F.p == 2:
            methods["char2"] = rdpoly.char2_eval(F, n, k, x, a)
        if F.p != 2 and a == 1:
            methods["functional"] = rdpoly.eval_functional(F, n, k, x)
            if n <= SMALL_N:
                methods["fnk"] = rdpoly.eval_via_fnk(F, n, k, x)
            if rdpoly._power_shape(F.p, n) is not None:
                methods["closed_form"] = rdpoly.closed_form(F, n, k, x)
    agree = len(set(methods.values())) == 1

    pretty = [_coords(F, value)]
    if args.check:
        pretty = [f"{name}: {_coords(F, val)}"
                  for name, val in sorted(methods.items())]
        pretty.append(f"agree: {_bool(agree)}")
    jobj = {"command": "eval", "field": gf.field_descriptor(F), "n": n,
            "k": k % F.p, "a": list(F.coeffs(a)), "x": list(F.coeffs(x)),
            "value": list(F.coeffs(value))}
    rows = [("value", _coords(F, value))]
    if args.check:
        jobj["methods"] = {name: list(F.coeffs(val))
                           for name, val in methods.items()}
        jobj["agree"] = agree
        rows += [(name, _coords(F, val))
                 for name, val in sorted(methods.items())]
        rows.append(("agree", _bool(agree)))
    _emit(args, pretty, jobj, ("quantity", "value"), rows)
    return 0 if agree else 1


# -- poly --------------------------------------------------------------


def cmd_poly(args, cfg):
    F = _load_field(args, cfg)
    n = _parse_int(args.n, "--n", minimum=0)
    k = _parse_int(args.k, "--k")
    poly = rdpoly.as_polynomial(F, n, k)
    fnk = rdpoly.fnk_coeffs(n, k % F.p) if n <= SMALL_N else None

    pretty = [str(poly)]
    if fnk is not None:
        pretty.append(f"f = {str(fnk).replace('x', 't')}"
                      "   (value = f(1 - 4x) / 2^n)")
    jobj = {"command": "poly", "field": gf.field_descriptor(F), "n": n,
            "k": k % F.p, "poly": poly.to_json(), "poly_str": str(poly),
            "fnk": fnk.to_json() if fnk is not None else None}
    rows = [("poly", i, _coords(F, c)) for i, c in enumerate(poly.coeffs)]
    if fnk is not None:
        rows += [("fnk", i, str(c)) for i, c in enumerate(fnk.coeffs)]
    _emit(args, pretty, jobj, ("source", "degree", "coeff"), rows)
    return 0


# -- pp ----------------------------------------------------------------


def cmd_pp(args, cfg):
    F = _load_field(args, cfg)
    ns = _parse_range_list(args.n, "--n")
    if min(ns) < 1:
        raise UsageError("--n indices must be at least 1 for pp scans")
    ks = _parse_range_list(args.k, "--k") if args.k else list(range(F.p))
    _guard_grid(len(ns) * len(ks), cfg)
    criteria = [c.strip() for c in args.criteria.split(",") if c.strip()]
    allowed = ("brute_force", "two_to_one")
    for crit in criteria:
        if crit not in allowed:
            raise UsageError(f"unknown criterion {crit!r}; "
                             f"choose from {', '.join(allowed)}")
    if F.p == 2 and "two_to_one" in criteria:
        raise UsageError("the two_to_one criterion needs odd characteristic")

    rows, disagreements = [], 0
    for n in ns:
        for k in ks:
            verdicts = {}
            for crit in criteria:
                if crit == "brute_force":
                    verdicts[crit] = permcheck.dickson_pp_bruteforce(
                        F, n, k).verdict
                else:
                    verdicts[crit] = permcheck.is_pp_two_to_one(
                        F, n, k).verdict
            agree = len(set(verdicts.values())) == 1
            disagreements += not agree
            rows.append({"n": n, "k": k % F.p, **verdicts, "agree": agree})

    header = ["n", "k", *criteria, "agree"]
    pretty = [" ".join(header)]
    csv_rows = []
    for row in rows:
        cells = [str(row["n"]), str(row["k"])]
        cells += [_bool(row[c]) for c in criteria]
        cells.append(_bool(row["agree"]))
        pretty.append(" ".join(cells))
        csv_rows.append(cells)
    if disagreements:
        pretty.append(f"criteria disagree on {disagreements} rows")
    jobj = {"command": "pp", "field": gf.field_descriptor(F),
            "criteria": criteria, "rows": rows,
            "disagreements": disagreements}
    _emit(args, pretty, jobj, header, csv_rows)
    return 1 if disagreements else 0


# -- verify ------------------------------------------------------------


def cmd_verify(args, cfg):
    if args.target == "sums":
        return _verify_sums(args, cfg)
    if args.target not in permcheck.THEOREM_IDS:
        raise UsageError(
            f"unknown verify target {args.target!r}; expected 'sums' or "
            f"one of {', '.join(permcheck.THEOREM_IDS)}")
    if not args.p or not args.e:
        raise UsageError("--p and --e are required for theorem grids")
    ps = _parse_range_list(args.p, "--p")
    es = _parse_range_list(args.e, "--e")
    ls = _parse_range_list(args.l, "--l") if args.l else None
    ns = _parse_range_list(args.n, "--n") if args.n else None
    ks = _parse_range_list(args.k, "--k") if args.k else None
    for p in ps:
        if not gf.is_prime(p):
            raise UsageError(f"--p entries must be prime, got {p}")
    max_q = cfg.max_q if not cfg.unsafe_large else 10 ** 9
    try:
        report = permcheck.verify_theorem(
            args.target, ps, es, ns=ns, ls=ls, ks=ks, max_q=max_q)
    except ValueError as exc:
        raise UsageError(str(exc))

    pretty = [f"{args.target}: {len(report.entries)} grid points, "
              f"{len(report.counterexamples)} failures"]
    for ent in report.counterexamples:
        pretty.append("FAIL " + json.dumps(ent, sort_keys=True))
    pretty.append(f"pass: {_bool(report.passed)}")
    keys = sorted({key for ent in report.entries for key in ent})
    csv_rows = [[_csv_cell(ent.get(key)) for key in keys]
                for ent in report.entries]
    _emit(args, pretty, report.to_json(), keys, csv_rows)
    return 0 if report.passed else 1


def _csv_cell(value):
    if value is None:
        return ""
    if isinstance(value, bool):
        return _bool(value)
    return str(value)


def _verify_sums(args, cfg):
    F = _load_field(args, cfg)
    if F.p == 2:
        raise UsageError("sum tables need odd characteristic")
    ks = _parse_range_list(args.k, "--k") if args.k else list(range(F.p))
    _guard_grid(len(ks) * F.q ** 2, cfg)
    results, failures = [], []
    for k in ks:
        table = charsum.sums_via_recurrence(F, k)
        bad = 0
        for n in range(1, F.q ** 2):
            if table.sums[n] != charsum.sums_bruteforce(F, k, n):
                bad += 1
                failures.append({"k": k % F.p, "n": n})
        residue = charsum.residue_identity_holds(F, k)
        if not residue:
            failures.append({"k": k % F.p, "identity": "residue"})
        results.append({"k": k % F.p, "rows": F.q ** 2 - 1,
                        "mismatches": bad, "residue_identity": residue,
                        "ok": bad == 0 and residue})
    passed = not failures
    pretty = [f"sums over GF({F.q}): k={r['k']} "
              f"{'ok' if r['ok'] else 'FAIL'} ({r['rows']} rows)"
              for r in results]
    pretty.append(f"pass: {_bool(passed)}")
    jobj = {"command": "verify", "target": "sums",
            "field": gf.field_descriptor(F), "results": results,
            "failures": failures, "pass": passed}
    csv_rows = [[r["k"], r["rows"], r["mismatches"],
                 _bool(r["residue_identity"]), _bool(r["ok"])]
                for r in results]
    _emit(args, pretty, jobj,
          ("k", "rows", "mismatches", "residue_identity", "ok"), csv_rows)
    return 0 if passed else 1


# -- sums --------------------------------------------------------------


def cmd_sums(args, cfg):
    F = _load_field(args, cfg)
    if F.p == 2:
        raise UsageError("sum tables need odd characteristic")
    k = _parse_int(args.k, "--k")
    table = charsum.sums_via_recurrence(F, k)
    oracle = {}
    if args.check:
        for n in range(1, F.q ** 2):
            oracle[n] = charsum.sums_bruteforce(F, k, n) == table.sums[n]
    mismatch = args.check and not all(oracle.values())

    header = ("n", "sum", "d", "oracle_match")
    pretty = [" ".join(header)]
    csv_rows = []
    for n in range(1, F.q ** 2):
        om = _bool(oracle[n]) if args.check else ""
        cells = [str(n), _coords(F, table.sums[n]), str(table.d[n]), om]
        pretty.append(" ".join(cells).rstrip())
        csv_rows.append(cells)
    jobj = table.to_json()
    jobj.update(command="sums")
    if args.check:
        for row in jobj["rows"]:
            row["oracle_match"] = oracle[row["n"]]
    _emit(args, pretty, jobj, header, csv_rows)
    return 1 if mismatch else 0


# -- field-info --------------------------------------------------------


def cmd_field_info(args, cfg):
    F = _load_field(args, cfg)
    info = {"p": F.p, "e": F.e, "q": F.q,
            "modulus": list(F.modulus),
            "descriptor": gf.field_descriptor(F)}
    if F.p != 2:
        ext = gf.quadratic_extension(F)
        info["non_square"] = list(F.coeffs(ext.d))
        info["half"] = list(F.coeffs(F.half))
        info["quarter"] = list(F.coeffs(F.quarter))
    pretty = [f"{key} = {value}" for key, value in info.items()]
    csv_rows = [(key, _csv_cell(value)) for key, value in info.items()]
    jobj = {"command": "field-info", **info}
    _emit(args, pretty, jobj, ("property", "value"), csv_rows)
    return 0


# -- wiring ------------------------------------------------------------


def _build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", help='field descriptor: "q", "p^e" or '
                                        '"p^e/c0,c1,...,1"')
    common.add_argument("--format", choices=("pretty", "json", "csv"),
                        default="pretty")
    common.add_argument("--out", help="write output to a file instead of stdout")
    common.add_argument("--check", action="store_true",
                        help="cross-check against the independent routes")
    common.add_argument("--unsafe-large", action="store_true",
                        help="lift the q and grid size guards")

    parser = argparse.ArgumentParser(
        prog="rdickson",
        description="Exact arithmetic for a reversed Dickson-type "
                    "polynomial family over finite fields.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", parents=[common],
                            help="evaluate one member at one point")
    p_eval.add_argument("--n", required=True, help="index (any size)")
    p_eval.add_argument("--k", required=True, help="kind parameter")
    p_eval.add_argument("--x", required=True, help="argument element")
    p_eval.add_argument("--a", default="1", help="scale element (default 1)")

    p_poly = sub.add_parser("poly", parents=[common],
                            help="reduced polynomial mod x^q - x")
    p_poly.add_argument("--n", required=True)
    p_poly.add_argument("--k", required=True)

    p_pp = sub.add_parser("pp", parents=[common],
                          help="permutation scan over an (n, k) grid")
    p_pp.add_argument("--n", required=True, help="range, e.g. 1..10")
    p_pp.add_argument("--k", help="range (default: all of 0..p-1)")
    p_pp.add_argument("--criteria", default="brute_force,two_to_one")

    p_ver = sub.add_parser("verify", parents=[common],
                           help="check a named statement or the sum tables")
    p_ver.add_argument("target", help="'sums' or a statement id, one of: "
                       + ", ".join(permcheck.THEOREM_IDS))
    p_ver.add_argument("--p", help="primes, e.g. 3,5,7")
    p_ver.add_argument("--e", help="extension degrees, e.g. 1..2")
    p_ver.add_argument("--l", help="power exponents (default 0..e)")
    p_ver.add_argument("--n", help="indices (T2.2 grids, default 0..30)")
    p_ver.add_argument("--k", help="kinds (default 0..p-1)")

    p_sums = sub.add_parser("sums", parents=[common],
                            help="full-field sum table for one kind")
    p_sums.add_argument("--k", required=True)

    sub.add_parser("field-info", parents=[common],
                   help="parameters of a field descriptor")
    return parser


_HANDLERS = {"eval": cmd_eval, "poly": cmd_poly, "pp": cmd_pp,
             "verify": cmd_verify, "sums": cmd_sums,
             "field-info": cmd_field_info}


def main(argv=None):
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        cfg = RunConfig.from_args(args)
        return _HANDLERS[args.command](args, cfg)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InternalCheckError as exc:
        print(f"internal cross-check failed: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
