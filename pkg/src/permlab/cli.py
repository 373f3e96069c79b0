"""``permlab`` command line.

Exit status: 0 on success (or every check passing), 1 when a check is
falsified, 2 on a usage or input error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from typing import Any, Sequence

from . import andre as an
from . import transform as tr
from .enumeration import BoundError, Family, named_polynomial
from .gamma import d_coeffs, gamma_table
from .perm import (
    Boundary,
    CycleStyle,
    DecoratedPermutation,
    DomainError,
    Permutation,
    Stat,
    cycle_form,
    format_cycles,
    stat_count,
    stat_set,
)
from .poly import VARS, MPoly, to_json
from .series import IDENTITIES, SeriesError, check_identity
from .verify import SUITES, report, run_suites, theta2_transport


class UsageError(Exception):
    pass


def _dump(obj: Any) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False)


def _sorted(xs) -> list[int]:
    return sorted(xs)


def _parse_points(text: str | None) -> list[int] | None:
    if text is None:
        return None
    m = re.fullmatch(r"\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*", text)
    if m:
        lo, hi = int(m.group(1)), int(m.group(2))
        return list(range(lo, hi + 1))
    try:
        return [int(p) for p in text.split(",") if p.strip()]
    except ValueError:
        raise UsageError(f"cannot parse points {text!r}; use 'a..b' or a comma list") from None


def _parse_stat(token: str) -> tuple[Stat, Boundary | None]:
    """``name`` or ``name@boundary`` with boundary one of zero_zero, inf_inf, zero_inf, inf_zero."""
    name, _, bd = token.strip().partition("@")
    try:
        stat = Stat.parse(name)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if not bd:
        return stat, None
    try:
        return stat, Boundary[bd.upper()]
    except KeyError:
        raise UsageError(f"unknown boundary {bd!r}") from None


def _perm(text: str | None) -> Permutation:
    if not text:
        raise UsageError("a permutation is required (--perm or --input)")
    p = Permutation.parse(text)
    p.require_standard()
    return p


def _poly_csv(p: MPoly) -> str:
    used = [v for v in VARS if v in p.variables()]
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["coeff", *used])
    for term in to_json(p):
        w.writerow([term["coeff"], *(term["exps"].get(v, 0) for v in used)])
    return buf.getvalue().rstrip("\n")


# subcommands -----------------------------------------------------------------------


def cmd_stats(args) -> int:
    p = _perm(args.perm or args.input)
    if not args.stats:
        raise UsageError("--stats is required")
    out = {}
    for token in args.stats.split(","):
        stat, bd = _parse_stat(token)
        out[token.strip()] = _sorted(stat_set(p, stat, bd)) if args.sets else stat_count(p, stat, bd)
    print(_dump(out))
    return 0


def cmd_enumerate(args) -> int:
    if args.family is None or args.n is None:
        raise UsageError("--family and --n are required")
    try:
        fam = Family(args.family.lower())
    except ValueError:
        raise UsageError(f"unknown family {args.family!r}; choose from {[f.value for f in Family]}") from None
    p = named_polynomial(fam, args.n, args.k)
    if args.format == "csv":
        print(_poly_csv(p))
    else:
        out = {"family": fam.value, "n": args.n}
        if args.k is not None:
            out["k"] = args.k
        out["polynomial"] = str(p)
        out["terms"] = to_json(p)
        print(_dump(out))
    return 0


def cmd_gamma(args) -> int:
    if args.family not in ("atilde", "axyt") or args.n is None:
        raise UsageError("--family {atilde,axyt} and --n are required")
    rows = []
    for n in range(args.n + 1):
        g = gamma_table(args.family, n, t1=args.t1)
        d = d_coeffs(g) if args.family == "axyt" else [None] * len(g.coeffs)
        for j, (gj, dj) in enumerate(zip(g.coeffs, d)):
            rows.append({"n": n, "j": j, "gamma": str(gj), **({"d": str(dj)} if dj is not None else {})})
    if args.format == "csv":
        buf = io.StringIO()
        fields = ["n", "j", "gamma"] + (["d"] if args.family == "axyt" else [])
        w = csv.DictWriter(buf, fields, lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
        print(buf.getvalue().rstrip("\n"))
    else:
        print(_dump({"family": args.family, "t1": args.t1, "rows": rows}))
    return 0


def _counts(p: Permutation, names: Sequence[str], bd: Boundary | None = None) -> dict[str, int]:
    return {s: stat_count(p, s, bd) for s in names}


def _bij_theta1(text: str, inverse: bool) -> dict:
    p = _perm(text)
    src = tr.theta1_inv(p) if inverse else p
    img = tr.theta1(src)
    a = _counts(src, ("exc", "fix", "cyc"))
    b = {"asc": stat_count(img, "asc"), "rmaxdd": stat_count(img, "rmaxdd", Boundary.INF_ZERO),
         "rmax": stat_count(img, "rmax")}
    return {"source": src.one_line(), "image": img.one_line(),
            "cycles": format_cycles(cycle_form(src, CycleStyle.MAX_LAST_DEC_MAX)),
            "transport": {"source": a, "image": b, "holds": list(a.values()) == list(b.values())}}


def _bij_theta2(text: str, inverse: bool) -> dict:
    p = _perm(text)
    src = tr.theta2_inv(p) if inverse else p
    img = tr.theta2(src)
    s, i = theta2_transport(src)
    keys = ("cpk/pk", "cval/val", "cda+fix/da", "cdd/dd")
    return {"source": src.one_line(), "image": img.one_line(),
            "cycles": format_cycles(cycle_form(src, CycleStyle.MAX_FIRST_INC_MAX)),
            "transport": {"source": dict(zip(keys, map(_sorted, s))), "image": dict(zip(keys, map(_sorted, i))),
                          "holds": s == i}}


def _decorated_report(d: DecoratedPermutation, pi: Permutation) -> dict:
    from .perm import subset_cycles_standardized as std
    names = ("cpk", "cda", "cdd", "fix", "cyc")
    r = _counts(std(d.red), names) if d.red else dict.fromkeys(names, 0)
    b = _counts(std(d.blue), names) if d.blue else dict.fromkeys(names, 0)
    w = _counts(pi, ("pk", "da", "dd", "lmaxda", "rmaxdd", "lmaxpk", "rmaxpk", "lmax", "rmax"))
    laws = {
        "cpk(R)+cpk(B) = pk-1": (r["cpk"] + b["cpk"], w["pk"] - 1),
        "cda(R)+fix(R)+cda(B) = da": (r["cda"] + r["fix"] + b["cda"], w["da"]),
        "cdd(R)+cdd(B)+fix(B) = dd": (r["cdd"] + b["cdd"] + b["fix"], w["dd"]),
        "fix(R)+fix(B) = lmaxda+rmaxdd": (r["fix"] + b["fix"], w["lmaxda"] + w["rmaxdd"]),
        "cyc(R)-fix(R) = lmaxpk-1": (r["cyc"] - r["fix"], w["lmaxpk"] - 1),
        "cyc(B)-fix(B) = rmaxpk-1": (b["cyc"] - b["fix"], w["rmaxpk"] - 1),
        "cyc(R) = lmax-1": (r["cyc"], w["lmax"] - 1),
        "cyc(B) = rmax-1": (b["cyc"], w["rmax"] - 1),
    }
    return {"red": r, "blue": b, "image": w, "laws": {k: list(v) for k, v in laws.items()},
            "holds": all(x == y for x, y in laws.values())}


def _bij_rho(text: str, inverse: bool) -> dict:
    if inverse:
        pi = _perm(text)
        d = tr.rho_inv(pi)
    else:
        d = DecoratedPermutation.parse(text)
        pi = tr.rho(d)
    return {"source": str(d), "image": pi.one_line(compact=False), "transport": _decorated_report(d, pi)}


_PSI_INPUT = re.compile(r"^(?P<perm>.*?)\s*S\s*=\s*\{(?P<set>[\d,\s]*)\}\s*$")


def _bij_psi(text: str, inverse: bool) -> dict:
    m = _PSI_INPUT.match(text or "")
    if not m:
        raise UsageError("psi input must look like 'PERM S={4,8}'")
    p = _perm(m.group("perm"))
    S = tuple(int(x) for x in m.group("set").replace(",", " ").split())
    q = tr.psi(p, S)  # an involution, so --inverse changes nothing
    names = ("cval", "cpk", "cda", "cdd", "fix")
    return {
        "source": format_cycles(cycle_form(p, CycleStyle.MAX_FIRST_INC_MAX)),
        "S": list(S),
        "image": format_cycles(cycle_form(q, CycleStyle.MAX_FIRST_INC_MAX)),
        "imageOneLine": q.one_line(compact=False),
        "transport": {"source": {k: _sorted(stat_set(p, k)) for k in names},
                      "image": {k: _sorted(stat_set(q, k)) for k in names}},
    }


def _bij_varphi(text: str, inverse: bool) -> dict:
    p = _perm(text)
    src = tr.varphi_suc_inv(p) if inverse else p
    img = tr.varphi_suc(src)
    pairs = (("excHat", "bascB"), ("dropV", "desB"), ("fixHat", "sucB"))
    a = {x: _sorted(stat_set(src, x)) for x, _ in pairs}
    b = {y: _sorted(stat_set(img, y)) for _, y in pairs}
    return {"source": src.one_line(), "image": img.one_line(),
            "transport": {"source": a, "image": b, "holds": list(a.values()) == list(b.values())}}


BIJECTIONS = {"theta1": _bij_theta1, "theta2": _bij_theta2, "rho": _bij_rho, "psi": _bij_psi,
              "varphi": _bij_varphi}


def cmd_bijection(args) -> int:
    if args.name not in BIJECTIONS:
        raise UsageError(f"--name must be one of {sorted(BIJECTIONS)}")
    text = args.input or args.perm
    if not text:
        raise UsageError("--input is required")
    out = {"name": args.name, "inverse": args.inverse, **BIJECTIONS[args.name](text, args.inverse)}
    print(_dump(out))
    return 0


def _tree(text: str) -> an.IncBinaryTree | None:
    try:
        return an.parse_tree(text)
    except (ValueError, IndexError) as exc:
        raise UsageError(f"cannot parse tree {text!r}: {exc}") from None


def _andre_map(name: str, text: str, inverse: bool) -> dict:
    if name == "omega":
        if inverse:
            t = _tree(text)
            return {"tree": str(t) if t else "-", "word": Permutation(an.omega_inv(t)).one_line(compact=False)}
        p = _perm(text)
        t = an.omega(p.word)
        return {"word": p.one_line(compact=False), "tree": str(t) if t else "-"}
    if name == "Psi":
        t = _tree(text)
        img = an.Psi_inv(t) if inverse else an.Psi(t)
        return {"tree": str(t), "image": str(img), "S_T": an.two_child_positions(t)}
    p = _perm(text)
    if name == "phi":
        img = an.phi_ca_inv(p) if inverse else an.phi_ca(p)
    elif name == "zeta":
        img = an.zeta_inv(p) if inverse else an.zeta(p)
    elif name == "Phi":
        img = an.Phi_inv(p.word) if inverse else an.Phi(p.word)
    else:
        raise UsageError(f"unknown map {name!r}")
    return {"source": format_cycles(cycle_form(p, CycleStyle.MIN_FIRST)) if name in ("phi", "zeta") and not inverse
            else p.one_line(compact=False),
            "image": format_cycles(cycle_form(img, CycleStyle.MIN_FIRST)) if name in ("phi", "zeta") and inverse
            else img.one_line(compact=False)}


def cmd_andre(args) -> int:
    text = args.input or args.perm
    if not text:
        raise UsageError("--input is required")
    if args.map:
        out = {"map": args.map, "inverse": args.inverse, **_andre_map(args.map, text, args.inverse)}
    elif args.check:
        p = _perm(text)
        out = {
            "word": p.one_line(compact=False),
            "andre1": an.is_andre(p.word, 1),
            "andre2": an.is_andre(p.word, 2),
            "methodsAgree": all(an.is_andre(p.word, k, "factorization") == an.is_andre(p.word, k, "recursive")
                                for k in (1, 2)),
            "cycleAndre": an.is_cycle_andre(p),
            "cycleUpDown": an.is_cycle_up_down(p),
        }
    else:
        raise UsageError("give --check or --map")
    print(_dump(out))
    return 0


def cmd_series_check(args) -> int:
    if not args.name:
        raise UsageError("--name is required (an identity name or 'all')")
    names = sorted(IDENTITIES) if args.name == "all" else [args.name]
    for nm in names:
        if nm not in IDENTITIES:
            raise UsageError(f"unknown identity {nm!r}; choose from {sorted(IDENTITIES)} or 'all'")
    points = _parse_points(args.points)
    verdicts = [check_identity(nm, args.order, points).to_dict() for nm in names]
    print(_dump(verdicts[0] if len(verdicts) == 1 and args.name != "all" else verdicts))
    return 0 if all(v["pass"] for v in verdicts) else 1


def cmd_check(args) -> int:
    names = sorted(SUITES) if args.suite in (None, "all") else [s.strip() for s in args.suite.split(",")]
    max_n = 7 if args.max_n is None else args.max_n
    order = 7 if args.order is None else args.order
    if max_n < 0 or not 0 <= order <= 10:
        raise UsageError("--max-n must be >= 0 and --order in 0..10")
    try:
        results = run_suites(names, max_n, order, jobs=args.jobs)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    rep = report(results, max_n, order)
    print(_dump(rep))
    return 0 if rep["pass"] else 1


# parser ------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="permlab", description="Permutation statistics, bijections and identities.")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        sp = sub.add_parser(name, help=help_)
        sp.set_defaults(fn=fn)
        sp.add_argument("--format", choices=("json", "csv"), default="json")
        sp.add_argument("--jobs", type=int, default=1)
        return sp

    sp = add("stats", cmd_stats, "statistics of one permutation")
    sp.add_argument("--perm")
    sp.add_argument("--input")
    sp.add_argument("--stats", help="comma list, each optionally name@boundary")
    sp.add_argument("--sets", action="store_true", help="print the index sets instead of counts")

    sp = add("enumerate", cmd_enumerate, "generating polynomial of a named family")
    sp.add_argument("--family")
    sp.add_argument("--n", type=int)
    sp.add_argument("--k", type=int)

    sp = add("gamma", cmd_gamma, "gamma and d tables")
    sp.add_argument("--family")
    sp.add_argument("--n", type=int)
    sp.add_argument("--t1", action="store_true")

    sp = add("bijection", cmd_bijection, "apply a bijection and report transported statistics")
    sp.add_argument("--name")
    sp.add_argument("--input")
    sp.add_argument("--perm")
    sp.add_argument("--inverse", action="store_true")

    sp = add("andre", cmd_andre, "André recognition and maps")
    sp.add_argument("--check", action="store_true")
    sp.add_argument("--map", choices=("omega", "phi", "Phi", "Psi", "zeta"))
    sp.add_argument("--input")
    sp.add_argument("--perm")
    sp.add_argument("--inverse", action="store_true")

    sp = add("series-check", cmd_series_check, "check a generating-function identity")
    sp.add_argument("--name")
    sp.add_argument("--order", type=int)
    sp.add_argument("--points")

    sp = add("check", cmd_check, "run the verification suites")
    sp.add_argument("--suite", default="all")
    sp.add_argument("--max-n", type=int)
    sp.add_argument("--order", type=int)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.fn(args)
    except (UsageError, DomainError, BoundError, SeriesError, ValueError) as exc:
        print(f"permlab: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
