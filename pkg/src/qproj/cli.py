"""Command line entry point: ``qproj <subcommand> ...``.

Exit codes: 0 success, 1 domain error or failed verification, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from importlib import resources

from . import algebraic, fenceposet, qrat, qseries, qtrace
from .laurent import render
from .qgroup import GroupWord


def _dump(obj):
    print(json.dumps(obj, sort_keys=True))


def default_pi_digits():
    """Path of the digit file: $QPROJ_DIGITS if set, else the shipped pi digits."""
    env = os.environ.get("QPROJ_DIGITS")
    if env:
        return env
    return str(resources.files("qproj").joinpath("data/pi_cf.txt"))


# -- subcommands ------------------------------------------------------------


def cmd_qrat(args):
    x = qrat.quantize(qrat.parse_value(args.value), args.flavor)
    if args.json:
        _dump(x.to_json())
    else:
        print(x)
    return 0


def cmd_qact(args):
    w = GroupWord.parse(args.word)
    x = qrat.quantize(qrat.parse_value(args.value), args.flavor)
    y = qrat.act_twisted(w, x) if args.twisted else qrat.act(w, x)
    if args.json:
        _dump(y.to_json())
    else:
        print(y)
        print(f"value: {y.value}  flavor: {y.flavor}")
    return 0


def cmd_qreal(args):
    if args.cf:
        stream = qseries.CFDigitStream.parse(args.cf)
        source = args.cf
    else:
        path = args.digits or default_pi_digits()
        stream = qseries.CFDigitStream.from_file(path)
        source = path
    rep = qseries.quantize_real(stream, args.order, flavor=args.flavor, return_report=True)
    series = rep.series
    if args.act:
        series = qseries.mobius_series(args.act, series)
    if args.json:
        _dump({
            "source": source,
            "order": args.order,
            "digits_used": rep.digits_used,
            "act": args.act,
            "series": series.to_json(),
        })
    else:
        print(series)
    return 0


def cmd_qtrace(args):
    w = GroupWord.parse(args.word)
    tr = qtrace.qtrace(w)
    det = w.det()
    out = {"word": str(w), "det": det, "trace": qtrace.render_trace(tr), "unit": str(tr.unit)}
    if det == -1:
        rep = qtrace.check_palindrome_det_neg(w)
        out["palindromic"] = rep.palindromic
        out["single_sign"] = rep.single_sign
        out["t_factors"] = rep.tpow
    else:
        out["single_sign"] = qtrace.is_single_sign(tr.poly)
    if args.json:
        _dump(out)
    else:
        print(out["trace"])
        print(f"det: {det}  unit: {out['unit']}")
        if det == -1:
            print(f"palindromic: {_yn(out['palindromic'])}  single sign: {_yn(out['single_sign'])}")
        else:
            print(f"single sign: {_yn(out['single_sign'])}")
    return 0


def _yn(b):
    return "yes" if b else "no"


def _ideal_text(s):
    return "{" + ", ".join(map(str, sorted(s))) + "}"


def cmd_qposet(args):
    shape = tuple(int(t) for t in args.shape.split(",") if t.strip())
    p = fenceposet.build(shape)
    ideals = fenceposet.admissible_ideals(p)
    gf = fenceposet.generating_function(p)
    show_all = not (args.ideals or args.gf)
    if args.json:
        _dump({
            "shape": list(shape),
            "relations": fenceposet.CircularFencePoset.relations(p),
            "ideals": [sorted(i) for i in ideals],
            "gf": gf.to_json(),
            "gf_text": render(gf),
        })
        return 0
    if args.ideals or show_all:
        for i in ideals:
            print(_ideal_text(i))
    if args.gf or show_all:
        print(render(gf))
    return 0


def cmd_qvieta(args):
    if args.split:
        n, sign = int(args.split[:-1]), args.split[-1]
        rep = algebraic.split_case_deg4(n, sign, args.order)
    elif args.degree == 4:
        rep = algebraic.quantized_vieta_deg4(args.b, args.order)
    else:
        rep = algebraic.quantized_vieta_deg6(args.b, args.order)
    if args.json:
        _dump(rep.to_json())
    else:
        print(f"degree {rep.degree}, b = {rep.b}, checked mod q^{rep.order}")
        for name, held, e in rep.statuses():
            tail = "" if held else (f"  first divergent exponent {e}" if e is not None else "  precision short")
            print(f"  [{'ok' if held else 'FAIL'}] {name}{tail}")
        print(f"S1 = {rep.sigma[1].truncate(rep.order)}")
    return 0 if rep.ok else 1


def cmd_verify(args):
    from . import verify

    names = verify.SUITES if args.suite == "all" else [args.suite]
    results = {n: verify.run(n, seed=args.seed, digits=args.digits) for n in sorted(names)}
    ok = all(r["ok"] for r in results.values())
    if args.json:
        _dump({"ok": ok, "suites": results})
    else:
        for n, r in results.items():
            print(f"{n}: {'PASS' if r['ok'] else 'FAIL'} ({r['checked']} checks)")
            for c in r["failures"][:10]:
                print(f"  counterexample: {c}")
    return 0 if ok else 1


# -- parser ----------------------------------------------------------------


# negative rationals such as -7/5 are values, not flags
_NEGATIVE = re.compile(r"^-\d+(/\d+)?$|^-\d*\.\d+$")


def build_parser():
    p = argparse.ArgumentParser(prog="qproj", description="q-deformed rationals and reals, exactly.")
    p._negative_number_matcher = _NEGATIVE
    sub = p.add_subparsers(dest="cmd", required=True)

    def add(name, fn, help_):
        s = sub.add_parser(name, help=help_)
        s._negative_number_matcher = _NEGATIVE
        s.add_argument("--json", action="store_true", help="machine-readable output")
        s.set_defaults(fn=fn)
        return s

    s = add("qrat", cmd_qrat, "sharp or flat q-rational")
    s.add_argument("value", help="p/q, an integer, or inf")
    s.add_argument("--flavor", choices=qrat.FLAVORS, default="sharp")

    s = add("qact", cmd_qact, "act by a quantized word")
    s.add_argument("word", help='e.g. "R^2 S N"')
    s.add_argument("value")
    s.add_argument("--flavor", choices=qrat.FLAVORS, default="sharp")
    s.add_argument("--twisted", action="store_true", help="use the twisted action M_q I_q tau")

    s = add("qreal", cmd_qreal, "Laurent series of a real number from its continued fraction")
    s.add_argument("--cf", help='digits "a0;a1,a2,..." (trailing ... marks an irrational)')
    s.add_argument("--digits", help="digit file (default: $QPROJ_DIGITS or the shipped pi digits)")
    s.add_argument("--order", type=int, default=20)
    s.add_argument("--flavor", choices=qrat.FLAVORS, default="sharp")
    s.add_argument("--act", help="apply a quantized word to the series")

    s = add("qtrace", cmd_qtrace, "trace of a quantized word")
    s.add_argument("word")

    s = add("qposet", cmd_qposet, "admissible ideals of a circular fence poset")
    s.add_argument("shape", help="odd-length shape, e.g. 1,2,2")
    s.add_argument("--ideals", action="store_true")
    s.add_argument("--gf", action="store_true")

    s = add("qvieta", cmd_qvieta, "quantized Vieta relations")
    s.add_argument("--degree", type=int, choices=(4, 6), default=4)
    s.add_argument("--b", type=int, default=7)
    s.add_argument("--order", type=int, default=20)
    s.add_argument("--split", help="split case n with sign, e.g. 3- or 2+")

    s = add("verify", cmd_verify, "run a built-in property suite")
    s.add_argument("suite", choices=("all", "relations", "actions", "palindromes", "posets", "vieta", "series"))
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--digits", help="digit file for the series suite")
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)  # exits 2 on usage errors
    if getattr(args, "order", 1) is not None and getattr(args, "order", 1) < 1:
        parser.error("--order must be positive")
    try:
        return args.fn(args)
    except (ValueError, ArithmeticError, KeyError, AssertionError, RuntimeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())


__all__ = ["build_parser", "default_pi_digits", "main"]
