"""Command-line front end.  Data goes to stdout, diagnostics to stderr.

Exit codes: 0 success, 1 domain error or failed check, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import experiments, families, measures, oracle, suite, ukkonen, weiner
from .errors import SuffixientError
from .text import Text, parse, render_symbols, serialize, with_sentinel


def read_input(path: str, mode: str, keep_newline: bool = False) -> Text:
    raw = sys.stdin.buffer.read() if path == "-" else Path(path).read_bytes()
    if mode == "bytes" and not keep_newline:
        # files written by editors and echo end in one newline
        if raw.endswith(b"\r\n"):
            raw = raw[:-2]
        elif raw.endswith(b"\n"):
            raw = raw[:-1]
    return parse(raw, mode)


def chi_of(w: Text) -> int:
    if len(w) + 1 <= oracle.oracle_cap():
        return oracle.chi(w)
    return ukkonen.chi_streaming(w)


def sre_of(w: Text) -> int:
    if len(w) <= oracle.oracle_cap():
        return oracle.sre(w)
    return ukkonen.build(w).sre


def _target(w: Text, no_sentinel: bool) -> Text:
    return w if no_sentinel else with_sentinel(w)


def _positions(ps) -> str:
    return ",".join(str(p) for p in sorted(ps))


def _emit_table(rows, fields, fmt):
    if fmt == "json":
        print(json.dumps([dict(zip(fields, r)) for r in rows]))
    else:
        print("\t".join(fields))
        for r in rows:
            print("\t".join(str(x) for x in r))


def cmd_chi(args):
    print(chi_of(read_input(args.input, args.input_format, args.keep_newline)))


def cmd_sre(args):
    print(sre_of(read_input(args.input, args.input_format, args.keep_newline)))


def cmd_set(args):
    w = _target(read_input(args.input, args.input_format, args.keep_newline), args.no_sentinel)
    small = len(w) <= oracle.oracle_cap()
    if args.all:
        sup = None if small else ukkonen.build(w).supermaximal_extensions()
        res = oracle.enumerate_smallest_sets(w, args.limit, supermaximal=sup)
        for s in res.sets:
            print(_positions(s.positions))
        if res.truncated:
            print(f"output truncated at {args.limit} sets", file=sys.stderr)
    elif small:
        print(_positions(oracle.smallest_set(w).positions))
    else:
        print(_positions(ukkonen.build(w).positions()))


def cmd_verify(args):
    w = _target(read_input(args.input, args.input_format, args.keep_newline), args.no_sentinel)
    try:
        ps = [int(x) for x in args.set.split(",") if x.strip()]
    except ValueError:
        raise SystemExit(_usage_error(f"--set expects comma-separated integers, got {args.set!r}"))
    sup = None if len(w) <= oracle.oracle_cap() else ukkonen.build(w).supermaximal_extensions()
    verdict = oracle.verify_suffixient(w, ps, supermaximal=sup)
    if verdict.ok:
        print("suffixient")
        return 0
    print("not suffixient", file=sys.stdout)
    print(f"uncovered right-extension: {oracle.render(verdict.witness, w.encoding)}", file=sys.stderr)
    return 1


def cmd_measures(args):
    rep = measures.measure_report(read_input(args.input, args.input_format, args.keep_newline))
    print(rep.json() if args.format == "json" else rep.tsv())


def cmd_gen(args):
    t = families.generate(args.family, args.param, args.variant, args.seed)
    fmt = args.format
    if fmt == "auto":
        fmt = "tokens" if args.family == "reversal" else "bytes"
    data = serialize(t, fmt)
    if args.output:
        Path(args.output).write_bytes(data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()


def cmd_sensitivity(args):
    w = read_input(args.input, args.input_format, args.keep_newline)
    rep = experiments.sensitivity(w, args.op, args.measure, args.mode, args.samples, args.seed, args.backend)
    if args.rows:
        sys.stdout.write(rep.tsv())
        return
    s = rep.summary()
    for key in ("max_witness", "min_witness"):
        o = s[key]
        if o is None:
            s[key] = ""
            continue
        pos = "" if o["position"] is None else o["position"]
        sym = "" if o["symbol"] is None else render_symbols([o["symbol"]], w.encoding)
        s[key] = f"{pos}:{sym}"
    fields = list(s)
    if args.format == "json":
        print(json.dumps(s))
    else:
        print("\t".join(fields))
        print("\t".join("" if s[f] is None else str(s[f]) for f in fields))


def cmd_online(args):
    w = read_input(args.input, args.input_format, args.keep_newline)
    if args.mode == "ukkonen":
        tree = ukkonen.UkkonenTree()
        rows = []
        symbols = list(w.symbols) + [0]
        for i, c in enumerate(symbols, 1):
            tree.extend(c)
            if args.trace:
                row = [i, tree.sre]
                if args.positions:
                    row.append(_positions(tree.positions()))
                rows.append(row)
        if not args.trace:
            print(tree.sre)
            return
        fields = ["prefix_length", "sre"] + (["positions"] if args.positions else [])
    else:
        tree = weiner.WeinerTree()
        rows = []
        for i, c in enumerate(reversed(w.symbols), 1):
            tree.prepend(c)
            if args.trace:
                row = [i, tree.sre]
                if args.positions:
                    row.append(_positions(tree.positions()))
                rows.append(row)
        if not args.trace:
            print(tree.sre)
            return
        fields = ["suffix_length", "chi"] + (["positions"] if args.positions else [])
    _emit_table(rows, fields, args.format)


def oracle_check(w: Text):
    """Fast algorithms against the oracle on one text; yields (name, ok)."""
    ws = with_sentinel(w)
    want_prefix = oracle.sre_prefix_trace(ws)
    got_prefix = ukkonen.sre_trace(ws.symbols)
    yield "ukkonen prefix trace", got_prefix == want_prefix
    want_suffix = oracle.chi_suffix_trace(w)
    got_suffix = weiner.chi_per_suffix(w)
    yield "weiner suffix trace", got_suffix == want_suffix
    chi = oracle.chi(w)
    yield "ukkonen chi", ukkonen.chi_streaming(w) == chi
    wt = weiner.build(w)
    yield "weiner chi", wt.sre == chi
    yield "ukkonen set", oracle.verify_suffixient(ws, ukkonen.build(ws).positions()).ok
    yield "weiner set", oracle.verify_suffixient(ws, wt.positions()).ok
    bwt_set = measures.suffixient_from_bwt_runs(ws)
    r = measures.bwt(ws).run_count
    yield "bwt-run set", oracle.verify_suffixient(ws, bwt_set).ok and len(bwt_set) <= 2 * r


def cmd_oracle_check(args):
    w = read_input(args.input, args.input_format, args.keep_newline)
    ok = True
    for name, passed in oracle_check(w):
        print(f"{name}\t{'ok' if passed else 'MISMATCH'}")
        ok &= passed
    return 0 if ok else 1


def cmd_suite(args):
    res = suite.run_suite(args.config, args.out)
    for c in res.checks:
        status = "PASS" if c.passed else "FAIL"
        print(f"{status}\tline {c.line}\t{c.name}" + (f"\t{c.detail}" if c.detail else ""))
    return 0 if res.passed else 1


def _usage_error(msg):
    print(f"usage error: {msg}", file=sys.stderr)
    return 2


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="suffixient", description="Suffixient sets and the chi repetitiveness measure.")
    sub = p.add_subparsers(dest="command", required=True)

    def with_input(sp):
        sp.add_argument("input", nargs="?", default="-", help="input file, or - for stdin")
        sp.add_argument("--input-format", choices=("bytes", "tokens"), default="bytes")
        sp.add_argument("--keep-newline", action="store_true",
                        help="do not strip one trailing newline in bytes mode")
        return sp

    with_input(sub.add_parser("chi", help="print chi of the input")).set_defaults(func=cmd_chi)
    with_input(sub.add_parser("sre", help="print sre of the input as given")).set_defaults(func=cmd_sre)

    sp = with_input(sub.add_parser("set", help="print a smallest suffixient set of input$"))
    sp.add_argument("--all", action="store_true", help="enumerate every smallest set")
    sp.add_argument("--limit", type=int, default=1000)
    sp.add_argument("--no-sentinel", action="store_true", help="work on the input without appending $")
    sp.set_defaults(func=cmd_set)

    sp = with_input(sub.add_parser("verify", help="check that positions form a suffixient set of input$"))
    sp.add_argument("--set", required=True, help="comma-separated 1-based positions")
    sp.add_argument("--no-sentinel", action="store_true")
    sp.set_defaults(func=cmd_verify)

    sp = with_input(sub.add_parser("measures", help="print n, sigma, sre, chi, r, rc, delta"))
    sp.add_argument("--format", choices=("tsv", "json"), default="tsv")
    sp.set_defaults(func=cmd_measures)

    sp = sub.add_parser("gen", help="write a member of a string family")
    sp.add_argument("family", choices=families.FAMILIES)
    sp.add_argument("param", type=int)
    sp.add_argument("--variant", choices=families.EDIT_VARIANTS)
    sp.add_argument("--seed", type=int)
    sp.add_argument("--format", choices=("auto", "bytes", "tokens"), default="auto")
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_gen)

    sp = with_input(sub.add_parser("sensitivity", help="sweep one string operation"))
    sp.add_argument("--op", required=True, choices=experiments.SWEEP_KINDS)
    sp.add_argument("--measure", choices=experiments.MEASURES, default="sre")
    sp.add_argument("--mode", choices=("exhaustive", "sampled"), default="exhaustive")
    sp.add_argument("--samples", type=int)
    sp.add_argument("--seed", type=int)
    sp.add_argument("--backend", choices=("auto", "oracle", "ukkonen"), default="auto")
    sp.add_argument("--rows", action="store_true", help="print every variant instead of the summary")
    sp.add_argument("--format", choices=("tsv", "json"), default="tsv")
    sp.set_defaults(func=cmd_sensitivity)

    sp = with_input(sub.add_parser("online", help="run an online construction"))
    sp.add_argument("--mode", choices=("ukkonen", "weiner"), default="ukkonen")
    sp.add_argument("--trace", action="store_true", help="one row per processed symbol")
    sp.add_argument("--positions", action="store_true", help="add the current set to each trace row")
    sp.add_argument("--format", choices=("tsv", "json"), default="tsv")
    sp.set_defaults(func=cmd_online)

    with_input(sub.add_parser("oracle-check", help="compare fast algorithms with the oracle")
               ).set_defaults(func=cmd_oracle_check)

    sp = sub.add_parser("suite", help="run an experiment config")
    sp.add_argument("config")
    sp.add_argument("--out", help="directory for TSV/JSON artifacts")
    sp.set_defaults(func=cmd_suite)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "set" and args.limit < 1:
        parser.error("--limit must be at least 1")
    if args.command == "sensitivity" and args.mode == "sampled" and (args.samples is None or args.seed is None):
        parser.error("sampled mode needs --samples and --seed")
    if args.command == "online" and args.positions and not args.trace:
        parser.error("--positions requires --trace")
    try:
        code = args.func(args)
    except SuffixientError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    return code or 0


if __name__ == "__main__":
    sys.exit(main())
