"""Declarative experiment runner.

A config is plain text, one directive per line, ``#`` starts a comment::

    gen name=w4 family=wm param=4
    text name=ex value=abaab
    load name=f path=data.txt format=bytes
    measure input=w4
    expect input=w4 field=sre eq=20
    sweep input=ex op=append measure=chi
    expect sweep=ex.append.chi field=min_additive eq=-1
    reversal inputs=w4,ex

``measure`` rows are checked against the standard inequalities between the
measures; ``reversal`` rows against the factor-two reversal bound; ``expect``
adds an explicit comparison.  Outputs are TSV tables plus ``summary.json``.
"""
from __future__ import annotations

import json
import operator
import shlex
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Dict, List, Optional

from . import experiments, families, measures
from .errors import ConfigError, SuffixientError
from .text import Text, from_str, parse

COMPARISONS = {
    "eq": operator.eq, "le": operator.le, "ge": operator.ge,
    "lt": operator.lt, "gt": operator.gt, "ne": operator.ne,
}

DIRECTIVES = {
    "gen": ({"name", "family", "param"}, {"variant", "seed"}),
    "text": ({"name", "value"}, set()),
    "load": ({"name", "path"}, {"format"}),
    "measure": ({"input"}, set()),
    "sweep": ({"input", "op", "measure"}, {"mode", "samples", "seed", "backend", "name"}),
    "expect": ({"field"}, {"input", "sweep"} | set(COMPARISONS)),
    "reversal": ({"inputs"}, set()),
}


@dataclass
class Check:
    line: int
    name: str
    passed: bool
    detail: str = ""

    def as_dict(self):
        return {"line": self.line, "name": self.name, "passed": self.passed, "detail": self.detail}


@dataclass
class SuiteResult:
    checks: List[Check] = field(default_factory=list)
    artifacts: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


def parse_config(source: str):
    """Return ``[(line_number, directive, {key: value})]``; raises ConfigError."""
    out = []
    for lineno, raw in enumerate(source.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            words = shlex.split(line)
        except ValueError as exc:
            raise ConfigError(str(exc), lineno) from None
        head, rest = words[0], words[1:]
        if head not in DIRECTIVES:
            raise ConfigError(f"unknown directive {head!r}", lineno)
        args = {}
        for word in rest:
            if "=" not in word:
                raise ConfigError(f"expected key=value, got {word!r}", lineno)
            k, v = word.split("=", 1)
            if k in args:
                raise ConfigError(f"duplicate key {k!r}", lineno)
            args[k] = v
        required, optional = DIRECTIVES[head]
        missing = required - args.keys()
        if missing:
            raise ConfigError(f"{head} is missing {', '.join(sorted(missing))}", lineno)
        unknown = args.keys() - required - optional
        if unknown:
            raise ConfigError(f"{head} does not accept {', '.join(sorted(unknown))}", lineno)
        out.append((lineno, head, args))
    return out


def _int(args, key, lineno, default=None):
    if key not in args:
        if default is None:
            raise ConfigError(f"missing {key}", lineno)
        return default
    try:
        return int(args[key])
    except ValueError:
        raise ConfigError(f"{key} must be an integer, got {args[key]!r}", lineno) from None


def _number(value: str, lineno: int):
    try:
        return Fraction(value)
    except ValueError:
        raise ConfigError(f"not a number: {value!r}", lineno) from None


def measure_bounds(rep: measures.MeasureReport) -> Dict[str, bool]:
    bounds = {
        "chi<=2r": rep.chi <= 2 * rep.r,
        "chi<=2rc+2": rep.chi <= 2 * rep.rc + 2,
        "delta<=chi": rep.delta <= rep.chi,
    }
    if rep.n:
        bounds["sre+1<=chi<=sre+2"] = rep.sre + 1 <= rep.chi <= rep.sre + 2
    return bounds


def run_suite(config_path, out_dir=None, source: Optional[str] = None) -> SuiteResult:
    config_path = Path(config_path) if config_path is not None else None
    if source is None:
        source = config_path.read_text()
    directives = parse_config(source)
    base_dir = config_path.parent if config_path is not None else Path(".")
    out = Path(out_dir) if out_dir is not None else None
    if out is not None:
        out.mkdir(parents=True, exist_ok=True)

    texts: Dict[str, Text] = {}
    reports: Dict[str, measures.MeasureReport] = {}
    sweeps: Dict[str, experiments.SensitivityReport] = {}
    measure_rows: List[str] = []
    reversal_rows: List[str] = []
    result = SuiteResult()

    def need_text(name, lineno):
        if name not in texts:
            raise ConfigError(f"unknown input {name!r}", lineno)
        return texts[name]

    def write(name, content):
        if out is not None:
            (out / name).write_text(content)
            if name not in result.artifacts:
                result.artifacts.append(name)

    for lineno, head, args in directives:
        try:
            if head == "gen":
                fam = args["family"]
                if fam not in families.FAMILIES:
                    raise ConfigError(f"unknown family {fam!r}", lineno)
                seed = _int(args, "seed", lineno) if "seed" in args else None
                try:
                    texts[args["name"]] = families.generate(
                        fam, _int(args, "param", lineno), args.get("variant"), seed)
                except ValueError as exc:
                    raise ConfigError(str(exc), lineno) from None
            elif head == "text":
                texts[args["name"]] = from_str(args["value"])
            elif head == "load":
                mode = args.get("format", "bytes")
                if mode not in ("bytes", "tokens"):
                    raise ConfigError(f"unknown format {mode!r}", lineno)
                path = base_dir / args["path"]
                try:
                    raw = path.read_bytes()
                except OSError as exc:
                    raise ConfigError(f"cannot read {path}: {exc.strerror}", lineno) from None
                texts[args["name"]] = parse(raw, mode)
            elif head == "measure":
                name = args["input"]
                rep = measures.measure_report(need_text(name, lineno))
                reports[name] = rep
                measure_rows.append(name + "\t" + rep.tsv(header=False))
                for label, ok in measure_bounds(rep).items():
                    result.checks.append(Check(lineno, f"{name}: {label}", ok))
            elif head == "sweep":
                name = args["input"]
                w = need_text(name, lineno)
                if args["op"] not in experiments.SWEEP_KINDS:
                    raise ConfigError(f"unknown operation {args['op']!r}", lineno)
                if args["measure"] not in experiments.MEASURES:
                    raise ConfigError(f"unknown measure {args['measure']!r}", lineno)
                mode = args.get("mode", "exhaustive")
                if mode not in ("exhaustive", "sampled"):
                    raise ConfigError(f"unknown mode {mode!r}", lineno)
                samples = seed = None
                if mode == "sampled":
                    samples = _int(args, "samples", lineno)
                    seed = _int(args, "seed", lineno)
                backend = args.get("backend", "auto")
                if backend not in ("auto", "oracle", "ukkonen"):
                    raise ConfigError(f"unknown backend {backend!r}", lineno)
                rep = experiments.sensitivity(w, args["op"], args["measure"], mode,
                                              samples, seed, backend)
                sid = args.get("name", f"{name}.{args['op']}.{args['measure']}")
                sweeps[sid] = rep
                write(f"sweep_{sid}.tsv", rep.tsv())
                if args["op"] in ("append", "prepend") and args["measure"] == "sre":
                    ok = rep.min_additive is None or (0 <= rep.min_additive and rep.max_additive <= 2)
                    result.checks.append(Check(lineno, f"{sid}: 0<=diff<=2", ok,
                                               f"min {rep.min_additive} max {rep.max_additive}"))
            elif head == "expect":
                if ("input" in args) == ("sweep" in args):
                    raise ConfigError("expect needs exactly one of input= or sweep=", lineno)
                cmps = [k for k in args if k in COMPARISONS]
                if len(cmps) != 1:
                    raise ConfigError("expect needs exactly one comparison (eq, le, ge, lt, gt, ne)", lineno)
                cmp = cmps[0]
                want = _number(args[cmp], lineno)
                fld = args["field"]
                if "input" in args:
                    name = args["input"]
                    if name not in reports:
                        need_text(name, lineno)
                        reports[name] = measures.measure_report(texts[name])
                    rep = reports[name]
                    if fld == "delta":
                        got = rep.delta
                    elif fld in measures.FIELDS:
                        got = getattr(rep, fld)
                    else:
                        raise ConfigError(f"unknown field {fld!r}", lineno)
                    label = name
                else:
                    label = args["sweep"]
                    if label not in sweeps:
                        raise ConfigError(f"unknown sweep {label!r}", lineno)
                    summary = sweeps[label].summary()
                    if fld not in summary or fld in ("max_witness", "min_witness", "mode", "operation", "measure"):
                        raise ConfigError(f"unknown field {fld!r}", lineno)
                    got = summary[fld]
                    if isinstance(got, str):
                        got = None if got == "undef" else Fraction(got)
                ok = got is not None and COMPARISONS[cmp](got, want)
                result.checks.append(Check(lineno, f"{label}: {fld} {cmp} {args[cmp]}", ok, f"got {got}"))
            elif head == "reversal":
                names = [x for x in args["inputs"].split(",") if x]
                ws = [need_text(x, lineno) for x in names]
                for name, row in zip(names, experiments.reversal_ratio_sweep(ws)):
                    ratio = "undef" if row.ratio is None else str(row.ratio)
                    reversal_rows.append(f"{name}\t{row.sre}\t{row.sre_reversed}\t{ratio}")
                    result.checks.append(Check(lineno, f"{name}: 1/2<=reversal ratio<=2",
                                               row.within_bounds, ratio))
        except SuffixientError as exc:
            if isinstance(exc, ConfigError):
                raise
            raise ConfigError(f"{type(exc).__name__}: {exc}", lineno) from None

    if measure_rows:
        write("measures.tsv", "name\t" + "\t".join(measures.FIELDS) + "\n" + "\n".join(measure_rows) + "\n")
    if reversal_rows:
        write("reversal.tsv", "name\tsre\tsre_reversed\tratio\n" + "\n".join(reversal_rows) + "\n")
    summary = {
        "passed": result.passed,
        "checks": [c.as_dict() for c in result.checks],
        "artifacts": sorted(result.artifacts),
    }
    write("summary.json", json.dumps(summary, indent=2, sort_keys=True) + "\n")
    return result
