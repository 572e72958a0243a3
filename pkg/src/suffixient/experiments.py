"""Sensitivity sweeps: apply one string operation in every (or sampled) way and
aggregate how much ``sre`` or ``chi`` moves."""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, List, Optional, Sequence

from . import oracle, ukkonen
from .text import StringOp, Text, apply, fresh_symbol

MEASURES = ("sre", "chi")
SWEEP_KINDS = ("append", "prepend", "insert", "delete", "substitute", "rotate", "reverse")


def measure_function(measure: str, backend: str = "auto") -> Callable[[Text], int]:
    if measure not in MEASURES:
        raise ValueError(f"unknown measure {measure!r}")
    if backend not in ("auto", "oracle", "ukkonen"):
        raise ValueError(f"unknown backend {backend!r}")

    def fast(t: Text) -> int:
        tree = ukkonen.UkkonenTree().feed(t.symbols)
        if measure == "chi":
            tree.extend(0)
        return tree.sre

    def slow(t: Text) -> int:
        return oracle.sre(t) if measure == "sre" else oracle.chi(t)

    if backend == "oracle":
        return slow
    if backend == "ukkonen":
        return fast

    def auto(t: Text) -> int:
        return slow(t) if len(t) + 1 <= oracle.oracle_cap() else fast(t)

    return auto


def variant_alphabet(w: Text) -> List[int]:
    """Symbols present in ``w`` plus one fresh symbol."""
    return sorted(set(w.symbols)) + [fresh_symbol(w)]


def variants(w: Text, kind: str) -> List[StringOp]:
    """Every valid operation of one kind, ordered by position then symbol."""
    n = len(w)
    sigma = variant_alphabet(w)
    if kind in ("append", "prepend"):
        return [StringOp(kind, None, c) for c in sigma]
    if kind == "insert":
        return [StringOp(kind, i, c) for i in range(1, n + 2) for c in sigma]
    if kind == "delete":
        return [StringOp(kind, i) for i in range(1, n + 1)]
    if kind == "substitute":
        # replacing a symbol by itself is not an edit
        return [StringOp(kind, i, c) for i in range(1, n + 1) for c in sigma if c != w[i - 1]]
    if kind == "rotate":
        return [StringOp(kind, i) for i in range(1, n + 1)]
    if kind == "reverse":
        return [StringOp(kind)]
    raise ValueError(f"unknown operation {kind!r}")


@dataclass
class SensitivityReport:
    operation: str
    measure: str
    n: int
    base: int
    max_additive: Optional[int]
    max_witness: Optional[StringOp]
    min_additive: Optional[int]
    min_witness: Optional[StringOp]
    max_ratio: Optional[Fraction]
    ratio_witness: Optional[StringOp]
    explored: int
    mode: str
    rows: List[tuple] = field(default_factory=list, repr=False)

    def ratio_text(self) -> str:
        return "undef" if self.max_ratio is None else str(self.max_ratio)

    def summary(self) -> dict:
        def op(o):
            return None if o is None else {"position": o.position, "symbol": o.symbol}
        return {
            "operation": self.operation,
            "measure": self.measure,
            "n": self.n,
            "base": self.base,
            "max_additive": self.max_additive,
            "max_witness": op(self.max_witness),
            "min_additive": self.min_additive,
            "min_witness": op(self.min_witness),
            "max_ratio": self.ratio_text(),
            "explored": self.explored,
            "mode": self.mode,
        }

    def tsv(self) -> str:
        lines = ["operation\tposition\tsymbol\tvalue\tdiff"]
        for o, v in self.rows:
            pos = "" if o.position is None else o.position
            sym = "" if o.symbol is None else o.symbol
            lines.append(f"{o.kind}\t{pos}\t{sym}\t{v}\t{v - self.base}")
        return "\n".join(lines) + "\n"


def sensitivity(w: Text, kind: str, measure: str = "sre", mode: str = "exhaustive",
                samples: Optional[int] = None, seed: Optional[int] = None,
                backend: str = "auto") -> SensitivityReport:
    f = measure_function(measure, backend)
    ops = variants(w, kind)
    if mode == "exhaustive":
        chosen = ops
        mode_text = "exhaustive"
    elif mode == "sampled":
        if samples is None or seed is None:
            raise ValueError("sampled mode needs both a sample count and a seed")
        rng = random.Random(seed)
        idx = sorted(rng.sample(range(len(ops)), min(samples, len(ops))))
        chosen = [ops[i] for i in idx]
        mode_text = f"sampled({samples},{seed})"
    else:
        raise ValueError(f"unknown mode {mode!r}")

    base = f(w)
    hi = lo = hi_op = lo_op = None
    ratio = ratio_op = None
    rows = []
    # ops are in (position, symbol) order, so strict comparisons keep the
    # smallest witness on ties
    for o in chosen:
        v = f(apply(w, o))
        rows.append((o, v))
        d = v - base
        if hi is None or d > hi:
            hi, hi_op = d, o
        if lo is None or d < lo:
            lo, lo_op = d, o
        if base:
            q = Fraction(v, base)
            if ratio is None or q > ratio:
                ratio, ratio_op = q, o
    return SensitivityReport(kind, measure, len(w), base, hi, hi_op, lo, lo_op,
                             ratio, ratio_op, len(chosen), mode_text, rows)


@dataclass
class ReversalRow:
    sre: int
    sre_reversed: int

    @property
    def ratio(self) -> Optional[Fraction]:
        return Fraction(self.sre_reversed, self.sre) if self.sre else None

    @property
    def within_bounds(self) -> bool:
        r = self.ratio
        return r is None or Fraction(1, 2) <= r <= 2


def reversal_ratio_sweep(inputs: Sequence[Text], backend: str = "auto") -> List[ReversalRow]:
    f = measure_function("sre", backend)
    return [ReversalRow(f(w), f(apply(w, StringOp("reverse")))) for w in inputs]
