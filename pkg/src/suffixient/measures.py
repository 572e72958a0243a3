"""BWT run counts, substring complexity and the combined measure report."""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import List, Sequence

from . import oracle, ukkonen
from .errors import MissingSentinel, SentinelInInput
from .text import Text, with_sentinel


def rotation_order(seq: Sequence[int]) -> List[int]:
    """Start indices of the rotations of ``seq`` in sorted order.

    Prefix doubling over cyclic ranks; identical rotations are ordered by start
    index.  For a text ending in a unique smallest sentinel this is the suffix
    array.
    """
    n = len(seq)
    if n == 0:
        return []
    alphabet = sorted(set(seq))
    code = {a: j for j, a in enumerate(alphabet)}
    rank = [code[a] for a in seq]
    order = sorted(range(n), key=rank.__getitem__)
    k = 1
    while k < n:
        key = [rank[i] * n + rank[(i + k) % n] for i in range(n)]
        order.sort(key=key.__getitem__)
        new = [0] * n
        r = 0
        prev = key[order[0]]
        for i in order:
            if key[i] != prev:
                r += 1
                prev = key[i]
            new[i] = r
        rank = new
        if r == n - 1:
            break
        k *= 2
    return sorted(range(n), key=lambda i: (rank[i], i))


def suffix_array(w: Text) -> List[int]:
    if not w.has_sentinel:
        raise MissingSentinel("the suffix array is built on a sentinel-terminated text")
    return rotation_order(w.symbols)


def lcp_array(seq: Sequence[int], sa: Sequence[int]) -> List[int]:
    """``lcp[i]`` = longest common prefix of suffixes ``sa[i-1]`` and ``sa[i]`` (Kasai)."""
    n = len(seq)
    rank = [0] * n
    for i, s in enumerate(sa):
        rank[s] = i
    lcp = [0] * n
    h = 0
    for i in range(n):
        r = rank[i]
        if r > 0:
            j = sa[r - 1]
            while i + h < n and j + h < n and seq[i + h] == seq[j + h]:
                h += 1
            lcp[r] = h
            if h:
                h -= 1
        else:
            h = 0
    return lcp


@dataclass(frozen=True)
class BwtResult:
    last_column: tuple
    run_count: int
    suffix_order: tuple


def run_count(column: Sequence[int]) -> int:
    if isinstance(column, BwtResult):
        column = column.last_column
    if not column:
        return 0
    return 1 + sum(1 for x, y in zip(column, column[1:]) if x != y)


def bwt(w: Text, circular: bool = False) -> BwtResult:
    if not circular and not w.has_sentinel:
        raise MissingSentinel("non-circular BWT needs a sentinel-terminated text")
    seq = w.symbols
    order = rotation_order(seq)
    col = tuple(seq[i - 1] for i in order)
    return BwtResult(col, run_count(col), tuple(order))


def suffixient_from_bwt_runs(w: Text) -> List[int]:
    """Two positions per BWT run boundary, read off the sorted suffixes."""
    if not w.has_sentinel:
        raise MissingSentinel("expects a sentinel-terminated text")
    seq = w.symbols
    sa = rotation_order(seq)
    lcp = lcp_array(seq, sa)
    out = set()
    for i in range(len(sa) - 1):
        if seq[sa[i] - 1] != seq[sa[i + 1] - 1]:
            h = lcp[i + 1]
            out.add(sa[i] + h + 1)
            out.add(sa[i + 1] + h + 1)
    return sorted(out)


@dataclass(frozen=True)
class ComplexityProfile:
    per_length: tuple
    delta: Fraction

    @property
    def delta_float(self) -> float:
        return float(self.delta)


def _delta(profile):
    best = Fraction(0)
    for k in range(1, len(profile)):
        f = Fraction(profile[k], k)
        if f > best:
            best = f
    return best


def complexity_profile(w: Text, method: str = "sa") -> ComplexityProfile:
    if w.has_sentinel:
        w = Text(w.symbols[:-1], False, w.encoding)
    n = len(w)
    if method == "hash":
        oracle._check_cap(n)
        seq = w.key
        prof = [1] + [len({seq[i:i + k] for i in range(n - k + 1)}) for k in range(1, n + 1)]
    elif method == "sa":
        ws = with_sentinel(w)
        sa = rotation_order(ws.symbols)
        lcp = lcp_array(ws.symbols, sa)
        diff = [0] * (n + 2)
        # each suffix of w adds the lengths its sorted predecessor does not share
        for r in range(1, n + 1):
            length = n - sa[r]
            lo = lcp[r] + 1
            if lo <= length:
                diff[lo] += 1
                diff[length + 1] -= 1
        prof = [1]
        acc = 0
        for k in range(1, n + 1):
            acc += diff[k]
            prof.append(acc)
    else:
        raise ValueError(f"unknown method {method!r}")
    return ComplexityProfile(tuple(prof), _delta(prof))


FIELDS = ("n", "sigma", "sre", "chi", "r", "rc", "delta_num", "delta_den")


@dataclass(frozen=True)
class MeasureReport:
    n: int
    sigma: int
    sre: int
    chi: int
    r: int
    rc: int
    delta_num: int
    delta_den: int

    @property
    def delta(self) -> Fraction:
        return Fraction(self.delta_num, self.delta_den)

    def tsv(self, header: bool = True) -> str:
        row = "\t".join(str(getattr(self, f)) for f in FIELDS)
        return ("\t".join(FIELDS) + "\n" + row) if header else row

    def json(self) -> str:
        return json.dumps(asdict(self))


def sre_and_chi(w: Text):
    """sre(w) and chi(w), by the oracle for small inputs and streaming beyond."""
    if len(w) + 1 <= oracle.oracle_cap():
        return oracle.sre(w), oracle.chi(w)
    tree = ukkonen.UkkonenTree()
    tree.feed(w.symbols)
    s = tree.sre
    tree.extend(0)
    return s, tree.sre


def measure_report(w: Text) -> MeasureReport:
    if w.has_sentinel:
        raise SentinelInInput("measures are reported for texts without the sentinel")
    s, c = sre_and_chi(w)
    r = bwt(with_sentinel(w)).run_count
    rc = bwt(w, circular=True).run_count
    d = complexity_profile(w).delta
    return MeasureReport(len(w), w.sigma, s, c, r, rc, d.numerator, d.denominator)
