"""Brute-force reference implementations.

Everything here favours obviousness over speed and is capped in input size
(default 2000 symbols, override with ``SUFFIXIENT_ORACLE_CAP``).  The fast
online algorithms are tested against these functions.

Right-extensions are found by refining groups of occurrence start positions:
all starts of a repeated string ``x`` are bucketed by the symbol that follows
``x``.  Two or more buckets means ``x`` is right-maximal, and each bucket is
then the complete occurrence list of one right-extension ``x·a``.
"""
from __future__ import annotations

import itertools
import os
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, NamedTuple, Optional, Tuple

from .errors import OracleCapExceeded, PositionOutOfRange, SentinelInInput
from .text import Text, render_symbols, with_sentinel

DEFAULT_CAP = 2000


def oracle_cap() -> int:
    raw = os.environ.get("SUFFIXIENT_ORACLE_CAP")
    return int(raw) if raw else DEFAULT_CAP


def _check_cap(n, cap=None):
    cap = oracle_cap() if cap is None else cap
    if n > cap:
        raise OracleCapExceeded(f"input of length {n} exceeds oracle cap {cap}")


def extension_groups(seq):
    """Yield ``(len_x, {follower: starts})`` for every right-maximal ``x``.

    Start lists are ascending 0-based positions of ``x·follower``.
    """
    n = len(seq)
    stack = [(range(n), 0)]
    while stack:
        starts, l = stack.pop()
        buckets: Dict[int, list] = {}
        for i in starts:
            j = i + l
            if j < n:
                b = buckets.get(seq[j])
                if b is None:
                    buckets[seq[j]] = [i]
                else:
                    b.append(i)
        if len(buckets) >= 2:
            yield l, buckets
        for b in buckets.values():
            if len(b) >= 2:
                stack.append((b, l + 1))


@dataclass(frozen=True)
class ExtensionSet:
    right_extensions: frozenset
    supermaximal: frozenset
    # 1-based end positions of every occurrence of each supermaximal extension
    occurrences: Dict[tuple, Tuple[int, ...]] = field(compare=False, repr=False)

    @property
    def sre(self) -> int:
        return len(self.supermaximal)

    def sorted_supermaximal(self) -> List[tuple]:
        return sorted(self.supermaximal, key=lambda z: (len(z), z))


def right_extensions(w: Text, cap=None) -> ExtensionSet:
    _check_cap(len(w), cap)
    seq = tuple(w.symbols)
    occ = {}
    for l, buckets in extension_groups(seq):
        for starts in buckets.values():
            i = starts[0]
            z = seq[i:i + l + 1]
            occ[z] = tuple(s + l + 1 for s in starts)
    ext = frozenset(occ)
    inner = {z[1:] for z in ext if len(z) >= 2}
    sup = ext - inner
    return ExtensionSet(ext, frozenset(sup), {z: occ[z] for z in sup})


def sre(w: Text, cap=None) -> int:
    return right_extensions(w, cap).sre


def chi(w: Text, cap=None) -> int:
    if w.has_sentinel:
        raise SentinelInInput("chi expects a text without the sentinel")
    return sre(with_sentinel(w), cap)


class SuffixientSet(NamedTuple):
    positions: frozenset
    is_smallest: bool = True

    def sorted(self) -> List[int]:
        return sorted(self.positions)


def smallest_set(w: Text, cap=None) -> SuffixientSet:
    ext = right_extensions(w, cap)
    pos = frozenset(occ[0] for occ in ext.occurrences.values())
    # distinct supermaximal extensions never end at the same place
    assert len(pos) == ext.sre
    return SuffixientSet(pos, True)


def occurrence_ends(w: Text, z: Iterable[int]) -> Tuple[int, ...]:
    """All 1-based end positions of ``z`` in ``w`` (plain scan, any length)."""
    z = tuple(z)
    key = w.key
    pat = bytes(z) if isinstance(key, bytes) else z
    m = len(z)
    ends = []
    if isinstance(key, bytes):
        i = key.find(pat)
        while i >= 0:
            ends.append(i + m)
            i = key.find(pat, i + 1)
    else:
        for i in range(len(key) - m + 1):
            if key[i:i + m] == pat:
                ends.append(i + m)
    return tuple(ends)


class Enumeration(NamedTuple):
    sets: List[SuffixientSet]
    truncated: bool


def enumerate_smallest_sets(w: Text, limit: int = 1000, supermaximal=None, cap=None) -> Enumeration:
    """Every smallest suffixient set, in lexicographic order of sorted positions.

    ``supermaximal`` may be supplied (for instance from the online algorithm)
    to enumerate over texts longer than the oracle cap; occurrences are then
    located by a direct scan.
    """
    if limit < 1:
        raise ValueError("limit must be at least 1")
    if supermaximal is None:
        ext = right_extensions(w, cap)
        choices = list(ext.occurrences.values())
        sup = ext.supermaximal
    else:
        sup = [tuple(z) for z in supermaximal]
        choices = [occurrence_ends(w, z) for z in sup]
    # every combination has distinct positions, so sorting the tuples of each
    # product is enough; generating them all is fine at oracle sizes
    combos = sorted(tuple(sorted(c)) for c in itertools.product(*choices))
    truncated = len(combos) > limit
    out = []
    for c in combos[:limit]:
        s = frozenset(c)
        res = verify_suffixient(w, s, supermaximal=sup)
        assert res.ok and len(s) == len(sup), c
        out.append(SuffixientSet(s, True))
    return Enumeration(out, truncated)


class Verdict(NamedTuple):
    ok: bool
    witness: Optional[tuple]


def verify_suffixient(w: Text, positions, supermaximal=None, cap=None) -> Verdict:
    """Check that each right-extension ends at some chosen position.

    Covering the supermaximal extensions suffices: any other right-extension
    is a suffix of one of them.
    """
    n = len(w)
    positions = set(positions)
    for p in positions:
        if not 1 <= p <= n:
            raise PositionOutOfRange(f"position {p} outside [1..{n}]")
    if supermaximal is None:
        supermaximal = right_extensions(w, cap).supermaximal
    seq = w.symbols
    for z in sorted(supermaximal, key=lambda z: (len(z), z)):
        m = len(z)
        if not any(p >= m and seq[p - m:p] == z for p in positions):
            return Verdict(False, z)
    return Verdict(True, None)


@dataclass
class PsrTree:
    # kept trie node -> sorted list of kept children (compacted edges)
    nodes: Dict[tuple, List[tuple]]
    leaf_count: int
    unary_internal_count: int
    # unary nodes whose only child is itself a supermaximal extension
    unary_to_extension_count: int = 0

    @property
    def count(self) -> int:
        return self.leaf_count + self.unary_internal_count


def build_psr_tree(supermaximal: Iterable[tuple]) -> PsrTree:
    """Compacted trie over the supermaximal extensions.

    Nodes are kept for the root, for every supermaximal extension and for every
    branching point.  Unary internal nodes can only be extensions that are
    proper prefixes of exactly one branch.
    """
    sup = {tuple(z) for z in supermaximal}
    branches: Dict[tuple, set] = {}
    for z in sup:
        for i in range(len(z)):
            branches.setdefault(z[:i], set()).add(z[i])
    kept = {()} | sup | {p for p, b in branches.items() if len(b) >= 2}
    nodes: Dict[tuple, List[tuple]] = {p: [] for p in kept}
    for p in kept:
        if not p:
            continue
        q = p[:-1]
        while q not in kept:
            q = q[:-1]
        nodes[q].append(p)
    for ch in nodes.values():
        ch.sort()
    leaves = sum(1 for p in kept if p and not nodes[p])
    unary = sum(1 for p in kept if p and len(nodes[p]) == 1)
    unary_ext = sum(1 for p in kept if p and len(nodes[p]) == 1 and nodes[p][0] in sup)
    return PsrTree(nodes, leaves, unary, unary_ext)


def psr_tree(w: Text, cap=None) -> PsrTree:
    return build_psr_tree(right_extensions(w, cap).supermaximal)


def render(z: Iterable[int], encoding: str = "bytes") -> str:
    return render_symbols(z, encoding)


# Per-prefix and per-suffix traces.  Every right-extension of a prefix (or
# suffix) is a right-extension of the whole text, so it is enough to compute,
# for each right-extension of the whole text, the first prefix length at which
# it becomes one (it stays one afterwards), and the first prefix length at
# which it stops being supermaximal.

def sre_prefix_trace(w: Text, cap=None) -> List[int]:
    """``[sre(w[1..L]) for L in 1..n]``."""
    n = len(w)
    _check_cap(n, cap)
    seq = w.key
    born: Dict[object, int] = {}
    for l, buckets in extension_groups(seq):
        firsts = sorted((starts[0] + l + 1, starts[0]) for starts in buckets.values())
        second = firsts[1][0]
        for end, s in firsts:
            born[seq[s:s + l + 1]] = max(end, second)
    absorbed: Dict[object, int] = {}
    for z, t in born.items():
        if len(z) >= 2:
            y = z[1:]
            if absorbed.get(y, n + 1) > t:
                absorbed[y] = t
    delta = [0] * (n + 2)
    for t in born.values():
        delta[t] += 1
    for t in absorbed.values():
        delta[t] -= 1
    out, acc = [], 0
    for L in range(1, n + 1):
        acc += delta[L]
        out.append(acc)
    return out


def chi_suffix_trace(w: Text, cap=None) -> List[int]:
    """``[chi(w[n-i+1..n]) for i in 1..n]``, computed on ``w$``."""
    if w.has_sentinel:
        raise SentinelInInput("chi expects a text without the sentinel")
    n = len(w)
    _check_cap(n + 1, cap)
    seq = with_sentinel(w).key
    # alive[z]: smallest 0-based suffix start i at which z is still an extension
    alive: Dict[object, int] = {}
    for l, buckets in extension_groups(seq):
        lasts = sorted((starts[-1], starts[-1]) for starts in buckets.values())
        second = lasts[-2][0]
        for last, _ in lasts:
            alive[seq[last:last + l + 1]] = min(last, second)
    absorbed: Dict[object, int] = {}
    for z, t in alive.items():
        if len(z) >= 2:
            y = z[1:]
            if absorbed.get(y, -1) < t:
                absorbed[y] = t
    delta = [0] * (n + 2)
    for t in alive.values():
        delta[t] += 1
    for t in absorbed.values():
        delta[t] -= 1
    # suffix starting at 0-based i has count sum_{t >= i} delta[t]
    res = [0] * (n + 1)
    acc = 0
    for i in range(n, -1, -1):
        acc += delta[i]
        res[i] = acc
    # suffix of w with length k starts at 0-based n-k
    return [res[n - k] for k in range(1, n + 1)]
