"""Left-to-right online suffix tree that keeps a smallest suffixient set.

The tree is Ukkonen's construction with a bottom node above the root.  Each
supermaximal extension ``x·a`` of the current prefix is recorded as a mark on
the explicit child of the locus of ``x`` by ``a``.  The start index of that
child's edge label is the end of one occurrence of ``x·a``, so the marked
nodes double as a suffixient set.

Nodes live in flat integer arrays to keep memory near 50 bytes per symbol.
"""
from __future__ import annotations

from array import array
from typing import Iterable, List

from .errors import SentinelInInput
from .text import SENTINEL, Text

INF = 2 ** 31 - 1
NIL = -1
BOTTOM = 0
ROOT = 1


class UkkonenTree:
    def __init__(self):
        # text is 1-based; index 0 is a dummy
        self.text = array("i", [-1])
        self.start = array("i", [0, 0])
        self.end = array("i", [-1, 0])
        self.link = array("i", [NIL, BOTTOM])
        self.child = array("i", [NIL, NIL])
        self.sib = array("i", [NIL, NIL])
        self.slot = array("i", [NIL, NIL])
        self.members = array("i")
        self.s = ROOT
        self.k = 1
        self.n = 0
        self.terminated = False

    # -- small helpers -------------------------------------------------

    def _new_node(self, start, end):
        self.start.append(start)
        self.end.append(end)
        self.link.append(NIL)
        self.child.append(NIL)
        self.sib.append(NIL)
        self.slot.append(NIL)
        return len(self.start) - 1

    def _find(self, s, a):
        text, start, sib = self.text, self.start, self.sib
        y = self.child[s]
        while y != NIL and text[start[y]] != a:
            y = sib[y]
        return y

    def _mark(self, y):
        if self.slot[y] == NIL:
            self.slot[y] = len(self.members)
            self.members.append(y)

    def _unmark(self, y):
        if y == NIL:
            return
        slot, members = self.slot, self.members
        j = slot[y]
        if j == NIL:
            return
        last = members.pop()
        if last != y:
            members[j] = last
            slot[last] = j
        slot[y] = NIL

    # -- construction --------------------------------------------------

    def extend(self, c: int):
        if self.terminated:
            raise SentinelInInput("no symbol may follow the sentinel")
        if c < 0:
            raise ValueError("symbols must be non-negative")
        if c == SENTINEL:
            self.terminated = True
        text, start, end, link, child, sib = (
            self.text, self.start, self.end, self.link, self.child, self.sib)
        text.append(c)
        self.n = i = self.n + 1
        s, k = self.s, self.k
        p = i - 1
        oldr = ROOT
        first = True
        case3 = False
        found2 = False
        a = NIL
        while True:
            # test-and-split at (s, (k, p)) against c
            created = False
            if k <= p:
                tk = text[k]
                y = child[s]
                while text[start[y]] != tk:
                    y = sib[y]
                ky = start[y]
                split_at = ky + p - k + 1
                if text[split_at] == c:
                    break
                r = self._new_node(ky, split_at - 1)
                # r takes y's place among s's children
                if child[s] == y:
                    child[s] = r
                else:
                    z = child[s]
                    while sib[z] != y:
                        z = sib[z]
                    sib[z] = r
                sib[r] = sib[y]
                sib[y] = NIL
                child[r] = y
                start[y] = split_at
                sy = self.slot[y]
                if sy != NIL:
                    # the mark follows the locus, which is now r
                    self.slot[r] = sy
                    self.members[sy] = r
                    self.slot[y] = NIL
                created = True
            else:
                r = s
                if r == BOTTOM:
                    break
                y = child[r]
                nch = 0
                hit = False
                while y != NIL:
                    if text[start[y]] == c:
                        hit = True
                        break
                    nch += 1
                    y = sib[y]
                if hit:
                    break
            if first:
                if created:
                    a = text[start[child[r]]]
                    self._mark(child[r])
                    case3 = True
                elif nch == 1:
                    a = text[start[child[r]]]
                    self._mark(child[r])
                    case3 = True
            elif case3 and not found2 and not created and nch >= 2:
                self._unmark(self._find(r, a))
                found2 = True
            leaf = self._new_node(i, INF)
            sib[leaf] = child[r]
            child[r] = leaf
            if first and (created or nch >= 1):
                self._mark(leaf)
            first = False
            if oldr != ROOT:
                link[oldr] = r
            oldr = r
            # follow the suffix link and canonize (s, (k, p))
            s = link[s]
            s, k = self._canonize(s, k, p)
        if oldr != ROOT:
            link[oldr] = s
        if not first and s != BOTTOM:
            # the loop ran, so the end point is an explicit node
            self._unmark(self._find(s, c))
            if case3 and not found2:
                self._unmark(self._find(s, a))
        self.s, self.k = self._canonize(s, k, i)

    def _canonize(self, s, k, p):
        if p < k:
            return s, k
        if s == BOTTOM:
            s = ROOT
            k += 1
            if p < k:
                return s, k
        text, start, end, child, sib = self.text, self.start, self.end, self.child, self.sib
        tk = text[k]
        y = child[s]
        while text[start[y]] != tk:
            y = sib[y]
        ky = start[y]
        while end[y] - ky <= p - k:
            k += end[y] - ky + 1
            s = y
            if k > p:
                break
            tk = text[k]
            y = child[s]
            while text[start[y]] != tk:
                y = sib[y]
            ky = start[y]
        return s, k

    def feed(self, symbols: Iterable[int]):
        for c in symbols:
            self.extend(c)
        return self

    # -- queries -------------------------------------------------------

    @property
    def sre(self) -> int:
        return len(self.members)

    def positions(self) -> List[int]:
        start = self.start
        return sorted(start[y] for y in self.members)

    def _depths(self):
        """Parent and string depth of every node, by an explicit DFS."""
        size = len(self.start)
        parent = array("i", [NIL]) * size
        depth = array("i", [0]) * size
        start, end, child, sib = self.start, self.end, self.child, self.sib
        stack = [ROOT]
        while stack:
            v = stack.pop()
            y = child[v]
            while y != NIL:
                parent[y] = v
                depth[y] = depth[v] + min(end[y], self.n) - start[y] + 1
                stack.append(y)
                y = sib[y]
        return parent, depth

    def supermaximal_extensions(self) -> List[tuple]:
        parent, depth = self._depths()
        text = self.text
        out = []
        for y in self.members:
            e = self.start[y]
            d = depth[parent[y]]
            out.append(tuple(text[e - d:e + 1]))
        return sorted(out, key=lambda z: (len(z), z))

    def check_invariants(self):
        """Structural self-check for debugging; raises AssertionError."""
        parent, depth = self._depths()
        text, start, end, child, sib, link = (
            self.text, self.start, self.end, self.child, self.sib, self.link)
        for v in range(ROOT, len(start)):
            kids = []
            y = child[v]
            while y != NIL:
                kids.append(text[start[y]])
                y = sib[y]
            assert len(kids) == len(set(kids)), v
            if v != ROOT and end[v] != INF:
                assert len(kids) >= 2, f"internal node {v} has {len(kids)} children"
                # suffix link of an internal node: drop the first symbol
                w = link[v]
                assert w != NIL and depth[w] == depth[v] - 1, v
                e = min(end[v], self.n)
                label = tuple(text[e - depth[v] + 1:e + 1])
                if depth[w]:
                    ew = min(end[w], self.n)
                    assert tuple(text[ew - depth[w] + 1:ew + 1]) == label[1:], v
        assert link[ROOT] == BOTTOM
        for j, y in enumerate(self.members):
            assert self.slot[y] == j


def sre_trace(symbols: Iterable[int]) -> List[int]:
    t = UkkonenTree()
    out = []
    for c in symbols:
        t.extend(c)
        out.append(t.sre)
    return out


def build(w: Text) -> UkkonenTree:
    return UkkonenTree().feed(w.symbols)


def chi_streaming(t) -> int:
    """chi of a sentinel-free text (a ``Text`` or any iterable of symbols)."""
    if isinstance(t, Text) and t.has_sentinel:
        raise SentinelInInput("chi expects a text without the sentinel")
    tree = UkkonenTree()
    ext = tree.extend
    for c in t:
        if c == SENTINEL:
            raise SentinelInInput("symbol 0 is reserved for the sentinel")
        ext(c)
    ext(SENTINEL)
    return tree.sre


def smallest_set(w: Text) -> List[int]:
    return build(w).positions()
