"""Right-to-left online suffix tree that keeps a smallest suffixient set.

Suffixes of ``w$`` are inserted shortest first, as in Weiner's algorithm, using
per-node indicator sets and Weiner links.  Prepending ``c`` makes the head
``h = c·x`` right-maximal (or adds a new branch to it), where ``x`` is the
locus ``v`` found on the upward walk.  The new supermaximal extensions are the
edges leaving ``h``; the extensions ``x·a`` and ``x·b`` they swallow are edges
leaving ``v``.
"""
from __future__ import annotations

from typing import Iterable, List

from .errors import SentinelInInput
from .text import SENTINEL, Text


class Node:
    __slots__ = ("depth", "suf", "parent", "children", "links", "ind")

    def __init__(self, depth, suf, parent):
        self.depth = depth
        # length of one suffix that starts with this node's string
        self.suf = suf
        self.parent = parent
        self.children = {}
        self.links = {}
        self.ind = set()


class WeinerTree:
    def __init__(self):
        # rev[j] is the symbol at distance j from the end; rev[0] is the sentinel
        self.rev: List[int] = [SENTINEL]
        self.root = Node(0, 0, None)
        leaf = Node(1, 1, self.root)
        self.root.children[SENTINEL] = leaf
        self.root.ind.add(SENTINEL)
        self.last_leaf = leaf
        self.marked = set()

    @property
    def length(self) -> int:
        """Length of the current suffix, sentinel included."""
        return len(self.rev)

    def _char(self, node, d):
        return self.rev[node.suf - 1 - d]

    def prepend(self, c: int):
        if c == SENTINEL or c < 0:
            raise SentinelInInput("only the initial sentinel may be symbol 0")
        rev = self.rev
        L = len(rev)
        rev.append(c)
        new_len = L + 1
        root = self.root

        # deepest ancestor v of the old leaf whose string is preceded by c
        v = self.last_leaf.parent
        path = []
        while v is not None and c not in v.ind:
            path.append(v)
            v = v.parent
        for u in path:
            u.ind.add(c)

        if v is None:
            h = root
            created = False
        else:
            # v2: first node at or above v with a Weiner link by c
            v2 = v
            while v2 is not None and c not in v2.links:
                v2 = v2.parent
            if v2 is v:
                h = v.links[c]
                created = False
            else:
                w = root if v2 is None else v2.links[c]
                target = v.depth + 1
                # first symbol below w along c·x, read from the new suffix
                y = w.children[rev[new_len - 1 - w.depth]]
                if y.depth == target:
                    h = y
                    created = False
                else:
                    h = Node(target, y.suf, w)
                    w.children[rev[new_len - 1 - w.depth]] = h
                    y.parent = h
                    h.children[self._char(y, target)] = y
                    h.ind = set(y.ind) if y.children else (
                        {rev[y.suf]} if y.suf < new_len else set())
                    if y in self.marked:
                        self.marked.discard(y)
                        self.marked.add(h)
                    created = True
                v.links[c] = h

        leaf = Node(new_len, new_len, h)
        a = rev[new_len - 1 - h.depth]
        h.children[a] = leaf
        self.last_leaf = leaf

        marked = self.marked
        if v is None:
            # c is a new symbol; h is the root
            if len(root.children) == 2:
                marked.update(root.children.values())
            else:
                marked.add(leaf)
            return
        marked.add(leaf)
        xa = v.children.get(a)
        if xa is not None:
            marked.discard(xa)
        if created:
            b, yb = _other_child(h, a)
            marked.add(yb)
            xb = v.children.get(b)
            if xb is not None:
                marked.discard(xb)

    def feed_reversed(self, symbols: Iterable[int]):
        for c in symbols:
            self.prepend(c)
        return self

    @property
    def sre(self) -> int:
        return len(self.marked)

    def positions(self) -> List[int]:
        """1-based end positions, relative to the current suffix."""
        L = len(self.rev)
        return sorted(L - y.suf + y.parent.depth + 1 for y in self.marked)

    def supermaximal_extensions(self) -> List[tuple]:
        out = []
        for y in self.marked:
            d = y.parent.depth
            out.append(tuple(self.rev[y.suf - 1 - j] for j in range(d + 1)))
        return sorted(out, key=lambda z: (len(z), z))


def _other_child(h: Node, a: int):
    for key, y in h.children.items():
        if key != a:
            return key, y
    raise AssertionError("split node must have two children")


def chi_per_suffix(t) -> List[int]:
    """``[chi(t[n-i+1..n]) for i in 1..n]`` for a sentinel-free text."""
    if isinstance(t, Text) and t.has_sentinel:
        raise SentinelInInput("chi expects a text without the sentinel")
    symbols = list(t)
    if SENTINEL in symbols:
        raise SentinelInInput("symbol 0 is reserved for the sentinel")
    tree = WeinerTree()
    out = []
    for c in reversed(symbols):
        tree.prepend(c)
        out.append(tree.sre)
    return out


def build(t) -> WeinerTree:
    """Tree of ``t$`` built right to left."""
    symbols = list(t.symbols[:-1] if isinstance(t, Text) and t.has_sentinel else t)
    return WeinerTree().feed_reversed(reversed(symbols))


def chi(t) -> int:
    return build(t).sre
