"""Generators for the extremal string families.

Binary families use the byte encoding (``a``/``b``); the reversal family needs
an alphabet that grows with its parameter and is emitted as tokens.
"""
from __future__ import annotations

import random
from typing import List, Optional

from .errors import ParameterTooSmall
from .text import Text, from_str, from_tokens

EDIT_VARIANTS = ("ins", "sub", "del", "rot")


def _at_least(name, value, low):
    if value < low:
        raise ParameterTooSmall(f"{name} must be at least {low}, got {value}")


def fibonacci_string(k: int) -> str:
    _at_least("k", k, 1)
    if k == 1:
        return "b"
    prev, cur = "b", "a"
    for _ in range(k - 2):
        prev, cur = cur, cur + prev
    return cur


def fibonacci(k: int) -> Text:
    return from_str(fibonacci_string(k))


def fibonacci_length(k: int) -> int:
    a, b = 1, 1
    for _ in range(k - 1):
        a, b = b, a + b
    return a


def _lyndon_debruijn(k: int) -> List[int]:
    # concatenation of Lyndon words whose length divides k, in lexicographic
    # order (Fredricksen-Kessler-Maiorana)
    out: List[int] = []
    a = [0] * (k + 1)

    def gen(t, p):
        if t > k:
            if k % p == 0:
                out.extend(a[1:p + 1])
            return
        a[t] = a[t - p]
        gen(t + 1, p)
        for j in range(a[t - p] + 1, 2):
            a[t] = j
            gen(t + 1, t)

    gen(1, 1)
    return out


def _random_debruijn(k: int, seed: int) -> List[int]:
    # random Eulerian circuit on the order-(k-1) de Bruijn graph
    rng = random.Random(seed)
    if k == 1:
        bits = [0, 1]
        rng.shuffle(bits)
        return bits
    m = k - 1
    mask = (1 << m) - 1
    unused = {v: rng.sample([0, 1], 2) for v in range(1 << m)}
    stack = [(rng.randrange(1 << m), None)]
    circuit = []
    while stack:
        v, bit = stack[-1]
        if unused[v]:
            b = unused[v].pop()
            stack.append((((v << 1) | b) & mask, b))
        else:
            stack.pop()
            if bit is not None:
                circuit.append(bit)
    circuit.reverse()
    return circuit


def debruijn(k: int, seed: Optional[int] = None) -> Text:
    """Linearized binary de Bruijn sequence of order ``k`` (length 2^k + k - 1)."""
    _at_least("k", k, 1)
    cyc = _lyndon_debruijn(k) if seed is None else _random_debruijn(k, seed)
    bits = cyc + cyc[:k - 1]
    return from_str("".join("ab"[b] for b in bits))


def _u_blocks(m: int) -> str:
    return "".join(("a" + "b" * k + "a" + "b" * (2 * m - k)) * 2 for k in range(1, m))


def wm_string(m: int) -> str:
    _at_least("m", m, 3)
    return "a" + "b" * (2 * m) + "a" + "b" * (2 * m + 2) + _u_blocks(m)


def wm(m: int) -> Text:
    return from_str(wm_string(m))


def edit_family_string(m: int, variant: str) -> str:
    _at_least("m", m, 3)
    u = _u_blocks(m)
    if variant == "ins":
        return "a" + "b" * (4 * m + 2) + u
    if variant == "sub":
        return "a" + "b" * (4 * m + 3) + u
    if variant == "del":
        return "a" + "b" * (2 * m) + "aa" + "b" * (2 * m + 2) + u
    if variant == "rot":
        return "a" + "b" * (2 * m + 2) + u + "a" + "b" * (2 * m)
    raise ValueError(f"unknown variant {variant!r}; expected one of {', '.join(EDIT_VARIANTS)}")


def edit_family(m: int, variant: str) -> Text:
    return from_str(edit_family_string(m, variant))


def reversal_tokens(k: int) -> List[int]:
    _at_least("k", k, 1)
    out = []
    for i in range(1, k + 1):
        a, sharp, end = 3 * i - 1, 3 * i, 3 * i + 1
        out += [1, a, sharp, a, end]
    return out


def reversal_family(k: int) -> Text:
    return from_tokens(reversal_tokens(k))


FAMILIES = ("fibonacci", "debruijn", "wm", "edit", "reversal")


def generate(family: str, param: int, variant: Optional[str] = None, seed: Optional[int] = None) -> Text:
    if family == "fibonacci":
        return fibonacci(param)
    if family == "debruijn":
        return debruijn(param, seed)
    if family == "wm":
        return wm(param)
    if family == "edit":
        if variant is None:
            raise ValueError("the edit family needs a variant")
        return edit_family(param, variant)
    if family == "reversal":
        return reversal_family(param)
    raise ValueError(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")
