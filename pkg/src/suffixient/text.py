"""Texts over integer alphabets and the single-step string operations.

Symbol 0 is reserved for the sentinel ``$`` and is strictly smaller than any
other symbol.  Raw bytes are shifted up by one so that every byte value stays
representable.  Positions in the public interface are 1-based.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional, Sequence

from .errors import (
    AlreadyTerminated,
    PositionOutOfRange,
    SentinelInInput,
    SentinelSymbol,
)

SENTINEL = 0

OP_KINDS = ("append", "prepend", "insert", "delete", "substitute", "rotate", "reverse")


@dataclass(frozen=True)
class Text:
    symbols: tuple
    has_sentinel: bool = False
    encoding: str = field(default="tokens", compare=False)

    def __post_init__(self):
        syms = self.symbols
        if not isinstance(syms, tuple):
            object.__setattr__(self, "symbols", syms := tuple(syms))
        if self.has_sentinel:
            if not syms or syms[-1] != SENTINEL:
                raise SentinelInInput("sentinel flag set but text does not end with the sentinel")
            if SENTINEL in syms[:-1]:
                raise SentinelInInput("sentinel occurs before the last position")
        elif SENTINEL in syms:
            raise SentinelInInput("symbol 0 is reserved for the sentinel")
        if syms and min(syms) < 0:
            raise ValueError("symbols must be non-negative integers")

    def __len__(self):
        return len(self.symbols)

    def __iter__(self):
        return iter(self.symbols)

    def __getitem__(self, i):
        return self.symbols[i]

    @cached_property
    def sigma(self) -> int:
        return len(set(self.symbols))

    @cached_property
    def key(self):
        """Hashable, sliceable form: ``bytes`` when every symbol fits, else the tuple."""
        if not self.symbols or max(self.symbols) < 256:
            return bytes(self.symbols)
        return self.symbols

    def replace(self, symbols: Iterable[int], has_sentinel: bool = False) -> "Text":
        return Text(tuple(symbols), has_sentinel, self.encoding)

    def render(self) -> str:
        return render_symbols(self.symbols, self.encoding)

    def __str__(self):
        return self.render()


def render_symbols(symbols: Iterable[int], encoding: str = "bytes") -> str:
    """Human readable form; the sentinel prints as ``$``."""
    if encoding == "bytes":
        out = []
        for s in symbols:
            if s == SENTINEL:
                out.append("$")
            elif s <= 256:
                out.append(chr(s - 1))
            else:
                out.append(f"<{s}>")
        return "".join(out)
    return " ".join("$" if s == SENTINEL else str(s) for s in symbols)


def from_bytes(raw: bytes) -> Text:
    return Text(tuple(b + 1 for b in raw), False, "bytes")


def from_str(s: str) -> Text:
    return from_bytes(s.encode("latin-1"))


def from_tokens(tokens: Iterable[int]) -> Text:
    toks = tuple(int(t) for t in tokens)
    if SENTINEL in toks:
        raise SentinelInInput("token 0 is reserved for the sentinel")
    return Text(toks, False, "tokens")


def parse(raw: bytes, mode: str = "bytes") -> Text:
    if mode == "bytes":
        return from_bytes(raw)
    if mode == "tokens":
        try:
            return from_tokens(int(tok) for tok in raw.decode("utf-8").split())
        except ValueError as exc:
            raise SentinelInInput(f"malformed token input: {exc}") from None
    raise ValueError(f"unknown input mode {mode!r}")


def serialize(t: Text, mode: str = "bytes") -> bytes:
    body = t.symbols[:-1] if t.has_sentinel else t.symbols
    if mode == "bytes":
        if any(s > 256 for s in body):
            raise ValueError("text has symbols outside the byte range; use tokens")
        return bytes(s - 1 for s in body)
    return (" ".join(map(str, body)) + "\n").encode()


def with_sentinel(t: Text) -> Text:
    if t.has_sentinel:
        raise AlreadyTerminated("text already ends with the sentinel")
    return Text(t.symbols + (SENTINEL,), True, t.encoding)


def strip_sentinel(t: Text) -> Text:
    if not t.has_sentinel:
        return t
    return Text(t.symbols[:-1], False, t.encoding)


def fresh_symbol(t: Text) -> int:
    return max(t.symbols, default=SENTINEL) + 1


@dataclass(frozen=True)
class StringOp:
    kind: str
    position: Optional[int] = None
    symbol: Optional[int] = None

    def __post_init__(self):
        if self.kind not in OP_KINDS:
            raise ValueError(f"unknown operation {self.kind!r}")


def apply(t: Text, op: StringOp) -> Text:
    if t.has_sentinel:
        raise AlreadyTerminated("string operations apply to unterminated texts")
    w = t.symbols
    n = len(w)
    kind = op.kind
    if kind in ("append", "prepend", "insert", "substitute"):
        if op.symbol is None or op.symbol == SENTINEL:
            raise SentinelSymbol(f"{kind} needs a non-sentinel symbol")
    if kind in ("delete", "substitute", "rotate"):
        _check_pos(op.position, 1, n)
    elif kind == "insert":
        _check_pos(op.position, 1, n + 1)

    if kind == "append":
        out = w + (op.symbol,)
    elif kind == "prepend":
        out = (op.symbol,) + w
    elif kind == "insert":
        i = op.position - 1
        out = w[:i] + (op.symbol,) + w[i:]
    elif kind == "delete":
        i = op.position - 1
        out = w[:i] + w[i + 1:]
    elif kind == "substitute":
        i = op.position - 1
        out = w[:i] + (op.symbol,) + w[i + 1:]
    elif kind == "rotate":
        i = op.position
        out = w[i:] + w[:i]
    else:
        out = w[::-1]
    return Text(out, False, t.encoding)


def _check_pos(pos, lo, hi):
    if pos is None or not lo <= pos <= hi:
        raise PositionOutOfRange(f"position {pos} outside [{lo}..{hi}]")


def concat(*parts: Sequence[int], encoding: str = "tokens") -> Text:
    out = []
    for p in parts:
        out.extend(p.symbols if isinstance(p, Text) else p)
    return Text(tuple(out), False, encoding)
