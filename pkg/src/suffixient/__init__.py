"""Suffixient sets, the chi measure and related repetitiveness measures."""
from .errors import SuffixientError
from .text import StringOp, Text, apply, from_bytes, from_str, from_tokens, with_sentinel

__all__ = [
    "StringOp", "SuffixientError", "Text", "apply", "from_bytes", "from_str",
    "from_tokens", "with_sentinel",
]
