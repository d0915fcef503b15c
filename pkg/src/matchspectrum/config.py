"""Enumeration caps and the exceptions shared across modules."""

from __future__ import annotations

import os
from dataclasses import dataclass

ENV_CAPS = "MATCHSPECTRUM_CAPS"


class GraphParseError(ValueError):
    """Malformed graph text; the message names the offending line."""


class CapExceededError(RuntimeError):
    """An exhaustive oracle was asked to enumerate beyond its configured cap."""


class IntegrityError(ArithmeticError):
    """An exact-arithmetic invariant failed (inexact division, lost mass, ...)."""


@dataclass(frozen=True)
class Caps:
    # brute: max |V| for cutdist_bruteforce and max basis rows for codeword enumeration
    brute: int = 24
    # enum: max |V1| for matching backtracking
    enum: int = 14

    @classmethod
    def parse(cls, text: str) -> "Caps":
        """Parse ``brute=<k>,enum=<k>``; omitted keys keep their defaults."""
        values: dict[str, int] = {}
        for part in text.split(","):
            part = part.strip()
            if not part:
                continue
            key, sep, raw = part.partition("=")
            key = key.strip()
            if not sep or key not in ("brute", "enum"):
                raise ValueError(f"bad cap setting {part!r} in {ENV_CAPS}")
            values[key] = int(raw)
        return cls(**values)


def current_caps() -> Caps:
    """Caps in effect now, honouring the environment override."""
    text = os.environ.get(ENV_CAPS)
    return Caps.parse(text) if text else Caps()
