"""The two coefficient families the calculator handles.

Everything downstream branches on whether the acting group is unitary
(complex coordinates) or symplectic (quaternionic coordinates), so the
choice travels as a small enum rather than a string.
"""

from __future__ import annotations

import enum


class Family(enum.Enum):
    COMPLEX = "U"
    QUATERNIONIC = "Sp"

    @classmethod
    def parse(cls, text: str) -> "Family":
        """Accept the common spellings used on the command line."""
        key = text.strip().lower()
        if key in {"u", "c", "complex", "unitary"}:
            return cls.COMPLEX
        if key in {"sp", "h", "q", "quaternionic", "symplectic"}:
            return cls.QUATERNIONIC
        raise ValueError(f"unknown family {text!r}, expected 'U' or 'Sp'")

    def __str__(self) -> str:
        return self.value
