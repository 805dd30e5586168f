"""Repair ill-formed UTF-16 by replacing mismatched surrogates with U+FFFD."""

from ._utf16mend import (
    available_kernels,
    default_kernel,
    fix_utf16le,
    generate_utf16le,
    is_well_formed_utf16le,
    unpaired_surrogate_offsets,
)

__all__ = [
    "available_kernels",
    "default_kernel",
    "fix_str",
    "fix_utf16le",
    "generate_utf16le",
    "is_well_formed_str",
    "is_well_formed_utf16le",
    "unpaired_surrogate_offsets",
]


def fix_str(text: str, kernel: str | None = None) -> str:
    """Return ``text`` with every unpaired surrogate replaced by U+FFFD.

    Python strings may contain lone surrogates (e.g. from ``surrogateescape``
    decoding or string slicing); the result is always well-formed.
    """
    data = text.encode("utf-16-le", "surrogatepass")
    return fix_utf16le(data, kernel).decode("utf-16-le")


def is_well_formed_str(text: str) -> bool:
    """True if ``text`` contains no unpaired surrogate."""
    return is_well_formed_utf16le(text.encode("utf-16-le", "surrogatepass"))
