"""The digit-wise bijection between hyperbinary strings of n and short BSD strings of n+1.

The forward map prepends a 1 and lowers every hyperbinary digit by one;
since the prepended power of two exceeds the sum of all lower powers by
exactly 1, the value rises by 1.  The inverse strips the leading 1 and
raises the remaining digits.  Both act position-wise on digits, with no
carrying, and are defined only on canonical strings.
"""

from __future__ import annotations

from .representations import HyperbinaryString, SignedDigitString, is_short

__all__ = ["hb_to_short_bsd", "short_bsd_to_hb"]


def hb_to_short_bsd(h: HyperbinaryString) -> SignedDigitString:
    """Map a canonical hyperbinary string of n to a short BSD string of n+1.

    "0" maps to "1"; otherwise an (l+1)-digit string becomes the
    (l+2)-digit string with leading digit 1 and every original digit
    decremented.  The result is canonical and short: its second position
    holds the old leading digit minus one, which cannot be T because the
    old leading digit was nonzero.
    """
    if not h.is_canonical:
        raise ValueError(f"map is defined on canonical strings only, got {h!r}")
    if h.digits == (0,):
        return SignedDigitString((1,))
    return SignedDigitString(tuple(d - 1 for d in h.digits) + (1,))


def short_bsd_to_hb(b: SignedDigitString) -> HyperbinaryString:
    """Inverse map: a short BSD string of n+1 >= 1 to a hyperbinary string of n.

    "1" maps to "0"; otherwise the leading 1 is dropped and every
    remaining digit is incremented.  Shortness guarantees the digit
    below the leading 1 is not T, so the result keeps a nonzero leading
    digit.
    """
    if not b.digits or not b.is_canonical:
        raise ValueError(f"map is defined on canonical nonempty strings only, got {b!r}")
    if b.digits[-1] != 1:
        raise ValueError(f"value must be positive (leading digit 1), got {b!r}")
    if not is_short(b):
        raise ValueError(f"input is not short: {b!r}")
    if b.digits == (1,):
        return HyperbinaryString((0,))
    return HyperbinaryString(tuple(d + 1 for d in b.digits[:-1]))
