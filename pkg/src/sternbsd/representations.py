"""Digit strings over {T, 0, 1} and {0, 1, 2}, and their enumeration.

A binary signed-digit (BSD) string has digits in {-1, 0, 1}; a
hyperbinary string has digits in {0, 1, 2}.  Both are stored
little-endian: ``digits[j]`` is the coefficient of 2**j.  All text is
most-significant-first, with 'T' standing for -1, so "10T1" denotes
1*8 + 0*4 - 1*2 + 1*1 = 7.

A BSD string is *canonical* when its most significant digit is nonzero;
the empty string is the canonical form of 0.  A canonical BSD string is
*short* when its two most significant positions are neither (1, T) nor
(T, 1); single-digit strings are always short.  Excluding those two
leading pairs cuts the otherwise infinite family of BSD expansions of a
nonzero integer (e.g. 5 = [101] = [1T01] = [1TT01] = ...) down to a
finite one.

A hyperbinary string is canonical when its most significant digit is
nonzero, except that the single digit "0" is the canonical form of 0.

Enumeration is depth-first over digit positions from the least
significant end: the residual's parity forces the digit choices at each
position, and a branch is pruned as soon as the residual exceeds what
the remaining positions can reach.  The exhaustive all-strings oracle
this replaces lives in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass

__all__ = [
    "SignedDigitString",
    "HyperbinaryString",
    "parse_bsd",
    "format_bsd",
    "parse_hb",
    "format_hb",
    "value_bsd",
    "value_hb",
    "is_short",
    "negate",
    "count_short_bsd_recurrence",
    "enumerate_short_bsd",
    "enumerate_bsd_fixed",
    "enumerate_hyperbinary",
]

_BSD_CHAR = {-1: "T", 0: "0", 1: "1"}
_BSD_DIGIT = {"T": -1, "0": 0, "1": 1}
_HB_DIGIT = {"0": 0, "1": 1, "2": 2}


@dataclass(frozen=True, slots=True, repr=False)
class SignedDigitString:
    """A BSD digit string; ``digits[j]`` multiplies 2**j."""

    digits: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(d not in (-1, 0, 1) for d in self.digits):
            raise ValueError(f"signed digits must be -1, 0 or 1, got {self.digits!r}")

    @property
    def width(self) -> int:
        return len(self.digits)

    @property
    def is_canonical(self) -> bool:
        """True when the most significant digit is nonzero (or the string is empty)."""
        return not self.digits or self.digits[-1] != 0

    def __str__(self) -> str:
        return format_bsd(self)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({str(self)!r})"


@dataclass(frozen=True, slots=True, repr=False)
class HyperbinaryString:
    """A hyperbinary digit string; ``digits[j]`` multiplies 2**j."""

    digits: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(d not in (0, 1, 2) for d in self.digits):
            raise ValueError(f"hyperbinary digits must be 0, 1 or 2, got {self.digits!r}")

    @property
    def width(self) -> int:
        return len(self.digits)

    @property
    def is_canonical(self) -> bool:
        """True for a nonzero most significant digit, or the distinguished "0"."""
        if self.digits == (0,):
            return True
        return bool(self.digits) and self.digits[-1] != 0

    def __str__(self) -> str:
        return format_hb(self)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({str(self)!r})"


def parse_bsd(text: str) -> SignedDigitString:
    """Parse most-significant-first text over '1', '0', 'T'.  No trimming."""
    if not text:
        raise ValueError("empty digit string")
    try:
        digits = tuple(_BSD_DIGIT[c] for c in reversed(text))
    except KeyError as exc:
        raise ValueError(f"invalid signed digit {exc.args[0]!r} in {text!r}") from None
    return SignedDigitString(digits)


def format_bsd(r: SignedDigitString) -> str:
    """Most-significant-first rendering; the empty string renders as ''."""
    return "".join(_BSD_CHAR[d] for d in reversed(r.digits))


def parse_hb(text: str) -> HyperbinaryString:
    """Parse most-significant-first text over '0', '1', '2'."""
    if not text:
        raise ValueError("empty digit string")
    try:
        digits = tuple(_HB_DIGIT[c] for c in reversed(text))
    except KeyError as exc:
        raise ValueError(f"invalid hyperbinary digit {exc.args[0]!r} in {text!r}") from None
    return HyperbinaryString(digits)


def format_hb(h: HyperbinaryString) -> str:
    return "".join(str(d) for d in reversed(h.digits))


def value_bsd(r: SignedDigitString) -> int:
    """The integer the string denotes: sum of digits[j] * 2**j."""
    value = 0
    for d in reversed(r.digits):
        value = 2 * value + d
    return value


def value_hb(h: HyperbinaryString) -> int:
    value = 0
    for d in reversed(h.digits):
        value = 2 * value + d
    return value


def is_short(r: SignedDigitString) -> bool:
    """Whether a canonical, nonempty BSD string is short.

    Inspects the two most significant *positions* (indices l and l-1),
    not the two highest nonzero terms: [10TT] is short even though its
    leading nonzero terms are 1 followed by T.
    """
    if not r.digits:
        raise ValueError("shortness is defined for nonempty strings")
    if r.digits[-1] == 0:
        raise ValueError(f"shortness is defined for canonical strings, got {r!r}")
    if len(r.digits) == 1:
        return True
    return (r.digits[-1], r.digits[-2]) not in ((1, -1), (-1, 1))


def negate(r: SignedDigitString) -> SignedDigitString:
    """Digit-wise negation: swaps 1 and T.  Negates the value, preserves shortness."""
    return SignedDigitString(tuple(-d for d in r.digits))


_SHORT_COUNT_BASE = (0, 1, 1, 2, 1, 3)


def count_short_bsd_recurrence(n: int) -> int:
    """Count the short BSD representations of ``|n|`` by direct recurrence.

    Base table for 0..5, then count(2k) = count(k) and
    count(2k+1) = count(k) + count(k+1): a representation of an even 2k
    is a representation of k with a 0 appended at the low end, and a
    representation of an odd 2k+1 ends in either 1 (leaving k) or T
    (leaving k+1).  Deliberately does not consult the Stern sequence, so
    it can serve as an independent route for cross-checks.
    """
    n = abs(n)
    memo = dict(enumerate(_SHORT_COUNT_BASE))

    def count(m: int) -> int:
        try:
            return memo[m]
        except KeyError:
            pass
        k, odd = divmod(m, 2)
        result = count(k) + count(k + 1) if odd else count(k)
        memo[m] = result
        return result

    return count(n)


def _msb_first_key(digits: tuple[int, ...]) -> tuple[int, ...]:
    # Lexicographic order on the most-significant-first rendering with
    # T < 0 < 1 (and 0 < 1 < 2) is plain tuple order on reversed digits.
    return digits[::-1]


def _bsd_fixed_digits(target: int, width: int) -> list[tuple[int, ...]]:
    """Little-endian digit tuples of exactly ``width`` signed digits summing to target."""
    out: list[tuple[int, ...]] = []
    acc: list[int] = []

    def go(j: int, residual: int) -> None:
        if abs(residual) > (1 << (width - j)) - 1:
            return  # unreachable with the remaining positions; at j == width this rejects residual != 0
        if j == width:
            out.append(tuple(acc))
            return
        for d in (0,) if residual % 2 == 0 else (-1, 1):
            acc.append(d)
            go(j + 1, (residual - d) >> 1)
            acc.pop()

    go(0, target)
    return out


def _hyperbinary_digits(target: int) -> list[tuple[int, ...]]:
    """Little-endian digit tuples over {0,1,2} summing to ``target >= 1``.

    The residual shrinks strictly at every step and the walk stops the
    moment it reaches 0, so every emitted tuple ends in a nonzero digit:
    the results are exactly the canonical strings.
    """
    out: list[tuple[int, ...]] = []
    acc: list[int] = []

    def go(residual: int) -> None:
        if residual == 0:
            out.append(tuple(acc))
            return
        if residual % 2:
            acc.append(1)
            go((residual - 1) >> 1)
            acc.pop()
        else:
            acc.append(0)
            go(residual >> 1)
            acc.pop()
            acc.append(2)
            go((residual - 2) >> 1)
            acc.pop()

    go(target)
    return out


def enumerate_short_bsd(n: int) -> list[SignedDigitString]:
    """All canonical short BSD strings with value ``n``, in display order.

    Every short representation of n >= 1 uses either w or w+1 digits,
    where w is the width of the standard binary form of n, so searching
    those two widths is exhaustive.  Negative n mirrors -n digit-wise;
    0 has no canonical representation at all.
    """
    if n == 0:
        return []
    if n < 0:
        mirrored = [negate(r) for r in enumerate_short_bsd(-n)]
        mirrored.sort(key=lambda r: _msb_first_key(r.digits))
        return mirrored
    w = n.bit_length()
    found = []
    for width in (w, w + 1):
        for digits in _bsd_fixed_digits(n, width):
            if digits[-1] == 0:
                continue
            candidate = SignedDigitString(digits)
            if is_short(candidate):
                found.append(candidate)
    found.sort(key=lambda r: _msb_first_key(r.digits))
    return found


def enumerate_bsd_fixed(n: int, i: int) -> list[SignedDigitString]:
    """All BSD strings of exactly ``i`` digits (leading zeros kept) with value ``n``."""
    if i < 1:
        raise ValueError(f"width must be >= 1, got {i}")
    if abs(n) > (1 << i) - 1:
        raise ValueError(f"{n} is not representable in {i} signed digits")
    found = [SignedDigitString(d) for d in _bsd_fixed_digits(n, i)]
    found.sort(key=lambda r: _msb_first_key(r.digits))
    return found


def enumerate_hyperbinary(n: int) -> list[HyperbinaryString]:
    """All canonical hyperbinary strings with value ``n >= 0``, in display order."""
    if n < 0:
        raise ValueError(f"hyperbinary representations exist only for n >= 0, got {n}")
    if n == 0:
        return [HyperbinaryString((0,))]
    found = [HyperbinaryString(d) for d in _hyperbinary_digits(n)]
    found.sort(key=lambda h: _msb_first_key(h.digits))
    return found
