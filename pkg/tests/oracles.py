"""Brute-force reference implementations for the test suite.

Everything here iterates *all* digit strings of bounded width and keeps
the matches, or fills the defining recurrence into a table.  Slow on
purpose, independent of the package's pruned enumerators and log-time
evaluators, so the two can be judged against each other.
"""

import itertools


def stern_table(limit):
    """[s(0), ..., s(limit)] filled upward from the recurrence."""
    values = [0, 1]
    for k in range(2, limit + 1):
        half, odd = divmod(k, 2)
        values.append(values[half] + values[half + 1] if odd else values[half])
    return values[: limit + 1]


def digit_value(digits):
    return sum(d << j for j, d in enumerate(digits))


def display_key(digits):
    # most-significant-first comparison; digit values already order T < 0 < 1
    return digits[::-1]


def all_bsd_fixed(n, width):
    """Every little-endian width-`width` tuple over {-1,0,1} with value n, sorted."""
    found = [digits for digits in itertools.product((-1, 0, 1), repeat=width)
             if digit_value(digits) == n]
    return sorted(found, key=display_key)


def _is_short_tuple(digits):
    if len(digits) == 1:
        return True
    return (digits[-1], digits[-2]) not in ((1, -1), (-1, 1))


def short_bsd_by_value(max_width):
    """value -> sorted canonical short tuples, over all widths <= max_width."""
    table = {}
    for width in range(1, max_width + 1):
        for digits in itertools.product((-1, 0, 1), repeat=width):
            if digits[-1] == 0 or not _is_short_tuple(digits):
                continue
            table.setdefault(digit_value(digits), []).append(digits)
    for found in table.values():
        found.sort(key=display_key)
    return table


def hyperbinary_by_value(max_width):
    """value -> sorted canonical hyperbinary tuples of width <= max_width."""
    table = {0: [(0,)]}
    for width in range(1, max_width + 1):
        for digits in itertools.product((0, 1, 2), repeat=width):
            if digits[-1] == 0:
                continue
            table.setdefault(digit_value(digits), []).append(digits)
    for found in table.values():
        found.sort(key=display_key)
    return table


def all_short_bsd(n, max_width):
    """Canonical short tuples with value n, width <= max_width, sorted."""
    return short_bsd_by_value(max_width).get(n, [])


def all_hyperbinary(n, max_width):
    """Canonical hyperbinary tuples with value n, width <= max_width, sorted."""
    return hyperbinary_by_value(max_width).get(n, [])
