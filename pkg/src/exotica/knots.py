"""Symmetrized Alexander polynomials of the twist-knot family K_m."""

from .errors import InvalidIndex
from .groupring import GroupRingElement, laurent


def check_index(m) -> int:
    if isinstance(m, bool) or not isinstance(m, int) or m < 1:
        raise InvalidIndex(f"knot index must be a positive integer, got {m!r}")
    return m


def alexander(m: int) -> GroupRingElement:
    """m*t - (2m-1) + m*t^-1, the twist knot with 2m+1 half twists."""
    m = check_index(m)
    return laurent({1: m, 0: -(2 * m - 1), -1: m})
