"""Exact arithmetic in the bicyclic monoid ``<p, q | pq = 1>``.

Every element has a unique normal form ``q^a p^b``, stored as the pair
``(a, b)``.
"""

import re
from typing import NamedTuple

from .errors import DomainError, ParseError


class BicyclicElement(NamedTuple):
    a: int  # power of q
    b: int  # power of p

    def __mul__(self, other):
        return bicyclic_mul(self, other)

    def __str__(self):
        return bicyclic_format(self)


ONE = BicyclicElement(0, 0)
P = BicyclicElement(0, 1)
Q = BicyclicElement(1, 0)


def _coerce(x):
    a, b = x
    if isinstance(a, bool) or isinstance(b, bool) or not isinstance(a, int) or not isinstance(b, int):
        raise DomainError(f"bicyclic exponents must be integers, got {x!r}")
    if a < 0 or b < 0:
        raise DomainError(f"bicyclic exponents must be non-negative, got {x!r}")
    return BicyclicElement(a, b)


def bicyclic_mul(x, y):
    """``q^a p^b * q^c p^d``: the inner ``p^b q^c`` cancels down to one letter."""
    a, b = _coerce(x)
    c, d = _coerce(y)
    if b <= c:
        return BicyclicElement(a + c - b, d)
    return BicyclicElement(a, b - c + d)


def bicyclic_inverse(x):
    a, b = _coerce(x)
    return BicyclicElement(b, a)


def bicyclic_is_idempotent(x):
    a, b = _coerce(x)
    return a == b


def bicyclic_product(elements):
    result = ONE
    for x in elements:
        result = bicyclic_mul(result, x)
    return result


def _power(letter, k):
    return letter if k == 1 else f"{letter}^{k}"


def bicyclic_format(x):
    a, b = _coerce(x)
    if a == 0 and b == 0:
        return "1"
    parts = []
    if a:
        parts.append(_power("q", a))
    if b:
        parts.append(_power("p", b))
    return " ".join(parts)


_FACTOR = re.compile(r"(?P<letter>[pq])(?:\^(?P<exp>[0-9]+))?")


def bicyclic_parse(text):
    """Parse ``1``, or ``[q[^a]][ ][p[^b]]`` where a missing exponent means 1.

    ``q^0`` and ``p^0`` are accepted.  Errors report the 0-based character
    position of the offending input.
    """
    s = text.strip()
    offset = len(text) - len(text.lstrip())
    if s == "1":
        return ONE
    if not s:
        raise ParseError("empty bicyclic element", column=offset)
    pos = 0
    exps = {}
    for letter in ("q", "p"):
        m = _FACTOR.match(s, pos)
        if m is None or m.group("letter") != letter:
            continue
        exps[letter] = int(m.group("exp")) if m.group("exp") is not None else 1
        pos = m.end()
        while pos < len(s) and s[pos] == " ":
            pos += 1
    if pos != len(s) or not exps:
        if pos < len(s) and s[pos] in "pq":
            raise ParseError(f"unexpected {s[pos]!r}: expected q-part before p-part", column=offset + pos)
        raise ParseError(f"unexpected character {s[pos:pos + 1]!r}", column=offset + pos)
    return BicyclicElement(exps.get("q", 0), exps.get("p", 0))
