"""Bruhat order: lifting-property recursion, subword oracle, covers, subposets."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .core import CoxeterSystem, Element
from .errors import DuplicateElements, OracleTooLarge

ORACLE_MAX_LENGTH = 20


@dataclass(frozen=True)
class CoverList:
    element: Element
    covered_elements: tuple[Element, ...]


def bruhat_leq(sys: CoxeterSystem, u: Element, v: Element) -> bool:
    """Return True iff ``u <= v`` in Bruhat order.

    Peels the smallest left descent s of v each step: if s is also a left
    descent of u both sides drop, otherwise only v does.
    """
    sys._own(u)
    sys._own(v)
    key = (u, v)
    cached = sys.bruhat_cache.get(key)
    if cached is not None:
        return cached
    result = _leq(sys, u, v)
    sys.bruhat_cache[key] = result
    return result


def _leq(sys: CoxeterSystem, u: Element, v: Element) -> bool:
    rank = sys.rank
    while True:
        if u.length > v.length:
            return False
        if u.length == 0 or u == v:
            return True
        if u.length == v.length:
            return False
        s = next(i for i in range(rank) if v.is_left_descent(i))
        if u.is_left_descent(s):
            u = sys.lmul(s, u)
        v = sys.lmul(s, v)


def subword_products(sys: CoxeterSystem, v: Element) -> frozenset[tuple[int, ...]]:
    """Root permutations of every subword of the canonical word of ``v``."""
    word = sys.canonical_word(v)
    if len(word) > ORACLE_MAX_LENGTH:
        raise OracleTooLarge(f"length {len(word)} exceeds oracle guard {ORACLE_MAX_LENGTH}")
    products = {sys.identity().perm}
    for i in word:
        g = sys.gen_action[i]
        products |= {tuple(p[k] for k in g) for p in products}
    return frozenset(products)


def bruhat_leq_oracle(sys: CoxeterSystem, u: Element, v: Element) -> bool:
    """Brute-force Bruhat test by subword deletion. Testing oracle only."""
    sys._own(u)
    sys._own(v)
    return u.perm in subword_products(sys, v)


def covers(sys: CoxeterSystem, v: Element) -> CoverList:
    """Elements covered by ``v``: the ``v*t`` one shorter, t a reflection."""
    sys._own(v)
    found = {}
    for t in sys.reflections():
        u = sys.multiply(v, t)
        if u.length == v.length - 1:
            found[u.perm] = u
    return CoverList(v, tuple(sorted(found.values(), key=sys.sort_key)))


def induced_subposet(sys: CoxeterSystem, elems: Sequence[Element]) -> list[tuple[Element, Element]]:
    """Cover pairs ``(lower, upper)`` of Bruhat order restricted to ``elems``."""
    elems = list(elems)
    if len({sys._own(x).perm for x in elems}) != len(elems):
        raise DuplicateElements("induced_subposet requires distinct elements")
    k = len(elems)
    below = [
        [i != j and bruhat_leq(sys, elems[i], elems[j]) for j in range(k)] for i in range(k)
    ]
    pairs = []
    for i in range(k):
        for j in range(k):
            if below[i][j] and not any(below[i][m] and below[m][j] for m in range(k)):
                pairs.append((elems[i], elems[j]))
    return pairs
