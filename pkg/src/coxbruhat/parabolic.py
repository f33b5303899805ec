"""Parabolic components, minimal and maximal double coset representatives."""

from __future__ import annotations

from dataclasses import dataclass

from .bruhat import bruhat_leq
from .core import CoxeterSystem, Element, GenSubset
from .errors import InternalInconsistency, NotASubset, NotMinimalRep, TheoremViolation


@dataclass(frozen=True)
class CosetTriple:
    """``w = a * b * wJ`` with ``b`` in X_IJ and ``a`` in W_I^K, K = I ∩ bJb^-1."""

    a: Element
    b: Element
    wJ: Element


@dataclass(frozen=True)
class DoubleCosetRecord:
    I: GenSubset
    J: GenSubset
    b: Element
    b_max: Element
    cross_section: GenSubset
    coset_size: int


def parabolic_components_right(sys: CoxeterSystem, w: Element, I) -> tuple[Element, Element]:
    """Return ``(w^I, w_I)`` with ``w = w^I * w_I`` and ``w^I`` free of right I-descents."""
    sys._own(w)
    I = sys._check_subset(I)
    head, tail = w, sys.identity()
    while True:
        i = next((i for i in I if head.is_right_descent(i)), None)
        if i is None:
            return head, tail
        head = sys.rmul(head, i)
        tail = sys.lmul(i, tail)


def parabolic_components_left(sys: CoxeterSystem, w: Element, I) -> tuple[Element, Element]:
    """Return ``(w_I, {}^I w)`` with ``w = w_I * {}^I w`` (mirror of the right version)."""
    sys._own(w)
    I = sys._check_subset(I)
    head, tail = sys.identity(), w
    while True:
        i = next((i for i in I if tail.is_left_descent(i)), None)
        if i is None:
            return head, tail
        tail = sys.lmul(i, tail)
        head = sys.rmul(head, i)


def in_parabolic(sys: CoxeterSystem, w: Element, I) -> bool:
    return parabolic_components_right(sys, w, I)[0].is_identity()


def _no_right_descent(w: Element, subset: GenSubset) -> bool:
    return not any(w.is_right_descent(i) for i in subset)


def _no_left_descent(w: Element, subset: GenSubset) -> bool:
    return not any(w.is_left_descent(i) for i in subset)


def min_coset_reps(sys: CoxeterSystem, I) -> list[Element]:
    I = sys._check_subset(I)
    return [w for w in sys.enumerate_elements() if _no_right_descent(w, I)]


def is_min_double_rep(sys: CoxeterSystem, b: Element, I, J) -> bool:
    I, J = sys._check_subset(I), sys._check_subset(J)
    return _no_left_descent(sys._own(b), I) and _no_right_descent(b, J)


def double_coset_min_reps(sys: CoxeterSystem, I, J) -> list[Element]:
    I, J = sys._check_subset(I), sys._check_subset(J)
    return [
        w for w in sys.enumerate_elements() if _no_left_descent(w, I) and _no_right_descent(w, J)
    ]


def min_double_rep(sys: CoxeterSystem, w: Element, I, J) -> Element:
    """Unique minimum of ``W_I w W_J``, by stripping left I- and right J-descents."""
    sys._own(w)
    I, J = sys._check_subset(I), sys._check_subset(J)
    while True:
        i = next((i for i in I if w.is_left_descent(i)), None)
        if i is not None:
            w = sys.lmul(i, w)
            continue
        j = next((j for j in J if w.is_right_descent(j)), None)
        if j is None:
            return w
        w = sys.rmul(w, j)


def _require_min_rep(sys, b, I, J):
    if not is_min_double_rep(sys, b, I, J):
        raise NotMinimalRep(f"{b!r} is not a minimal ({I}, {J}) double coset representative")


def cross_section(sys: CoxeterSystem, b: Element, I, J) -> GenSubset:
    """Generators r in I with ``r = b s b^-1`` for some s in J."""
    I, J = sys._check_subset(I), sys._check_subset(J)
    _require_min_rep(sys, b, I, J)
    binv = sys.inverse(b)
    conjugates = {sys.multiply(sys.rmul(b, s), binv).perm for s in J}
    return GenSubset.from_indices(r for r in I if sys.gen_action[r] in conjugates)


def relative_longest(sys: CoxeterSystem, I, K) -> Element:
    """Longest element of W_I^K, namely ``w_{0,I} * w_{0,K}``."""
    I, K = sys._check_subset(I), sys._check_subset(K)
    if not K.issubset(I):
        raise NotASubset(f"{K} is not contained in {I}")
    return sys.multiply(sys.longest_element(I), sys.longest_element(K))


def max_rep(sys: CoxeterSystem, b: Element, I, J) -> Element:
    """Maximal element of ``W_I b W_J`` for a minimal representative ``b``."""
    K = cross_section(sys, b, I, J)
    left = relative_longest(sys, I, K)
    return sys.multiply(sys.multiply(left, b), sys.longest_element(J))


def decompose_double(sys: CoxeterSystem, w: Element, I, J) -> CosetTriple:
    """Split ``w`` as ``a * b * wJ`` (length additive)."""
    I, J = sys._check_subset(I), sys._check_subset(J)
    wmin, wJ = parabolic_components_right(sys, w, J)
    b = min_double_rep(sys, w, I, J)
    a = sys.multiply(wmin, sys.inverse(b))
    K = cross_section(sys, b, I, J)
    if not in_parabolic(sys, a, I) or not _no_right_descent(a, K):
        raise InternalInconsistency(f"left factor of {w!r} is not in W_I^K")
    if a.length + b.length + wJ.length != w.length:
        raise InternalInconsistency(f"decomposition of {w!r} is not length additive")
    return CosetTriple(a, b, wJ)


def parabolic_subgroup(sys: CoxeterSystem, I) -> list[Element]:
    """All elements of W_I ordered by (length, canonical word)."""
    I = sys._check_subset(I)
    seen = {sys.identity().perm: sys.identity()}
    frontier = list(seen.values())
    while frontier:
        nxt = []
        for w in frontier:
            for i in I:
                x = sys.rmul(w, i)
                if x.perm not in seen:
                    seen[x.perm] = x
                    nxt.append(x)
        frontier = nxt
    return sorted(seen.values(), key=sys.sort_key)


def relative_min_reps(sys: CoxeterSystem, I, K) -> list[Element]:
    """W_I^K: elements of W_I without right descents in K."""
    K = sys._check_subset(K)
    return [a for a in parabolic_subgroup(sys, I) if _no_right_descent(a, K)]


def double_coset_elements(sys: CoxeterSystem, b: Element, I, J) -> list[Element]:
    """Every product ``x * b * y`` with x in W_I and y in W_J, without repeats."""
    sys._own(b)
    left = parabolic_subgroup(sys, I)
    right = parabolic_subgroup(sys, J)
    found = {}
    for x in left:
        xb = sys.multiply(x, b)
        for y in right:
            z = sys.multiply(xb, y)
            found.setdefault(z.perm, z)
    return sorted(found.values(), key=sys.sort_key)


def double_coset_records(sys: CoxeterSystem, I, J) -> list[DoubleCosetRecord]:
    I, J = sys._check_subset(I), sys._check_subset(J)
    size_WI = len(parabolic_subgroup(sys, I))
    size_WJ = len(parabolic_subgroup(sys, J))
    records = []
    for b in double_coset_min_reps(sys, I, J):
        K = cross_section(sys, b, I, J)
        # |W_I b W_J| = |W_I| |W_J| / |W_K|
        size = size_WI * size_WJ // len(parabolic_subgroup(sys, K))
        records.append(DoubleCosetRecord(I, J, b, max_rep(sys, b, I, J), K, size))
    return records


def theorem1_compare(sys: CoxeterSystem, u: Element, v: Element, I, J) -> tuple[bool, bool]:
    """Compare ``u <= v`` and ``u^max <= v^max``; raise if the verdicts differ."""
    I, J = sys._check_subset(I), sys._check_subset(J)
    _require_min_rep(sys, u, I, J)
    _require_min_rep(sys, v, I, J)
    leq_min = bruhat_leq(sys, u, v)
    leq_max = bruhat_leq(sys, max_rep(sys, u, I, J), max_rep(sys, v, I, J))
    if leq_min != leq_max:
        raise TheoremViolation(f"u={u!r}, v={v!r}, I={I}, J={J}: min {leq_min}, max {leq_max}")
    return leq_min, leq_max
