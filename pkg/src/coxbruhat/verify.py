"""Exhaustive and sampled invariant sweeps over small Coxeter systems.

Each property function takes a system plus the list of (I, J) pairs in
scope and returns a ``PropertyResult``. ``run_suite`` runs every property
that applies to a system; results come back in a fixed order.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from math import factorial
from typing import Callable, Iterable

import numpy as np

from . import symgroup as sg
from .bruhat import bruhat_leq, bruhat_leq_oracle
from .core import CoxeterSystem, all_subsets, build_system, coxeter_matrix
from .errors import CoxeterError
from .parabolic import (
    cross_section,
    decompose_double,
    double_coset_elements,
    double_coset_min_reps,
    max_rep,
    min_coset_reps,
    min_double_rep,
    parabolic_components_right,
    relative_longest,
    relative_min_reps,
)

DEFAULT_SCOPE = ("A2", "A3", "B3", "I2(5)", "I2(7)", "A4", "H3")
SAMPLED_PAIRS = 200
DEFAULT_SEED = 20061
ORACLE_ORDER_LIMIT = 48
TRIPLE_SAMPLES = 20_000


@dataclass
class PropertyResult:
    system: str
    name: str
    checked: int = 0
    failed: int = 0
    examples: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def check(self, condition: bool, detail) -> None:
        """Count one check; ``detail`` (raw objects, formatted lazily) is kept on failure."""
        self.checked += 1
        if not condition:
            self.failed += 1
            if len(self.examples) < 5:
                self.examples.append(detail)


def subset_pairs(rank: int, sampled: bool = False, seed: int = DEFAULT_SEED, count: int = SAMPLED_PAIRS):
    pairs = [(I, J) for I in all_subsets(rank) for J in all_subsets(rank)]
    if not sampled:
        return pairs
    rng = random.Random(seed)
    return rng.sample(pairs, min(count, len(pairs)))


# ---------------------------------------------------------------------------
# coxeter-core


KNOWN_COUNTS = {
    # family: (positive roots, order) as functions of the rank
    "A": (lambda n: n * (n + 1) // 2, lambda n: factorial(n + 1)),
    "B": (lambda n: n * n, lambda n: 2**n * factorial(n)),
    "D": (lambda n: n * (n - 1), lambda n: 2 ** (n - 1) * factorial(n)),
}
KNOWN_FIXED = {"H3": (15, 120), "H4": (60, 14400), "F4": (24, 1152), "E6": (36, 51840)}


def expected_counts(name: str) -> tuple[int, int] | None:
    if name in KNOWN_FIXED:
        return KNOWN_FIXED[name]
    if name.startswith("I2("):
        m = int(name[3:-1])
        return m, 2 * m
    if name == "G2":
        return 6, 12
    family, rank = name[0], name[1:]
    if family in KNOWN_COUNTS and rank.isdigit():
        roots, order = KNOWN_COUNTS[family]
        return roots(int(rank)), order(int(rank))
    return None


def check_structure(sys: CoxeterSystem) -> PropertyResult:
    res = PropertyResult(sys.name, "structure")
    elems = sys.enumerate_elements()
    expected = expected_counts(sys.name)
    if expected is not None:
        res.check((sys.n_positive, len(elems)) == expected, ("counts", sys.n_positive, len(elems)))
    res.check(sys.w0.length == sys.n_positive, ("w0 length", sys.w0.length))
    res.check(len(sys.roots) == 2 * sys.n_positive, ("root count", len(sys.roots)))
    res.check(len({x.perm for x in elems}) == len(elems), "duplicate elements")
    for x in elems:
        word = sys.canonical_word(x)
        res.check(len(word) == x.length and sys.element_from_word(word) == x, ("word", x))
        res.check(sys.inverse(x).length == x.length, ("inverse length", x))
    return res


def check_length_laws(sys: CoxeterSystem, rng: random.Random) -> PropertyResult:
    res = PropertyResult(sys.name, "length subadditivity and parity")
    elems = sys.enumerate_elements()
    pairs = itertools.product(elems, repeat=2) if len(elems) <= 120 else (
        (rng.choice(elems), rng.choice(elems)) for _ in range(TRIPLE_SAMPLES)
    )
    for x, y in pairs:
        lxy = sys.multiply(x, y).length
        res.check(lxy <= x.length + y.length and (lxy - x.length - y.length) % 2 == 0, (x, y))
    return res


# ---------------------------------------------------------------------------
# bruhat


def check_oracle(sys: CoxeterSystem) -> PropertyResult:
    res = PropertyResult(sys.name, "bruhat_leq = subword oracle")
    elems = sys.enumerate_elements()
    for v in elems:
        for u in elems:
            res.check(bruhat_leq(sys, u, v) == bruhat_leq_oracle(sys, u, v), (u, v))
    return res


def check_order_laws(sys: CoxeterSystem, rng: random.Random) -> PropertyResult:
    res = PropertyResult(sys.name, "partial order laws, inverse automorphism, extrema")
    elems = sys.enumerate_elements()
    e, w0 = sys.identity(), sys.w0
    for u in elems:
        res.check(bruhat_leq(sys, u, u), ("reflexive", u))
        res.check(bruhat_leq(sys, e, u) and bruhat_leq(sys, u, w0), ("extrema", u))
        for v in elems:
            leq = bruhat_leq(sys, u, v)
            if leq:
                res.check(u.length <= v.length, ("monotone length", u, v))
                if u != v:
                    res.check(not bruhat_leq(sys, v, u), ("antisymmetry", u, v))
            res.check(leq == bruhat_leq(sys, sys.inverse(u), sys.inverse(v)), ("inverse", u, v))
    for _ in range(TRIPLE_SAMPLES // 4):
        x, y, z = rng.choice(elems), rng.choice(elems), rng.choice(elems)
        if bruhat_leq(sys, x, y) and bruhat_leq(sys, y, z):
            res.check(bruhat_leq(sys, x, z), ("transitive", x, y, z))
    return res


def check_length_additive_translation(sys: CoxeterSystem, rng: random.Random) -> PropertyResult:
    """w <= g iff wx <= gx whenever both products are length additive."""
    res = PropertyResult(sys.name, "length-additive translation")
    elems = sys.enumerate_elements()
    if len(elems) <= ORACLE_ORDER_LIMIT:
        triples = itertools.product(elems, repeat=3)
    else:
        triples = ((rng.choice(elems), rng.choice(elems), rng.choice(elems)) for _ in range(TRIPLE_SAMPLES))
    for w, g, x in triples:
        wx, gx = sys.multiply(w, x), sys.multiply(g, x)
        if wx.length == w.length + x.length and gx.length == g.length + x.length:
            res.check(bruhat_leq(sys, w, g) == bruhat_leq(sys, wx, gx), (w, g, x))
    return res


def check_projection_monotone(sys: CoxeterSystem) -> PropertyResult:
    res = PropertyResult(sys.name, "projection to W^J monotone")
    elems = sys.enumerate_elements()
    for I in all_subsets(sys.rank):
        proj = {x: parabolic_components_right(sys, x, I)[0] for x in elems}
        for w in elems:
            for g in elems:
                if bruhat_leq(sys, w, g):
                    res.check(bruhat_leq(sys, proj[w], proj[g]), (I, w, g))
    return res


# ---------------------------------------------------------------------------
# parabolic


def check_double_coset_partition(sys: CoxeterSystem, pairs) -> PropertyResult:
    """W^J is the disjoint union of W_I^{K_b} b over b in X_IJ, length additively."""
    res = PropertyResult(sys.name, "W^J partition by X_IJ")
    for I, J in pairs:
        target = {x.perm for x in min_coset_reps(sys, J)}
        seen = set()
        disjoint = True
        for b in double_coset_min_reps(sys, I, J):
            K = cross_section(sys, b, I, J)
            for a in relative_min_reps(sys, I, K):
                ab = sys.multiply(a, b)
                res.check(ab.length == a.length + b.length, ("additive", I, J, a, b))
                disjoint &= ab.perm not in seen
                seen.add(ab.perm)
        res.check(disjoint and seen == target, ("partition", I, J))
    return res


def check_decomposition(sys: CoxeterSystem, pairs) -> PropertyResult:
    res = PropertyResult(sys.name, "triple decomposition")
    elems = sys.enumerate_elements()
    for I, J in pairs:
        images = set()
        for w in elems:
            try:
                t = decompose_double(sys, w, I, J)
            except CoxeterError as exc:
                res.check(False, ("raised", I, J, w, str(exc)))
                continue
            rebuilt = sys.multiply(sys.multiply(t.a, t.b), t.wJ)
            ok = (
                rebuilt == w
                and w.length == t.a.length + t.b.length + t.wJ.length
                and sys.multiply(t.a, t.b) == parabolic_components_right(sys, w, J)[0]
            )
            res.check(ok, ("triple", I, J, w))
            images.add((t.a.perm, t.b.perm, t.wJ.perm))
        res.check(len(images) == len(elems), ("injective", I, J))
    return res


def check_curtis(sys: CoxeterSystem, pairs, max_rep_fn: Callable | None = None) -> PropertyResult:
    res = PropertyResult(sys.name, "b^max unique maximum, b unique minimum")
    max_rep_fn = max_rep_fn or max_rep
    for I, J in pairs:
        lI = sys.longest_element(I).length
        lJ = sys.longest_element(J).length
        for b in double_coset_min_reps(sys, I, J):
            coset = double_coset_elements(sys, b, I, J)
            bmax = max_rep_fn(sys, b, I, J)
            K = cross_section(sys, b, I, J)
            top = max(x.length for x in coset)
            longest = [x for x in coset if x.length == top]
            shortest = [x for x in coset if x.length == b.length]
            res.check(longest == [bmax] and shortest == [b], ("extremes", I, J, b))
            res.check(
                bmax.length == lI - sys.longest_element(K).length + b.length + lJ,
                ("length formula", I, J, b),
            )
            res.check(
                all(bruhat_leq(sys, x, bmax) and bruhat_leq(sys, b, x) for x in coset),
                ("dominance", I, J, b),
            )
    return res


def check_lifted_bound(sys: CoxeterSystem, pairs) -> PropertyResult:
    res = PropertyResult(sys.name, "a u <= w_{0,I}^K v bound")
    for I, J in pairs:
        X = double_coset_min_reps(sys, I, J)
        tops = {v: sys.multiply(relative_longest(sys, I, cross_section(sys, v, I, J)), v) for v in X}
        lefts = {u: relative_min_reps(sys, I, cross_section(sys, u, I, J)) for u in X}
        for u in X:
            for v in X:
                if not bruhat_leq(sys, u, v):
                    continue
                for a in lefts[u]:
                    res.check(bruhat_leq(sys, sys.multiply(a, u), tops[v]), (I, J, a, u, v))
    return res


def check_max_rep_order(sys: CoxeterSystem, pairs, max_rep_fn: Callable | None = None) -> PropertyResult:
    res = PropertyResult(sys.name, "u <= v iff u^max <= v^max")
    max_rep_fn = max_rep_fn or max_rep
    for I, J in pairs:
        X = double_coset_min_reps(sys, I, J)
        maxes = {b: max_rep_fn(sys, b, I, J) for b in X}
        for u in X:
            for v in X:
                res.check(
                    bruhat_leq(sys, u, v) == bruhat_leq(sys, maxes[u], maxes[v]),
                    (I, J, u, v),
                )
    return res


def check_proof_identity(sys: CoxeterSystem, pairs, max_rep_fn: Callable | None = None) -> PropertyResult:
    res = PropertyResult(sys.name, "(((b^max)^J)^-1)^I = b^-1")
    max_rep_fn = max_rep_fn or max_rep
    for I, J in pairs:
        for b in double_coset_min_reps(sys, I, J):
            head = parabolic_components_right(sys, max_rep_fn(sys, b, I, J), J)[0]
            back = parabolic_components_right(sys, sys.inverse(head), I)[0]
            res.check(back == sys.inverse(b), (I, J, b))
    return res


def check_deodhar(sys: CoxeterSystem) -> PropertyResult:
    res = PropertyResult(sys.name, "Deodhar's Lemma")
    gens = {g: i for i, g in enumerate(sys.gen_action)}
    for K in all_subsets(sys.rank):
        reps = {x.perm for x in min_coset_reps(sys, K)}
        for x in min_coset_reps(sys, K):
            for s in range(sys.rank):
                sx = sys.lmul(s, x)
                if sx.length < x.length:
                    res.check(sx.perm in reps, ("down", K, s, x))
                else:
                    r = sys.multiply(sys.inverse(x), sx)
                    res.check(sx.perm in reps or gens.get(r.perm, -1) in K, ("up", K, s, x))
    return res


# ---------------------------------------------------------------------------
# symmetric group


def is_type_a(sys: CoxeterSystem) -> bool:
    return sys.coxeter_matrix == coxeter_matrix("A", sys.rank)


def check_symmetric(sys: CoxeterSystem, pairs, rng: random.Random, max_rep_fn: Callable | None = None):
    """Type A only: bridge, dominance criteria and coset matrices."""
    max_rep_fn = max_rep_fn or max_rep
    n = sys.rank + 1
    elems = sys.enumerate_elements()
    perms = {x: sg.from_generic(sys, x) for x in elems}

    bridge = PropertyResult(sys.name, "S_n bridge and descent convention")
    for x, w in perms.items():
        bridge.check(sg.to_generic(sys, w) == x, ("round trip", w))
        bridge.check(
            w.left_descents() == x.left_descents() and w.right_descents() == x.right_descents(),
            ("descents", w),
        )

    dom = PropertyResult(sys.name, "D(u) >= D(v) iff u <= v")
    if len(elems) <= 120:
        compare = itertools.product(elems, repeat=2)
    else:
        compare = ((rng.choice(elems), rng.choice(elems)) for _ in range(TRIPLE_SAMPLES))
    for x, y in compare:
        dom.check(sg.dominance_leq(perms[x], perms[y]) == bruhat_leq(sys, x, y), (perms[x], perms[y]))

    prop = PropertyResult(sys.name, "coset dominance criterion")
    sub = PropertyResult(sys.name, "coset matrices: submatrix, X_IJ and coset tests")
    for I, J in pairs:
        rows = [b - 1 for b in sg.blocks_from_subset(n, I).boundaries]
        cols = [b - 1 for b in sg.blocks_from_subset(n, J).boundaries]
        X = double_coset_min_reps(sys, I, J)
        xset = set(X)
        for x in elems:
            w = perms[x]
            sub.check(
                np.array_equal(sg.coset_dominance(w, I, J), sg.dominance(w)[np.ix_(rows, cols)]),
                ("submatrix", I, J, w),
            )
            sub.check(sg.is_min_double_rep(w, I, J) == (x in xset), ("X_IJ", I, J, w))
            sub.check(
                np.array_equal(sg.coset_matrix(w, I, J), sg.coset_matrix(perms[min_double_rep(sys, x, I, J)], I, J)),
                ("coset invariant", I, J, w),
            )
        maxes = {b: max_rep_fn(sys, b, I, J) for b in X}
        for u in X:
            for v in X:
                verdicts = (
                    sg.coset_dominance_leq(perms[u], perms[v], I, J),
                    bruhat_leq(sys, u, v),
                    bruhat_leq(sys, maxes[u], maxes[v]),
                )
                prop.check(len(set(verdicts)) == 1, (I, J, perms[u], perms[v]))
                if u != v:
                    sub.check(not sg.same_double_coset(perms[u], perms[v], I, J), ("distinct", I, J))
    return [bridge, dom, prop, sub]


# ---------------------------------------------------------------------------


def parse_scope(scope: str | None) -> tuple[list[str], bool]:
    """``"default"``, ``"A5 sampled"``, ``"A3,B3"`` or ``"A3 B3 full"``."""
    if not scope or scope.strip() == "default":
        return list(DEFAULT_SCOPE), False
    tokens = scope.replace(",", " ").split()
    sampled = "sampled" in tokens
    names = [t for t in tokens if t not in ("sampled", "full")]
    if not names or names == ["default"]:
        names = list(DEFAULT_SCOPE)
    return names, sampled


def run_system(
    sys: CoxeterSystem,
    sampled: bool = False,
    seed: int = DEFAULT_SEED,
    max_rep_fn: Callable | None = None,
) -> list[PropertyResult]:
    rng = random.Random(seed)
    pairs = subset_pairs(sys.rank, sampled=sampled, seed=seed)
    results = [check_structure(sys), check_length_laws(sys, rng)]
    order = sys.order
    if order <= ORACLE_ORDER_LIMIT:
        results.append(check_oracle(sys))
    if order <= 720:
        results.append(check_order_laws(sys, rng))
        results.append(check_length_additive_translation(sys, rng))
    if order <= 120:
        results.append(check_projection_monotone(sys))
        results.append(check_deodhar(sys))
    results += [
        check_double_coset_partition(sys, pairs),
        check_decomposition(sys, pairs),
        check_curtis(sys, pairs, max_rep_fn),
        check_lifted_bound(sys, pairs),
        check_max_rep_order(sys, pairs, max_rep_fn),
        check_proof_identity(sys, pairs, max_rep_fn),
    ]
    if is_type_a(sys) and order <= 720:
        results += check_symmetric(sys, pairs, rng, max_rep_fn)
    return results


def run_suite(
    names: Iterable[str],
    sampled: bool = False,
    seed: int = DEFAULT_SEED,
    max_rep_fn: Callable | None = None,
    root_cap: int | None = None,
    elem_cap: int | None = None,
) -> list[PropertyResult]:
    caps = {}
    if root_cap is not None:
        caps["root_cap"] = root_cap
    if elem_cap is not None:
        caps["elem_cap"] = elem_cap
    results = []
    for name in names:
        results += run_system(build_system(name, **caps), sampled=sampled, seed=seed, max_rep_fn=max_rep_fn)
    return results
