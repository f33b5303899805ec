"""The eleven acceptance criteria, one test each.

Every test prints a PASS/FAIL line and records it for the terminal summary.
Runtime limits are measured on the body of each test.
"""
import itertools
import time
from math import factorial

from conftest import system
from coxbruhat import symgroup as sg
from coxbruhat.bruhat import bruhat_leq, bruhat_leq_oracle
from coxbruhat.core import GenSubset, all_subsets, build_system, coxeter_matrix
from coxbruhat.parabolic import (
    cross_section,
    decompose_double,
    max_rep,
    min_coset_reps,
    parabolic_components_right,
    parabolic_subgroup,
    relative_longest,
    theorem1_compare,
)

ORDER_SCOPE = ["A2", "A3", "B3", "I2(5)", "I2(7)", "A4", "H3"]


def x_ij(sys, I, J):
    """Double coset minimal representatives by the descent filter."""
    return [
        w for w in sys.enumerate_elements() if not (w.left_descents() & I) and not (w.right_descents() & J)
    ]


def subset_pairs(rank):
    return list(itertools.product(all_subsets(rank), repeat=2))


def reducible(*blocks):
    """Block-diagonal Coxeter matrix; distinct blocks commute (m = 2)."""
    mats = [coxeter_matrix(f, n) for f, n in blocks]
    size = sum(len(m) for m in mats)
    out = [[2] * size for _ in range(size)]
    start = 0
    for m in mats:
        for i, row in enumerate(m):
            out[start + i][start : start + len(m)] = row
        start += len(m)
    for i in range(size):
        out[i][i] = 1
    return out


# every finite Coxeter system with |W| <= 120 up to rank 4, plus dihedral groups
SMALL_SYSTEMS = {
    "A1": "A1",
    "A2": "A2",
    "A3": "A3",
    "A4": "A4",
    "B2": "B2",
    "B3": "B3",
    "G2": "G2",
    "H3": "H3",
    **{f"I2({m})": f"I2({m})" for m in (5, 7, 8, 9, 10, 12, 30, 60)},
    "A1xA1": reducible(("A", 1), ("A", 1)),
    "A1xA2": reducible(("A", 1), ("A", 2)),
    "A1xA1xA1": reducible(("A", 1), ("A", 1), ("A", 1)),
    "A2xA2": reducible(("A", 2), ("A", 2)),
    "A1xA3": reducible(("A", 1), ("A", 3)),
    "A1xB3": reducible(("A", 1), ("B", 3)),
    "A1xA1xA2": reducible(("A", 1), ("A", 1), ("A", 2)),
    "A1xB2": reducible(("A", 1), ("B", 2)),
    "B2xB2": reducible(("B", 2), ("B", 2)),
    "A1xA1xA1xA1": reducible(("A", 1), ("A", 1), ("A", 1), ("A", 1)),
}


def test_criterion_01_worked_example(report):
    start = time.perf_counter()
    failures = []
    n = 7
    I, J = GenSubset.one_based([1, 2, 4, 6]), GenSubset.one_based([1, 3, 4, 5])
    u, v = sg.Permutation.parse("1342567"), sg.Permutation.parse("3471526")
    expect = [
        (str(sg.blocks_from_subset(n, I)), "123|45|67"),
        (str(sg.blocks_from_subset(n, J)), "12|3456|7"),
        (sg.coset_matrix(u, I, J).tolist(), [[1, 2, 0], [1, 1, 0], [0, 1, 1]]),
        (sg.coset_matrix(v, I, J).tolist(), [[0, 2, 1], [1, 1, 0], [1, 1, 0]]),
        (sg.coset_dominance(u, I, J).tolist(), [[1, 3, 3], [2, 5, 5], [2, 6, 7]]),
        (sg.coset_dominance(v, I, J).tolist(), [[0, 2, 3], [1, 4, 5], [2, 6, 7]]),
        (sg.coset_dominance_leq(u, v, I, J), True),
    ]
    S7 = build_system("A6")
    gu, gv = sg.to_generic(S7, u), sg.to_generic(S7, v)
    expect.append((theorem1_compare(S7, gu, gv, I, J), (True, True)))
    failures = [(got, want) for got, want in expect if got != want]
    elapsed = time.perf_counter() - start
    assert report(1, "worked S7 example reproduced exactly", failures, elapsed, 1)


def test_criterion_02_max_rep_order(report):
    start = time.perf_counter()
    failures = []
    for name in ORDER_SCOPE:
        sys = system(name)
        for I, J in subset_pairs(sys.rank):
            X = x_ij(sys, I, J)
            top = {b: max_rep(sys, b, I, J) for b in X}
            for u, v in itertools.product(X, repeat=2):
                if bruhat_leq(sys, u, v) != bruhat_leq(sys, top[u], top[v]):
                    failures.append((name, I, J, u, v))
    elapsed = time.perf_counter() - start
    assert report(2, "u <= v iff u^max <= v^max on " + ", ".join(ORDER_SCOPE), failures, elapsed, 300)


def test_criterion_03_curtis_max_rep(report):
    start = time.perf_counter()
    failures = []
    for label, spec in SMALL_SYSTEMS.items():
        sys = build_system(spec)
        assert sys.order <= 120, label
        for I, J in subset_pairs(sys.rank):
            WI, WJ = parabolic_subgroup(sys, I), parabolic_subgroup(sys, J)
            lI, lJ = sys.longest_element(I).length, sys.longest_element(J).length
            for b in x_ij(sys, I, J):
                coset = {x * b * y for x in WI for y in WJ}
                bmax = max_rep(sys, b, I, J)
                K = cross_section(sys, b, I, J)
                hi = max(x.length for x in coset)
                lo = min(x.length for x in coset)
                ok = (
                    [x for x in coset if x.length == hi] == [bmax]
                    and [x for x in coset if x.length == lo] == [b]
                    and all(bruhat_leq(sys, x, bmax) and bruhat_leq(sys, b, x) for x in coset)
                    and bmax.length == lI - sys.longest_element(K).length + b.length + lJ
                )
                if not ok:
                    failures.append((label, I, J, b))
    elapsed = time.perf_counter() - start
    assert report(3, f"b^max unique maximum on {len(SMALL_SYSTEMS)} systems with |W| <= 120", failures, elapsed, 120)


def test_criterion_04_oracle_equivalence(report):
    start = time.perf_counter()
    failures = []
    counted = 0
    for name in ("A3", "B3"):
        sys = system(name)
        for u, v in itertools.product(sys.enumerate_elements(), repeat=2):
            counted += 1
            if bruhat_leq(sys, u, v) != bruhat_leq_oracle(sys, u, v):
                failures.append((name, u, v))
    assert counted == 576 + 2304
    elapsed = time.perf_counter() - start
    assert report(4, "recursion matches subword oracle on A3 and B3 (2880 pairs)", failures, elapsed, 60)


def test_criterion_05_dominance_criterion(report):
    start = time.perf_counter()
    failures = []
    for n in (4, 5):
        sys = system(f"A{n - 1}")
        perms = [sg.Permutation(p) for p in itertools.permutations(range(1, n + 1))]
        gen = {w: sg.to_generic(sys, w) for w in perms}
        for u, v in itertools.product(perms, repeat=2):
            if sg.dominance_leq(u, v) != bruhat_leq(sys, gen[u], gen[v]):
                failures.append((u, v))
    elapsed = time.perf_counter() - start
    assert report(5, "D(u) >= D(v) iff u <= v for S4 and S5", failures, elapsed, 120)


def test_criterion_06_coset_dominance(report):
    start = time.perf_counter()
    failures = []
    for n in (2, 3, 4, 5):
        sys = system(f"A{n - 1}")
        for I, J in subset_pairs(n - 1):
            X = x_ij(sys, I, J)
            perm = {b: sg.from_generic(sys, b) for b in X}
            top = {b: max_rep(sys, b, I, J) for b in X}
            for u, v in itertools.product(X, repeat=2):
                verdicts = (
                    sg.coset_dominance_leq(perm[u], perm[v], I, J),
                    bruhat_leq(sys, u, v),
                    bruhat_leq(sys, top[u], top[v]),
                )
                if len(set(verdicts)) != 1:
                    failures.append((n, I, J, perm[u], perm[v], verdicts))
    elapsed = time.perf_counter() - start
    assert report(6, "D^{I,J} comparison = Bruhat = max-rep comparison for n <= 5", failures, elapsed, 180)


def test_criterion_07_triple_decomposition(report):
    start = time.perf_counter()
    failures = []
    for name in ("A3", "B3"):
        sys = system(name)
        for I, J in subset_pairs(sys.rank):
            WI = set(parabolic_subgroup(sys, I))
            WJ = set(parabolic_subgroup(sys, J))
            X = set(x_ij(sys, I, J))
            images = set()
            for w in sys.enumerate_elements():
                a, b, wJ = (t := decompose_double(sys, w, I, J)).a, t.b, t.wJ
                K = cross_section(sys, b, I, J)
                ok = (
                    b in X
                    and a in WI
                    and not (a.right_descents() & K)
                    and wJ in WJ
                    and a * b * wJ == w
                    and a * b == parabolic_components_right(sys, w, J)[0]
                    and w.length == a.length + b.length + wJ.length
                )
                if not ok:
                    failures.append((name, I, J, w))
                images.add((a, b, wJ))
            if len(images) != sys.order:
                failures.append((name, I, J, "not injective"))
    elapsed = time.perf_counter() - start
    assert report(7, "triple decomposition valid and injective on A3, B3", failures, elapsed, 60)


def test_criterion_08_lemma1(report):
    start = time.perf_counter()
    failures = []
    for name in ("A3", "B3", "I2(6)"):
        sys = system(name)
        for I, J in subset_pairs(sys.rank):
            X = x_ij(sys, I, J)
            WI = parabolic_subgroup(sys, I)
            K = {b: cross_section(sys, b, I, J) for b in X}
            bound = {v: relative_longest(sys, I, K[v]) * v for v in X}
            for u, v in itertools.product(X, repeat=2):
                if not bruhat_leq(sys, u, v):
                    continue
                for a in WI:
                    if a.right_descents() & K[u]:
                        continue
                    if not bruhat_leq(sys, a * u, bound[v]):
                        failures.append((name, I, J, a, u, v))
    elapsed = time.perf_counter() - start
    assert report(8, "a u <= w_{0,I}^K v on A3, B3, I2(6)", failures, elapsed, 120)


def test_criterion_09_deodhar(report):
    start = time.perf_counter()
    failures = []
    for name in ("A3", "B3"):
        sys = system(name)
        gens = sys.generators()
        for K in all_subsets(sys.rank):
            WK = set(min_coset_reps(sys, K))
            for x in WK:
                for s in range(sys.rank):
                    sx = gens[s] * x
                    if sx.length < x.length:
                        ok = sx in WK
                    else:
                        ok = sx in WK or any(sx == x * gens[r] for r in K)
                    if not ok:
                        failures.append((name, K, s, x))
    elapsed = time.perf_counter() - start
    assert report(9, "Deodhar dichotomy on A3, B3", failures, elapsed, 60)


def test_criterion_10_proof_identity(report):
    start = time.perf_counter()
    failures = []
    for name in ("A3", "B3"):
        sys = system(name)
        for I, J in subset_pairs(sys.rank):
            for b in x_ij(sys, I, J):
                head = parabolic_components_right(sys, max_rep(sys, b, I, J), J)[0]
                if parabolic_components_right(sys, ~head, I)[0] != ~b:
                    failures.append((name, I, J, b))
    elapsed = time.perf_counter() - start
    assert report(10, "(((b^max)^J)^-1)^I = b^-1 on A3, B3", failures, elapsed, 60)


def test_criterion_11_structural_counts(report):
    start = time.perf_counter()
    expected = {f"A{n}": (n * (n + 1) // 2, factorial(n + 1)) for n in range(1, 6)}
    expected.update({"B3": (9, 48), "H3": (15, 120)})
    expected.update({f"I2({m})": (m, 2 * m) for m in range(2, 13)})
    failures = []
    for name, (roots, order) in expected.items():
        sys = build_system(name)
        got = (sys.n_positive, sys.order, sys.w0.length)
        if got != (roots, order, roots):
            failures.append((name, got, (roots, order, roots)))
    elapsed = time.perf_counter() - start
    assert report(11, "root counts, orders and l(w0)", failures, elapsed, 60)
