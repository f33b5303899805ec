"""Symmetric group in one-line notation, dominance matrices and coset matrices.

Products compose left to right: ``(u * v)(k) = v(u(k))``. Under this
convention ``s_i * w`` swaps the entries in positions i, i+1 and
``w * s_i`` swaps the values i, i+1, so left descents are position
descents and right descents are value descents. Rows of coset matrices
are indexed by I-blocks of positions and columns by J-blocks of values.

Generator subsets use the same 0-based indices as the generic engine:
index h stands for the adjacent transposition ``s_{h+1}`` of positions
(or values) ``h+1`` and ``h+2``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from .core import CoxeterSystem, Element, GenSubset, as_subset, build_system, coxeter_matrix
from .errors import DegreeMismatch, NotMinimalRep, SystemMismatch


@dataclass(frozen=True)
class Permutation:
    one_line: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "one_line", tuple(int(x) for x in self.one_line))
        if sorted(self.one_line) != list(range(1, len(self.one_line) + 1)):
            raise ValueError(f"{self.one_line} is not a permutation of 1..{len(self.one_line)}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, n: int, i: int) -> "Permutation":
        """Adjacent transposition for generator index i (swaps i+1 and i+2)."""
        w = list(range(1, n + 1))
        w[i], w[i + 1] = w[i + 1], w[i]
        return cls(tuple(w))

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        """Digit string for n <= 9 ("3471526") or comma separated integers."""
        text = text.strip()
        if "," in text:
            return cls(tuple(int(x) for x in text.split(",")))
        if not text.isdigit():
            raise ValueError(f"cannot parse one-line notation {text!r}")
        return cls(tuple(int(c) for c in text))

    @property
    def n(self) -> int:
        return len(self.one_line)

    def __str__(self) -> str:
        if self.n <= 9:
            return "".join(map(str, self.one_line))
        return ",".join(map(str, self.one_line))

    def __getitem__(self, k: int) -> int:
        """Value at 1-based position k."""
        return self.one_line[k - 1]

    def positions(self) -> tuple[int, ...]:
        """One-line notation of the inverse: 1-based position of each value."""
        pos = [0] * self.n
        for k, value in enumerate(self.one_line, start=1):
            pos[value - 1] = k
        return tuple(pos)

    def inverse(self) -> "Permutation":
        return Permutation(self.positions())

    def __mul__(self, other: "Permutation") -> "Permutation":
        _same_degree(self, other)
        return Permutation(tuple(other.one_line[x - 1] for x in self.one_line))

    def length(self) -> int:
        w = self.one_line
        return sum(1 for i in range(self.n) for j in range(i + 1, self.n) if w[i] > w[j])

    def left_descents(self) -> GenSubset:
        w = self.one_line
        return GenSubset.from_indices(i for i in range(self.n - 1) if w[i] > w[i + 1])

    def right_descents(self) -> GenSubset:
        pos = self.positions()
        return GenSubset.from_indices(i for i in range(self.n - 1) if pos[i] > pos[i + 1])

    @classmethod
    def from_word(cls, n: int, word: Sequence[int]) -> "Permutation":
        w = list(range(1, n + 1))
        for i in word:
            # right multiplication by s_i swaps the values i+1, i+2
            a, b = w.index(i + 1), w.index(i + 2)
            w[a], w[b] = w[b], w[a]
        return cls(tuple(w))

    def word(self) -> tuple[int, ...]:
        """Lexicographically least reduced word, stripping position descents."""
        w = list(self.one_line)
        letters = []
        while True:
            i = next((i for i in range(self.n - 1) if w[i] > w[i + 1]), None)
            if i is None:
                return tuple(letters)
            letters.append(i)
            w[i], w[i + 1] = w[i + 1], w[i]


def _same_degree(u: Permutation, v: Permutation):
    if u.n != v.n:
        raise DegreeMismatch(f"degrees {u.n} and {v.n} differ")


@dataclass(frozen=True)
class BlockPartition:
    n: int
    blocks: tuple[tuple[int, ...], ...]

    @property
    def boundaries(self) -> tuple[int, ...]:
        """Last element of each block: the positions i in [n] with s_i not in H."""
        return tuple(block[-1] for block in self.blocks)

    def sizes(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.blocks)

    def block_of(self) -> list[int]:
        """0-based block index for each of 1..n (entry 0 unused)."""
        lookup = [0] * (self.n + 1)
        for idx, block in enumerate(self.blocks):
            for k in block:
                lookup[k] = idx
        return lookup

    def __str__(self) -> str:
        return "|".join("".join(map(str, b)) if self.n <= 9 else ",".join(map(str, b)) for b in self.blocks)


def blocks_from_subset(n: int, H) -> BlockPartition:
    H = as_subset(H)
    if H.max_index() >= n - 1:
        raise ValueError(f"{H} is not a subset of the {n - 1} generators of S_{n}")
    blocks, current = [], [1]
    for k in range(1, n):
        if (k - 1) in H:
            current.append(k + 1)
        else:
            blocks.append(tuple(current))
            current = [k + 1]
    blocks.append(tuple(current))
    return BlockPartition(n, tuple(blocks))


def perm_matrix(w: Permutation) -> np.ndarray:
    m = np.zeros((w.n, w.n), dtype=np.int64)
    for i, value in enumerate(w.one_line):
        m[i, value - 1] = 1
    return m


def prefix_sums(m: np.ndarray) -> np.ndarray:
    return m.cumsum(axis=0).cumsum(axis=1)


def _frozen(m: np.ndarray) -> np.ndarray:
    m.setflags(write=False)
    return m


@lru_cache(maxsize=1 << 16)
def dominance(w: Permutation) -> np.ndarray:
    """Prefix sums of the permutation matrix (read-only array)."""
    return _frozen(prefix_sums(perm_matrix(w)))


def coset_matrix(w: Permutation, I, J) -> np.ndarray:
    return _coset_matrix(w, as_subset(I), as_subset(J))


@lru_cache(maxsize=1 << 16)
def _coset_matrix(w: Permutation, I: GenSubset, J: GenSubset) -> np.ndarray:
    rows = blocks_from_subset(w.n, I)
    cols = blocks_from_subset(w.n, J)
    col_of = cols.block_of()
    m = np.zeros((len(rows.blocks), len(cols.blocks)), dtype=np.int64)
    for i, block in enumerate(rows.blocks):
        for k in block:
            m[i, col_of[w[k]]] += 1
    return _frozen(m)


def coset_dominance(w: Permutation, I, J) -> np.ndarray:
    return _coset_dominance(w, as_subset(I), as_subset(J))


@lru_cache(maxsize=1 << 16)
def _coset_dominance(w: Permutation, I: GenSubset, J: GenSubset) -> np.ndarray:
    return _frozen(prefix_sums(_coset_matrix(w, I, J)))


def dominance_leq(u: Permutation, v: Permutation) -> bool:
    """Bruhat comparison via entrywise ``D(u) >= D(v)``."""
    _same_degree(u, v)
    return bool((dominance(u) >= dominance(v)).all())


def is_min_double_rep(w: Permutation, I, J) -> bool:
    I, J = as_subset(I), as_subset(J)
    return not (w.left_descents() & I) and not (w.right_descents() & J)


def coset_dominance_leq(u: Permutation, v: Permutation, I, J) -> bool:
    _same_degree(u, v)
    for w in (u, v):
        if not is_min_double_rep(w, I, J):
            raise NotMinimalRep(f"{w} is not a minimal double coset representative")
    return bool((coset_dominance(u, I, J) >= coset_dominance(v, I, J)).all())


def same_double_coset(u: Permutation, v: Permutation, I, J) -> bool:
    _same_degree(u, v)
    return bool((coset_matrix(u, I, J) == coset_matrix(v, I, J)).all())


# ---------------------------------------------------------------------------
# Bridge to the generic engine


def _check_type_a(sys: CoxeterSystem, n: int):
    if sys.rank != n - 1 or sys.coxeter_matrix != coxeter_matrix("A", sys.rank):
        raise SystemMismatch(f"{sys.name} is not of type A{n - 1}")


def symmetric_system(n: int) -> CoxeterSystem:
    return build_system(f"A{n - 1}")


def to_generic(sys: CoxeterSystem, w: Permutation) -> Element:
    _check_type_a(sys, w.n)
    return sys.element_from_word(w.word())


def from_generic(sys: CoxeterSystem, x: Element) -> Permutation:
    sys._own(x)
    _check_type_a(sys, sys.rank + 1)
    return Permutation.from_word(sys.rank + 1, sys.canonical_word(x))
