"""Finite Coxeter systems with elements stored as signed root permutations.

A system is built once from its Coxeter matrix: the positive roots are
closed under the simple reflections (floating point, construction only) and
each generator is turned into an exact permutation of the 2N root indices.
Everything downstream works with those integer tables.

Root indexing: positive roots are ``0..N-1`` with simple root ``i`` at index
``i``; the negative of root ``k`` sits at ``k + N``.
"""

from __future__ import annotations

import math
import re
import threading
from dataclasses import dataclass
from itertools import combinations
from pathlib import Path
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import (
    IndexOutOfRange,
    InfiniteOrTooLarge,
    InternalInconsistency,
    InvalidMatrix,
    SystemMismatch,
)

ROOT_CAP = 10_000
ELEMENT_CAP = 1_000_000
TOL = 1e-8
_KEY_DIGITS = 6


class GenSubset:
    """A subset of simple generators, stored as a bitmask over 0-based indices."""

    __slots__ = ("mask",)

    def __init__(self, mask: int = 0):
        if mask < 0:
            raise ValueError("negative mask")
        self.mask = mask

    @classmethod
    def from_indices(cls, indices: Iterable[int]) -> "GenSubset":
        mask = 0
        for i in indices:
            if i < 0:
                raise IndexOutOfRange(f"generator index {i} is negative")
            mask |= 1 << i
        return cls(mask)

    @classmethod
    def one_based(cls, names: Iterable[int]) -> "GenSubset":
        """Build from 1-based names ``s_1, s_2, ...`` given as 1, 2, ..."""
        return cls.from_indices(i - 1 for i in names)

    @classmethod
    def full(cls, rank: int) -> "GenSubset":
        return cls((1 << rank) - 1)

    def __iter__(self) -> Iterator[int]:
        m, i = self.mask, 0
        while m:
            if m & 1:
                yield i
            m >>= 1
            i += 1

    def __contains__(self, i: int) -> bool:
        return i >= 0 and bool(self.mask >> i & 1)

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def __bool__(self) -> bool:
        return self.mask != 0

    def __eq__(self, other) -> bool:
        return isinstance(other, GenSubset) and other.mask == self.mask

    def __hash__(self) -> int:
        return hash(("GenSubset", self.mask))

    def __and__(self, other: "GenSubset") -> "GenSubset":
        return GenSubset(self.mask & other.mask)

    def __or__(self, other: "GenSubset") -> "GenSubset":
        return GenSubset(self.mask | other.mask)

    def issubset(self, other: "GenSubset") -> bool:
        return self.mask & ~other.mask == 0

    def max_index(self) -> int:
        return self.mask.bit_length() - 1

    def to_one_based(self) -> list[int]:
        return [i + 1 for i in self]

    def __repr__(self) -> str:
        return "GenSubset({%s})" % ", ".join(map(str, self))


def as_subset(value) -> GenSubset:
    if isinstance(value, GenSubset):
        return value
    if value is None:
        return GenSubset()
    return GenSubset.from_indices(value)


def all_subsets(rank: int) -> Iterator[GenSubset]:
    for mask in range(1 << rank):
        yield GenSubset(mask)


# ---------------------------------------------------------------------------
# Coxeter matrices


@dataclass(frozen=True)
class CoxeterSpec:
    """A validated Coxeter matrix plus a display name."""

    matrix: tuple[tuple[int, ...], ...]
    name: str

    def __post_init__(self):
        validate_matrix(self.matrix)

    @property
    def rank(self) -> int:
        return len(self.matrix)


def validate_matrix(matrix: Sequence[Sequence[int]]) -> None:
    n = len(matrix)
    if n == 0:
        raise InvalidMatrix("empty Coxeter matrix")
    for row in matrix:
        if len(row) != n:
            raise InvalidMatrix("Coxeter matrix is not square")
        for m in row:
            if isinstance(m, bool) or not isinstance(m, (int, np.integer)):
                raise InvalidMatrix(f"non-integer entry {m!r}")
    for i in range(n):
        if matrix[i][i] != 1:
            raise InvalidMatrix(f"diagonal entry m[{i}][{i}] = {matrix[i][i]} != 1")
        for j in range(n):
            if matrix[i][j] != matrix[j][i]:
                raise InvalidMatrix(f"matrix not symmetric at ({i}, {j})")
            if i != j and matrix[i][j] == 0:
                raise InfiniteOrTooLarge(f"entry m[{i}][{j}] = 0 encodes infinity")
            if i != j and matrix[i][j] < 2:
                raise InvalidMatrix(f"off-diagonal entry m[{i}][{j}] = {matrix[i][j]} < 2")


def _matrix_from_edges(n: int, edges: dict[tuple[int, int], int]) -> tuple[tuple[int, ...], ...]:
    # edges use 1-based Bourbaki labels; unlisted pairs commute
    m = [[1 if i == j else 2 for j in range(n)] for i in range(n)]
    for (a, b), val in edges.items():
        m[a - 1][b - 1] = m[b - 1][a - 1] = val
    return tuple(tuple(row) for row in m)


def coxeter_matrix(family: str, n: int) -> tuple[tuple[int, ...], ...]:
    """Standard Coxeter matrix of a named finite type, Bourbaki numbering."""
    chain = {(i, i + 1): 3 for i in range(1, n)}
    if family == "A" and n >= 1:
        return _matrix_from_edges(n, chain)
    if family == "B" and n >= 2:
        return _matrix_from_edges(n, {**chain, (n - 1, n): 4})
    if family == "D" and n >= 4:
        edges = {(i, i + 1): 3 for i in range(1, n - 1)}
        edges[(n - 2, n)] = 3
        return _matrix_from_edges(n, edges)
    if family == "E" and n in (6, 7, 8):
        edges = {(1, 3): 3, (2, 4): 3}
        edges.update({(i, i + 1): 3 for i in range(3, n)})
        return _matrix_from_edges(n, edges)
    if family == "F" and n == 4:
        return _matrix_from_edges(4, {(1, 2): 3, (2, 3): 4, (3, 4): 3})
    if family == "H" and n in (3, 4):
        return _matrix_from_edges(n, {**chain, (1, 2): 5})
    if family == "G" and n == 2:
        return _matrix_from_edges(2, {(1, 2): 6})
    raise InvalidMatrix(f"unknown finite type {family}{n}")


_NAME_RE = re.compile(r"^\s*([A-Za-z])\s*(\d+)\s*(?:\(\s*(\d+)\s*\))?\s*$")


def parse_type(name: str) -> CoxeterSpec:
    """Parse names like ``A4``, ``B3``, ``H3``, ``F4``, ``G2``, ``I2(7)``."""
    match = _NAME_RE.match(name)
    if not match:
        raise InvalidMatrix(f"cannot parse Coxeter type {name!r}")
    family, n, m = match.group(1).upper(), int(match.group(2)), match.group(3)
    if family == "I":
        if n != 2 or m is None:
            raise InvalidMatrix(f"dihedral type must look like I2(m), got {name!r}")
        m = int(m)
        if m < 2:
            raise InvalidMatrix(f"dihedral order {m} < 2")
        return CoxeterSpec(((1, m), (m, 1)), f"I2({m})")
    if m is not None:
        raise InvalidMatrix(f"unexpected parameter in {name!r}")
    return CoxeterSpec(coxeter_matrix(family, n), f"{family}{n}")


def parse_matrix_text(text: str, name: str = "matrix") -> CoxeterSpec:
    """Read the matrix file format: rank on line 1, then one row per line."""
    lines = [ln.split() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise InvalidMatrix("empty matrix file")
    try:
        rank = int(lines[0][0])
        rows = tuple(tuple(int(x) for x in ln) for ln in lines[1:])
    except ValueError as exc:
        raise InvalidMatrix(f"non-integer token in matrix file: {exc}") from None
    if len(lines[0]) != 1 or len(rows) != rank:
        raise InvalidMatrix(f"expected rank line followed by {rank} rows")
    return CoxeterSpec(rows, name)


def read_matrix_file(path) -> CoxeterSpec:
    path = Path(path)
    return parse_matrix_text(path.read_text(), name=path.name)


# ---------------------------------------------------------------------------
# Root system construction


def _positive_roots(matrix, root_cap: int):
    rank = len(matrix)
    form = np.array([[-math.cos(math.pi / m) for m in row] for row in matrix])
    basis = np.eye(rank)
    roots = [basis[i].copy() for i in range(rank)]
    index = {_root_key(v): k for k, v in enumerate(roots)}
    # images[i][k] = index of s_i(root k); the k == i entry is filled in later
    images: list[list[int]] = [[] for _ in range(rank)]
    k = 0
    while k < len(roots):
        beta = roots[k]
        for i in range(rank):
            if k == i:
                images[i].append(-1)
                continue
            image = beta - 2.0 * float(form[i] @ beta) * basis[i]
            key = _root_key(image)
            j = index.get(key)
            if j is None:
                if image.min() < -TOL:
                    raise InternalInconsistency("reflection of a positive root left the positive cone")
                j = len(roots)
                roots.append(image)
                index[key] = j
                if 2 * len(roots) > root_cap:
                    raise InfiniteOrTooLarge(
                        f"root closure exceeds cap of {root_cap} roots (infinite or too large)"
                    )
            elif np.abs(roots[j] - image).max() > TOL:
                raise InternalInconsistency("root hash collision beyond tolerance")
            images[i].append(j)
        k += 1
    return np.array(roots), images


def _root_key(v) -> tuple:
    return tuple(round(float(c), _KEY_DIGITS) + 0.0 for c in v)


class CoxeterSystem:
    """Immutable finite Coxeter system with exact generator action tables."""

    def __init__(self, spec: CoxeterSpec, root_cap: int = ROOT_CAP, elem_cap: int = ELEMENT_CAP):
        self.name = spec.name
        self.coxeter_matrix = spec.matrix
        self.rank = spec.rank
        self.root_cap = root_cap
        self.elem_cap = elem_cap

        positive, images = _positive_roots(spec.matrix, root_cap)
        n = len(positive)
        self.n_positive = n
        self.roots = np.vstack([positive, -positive])
        tables = []
        for i in range(self.rank):
            row = list(images[i])
            row[i] = i + n
            full = row + [(j + n) % (2 * n) for j in row]
            tables.append(tuple(full))
        self.gen_action: tuple[tuple[int, ...], ...] = tuple(tables)
        self._identity_perm = tuple(range(2 * n))
        self._check_tables()

        self._lock = threading.Lock()
        self._elements: tuple[Element, ...] | None = None
        self._words: dict[tuple, tuple[int, ...]] = {}
        self._longest: dict[int, Element] = {}
        self._reflections: tuple[Element, ...] | None = None
        # memo for bruhat.bruhat_leq; results depend only on the pair
        self.bruhat_cache: dict = {}

    def _check_tables(self):
        n = self.n_positive
        for i, g in enumerate(self.gen_action):
            if any(g[g[k]] != k for k in range(2 * n)):
                raise InternalInconsistency(f"generator {i} is not an involution")
            flipped = [k for k in range(n) if g[k] >= n]
            if flipped != [i]:
                raise InternalInconsistency(f"generator {i} flips roots {flipped}")
        for i, j in combinations(range(self.rank), 2):
            gi, gj = self.gen_action[i], self.gen_action[j]
            pair = tuple(gi[gj[k]] for k in range(2 * n))
            power = self._identity_perm
            for _ in range(self.coxeter_matrix[i][j]):
                power = tuple(pair[x] for x in power)
            if power != self._identity_perm:
                raise InternalInconsistency(f"braid relation fails for generators {i}, {j}")

    def __repr__(self) -> str:
        return f"CoxeterSystem({self.name})"

    # -- elements ---------------------------------------------------------

    def _own(self, x: "Element") -> "Element":
        if not isinstance(x, Element) or x.system is not self:
            raise SystemMismatch(f"element does not belong to {self.name}")
        return x

    def _check_index(self, i: int) -> int:
        if not 0 <= i < self.rank:
            raise IndexOutOfRange(f"generator index {i} out of range for rank {self.rank}")
        return i

    def _check_subset(self, subset) -> GenSubset:
        subset = as_subset(subset)
        if subset.max_index() >= self.rank:
            raise IndexOutOfRange(f"{subset} not contained in the {self.rank} generators")
        return subset

    def identity(self) -> "Element":
        return Element(self, self._identity_perm)

    def generator(self, i: int) -> "Element":
        return Element(self, self.gen_action[self._check_index(i)])

    def generators(self) -> list["Element"]:
        return [Element(self, g) for g in self.gen_action]

    def multiply(self, x: "Element", y: "Element") -> "Element":
        px, py = self._own(x).perm, self._own(y).perm
        return Element(self, tuple(map(px.__getitem__, py)))

    def inverse(self, x: "Element") -> "Element":
        return Element(self, self._own(x).inverse_perm)

    def lmul(self, i: int, x: "Element") -> "Element":
        """Return ``s_i * x``."""
        return Element(self, tuple(map(self.gen_action[i].__getitem__, x.perm)))

    def rmul(self, x: "Element", i: int) -> "Element":
        """Return ``x * s_i``."""
        return Element(self, tuple(map(x.perm.__getitem__, self.gen_action[i])))

    def left_descents(self, x: "Element") -> GenSubset:
        self._own(x)
        return GenSubset.from_indices(i for i in range(self.rank) if x.is_left_descent(i))

    def right_descents(self, x: "Element") -> GenSubset:
        self._own(x)
        return GenSubset.from_indices(i for i in range(self.rank) if x.is_right_descent(i))

    def element_from_word(self, word: Iterable[int]) -> "Element":
        perm = self._identity_perm
        for i in word:
            g = self.gen_action[self._check_index(i)]
            perm = tuple(map(perm.__getitem__, g))
        return Element(self, perm)

    def canonical_word(self, x: "Element") -> tuple[int, ...]:
        """Lexicographically least reduced word (strip the smallest left descent)."""
        self._own(x)
        word = self._words.get(x.perm)
        if word is not None:
            return word
        letters = []
        while x.length:
            i = next(i for i in range(self.rank) if x.is_left_descent(i))
            letters.append(i)
            x = self.lmul(i, x)
        return tuple(letters)

    def sort_key(self, x: "Element"):
        return (x.length, self.canonical_word(x))

    def longest_element(self, subset=None) -> "Element":
        """Longest element of the parabolic subgroup on ``subset`` (default: all of S)."""
        subset = GenSubset.full(self.rank) if subset is None else self._check_subset(subset)
        cached = self._longest.get(subset.mask)
        if cached is not None:
            return cached
        x = self.identity()
        grown = True
        while grown:
            grown = False
            for i in subset:
                if not x.is_right_descent(i):
                    x = self.rmul(x, i)
                    grown = True
        self._longest[subset.mask] = x
        return x

    @property
    def w0(self) -> "Element":
        return self.longest_element()

    def reflections(self) -> tuple["Element", ...]:
        """All reflections, indexed by positive root."""
        if self._reflections is None:
            n = self.n_positive
            refl: list[Element | None] = [None] * n
            for i in range(self.rank):
                refl[i] = self.generator(i)
            for k in range(n):  # BFS order: every root is built from an earlier one
                t = refl[k]
                if t is None:
                    raise InternalInconsistency(f"no reflection constructed for root {k}")
                for j in range(self.rank):
                    m = self.gen_action[j][k]
                    if m < n and refl[m] is None:
                        refl[m] = self.rmul(self.lmul(j, t), j)
            self._reflections = tuple(refl)
        return self._reflections

    def enumerate_elements(self) -> tuple["Element", ...]:
        """All of W ordered by (length, canonical word)."""
        if self._elements is None:
            with self._lock:
                if self._elements is None:
                    self._elements = self._enumerate()
        return self._elements

    def _enumerate(self) -> tuple["Element", ...]:
        e = self.identity()
        words = {e.perm: ()}
        level = [e]
        out = [e]
        while level:
            fresh: dict[tuple, Element] = {}
            for w in level:
                for i in range(self.rank):
                    if not w.is_left_descent(i):
                        x = self.lmul(i, w)
                        fresh.setdefault(x.perm, x)
            for x in fresh.values():
                i = next(i for i in range(self.rank) if x.is_left_descent(i))
                words[x.perm] = (i,) + words[self.lmul(i, x).perm]
            level = sorted(fresh.values(), key=lambda x: words[x.perm])
            out.extend(level)
            if len(out) > self.elem_cap:
                raise InfiniteOrTooLarge(f"enumeration exceeds cap of {self.elem_cap} elements")
        self._words = words
        return tuple(out)

    @property
    def order(self) -> int:
        return len(self.enumerate_elements())


class Element:
    """Group element as a permutation of root indices.

    ``perm[k]`` is the index of the image of root ``k``. Use the owning
    system (or the ``*`` and ``~`` operators) for arithmetic.
    """

    __slots__ = ("system", "perm", "_length", "_hash", "_inverse")

    def __init__(self, system: CoxeterSystem, perm: tuple[int, ...]):
        self.system = system
        self.perm = perm
        self._length: int | None = None
        self._hash: int | None = None
        self._inverse: tuple[int, ...] | None = None

    @property
    def length(self) -> int:
        if self._length is None:
            n = self.system.n_positive
            self._length = sum(1 for k in range(n) if self.perm[k] >= n)
        return self._length

    @property
    def inverse_perm(self) -> tuple[int, ...]:
        if self._inverse is None:
            inv = [0] * len(self.perm)
            for k, image in enumerate(self.perm):
                inv[image] = k
            self._inverse = tuple(inv)
        return self._inverse

    def is_right_descent(self, i: int) -> bool:
        return self.perm[i] >= self.system.n_positive

    def is_left_descent(self, i: int) -> bool:
        return self.inverse_perm[i] >= self.system.n_positive

    def right_descents(self) -> GenSubset:
        return self.system.right_descents(self)

    def left_descents(self) -> GenSubset:
        return self.system.left_descents(self)

    def word(self) -> tuple[int, ...]:
        return self.system.canonical_word(self)

    def is_identity(self) -> bool:
        return self.perm == self.system._identity_perm

    def __mul__(self, other: "Element") -> "Element":
        return self.system.multiply(self, other)

    def __invert__(self) -> "Element":
        return self.system.inverse(self)

    def __eq__(self, other) -> bool:
        return isinstance(other, Element) and self.system is other.system and self.perm == other.perm

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.perm)
        return self._hash

    def __repr__(self) -> str:
        word = " ".join(f"s{i + 1}" for i in self.word()) or "e"
        return f"Element({self.system.name}: {word})"


def build_system(spec, root_cap: int = ROOT_CAP, elem_cap: int = ELEMENT_CAP) -> CoxeterSystem:
    """Build a system from a CoxeterSpec, a type name like ``"B3"``, or a raw matrix."""
    if isinstance(spec, str):
        spec = parse_type(spec)
    elif not isinstance(spec, CoxeterSpec):
        spec = CoxeterSpec(tuple(tuple(row) for row in spec), "matrix")
    return CoxeterSystem(spec, root_cap=root_cap, elem_cap=elem_cap)
