"""Faces and simplicial complexes on the vertex set [n].

A face is stored as an integer bitmask: vertex ``v`` (1-based) is bit ``v - 1``.
Public functions accept either a mask or an iterable of vertices wherever a
face is expected.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Union

MAX_VERTICES = 64

FaceLike = Union[int, Iterable[int]]
FVector = tuple  # (f_{-1}, f_0, ..., f_dim)


class ComplexError(ValueError):
    pass


def to_mask(face: FaceLike, n: int | None = None) -> int:
    if isinstance(face, int):
        mask = face
        if mask < 0:
            raise ComplexError(f"negative face mask {mask}")
    else:
        mask = 0
        for v in face:
            v = int(v)
            if v < 1 or v > MAX_VERTICES:
                raise ComplexError(f"vertex {v} out of range")
            mask |= 1 << (v - 1)
    if n is not None and mask >> n:
        raise ComplexError(f"face {vertices(mask)} not contained in [{n}]")
    return mask


def vertices(mask: int) -> tuple[int, ...]:
    out = []
    v = 1
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def face_str(mask: int) -> str:
    """Compact rendering: ``123`` when every vertex is a digit, else ``{1,12}``; ``∅`` when empty."""
    vs = vertices(mask)
    if not vs:
        return "∅"
    if vs[-1] <= 9:
        return "".join(map(str, vs))
    return "{" + ",".join(map(str, vs)) + "}"


def lex_key(mask: int) -> tuple[int, ...]:
    return vertices(mask)


def submasks(mask: int):
    s = mask
    while True:
        yield s
        if s == 0:
            return
        s = (s - 1) & mask


def k_subsets(n: int, k: int) -> list[int]:
    """All k-subsets of [n] as masks, in lexicographic order."""
    return [sum(1 << (v - 1) for v in c) for c in combinations(range(1, n + 1), k)]


def maximal_elements(masks: Iterable[int]) -> list[int]:
    uniq = sorted(set(masks), key=lambda m: -m.bit_count())
    kept: list[int] = []
    for m in uniq:
        if not any(m & k == m for k in kept):
            kept.append(m)
    return kept


def minimal_elements(masks: Iterable[int]) -> list[int]:
    uniq = sorted(set(masks), key=int.bit_count)
    kept: list[int] = []
    for m in uniq:
        if not any(k & m == k for k in kept):
            kept.append(m)
    return kept


def minimal_transversals(edges: Iterable[int]) -> list[int]:
    """Minimal sets meeting every edge (Berge's incremental algorithm)."""
    current = [0]
    for e in edges:
        if e == 0:
            return []
        nxt = []
        for t in current:
            if t & e:
                nxt.append(t)
            else:
                m = e
                while m:
                    low = m & -m
                    nxt.append(t | low)
                    m ^= low
        current = minimal_elements(nxt)
    return current


@dataclass(frozen=True)
class Complex:
    """A simplicial complex on [n] given by its facets.

    ``facets`` is an antichain of bitmasks kept in lexicographic order, so two
    complexes with the same faces compare (and hash) equal.  A complex with
    no facets is the void complex; ``facets == (0,)`` is the complex {∅}.
    """

    n: int
    facets: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0 or self.n > MAX_VERTICES:
            raise ComplexError(f"n={self.n} outside 0..{MAX_VERTICES}")

    def __contains__(self, face: FaceLike) -> bool:
        m = to_mask(face)
        return any(m & f == m for f in self.facets)

    def __len__(self) -> int:
        return sum(len(level) for level in self.faces_by_size)

    def __str__(self) -> str:
        return "<" + ", ".join(face_str(f) for f in self.facets) + f"> on [{self.n}]"

    @property
    def dim(self) -> int:
        if not self.facets:
            return -2
        return max(f.bit_count() for f in self.facets) - 1

    @property
    def is_pure(self) -> bool:
        return len({f.bit_count() for f in self.facets}) <= 1

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def is_simplex(self) -> bool:
        return len(self.facets) == 1

    @property
    def support(self) -> int:
        m = 0
        for f in self.facets:
            m |= f
        return m

    @cached_property
    def faces_by_size(self) -> tuple[tuple[int, ...], ...]:
        """Faces grouped by cardinality 0..dim+1, each group lexicographic."""
        if not self.facets:
            return ()
        levels: list[set[int]] = [set() for _ in range(self.dim + 2)]
        for f in self.facets:
            for s in submasks(f):
                levels[s.bit_count()].add(s)
        return tuple(tuple(sorted(level, key=lex_key)) for level in levels)

    def faces(self, dimension: int) -> tuple[int, ...]:
        k = dimension + 1
        if k < 0 or k >= len(self.faces_by_size):
            return ()
        return self.faces_by_size[k]


def _make(n: int, masks: Iterable[int]) -> Complex:
    return Complex(n, tuple(sorted(maximal_elements(masks), key=lex_key)))


def from_facets(n: int, gens: Iterable[FaceLike]) -> Complex:
    """Complex generated by ``gens``; generators contained in others are dropped."""
    if n > MAX_VERTICES:
        raise ComplexError(f"n={n} exceeds {MAX_VERTICES}")
    masks = [to_mask(g, n) for g in gens]
    if not masks:
        raise ComplexError("empty generator list")
    return _make(n, masks)


def from_words(n: int, words: str | Iterable[str]) -> Complex:
    """Shorthand for single-digit vertex labels: ``from_words(6, "123 125")``."""
    if isinstance(words, str):
        words = words.replace(",", " ").split()
    return from_facets(n, [[int(c) for c in w] for w in words])


def simplex(n: int, vertex_set: FaceLike | None = None) -> Complex:
    m = (1 << n) - 1 if vertex_set is None else to_mask(vertex_set, n)
    return Complex(n, (m,))


def uniform(n: int, k: int) -> Complex:
    """The complex ⟨[n]_k⟩ generated by all k-subsets of [n]."""
    return _make(n, k_subsets(n, k))


def f_vector(cx: Complex) -> FVector:
    return tuple(len(level) for level in cx.faces_by_size)


def skeleton(cx: Complex, i: int) -> Complex:
    if i < -1 or i > cx.dim:
        raise ComplexError(f"skeleton index {i} outside -1..{cx.dim}")
    if i == cx.dim:
        return cx
    return _make(cx.n, [f for f in cx.faces(i)] + [f for f in cx.facets if f.bit_count() <= i + 1])


def link(cx: Complex, sigma: FaceLike) -> Complex:
    s = to_mask(sigma, cx.n)
    cofaces = [f ^ s for f in cx.facets if f & s == s]
    if not cofaces:
        raise ComplexError(f"{face_str(s)} is not a face")
    # facets containing s stay an antichain after removing s
    return Complex(cx.n, tuple(sorted(cofaces, key=lex_key)))


def _check_facet(cx: Complex, facet: FaceLike) -> int:
    f = to_mask(facet, cx.n)
    if f not in cx.facets:
        raise ComplexError(f"{face_str(f)} is not a facet")
    if len(cx.facets) < 2:
        raise ComplexError("complex has a single facet")
    return f


def facet_deletion(cx: Complex, facet: FaceLike) -> Complex:
    f = _check_facet(cx, facet)
    return Complex(cx.n, tuple(g for g in cx.facets if g != f))


def intersection_with_facet(cx: Complex, facet: FaceLike) -> Complex:
    """Δ_F ∩ ⟨F⟩; {∅} when F meets no other facet."""
    f = _check_facet(cx, facet)
    return _make(cx.n, [g & f for g in cx.facets if g != f])


def complement_complex(cx: Complex) -> Complex:
    if not cx.is_pure:
        warnings.warn("complement of a non-pure complex", stacklevel=2)
    full = (1 << cx.n) - 1
    return _make(cx.n, [full ^ f for f in cx.facets])


def minimal_nonfaces(cx: Complex) -> list[int]:
    """Minimal subsets of [n] outside the complex, lexicographically sorted.

    A set is a nonface iff it meets every facet complement, so these are the
    minimal transversals of the complement facets.
    """
    full = (1 << cx.n) - 1
    return sorted(minimal_transversals(full ^ f for f in cx.facets), key=lex_key)


def alexander_dual(cx: Complex) -> Complex:
    full = (1 << cx.n) - 1
    if cx.is_void:
        raise ComplexError("Alexander dual of the void complex")
    if cx.facets == (full,):
        raise ComplexError("Alexander dual of the full simplex is void")
    return _make(cx.n, [full ^ m for m in minimal_nonfaces(cx)])


def is_cone(cx: Complex) -> tuple[bool, int | None]:
    common = (1 << cx.n) - 1
    for f in cx.facets:
        common &= f
    if not cx.facets or not common:
        return False, None
    return True, vertices(common)[0]


def connected_components(cx: Complex) -> int:
    parent: dict[int, int] = {}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for f in cx.facets:
        vs = vertices(f)
        for v in vs:
            parent.setdefault(v, v)
        for v in vs[1:]:
            parent[find(v)] = find(vs[0])
    return len({find(v) for v in parent})


def connected_in_codim_1(cx: Complex) -> bool:
    if not cx.is_pure:
        raise ComplexError("codimension-one connectivity needs a pure complex")
    facets = cx.facets
    if len(facets) <= 1:
        return True
    k = facets[0].bit_count()
    seen = {0}
    stack = [0]
    while stack:
        i = stack.pop()
        for j, g in enumerate(facets):
            if j not in seen and (facets[i] & g).bit_count() == k - 1:
                seen.add(j)
                stack.append(j)
    return len(seen) == len(facets)
