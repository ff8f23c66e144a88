"""Boundary matrices and reduced simplicial homology over a field."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from math import comb

from . import linalg
from .complex import Complex, ComplexError, lex_key, simplex

MAX_PRIME = 2**31


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    i = 3
    while i * i <= p:
        if p % i == 0:
            return False
        i += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field: the rationals (``p is None``) or GF(p)."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None and (self.p >= MAX_PRIME or not _is_prime(self.p)):
            raise ValueError(f"GF({self.p}) is not a supported prime field")

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        text = text.strip().lower()
        if text in ("q", "qq", "rationals"):
            return cls()
        if text.startswith("gf:"):
            return cls(int(text[3:]))
        raise ValueError(f"unknown field {text!r}; use 'q' or 'gf:<p>'")

    def __str__(self) -> str:
        return "q" if self.p is None else f"gf:{self.p}"


QQ = FieldSpec()


class HomologyError(ValueError):
    pass


@dataclass(frozen=True)
class BoundaryMatrix:
    """∂_i with rows indexed by (i-1)-faces and columns by i-faces."""

    i: int
    rows: tuple[int, ...]
    cols: tuple[int, ...]
    entries: tuple[tuple[int, ...], ...]

    def sparse_rows(self) -> list[dict]:
        return [{c: v for c, v in enumerate(r) if v} for r in self.entries]

    def to_text(self) -> str:
        return "\n".join(" ".join(f"{v:2d}" for v in r) for r in self.entries)


def _boundary_columns(lower: tuple[int, ...], upper: tuple[int, ...]) -> list[dict]:
    """Sparse columns of the boundary map from ``upper`` faces to ``lower`` faces."""
    index = {f: r for r, f in enumerate(lower)}
    cols = []
    for face in upper:
        col = {}
        sign = 1
        m = face
        while m:
            low = m & -m
            col[index[face ^ low]] = sign
            sign = -sign
            m ^= low
        cols.append(col)
    return cols


def boundary_matrix(cx: Complex, i: int, field: FieldSpec = QQ) -> BoundaryMatrix:
    if i < -1 or i > cx.dim:
        raise HomologyError(f"boundary index {i} outside -1..{cx.dim}")
    upper = cx.faces(i)
    lower = cx.faces(i - 1) if i >= 0 else ()
    cols = _boundary_columns(lower, upper) if i >= 0 else [{} for _ in upper]
    entries = []
    for r in range(len(lower)):
        row = []
        for col in cols:
            v = col.get(r, 0)
            row.append(v % field.p if field.p is not None else v)
        entries.append(tuple(row))
    return BoundaryMatrix(i, lower, upper, tuple(entries))


@dataclass(frozen=True)
class HomologyProfile:
    dims: dict = dc_field(hash=False)
    field: FieldSpec = QQ

    def __getitem__(self, i: int) -> int:
        return self.dims.get(i, 0)

    @property
    def is_zero(self) -> bool:
        return not any(self.dims.values())

    def reduced_euler_characteristic(self) -> int:
        return sum((-1) ** i * d for i, d in self.dims.items())

    def nonzero(self) -> dict:
        return {i: d for i, d in self.dims.items() if d}


def _ranks(cx: Complex, p: int | None) -> list[int]:
    """rank ∂_i for i = 0..dim (∂_0 is the augmentation)."""
    levels = cx.faces_by_size
    out = []
    for k in range(1, len(levels)):
        cols = _boundary_columns(levels[k - 1], levels[k])
        out.append(linalg.rank(cols, p))
    return out


@lru_cache(maxsize=1 << 16)
def _homology_dims(facets: tuple[int, ...], p: int | None) -> tuple[int, ...]:
    cx = Complex(64, facets)
    levels = cx.faces_by_size
    ranks = [0] + _ranks(cx, p) + [0]  # rank ∂_{-1}, ∂_0..∂_dim, ∂_{dim+1}
    return tuple(len(levels[k]) - ranks[k] - ranks[k + 1] for k in range(len(levels)))


def _compress(facets: tuple[int, ...]) -> tuple[int, ...]:
    """Relabel the support onto 1..k so isomorphic relabelings share a cache entry."""
    support = 0
    for f in facets:
        support |= f
    bits = []
    m = support
    while m:
        low = m & -m
        bits.append(low)
        m ^= low
    out = []
    for f in facets:
        g = 0
        for j, b in enumerate(bits):
            if f & b:
                g |= 1 << j
        out.append(g)
    return tuple(sorted(out))


def reduced_homology(cx: Complex, field: FieldSpec = QQ) -> HomologyProfile:
    """dim H̃_i for i = -1..dim via ranks of the augmented chain complex."""
    if cx.is_void:
        raise HomologyError("homology of the void complex")
    dims = _homology_dims(_compress(cx.facets), field.p)
    return HomologyProfile({k - 1: d for k, d in enumerate(dims)}, field)


def is_acyclic(cx: Complex, field: FieldSpec = QQ) -> bool:
    return reduced_homology(cx, field).is_zero


def simplex_kernel_dim(n: int, r: int) -> int:
    """dim ker ∂_r for the full simplex on [n], cross-checked by elimination."""
    if n < 1 or not 0 <= r <= n - 1:
        raise HomologyError(f"need 0 <= r <= n-1, got n={n}, r={r}")
    expected = comb(n - 1, r + 1)
    full = simplex(n)
    levels = full.faces_by_size
    rk = linalg.rank(_boundary_columns(levels[r], levels[r + 1]))
    nullity = len(levels[r + 1]) - rk
    if nullity != expected:
        raise HomologyError(f"nullity {nullity} != C({n - 1},{r + 1}) = {expected}")
    return expected


def top_cycle_facet(cx: Complex, field: FieldSpec = QQ) -> int:
    """A facet with nonzero coefficient in the first basis vector of ker ∂_top.

    Removing it keeps the codimension-one skeleton intact.  Ties go to the
    lexicographically smallest such facet.
    """
    d = cx.dim
    top = cx.faces(d)
    rows_by_face = cx.faces(d - 1)
    cols = _boundary_columns(rows_by_face, top)
    rows: list[dict] = [{} for _ in rows_by_face]
    for c, col in enumerate(cols):
        for r, v in col.items():
            rows[r][c] = v
    basis = linalg.kernel_basis(rows, len(top), field.p)
    if not basis:
        raise HomologyError(f"top homology H̃_{d} vanishes over {field}")
    support = [top[c] for c, x in enumerate(basis[0]) if x]
    return min(support, key=lex_key)


__all__ = [
    "FieldSpec",
    "QQ",
    "BoundaryMatrix",
    "HomologyProfile",
    "HomologyError",
    "ComplexError",
    "boundary_matrix",
    "reduced_homology",
    "is_acyclic",
    "simplex_kernel_dim",
    "top_cycle_facet",
]
