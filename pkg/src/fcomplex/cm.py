"""Cohen-Macaulay tests via Reisner's criterion, depth, and minimality."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

from .complex import (
    Complex,
    ComplexError,
    connected_components,
    f_vector,
    facet_deletion,
    face_str,
    link,
    skeleton,
)
from .homology import QQ, FieldSpec, reduced_homology


class NotCohenMacaulay(ValueError):
    pass


class Witness(NamedTuple):
    face: int
    index: int
    dimension: int  # dim H̃_index(lk face) > 0


@dataclass(frozen=True)
class CmReport:
    is_cm: bool
    witness: Witness | None
    field: FieldSpec
    reason: str = ""

    def __bool__(self) -> bool:
        return self.is_cm

    def describe(self) -> str:
        if self.is_cm:
            return f"CM over {self.field}"
        w = self.witness
        return (
            f"not CM over {self.field} ({self.reason}): "
            f"dim H̃_{w.index}(lk {face_str(w.face)}) = {w.dimension}"
        )


def _faces_smallest_first(cx: Complex):
    for level in cx.faces_by_size:
        yield from level


def _link_witness(cx: Complex, sigma: int, field: FieldSpec) -> Witness | None:
    lk = link(cx, sigma)
    h = reduced_homology(lk, field)
    for i in range(-1, lk.dim):
        if h[i]:
            return Witness(sigma, i, h[i])
    return None


def _purity_witness(cx: Complex) -> Witness:
    # a maximal face with a non-pure link has a disconnected link: its vertex
    # links are pure, and a connected complex with pure vertex links is pure
    for level in reversed(cx.faces_by_size):
        for sigma in level:
            lk = link(cx, sigma)
            if not lk.is_pure:
                comps = connected_components(lk)
                return Witness(sigma, 0, comps - 1)
    raise AssertionError("non-pure complex with all links pure")


def reisner_sweep(cx: Complex, field: FieldSpec = QQ) -> CmReport:
    """The full Reisner criterion over every face, with no short-circuits."""
    for sigma in _faces_smallest_first(cx):
        w = _link_witness(cx, sigma, field)
        if w is not None:
            return CmReport(False, w, field, "link homology")
    return CmReport(True, None, field)


@lru_cache(maxsize=1 << 15)
def is_cm(cx: Complex, field: FieldSpec = QQ) -> CmReport:
    if cx.is_void:
        raise ComplexError("CM test on the void complex")
    if not cx.is_pure:
        return CmReport(False, _purity_witness(cx), field, "not pure")
    if cx.dim >= 1:
        comps = connected_components(cx)
        if comps > 1:
            return CmReport(False, Witness(0, 0, comps - 1), field, "disconnected")
    return reisner_sweep(cx, field)


def depth(cx: Complex, field: FieldSpec = QQ) -> int:
    """1 + the largest i whose i-skeleton is CM."""
    for i in range(cx.dim, -2, -1):
        if is_cm(skeleton(cx, i), field):
            return i + 1
    raise AssertionError("the (-1)-skeleton {∅} is always CM")


def is_minimal_cm(cx: Complex, field: FieldSpec = QQ) -> bool:
    if not is_cm(cx, field):
        raise NotCohenMacaulay(f"{cx} is not CM over {field}")
    if cx.is_simplex:
        return True
    return not any(is_cm(facet_deletion(cx, f), field) for f in cx.facets)


@dataclass(frozen=True)
class FacetRemovalCheck:
    """Comparison of Δ and Δ_F: homology and f-vector should drop by one
    in the top degree only, and depth should not move."""

    facet: int
    homology_ok: bool
    fvector_ok: bool
    depth_ok: bool

    def __bool__(self) -> bool:
        return self.homology_ok and self.fvector_ok and self.depth_ok


def check_facet_removal(cx: Complex, facet: int, field: FieldSpec = QQ) -> FacetRemovalCheck:
    sub = facet_deletion(cx, facet)
    d = cx.dim
    h, hs = reduced_homology(cx, field), reduced_homology(sub, field)
    homology_ok = all(hs[i] == h[i] - (i == d) for i in range(-1, d + 1))
    fv, fs = f_vector(cx), f_vector(sub)
    fs = fs + (0,) * (len(fv) - len(fs))
    fvector_ok = all(fs[k] == fv[k] - (k == d + 1) for k in range(len(fv)))
    return FacetRemovalCheck(facet, homology_ok, fvector_ok, depth(cx, field) == depth(sub, field))
