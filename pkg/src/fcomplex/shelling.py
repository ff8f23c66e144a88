"""Shelling moves, shellings, and shelled-over decompositions."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .cm import NotCohenMacaulay, is_cm, is_minimal_cm
from .complex import (
    Complex,
    ComplexError,
    FaceLike,
    connected_components,
    face_str,
    from_facets,
    intersection_with_facet,
    lex_key,
    link,
    to_mask,
)
from .homology import QQ, FieldSpec


def is_shelling_move(cx: Complex, facet: FaceLike) -> bool:
    """True iff Δ_F ∩ ⟨F⟩ is generated by a nonempty set of ridges of F."""
    f = to_mask(facet, cx.n)
    inter = intersection_with_facet(cx, f)
    k = f.bit_count()
    return bool(inter.facets) and all(g.bit_count() == k - 1 for g in inter.facets)


def _extends(prefix: Iterable[int], f: int) -> bool:
    """Shelling condition for appending ``f`` to the facets in ``prefix``."""
    k = f.bit_count()
    ridges = set()
    others = []
    for g in prefix:
        x = g & f
        if x.bit_count() == k - 1:
            ridges.add(x)
        else:
            others.append(x)
    if not ridges:
        return False
    return all(any(x & r == x for r in ridges) for x in others)


@dataclass(frozen=True)
class OrderCheck:
    ok: bool
    failed_at: int | None = None

    def __bool__(self) -> bool:
        return self.ok


def _as_order(cx: Complex, order: Sequence[FaceLike]) -> list[int]:
    masks = [to_mask(f, cx.n) for f in order]
    if len(masks) != len(cx.facets) or set(masks) != set(cx.facets):
        raise ComplexError("order is not a permutation of the facet set")
    return masks


def verify_shelling(cx: Complex, order: Sequence[FaceLike]) -> OrderCheck:
    masks = _as_order(cx, order)
    for i in range(1, len(masks)):
        if not _extends(masks[:i], masks[i]):
            return OrderCheck(False, i)
    return OrderCheck(True)


def verify_cm_prefix_chain(cx: Complex, order: Sequence[FaceLike], field: FieldSpec = QQ) -> OrderCheck:
    masks = _as_order(cx, order)
    for i in range(1, len(masks)):
        if not is_cm(from_facets(cx.n, masks[: i + 1]), field):
            return OrderCheck(False, i)
    return OrderCheck(True)


@dataclass(frozen=True)
class SearchResult:
    """Outcome of a bounded search: ``found``, ``none`` or ``budget-exhausted``."""

    status: str
    order: tuple[int, ...] = ()
    nodes: int = 0

    @property
    def found(self) -> bool:
        return self.status == "found"


class _Budget(Exception):
    pass


def _ordered_search(candidates: list[int], accept, budget: int) -> SearchResult:
    """Depth-first search for an ordering of ``candidates`` in which every
    element passes ``accept(placed_so_far, element)``.

    Whether an extension is possible depends only on the set already placed,
    so dead sets are remembered and not re-explored.
    """
    if budget <= 0:
        raise ValueError("budget must be positive")
    dead: set[int] = set()
    nodes = 0
    order: list[int] = []

    def extend(used: int) -> bool:
        nonlocal nodes
        if len(order) == len(candidates):
            return True
        if used in dead:
            return False
        for j, f in enumerate(candidates):
            if used >> j & 1:
                continue
            nodes += 1
            if nodes > budget:
                raise _Budget
            if not accept(order, f):
                continue
            order.append(f)
            if extend(used | 1 << j):
                return True
            order.pop()
        dead.add(used)
        return False

    try:
        ok = extend(0)
    except _Budget:
        return SearchResult("budget-exhausted", (), nodes)
    return SearchResult("found", tuple(order), nodes) if ok else SearchResult("none", (), nodes)


def find_shelling(cx: Complex, budget: int = 1_000_000) -> SearchResult:
    """Search for a shelling order, trying facets in lexicographic order.

    A facet is placed only if it meets the current prefix in a nonempty pure
    codimension-one complex.
    """
    if not cx.is_pure:
        raise ComplexError("shelling search needs a pure complex")
    return _ordered_search(
        sorted(cx.facets, key=lex_key),
        lambda order, f: not order or _extends(order, f),
        budget,
    )


def find_cm_prefix_order(cx: Complex, field: FieldSpec = QQ, budget: int = 1_000_000) -> SearchResult:
    """Search for an order whose every prefix complex is CM.

    Uses only CM tests, never the shelling condition, so it can be used to
    cross-check :func:`find_shelling`.
    """
    return _ordered_search(
        sorted(cx.facets, key=lex_key),
        lambda order, f: not order or bool(is_cm(from_facets(cx.n, order + [f]), field)),
        budget,
    )


@dataclass(frozen=True)
class ShelledOverCertificate:
    """Δ rebuilt as core Γ plus facets added in the order F_1, F_2, ..., F_j."""

    core: Complex
    added: tuple[int, ...]
    field: FieldSpec = QQ

    def prefixes(self):
        facets = list(self.core.facets)
        for f in self.added:
            facets.append(f)
            yield f, from_facets(self.core.n, facets)


def _deletable(cx: Complex, f: int, field: FieldSpec) -> bool:
    return bool(is_cm(Complex(cx.n, tuple(g for g in cx.facets if g != f)), field))


def shelled_over_decompose(cx: Complex, field: FieldSpec = QQ) -> ShelledOverCertificate:
    """Peel facets while staying CM until a minimal CM core remains.

    At every step the facet with the smallest bitmask among those whose
    removal keeps the complex CM is deleted.
    """
    if not is_cm(cx, field):
        raise NotCohenMacaulay(f"{cx} is not CM over {field}")
    removed: list[int] = []
    current = cx
    while len(current.facets) > 1:
        step = next((f for f in sorted(current.facets) if _deletable(current, f, field)), None)
        if step is None:
            break
        removed.append(step)
        current = Complex(cx.n, tuple(g for g in current.facets if g != step))
    return ShelledOverCertificate(current, tuple(reversed(removed)), field)


def minimal_cm_cores(cx: Complex, field: FieldSpec = QQ, limit: int = 10_000) -> set[Complex]:
    """Every minimal CM core reachable by CM-preserving facet deletions.

    Explores at most ``limit`` distinct intermediate complexes.
    """
    if not is_cm(cx, field):
        raise NotCohenMacaulay(f"{cx} is not CM over {field}")
    cores: set[Complex] = set()
    seen: set[Complex] = set()
    stack = [cx]
    while stack and len(seen) < limit:
        cur = stack.pop()
        if cur in seen:
            continue
        seen.add(cur)
        children = []
        if len(cur.facets) > 1:
            children = [
                Complex(cx.n, tuple(g for g in cur.facets if g != f))
                for f in cur.facets
                if _deletable(cur, f, field)
            ]
        if not children:
            cores.add(cur)
        stack.extend(children)
    return cores


@dataclass(frozen=True)
class ShelledOverCheck:
    ok: bool
    failed_at: int | None = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def verify_shelled_over(cx: Complex, cert: ShelledOverCertificate, field: FieldSpec | None = None) -> ShelledOverCheck:
    """Check a shelled-over certificate against Δ.

    ``failed_at`` is the 1-based index of the added facet where a check
    failed, or 0 when the core itself is rejected.
    """
    field = cert.field if field is None else field
    combined = list(cert.core.facets) + list(cert.added)
    if len(combined) != len(set(combined)) or set(combined) != set(cx.facets):
        raise ComplexError("certificate facets do not match the complex")
    if not is_cm(cert.core, field):
        return ShelledOverCheck(False, 0, "core not CM")
    if not is_minimal_cm(cert.core, field):
        return ShelledOverCheck(False, 0, "core not minimal CM")
    for i, (f, prefix) in enumerate(cert.prefixes(), start=1):
        if not is_shelling_move(prefix, f):
            return ShelledOverCheck(False, i, f"adding {face_str(f)} is not a shelling move")
        if not is_cm(prefix, field):
            return ShelledOverCheck(False, i, f"prefix ending at {face_str(f)} not CM")
    return ShelledOverCheck(True)


def shelled_over_onto(cx: Complex, core: Complex, field: FieldSpec = QQ, budget: int = 100_000) -> SearchResult:
    """Search an order of the facets outside ``core`` that shells Δ over it."""
    if not set(core.facets) <= set(cx.facets):
        raise ComplexError("core facets are not facets of the complex")
    base = list(core.facets)

    def accept(order, f):
        prefix = base + order
        return _extends(prefix, f) and bool(is_cm(from_facets(cx.n, prefix + [f]), field))

    rest = sorted(set(cx.facets) - set(core.facets), key=lex_key)
    return _ordered_search(rest, accept, budget)


def link_connectivity_condition(cx: Complex) -> bool:
    """Every link of positive dimension is connected (the empty face included)."""
    if not cx.is_pure:
        raise ComplexError("link connectivity condition needs a pure complex")
    if cx.is_simplex:
        raise ComplexError("link connectivity condition is for non-simplices")
    for level in cx.faces_by_size:
        for sigma in level:
            lk = link(cx, sigma)
            if lk.dim > 0 and connected_components(lk) > 1:
                return False
    return True
