"""f-ideals and f-simplicial complexes.

A squarefree monomial ideal is identified with the clutter of supports of its
minimal generators.  Its nonface complex has those supports as minimal
nonfaces; its facet complex is generated by them.  The ideal is an f-ideal
when the two complexes share an f-vector.

All reports use dim = cardinality - 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from math import comb
from typing import Iterable

from .cm import is_cm, is_minimal_cm
from .complex import (
    Complex,
    ComplexError,
    FaceLike,
    FVector,
    f_vector,
    face_str,
    from_facets,
    intersection_with_facet,
    k_subsets,
    lex_key,
    minimal_elements,
    minimal_transversals,
    skeleton,
    to_mask,
    uniform,
)
from .homology import QQ, FieldSpec, is_acyclic, reduced_homology
from .shelling import SearchResult, find_shelling


class PreconditionError(ValueError):
    pass


@dataclass(frozen=True)
class Clutter:
    """Minimal generators G(I) of a squarefree monomial ideal, as faces of [n]."""

    n: int
    members: tuple[int, ...]

    def __post_init__(self):
        if any(m == 0 for m in self.members):
            raise ComplexError("clutter members must be nonempty")

    @classmethod
    def from_generators(cls, n: int, gens: Iterable[FaceLike]) -> "Clutter":
        masks = [to_mask(g, n) for g in gens]
        return cls(n, tuple(sorted(minimal_elements(masks), key=lex_key)))

    @classmethod
    def of_complex(cls, cx: Complex) -> "Clutter":
        return cls(cx.n, cx.facets)

    @property
    def degrees(self) -> set[int]:
        return {m.bit_count() for m in self.members}


def lower_shadow(c: Clutter, d: int) -> set[int]:
    if c.degrees - {d}:
        raise ComplexError(f"clutter is not homogeneous of cardinality {d}")
    out = set()
    for m in c.members:
        rest = m
        while rest:
            low = rest & -rest
            out.add(m ^ low)
            rest ^= low
    return out


def upper_shadow(c: Clutter, d: int) -> set[int]:
    if c.degrees - {d}:
        raise ComplexError(f"clutter is not homogeneous of cardinality {d}")
    full = (1 << c.n) - 1
    out = set()
    for m in c.members:
        rest = full ^ m
        while rest:
            low = rest & -rest
            out.add(m | low)
            rest ^= low
    return out


def nonface_complex(c: Clutter) -> Complex:
    """δ_N(I): faces are the sets containing no member of the clutter."""
    if not c.members:
        raise ComplexError("empty clutter: the nonface complex is the full simplex")
    full = (1 << c.n) - 1
    # F is a face iff its complement meets every member
    return from_facets(c.n, [full ^ t for t in minimal_transversals(c.members)])


def facet_complex(c: Clutter) -> Complex:
    if not c.members:
        raise ComplexError("empty clutter")
    return Complex(c.n, c.members)


def _pad(a: FVector, b: FVector) -> tuple[FVector, FVector]:
    k = max(len(a), len(b))
    return a + (0,) * (k - len(a)), b + (0,) * (k - len(b))


@dataclass(frozen=True)
class FCheckReport:
    is_f: bool
    is_L: bool | None = None
    is_U: bool | None = None
    count_ok: bool | None = None
    missing_lower: tuple[int, ...] = ()
    missing_upper: tuple[int, ...] = ()
    fvec_nonface: FVector = ()
    fvec_facet: FVector = ()
    notes: list = dc_field(default_factory=list, compare=False, hash=False)

    def __bool__(self) -> bool:
        return self.is_f

    def to_text(self) -> str:
        lines = ["convention: dim = cardinality - 1", f"f-ideal: {'yes' if self.is_f else 'no'}"]
        if self.is_L is not None:
            lines.append(f"L-set: {'yes' if self.is_L else 'no'}")
            lines.append(f"U-set: {'yes' if self.is_U else 'no'}")
            lines.append(f"count = C(n,d)/2: {'yes' if self.count_ok else 'no'}")
            lines.append("missing lower: " + " ".join(face_str(m) for m in self.missing_lower))
            lines.append("missing upper: " + " ".join(face_str(m) for m in self.missing_upper))
        lines.append("f(nonface complex): " + " ".join(map(str, self.fvec_nonface)))
        lines.append("f(facet complex): " + " ".join(map(str, self.fvec_facet)))
        lines.extend(self.notes)
        return "\n".join(lines)


def is_f_ideal_general(c: Clutter) -> FCheckReport:
    fn, ff = _pad(f_vector(nonface_complex(c)), f_vector(facet_complex(c)))
    return FCheckReport(is_f=fn == ff, fvec_nonface=fn, fvec_facet=ff)


def _pure_check(c: Clutter) -> FCheckReport:
    if not c.members:
        raise ComplexError("empty clutter")
    if len(c.degrees) != 1:
        raise ComplexError("non-homogeneous clutter; use is_f_ideal_general")
    (d,) = c.degrees
    n = c.n
    lower = lower_shadow(c, d)
    upper = upper_shadow(c, d)
    missing_lower = tuple(m for m in k_subsets(n, d - 1) if m not in lower)
    missing_upper = tuple(m for m in k_subsets(n, d + 1) if m not in upper) if d < n else ()
    count_ok = 2 * len(c.members) == comb(n, d)
    is_L, is_U = not missing_lower, not missing_upper
    general = is_f_ideal_general(c)
    return FCheckReport(
        is_f=is_L and is_U and count_ok,
        is_L=is_L,
        is_U=is_U,
        count_ok=count_ok,
        missing_lower=missing_lower,
        missing_upper=missing_upper,
        fvec_nonface=general.fvec_nonface,
        fvec_facet=general.fvec_facet,
        notes=[f"generators: {len(c.members)}, C({n},{d})/2 = {comb(n, d) / 2:g}"],
    )


def is_f_complex_pure(cx: Complex) -> FCheckReport:
    """LU-set test plus the count |F(Δ)| = C(n, d)/2 for facets of size d."""
    if not cx.is_pure:
        raise ComplexError("complex is not pure; use is_f_ideal_general")
    return _pure_check(Clutter.of_complex(cx))


def is_f(c: Clutter) -> bool:
    return bool(_pure_check(c)) if len(c.degrees) == 1 else bool(is_f_ideal_general(c))


def newton_dual(c: Clutter) -> Clutter:
    full = (1 << c.n) - 1
    if full in c.members:
        raise ComplexError("the dual of a clutter containing [n] has an empty member")
    return Clutter(c.n, tuple(sorted((full ^ m for m in c.members), key=lex_key)))


@dataclass
class ProbeReport:
    """Outcome of a theorem probe.

    ``preconditions`` lists unmet hypotheses (empty when the probe applies);
    ``clauses`` maps each conclusion to whether it held.
    """

    name: str
    preconditions: list[str] = dc_field(default_factory=list)
    clauses: dict = dc_field(default_factory=dict)
    details: dict = dc_field(default_factory=dict)

    @property
    def applicable(self) -> bool:
        return not self.preconditions

    @property
    def falsified(self) -> bool:
        return self.applicable and not all(self.clauses.values())

    def to_text(self) -> str:
        lines = [f"probe: {self.name}", "convention: dim = cardinality - 1"]
        if self.preconditions:
            lines.append("preconditions not met: " + "; ".join(self.preconditions))
        for k, v in self.clauses.items():
            lines.append(f"{k}: {'holds' if v else 'FAILS'}")
        for k, v in self.details.items():
            lines.append(f"{k}: {v}")
        if self.applicable:
            lines.append("verdict: " + ("FALSIFIED" if self.falsified else "consistent"))
        return "\n".join(lines)


def _minimal_cm_f_preconditions(cx: Complex, field: FieldSpec) -> list[str]:
    if not cx.is_pure:
        return ["not pure"]
    unmet = []
    if not is_f_complex_pure(cx):
        unmet.append("not an f-complex")
    if len(cx.facets) < 2:
        unmet.append("fewer than 2 facets")
    if cx.dim < 1:
        unmet.append("dimension below 1")
    if not is_cm(cx, field):
        unmet.append(f"not CM over {field}")
    elif not is_minimal_cm(cx, field):
        unmet.append(f"not minimal CM over {field}")
    return unmet


def main_theorem_probe(cx: Complex, field: FieldSpec = QQ) -> ProbeReport:
    """For a minimal CM f-complex: dim >= 2, 2(dim+1) >= n, and acyclic iff n = 2(dim+1)."""
    rep = ProbeReport("main-theorem", _minimal_cm_f_preconditions(cx, field))
    d, n = cx.dim, cx.n
    rep.details = {"n": n, "dim": d, "field": str(field)}
    if not rep.applicable:
        return rep
    acyclic = is_acyclic(cx, field)
    rep.details["acyclic"] = acyclic
    rep.clauses = {
        "dim >= 2": d >= 2,
        "2(dim+1) >= n": 2 * (d + 1) >= n,
        "acyclic iff n = 2(dim+1)": acyclic == (n == 2 * (d + 1)),
    }
    # the L-set property used in the argument: the codim-1 skeleton is complete
    if d >= 1:
        rep.clauses["(dim-1)-skeleton complete"] = skeleton(cx, d - 1) == skeleton(uniform(n, d), d - 1)
    return rep


def mayer_vietoris_check(cx: Complex, field: FieldSpec = QQ) -> bool:
    """For every facet F: H̃_*(Δ_F) agrees with H̃_*(Δ_F ∩ ⟨F⟩), and the
    intersection is pure of dimension dim Δ - 1."""
    unmet = _minimal_cm_f_preconditions(cx, field)
    if cx.n != 2 * (cx.dim + 1):
        unmet.append(f"n = {cx.n} != 2(dim+1) = {2 * (cx.dim + 1)}")
    if unmet:
        raise PreconditionError("; ".join(unmet))
    for f in cx.facets:
        sub = Complex(cx.n, tuple(g for g in cx.facets if g != f))
        inter = intersection_with_facet(cx, f)
        if not inter.is_pure or inter.dim != cx.dim - 1:
            return False
        h_sub, h_int = reduced_homology(sub, field), reduced_homology(inter, field)
        if any(h_sub[i] != h_int[i] for i in range(-1, cx.dim + 1)):
            return False
    return True


def homogeneous_complement(cx: Complex) -> Complex:
    """⟨[n]_d minus the facets⟩ for a pure complex with facets of size d."""
    present = set(cx.facets)
    rest = [m for m in k_subsets(cx.n, cx.dim + 1) if m not in present]
    if not rest:
        raise ComplexError("the facets already exhaust [n]_d")
    return from_facets(cx.n, rest)


@dataclass
class ComplementProbe:
    complement: Complex
    search: SearchResult

    @property
    def verdict(self) -> str:
        return {"found": "shellable", "none": "not shellable"}.get(self.search.status, self.search.status)


def homogeneous_complement_probe(cx: Complex, budget: int = 1_000_000) -> ComplementProbe:
    """Shellability of the homogeneous complement of a pure f-complex.

    Collects evidence only; a single instance says nothing general.
    """
    if not cx.is_pure or not is_f_complex_pure(cx):
        raise PreconditionError("input is not a pure f-complex")
    comp = homogeneous_complement(cx)
    return ComplementProbe(comp, find_shelling(comp, budget))
