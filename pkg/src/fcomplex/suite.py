"""End-to-end reproduction of the bundled example complexes.

Each check returns one or more :class:`Check` rows with status ``pass``,
``fail`` or ``flag``.  ``flag`` marks a printed facet sequence that does not
verify as given while the property it was meant to witness is confirmed by
another route (a transcription problem in the source lists, not a defect of
the complex).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from importlib.resources import files
from math import comb
from pathlib import Path

from .cm import check_facet_removal, depth, is_cm, is_minimal_cm
from .complex import (
    Complex,
    ComplexError,
    complement_complex,
    connected_components,
    face_str,
    from_facets,
    is_cone,
    k_subsets,
    link,
    to_mask,
    uniform,
)
from .fideal import (
    Clutter,
    is_f,
    is_f_complex_pure,
    main_theorem_probe,
    mayer_vietoris_check,
    newton_dual,
)
from .homology import (
    QQ,
    FieldSpec,
    boundary_matrix,
    is_acyclic,
    reduced_homology,
    simplex_kernel_dim,
    top_cycle_facet,
)
from .linalg import rank
from .io import parse_certificate, parse_complex, parse_order
from .shelling import (
    find_cm_prefix_order,
    find_shelling,
    is_shelling_move,
    link_connectivity_condition,
    shelled_over_onto,
    verify_cm_prefix_chain,
    verify_shelled_over,
    verify_shelling,
)

GF2 = FieldSpec(2)

DATA_FILES = (
    "rp2.cplx",
    "rp2-complement.cplx",
    "gamma.cplx",
    "delta1.cplx",
    "delta2.cplx",
    "delta2.order",
    "delta1.over",
    "delta2.over",
    "link-counterexample.cplx",
)


@dataclass(frozen=True)
class Check:
    criterion: int
    name: str
    status: str
    detail: str = ""


def default_data_dir():
    return files("fcomplex") / "paper-data"


def load_data(data_dir=None) -> dict[str, str]:
    base = default_data_dir() if data_dir is None else Path(data_dir)
    return {name: (base / name).read_text() for name in DATA_FILES}


class _Recorder:
    def __init__(self, criterion: int):
        self.criterion = criterion
        self.rows: list[Check] = []

    def __call__(self, name: str, ok: bool, detail: str = "") -> bool:
        self.rows.append(Check(self.criterion, name, "pass" if ok else "fail", detail))
        return ok

    def flag(self, name: str, detail: str):
        self.rows.append(Check(self.criterion, name, "flag", detail))


def _fcheck_detail(cx: Complex) -> tuple[bool, str]:
    rep = is_f_complex_pure(cx)
    d = cx.dim + 1
    parts = [
        f"L={'yes' if rep.is_L else 'no'}",
        f"U={'yes' if rep.is_U else 'no'}",
        f"count {len(cx.facets)} {'==' if rep.count_ok else '!='} {comb(cx.n, d) // 2} = C({cx.n},{d})/2",
    ]
    if rep.missing_lower:
        parts.append("missing lower " + " ".join(face_str(m) for m in rep.missing_lower))
    return rep.is_f, ", ".join(parts)


def check_rp2(data, field: FieldSpec) -> list[Check]:
    rec = _Recorder(1)
    T = parse_complex(data["rp2.cplx"])
    Tc = parse_complex(data["rp2-complement.cplx"])
    rec("rp2-complement equals facet complements", complement_complex(T) == Tc)
    for name, X in (("rp2", T), ("rp2-complement", Tc)):
        cm = is_cm(X, field)
        rec(f"{name} CM over {field}", bool(cm), cm.describe())
        if cm:
            non_cm = sum(not is_cm(Complex(X.n, tuple(g for g in X.facets if g != f)), field) for f in X.facets)
            rec(f"{name} minimal CM", non_cm == len(X.facets), f"{non_cm}/{len(X.facets)} deletions non-CM")
        ok, detail = _fcheck_detail(X)
        rec(f"{name} f-complex", ok, detail)
        res = find_shelling(X)
        rec(f"{name} not shellable (exhaustive)", res.status == "none", f"{res.status} after {res.nodes} nodes")
    return rec.rows


def check_main_theorem(data, field: FieldSpec) -> list[Check]:
    rec = _Recorder(2)
    T = parse_complex(data["rp2.cplx"])
    rec(f"rp2 acyclic over {field}", is_acyclic(T, field), str(reduced_homology(T, field).nonzero() or "all zero"))
    rec("n = 2(dim+1)", T.n == 2 * (T.dim + 1), f"n={T.n}, dim={T.dim}")
    probe = main_theorem_probe(T, field)
    rec("probe consistent", probe.applicable and not probe.falsified, "; ".join(probe.preconditions) or "consistent")
    return rec.rows


def check_field_dependence(data, field: FieldSpec) -> list[Check]:
    rec = _Recorder(3)
    T = parse_complex(data["rp2.cplx"])
    rep = is_cm(T, GF2)
    w = rep.witness
    rec(
        "rp2 not CM over gf:2, witness at the empty face in degree 1",
        not rep and w is not None and w.face == 0 and w.index == 1,
        rep.describe(),
    )
    dq, d2 = depth(T, QQ), depth(T, GF2)
    rec("depth over q is 3, over gf:2 is 2", (dq, d2) == (3, 2), f"depth q={dq}, gf:2={d2}")
    return rec.rows


def check_kernel_sweep(data, field: FieldSpec) -> list[Check]:
    rec = _Recorder(4)
    bad = []
    for n in range(3, 10):
        for r in range(n):
            try:
                simplex_kernel_dim(n, r)
            except ValueError as e:
                bad.append(str(e))
    rec("simplex kernel dims, 3 <= n <= 9", not bad, "; ".join(bad) or "all agree")
    full6, full8 = uniform(6, 6), uniform(8, 8)
    k6 = len(full6.faces(1)) - _rank(full6, 1)
    r8 = _rank(full8, 2)
    rec("n=6, r=1 gives 10", k6 == 10 and simplex_kernel_dim(6, 1) == 10, f"nullity {k6}")
    rec("n=8, r=2 gives 35 with rank 21", r8 == 21 and len(full8.faces(2)) - r8 == 35, f"rank {r8}")
    return rec.rows


def _rank(cx: Complex, i: int) -> int:
    return rank(boundary_matrix(cx, i).sparse_rows())


def check_skeleton_homology(data, field: FieldSpec) -> list[Check]:
    rec = _Recorder(5)
    bad = []
    for n in range(3, 9):
        for r in range(2, n):
            h = reduced_homology(uniform(n, r))
            expected = {r - 1: comb(n - 1, r)}
            if h.nonzero() != expected:
                bad.append(f"[{n}]_{r}: {h.nonzero()}")
    rec("uniform complexes: only degree r-1, of dim C(n-1,r)", not bad, "; ".join(bad) or "all agree")
    return rec.rows


def check_gamma(data, field: FieldSpec) -> list[Check]:
    rec = _Recorder(6)
    G = parse_complex(data["gamma.cplx"])
    cone, apex = is_cone(G)
    rec("gamma is a cone with apex 1", cone and apex == 1, f"apex {apex}")
    cm = is_cm(G, field)
    rec(f"gamma minimal CM over {field}", bool(cm) and is_minimal_cm(G, field), cm.describe())
    rec(f"gamma acyclic over {field}", is_acyclic(G, field))
    return rec.rows


def _shelled_over_row(rec, name, cx, cert, field, fallback):
    try:
        res = verify_shelled_over(cx, cert, field)
        ok, detail = res.ok, res.reason or "verifies"
        if not ok:
            detail = f"step {res.failed_at}: {res.reason}"
    except ComplexError as e:
        ok, detail = False, str(e)
    if ok:
        rec(name, True, detail)
        return
    confirmed, how = fallback()
    if confirmed:
        rec.flag(name, f"printed sequence rejected ({detail}); claim confirmed by {how}")
    else:
        rec(name, False, detail)


def check_delta1(data, field: FieldSpec) -> list[Check]:
    rec = _Recorder(7)
    D1 = parse_complex(data["delta1.cplx"])
    G = parse_complex(data["gamma.cplx"])
    rec("delta1 has 35 facets", len(D1.facets) == 35, str(len(D1.facets)))
    cm = is_cm(D1, field)
    rec(f"delta1 CM over {field}", bool(cm), cm.describe())
    rep = is_f_complex_pure(D1)
    rec("delta1 not an f-complex, 127 missing from lower shadow",
        not rep and to_mask((1, 2, 7)) in rep.missing_lower,
        "missing lower " + " ".join(face_str(m) for m in rep.missing_lower))
    cert = parse_certificate(data["delta1.over"], field)

    def fallback():
        # the other printed sequence uses the same 25 facets
        other = parse_certificate(data["delta2.over"], field)
        try:
            if verify_shelled_over(D1, other, field):
                return True, "the sequence printed for delta2, which verifies on delta1"
        except ComplexError:
            pass
        res = shelled_over_onto(D1, G, field)
        return res.found, "search for another sequence onto gamma"

    _shelled_over_row(rec, "printed shelled-over sequence onto gamma verifies", D1, cert, field, fallback)
    return rec.rows


def check_delta2(data, field: FieldSpec) -> list[Check]:
    rec = _Recorder(8)
    D2 = parse_complex(data["delta2.cplx"])
    G = parse_complex(data["gamma.cplx"])
    ok, detail = _fcheck_detail(D2)
    rec("delta2 f-complex", ok, detail)
    try:
        order = parse_order(data["delta2.order"], D2.n)
        sh = verify_shelling(D2, order)
        rec("printed shelling verifies", sh.ok, "verifies" if sh else f"fails at F_{sh.failed_at}")
        chain = verify_cm_prefix_chain(D2, order, field)
        rec(f"every shelling prefix CM over {field}", chain.ok, "all prefixes CM" if chain else f"prefix {chain.failed_at}")
    except ValueError as e:
        rec("printed shelling verifies", False, str(e))
    cert = parse_certificate(data["delta2.over"], field)

    def fallback():
        res = shelled_over_onto(D2, G, field)
        return res.found, "search for a sequence onto gamma"

    _shelled_over_row(rec, "printed shelled-over sequence onto gamma verifies", D2, cert, field, fallback)
    return rec.rows


def random_pure_complex(rng: random.Random, max_n: int = 6, max_facets: int = 8) -> Complex:
    n = rng.randint(3, max_n)
    k = rng.randint(1, n - 1)
    pool = k_subsets(n, k)
    m = rng.randint(2, min(max_facets, len(pool)))
    return from_facets(n, rng.sample(pool, m))


def shelling_corpus(seed: int, size: int = 200) -> list[Complex]:
    rng = random.Random(seed)
    return [random_pure_complex(rng) for _ in range(size)]


def check_equivalence(data, field: FieldSpec, seed: int = 0) -> list[Check]:
    rec = _Recorder(9)
    rng = random.Random(seed + 1)
    order_bad, search_bad, orders = [], [], 0
    for cx in shelling_corpus(seed):
        samples = [rng.sample(cx.facets, len(cx.facets)) for _ in range(3)]
        found = find_shelling(cx)
        if found.found:
            samples.append(list(found.order))
        for order in samples:
            orders += 1
            if bool(verify_shelling(cx, order)) != bool(verify_cm_prefix_chain(cx, order, QQ)):
                order_bad.append(str(cx))
        if found.found != find_cm_prefix_order(cx, QQ).found:
            search_bad.append(str(cx))
    rec("shelling order iff CM prefix chain", not order_bad, f"{orders} orders, {len(order_bad)} disagreements")
    rec("find_shelling agrees with CM-prefix search", not search_bad, f"{len(search_bad)} disagreements")
    return rec.rows


def check_shelling_move_lemma(data, field: FieldSpec, seed: int = 0) -> list[Check]:
    rec = _Recorder(10)
    pool = [parse_complex(data[k]) for k in ("rp2.cplx", "rp2-complement.cplx", "gamma.cplx", "delta1.cplx", "delta2.cplx")]
    pool += shelling_corpus(seed)
    tested, bad = 0, []
    for cx in pool:
        if len(cx.facets) >= 2 and is_cm(cx, field):
            tested += 1
            bad += [f"{cx} at {face_str(f)}" for f in cx.facets if not is_shelling_move(cx, f)]
    rec("CM with >= 2 facets: every facet a shelling move", not bad, f"{tested} CM complexes, {len(bad)} violations")
    return rec.rows


def check_link_counterexample(data, field: FieldSpec) -> list[Check]:
    rec = _Recorder(11)
    P = parse_complex(data["link-counterexample.cplx"])
    lk = link(P, (1, 2))
    rec("lk(12) = <34,35,78,79>, disconnected",
        lk == from_facets(P.n, [(3, 4), (3, 5), (7, 8), (7, 9)]) and connected_components(lk) == 2, str(lk))
    rec("every facet deletion is a shelling move", all(is_shelling_move(P, f) for f in P.facets))
    rec("link connectivity condition fails", not link_connectivity_condition(P))
    return rec.rows


def check_top_cycle(data, field: FieldSpec) -> list[Check]:
    rec = _Recorder(12)
    T = parse_complex(data["rp2.cplx"])
    for name, cx, fld in (("<[4]_3> over q", uniform(4, 3), QQ), ("rp2 over gf:2", T, GF2)):
        f = top_cycle_facet(cx, fld)
        res = check_facet_removal(cx, f, fld)
        rec(f"{name}: removing {face_str(f)}", bool(res),
            f"homology {res.homology_ok}, f-vector {res.fvector_ok}, depth {res.depth_ok}")
    return rec.rows


def check_mayer_vietoris(data, field: FieldSpec) -> list[Check]:
    rec = _Recorder(13)
    T = parse_complex(data["rp2.cplx"])
    try:
        rec(f"rp2 over {field}: deletion and intersection homology agree", mayer_vietoris_check(T, field))
    except ValueError as e:
        rec(f"rp2 over {field}: deletion and intersection homology agree", False, str(e))
    return rec.rows


def random_clutter(rng: random.Random, max_n: int = 7) -> Clutter:
    n = rng.randint(2, max_n)
    d = rng.randint(1, n - 1)
    pool = k_subsets(n, d)
    # half-size clutters are the only candidates for f-ideals; bias towards them
    m = len(pool) // 2 if rng.random() < 0.7 else rng.randint(1, len(pool))
    m = max(m, 1)
    return Clutter.from_generators(n, rng.sample(pool, m))


def check_newton(data, field: FieldSpec, seed: int = 0) -> list[Check]:
    rec = _Recorder(14)
    rng = random.Random(seed + 14)
    bad, positives = 0, 0
    for _ in range(500):
        c = random_clutter(rng)
        a, b = is_f(c), is_f(newton_dual(c))
        positives += a
        bad += a != b
    rec("f-property invariant under Newton dual", bad == 0, f"500 clutters, {positives} f-ideals, {bad} violations")
    return rec.rows


CHECKS = (
    check_rp2,
    check_main_theorem,
    check_field_dependence,
    check_kernel_sweep,
    check_skeleton_homology,
    check_gamma,
    check_delta1,
    check_delta2,
    check_equivalence,
    check_shelling_move_lemma,
    check_link_counterexample,
    check_top_cycle,
    check_mayer_vietoris,
    check_newton,
)

SEEDED = {check_equivalence, check_shelling_move_lemma, check_newton}


def run_suite(data_dir=None, field: FieldSpec = QQ, seed: int = 0) -> list[Check]:
    data = load_data(data_dir)
    rows: list[Check] = []
    for check in CHECKS:
        kwargs = {"seed": seed} if check in SEEDED else {}
        try:
            rows.extend(check(data, field, **kwargs))
        except (ValueError, KeyError) as e:
            rows.append(Check(CHECKS.index(check) + 1, check.__name__, "fail", f"error: {e}"))
    return rows


def divergence_note(data_dir=None, field: FieldSpec = QQ) -> str | None:
    if field == QQ:
        return None
    T = parse_complex(load_data(data_dir)["rp2.cplx"])
    if is_cm(T, field):
        return None
    return (
        f"note: rp2 is not CM over {field} (characteristic {field.p}); "
        "checks that rely on it are expected to fail under this field"
    )
