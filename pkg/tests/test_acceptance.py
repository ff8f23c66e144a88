"""Acceptance criteria, one test each.

Every test records a single ``[criterion N] PASS|FAIL: ...`` line, printed in
the terminal summary (see conftest.py), and then asserts on it.  Values are
exact; independent checks come from tests/oracles.py.
"""

import random
from itertools import combinations
from math import comb

import oracles
from fcomplex.cm import check_facet_removal, depth, is_cm, is_minimal_cm
from fcomplex.complex import (
    ComplexError,
    facet_deletion,
    from_facets,
    intersection_with_facet,
    is_cone,
    link,
    connected_components,
    uniform,
    vertices,
)
from fcomplex.fideal import is_f, is_f_complex_pure, main_theorem_probe, newton_dual
from fcomplex.homology import QQ, FieldSpec, boundary_matrix, is_acyclic, reduced_homology, simplex_kernel_dim, top_cycle_facet
from fcomplex.io import parse_certificate, parse_order
from fcomplex.linalg import rank
from fcomplex.shelling import (
    find_cm_prefix_order,
    find_shelling,
    is_shelling_move,
    verify_cm_prefix_chain,
    verify_shelled_over,
    verify_shelling,
)
from fcomplex.suite import random_clutter, shelling_corpus

GF2 = FieldSpec(2)
LARGE_PRIME = 2**31 - 1

RESULTS: dict[int, str] = {}


def record(criterion, clauses):
    """Store the criterion line and fail the test if any clause failed."""
    failed = [name for name, ok in clauses if not ok]
    status = "FAIL" if failed else "PASS"
    summary = "; ".join(f"{name}: {'ok' if ok else 'FAILED'}" for name, ok in clauses)
    line = f"[criterion {criterion:2d}] {status}: {summary}"
    RESULTS[criterion] = line
    print(line)
    assert not failed, line


def sets(cx):
    return [frozenset(vertices(f)) for f in cx.facets]


def oracle_homology(cx, p=None):
    return oracles.reduced_homology(sets(cx), cx.n, p)


def test_criterion_01_rp2(T, Tc):
    clauses = []
    for name, X in (("T", T), ("T^c", Tc)):
        fs = sets(X)
        clauses.append((f"{name} CM over Q", bool(is_cm(X)) and oracles.reisner_cm(fs, 6)))
        deletions_non_cm = all(
            not is_cm(facet_deletion(X, f)) and not oracles.reisner_cm([g for g in fs if g != frozenset(vertices(f))], 6)
            for f in X.facets
        )
        clauses.append((f"{name} minimal CM (10/10 deletions non-CM)", is_minimal_cm(X) and deletions_non_cm))
        rep = is_f_complex_pure(X)
        nf, fc = oracles.nonface_and_facet_fvectors(fs, 6)
        clauses.append(
            (f"{name} f-complex (L, U, 10 = C(6,3)/2)",
             rep.is_L and rep.is_U and len(X.facets) == 10 == comb(6, 3) // 2 and nf == fc)
        )
        search = find_shelling(X)
        clauses.append(
            (f"{name} not shellable (exhaustive, {search.nodes} nodes)",
             search.status == "none" and find_cm_prefix_order(X).status == "none")
        )
    record(1, clauses)


def test_criterion_02_main_theorem_instance(T):
    probe = main_theorem_probe(T)
    h = oracle_homology(T)
    record(2, [
        ("T acyclic over Q", is_acyclic(T) and not any(h.values())),
        ("n = 6 = 2(d+1)", T.n == 6 == 2 * (T.dim + 1)),
        ("probe applicable and consistent", probe.applicable and not probe.falsified),
    ])


def test_criterion_03_field_dependence(T):
    res = is_cm(T, GF2)
    h_empty = oracle_homology(T, 2)
    fs = sets(T)
    record(3, [
        ("T not CM over GF(2)", not res and not oracles.reisner_cm(fs, 6, 2)),
        ("witness at the empty face, index 1",
         res.witness is not None and res.witness.face == 0 and res.witness.index == 1 and h_empty[1] == res.witness.dimension),
        ("depth over GF(2) = 2", depth(T, GF2) == 2 == oracles.depth(fs, 6, 2)),
        ("depth over Q = 3", depth(T) == 3 == oracles.depth(fs, 6)),
    ])


def test_criterion_04_kernel_dimension_sweep():
    mismatches = []
    for n in range(3, 10):
        for r in range(n):
            if simplex_kernel_dim(n, r) != comb(n - 1, r + 1):
                mismatches.append((n, r))
    rank_8_2 = rank(boundary_matrix(uniform(8, 8), 2).sparse_rows())
    record(4, [
        ("nullity = C(n-1, r+1) for 3 <= n <= 9, 0 <= r < n", not mismatches),
        ("(n=6, r=1) -> 10", simplex_kernel_dim(6, 1) == 10),
        ("(n=8, r=2) -> 35 with rank 21", simplex_kernel_dim(8, 2) == 35 and rank_8_2 == 21),
    ])


def test_criterion_05_skeleton_homology():
    bad = []
    for n in range(3, 9):
        for r in range(2, n):
            cx = uniform(n, r)
            expected = {i: (comb(n - 1, r) if i == r - 1 else 0) for i in range(-1, r)}
            got = reduced_homology(cx).dims
            ref = oracle_homology(cx, LARGE_PRIME)
            if got != expected or ref != expected:
                bad.append((n, r))
    record(5, [("H̃_{r-1} = C(n-1, r), zero elsewhere, 2 <= r < n <= 8", not bad)])


def test_criterion_06_gamma(gamma):
    fs = sets(gamma)
    common = frozenset.intersection(*fs)
    record(6, [
        ("cone with apex 1", is_cone(gamma) == (True, 1) and common == {1}),
        ("minimal CM over Q", bool(is_cm(gamma)) and is_minimal_cm(gamma)),
        ("acyclic over Q", is_acyclic(gamma) and not any(oracle_homology(gamma).values())),
    ])


def test_criterion_07_delta1(data, delta1):
    rep = is_f_complex_pure(delta1)
    missing = sorted(tuple(vertices(m)) for m in rep.missing_lower)
    # independent lower shadow: every 3-subset of some facet
    shadow = {s for f in sets(delta1) for s in map(frozenset, combinations(sorted(f), 3))}
    cert = parse_certificate(data["delta1.over"])
    res = verify_shelled_over(delta1, cert)
    record(7, [
        ("35 facets", len(delta1.facets) == 35),
        ("CM over Q", bool(is_cm(delta1))),
        ("not an f-complex, 127 missing from the lower shadow",
         not rep and (1, 2, 7) in missing and frozenset({1, 2, 7}) not in shadow),
        (f"printed 25-step shelled-over sequence verifies (step {res.failed_at}: {res.reason})"
         if not res else "printed 25-step shelled-over sequence verifies", bool(res)),
    ])


def test_criterion_08_delta2(data, delta2):
    rep = is_f_complex_pure(delta2)
    order = parse_order(data["delta2.order"], 8)
    cert = parse_certificate(data["delta2.over"])
    try:
        res = verify_shelled_over(delta2, cert)
        seq_name, seq_ok = "printed 25-step shelled-over sequence verifies", bool(res)
        if not res:
            seq_name += f" (step {res.failed_at}: {res.reason})"
    except ComplexError as e:
        listed = set(cert.core.facets) | set(cert.added)
        absent = sorted("".join(map(str, vertices(m))) for m in set(delta2.facets) - listed)
        seq_name = f"printed 25-step shelled-over sequence verifies ({e}; absent {' '.join(absent)})"
        seq_ok = False
    nf, fc = oracles.nonface_and_facet_fvectors(sets(delta2), 8)
    record(8, [
        ("f-complex (LU, 35 = C(8,4)/2)",
         rep.is_L and rep.is_U and len(delta2.facets) == 35 == comb(8, 4) // 2 and nf == fc),
        ("printed 35-facet shelling verifies", bool(verify_shelling(delta2, order))),
        ("every shelling prefix CM over Q", bool(verify_cm_prefix_chain(delta2, order, QQ))),
        (seq_name, seq_ok),
    ])


def test_criterion_09_shelling_equivalence():
    rng = random.Random(9)
    corpus = shelling_corpus(seed=0, size=200)
    order_disagreements = search_disagreements = 0
    for cx in corpus:
        orders = []
        for _ in range(3):
            o = list(cx.facets)
            rng.shuffle(o)
            orders.append(o)
        found = find_shelling(cx)
        if found.found:
            orders.append(list(found.order))
        for o in orders:
            if bool(verify_shelling(cx, o)) != bool(verify_cm_prefix_chain(cx, o, QQ)):
                order_disagreements += 1
        if found.found != find_cm_prefix_order(cx, QQ).found:
            search_disagreements += 1
    assert len(corpus) >= 200 and all(cx.n <= 6 and len(cx.facets) <= 8 for cx in corpus)
    record(9, [
        (f"order verdicts agree on {len(corpus)} complexes ({order_disagreements} disagreements)", order_disagreements == 0),
        (f"search outcomes agree ({search_disagreements} disagreements)", search_disagreements == 0),
    ])


def test_criterion_10_shelling_move_lemma(T, Tc, gamma, delta1, delta2, data):
    certified = [T, Tc, gamma, delta1, delta2]
    order = parse_order(data["delta2.order"], 8)
    certified += [from_facets(8, order[: i + 1]) for i in range(1, len(order))]
    certified += [cx for cx in shelling_corpus(seed=0, size=200) if is_cm(cx)]
    checked = violations = 0
    for cx in certified:
        if len(cx.facets) < 2 or not is_cm(cx):
            continue
        fs = sets(cx)
        for f in cx.facets:
            checked += 1
            if not (is_shelling_move(cx, f) and oracles.shelling_move(fs, frozenset(vertices(f)))):
                violations += 1
    record(10, [(f"{checked} facets of CM complexes checked, {violations} violations", violations == 0 and checked > 0)])


def test_criterion_11_link_counterexample(counterexample):
    lk = link(counterexample, (1, 2))
    fs = sets(counterexample)
    oracle_lk = [f - {1, 2} for f in fs if {1, 2} <= f]
    moves = all(
        is_shelling_move(counterexample, f) and oracles.shelling_move(fs, frozenset(vertices(f)))
        for f in counterexample.facets
    )
    record(11, [
        ("lk(12) disconnected", connected_components(lk) == 2 and oracles.components(oracle_lk) == 2),
        ("every facet deletion is a shelling move", moves),
    ])


def test_criterion_12_top_cycle_facet(T):
    clauses = []
    for name, cx, field, p in (("<[4]_3> over Q", uniform(4, 3), QQ, None), ("T over GF(2)", T, GF2, 2)):
        f = top_cycle_facet(cx, field)
        sub = facet_deletion(cx, f)
        d = cx.dim
        h, hs = oracle_homology(cx, p), oracle_homology(sub, p)
        homology = all(hs.get(i, 0) == h.get(i, 0) - (i == d) for i in range(-1, d + 1))
        fv, fs = oracles.f_vector(sets(cx), cx.n), oracles.f_vector(sets(sub), cx.n)
        fvec = all(fs[k] == fv[k] - (k == d + 1) for k in range(len(fv)))
        dep = oracles.depth(sets(cx), cx.n, p) == oracles.depth(sets(sub), cx.n, p)
        lib = check_facet_removal(cx, f, field)
        clauses.append((f"{name}: facet {''.join(map(str, vertices(f)))} keeps homology/f-vector/depth clauses",
                        homology and fvec and dep and bool(lib)))
    record(12, clauses)


def test_criterion_13_mayer_vietoris(T):
    bad = []
    for f in T.facets:
        sub = facet_deletion(T, f)
        inter = intersection_with_facet(T, f)
        h_sub, h_int = oracle_homology(sub), oracle_homology(inter)
        same = all(h_sub.get(i, 0) == h_int.get(i, 0) for i in range(-1, 3))
        lib_same = all(reduced_homology(sub)[i] == reduced_homology(inter)[i] for i in range(-1, 3))
        if not (same and lib_same and inter.is_pure and inter.dim == 1):
            bad.append(f)
    record(13, [(f"all {len(T.facets)} facets of T: equal homology, intersection pure of dim 1", not bad)])


def test_criterion_14_newton_duality():
    rng = random.Random(14)
    checked = violations = 0
    while checked < 500:
        c = random_clutter(rng, 7)
        if len(c.degrees) != 1 or c.n in c.degrees:
            continue
        dual = newton_dual(c)
        checked += 1
        a = oracles.nonface_and_facet_fvectors([frozenset(vertices(m)) for m in c.members], c.n)
        b = oracles.nonface_and_facet_fvectors([frozenset(vertices(m)) for m in dual.members], c.n)
        if not (is_f(c) == is_f(dual) == (a[0] == a[1]) == (b[0] == b[1])):
            violations += 1
    record(14, [(f"{checked} pure clutters with n <= 7, {violations} violations", violations == 0)])
