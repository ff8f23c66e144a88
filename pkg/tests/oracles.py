"""Brute-force reference computations, independent of the library's engines."""

from itertools import combinations

import sympy


def all_faces(facet_sets, n):
    """Every subset of [n] contained in one of ``facet_sets`` (frozensets)."""
    out = []
    for k in range(n + 1):
        for c in combinations(range(1, n + 1), k):
            s = frozenset(c)
            if any(s <= f for f in facet_sets):
                out.append(s)
    return out


def boundary(lower, upper):
    idx = {f: i for i, f in enumerate(lower)}
    mat = [[0] * len(upper) for _ in lower]
    for j, f in enumerate(upper):
        vs = sorted(f)
        for pos, v in enumerate(vs):
            mat[idx[f - {v}]][j] = (-1) ** pos
    return mat


def rank_q(mat):
    if not mat or not mat[0]:
        return 0
    return sympy.Matrix(mat).rank()


def rank_mod_p(mat, p):
    m = [[x % p for x in row] for row in mat]
    r = 0
    cols = len(m[0]) if m else 0
    for c in range(cols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][c], p - 2, p)
        m[r] = [x * inv % p for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                t = m[i][c]
                m[i] = [(x - t * y) % p for x, y in zip(m[i], m[r])]
        r += 1
    return r


def reduced_homology(facet_sets, n, p=None):
    """{i: dim H̃_i} from dense boundary matrices of the augmented chain complex."""
    faces = all_faces(facet_sets, n)
    top = max(len(f) for f in faces)
    levels = [sorted((f for f in faces if len(f) == k), key=sorted) for k in range(top + 1)]
    rk = [0]
    for k in range(1, top + 1):
        mat = boundary(levels[k - 1], levels[k])
        rk.append(rank_q(mat) if p is None else rank_mod_p(mat, p))
    rk.append(0)
    return {k - 1: len(levels[k]) - rk[k] - rk[k + 1] for k in range(top + 1)}


def link(facet_sets, sigma):
    return [f - sigma for f in facet_sets if sigma <= f]


def reisner_cm(facet_sets, n, p=None):
    """Reisner's criterion with no short-circuits."""
    for sigma in all_faces(facet_sets, n):
        lk = link(facet_sets, sigma)
        h = reduced_homology(lk, n, p)
        d = max(len(f) for f in lk) - 1
        if any(h.get(i, 0) for i in range(-1, d)):
            return False
    return True


def components(facet_sets):
    """Connected components of the vertex graph of a complex."""
    comps = []
    for f in facet_sets:
        merged = set(f)
        rest = []
        for c in comps:
            if c & merged:
                merged |= c
            else:
                rest.append(c)
        comps = rest + [merged]
    return len(comps)


def shelling_move(facet_sets, f):
    """Δ_F ∩ ⟨F⟩ is nonempty and generated by (|F|-1)-subsets of F."""
    others = [g for g in facet_sets if g != f]
    inter = {f & g for g in others}
    maximal = [x for x in inter if not any(x < y for y in inter)]
    return bool(others) and all(len(x) == len(f) - 1 for x in maximal)


def nonface_and_facet_fvectors(members, n):
    """f-vectors (padded to length n+1) of the nonface and facet complexes of a clutter."""
    nonface = [0] * (n + 1)
    facet = [0] * (n + 1)
    for k in range(n + 1):
        for s in map(frozenset, combinations(range(1, n + 1), k)):
            if not any(m <= s for m in members):
                nonface[k] += 1
            if any(s <= m for m in members):
                facet[k] += 1
    return nonface, facet


def f_vector(facet_sets, n):
    counts = [0] * (n + 2)
    for f in all_faces(facet_sets, n):
        counts[len(f)] += 1
    while counts and counts[-1] == 0:
        counts.pop()
    return counts


def depth(facet_sets, n, p=None):
    top = max(len(f) for f in facet_sets)
    for size in range(top, -1, -1):
        skel = {f for f in all_faces(facet_sets, n) if len(f) == size}
        if skel and reisner_cm(list(skel), n, p):
            return size
    return 0
