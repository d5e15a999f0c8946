"""Named lattices, glued/connected fixtures, the projective-plane example,
and the small-lattice enumerator used as the verification corpus."""

from itertools import combinations, permutations, product as iproduct

from .core import FiniteLattice, LatticeError, product
from .connect import LocalConnectedSystem, connected_sum, elevate
from .glue import GluedSystem, glued_sum


class LimitExceeded(LatticeError):
    pass


# -- named lattices ----------------------------------------------------

def chain(n):
    """Chain of length n (n+1 elements '0'..'n')."""
    ids = [str(i) for i in range(n + 1)]
    return FiniteLattice(ids, list(zip(ids, ids[1:])))


def boolean(n):
    """Boolean lattice 2^n; element ids are sorted letter subsets."""
    letters = "abcdefgh"[:n]
    def name(s):
        return "".join(sorted(s)) or "0"
    ids = [name(s) for r in range(n + 1) for s in combinations(letters, r)]
    covers = [(name(s), name(set(s) | {x}))
              for r in range(n) for s in combinations(letters, r)
              for x in letters if x not in s]
    return FiniteLattice(ids, covers)


def m_k(k, ids=None):
    """0, k pairwise-incomparable atoms, 1."""
    if ids is None:
        ids = ["0"] + [f"a{i}" for i in range(1, k + 1)] + ["1"]
    bot, mid, top = ids[0], ids[1:-1], ids[-1]
    return FiniteLattice(ids, [(bot, a) for a in mid] + [(a, top) for a in mid])


def m3():
    return FiniteLattice(["0", "a", "b", "c", "1"],
                         [("0", "a"), ("0", "b"), ("0", "c"),
                          ("a", "1"), ("b", "1"), ("c", "1")])


def n5():
    return FiniteLattice(["0", "a", "b", "c", "1"],
                         [("0", "a"), ("a", "b"), ("b", "1"),
                          ("0", "c"), ("c", "1")])


def grid(p, q):
    """The product of chains C_p × C_q (a (p+1)×(q+1) grid)."""
    return product(chain(p), chain(q))


FANO_LINES = [(1, 2, 4), (2, 3, 5), (3, 4, 6), (4, 5, 7), (1, 5, 6),
              (2, 6, 7), (1, 3, 7)]


def fano_lattice(prefix=""):
    """Subspace lattice of the Fano plane: 0, 7 points, 7 lines, 1."""
    bot, top = prefix + "0", prefix + "1"
    pts = {i: f"{prefix}p{i}" for i in range(1, 8)}
    lns = {l: prefix + "l" + "".join(map(str, l)) for l in FANO_LINES}
    covers = [(bot, p) for p in pts.values()]
    covers += [(pts[i], lns[l]) for l in FANO_LINES for i in l]
    covers += [(ln, top) for ln in lns.values()]
    return FiniteLattice([bot, *pts.values(), *lns.values(), top], covers)


# -- glued fixtures over shared carriers -------------------------------

def _lat(elems, covers):
    return FiniteLattice(elems, covers)


def _square(a, b, c, d):
    # a < b,c < d
    return _lat([a, b, c, d], [(a, b), (a, c), (b, d), (c, d)])


def fig_3by3_system():
    """Four 2x2 squares glued over a diamond; the sum is the 3x3 grid."""
    S = _lat(["1", "2", "3", "4"], [("1", "2"), ("1", "3"), ("2", "4"), ("3", "4")])
    blocks = {
        "1": _square("a", "b", "c", "e"),
        "2": _square("b", "d", "e", "g"),
        "3": _square("c", "e", "f", "h"),
        "4": _square("e", "g", "h", "i"),
    }
    return GluedSystem(S, blocks)


def note2_overlap_system():
    """Valid gluing over a 4-chain where L1 ⊆ L2: not strictly monotone
    and 0_1 = 0_2."""
    S = _lat(["1", "2", "3", "4"], [("1", "2"), ("2", "3"), ("3", "4")])
    blocks = {
        "1": _lat(["a", "b"], [("a", "b")]),
        "2": _lat(["a", "b", "c", "d"], [("a", "b"), ("b", "c"), ("c", "d")]),
        "3": _lat(["c", "d"], [("c", "d")]),
        "4": _lat(["c", "d"], [("c", "d")]),
    }
    return GluedSystem(S, blocks)


def note3_system():
    """B3 with the interval [b, 1] repeated as upper block: valid, not
    strictly monotone; the sum's skeleton is strictly smaller than the
    union of block skeletons."""
    S = _lat(["1", "2"], [("1", "2")])
    b3 = _lat(["0", "a", "b", "c", "ab", "ac", "bc", "1"],
              [("0", "a"), ("0", "b"), ("0", "c"),
               ("a", "ab"), ("a", "ac"), ("b", "ab"), ("b", "bc"),
               ("c", "ac"), ("c", "bc"),
               ("ab", "1"), ("ac", "1"), ("bc", "1")])
    upper = _square("b", "ab", "bc", "1")
    return GluedSystem(S, {"1": b3, "2": upper})


def unbounded_family(n):
    """Finite truncation of the unbounded-length construction: skeleton
    with n atoms, staircase block of length k+1 at the k-th atom."""
    S = m_k(n, ["A"] + [str(k) for k in range(1, n + 1)] + ["O"])
    bs = [f"b{k}" for k in range(1, n + 1)]
    gs = [f"g{k}" for k in range(1, n + 1)]
    blocks = {"A": _lat(["a", *bs, "e"],
                        [("a", b) for b in bs] + [(b, "e") for b in bs]),
              "O": _lat(["e", *gs, "h"],
                        [("e", g) for g in gs] + [(g, "h") for g in gs])}
    for k in range(1, n + 1):
        ds = [f"d{k}{i}" for i in range(1, k + 1)]
        rung = [f"b{k}", *ds, f"g{k}"]
        covers = list(zip(rung, rung[1:])) + [(f"b{k}", "e"), ("e", f"g{k}")]
        blocks[str(k)] = _lat([f"b{k}", *ds, "e", f"g{k}"], covers)
    return GluedSystem(S, blocks)


def hd_two_chains():
    """Hall-Dilworth gluing of two 2-chains sharing one element -> C2."""
    S = _lat(["s0", "s1"], [("s0", "s1")])
    return GluedSystem(S, {"s0": _lat(["a", "u"], [("a", "u")]),
                           "s1": _lat(["u", "b"], [("u", "b")])})


def hd_two_m3():
    """Two diamonds M3 sharing one element (top of one = bottom of other)."""
    S = _lat(["s0", "s1"], [("s0", "s1")])
    lo = m_k(3, ["z", "a", "b", "c", "t"])
    hi = m_k(3, ["t", "d", "e", "f", "u"])
    return GluedSystem(S, {"s0": lo, "s1": hi})


def hd_two_m3_edge():
    """Two diamonds M3 glued along a shared 2-chain (a filter of the lower
    one identified with an ideal of the upper one)."""
    S = _lat(["s0", "s1"], [("s0", "s1")])
    lo = m_k(3, ["z", "a", "b", "c", "t"])
    hi = m_k(3, ["a", "t", "e", "f", "w"])
    return GluedSystem(S, {"s0": lo, "s1": hi})


def m3_chain_edges():
    """Three diamonds glued along shared 2-chains over a chain skeleton."""
    S = chain(2)
    return GluedSystem(S, {
        "0": m_k(3, ["z", "a", "b", "c", "t"]),
        "1": m_k(3, ["a", "t", "e", "f", "w"]),
        "2": m_k(3, ["e", "w", "g", "h", "u"]),
    })


def copies_local_system(S, block=None):
    """Locally connected system over S: one disjoint copy of `block` per
    skeleton element, with total name-matching cover maps (so every chain
    composition agrees and the quotient identifies all copies)."""
    if block is None:
        block = chain(1)
    blocks = {x: FiniteLattice([f"{x}:{a}" for a in block.elements],
                               [(f"{x}:{a}", f"{x}:{b}")
                                for a, b in block.covers])
              for x in S.elements}
    maps = {(x, y): {f"{x}:{a}": f"{y}:{a}" for a in block.elements}
            for x, y in S.covers}
    return LocalConnectedSystem(S, blocks, maps)


def m3_chain_of_three():
    """Three diamonds stacked along a chain skeleton."""
    S = chain(2)
    return GluedSystem(S, {
        "0": m_k(3, ["z", "a1", "a2", "a3", "t"]),
        "1": m_k(3, ["t", "b1", "b2", "b3", "u"]),
        "2": m_k(3, ["u", "c1", "c2", "c3", "w"]),
    })


def section1_nonexample_a1():
    """Overlap {u0} fails to be a filter of the lower block."""
    S = _lat(["s0", "s1"], [("s0", "s1")])
    return GluedSystem(S, {
        "s0": _lat(["p", "u0", "t"], [("p", "u0"), ("u0", "t")]),
        "s1": _lat(["u0", "v"], [("u0", "v")]),
    })


def section1_nonexample_a4():
    """L_x ∩ L_y = {u1, a} escapes L_{x∧y} ∩ L_{x∨y} = {u1}."""
    S = _lat(["s0", "sx", "sy", "s1"],
             [("s0", "sx"), ("s0", "sy"), ("sx", "s1"), ("sy", "s1")])
    return GluedSystem(S, {
        "s0": _lat(["z", "a", "u1"], [("z", "a"), ("a", "u1")]),
        "sx": _lat(["a", "u1"], [("a", "u1")]),
        "sy": _lat(["a", "u1"], [("a", "u1")]),
        "s1": _lat(["u1", "w"], [("u1", "w")]),
    })


# -- worked constructions ------------------------------------------------

def distributive_with_skeleton(S):
    """A distributive lattice whose skeleton is (isomorphic to) S.

    Block at x is the interval [(∅,[x)), ((x],∅)] of P(S) × P(S)ᵟ, i.e.
    pairs (A, B) with A ⊆ (x], B ⊆ [x); join is (∪,∩), meet is (∩,∪).
    Returns the glued system; its sum is the lattice M.
    """
    def pid(A, B):
        return "{%s|%s}" % (",".join(sorted(map(str, A))),
                            ",".join(sorted(map(str, B))))

    def powerset(base):
        base = sorted(base, key=str)
        return [frozenset(c) for r in range(len(base) + 1)
                for c in combinations(base, r)]

    blocks = {}
    for x in S.elements:
        down = S.down_set(x)
        up = S.up_set(x)
        elems = [(A, B) for A in powerset(down) for B in powerset(up)]
        ids = [pid(A, B) for A, B in elems]
        covers = []
        for A, B in elems:
            for a in down - A:
                covers.append((pid(A, B), pid(A | {a}, B)))
            for b in B:
                covers.append((pid(A, B), pid(A, B - {b})))
        blocks[x] = FiniteLattice(ids, covers)
    return GluedSystem(S, blocks)


def square_sublattice(S):
    """Glued system of the intervals [(x⁺,x), (x,x*)] of S × S, for
    modular S; the sum is a sublattice of S×S with skeleton S."""
    from .skeleton import plus, star

    def pid(u, v):
        return f"{u},{v}"

    blocks = {}
    for x in S.elements:
        lo_u = plus(S, x)
        hi_v = star(S, x)
        us = [u for u in S.elements if S.leq(lo_u, u) and S.leq(u, x)]
        vs = [v for v in S.elements if S.leq(x, v) and S.leq(v, hi_v)]
        ids = [pid(u, v) for u in us for v in vs]
        covers = []
        for u in us:
            for v in vs:
                for u2 in S.upper_covers(u):
                    if S.leq(u2, x):
                        covers.append((pid(u, v), pid(u2, v)))
                for v2 in S.upper_covers(v):
                    if S.leq(v2, hi_v):
                        covers.append((pid(u, v), pid(u, v2)))
        blocks[x] = FiniteLattice(ids, covers)
    return GluedSystem(S, blocks)


# -- the projective-plane example ---------------------------------------

def _quad_lines():
    """Four lines of the Fano plane, no three concurrent (their six
    pairwise intersection points are distinct)."""
    for quad in combinations(FANO_LINES, 4):
        meets = [set(l1) & set(l2) for l1, l2 in combinations(quad, 2)]
        pts = [next(iter(m)) for m in meets]
        if all(len(m) == 1 for m in meets) and len(set(pts)) == 6:
            return quad
    raise AssertionError("no quadrilateral found")


def _quad_points():
    """Four points of the Fano plane, no three collinear."""
    for quad in combinations(range(1, 8), 4):
        if all(len(set(quad) & set(l)) <= 2 for l in FANO_LINES):
            return quad
    raise AssertionError("no quadrangle found")


def section4_example(all_m3=False):
    """Two Fano planes linked by four length-2 connector blocks over the
    diamond skeleton with four midpoints.

    Connector 1 is a diamond with atoms a1, e0, e1; connectors 2..4 are
    squares with atoms aj, ej (with all_m3=True they are diamonds with an
    extra atom fj, making every block simple).  Returns a dict with the
    local system, its elevation, the quotient glued system, the sum, and
    the five designated generators e0..e4.
    """
    S = m_k(4, ["s0", "x1", "x2", "x3", "x4", "s1"])
    lo = fano_lattice("lo:")
    hi = fano_lattice("hi:")
    g_lines = ["lo:l" + "".join(map(str, l)) for l in _quad_lines()]
    p_points = [f"hi:p{p}" for p in _quad_points()]
    blocks = {"s0": lo, "s1": hi}
    maps = {}
    gens = []
    for i in range(1, 5):
        x = f"x{i}"
        atoms = [f"c{i}:a", f"c{i}:e"]
        if i == 1:
            atoms = ["c1:a", "c1:e0", "c1:e"]
        elif all_m3:
            atoms.append(f"c{i}:f")
        blocks[x] = m_k(len(atoms), [f"c{i}:0", *atoms, f"c{i}:1"])
        gens.append(f"c{i}:e")
        maps[("s0", x)] = {g_lines[i - 1]: f"c{i}:0", "lo:1": f"c{i}:a"}
        maps[(x, "s1")] = {f"c{i}:a": "hi:0", f"c{i}:1": p_points[i - 1]}
    gens.insert(0, "c1:e0")
    lcs = LocalConnectedSystem(S, blocks, maps)
    cs = elevate(lcs, exhaustive=True)
    gsys, pis = connected_sum(cs)
    gen_ids = [pis["x1"][gens[0]]] + \
        [pis[f"x{i}"][g] for i, g in enumerate(gens[1:], start=1)]
    return {
        "local_system": lcs,
        "connected_system": cs,
        "glued_system": gsys,
        "projections": pis,
        "sum": glued_sum(gsys),
        "generators": gen_ids,
    }


def translator_fixtures():
    """Catalog of boundary-case systems: the grid gluing, the nested-block
    overlap, the shrinking-skeleton example, and the staircase family."""
    return {
        "fig_3by3": fig_3by3_system(),
        "overlap": note2_overlap_system(),
        "note3": note3_system(),
        "unbounded_family": unbounded_family,
    }


# -- enumeration of small lattices --------------------------------------

def canonical_key(L):
    """Minimal order-matrix code over permutations respecting structural
    invariant classes (all automorphism-compatible relabelings)."""
    inv = {a: (L.height(a), L.depth(a), len(L.upper_covers(a)),
               len(L.lower_covers(a)), len(L.up_set(a)), len(L.down_set(a)))
           for a in L.elements}
    for _ in range(2):
        inv = {a: (inv[a],
                   tuple(sorted(inv[b] for b in L.upper_covers(a))),
                   tuple(sorted(inv[b] for b in L.lower_covers(a))))
               for a in L.elements}
    classes = {}
    for a in sorted(L.elements, key=L.index):
        classes.setdefault(inv[a], []).append(a)
    ordered = [classes[k] for k in sorted(classes)]
    best = None
    for perm_parts in iproduct(*(permutations(c) for c in ordered)):
        seq = [a for part in perm_parts for a in part]
        code = bytes(L.leq(a, b) for a in seq for b in seq)
        if best is None or code < best:
            best = code
    return best


def _lattice_from_downsets(downs):
    n = len(downs)
    covers = []
    for j in range(n):
        for i in downs[j]:
            if i != j and not any(i in downs[k] for k in downs[j]
                                  if k != i and k != j):
                covers.append((str(i), str(j)))
    return FiniteLattice([str(i) for i in range(n)], covers)


def enumerate_lattices(max_elements):
    """All lattices with ≤ max_elements elements, one per isomorphism
    class.

    Elements are added one at a time in linear-extension order; each new
    element picks a downward-closed down-set D such that D ∩ ↓j has a
    maximum for every existing j (so meets stay well defined); states with
    a unique maximal element are bounded meet-semilattices, i.e. lattices.
    Isomorphs are rejected by canonical key.
    """
    if max_elements > 8:
        raise LimitExceeded("enumeration supported up to 8 elements")
    seen = set()

    def emit(downs):
        maximal = [j for j in range(len(downs))
                   if not any(j in d for k, d in enumerate(downs) if k != j)]
        if len(maximal) != 1:
            return None
        L = _lattice_from_downsets(downs)
        key = canonical_key(L)
        if key in seen:
            return None
        seen.add(key)
        return L

    def down_closed_choices(downs):
        k = len(downs)
        for bits in range(1, 1 << k):
            D = frozenset(i for i in range(k) if bits >> i & 1)
            if 0 not in D:
                continue
            if not all(downs[i] <= D for i in D):
                continue
            ok = True
            for j in range(k):
                cut = D & downs[j]
                if not any(cut <= downs[i] for i in cut):
                    ok = False
                    break
            if ok:
                yield D

    def rec(downs):
        L = emit(downs)
        if L is not None:
            yield L
        if len(downs) == max_elements:
            return
        for D in down_closed_choices(downs):
            yield from rec(downs + [D | {len(downs)}])

    if max_elements >= 1:
        yield from rec([frozenset({0})])


def naive_lattice_count(n):
    """Independent cross-check for small n: enumerate every labeled poset
    as the closure of an arbitrary upper-triangular relation, filter the
    bounded/unique-join/meet property, count isomorphism classes."""
    if n > 5:
        raise LimitExceeded("naive filter is for n <= 5")
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    seen_posets = set()
    keys = set()
    for bits in range(1 << len(pairs)):
        rel = [{i} for i in range(n)]
        for b, (i, j) in enumerate(pairs):
            if bits >> b & 1:
                rel[i].add(j)
        changed = True
        while changed:
            changed = False
            for i in range(n):
                new = set().union(*(rel[j] for j in rel[i]))
                if not new <= rel[i]:
                    rel[i] |= new
                    changed = True
        frozen = tuple(frozenset(r) for r in rel)
        if frozen in seen_posets:
            continue
        seen_posets.add(frozen)
        covers = [(str(i), str(j)) for i in range(n) for j in rel[i]
                  if i != j and not any(k != i and k != j and j in rel[k]
                                        for k in rel[i])]
        try:
            L = FiniteLattice([str(i) for i in range(n)], covers)
        except LatticeError:
            continue
        keys.add(canonical_key(L))
    return len(keys)
