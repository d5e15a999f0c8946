"""Decision procedures for lattice classes: modularity, semimodularity,
distributivity, atomisticity, breadth, n-distributivity, simplicity."""

import os
import random
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement

import numpy as np

from .core import LatticeError, UnknownElement


class NotModular(LatticeError):
    pass


def _tables(L):
    return L._join, L._meet, L._leq


def is_modular(L):
    """Modular law a ≦ c ⟹ a + (b·c) = (a+b)·c, over all triples."""
    cached = getattr(L, "_modular", None)
    if cached is not None:
        return cached
    J, M, leq = _tables(L)
    ok = True
    for a in range(L.n):
        cs = np.flatnonzero(leq[a])
        # vectorized over b for each (a, c) pair with a ≦ c
        for c in cs:
            if not np.array_equal(J[a, M[:, c]], M[J[a, :], c]):
                ok = False
                break
        if not ok:
            break
    L._modular = ok
    return ok


def is_semimodular(L):
    """Cover form: a ≺ b, a ≺ c, b ≠ c implies b+c covers both b and c."""
    for a in L.elements:
        ups = sorted(L.upper_covers(a))
        for b, c in combinations(ups, 2):
            s = L.join(b, c)
            if s not in L.upper_covers(b) or s not in L.upper_covers(c):
                return False
    return True


def is_dual_semimodular(L):
    return is_semimodular(L.dual())


def is_distributive(L):
    J, M, _ = _tables(L)
    for a in range(L.n):
        # a·(b+c) == (a·b)+(a·c) for all b, c at once
        if not np.array_equal(M[a, J], J[np.ix_(M[a], M[a])]):
            return False
    return True


def is_atomistic(L):
    atoms = L.atoms()
    for a in L.elements:
        if L.join_all(p for p in atoms if L.leq(p, a)) != a:
            return False
    return True


def is_coatomistic(L):
    return is_atomistic(L.dual())


def _shuffled(seq):
    seed = os.environ.get("LATTICE_SUITE_SEED")
    seq = list(seq)
    if seed is not None:
        random.Random(seed).shuffle(seq)
    return seq


def order_embeds_boolean(L, n):
    """Does the Boolean lattice 2^n order-embed into L?

    Backtracking over the 2^n subsets (as bitmasks) in popcount order;
    atom images are forced into increasing element order since atom
    permutations are automorphisms of 2^n.
    """
    if n == 0:
        return True
    if L.length() < n:
        return False
    N = L.n
    leq = L._leq
    lt = leq & ~np.eye(N, dtype=bool)
    height = np.array(L._height)
    depth = np.array(L._depth)
    J = L._join
    masks = sorted(range(1 << n), key=lambda m: (m.bit_count(), m))
    assigned = {}

    elem_order = _shuffled(range(N))

    def extend(k):
        if k == len(masks):
            return True
        m = masks[k]
        pc = m.bit_count()
        cand = (height >= pc) & (depth >= n - pc)
        floor = None
        for m2, e2 in assigned.items():
            sub, sup = m & m2 == m, m & m2 == m2
            if sub and sup:
                continue
            elif sub:
                cand &= lt[:, e2]
            elif sup:
                cand &= lt[e2, :]
                floor = e2 if floor is None else J[floor, e2]
            else:
                cand &= ~leq[:, e2] & ~leq[e2, :]
        if floor is not None:
            # image must lie above the join of images of assigned subsets
            cand &= leq[floor, :]
        prev_atom = None
        if pc == 1 and m != 1:
            prev_atom = assigned[1 << ((m.bit_length() - 1) - 1)]
        for e in elem_order:
            if not cand[e]:
                continue
            if prev_atom is not None and e <= prev_atom:
                continue
            assigned[m] = e
            if extend(k + 1):
                return True
            del assigned[m]
        return False

    return extend(0)


def breadth(L):
    cached = getattr(L, "_breadth", None)
    if cached is not None:
        return cached
    n = 0
    while order_embeds_boolean(L, n + 1):
        n += 1
    L._breadth = n
    return n


def is_n_distributive(L, n):
    """Huhn identity x·Σyᵢ = Σⱼ(x·Σ_{i≠j}yᵢ) over all assignments.

    Only defined for modular lattices; raises NotModular otherwise.
    y-tuples range over multisets (the identity is symmetric in the yᵢ).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if not is_modular(L):
        raise NotModular("n-distributivity is defined for modular lattices")
    J, M, _ = _tables(L)
    ys = np.array(list(combinations_with_replacement(range(L.n), n + 1)))
    total = ys[:, 0]
    for i in range(1, n + 1):
        total = J[total, ys[:, i]]
    # leave-one-out joins via prefix/suffix scans
    pre = np.zeros((len(ys), n + 2), dtype=np.int32)
    suf = np.zeros((len(ys), n + 2), dtype=np.int32)
    pre[:, 0] = L._bot
    suf[:, n + 1] = L._bot
    for i in range(n + 1):
        pre[:, i + 1] = J[pre[:, i], ys[:, i]]
    for i in range(n, -1, -1):
        suf[:, i] = J[suf[:, i + 1], ys[:, i]]
    drop = [J[pre[:, j], suf[:, j + 1]] for j in range(n + 1)]
    for x in range(L.n):
        lhs = M[x, total]
        rhs = M[x, drop[0]]
        for j in range(1, n + 1):
            rhs = J[rhs, M[x, drop[j]]]
        if not np.array_equal(lhs, rhs):
            return False
    return True


def has_forbidden_n_config(L, n):
    """Search for a sublattice U ≅ 2^(n+1) with atoms aᵢ plus an element w
    with aᵢ·w = inf U and aᵢ+w = sup U for all i."""
    if not is_modular(L):
        raise NotModular("configuration search assumes a modular lattice")
    elems = L.elements
    for u in elems:
        above = [a for a in elems if L.lt(u, a)]
        for ats in combinations(above, n + 1):
            if any(L.leq(a, b) for a, b in combinations(ats, 2)) or \
               any(L.leq(b, a) for a, b in combinations(ats, 2)):
                continue
            # joins of subsets must form a copy of 2^(n+1)
            sub = {}
            ok = True
            for r in range(n + 2):
                for picked in combinations(range(n + 1), r):
                    sub[picked] = L.join_all([u] + [ats[i] for i in picked])
            if len(set(sub.values())) != 1 << (n + 1):
                continue
            for s1 in sub:
                for s2 in sub:
                    common = tuple(i for i in s1 if i in s2)
                    if L.meet(sub[s1], sub[s2]) != sub[common]:
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                continue
            v = sub[tuple(range(n + 1))]
            for w in elems:
                if all(L.meet(a, w) == u and L.join(a, w) == v for a in ats):
                    return True
    return False


@dataclass(frozen=True)
class CongruencePartition:
    lattice: object
    blocks: tuple  # tuple of frozensets of element ids

    def collapses(self, a, b):
        for blk in self.blocks:
            if a in blk:
                return b in blk
        raise UnknownElement(repr(a))

    def is_full(self):
        return len(self.blocks) == 1

    def is_trivial(self):
        return len(self.blocks) == self.lattice.n


def principal_congruence(L, a, b):
    """Smallest congruence collapsing a and b, by closure under the
    join/meet compatibility rules."""
    n = L.n
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    J, M, _ = _tables(L)
    work = [(L.index(a), L.index(b))]
    while work:
        i, j = work.pop()
        ri, rj = find(i), find(j)
        if ri == rj:
            continue
        parent[ri] = rj
        for c in range(n):
            work.append((J[i, c], J[j, c]))
            work.append((M[i, c], M[j, c]))
    groups = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(L.elements[i])
    return CongruencePartition(L, tuple(frozenset(g) for g in groups.values()))


def is_simple(L):
    """Only congruences are trivial and full.  A 1-element lattice is not
    simple by convention."""
    if L.n < 2:
        return False
    return all(principal_congruence(L, a, b).is_full() for a, b in L.covers)


def is_sublattice(host, subset):
    subset = set(subset)
    for a in subset:
        host.index(a)
    for a in subset:
        for b in subset:
            if host.join(a, b) not in subset or host.meet(a, b) not in subset:
                return False
    return True


def generated_sublattice(host, generators):
    """Closure of a generating set under join and meet."""
    closed = set(generators)
    frontier = list(closed)
    while frontier:
        fresh = []
        for a in frontier:
            for b in list(closed):
                for c in (host.join(a, b), host.meet(a, b)):
                    if c not in closed:
                        closed.add(c)
                        fresh.append(c)
        frontier = fresh
    return closed
