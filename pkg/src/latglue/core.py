"""Finite bounded lattices given by their cover relation.

A lattice is built from a list of element ids and a list of cover pairs
(lower, upper).  Construction eagerly computes the order closure and the
join/meet tables and validates everything: the cover digraph must be acyclic,
must be its own transitive reduction, the order must be bounded, and every
pair of elements must have a unique least upper bound and greatest lower
bound.  Instances are immutable after construction.
"""

from dataclasses import dataclass
import numpy as np


class LatticeError(Exception):
    pass


class CycleDetected(LatticeError):
    pass


class NotTransitiveReduction(LatticeError):
    pass


class NoUniqueJoin(LatticeError):
    pass


class NoUniqueMeet(LatticeError):
    pass


class NotBounded(LatticeError):
    pass


class UnknownElement(LatticeError):
    pass


class NotComparable(LatticeError):
    pass


class FiniteLattice:
    def __init__(self, elements, covers):
        ids = tuple(elements)
        if not ids:
            raise NotBounded("empty element list")
        if len(set(ids)) != len(ids):
            raise LatticeError("duplicate element ids")
        self._ids = ids
        self._idx = {a: i for i, a in enumerate(ids)}
        n = len(ids)
        self.n = n

        cov = []
        seen = set()
        for lo, hi in covers:
            if lo not in self._idx or hi not in self._idx:
                raise UnknownElement(f"cover ({lo!r}, {hi!r}) references unknown element")
            if lo == hi:
                raise CycleDetected(f"self-cover at {lo!r}")
            pair = (self._idx[lo], self._idx[hi])
            if pair in seen:
                raise LatticeError(f"duplicate cover ({lo!r}, {hi!r})")
            seen.add(pair)
            cov.append(pair)
        self._cov = tuple(cov)

        up_adj = [[] for _ in range(n)]
        down_adj = [[] for _ in range(n)]
        for i, j in cov:
            up_adj[i].append(j)
            down_adj[j].append(i)

        # topological order (Kahn); failure means a cycle
        indeg = [len(down_adj[i]) for i in range(n)]
        topo = [i for i in range(n) if indeg[i] == 0]
        for i in topo:
            for j in up_adj[i]:
                indeg[j] -= 1
                if indeg[j] == 0:
                    topo.append(j)
        if len(topo) != n:
            raise CycleDetected("cover digraph contains a cycle")

        # reflexive-transitive closure, bottom-up
        leq = np.zeros((n, n), dtype=bool)
        for i in reversed(topo):
            leq[i, i] = True
            for j in up_adj[i]:
                leq[i] |= leq[j]

        # strict transitive-reduction check: no cover may be implied by a path
        for i, j in cov:
            for k in up_adj[i]:
                if k != j and leq[k, j]:
                    raise NotTransitiveReduction(
                        f"cover ({ids[i]!r}, {ids[j]!r}) is implied via {ids[k]!r}")

        bottoms = [i for i in range(n) if not down_adj[i]]
        tops = [i for i in range(n) if not up_adj[i]]
        if len(bottoms) != 1 or len(tops) != 1:
            raise NotBounded(
                f"minimal elements {[ids[i] for i in bottoms]}, "
                f"maximal elements {[ids[i] for i in tops]}")
        self._bot = bottoms[0]
        self._top = tops[0]

        self._leq = leq
        self._up_adj = tuple(tuple(a) for a in up_adj)
        self._down_adj = tuple(tuple(a) for a in down_adj)

        ups = [frozenset(np.flatnonzero(leq[i])) for i in range(n)]
        downs = [frozenset(np.flatnonzero(leq[:, i])) for i in range(n)]
        self._ups = ups
        self._downs = downs

        height = [0] * n
        depth = [0] * n
        for i in topo:
            for j in down_adj[i]:
                height[i] = max(height[i], height[j] + 1)
        for i in reversed(topo):
            for j in up_adj[i]:
                depth[i] = max(depth[i], depth[j] + 1)
        self._height = tuple(height)
        self._depth = tuple(depth)

        join = np.empty((n, n), dtype=np.int32)
        meet = np.empty((n, n), dtype=np.int32)
        for a in range(n):
            for b in range(a, n):
                if leq[a, b]:
                    j, m = b, a
                elif leq[b, a]:
                    j, m = a, b
                else:
                    j = self._bound(a, b, ups, height, True)
                    m = self._bound(a, b, downs, depth, False)
                join[a, b] = join[b, a] = j
                meet[a, b] = meet[b, a] = m
        self._join = join
        self._meet = meet

    def _bound(self, a, b, cones, rank, upper):
        ids = self._ids
        common = cones[a] & cones[b]
        c = min(common, key=lambda i: rank[i])
        if all(i in cones[c] for i in common):
            return c
        other = min((i for i in common if i not in cones[c]), key=lambda i: rank[i])
        err = NoUniqueJoin if upper else NoUniqueMeet
        kind = "upper" if upper else "lower"
        raise err(f"({ids[a]!r}, {ids[b]!r}) has incomparable minimal {kind} "
                  f"bounds {ids[c]!r} and {ids[other]!r}")

    # -- basic accessors -------------------------------------------------

    @property
    def elements(self):
        return self._ids

    @property
    def covers(self):
        return tuple((self._ids[i], self._ids[j]) for i, j in self._cov)

    @property
    def bottom(self):
        return self._ids[self._bot]

    @property
    def top(self):
        return self._ids[self._top]

    def index(self, a):
        try:
            return self._idx[a]
        except KeyError:
            raise UnknownElement(repr(a)) from None

    def __contains__(self, a):
        return a in self._idx

    def __len__(self):
        return self.n

    def __repr__(self):
        return f"FiniteLattice({self.n} elements, {len(self._cov)} covers)"

    def leq(self, a, b):
        return bool(self._leq[self.index(a), self.index(b)])

    def lt(self, a, b):
        return a != b and self.leq(a, b)

    def join(self, a, b):
        return self._ids[self._join[self.index(a), self.index(b)]]

    def meet(self, a, b):
        return self._ids[self._meet[self.index(a), self.index(b)]]

    def join_all(self, items):
        c = self._bot
        for a in items:
            c = self._join[c, self.index(a)]
        return self._ids[c]

    def meet_all(self, items):
        c = self._top
        for a in items:
            c = self._meet[c, self.index(a)]
        return self._ids[c]

    def height(self, a):
        return self._height[self.index(a)]

    def depth(self, a):
        return self._depth[self.index(a)]

    def length(self):
        return self._height[self._top]

    def atoms(self):
        return {self._ids[j] for j in self._up_adj[self._bot]}

    def coatoms(self):
        return {self._ids[j] for j in self._down_adj[self._top]}

    def upper_covers(self, a):
        return {self._ids[j] for j in self._up_adj[self.index(a)]}

    def lower_covers(self, a):
        return {self._ids[j] for j in self._down_adj[self.index(a)]}

    def up_set(self, a):
        return {self._ids[j] for j in self._ups[self.index(a)]}

    def down_set(self, a):
        return {self._ids[j] for j in self._downs[self.index(a)]}

    def order_pairs(self):
        """All pairs (a, b) with a ≦ b, as a set of id pairs."""
        return {(self._ids[i], self._ids[j])
                for i, j in zip(*np.nonzero(self._leq))}

    # -- derived lattices ------------------------------------------------

    def dual(self):
        return FiniteLattice(self._ids, [(self._ids[j], self._ids[i])
                                         for i, j in self._cov])

    def restrict(self, subset):
        """Lattice induced on a subset of elements (must itself be a lattice).

        Covers are recomputed as the transitive reduction of the induced
        order; construction re-validates boundedness and unique joins/meets.
        """
        sub = [a for a in self._ids if a in set(subset)]
        for a in subset:
            self.index(a)
        idxs = [self._idx[a] for a in sub]
        covers = []
        for ai, i in enumerate(idxs):
            for bi, j in enumerate(idxs):
                if i != j and self._leq[i, j]:
                    if not any(k != i and k != j and self._leq[i, k] and self._leq[k, j]
                               for k in idxs):
                        covers.append((sub[ai], sub[bi]))
        return FiniteLattice(sub, covers)

    def interval(self, lo, hi):
        if not self.leq(lo, hi):
            raise NotComparable(f"{lo!r} is not below {hi!r}")
        carrier = tuple(a for a in self._ids
                        if self.leq(lo, a) and self.leq(a, hi))
        return Interval(self, lo, hi, carrier, self.restrict(carrier))


@dataclass(frozen=True)
class Interval:
    parent: FiniteLattice
    lo: object
    hi: object
    carrier: tuple
    lattice: FiniteLattice


def product(L1, L2, make_id=None):
    """Direct product with componentwise order; ids default to 'a,b'."""
    if make_id is None:
        make_id = lambda a, b: f"{a},{b}"
    elems = [make_id(a, b) for a in L1.elements for b in L2.elements]
    covers = []
    for a in L1.elements:
        for b in L2.elements:
            for a2 in L1.upper_covers(a):
                covers.append((make_id(a, b), make_id(a2, b)))
            for b2 in L2.upper_covers(b):
                covers.append((make_id(a, b), make_id(a, b2)))
    return FiniteLattice(elems, covers)


def _invariant_classes(L):
    """Refined structural invariant per element, for isomorphism pruning."""
    inv = {a: (L.height(a), L.depth(a), len(L.upper_covers(a)),
               len(L.lower_covers(a)), len(L.up_set(a)), len(L.down_set(a)))
           for a in L.elements}
    for _ in range(2):
        inv = {a: (inv[a],
                   tuple(sorted(inv[b] for b in L.upper_covers(a))),
                   tuple(sorted(inv[b] for b in L.lower_covers(a))))
              for a in L.elements}
    return inv


def find_isomorphism(L1, L2, anti=False):
    """Order-isomorphism L1 → L2 as a dict, or None.

    With anti=True searches for an anti-isomorphism (order-reversing).
    """
    if anti:
        L2 = L2.dual()
    if L1.n != L2.n or len(L1.covers) != len(L2.covers):
        return None
    inv1 = _invariant_classes(L1)
    inv2 = _invariant_classes(L2)
    if sorted(inv1.values()) != sorted(inv2.values()):
        return None
    cands = {a: [b for b in L2.elements if inv2[b] == inv1[a]]
             for a in L1.elements}
    order = sorted(L1.elements, key=lambda a: (len(cands[a]), L1.height(a)))
    assigned = {}
    used = set()

    def extend(k):
        if k == len(order):
            return True
        a = order[k]
        for b in cands[a]:
            if b in used:
                continue
            if all(L1.leq(a, a2) == L2.leq(b, b2)
                   and L1.leq(a2, a) == L2.leq(b2, b)
                   for a2, b2 in assigned.items()):
                assigned[a] = b
                used.add(b)
                if extend(k + 1):
                    return True
                del assigned[a]
                used.remove(b)
        return False

    return dict(assigned) if extend(0) else None
