"""Skeleton theory for finite modular lattices: the a*/a⁺ operators, the
skeleton S(M) as the fixed points of x ↦ x*⁺, decomposition into maximal
atomistic intervals, and the regluing round-trip."""

from dataclasses import dataclass

from .core import FiniteLattice, find_isomorphism
from .glue import GluedSystem, glued_sum, is_monotone_strict, validate as glue_validate
from .predicates import NotModular, breadth, is_atomistic, is_modular, is_n_distributive


def _require_modular(M):
    if not is_modular(M):
        raise NotModular("skeleton operations are defined for modular lattices")


def star(M, a):
    """Join of the upper covers of a (1 when a is the top)."""
    _require_modular(M)
    if a == M.top:
        return M.top
    return M.join_all(M.upper_covers(a))


def plus(M, a):
    """Meet of the lower covers of a (0 when a is the bottom)."""
    _require_modular(M)
    if a == M.bottom:
        return M.bottom
    return M.meet_all(M.lower_covers(a))


def lemma61_suite(M):
    """Exhaustively verify the star/plus calculus and its duals:
    (a) monotonicity, (b) a ≦ a⁺* ≦ a*, (c) a*⁺* = a*, (d) the *⁺-closed
    elements are closed under join, (e) a⁺ + b⁺ = (a+b)⁺.
    Returns a report dict with a list of violation witnesses (expected []).
    """
    _require_modular(M)
    st = {a: star(M, a) for a in M.elements}
    pl = {a: plus(M, a) for a in M.elements}
    bad = []
    for a in M.elements:
        if not M.leq(a, st[a]) or not M.leq(pl[a], a):
            bad.append(("bounds", a))
        if not (M.leq(a, st[pl[a]]) and M.leq(st[pl[a]], st[a])):
            bad.append(("b", a))
        if st[pl[st[a]]] != st[a]:
            bad.append(("c", a))
        if not (M.leq(pl[st[a]], a) and M.leq(pl[a], pl[st[a]])):
            bad.append(("b-dual", a))
        if pl[st[pl[a]]] != pl[a]:
            bad.append(("c-dual", a))
        for b in M.elements:
            if M.leq(a, b):
                if not M.leq(st[a], st[b]) or not M.leq(pl[a], pl[b]):
                    bad.append(("a", (a, b)))
            if pl[st[a]] == a and pl[st[b]] == b:
                s = M.join(a, b)
                if pl[st[s]] != s:
                    bad.append(("d", (a, b)))
            if st[pl[a]] == a and st[pl[b]] == b:
                m = M.meet(a, b)
                if st[pl[m]] != m:
                    bad.append(("d-dual", (a, b)))
            if M.join(pl[a], pl[b]) != pl[M.join(a, b)]:
                bad.append(("e", (a, b)))
            if M.meet(st[a], st[b]) != st[M.meet(a, b)]:
                bad.append(("e-dual", (a, b)))
    return {"violations": bad, "ok": not bad}


def skeleton_set(M):
    """Fixed points of x ↦ x*⁺."""
    _require_modular(M)
    return {a for a in M.elements if plus(M, star(M, a)) == a}


def dual_skeleton(M):
    """Fixed points of a ↦ a⁺*."""
    _require_modular(M)
    return {a for a in M.elements if star(M, plus(M, a)) == a}


def skeleton_lattice(M):
    """S(M) as a lattice under the induced order.

    Built from the transitive reduction of the induced order, then
    validated against the structural join/meet: x ∨ y must be x + y and
    x ∧ y must be (x·y)*⁺, with top 1⁺ and bottom 0.
    """
    sk = sorted(skeleton_set(M), key=M.index)
    S = M.restrict(sk)
    for x in sk:
        for y in sk:
            assert S.join(x, y) == M.join(x, y), (x, y)
            assert S.meet(x, y) == plus(M, star(M, M.meet(x, y))), (x, y)
    assert S.bottom == M.bottom
    assert S.top == plus(M, M.top)
    return S


@dataclass(frozen=True, eq=False)
class SkeletonDecomposition:
    source: FiniteLattice
    skeleton_set: frozenset
    skeleton_lattice: FiniteLattice
    blocks: dict  # x -> FiniteLattice on the interval [x, x*]
    system: GluedSystem
    dual_skeleton: frozenset


def decompose(M):
    """Split M into its maximal atomistic intervals [x, x*], x ∈ S(M),
    glued over the skeleton lattice.  The resulting system is validated
    and must be strictly monotone."""
    S = skeleton_lattice(M)
    blocks = {x: M.interval(x, star(M, x)).lattice for x in S.elements}
    sys = GluedSystem(S, blocks)
    bad = glue_validate(sys)
    assert not bad, bad
    assert is_monotone_strict(sys) or M.n == 1
    return SkeletonDecomposition(M, frozenset(S.elements), S, blocks, sys,
                                 frozenset(dual_skeleton(M)))


def roundtrip(M):
    """Does regluing the decomposition reproduce M element-for-element?"""
    L = glued_sum(decompose(M).system)
    return set(L.elements) == set(M.elements) and \
        L.order_pairs() == M.order_pairs()


def maximal_atomistic_intervals(M):
    """Independent oracle: scan all comparable pairs, keep the atomistic
    intervals, return the maximal ones as (lo, hi) pairs."""
    _require_modular(M)
    found = []
    for a in M.elements:
        for b in M.elements:
            if M.leq(a, b) and is_atomistic(M.interval(a, b).lattice):
                found.append((a, b))
    return [(a, b) for (a, b) in found
            if not any((c, d) != (a, b) and M.leq(c, a) and M.leq(b, d)
                       for (c, d) in found)]


def skeleton_duality_suite(M):
    """Verify that * and ⁺ are mutually inverse order-isomorphisms between
    S(M) and Sᵟ(M), that Sᵟ(M) is the skeleton of the dual lattice, and —
    when M admits an anti-automorphism — that the skeleton lattice is
    self-dual."""
    _require_modular(M)
    sk = skeleton_set(M)
    dsk = dual_skeleton(M)
    report = {}
    up = {x: star(M, x) for x in sk}
    report["star_into_dual"] = set(up.values()) == dsk and len(set(up.values())) == len(sk)
    report["mutually_inverse"] = all(plus(M, up[x]) == x for x in sk) and \
        all(up.get(plus(M, a)) == a for a in dsk)
    report["order_iso"] = all(M.leq(x, y) == M.leq(up[x], up[y])
                              for x in sk for y in sk)
    report["dual_of_dual_skeleton"] = dsk == skeleton_set(M.dual())
    anti = find_isomorphism(M, M, anti=True)
    if anti is not None:
        S = skeleton_lattice(M)
        report["skeleton_self_dual"] = find_isomorphism(S, S, anti=True) is not None
    report["ok"] = all(v for k, v in report.items() if k != "ok")
    return report


def consequence_suite(M, n):
    """Block-wise characterizations through the decomposition: M has
    breadth ≦ n iff every block does, and M is n-distributive iff every
    block is."""
    dec = decompose(M)
    blocks = list(dec.blocks.values())
    report = {
        "breadth_equiv": (breadth(M) <= n) == all(breadth(B) <= n for B in blocks),
        "ndist_equiv": is_n_distributive(M, n) == all(is_n_distributive(B, n)
                                                      for B in blocks),
    }
    report["ok"] = report["breadth_equiv"] and report["ndist_equiv"]
    return report
