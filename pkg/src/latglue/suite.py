"""The acceptance suite behind `latglue suite`: twelve end-to-end checks
covering round-trip decomposition, the sup/inf formulas, the transfer
results, the star/plus calculus, the worked constructions, connected-sum
machinery, homomorphism gluing, the counterexample catalog, and the
corpus enumerator itself."""

import time

from . import constructions as fix
from .connect import ChainDependence, connected_sum, elevate, equivalent, \
    validate_connected
from .core import find_isomorphism, product
from .glue import glued_sum, inf_via_formulas, is_monotone_strict, \
    length_bound_check, sup_via_formulas, validate, zero_one_maps
from .hom import LatticeHom, check_star, corollary_54_check, glue_homs, \
    is_homomorphism, is_injective, simplicity_transfer_check
from .predicates import breadth, is_distributive, is_modular, \
    is_n_distributive, is_simple, generated_sublattice
from .skeleton import decompose, lemma61_suite, maximal_atomistic_intervals, \
    roundtrip, skeleton_duality_suite, skeleton_lattice, skeleton_set


def _corpus(max_elements):
    return list(fix.enumerate_lattices(max_elements))


def _modular_corpus(max_elements):
    return [L for L in _corpus(max_elements) if is_modular(L)]


def glued_fixtures():
    """All valid glued-system fixtures, by name."""
    out = {
        "fig_3by3": fix.fig_3by3_system(),
        "note2_overlap": fix.note2_overlap_system(),
        "note3": fix.note3_system(),
        "hd_two_chains": fix.hd_two_chains(),
        "hd_two_m3": fix.hd_two_m3(),
        "hd_two_m3_edge": fix.hd_two_m3_edge(),
        "m3_chain_of_three": fix.m3_chain_of_three(),
        "m3_chain_edges": fix.m3_chain_edges(),
        "distributive_over_b2": fix.distributive_with_skeleton(fix.boolean(2)),
        "square_over_m3": fix.square_sublattice(fix.m3()),
        "projective_example": fix.section4_example()["glued_system"],
    }
    for n in (1, 2, 3):
        out[f"unbounded_{n}"] = fix.unbounded_family(n)
    return out


def _sum_fixtures(corpus_max):
    """The named lattices criterion 1 adds on top of the enumerated corpus."""
    out = [fix.grid(p, q) for p in range(1, 5) for q in range(p, 5)]
    out += [fix.boolean(n) for n in range(1, 5)]
    out.append(product(fix.m3(), fix.chain(1)))
    for S in _modular_corpus(min(corpus_max, 7)):
        out.append(glued_sum(fix.square_sublattice(S)))
    out.append(fix.section4_example()["sum"])
    return out


def _formulas_match(sys, L=None):
    if L is None:
        L = glued_sum(sys)
    for a in L.elements:
        for b in L.elements:
            if sup_via_formulas(sys, a, b) != L.join(a, b):
                return False
            if inf_via_formulas(sys, a, b) != L.meet(a, b):
                return False
    return True


def criterion_01_roundtrip(corpus_max):
    """Decompose-then-reglue reproduces every modular lattice exactly."""
    mods = _modular_corpus(corpus_max)
    lattices = mods + [M for M in _sum_fixtures(corpus_max) if is_modular(M)]
    bad = sum(not roundtrip(M) for M in lattices)
    return bad == 0, f"{len(lattices)} modular lattices, {bad} round-trip failures"


def criterion_02_formulas(corpus_max):
    """Block-staircase sup/inf equals the closure-order bounds everywhere."""
    checked = 0
    for sys in glued_fixtures().values():
        if not _formulas_match(sys):
            return False, "mismatch on a glued fixture"
        checked += 1
    for M in _modular_corpus(corpus_max):
        if not _formulas_match(decompose(M).system, M):
            return False, "mismatch on a decompose output"
        checked += 1
    return True, f"{checked} systems, exact agreement on all pairs"


def criterion_03_transfer(corpus_max):
    """Modularity, breadth, and n-distributivity transfer block-wise."""
    for name, sys in glued_fixtures().items():
        blocks = [sys.blocks[x] for x in sys.skeleton.elements]
        if not all(is_modular(B) for B in blocks):
            continue
        L = glued_sum(sys)
        if not is_modular(L):
            return False, f"{name}: modular blocks but non-modular sum"
        if breadth(L) != max(breadth(B) for B in blocks):
            return False, f"{name}: breadth is not the block maximum"
        for n in (1, 2, 3):
            if all(is_n_distributive(B, n) for B in blocks) \
                    and not is_n_distributive(L, n):
                return False, f"{name}: {n}-distributivity did not transfer"
    return True, "modularity, breadth, n-distributivity (n=1..3) transfer"


def criterion_04_star_plus_calculus(corpus_max):
    """The star/plus identities hold exhaustively on the modular corpus."""
    mods = _modular_corpus(corpus_max)
    bad = sum(not lemma61_suite(M)["ok"] for M in mods)
    return bad == 0, f"{len(mods)} modular lattices, {bad} with violations"


def criterion_05_skeleton(corpus_max):
    """Fixed-point skeleton equals the interval-scan oracle; duality holds."""
    for M in _modular_corpus(corpus_max):
        oracle = {lo for lo, hi in maximal_atomistic_intervals(M)}
        if skeleton_set(M) != oracle:
            return False, f"skeleton/oracle mismatch on a {M.n}-element lattice"
        if not skeleton_duality_suite(M)["ok"]:
            return False, f"duality failure on a {M.n}-element lattice"
    return True, "fixed points = interval minima; star/plus duality throughout"


def criterion_06_distributive_construction(corpus_max):
    """Every small lattice S is the skeleton of a distributive lattice."""
    small = _corpus(min(corpus_max, 5))
    for S in small:
        sys = fix.distributive_with_skeleton(S)
        assert validate(sys) == []
        M = glued_sum(sys)
        if not is_distributive(M):
            return False, f"non-distributive output for a {S.n}-element S"
        if find_isomorphism(skeleton_lattice(M), S) is None:
            return False, f"skeleton not isomorphic to a {S.n}-element S"
    return True, f"{len(small)} skeleton shapes realized distributively"


def criterion_07_square_construction(corpus_max):
    """Every small modular S yields a sublattice of S×S with skeleton S."""
    mods = _modular_corpus(min(corpus_max, 7))
    for S in mods:
        sys = fix.square_sublattice(S)
        assert validate(sys) == []
        if not corollary_54_check(sys, product(S, S)):
            return False, f"not a sublattice of S×S for a {S.n}-element S"
        if find_isomorphism(skeleton_lattice(glued_sum(sys)), S) is None:
            return False, f"skeleton not isomorphic to a {S.n}-element S"
    return True, f"{len(mods)} modular skeletons realized inside S×S"


def criterion_08_projective_example(corpus_max):
    """The two-plane example: length 6, breadth 3, modular, simple,
    generated by the five designated elements."""
    ex = fix.section4_example()
    M = ex["sum"]
    checks = {
        "length 6": M.length() == 6,
        "modular": is_modular(M),
        "breadth 3": breadth(M) == 3,
        "simple": is_simple(M),
        "5 generators": generated_sublattice(M, ex["generators"])
                        == set(M.elements),
    }
    bad = [k for k, v in checks.items() if not v]
    return not bad, "all five properties hold" if not bad else \
        f"failed: {', '.join(bad)}"


def _equiv_criteria(cs, a, b):
    S = cs.skeleton
    x, y = cs.block_of(a), cs.block_of(b)
    i = any(cs.phi(x, z).get(a) is not None
            and cs.phi(x, z).get(a) == cs.phi(y, z).get(b)
            for z in S.elements)
    up_a, up_b = cs.phi(x, S.join(x, y)).get(a), cs.phi(y, S.join(x, y)).get(b)
    ii = up_a is not None and up_a == up_b
    inv = {}
    for z in S.elements:
        inv[z] = ({v: k for k, v in cs.phi(z, x).items()},
                  {v: k for k, v in cs.phi(z, y).items()})
    iii = any(a in ix and b in iy and ix[a] == iy[b]
              for ix, iy in inv.values())
    ix, iy = inv[S.meet(x, y)]
    iv = a in ix and b in iy and ix[a] == iy[b]
    return i, ii, iii, iv


def connected_fixtures():
    ex = fix.section4_example()
    return {
        "projective_example": (ex["local_system"], ex["connected_system"]),
        "copies_over_b2": (fix.copies_local_system(fix.boolean(2)),
                           None),
        "copies_over_b3": (fix.copies_local_system(fix.boolean(3),
                                                   fix.chain(2)),
                           None),
    }


def criterion_09_connect(corpus_max):
    """Identification criteria coincide, ~ is an equivalence, block
    projections are isomorphisms, chain composition is path-independent."""
    for name, (lcs, cs) in connected_fixtures().items():
        try:
            elevated = elevate(lcs, exhaustive=True)
        except ChainDependence:
            return False, f"{name}: chain-dependent compositions"
        if cs is None:
            cs = elevated
        if validate_connected(cs):
            return False, f"{name}: connection conditions violated"
        carrier = [a for x in cs.skeleton.elements
                   for a in cs.blocks[x].elements]
        rel = {}
        for a in carrier:
            for b in carrier:
                i, ii, iii, iv = _equiv_criteria(cs, a, b)
                if not i == ii == iii == iv:
                    return False, f"{name}: criteria disagree at ({a}, {b})"
                rel[a, b] = ii
                assert equivalent(cs, a, b) == ii
        for a in carrier:
            if not rel[a, a]:
                return False, f"{name}: not reflexive at {a}"
            for b in carrier:
                if rel[a, b] != rel[b, a]:
                    return False, f"{name}: not symmetric"
                for c in carrier:
                    if rel[a, b] and rel[b, c] and not rel[a, c]:
                        return False, f"{name}: not transitive"
        gsys, pis = connected_sum(cs)
        for x in cs.skeleton.elements:
            h = LatticeHom(cs.blocks[x], gsys.blocks[x], pis[x])
            if not (is_homomorphism(h) and is_injective(h)):
                return False, f"{name}: projection at {x} is not an iso"
    return True, "criteria (i)-(iv) coincide; projections are isomorphisms"


def hom_family_fixtures():
    """(system, family, host) triples of per-block homomorphisms."""
    out = {}
    for name, M in (("grid_2x2", fix.grid(2, 2)),
                    ("b3", fix.boolean(3)),
                    ("m3xc1", product(fix.m3(), fix.chain(1)))):
        sys = decompose(M).system
        fam = {x: LatticeHom(sys.blocks[x], M,
                             {a: a for a in sys.blocks[x].elements})
               for x in sys.skeleton.elements}
        out[f"identity_{name}"] = (sys, fam, M)
    S = fix.m3()
    sys = fix.square_sublattice(S)
    host = product(S, S)
    fam = {x: LatticeHom(sys.blocks[x], host,
                         {a: a for a in sys.blocks[x].elements})
           for x in S.elements}
    out["square_inclusion"] = (sys, fam, host)
    sys = fix.fig_3by3_system()
    host = fix.chain(0)
    fam = {x: LatticeHom(sys.blocks[x], host,
                         {a: "0" for a in sys.blocks[x].elements})
           for x in sys.skeleton.elements}
    out["constant_collapse"] = (sys, fam, host)
    return out


def criterion_10_hom_gluing(corpus_max):
    """Per-block families glue to verified homomorphisms; injectivity is
    block-wise; the zero/one condition is derivable over modular skeletons;
    sums of simple blocks are simple."""
    for name, (sys, fam, host) in hom_family_fixtures().items():
        if not all(is_homomorphism(h) for h in fam.values()):
            return False, f"{name}: a block map is not a homomorphism"
        if is_modular(sys.skeleton) and not check_star(sys, fam):
            return False, f"{name}: zero/one condition fails over a modular skeleton"
        h = glue_homs(sys, fam)
        if not is_homomorphism(h):
            return False, f"{name}: glued map is not a homomorphism"
        if is_injective(h) != all(is_injective(g) for g in fam.values()):
            return False, f"{name}: injectivity is not block-wise"
    simple_sums = {
        "hd_two_m3_edge": fix.hd_two_m3_edge(),
        "m3_chain_edges": fix.m3_chain_edges(),
        "projective_all_m3": fix.section4_example(all_m3=True)["glued_system"],
    }
    for name, sys in simple_sums.items():
        if not simplicity_transfer_check(sys):
            return False, f"{name}: sum of simple blocks is not simple"
    return True, "gluing verified on 5 families; simplicity on 3 fixtures"


def criterion_11_counterexamples(corpus_max):
    """The catalog of near-misses fails exactly where it should."""
    a1 = validate(fix.section1_nonexample_a1())
    if not a1 or any(v.axiom != "A1" for v in a1):
        return False, "first non-system not rejected with tag A1"
    a4 = validate(fix.section1_nonexample_a4())
    if not a4 or any(v.axiom != "A4" for v in a4):
        return False, "second non-system not rejected with tag A4"
    ov = fix.note2_overlap_system()
    if validate(ov) or is_monotone_strict(ov):
        return False, "overlap fixture should validate but not be strict"
    _, _, flags = zero_one_maps(ov)
    if flags["zero_injective"] or ov.zero("1") != ov.zero("2"):
        return False, "overlap fixture should have coinciding block zeros"
    n3 = fix.note3_system()
    if validate(n3):
        return False, "block-skeleton fixture should validate"
    union_sk = set()
    for x in n3.skeleton.elements:
        union_sk |= skeleton_set(n3.blocks[x])
    if not skeleton_set(glued_sum(n3)) < union_sk:
        return False, "sum skeleton should be strictly below the block union"
    lengths = []
    for n in range(1, 6):
        sys = fix.unbounded_family(n)
        if validate(sys) or sys.skeleton.length() != 2 \
                or not length_bound_check(sys):
            return False, f"staircase family broken at n={n}"
        lengths.append(glued_sum(sys).length())
    if lengths != sorted(set(lengths)):
        return False, "staircase sum lengths should strictly increase"
    return True, f"all rejections tagged; staircase lengths {lengths}"


def criterion_12_enumeration(corpus_max):
    """Corpus self-check against known counts and a naive enumerator."""
    counts = [0] * 7
    for L in fix.enumerate_lattices(7):
        counts[L.n - 1] += 1
    cum = [sum(counts[:i + 1]) for i in range(7)]
    if cum != [1, 2, 3, 5, 10, 25, 78]:
        return False, f"per-size totals {cum} do not match the known sequence"
    naive = [fix.naive_lattice_count(n) for n in range(1, 6)]
    if naive != counts[:5]:
        return False, f"naive cross-check {naive} disagrees with {counts[:5]}"
    return True, f"counts {counts} match; naive filter agrees up to 5 elements"


CRITERIA = [
    ("roundtrip", criterion_01_roundtrip),
    ("sup-inf-formulas", criterion_02_formulas),
    ("transfer", criterion_03_transfer),
    ("star-plus-calculus", criterion_04_star_plus_calculus),
    ("skeleton-oracle-duality", criterion_05_skeleton),
    ("distributive-construction", criterion_06_distributive_construction),
    ("square-construction", criterion_07_square_construction),
    ("projective-example", criterion_08_projective_example),
    ("connected-sums", criterion_09_connect),
    ("hom-gluing", criterion_10_hom_gluing),
    ("counterexamples", criterion_11_counterexamples),
    ("enumeration", criterion_12_enumeration),
]


def run_suite(corpus_max=6, emit=print):
    """Run all criteria; returns (all_passed, results).  Each result is
    (name, passed, detail, seconds) and one line is emitted per criterion."""
    results = []
    for i, (name, fn) in enumerate(CRITERIA, start=1):
        t0 = time.monotonic()
        try:
            ok, detail = fn(corpus_max)
        except Exception as e:  # a crash is a failure, not an abort
            ok, detail = False, f"{type(e).__name__}: {e}"
        dt = time.monotonic() - t0
        results.append((name, ok, detail, dt))
        emit(f"[{i:2d}/12] {'PASS' if ok else 'FAIL'} {name}: "
             f"{detail} ({dt:.1f}s)")
    return all(r[1] for r in results), results
