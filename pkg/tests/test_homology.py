"""
Tests for the boundary operator, Omega spaces, betti numbers, layer and
multilayer homology, cycle representatives and induced maps.
"""

import random
from fractions import Fraction

import pytest

from complexes import (
    build_complex,
    connected_components,
    cycle_complex,
    disjoint_union,
    free_pairs,
    is_elementary,
    map_complex,
    random_complex,
    read_subset_file,
)
from errors import ComplexError, VertexMapError
from homology import (
    HomologyEngine,
    boundary,
    boundary_chain,
    chain_from_vector,
    join_chains,
    layer_betti_or_empty,
    map_chain,
    vector_from_chain,
)
from interactions import enumerate_interactions, enumerate_shapes, label_shape, parse_interaction
from models import FormalChain, FreePair, IntComplex, Signature
from oracles import oracle_betti

LABELS = ("a", "b", "c")


def cx(*texts: str) -> IntComplex:
    return build_complex(parse_interaction(t) for t in texts)


def ix(text: str):
    return parse_interaction(text)


def shapes_of(n: int, offset: int = 0):
    return [label_shape(shape, [LABELS[(k + offset) % 3] for k in range(n)]) for shape in enumerate_shapes(n)]


def test_boundary_examples():
    """Alternating sums of faces"""
    chain = boundary(ix("((a,b),c)"))
    assert chain.degree == 2
    assert chain.terms == {ix("(b,c)"): 1, ix("(a,c)"): -1, ix("(a,b)"): 1}
    assert boundary(ix("(a,b)")).terms == {ix("b"): 1, ix("a"): -1}
    assert boundary(ix("a")).is_zero()


def test_boundary_combines_coinciding_faces():
    """Equal faces with opposite signs cancel"""
    assert boundary(ix("(d,d)")).is_zero()
    assert boundary(ix("((a,a),a)")).terms == {ix("(a,a)"): 1}


def test_boundary_modulus():
    """Coefficients are residues when a modulus is given"""
    chain = boundary(ix("((a,b),c)"), modulus=2)
    assert chain.coefficient(ix("(a,c)")) == 1
    assert boundary_chain(FormalChain.of(ix("(a,b)"), 2, modulus=2)).is_zero()


def test_boundary_chain_linear():
    """The boundary extends linearly to chains"""
    chain = FormalChain.of(ix("(a,b)"), 2) + FormalChain.of(ix("(b,c)"))
    assert boundary_chain(chain).terms == {ix("a"): -2, ix("b"): 1, ix("c"): 1}


def test_boundary_squares_to_zero():
    """d(d(s)) == 0 for every shape up to order 8"""
    for n in range(2, 9):
        for sigma in shapes_of(n):
            assert boundary_chain(boundary(sigma)).is_zero()
    for n in range(2, 5):
        for sigma in enumerate_interactions(n, LABELS):
            assert boundary_chain(boundary(sigma)).is_zero()


def test_product_rule():
    """
    d(s, t) = (ds, t) + (-1)^p (s, dt), plus t when p = 1 and (-1)^p s when
    q = 1, for s of order p and t of order q
    """
    for total in range(2, 9):
        for p in range(1, total):
            q = total - p
            for left in shapes_of(p):
                for right in shapes_of(q, offset=1):
                    expected = join_chains(boundary(left), FormalChain.of(right))
                    expected = expected + join_chains(FormalChain.of(left), boundary(right)).scale((-1) ** p)
                    if p == 1:
                        expected = expected + FormalChain.of(right)
                    if q == 1:
                        expected = expected + FormalChain.of(left, (-1) ** p)
                    assert (boundary(ix(f"({left.text},{right.text})")) - expected).is_zero()


def test_chain_map_law():
    """Vertex maps commute with the boundary"""
    rng = random.Random(3)
    for _ in range(10):
        f = {label: rng.choice(LABELS) for label in LABELS}
        for n in range(2, 7):
            for sigma in shapes_of(n):
                pushed = map_chain(boundary(sigma), f)
                assert (pushed - boundary_chain(map_chain(FormalChain.of(sigma), f))).is_zero()


def test_chain_vector_conversion():
    """Chains and coordinate vectors convert both ways"""
    generators = (ix("(a,b)"), ix("(b,c)"))
    chain = chain_from_vector(generators, [Fraction(1), Fraction(-2)], 2)
    assert vector_from_chain(generators, chain) == [1, -2]
    with pytest.raises(ValueError):
        vector_from_chain(generators[:1], chain)


def test_chain_spaces_four_cycle(engine, four_cycle):
    """Every 2-interaction of a digraph lies in Omega_2"""
    spaces = engine.chain_spaces(four_cycle, 2)
    assert len(spaces.ambient) == 4
    assert spaces.boundary_matrix.rows == 4 and spaces.boundary_matrix.cols == 4
    assert spaces.omega_dim == 4


def test_omega_cone(engine, cone):
    """Omega_3 of the cone is spanned by pairs whose extra faces cancel"""
    spaces = engine.chain_spaces(cone, 3)
    assert len(spaces.ambient) == 6
    assert spaces.omega_dim == 2
    lower = set(cone.layer(2))
    for chain in engine.omega_basis(cone, 3):
        assert set(boundary_chain(chain).support()) <= lower


def test_omega_without_lower_layer(engine, layer_gap):
    """No 4-interaction of the gap complex has its faces in the empty layer 3"""
    assert engine.chain_spaces(layer_gap, 4).omega_dim == 0


def test_betti_four_cycle(engine, four_cycle):
    """One component and one 2-cycle"""
    assert engine.betti_profile(four_cycle) == (1, 1)
    assert engine.layer_profile(four_cycle) == {2: (1, 1)}


def test_betti_cone(engine, cone):
    """The cone fills the loop and leaves one 3-cycle"""
    assert engine.betti_profile(cone) == (3, 0, 1)
    assert engine.layer_profile(cone) == {2: (1, 1), 3: (1, 1)}


def test_betti_with_gap(engine, layer_gap):
    """An empty layer 3 gives zero there and no layer pair"""
    assert engine.betti_profile(layer_gap) == (2, 0, 0, 0)
    assert engine.layer_profile(layer_gap) == {2: (2, 0), 4: (1, 1)}
    assert engine.signature(layer_gap).to_json() == '{"betti":[2,0,0,0],"layer":{"2":[2,0],"4":[1,1]}}'


def test_betti_loop():
    """A loop (d,d) has zero boundary and is a cycle"""
    assert HomologyEngine().betti_profile(cx("d", "(d,d)")) == (1, 1)


def test_betti_out_of_range(engine, four_cycle):
    """Degrees below 1 and empty layers have zero betti"""
    assert engine.betti(four_cycle, 0) == 0
    assert engine.betti(four_cycle, 5) == 0
    assert engine.betti_profile(four_cycle, 4) == (1, 1, 0, 0)


def test_layer_betti_edges(engine, four_cycle, layer_gap):
    """Layer 1 has no layer homology; an empty layer is an error"""
    assert engine.layer_betti(four_cycle, 1) is None
    with pytest.raises(ComplexError):
        engine.layer_betti(layer_gap, 3)
    assert layer_betti_or_empty(engine, layer_gap, 3) == (0, 0)
    assert layer_betti_or_empty(engine, layer_gap, 1) == (0, 0)


def test_multilayer(engine, two_loops, data_dir):
    """Each listed loop carries one class; the whole complex carries two"""
    assert engine.multilayer_betti(two_loops) == 2
    for name in ("two_loops_first.txt", "two_loops_second.txt"):
        assert engine.multilayer_betti(two_loops, read_subset_file(data_dir / name)) == 1


def test_cycle_representatives_four_cycle(engine, four_cycle):
    """The 2-cycle uses every edge"""
    (rep,) = engine.cycle_representatives(four_cycle, 2)
    assert boundary_chain(rep).is_zero()
    assert len(rep.support()) == 4


def test_cycle_representatives_cone(engine, cone):
    """The 3-cycle is A + B - C - D up to scale"""
    (rep,) = engine.cycle_representatives(cone, 3)
    a, b, c, d = (ix(t) for t in ("((1,2),3)", "((2,1),3)", "((1,2),4)", "((2,1),4)"))
    assert rep.coefficient(a) != 0
    assert rep.coefficient(a) == rep.coefficient(b) == -rep.coefficient(c) == -rep.coefficient(d)
    assert engine.cycle_representatives(cone, 2) == []
    assert len(engine.cycle_representatives(cone, 1)) == 3


def test_induced_identity(engine, cone):
    """The identity map induces identity matrices"""
    for p in (1, 2, 3):
        assert engine.induced_map(None, cone, cone, p).is_identity()


def test_induced_inclusion(engine, four_cycle):
    """A path included in the four-cycle"""
    path = cx("1", "2", "3", "4", "(1,2)", "(2,3)", "(3,4)")
    degree1 = engine.induced_map(None, path, four_cycle, 1)
    assert (degree1.rows, degree1.cols) == (1, 1)
    assert degree1.entries[0][0] != 0
    degree2 = engine.induced_map(None, path, four_cycle, 2)
    assert (degree2.rows, degree2.cols) == (1, 0)
    with pytest.raises(VertexMapError):
        engine.induced_map(None, four_cycle, path, 1)


def test_induced_functorial(engine, four_cycle):
    """(g f)_# == g_# f_#"""
    target = cx("1", "2", "(1,2)", "(2,1)")
    f = {"1": "1", "2": "2", "3": "1", "4": "2"}
    g = {"1": "2", "2": "1"}
    composed = {label: g[f[label]] for label in f}
    for p in (1, 2):
        left = engine.induced_map(composed, four_cycle, target, p)
        right = engine.induced_map(g, target, target, p) @ engine.induced_map(f, four_cycle, target, p)
        assert left == right
    assert engine.induced_map(f, four_cycle, target, 2).entries[0][0] != 0


def test_image_complex(engine, four_cycle):
    """The image of a complex under a vertex map"""
    image = engine.image_complex(four_cycle, {"1": "1", "2": "2", "3": "1", "4": "2"})
    assert image == cx("1", "2", "(1,2)", "(2,1)")


def test_cycle_family():
    """Every orientation of an n-cycle has the four-cycle's profile"""
    engine = HomologyEngine()
    for n in range(3, 9):
        for flips in ((), (1,), (2, n), tuple(range(1, n + 1, 2))):
            complex_ = cycle_complex(n, flips)
            assert engine.betti_profile(complex_) == (1, 1)
            assert engine.layer_profile(complex_) == {2: (1, 1)}


def test_betti_matches_rank_oracle():
    """Betti numbers agree with a count from ranks alone"""
    engine = HomologyEngine()
    for seed in range(100):
        complex_ = random_complex(seed, max_order=4, closed=seed % 2 == 0)
        for p in range(1, 5):
            assert engine.betti(complex_, p) == oracle_betti(complex_, p)


def test_induced_functorial_random():
    """(g f)_# == g_# f_# for random vertex maps"""
    engine = HomologyEngine()
    for seed in range(100):
        rng = random.Random(seed)
        source = random_complex(seed, max_order=3, vertex_count=4)
        f = {label: f"w{rng.randint(0, 2)}" for label in source.labels()}
        middle = engine.image_complex(source, f)
        g = {label: f"u{rng.randint(0, 1)}" for label in middle.labels()}
        target = engine.image_complex(middle, g)
        composed = {label: g[f[label]] for label in f}
        for p in (1, 2, 3):
            direct = engine.induced_map(composed, source, target, p)
            staged = engine.induced_map(g, middle, target, p) @ engine.induced_map(f, source, middle, p)
            assert direct == staged


def test_betti1_counts_components():
    """beta_1 is the number of connected components when every edge leaf is a vertex"""
    engine = HomologyEngine()
    for seed in range(200):
        complex_ = random_complex(seed)
        assert engine.betti(complex_, 1) == len(connected_components(complex_))


def test_components_ignore_missing_leaves():
    """Edges through a vertex outside the complex link v and w in homology only"""
    complex_ = cx("v", "w", "(u,v)", "(u,w)")
    assert HomologyEngine().betti(complex_, 1) == 1
    assert len(connected_components(complex_)) == 2
    (chain,) = HomologyEngine().omega_basis(complex_, 2)
    assert set(boundary_chain(chain).support()) == {ix("v"), ix("w")}


def test_betti_additive():
    """Betti numbers add over disjoint unions"""
    engine = HomologyEngine()
    for seed in range(200):
        first, second = random_complex(seed), random_complex(seed + 1000, max_order=2 + seed % 3)
        top = max(first.max_order, second.max_order)
        union = disjoint_union(first, second)
        expected = tuple(
            a + b for a, b in zip(engine.betti_profile(first, top), engine.betti_profile(second, top))
        )
        assert engine.betti_profile(union, top) == expected


def test_relabelling_invariance():
    """Bijective relabelling keeps the signature"""
    engine = HomologyEngine()
    for seed in range(30):
        complex_ = random_complex(seed, max_order=4)
        labels = sorted(complex_.labels())
        shuffled = list(labels)
        random.Random(seed).shuffle(shuffled)
        renamed = map_complex(complex_, {old: f"w{new}" for old, new in zip(labels, shuffled)})
        assert engine.signature(renamed) == engine.signature(complex_)


def test_field_agreement(four_cycle, cone, layer_gap, two_loops):
    """Rational and mod-2 profiles agree on the worked examples"""
    engine = HomologyEngine()
    for complex_ in (four_cycle, layer_gap, two_loops):
        profiles = engine.field_agreement(complex_, ["rat", "gf:2"])
        assert profiles["gf:2"] == profiles["rat"] == engine.betti_profile(complex_)
    assert HomologyEngine("gf:2").multilayer_betti(two_loops) == 2
    assert engine.field_agreement(cone, ["rat", "gf:2"]) == {"rat": (3, 0, 1), "gf:2": (3, 0, 1)}
    assert engine.field_agreement(four_cycle, ["rat", "gf:3"]) == {"rat": (1, 1), "gf:3": (1, 1)}


def test_gf2_engine(gf2_engine, four_cycle, layer_gap):
    """The mod-2 engine reproduces the rational tables here"""
    assert gf2_engine.betti_profile(four_cycle) == (1, 1)
    assert gf2_engine.betti_profile(layer_gap) == (2, 0, 0, 0)


def test_collapse_audit_edge(engine):
    """Collapsing a lone edge keeps the profile"""
    complex_ = cx("a", "b", "(a,b)")
    audit = engine.audit_collapse(complex_, FreePair(sigma=ix("b"), tau=ix("(a,b)")))
    assert audit.before == (1, 0)
    assert audit.after == (1, 0)
    assert audit.invariant and audit.elementary


def test_collapse_audit_missing_faces(engine):
    """Without its other faces a collapse can split a component"""
    complex_ = cx("a", "b", "c", "(a,b)", "((a,b),c)")
    audit = engine.audit_collapse(complex_, FreePair(sigma=ix("(a,b)"), tau=ix("((a,b),c)")))
    assert audit.before == (2, 0, 0)
    assert audit.after == (3, 0, 0)
    assert audit.elementary
    assert not audit.invariant


def test_elementary_collapses_preserve_homology():
    """On face-closed complexes every elementary collapse keeps the profile"""
    engine = HomologyEngine()
    checked = 0
    for seed in range(100):
        complex_ = random_complex(seed, max_order=3, layer_size=2, vertex_count=3, closed=True)
        for pair in free_pairs(complex_):
            if not is_elementary(complex_, pair) or len(complex_) <= 2:
                continue
            assert engine.audit_collapse(complex_, pair).invariant
            checked += 1
    assert checked > 0


def test_signature_roundtrip(engine, cone):
    """Signatures read back from their dict form"""
    signature = engine.signature(cone)
    assert Signature.from_dict(signature.as_dict()) == signature
    assert signature.as_dict() == {"betti": [3, 0, 1], "layer": {"2": [1, 1], "3": [1, 1]}}
