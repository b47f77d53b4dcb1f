import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from framedskein.diagram import (
    DiagramError,
    FramedDiagram,
    FreeLoop,
    ParseError,
    R1Kink,
    R2Pair,
    apply_reduction,
    detect_reduction,
    parse_diagram,
    serialize_pd,
)

HOPF = "s1 s1"
TREFOIL = "s1 s1 s1"
FIG8 = "s1 s2^-1 s1 s2^-1"
WORDS = ["s1", "s1^-1", HOPF, TREFOIL, FIG8, "s1 s2 s1", "s1 s2 s1 s3"]


def braid(word):
    return parse_diagram(word, "braid")


class TestConstruction:
    def test_unknot(self):
        d = parse_diagram("O", "pd")
        assert d.n_crossings == 0 and d.free_loops == 1
        assert d.n_components() == 1

    def test_nonplanar_rejected(self):
        # K5-like gluing: a one-crossing diagram with crossed-over pairing
        with pytest.raises(DiagramError):
            FramedDiagram([1], [((0, 0), (0, 2)), ((0, 1), (0, 3))])

    def test_unpaired_stub_rejected(self):
        with pytest.raises(DiagramError):
            FramedDiagram([1], [((0, 0), (0, 1))])

    def test_components(self):
        assert braid(HOPF).n_components() == 2
        assert braid(TREFOIL).n_components() == 1

    def test_self_writhe(self):
        assert braid(TREFOIL).total_self_writhe() == 3
        assert braid("s1^-1").total_self_writhe() == -1
        # the two Hopf crossings are mixed: no self-writhe at all
        assert braid(HOPF).total_self_writhe() == 0

    def test_switch_negates_sign(self):
        d = braid("s1")
        assert d.crossing_sign(0) == 1
        assert d.switch_crossing(0).crossing_sign(0) == -1


class TestCanonicalCode:
    @given(st.sampled_from(WORDS), st.randoms())
    @settings(max_examples=60)
    def test_invariant_under_relabeling(self, word, rng):
        d = braid(word)
        n = d.n_crossings
        perm = list(range(n))
        rng.shuffle(perm)
        arcs = []
        for (c1, s1), (c2, s2) in d.arcs:
            a, b = (perm[c1], s1), (perm[c2], s2)
            if rng.random() < 0.5:
                a, b = b, a
            arcs.append((a, b))
        rng.shuffle(arcs)
        crossings = [None] * n
        for c in range(n):
            crossings[perm[c]] = d.crossings[c]
        relabeled = FramedDiagram(crossings, arcs, d.free_loops)
        assert relabeled.canonical_code() == d.canonical_code()

    def test_distinguishes_mirror(self):
        assert braid(TREFOIL).canonical_code() != \
            braid("s1^-1 s1^-1 s1^-1").canonical_code()

    def test_bare_unknot_code(self):
        assert parse_diagram("O", "pd").canonical_code() == "loops:1"


class TestReductions:
    def test_priority_free_loop_first(self):
        d = braid("s1").add_free_loops(1)
        assert isinstance(detect_reduction(d), FreeLoop)

    def test_kink_detection_and_sign(self):
        for word, sign in (("s1", 1), ("s1^-1", -1)):
            move = detect_reduction(braid(word))
            assert isinstance(move, R1Kink) and move.sign == sign

    def test_r2_detection(self):
        d = braid("s1 s1^-1")
        move = detect_reduction(d)
        assert isinstance(move, R2Pair)
        reduced, bk = apply_reduction(d, move)
        # the closure of s1 s1^-1 is the 2-component unlink
        assert reduced.n_crossings == 0 and reduced.free_loops == 2
        assert bk.kind == "none"

    def test_twisted_bigon_not_r2(self):
        # the Hopf bigons have the same strand over only at one end
        assert detect_reduction(braid(HOPF)) is None

    def test_exhaustive_reduction_of_descending(self):
        d = braid("s1 s1^-1 s1 s1^-1")
        count = 0
        while (move := detect_reduction(d)) is not None:
            d, _ = apply_reduction(d, move)
            count += 1
            assert count < 20
        assert d.n_crossings == 0

    def test_disjoint_split(self):
        d = braid(TREFOIL).disjoint_union(braid(HOPF))
        move = detect_reduction(d)
        smaller, bk = apply_reduction(d, move)
        assert bk.kind == "split"
        parts = sorted([smaller.n_crossings, bk.remainder.n_crossings])
        assert parts == [2, 3]


class TestMoves:
    def test_smoothings_drop_one_crossing(self):
        d = braid(TREFOIL)
        for kind in ("A", "B"):
            assert d.smooth(0, kind).n_crossings == 2

    def test_kink_addition_signs(self):
        base = braid(HOPF)
        arc = base.arcs[0]
        plus = base.add_kink(arc, 1)
        minus = base.add_kink(arc, -1)
        move = detect_reduction(plus)
        assert isinstance(move, R1Kink) and move.sign == 1
        move = detect_reduction(minus)
        assert isinstance(move, R1Kink) and move.sign == -1

    def test_flat_resolution(self):
        d = braid(TREFOIL).make_flat(1)
        assert d.is_singular()
        assert d.resolve_flat(1, 1).canonical_code() != \
            d.resolve_flat(1, -1).canonical_code()
        with pytest.raises(DiagramError):
            d.resolve_flat(0, 1)  # not flat


class TestBadCrossings:
    def test_trefoil_one_bad(self):
        assert len(braid(TREFOIL).bad_crossings()) == 1

    def test_descending_after_switch(self):
        d = braid(TREFOIL)
        d2 = d.switch_crossing(d.bad_crossings()[0])
        assert d2.is_descending()


class TestParsing:
    @given(st.sampled_from(WORDS))
    def test_pd_round_trip(self, word):
        d = braid(word)
        again = parse_diagram(serialize_pd(d), "pd")
        assert again.canonical_code() == d.canonical_code()

    def test_flat_pd_round_trip(self):
        d = braid(TREFOIL).make_flat(2)
        again = parse_diagram(serialize_pd(d), "pd")
        assert again.canonical_code() == d.canonical_code()

    def test_gauss_trefoil(self):
        g = parse_diagram("O1+ U2+ O3+ U1+ O2+ U3+", "gauss")
        assert g.canonical_code() == braid(TREFOIL).canonical_code()

    def test_gauss_sign_consistency_checked(self):
        with pytest.raises(ParseError):
            parse_diagram("O1+ U1-", "gauss")

    def test_braid_idle_strand_becomes_loop(self):
        d = parse_diagram("s1 s3", "braid")
        # strands 1,2 close to kinked unknots; strand 3,4 likewise
        assert d.n_crossings == 2

    def test_parse_error_position(self):
        with pytest.raises(ParseError):
            parse_diagram("X[1,2,3]", "pd")

    def test_bad_braid_token(self):
        with pytest.raises(ParseError):
            parse_diagram("s0 q2", "braid")
