import pytest

from framedskein.corpus import (
    DEFAULT_SEED,
    generate_corpus,
    load_corpus,
    write_corpus,
)


@pytest.fixture(scope="module")
def corpus():
    return generate_corpus(DEFAULT_SEED)


class TestGeneration:
    def test_deterministic(self, corpus):
        again = generate_corpus(DEFAULT_SEED)
        assert [(e.id, e.pd) for e in again] == \
            [(e.id, e.pd) for e in corpus]

    def test_ids_unique(self, corpus):
        ids = [e.id for e in corpus]
        assert len(ids) == len(set(ids))

    def test_coverage(self, corpus):
        resolved = [e for e in corpus if e.n_flat == 0]
        assert len(resolved) >= 50
        assert max(e.n_crossings for e in corpus) <= 8
        assert {e.n_flat for e in corpus if e.n_flat} == {1, 2, 3, 4}
        assert len({e.n_components for e in corpus}) >= 3

    def test_metadata_matches_diagram(self, corpus):
        for e in corpus:
            d = e.diagram()
            assert d.n_crossings == e.n_crossings
            assert d.n_components() == e.n_components
            assert len(d.flat_crossings()) == e.n_flat

    def test_no_duplicate_diagrams_among_braids(self, corpus):
        codes = [e.diagram().canonical_code() for e in corpus
                 if e.id.startswith("braid-")]
        assert len(codes) == len(set(codes))

    def test_other_seed_differs(self, corpus):
        other = generate_corpus(DEFAULT_SEED + 1)
        assert [e.pd for e in other] != [e.pd for e in corpus]


class TestRoundTrip:
    def test_write_then_load(self, corpus, tmp_path):
        manifest = write_corpus(corpus, tmp_path)
        assert manifest.name == "manifest.json"
        again = load_corpus(tmp_path)
        assert again == corpus

    def test_reparse_fixed_point(self, corpus):
        # edge labels may be renumbered on reparse; the canonical code is
        # the reparse fixed point
        from framedskein.diagram import parse_diagram, serialize_pd
        for e in corpus[:10]:
            d = e.diagram()
            again = parse_diagram(serialize_pd(d), "pd")
            assert again.canonical_code() == d.canonical_code()
