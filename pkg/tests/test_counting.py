import pytest
from hypothesis import given
from hypothesis import strategies as st

from gmpd import counting, lattice
from gmpd.constructors import all_models
from gmpd.model import (
    DomainModel,
    LocalClass,
    is_dedekind,
    is_mpd,
    is_noetherian,
    is_prufer,
)


def M(*tags):
    return DomainModel.from_tags(tags)


models = st.lists(st.sampled_from(list(LocalClass)), max_size=7).map(
    lambda tags: DomainModel(tuple(tags))
)


def test_quasi_local_count_examples():
    assert counting.quasi_local_count(M("K1", "K2", "K3", "K4")) == 7
    assert counting.quasi_local_count(M("K4")) == 2
    # frozen from the 3x2 product: vectors with at most one non-top coordinate
    assert counting.quasi_local_count(M("K1", "K4")) == 4


def test_total_count_examples():
    assert counting.total_count(M("K3", "K4", "K4")) == 12
    assert counting.total_count(M("K4", "K4", "K4")) == 8
    assert counting.total_count(M()) == 1


def test_count_report_fields():
    rep = counting.count_report(M("K1", "K3"))
    assert rep.total_overrings == 9
    assert rep.quasi_local_overrings == 5
    assert rep.max_count == 2
    assert rep.counts == (1, 0, 1, 0)
    assert rep.quasi_local_overrings <= rep.total_overrings


def test_characterize_noetherian_example():
    ch = counting.characterize(M("K1", "K4", "K4"))
    assert ch.noetherian is True
    assert ch.count_noetherian_formula == 5
    assert counting.quasi_local_count(M("K1", "K4", "K4")) == 5
    assert ch.prufer is False
    assert ch.dedekind is False


def test_characterize_dedekind_example():
    ch = counting.characterize(M("K4", "K4"))
    assert ch.dedekind is True
    assert ch.count_dedekind_formula == 3


def test_characterize_prufer_example():
    ch = counting.characterize(M("K2", "K3"))
    assert ch.prufer is True
    assert ch.count_prufer_formula == 4
    assert counting.quasi_local_count(M("K2", "K3")) == 4


def test_characterize_agrees_with_predicates_exhaustive():
    for m in all_models(8):
        ch = counting.characterize(m)
        ql = counting.quasi_local_count(m)
        assert ch.noetherian == (ql == ch.count_noetherian_formula) == is_noetherian(m)
        assert ch.prufer == (ql == ch.count_prufer_formula) == is_prufer(m)
        assert ch.dedekind == (ql == ch.count_dedekind_formula) == is_dedekind(m)


def test_mpd_counts_examples():
    assert counting.mpd_counts(M("K1", "K4", "K4")) == counting.MpdCounts(12, 5)
    assert counting.mpd_counts(M("K4", "K4")) == counting.MpdCounts(4, 3)
    with pytest.raises(ValueError):
        counting.mpd_counts(M("K1", "K3"))


def test_mpd_counts_value_group_r_local_counts_like_a_dvr():
    # K2 is not a DVR but its chain has two elements, so no 3*2^(n-1) branch
    assert counting.mpd_counts(M("K2")) == counting.MpdCounts(2, 2)
    assert counting.mpd_counts(M("K2", "K4", "K4")) == counting.MpdCounts(8, 4)


def test_mpd_counts_match_general_formulas():
    for m in all_models(6):
        if is_mpd(m):
            mc = counting.mpd_counts(m)
            assert mc.total == counting.total_count(m)
            assert mc.quasi_local == counting.quasi_local_count(m)


def test_formulas_match_lattice_oracle_small():
    for m in all_models(5):
        lat = lattice.build(m)
        assert sum(1 for _ in lat.elements()) == counting.total_count(m)
        assert len(lattice.quasi_local_elements(lat)) == counting.quasi_local_count(m)
        assert counting.quasi_local_count(m) <= counting.total_count(m)


def test_prufer_quasi_local_dichotomy():
    for m in all_models(8):
        n1, n2, n3, n4 = m.counts
        ql = counting.quasi_local_count(m)
        n = len(m)
        if is_prufer(m):
            assert (ql == n + 1) == (n3 == 0)
            assert (ql == 2 * n + 1) == (n3 == n)
        # general-model analogue of the first direction
        assert (ql == n + 1) == (n1 == 0 and n3 == 0)


@given(models, st.sampled_from(list(LocalClass)))
def test_count_monotonicity(m, extra):
    grown = DomainModel(m.maximal_ideals + (extra,))
    assert counting.quasi_local_count(grown) == counting.quasi_local_count(m) + extra.chain_length - 1
    assert counting.total_count(grown) == counting.total_count(m) * extra.chain_length
