import pytest
from _corpus import DEPTH, P37, P357
from _lemmas import (
    check_insertion_bands,
    check_overlapping_parity,
    check_uniform_type,
    check_window_parity,
)

from bressoud.bands import (
    Band,
    BandType,
    Parity,
    Window,
    band_in_window,
    band_parity,
    band_type,
    find_bands,
    g_of,
    shared_band_type,
    window_band_types,
)
from bressoud.errors import BandError, NoBandInWindow
from bressoud.params import FamilyParams
from bressoud.parts import INF, Overpartition, Part

BAND_LIST = [
    "{80,80,80~,70}",
    "{70,70~,67~,60}",
    "{60,60~,55~,53~}",
    "{55~,53~,50~,47~}",
    "{53~,50~,47~,45~}",
    "{50~,47~,45~,43~}",
    "{27~,20,20,20~}",
    "{20,20,20~,13~}",
    "{13~,10~,7~,5~}",
    "{10~,7~,5~,3~}",
]


class TestFindBands:
    def test_ten_bands(self, band_pi):
        bands = find_bands(band_pi, 4, 10)
        assert [b.render(band_pi) for b in bands] == BAND_LIST
        assert [b.start for b in bands] == [1, 4, 7, 9, 10, 11, 17, 18, 21, 22]

    def test_parities(self, band_pi, p357):
        parities = [band_parity(band_pi, b, p357) for b in find_bands(band_pi, 4, 10)]
        assert parities == [Parity.Even] * 6 + [Parity.Odd] * 4

    def test_final_mu_has_none(self, mu43):
        assert find_bands(mu43, 4, 10) == []

    def test_empty(self):
        assert find_bands(Overpartition(), 3, 10) == []

    def test_bad_width(self, mu43):
        with pytest.raises(BandError):
            find_bands(mu43, 0, 10)

    def test_band_helpers(self):
        b = Band(3, 4)
        assert b.end == 6 and b.indices() == [3, 4, 5, 6]


class TestWindows:
    def test_open_window_witness(self, steps):
        mu3 = steps[3]
        b = Band(9, 3)
        assert b.render(mu3) == "{27~,23~,20}"
        assert band_in_window(mu3, b, Window(3, True), 10)

    def test_closed_window_top(self, band_pi):
        assert band_in_window(band_pi, Band(1, 4), Window(8), 10)

    def test_small_band_outside(self, band_pi):
        assert not band_in_window(band_pi, Band(22, 4), Window(3), 10)

    def test_open_excludes_overlined_top(self):
        lo, hi = Part(20), Part(40, True)
        assert Window(3).contains(lo, hi, 10)
        assert not Window(3, True).contains(lo, hi, 10)
        assert Window(3, True).contains(lo, Part(37, True), 10)


class TestG:
    def test_worked_example(self, steps, p37):
        assert g_of(steps[0], p37) == Part(27, True)
        assert g_of(steps[2], p37) == Part(30)
        assert g_of(steps[3], p37) is INF

    def test_needs_k2(self):
        with pytest.raises(BandError):
            g_of(Overpartition(), FamilyParams.of((), 10, 1, 0))


class TestParity:
    def test_named_bands(self, band_pi, p357):
        assert band_parity(band_pi, Band(1, 4), p357) is Parity.Even
        assert band_parity(band_pi, Band(17, 4), p357) is Parity.Odd
        assert band_parity(band_pi, Band(22, 4), p357) is Parity.Odd

    def test_wrong_width(self, band_pi, p357):
        with pytest.raises(BandError):
            band_parity(band_pi, Band(1, 3), p357)

    def test_not_a_band(self, band_pi, p357):
        with pytest.raises(BandError):
            band_parity(band_pi, Band(2, 4), p357)

    @pytest.mark.parametrize("p", [P37, P357], ids=str)
    def test_overlapping_bands_share_parity(self, p):
        n, bad = check_overlapping_parity(p, DEPTH[p])
        assert n > 0 and bad == []

    @pytest.mark.parametrize("p", [P37, P357], ids=str)
    def test_same_window_share_parity(self, p):
        n, bad = check_window_parity(p, DEPTH[p])
        assert n > 0 and bad == []


class TestType:
    def test_type_N(self, steps, p37):
        assert band_type(steps[3], Band(9, 3), 3, p37) is BandType.N
        assert shared_band_type(steps[3], 3, p37) is BandType.N

    def test_type_O(self, steps, p37):
        mu2 = steps[2]
        typed = window_band_types(mu2, 2, p37)
        assert typed and all(bt is BandType.O for _, bt in typed)
        assert shared_band_type(mu2, 2, p37) is BandType.O

    def test_no_band(self, mu43, p37):
        with pytest.raises(NoBandInWindow):
            shared_band_type(mu43, 5, p37)

    def test_outside_window(self, steps, p37):
        with pytest.raises(NoBandInWindow):
            band_type(steps[3], Band(9, 3), 6, p37)

    def test_needs_k3(self):
        p = FamilyParams.of((), 10, 2, 0)
        with pytest.raises(BandError):
            window_band_types(Overpartition(), 1, p)

    @pytest.mark.parametrize("p", [P37, P357], ids=str)
    def test_uniform_type(self, p):
        n, bad = check_uniform_type(p, DEPTH[p])
        assert n > 0 and bad == []


@pytest.mark.parametrize("p", [P37, P357], ids=str)
def test_insertion_band_correspondence(p):
    n, bad = check_insertion_bands(p, DEPTH[p])
    assert n > 0 and bad == []
