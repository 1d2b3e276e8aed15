import pytest
from hypothesis import given, settings, strategies as st

from susbounds.enumeration import enumerate_point_sus
from susbounds.mus import compute_mus
from susbounds.oracle import naive_interval_sus, naive_point_sus
from susbounds.query import cover, interval_sus, point_sus, sus_index
from susbounds.suffix_index import build_index, occurrence_count
from susbounds.text import IntervalOutOfRange, PositionOutOfRange, make_text

from conftest import FIG1, I, small_strings


def mus_of(s):
    return compute_mus(build_index(make_text(s)))


@pytest.mark.parametrize("m, q, expected", [
    (I(3, 4), I(6, 6), I(3, 6)),
    (I(8, 11), I(6, 6), I(6, 11)),
    (I(4, 7), I(5, 5), I(4, 7)),
])
def test_cover(m, q, expected):
    assert cover(m, q) == expected


def test_point_sus_fig1():
    ml = mus_of(FIG1)
    ans = point_sus(ml, 6)
    assert ans.sus_list == [I(3, 6), I(4, 7), I(5, 8), I(6, 9)]
    assert ans.sus_length == 4
    assert point_sus(ml, 1).sus_list == [I(1, 4)]
    # both an RS extension and a MUS answer position 10
    assert point_sus(ml, 10).sus_list == [I(7, 10), I(8, 11)]
    assert point_sus(mus_of("a"), 1).sus_list == [I(1, 1)]


def test_interval_sus_examples():
    ml = mus_of(FIG1)
    assert interval_sus(ml, I(5, 8)).sus_list == [I(5, 8)]
    assert interval_sus(ml, I(2, 3)).sus_list == [I(2, 4)]
    assert interval_sus(mus_of("baacaad"), I(2, 2)).sus_list == [I(1, 2)]
    assert naive_interval_sus(make_text("baacaad"), I(2, 2)) == [I(1, 2)]


def test_out_of_range():
    ml = mus_of(FIG1)
    with pytest.raises(PositionOutOfRange):
        point_sus(ml, 12)
    with pytest.raises(PositionOutOfRange):
        point_sus(ml, 0)
    with pytest.raises(IntervalOutOfRange):
        interval_sus(ml, I(3, 12))
    with pytest.raises(IntervalOutOfRange):
        interval_sus(ml, I(5, 4))


def test_window_and_scan_agree_with_oracle_exhaustive():
    for s in small_strings(7, "abc"):
        t = make_text(s)
        idx = sus_index(compute_mus(build_index(t)))
        for a in range(1, t.n + 1):
            for b in range(a, t.n + 1):
                expected = naive_interval_sus(t, I(a, b))
                assert idx.interval_sus(I(a, b)).sus_list == expected, (s, a, b)
                assert idx.interval_sus(I(a, b), "scan").sus_list == expected, (s, a, b)
            assert idx.point_sus(a).sus_list == naive_point_sus(t, a)


@settings(max_examples=150, deadline=None)
@given(st.text(alphabet="abc", min_size=1, max_size=30), st.data())
def test_answers_are_shortest_unique(s, data):
    t = make_text(s)
    index = build_index(t)
    ml = compute_mus(index)
    a = data.draw(st.integers(1, t.n))
    b = data.draw(st.integers(a, t.n))
    ans = interval_sus(ml, I(a, b))
    assert ans.sus_list
    for iv in ans.sus_list:
        assert len(iv) == ans.sus_length
        assert iv.begin <= a and b <= iv.end
        assert occurrence_count(index, iv) == 1
    for x in range(1, a + 1):
        for y in range(b, t.n + 1):
            if y - x + 1 < ans.sus_length:
                assert occurrence_count(index, I(x, y)) >= 2


@settings(max_examples=150, deadline=None)
@given(st.text(alphabet="abc", min_size=1, max_size=40))
def test_extensions_answer_their_charged_position(s):
    ml = mus_of(s)
    ps = enumerate_point_sus(ml)
    for iv in ps.rs:
        assert iv in point_sus(ml, iv.end).sus_list
    for iv in ps.ls:
        assert iv in point_sus(ml, iv.begin).sus_list
