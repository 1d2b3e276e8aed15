import pytest
from hypothesis import given, strategies as st

from susbounds.text import (
    EmptyText, Interval, OutOfBounds, Text, contains, make_text, read_text_file, substring,
)

from conftest import FIG1, I


def test_make_text_lengths():
    assert make_text(FIG1).n == 11
    assert make_text("a").n == 1
    assert make_text(b"\x00\xff").n == 2


def test_empty_text_rejected():
    with pytest.raises(EmptyText):
        make_text("")
    with pytest.raises(EmptyText):
        Text(b"")


def test_text_is_immutable(fig1):
    with pytest.raises(AttributeError):
        fig1.data = b"x"


@pytest.mark.parametrize("iv, expected", [
    (I(3, 4), b"bb"),
    (I(5, 8), b"aaba"),
    (I(7, 7), b"b"),
])
def test_substring(fig1, iv, expected):
    assert substring(fig1, iv) == expected


@pytest.mark.parametrize("iv", [I(0, 2), I(5, 12), I(4, 3)])
def test_substring_out_of_bounds(fig1, iv):
    with pytest.raises(OutOfBounds):
        substring(fig1, iv)


def test_contains():
    assert contains(I(3, 6), I(6, 6))
    assert not contains(I(4, 7), I(3, 6))
    assert contains(I(5, 8), I(5, 8))


def test_interval_length():
    assert len(I(3, 6)) == 4
    assert I(7, 7).length == 1
    assert str(I(3, 4)) == "[3,4]"


def test_file_input_strips_one_newline(tmp_path):
    p = tmp_path / "t.txt"
    p.write_bytes(b"ab\n\n")
    assert read_text_file(p).data == b"ab\n"
    p.write_bytes(b"ab")
    assert read_text_file(p).data == b"ab"


@given(st.binary(min_size=1, max_size=40))
def test_whole_interval_reproduces_input(data):
    t = make_text(data)
    assert substring(t, Interval(1, t.n)) == data


intervals = st.integers(1, 30).flatmap(
    lambda b: st.integers(b, 30).map(lambda e: Interval(b, e)))


@given(intervals, intervals, intervals)
def test_contains_reflexive_transitive(a, b, c):
    assert contains(a, a)
    if contains(a, b) and contains(b, c):
        assert contains(a, c)
