import pytest
from hypothesis import given, strategies as st

from continuum import _core, _kernels_py

compiled = pytest.importorskip("continuum._kernels")

words = st.binary(max_size=12).map(lambda b: bytes(x & 1 for x in b))
periods = st.binary(min_size=1, max_size=6).map(lambda b: bytes(x & 1 for x in b))


def test_backend_selected():
    assert _core.BACKEND == "cython"


@given(words, periods, words, periods)
def test_lex_compare_parity(px, qx, py, qy):
    assert compiled.lex_compare_bits(px, qx, py, qy) == _kernels_py.lex_compare_bits(px, qx, py, qy)


@given(st.integers(min_value=1, max_value=20), st.integers(min_value=1, max_value=30))
def test_stadium_parity(n_bodies, ticks):
    assert compiled.stadium_passings(n_bodies, ticks) == _kernels_py.stadium_passings(n_bodies, ticks)


@pytest.mark.parametrize("kernels", [compiled, _kernels_py])
def test_rejects_bad_input(kernels):
    with pytest.raises(ValueError):
        kernels.stadium_passings(0, 3)
    with pytest.raises(ValueError):
        kernels.stadium_passings(3, 0)
