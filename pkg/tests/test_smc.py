import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from stuckcells import codes
from stuckcells.errors import CapabilityExceededError, ParameterError
from stuckcells.smc import PsaPattern, SmcCodec, smc_decode, smc_encode


def test_pattern_validation():
    with pytest.raises(ParameterError):
        PsaPattern((1, 1), (1, 1))
    with pytest.raises(ParameterError):
        PsaPattern((2, 1), (1, 1))
    with pytest.raises(ParameterError):
        PsaPattern((0,), (1, 2))
    with pytest.raises(ParameterError):
        PsaPattern((-1,), (1,))


def test_pattern_helpers():
    p = PsaPattern.from_pairs([(4, 2), (0, 1)])
    assert p.positions == (0, 4) and p.levels == (1, 2) and p.u == 2
    assert PsaPattern.from_json(p.to_json()) == p
    assert PsaPattern.uniform((1, 3), 2).levels == (2, 2)
    with pytest.raises(ParameterError):
        p.check_length(4)
    with pytest.raises(ParameterError):
        PsaPattern.from_json('{"positions": [1]}')


def test_example_word(ex1_code):
    y = smc_encode(ex1_code, (2, 1), PsaPattern((0, 4), (1, 2)))
    assert y == (1, 1, 0, 1, 2)


def test_capability_exceeded(ex1_code):
    with pytest.raises(CapabilityExceededError):
        smc_encode(ex1_code, (0, 0), PsaPattern((0, 1, 2), (0, 0, 0)))


def test_codec_descriptor(ex1_code):
    codec = SmcCodec(ex1_code)
    d = codec.descriptor.to_dict()
    assert d["u_max"] == 2 and d["redundancy_exact"] == "3"
    assert codec.redundancy().integer_value() == 3


@settings(max_examples=200, deadline=None)
@given(st.data())
def test_masks_up_to_d_minus_one(data):
    code = data.draw(st.sampled_from([codes.hamming(3, 2), codes.mds(5, 6, 4), codes.hamming(4, 2)]))
    q, n = code.q, code.n
    m = data.draw(st.lists(st.integers(0, q - 1), min_size=code.k, max_size=code.k))
    pos = data.draw(st.lists(st.integers(0, n - 1), unique=True, max_size=code.d_claimed - 1))
    lv = data.draw(st.lists(st.integers(0, q - 1), min_size=len(pos), max_size=len(pos)))
    pattern = PsaPattern.from_pairs(zip(pos, lv))
    y = smc_encode(code, m, pattern)
    assert all(y[p] == s for p, s in pattern.pairs())
    assert smc_decode(code, y) == tuple(m)
