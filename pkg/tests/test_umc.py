import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from stuckcells.codec import Constraint
from stuckcells.errors import ParameterError
from stuckcells.oracle import verify_exhaustive
from stuckcells.psmc import C1BCodec, C1Codec, Gen1Codec
from stuckcells.smc import PsaPattern, SmcCodec
from stuckcells.umc import UmcCodec, complement, dual_pattern, umc_decode, umc_encode


def test_complement_is_involution():
    y = (0, 1, 2, 3)
    assert complement(4, y) == (3, 2, 1, 0)
    assert complement(4, complement(4, y)) == y


def test_dual_pattern_drops_unconstrained_cells():
    p = PsaPattern((0, 2, 3), (1, 3, 0))
    # a maximum of q-1 constrains nothing; level s~ becomes minimum q-1-s~
    assert dual_pattern(4, p) == PsaPattern((0, 3), (2, 3))


def test_umc_requires_minimum_level_inner(ex1_code):
    with pytest.raises(ParameterError):
        UmcCodec(SmcCodec(ex1_code))


def test_umc_small_round_trip():
    inner = C1Codec(3, 5)
    pattern = PsaPattern((1, 2), (1, 1))  # cells 1 and 2 cannot exceed level 1
    y = umc_encode(inner, (2, 0, 1, 0), pattern)
    assert y[1] <= 1 and y[2] <= 1
    assert umc_decode(inner, y) == (2, 0, 1, 0)


@pytest.mark.parametrize("inner", [C1Codec(3, 5, 2), C1BCodec(4, 3, 3), Gen1Codec(5, 3, 4)])
def test_duals_exhaustive(inner):
    codec = UmcCodec(inner)
    assert codec.constraint is Constraint.MAX
    assert codec.message_radices() == inner.message_radices()
    assert verify_exhaustive(codec).passed


@settings(max_examples=100, deadline=None)
@given(st.data())
def test_umc_property(data):
    q = data.draw(st.integers(3, 9))
    n = data.draw(st.integers(2, 6))
    codec = UmcCodec(C1Codec(q, n))
    u = data.draw(st.integers(0, codec.u_max))
    pos = sorted(data.draw(st.lists(st.integers(0, n - 1), unique=True, min_size=u, max_size=u)))
    lv = data.draw(st.lists(st.sampled_from(codec.level_choices()), min_size=u, max_size=u))
    pattern = PsaPattern(pos, lv)
    if not codec.admits(pattern):
        return
    msg = tuple(data.draw(st.integers(0, r - 1)) for r in codec.message_radices())
    y = codec.encode(msg, pattern)
    assert all(y[p] <= s for p, s in pattern.pairs())
    assert codec.decode(y) == msg
