import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from stuckcells import codes
from stuckcells.codec import Construction
from stuckcells.errors import CapabilityExceededError, ParameterError
from stuckcells.oracle import verify_exhaustive
from stuckcells.psmc import (
    C1BCodec,
    C1Codec,
    C2Codec,
    Gen1Codec,
    Gen3Codec,
    RreMaskCodec,
    all_subsets_maskable,
    c1_decode,
    c1_encode,
    c1b_decode,
    c1b_encode,
    c2_capability,
    c3_decode_trace,
    c3_encode_trace,
    gen1_decode,
    gen1_encode,
    gen3_decode,
    gen3_encode,
    gen3_redundancy,
    gen3s_decode,
    gen3s_encode,
    rre_mask_solve,
    sigma,
    stuck_rre_maskable,
    u_tilde_levels,
    u_tilde_same,
)
from stuckcells.smc import PsaPattern

# -- Construction I family -------------------------------------------------------------


def test_c1_example():
    y = c1_encode(3, 5, (2, 0, 1, 0), PsaPattern.uniform((1, 2), 1))
    assert y == (2, 1, 2, 0, 2)
    assert c1_decode(3, 5, y) == (2, 0, 1, 0)


def test_c1_capability():
    with pytest.raises(CapabilityExceededError):
        c1_encode(3, 5, (0, 0, 0, 0), PsaPattern.uniform((0, 1, 2), 1))
    with pytest.raises(ParameterError):
        c1_encode(3, 5, (0, 0, 0, 0), PsaPattern.uniform((1,), 2))


def test_c1b_small_example():
    y = c1b_encode(6, 3, (4, 5), 1, PsaPattern.uniform((1,), 1), u=2)
    assert y == (3, 1, 2)
    assert c1b_decode(6, 3, 2, y) == ((4, 5), 1)


def test_gen1_small_example():
    y = gen1_encode(6, 3, (4, 5), 1, PsaPattern((1, 2), (1, 1)), s_sum=2)
    assert all(y[p] >= 1 for p in (1, 2))
    assert gen1_decode(6, 3, 2, y) == ((4, 5), 1)


def test_c1b_and_gen1_share_a_decoder():
    # Their encoders may pick different shifts, but each decodes the other's words.
    for w in itertools.product(range(6), repeat=2):
        for pos in (1, 2):
            pattern = PsaPattern.uniform((pos,), 1)
            a = c1b_encode(6, 3, w, 0, pattern, u=1)
            b = gen1_encode(6, 3, w, 0, pattern, s_sum=1)
            assert c1b_decode(6, 3, 1, b) == gen1_decode(6, 3, 1, a) == (w, 0)


def test_c1b_redundancy_matches_formula():
    r = C1BCodec(6, 5, 2).redundancy()
    assert r.power == 3


@settings(max_examples=200, deadline=None)
@given(st.data())
def test_gen1_property(data):
    q = data.draw(st.integers(3, 11))
    n = data.draw(st.integers(2, 6))
    u = data.draw(st.integers(1, min(n, q - 1)))
    levels = data.draw(st.lists(st.integers(1, q - 1), min_size=u, max_size=u).filter(lambda l: sum(l) < q))
    pos = sorted(data.draw(st.lists(st.integers(0, n - 1), unique=True, min_size=u, max_size=u)))
    codec = Gen1Codec(q, n, sum(levels))
    msg = tuple(data.draw(st.integers(0, r - 1)) for r in codec.message_radices())
    pattern = PsaPattern(pos, levels)
    y = codec.encode(msg, pattern)
    assert codec.masks(y, pattern)
    assert codec.decode(y) == msg


@pytest.mark.parametrize("q,n,u", [(4, 3, 1), (4, 3, 3), (6, 3, 2), (6, 3, 5)])
def test_c1b_exhaustive(q, n, u):
    assert verify_exhaustive(C1BCodec(q, n, u)).passed


# -- Construction II family ------------------------------------------------------------


def test_c2_capability_formula():
    assert c2_capability(5, 3) == 5
    assert c2_capability(3, 3) == 3
    assert c2_capability(8, 4, 3) == 4


def test_c2_on_shortened_hamming():
    code = codes.shorten(codes.hamming(5, 3), 1)
    codec = C2Codec(code)
    assert codec.u_max == 5
    assert codec.redundancy().integer_value() == 3
    msg = tuple(range(27))
    msg = tuple(x % 5 for x in msg)
    pattern = PsaPattern.uniform((0, 3, 9, 17, 29), 1)
    y = codec.encode(msg, pattern)
    assert codec.masks(y, pattern)
    assert codec.decode(y) == msg


def test_rre_mask_example(mask_2x8):
    code = codes.from_matrix(mask_2x8, 3, verify=False)
    codec = RreMaskCodec(code, 3)
    pattern = PsaPattern.uniform((0, 2, 4), 1)
    y = codec.encode((1, 0, 2, 0, 1, 2), pattern)
    assert y == (1, 2, 1, 1, 1, 2, 1, 2)
    assert codec.decode(y) == (1, 0, 2, 0, 1, 2)
    assert stuck_rre_maskable(mask_2x8, pattern)
    assert all_subsets_maskable(mask_2x8, 3)
    assert verify_exhaustive(codec, 3).passed


def test_rre_mask_solve_rejects_unmaskable():
    from stuckcells.errors import UnmaskablePatternError
    from stuckcells.linalg import Matrix
    from stuckcells.ring import make_ctx

    H = Matrix.from_rows(make_ctx(2), [[1, 1, 1]])
    with pytest.raises(UnmaskablePatternError):
        rre_mask_solve(H, (0, 0, 0), PsaPattern.uniform((0, 1), 1))


def test_gen2_levels():
    code = codes.mds(8, 6, 4)
    codec = C2Codec(code, s=3)
    assert codec.construction is Construction.GEN2
    assert verify_exhaustive(codec, (1, 2)).passed


# -- Construction III family -----------------------------------------------------------


def test_sigma_and_u_tilde():
    assert [sigma(8, 4, i) for i in (1, 2, 3, 4, 5)] == [4, 5, 6, 7, 8]
    assert u_tilde_levels(8, 4, (1, 1, 1, 1, 2, 2, 3)) == 4
    assert u_tilde_same(8, 4, 3, 7) == 5
    assert u_tilde_same(4, 2, 1, 5) == 2


def test_c3_trace(walkthrough_code, c3_golden):
    g = c3_golden
    t = c3_encode_trace(4, walkthrough_code, g["m"], g["m_extra"], g["pattern"])
    for key in ("w", "w_z", "v", "z_b", "c_prime", "m_tilde", "y", "unsafe_positions"):
        assert getattr(t, key) == tuple(g[key]), key
    assert (t.z, t.u_tilde) == (g["z"], g["u_tilde"])
    d = c3_decode_trace(4, walkthrough_code, t.y)
    assert d.z_hat == 1
    assert d.y_hat == tuple(g["y_hat"])
    assert d.t_hat == tuple(g["t_hat"])
    assert d.m == tuple(g["m"]) and d.m_extra == tuple(g["m_extra"])


def test_c3_redundancy_values():
    assert gen3_redundancy(4, 2, 63, 57).value == pytest.approx(4.5)
    assert gen3_redundancy(4, 2, 15, 11).value == pytest.approx(3.5)
    assert gen3_redundancy(8, 4, 31, 24).exact_str() == "6"


def test_gen3_preconditions():
    with pytest.raises(ParameterError):
        Gen3Codec(3, codes.hamming(2, 3), mode="c3")  # 2Q > q
    with pytest.raises(ParameterError):
        Gen3Codec(8, codes.hamming(4, 2), s=4)  # Q < s + 1


@pytest.mark.parametrize("mode,s", [("same", 2), ("levels", 2)])
def test_gen3_exhaustive_small(mode, s):
    codec = Gen3Codec(6, codes.parity(3, 3), s=s, mode=mode)
    assert verify_exhaustive(codec).passed


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_gen3_levels_property(data):
    q = 8
    code = codes.hamming(4, 2)  # [5,3,3]_4 so Q = 4
    codec = Gen3Codec(q, code, s=3, mode="levels")
    n = codec.n
    u = data.draw(st.integers(0, n))
    pos = sorted(data.draw(st.lists(st.integers(0, n - 1), unique=True, min_size=u, max_size=u)))
    lv = data.draw(st.lists(st.integers(1, 3), min_size=u, max_size=u))
    pattern = PsaPattern(pos, lv)
    if not codec.admits(pattern):
        return
    msg = tuple(data.draw(st.integers(0, r - 1)) for r in codec.message_radices())
    y = codec.encode(msg, pattern)
    assert codec.masks(y, pattern)
    assert codec.decode(y) == msg
    assert gen3_decode(q, code, y) == (msg[: code.k], msg[code.k :])


def test_gen3_same_functions_round_trip():
    code = codes.hamming(4, 2)
    pattern = PsaPattern.uniform((0, 2, 5), 2)
    m = (1, 2, 3)
    extra = (1,)
    y = gen3s_encode(8, code, 2, m, extra, pattern)
    assert all(y[p] >= 2 for p in pattern.positions)
    assert gen3s_decode(8, code, y) == (m, extra)
    y = gen3_encode(8, code, m, extra, pattern)
    assert gen3_decode(8, code, y) == (m, extra)


def test_printed_unsafe_rule_counterexample_is_handled():
    # q=4 with the [7,4,3]_2 code: every admissible pattern must be masked.
    codec = Gen3Codec(4, codes.hamming(2, 3), mode="c3")
    assert verify_exhaustive(codec, range(4)).passed


def test_c1_codec_descriptor():
    d = C1Codec(3, 5).descriptor.to_dict()
    assert d["u_max"] == 2 and d["redundancy_exact"] == "1"
