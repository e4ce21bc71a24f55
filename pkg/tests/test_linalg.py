import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from stuckcells.errors import ParameterError, UnmaskableColumnError
from stuckcells.linalg import (
    Matrix,
    column_block_assignment,
    format_matrix,
    maskable_check,
    parse_matrix,
    rank,
    read_matrix,
    rre,
    solve_left,
    vec_mat,
    write_matrix,
)
from stuckcells.ring import make_ctx


def test_systematic_matrix_is_its_own_rre(ex1_code):
    H = ex1_code.H
    res = rre(H)
    assert res.R == H
    assert res.rank == 3
    assert res.pivot_cols == (0, 1, 2)
    assert res.T == Matrix.identity(H.ctx, 3)


def test_solve_left_canonical_example(ex1_code):
    A = ex1_code.H.columns((0, 4))
    assert solve_left(A, (1, 1)) == (1, 1, 0)
    # the alternative solution also satisfies the system
    assert vec_mat(A.ctx, (1, 0, 1), A) == (1, 1)


def test_solve_left_inconsistent():
    ctx = make_ctx(3)
    A = Matrix.from_rows(ctx, [[1, 1], [0, 0]])
    assert solve_left(A, (1, 2)) is None


def test_block_assignment_2x8(mask_2x8):
    R = rre(mask_2x8.columns((0, 2, 4))).R
    blocks = column_block_assignment(R)
    assert blocks == (0, 1, 1)
    assert max(blocks.count(b) for b in set(blocks)) <= 2
    assert maskable_check(R, (1, 1, 1))


def test_any_three_columns_of_2x8_are_maskable(mask_2x8):
    for cols in itertools.combinations(range(8), 3):
        assert maskable_check(rre(mask_2x8.columns(cols)).R, (1, 1, 1))


def test_zero_column():
    ctx = make_ctx(3)
    R = Matrix.from_rows(ctx, [[1, 0], [0, 0]])
    with pytest.raises(UnmaskableColumnError):
        column_block_assignment(R)
    assert not maskable_check(R, (1, 1))


def test_budget_overflow():
    ctx = make_ctx(3)
    R = Matrix.from_rows(ctx, [[1, 1, 1]])
    assert maskable_check(R, (1, 1, 0))
    assert not maskable_check(R, (1, 1, 1))


def test_text_round_trip(tmp_path, mask_2x8):
    assert parse_matrix(format_matrix(mask_2x8)) == mask_2x8
    path = tmp_path / "m.txt"
    write_matrix(mask_2x8, path)
    assert read_matrix(path) == mask_2x8


@pytest.mark.parametrize("text", ["", "3 2\n1 0\n", "3 2 2\n1 0\n", "3 1 2\n1 5\n", "3 1 2\n1 0 1\n"])
def test_bad_matrix_text(text):
    with pytest.raises(ParameterError):
        parse_matrix(text)


def matrices(q):
    return st.integers(1, 4).flatmap(
        lambda r: st.integers(1, 6).flatmap(
            lambda c: st.lists(st.lists(st.integers(0, q - 1), min_size=c, max_size=c), min_size=r, max_size=r)
        )
    )


@settings(max_examples=150, deadline=None)
@given(st.sampled_from([2, 3, 4, 5, 8, 9]).flatmap(lambda q: st.tuples(st.just(q), matrices(q))))
def test_rre_invariants(qm):
    q, rows = qm
    ctx = make_ctx(q)
    A = Matrix.from_rows(ctx, rows)
    res = rre(A)
    assert res.T @ A == res.R
    assert rank(res.T) == A.nrows  # T invertible
    assert res.rank == rank(A)
    for i, c in enumerate(res.pivot_cols):
        assert res.R.column(c) == tuple(int(j == i) for j in range(A.nrows))
    assert all(not any(r) for r in res.R.rows[res.rank :])


@settings(max_examples=150, deadline=None)
@given(st.sampled_from([2, 3, 4, 7]).flatmap(lambda q: st.tuples(st.just(q), matrices(q), st.data())))
def test_solve_left_solves(args):
    q, rows, data = args
    ctx = make_ctx(q)
    A = Matrix.from_rows(ctx, rows)
    z0 = data.draw(st.lists(st.integers(0, q - 1), min_size=A.nrows, max_size=A.nrows))
    t = vec_mat(ctx, z0, A)
    z = solve_left(A, t)
    assert z is not None
    assert vec_mat(ctx, z, A) == t
