"""Enrichment backends and the pushforward along a function."""

import itertools

import numpy as np
import pytest

from spanv.errors import ShapeMismatch, UnsupportedBackend
from spanv.finset import FinFn, FinSet
from spanv.vbackend import FinSetBackend, MatBackend, TrivialBackend, left_kan_along_function


def test_trivial_backend():
    tb = TrivialBackend()
    assert tb.trivial
    assert tb.compose(tb.id(()), ()) == ()
    assert tb.eq_mor((), ())
    with pytest.raises(UnsupportedBackend):
        tb.direct_sum([(), ()])


def test_mat_compose_mod_p():
    be = MatBackend(prime=3)
    f = be.mor([[1, 2], [0, 1]])
    g = be.mor([[2, 0], [1, 1]])
    # (f @ g) mod 3, worked by hand
    assert np.array_equal(be.compose(f, g), [[1, 2], [1, 1]])
    assert np.array_equal(be.id(2), np.eye(2))
    with pytest.raises(ShapeMismatch):
        be.compose(be.mor(np.zeros((2, 3))), be.mor(np.zeros((2, 3))))


def test_mat_rejects_composite_modulus():
    with pytest.raises(AssertionError):
        MatBackend(prime=4)


def test_mat_mor_reshapes():
    be = MatBackend(prime=5)
    m = be.mor([0, 1, 2, 3, 4, 5], 2, 3)
    assert m.shape == (2, 3)
    assert np.array_equal(m, [[0, 1, 2], [3, 4, 0]])


def test_mat_tensor_is_kron():
    be = MatBackend(prime=7)
    f = be.mor([[1, 2]])
    g = be.mor([[3], [4]])
    assert be.tensor_obj(2, 3) == 6
    assert np.array_equal(be.tensor_mor(f, g), np.kron(f, g) % 7)


def test_mat_braiding_permutes_basis():
    be = MatBackend(prime=2)
    b = be.braiding(2, 3)
    for i in range(2):
        for j in range(3):
            row = np.zeros(6, dtype=np.int64)
            row[i * 3 + j] = 1
            out = be.compose(be.mor(row.reshape(1, 6)), b)
            assert int(np.nonzero(out)[1][0]) == j * 2 + i


def test_boolean_backend():
    be = MatBackend(boolean=True)
    f = be.mor([[1, 1], [0, 1]])
    # OR-AND semiring: 1 + 1 stays 1
    assert np.array_equal(be.compose(f, f), [[1, 1], [0, 1]])


def test_finset_backend():
    be = FinSetBackend()
    x, y = FinSet((2,)), FinSet((3,))
    assert be.tensor_obj(x, y) == FinSet((2, 3))
    assert be.tensor_obj(be.unit, x) == x
    f = FinFn(x, x, [1, 0])
    g = FinFn(y, y, [0, 0, 1])
    t = be.tensor_mor(f, g)
    for a in range(2):
        for b in range(3):
            assert int(t.table[a * 3 + b]) == f.table[a] * 3 + g.table[b]
    assert be.eq_mor(be.compose(f, f), be.id(x))


def test_direct_sum_blocks():
    be = MatBackend(prime=5)
    total, injs = be.direct_sum([2, 1, 3])
    assert total == 6
    assert np.array_equal(np.vstack(injs), np.eye(6))
    fb = FinSetBackend()
    out, fins = fb.direct_sum([FinSet((2,)), FinSet((3,))])
    assert out.size == 5
    assert np.array_equal(fins[0].table, [0, 1])
    assert np.array_equal(fins[1].table, [2, 3, 4])


def test_kan_dimension_law_exhaustive():
    # dimensions add up over fibres, for every function between small sets
    be = MatBackend(prime=5)
    rng = np.random.default_rng(7)
    for ns in range(1, 4):
        for ny in range(1, 4):
            s_set, y_set = FinSet((ns,)), FinSet((ny,))
            for table in itertools.product(range(ny), repeat=ns):
                g = FinFn(s_set, y_set, list(table))
                dims = [int(d) for d in rng.integers(1, 5, size=ns)]
                out, injs = left_kan_along_function(be, g, dims)
                for y in range(ny):
                    assert out[y] == sum(d for s, d in enumerate(dims) if table[s] == y)
                for s, inj in enumerate(injs):
                    assert inj.shape == (dims[s], out[table[s]])


def test_kan_over_finset_backend():
    be = FinSetBackend()
    g = FinFn(FinSet((3,)), FinSet((2,)), [1, 0, 1])
    out, injs = left_kan_along_function(be, g, [FinSet((2,)), FinSet((3,)), FinSet((1,))])
    assert out[0].size == 3 and out[1].size == 3
    # fibre of 1 is {0, 2} in ascending order, so blocks are [0,1] then [2]
    assert np.array_equal(injs[0].table, [0, 1])
    assert np.array_equal(injs[2].table, [2])
    assert np.array_equal(injs[1].table, [0, 1, 2])
