import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given, strategies as st

from plethysm import _kernels_py, kernels

compiled = pytest.importorskip("plethysm._kernels")

primes = st.sampled_from([2, 3, 5, 7, 101, 65521, 2 ** 31 - 1, 2 ** 31 + 11])


@st.composite
def matrices(draw, max_side=8):
    r = draw(st.integers(1, max_side))
    c = draw(st.integers(1, max_side))
    rows = draw(st.lists(st.lists(st.integers(-10 ** 6, 10 ** 6), min_size=c, max_size=c), min_size=r, max_size=r))
    return np.array(rows, dtype=np.int64)


@given(matrices(), primes)
def test_rank_agrees(a, p):
    assert compiled.rank_mod_p(a, p) == _kernels_py.rank_mod_p(a, p)


@given(matrices(), st.integers(1, 6), primes, st.data())
def test_matmul_agrees(a, cols, p, data):
    b = data.draw(st.lists(st.lists(st.integers(-10 ** 6, 10 ** 6), min_size=cols, max_size=cols),
                           min_size=a.shape[1], max_size=a.shape[1]))
    b = np.array(b, dtype=np.int64)
    assert (compiled.matmul_mod_p(a, b, p) == _kernels_py.matmul_mod_p(a, b, p)).all()
    expected = [[sum(int(x) * int(y) for x, y in zip(row, col)) % p for col in b.T] for row in a]
    assert compiled.matmul_mod_p(a, b, p).tolist() == expected


vectors = st.lists(
    st.lists(st.tuples(st.integers(0, 62), st.integers(-50, 50)), min_size=1, max_size=5, unique_by=lambda t: t[0])
    .map(lambda items: ([i for i, _ in items], [c for _, c in items])),
    min_size=0, max_size=5,
)


@given(vectors, primes)
def test_wedge_expansion_agrees(vs, p):
    assert compiled.wedge_expand_mod_p(vs, p) == _kernels_py.wedge_expand_mod_p(vs, p)


def test_wedge_expansion_signs():
    # e1 ∧ e0 = -(e0 ∧ e1)
    assert _kernels_py.wedge_expand_mod_p([([1], [1]), ([0], [1])], 7) == {0b11: 6}
    assert compiled.wedge_expand_mod_p([([1], [1]), ([0], [1])], 7) == {0b11: 6}
    assert compiled.wedge_expand_mod_p([([0], [1]), ([0], [1])], 7) == {}


def test_rank_of_known_matrices():
    assert compiled.rank_mod_p(np.eye(5, dtype=np.int64), 2) == 5
    assert compiled.rank_mod_p([[1, 1], [1, 1]], 3) == 1
    assert compiled.rank_mod_p([[2, 0], [0, 2]], 2) == 0


def test_backend_is_selected_at_import():
    assert kernels.BACKEND == "cython"
    code = "from plethysm import kernels; print(kernels.BACKEND)"
    out = subprocess.run([sys.executable, "-c", code], env={"PLETHYSM_PURE_PYTHON": "1", "PATH": ""},
                         capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"
