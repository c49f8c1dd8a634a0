"""The compiled and pure-Python kernels must agree exactly."""

import os
import subprocess
import sys

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tropdual import _backend
from tropdual._kernels_py import IINF

BACKENDS = _backend.available_backends()
needs_both = pytest.mark.skipif("cython" not in BACKENDS, reason="compiled kernels not built")

ints = st.one_of(st.integers(-40, 40), st.integers(-40, 40), st.just(IINF))


def rows(n, k):
    return st.lists(st.tuples(*[ints] * n).map(list), min_size=k, max_size=k)


@st.composite
def int_matrix(draw, square=False):
    r = draw(st.integers(1, 5))
    c = r if square else draw(st.integers(1, 5))
    return draw(rows(c, r))


def test_backend_is_selected():
    assert _backend.BACKEND in BACKENDS
    assert "python" in BACKENDS


def test_environment_variable_forces_python():
    code = "import tropdual; print(tropdual.BACKEND)"
    env = dict(os.environ, TROPDUAL_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"


@needs_both
@given(int_matrix(), st.data())
def test_residuate_parity(G, data):
    x = data.draw(st.tuples(*[ints] * len(G[0])).map(list))
    py, cy = BACKENDS["python"], BACKENDS["cython"]
    a, b = py.residuate(G, x), cy.residuate(G, x)
    assert list(a[0]) == list(b[0]) and bool(a[1]) == bool(b[1])


@needs_both
@given(int_matrix())
def test_prune_parity(G):
    py, cy = BACKENDS["python"], BACKENDS["cython"]
    assert [bool(k) for k in py.prune_nonextreme(G)] == [bool(k) for k in cy.prune_nonextreme(G)]


@needs_both
@given(int_matrix(square=True))
def test_singular_parity(M):
    assert bool(BACKENDS["python"].is_singular(M)) == bool(BACKENDS["cython"].is_singular(M))


@needs_both
@given(int_matrix())
def test_rank_parity_including_witness(M):
    a = BACKENDS["python"].tropical_rank(M)
    b = BACKENDS["cython"].tropical_rank(M)
    assert (a[0], tuple(a[1]), tuple(a[2])) == (b[0], tuple(b[1]), tuple(b[2]))


@needs_both
def test_high_level_results_identical_under_both_backends(monkeypatch):
    import random

    from conftest import random_ext
    from tropdual import orthogonal_generators, rank_witness

    rng = random.Random(21)
    cases = []
    for _ in range(150):
        n = rng.randint(2, 5)
        cases.append((n, [tuple(random_ext(rng) for _ in range(n)) for _ in range(rng.randint(0, 3))]))

    def run():
        out = []
        for n, rows in cases:
            g = orthogonal_generators(rows, n)
            out.append((g, rank_witness(g.rows()) if len(g) else None))
        return out

    compiled = run()
    monkeypatch.setattr(_backend, "kernels", BACKENDS["python"])
    assert run() == compiled
