import os
import subprocess
import sys

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from borderline._kernels import as_array, count_standard, divisible_mask, numba_enabled, standard_mask

monos = st.lists(st.tuples(*[st.integers(0, 4)] * 3), min_size=0, max_size=40)


def _brute(mons, gens):
    return [any(all(g <= m for g, m in zip(gg, mm)) for gg in gens) for mm in mons]


@given(monos, monos)
@settings(max_examples=60, deadline=None)
def test_backends_agree(mons, gens):
    a, b = as_array(mons, 3), as_array(gens, 3)
    nb = divisible_mask(a, b, backend="numba")
    npy = divisible_mask(a, b, backend="numpy")
    assert nb.tolist() == npy.tolist() == _brute(mons, gens)


@given(monos, monos)
@settings(max_examples=40, deadline=None)
def test_standard_counts(mons, gens):
    expect = [not x for x in _brute(mons, gens)]
    assert standard_mask(mons, gens) == expect
    assert count_standard(mons, gens) == sum(expect)


def test_large_block_goes_through_kernel():
    rng = np.random.default_rng(0)
    mons = [tuple(int(x) for x in row) for row in rng.integers(0, 6, size=(400, 4))]
    gens = [tuple(int(x) for x in row) for row in rng.integers(0, 4, size=(30, 4))]
    assert count_standard(mons, gens) == sum(1 for x in _brute(mons, gens) if not x)


def test_unknown_backend():
    import pytest
    with pytest.raises(ValueError):
        divisible_mask(as_array([(1, 0)]), as_array([(0, 0)]), backend="cuda")


def test_env_flag_disables_numba():
    env = dict(os.environ, BORDERLINE_NUMBA="0")
    code = "from borderline._kernels import numba_enabled; print(numba_enabled())"
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "False"
    assert isinstance(numba_enabled(), bool)
