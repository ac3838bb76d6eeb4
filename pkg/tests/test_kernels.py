import random

import pytest

from dendri import _kernels_py, kernels
from dendri.fixtures import e1_algebra
from dendri.field import Field
from dendri.search import _flat

compiled = pytest.mark.skipif("compiled" not in kernels.BACKENDS, reason="compiled kernels not built")


def test_decode_digits():
    assert _kernels_py.decode(0, 2, 3) == [0, 0, 0, 0]
    assert _kernels_py.decode(80, 2, 3) == [2, 2, 2, 2]
    assert _kernels_py.decode(5, 2, 3) == [0, 0, 1, 2]


def test_default_backend_is_registered():
    assert kernels.BACKEND in kernels.BACKENDS
    assert kernels.get_backend() is kernels.BACKENDS[kernels.BACKEND]


@compiled
def test_compiled_is_default_when_built():
    assert kernels.BACKEND == "compiled"


@compiled
@pytest.mark.parametrize("p", [3, 5, 7])
def test_compiled_matches_python_on_random_ranges(p):
    A = e1_algebra(Field.gf(p))
    star, prec, succ = _flat(A.star), _flat(A.prec), _flat(A.succ)
    rng = random.Random(p)
    size = p ** 4
    for _ in range(5):
        lo = rng.randrange(size)
        hi = min(size, lo + rng.randrange(1, 400))
        assert (kernels.d_solutions(2, p, star, prec, succ, lo, hi, "python")
                == kernels.d_solutions(2, p, star, prec, succ, lo, hi, "compiled"))
        lam = rng.randrange(1, p)
        assert (kernels.rb_solutions(2, p, prec, succ, lam, lo, hi, "python")
                == kernels.rb_solutions(2, p, prec, succ, lam, lo, hi, "compiled"))


@pytest.mark.parametrize("backend", sorted(kernels.BACKENDS))
def test_empty_range(backend):
    A = e1_algebra(Field.gf(3))
    assert kernels.d_solutions(2, 3, _flat(A.star), _flat(A.prec), _flat(A.succ), 10, 10, backend) == []
