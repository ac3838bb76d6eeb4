"""A pool of small dendriform algebras built from the worked example by exact constructions."""

from functools import lru_cache

from dendri.algebra import DendriformAlgebra, check_dendriform, direct_sum
from dendri.bialgebra import double, dual_products
from dendri.field import QQ, Field
from dendri.fixtures import e1_algebra, e1_r
from dendri.representation import coregular_rep, regular_rep, semidirect
from dendri.rotabaxter import descendent
from dendri.search import enumerate_rb

GF3 = Field.gf(3)


def e1_modified(field=QQ):
    """E1 with ``e2 < e1`` changed to ``e1``; not dendriform."""
    return DendriformAlgebra.from_sparse(field, 2, prec=[(0, 0, 0, 1), (1, 0, 0, 1)],
                                         succ=[(0, 1, 1, 1), (1, 0, 1, -1)])


@lru_cache(maxsize=None)
def gf3_pool() -> tuple:
    """Dendriform algebras over GF(3): E1, its descendents under every weight-1 RB operator,
    its transposed-opposite, a zero algebra and a padded copy."""
    A = e1_algebra(GF3)
    pool = [A, DendriformAlgebra.zero(GF3, 2), direct_sum(A, DendriformAlgebra.zero(GF3, 1))]
    # opposite: x <' y = y > x, x >' y = y < x is again dendriform
    pool.append(DendriformAlgebra(GF3, A.succ.permute((1, 0, 2)), A.prec.permute((1, 0, 2))))
    seen = {(a.prec, a.succ) for a in pool}
    for P in enumerate_rb(A, 1):
        D = descendent(A, P, 1)
        if (D.prec, D.succ) not in seen:
            seen.add((D.prec, D.succ))
            pool.append(D)
    assert all(check_dendriform(X).ok for X in pool)
    return tuple(pool)


@lru_cache(maxsize=None)
def rational_pool() -> tuple:
    A = e1_algebra()
    B = dual_products(A, e1_r())
    pool = (A, DendriformAlgebra.zero(QQ, 2), B, double(A, B)[0],
            semidirect(A, regular_rep(A)), semidirect(A, coregular_rep(A)))
    assert all(check_dendriform(X).ok for X in pool)
    return pool
