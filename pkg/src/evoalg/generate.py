"""Seeded random structure matrices for fuzzing and demos."""

import random
from fractions import Fraction

from .algebra import EvolutionAlgebra
from .fields import QQ


def random_algebra(field, dim, rng=None, seed=None, perfect=False,
                   nondegenerate=False, max_tries=100000):
    """A random evolution algebra: small-integer entries over Q, uniform
    residues over GF(p).  Rejection sampling enforces the flags, so the
    output is a deterministic function of the seed."""
    if rng is None:
        rng = random.Random(seed)
    for _ in range(max_tries):
        if field == QQ:
            rows = [[Fraction(rng.randint(-3, 3)) for _ in range(dim)]
                    for _ in range(dim)]
        else:
            rows = [[field(rng.randrange(field.p)) for _ in range(dim)]
                    for _ in range(dim)]
        algebra = EvolutionAlgebra(field, rows)
        if perfect and not algebra.is_perfect():
            continue
        if nondegenerate and not algebra.is_nondegenerate():
            continue
        return algebra
    raise RuntimeError("rejection sampling exhausted its budget")
