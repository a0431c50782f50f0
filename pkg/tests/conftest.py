import random

import pytest

from fjump import Ideal, PrimeField, RingCtx


@pytest.fixture
def rng():
    return random.Random(0xF17E57)


def ring(p, *names):
    return RingCtx(PrimeField(p), tuple(names))


def random_poly(rnd, R, max_degree=4, max_terms=4, nonzero=False):
    n = R.nvars
    while True:
        terms = []
        for _ in range(rnd.randint(0 if not nonzero else 1, max_terms)):
            deg = rnd.randint(0, max_degree)
            exps = [0] * n
            for _ in range(deg):
                exps[rnd.randrange(n)] += 1
            terms.append((tuple(exps), rnd.randint(1, R.p - 1)))
        f = R.zero() if not terms else R.monomial(terms[0][0], terms[0][1])
        for exps, c in terms[1:]:
            f = f + R.monomial(exps, c)
        if not (nonzero and f.is_zero()):
            return f


def random_ideal(rnd, R, max_gens=3, max_degree=4, nonzero=True):
    gens = [random_poly(rnd, R, max_degree=max_degree, nonzero=True)
            for _ in range(rnd.randint(1, max_gens))]
    I = Ideal(R, gens)
    if nonzero and I.is_zero():
        return random_ideal(rnd, R, max_gens, max_degree, nonzero)
    return I


def random_monomial_ideal(rnd, R, max_gens=4, max_exp=24):
    gens = []
    for _ in range(rnd.randint(1, max_gens)):
        exps = tuple(rnd.randint(0, max_exp) for _ in range(R.nvars))
        gens.append(R.monomial(exps))
    return Ideal(R, gens)
