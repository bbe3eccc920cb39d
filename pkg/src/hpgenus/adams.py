"""Adams operations psi^r on the one-generator series model of K(CP^infinity).

psi^r is the ring endomorphism determined by where it sends the generator:
t maps to (1 + t)^r - 1.  Applying psi^r to an arbitrary reduced class is
substitution of that image for t, never a per-monomial coefficient formula,
so the endomorphism laws are structural rather than tabulated.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb

from .primes import is_prime
from .series import TruncatedSeries


def _check_index(r: int) -> None:
    if not isinstance(r, int) or isinstance(r, bool) or r < 1:
        raise ValueError(f"Adams index must be a positive integer, got {r!r}")


def psi_generator(r: int, order: int) -> TruncatedSeries:
    """The image of the generator under psi^r: (1 + t)^r - 1, truncated.

    Binomial coefficients are exact; the constant term is always zero and
    the t^1 coefficient is r.
    """
    _check_index(r)
    top = min(r, order - 1) if order >= 1 else 0
    return TruncatedSeries(order, [0] + [comb(r, n) for n in range(1, top + 1)])


@lru_cache(maxsize=None)
def _generator_powers(r: int, order: int) -> tuple[TruncatedSeries, ...]:
    # Substitution sweeps hit the same generator image thousands of times,
    # so its powers are computed once per (r, order) and reused.
    g = psi_generator(r, order)
    powers = [TruncatedSeries.one(order), g]
    for _ in range(2, order):
        powers.append(powers[-1] * g)
    return tuple(powers[:order])


def psi_apply(r: int, f: TruncatedSeries) -> TruncatedSeries:
    """Apply psi^r to a series with zero constant term.

    The value equals ``f.compose(psi_generator(r, f.order))``; the cached
    power table of the generator image only changes the evaluation order,
    not the result.
    """
    _check_index(r)
    if f.coefficient(0) != 0:
        raise ValueError("psi acts on reduced classes: the constant term must be zero")
    n = f.order
    powers = _generator_powers(r, n)
    acc = [0] * n
    for m in range(1, n):
        c = f.coeffs[m]
        if c:
            g = powers[m].coeffs
            # the generator image has no constant term, so its m-th power
            # starts at degree m
            for i in range(m, n):
                acc[i] += c * g[i]
    return TruncatedSeries(n, acc)


def check_composition(a: int, b: int, order: int) -> bool:
    """Whether psi^a after psi^b agrees with psi^(ab) at the given order.

    This is an identity of the operations, so the result is always True;
    it is exposed as a checkable oracle rather than assumed.
    """
    _check_index(a)
    _check_index(b)
    return psi_apply(a, psi_generator(b, order)) == psi_generator(a * b, order)


def check_frobenius(p: int, f: TruncatedSeries) -> bool:
    """Whether psi^p(f) is congruent to f^p modulo p.

    Holds for every prime p and every series f with zero constant term;
    exposed as a checkable oracle.
    """
    if not is_prime(p):
        raise ValueError(f"the Frobenius congruence needs a prime, got {p!r}")
    if f.coefficient(0) != 0:
        raise ValueError("the constant term must be zero")
    return (psi_apply(p, f) - f**p).reduce(modulus=p).is_zero
