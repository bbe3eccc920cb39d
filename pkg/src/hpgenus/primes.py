"""Deterministic primality helpers.

Inputs throughout the package stay small (well below 10**6), so plain trial
division is exact and fast enough; there is no probabilistic path anywhere.
"""

from __future__ import annotations


def is_prime(n: int) -> bool:
    """Trial-division primality test, exact for every integer."""
    if not isinstance(n, int) or isinstance(n, bool) or n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def odd_primes_upto(bound: int) -> list[int]:
    """All odd primes p <= bound, ascending."""
    if bound < 3:
        return []
    sieve = bytearray((1,)) * (bound + 1)
    sieve[0:2] = b"\x00\x00"
    for p in range(2, int(bound**0.5) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(sieve[p * p :: p]))
    return [n for n in range(3, bound + 1) if sieve[n] and n % 2]


def distinct_odd_prime_factors(n: int) -> list[int]:
    """Distinct odd prime divisors of |n|, ascending; n must be non-zero."""
    if not isinstance(n, int) or n == 0:
        raise ValueError(f"expected a non-zero integer, got {n!r}")
    n = abs(n)
    while n % 2 == 0:
        n //= 2
    out = []
    d = 3
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 2
    if n > 1:
        out.append(n)
    return out
