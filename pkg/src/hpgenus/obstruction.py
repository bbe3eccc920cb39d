"""The degree-obstruction engine.

At each odd prime p coprime to the degree k, a map of degree k can only hit
genus points whose sign invariant at p equals the Legendre symbol (k/p).
This module computes the symbol, decides that compatibility two independent
ways (a closed-form congruence and a brute-force series expansion of the
naturality square), aggregates verdicts over finite prime sets, reports
which invariants a given degree forces, and constructs the classic
single-exception example points with their witness degrees.

"Admissible" always means "no obstruction found at the tested primes" and
never "a map exists": the test is a necessary condition only.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Optional

from .genus import (
    RectorInvariant,
    Sign,
    check_sign,
    make_genus,
    psi_then_pullback,
    pullback_then_psi,
    random_degree_map,
    random_psi_model,
    sign_to_str,
)
from .primes import distinct_odd_prime_factors, is_prime, odd_primes_upto
from .series import FiltrationIdeal

#: Working margin above the minimal order p+2, so the randomized unknown
#: terms have non-zero slots for the filtration cut to kill.
_BRUTEFORCE_MARGIN = 2


def _check_odd_prime(p: int) -> None:
    if not is_prime(p) or p == 2:
        raise ValueError(f"expected an odd prime, got {p!r}")


def _check_degree(k: int, p: int) -> None:
    if not isinstance(k, int) or isinstance(k, bool) or k == 0:
        raise ValueError(f"degree must be a non-zero integer, got {k!r}")
    if k % p == 0:
        raise ValueError(
            f"{p} divides {k}: the symbol would be 0, outside the scope of this test"
        )


def legendre(k: int, p: int) -> Sign:
    """The Legendre symbol (k/p) by Euler's criterion: +1 iff k is a square mod p.

    p must be an odd prime not dividing k; the degenerate symbol-0 case is
    rejected rather than returned.
    """
    _check_odd_prime(p)
    _check_degree(k, p)
    return 1 if pow(k, (p - 1) // 2, p) == 1 else -1


def compatible(p: int, epsilon: Sign, k: int) -> bool:
    """Closed-form test: can a degree-k map hit a point with sign epsilon at p?

    True iff epsilon * k^((p-1)/2) is congruent to 1 mod p, which is the
    same as epsilon == legendre(k, p).
    """
    check_sign(epsilon)
    _check_odd_prime(p)
    _check_degree(k, p)
    return (epsilon * pow(k, (p - 1) // 2, p)) % p == 1


def compatible_bruteforce(
    p: int, epsilon: Sign, k: int, trials: int = 200, seed: int = 0
) -> bool:
    """The same compatibility test, answered by brute-force series expansion.

    For ``trials`` seeded random models (higher map coefficients and
    unknown-term images), expand both routes of the psi^p naturality square
    exactly, cut by the filtration ideal at 2p+3 and the modulus p^2, and
    compare the coefficients of t^(p+1).  Returns True iff they agree in
    every trial.  Agrees with ``compatible`` on all inputs and any seed;
    the default seed makes verdicts reproducible bit for bit.
    """
    check_sign(epsilon)
    _check_odd_prime(p)
    _check_degree(k, p)
    if not isinstance(trials, int) or trials < 1:
        raise ValueError(f"trials must be a positive integer, got {trials!r}")
    order = p + 2 + _BRUTEFORCE_MARGIN
    ideal = FiltrationIdeal(2 * p + 3)
    modulus = p * p
    rng = random.Random(f"{seed}:{p}:{k}")
    for _ in range(trials):
        f = random_degree_map(rng, k, order)
        model = random_psi_model(rng, p, epsilon, order)
        lhs = psi_then_pullback(model, f, order).reduce(ideal, modulus)
        rhs = pullback_then_psi(p, f, order).reduce(ideal, modulus)
        if lhs.coefficient(p + 1) != rhs.coefficient(p + 1):
            return False
    return True


@dataclass(frozen=True)
class Verdict:
    """Outcome of testing one degree against one genus point over a prime set.

    ``Obstructed`` carries the smallest violating prime together with the
    sign the degree requires there and the sign the point actually has.
    Primes dividing the degree are listed in ``skipped``: the test
    hypothesis needs the degree coprime to the prime, so no conclusion is
    drawn there.
    """

    outcome: str
    prime: Optional[int] = None
    required: Optional[Sign] = None
    actual: Optional[Sign] = None
    skipped: tuple[int, ...] = ()

    @property
    def is_admissible(self) -> bool:
        return self.outcome == "Admissible"

    def to_json_dict(self) -> dict:
        return {
            "outcome": self.outcome,
            "prime": self.prime,
            "required": None if self.required is None else sign_to_str(self.required),
            "actual": None if self.actual is None else sign_to_str(self.actual),
            "skipped": list(self.skipped),
        }


def admissible(genus: RectorInvariant, k: int, primes: Iterable[int]) -> Verdict:
    """Test the degree k against a genus point at every prime in the set.

    Returns Obstructed at the smallest prime where the point's sign differs
    from legendre(k, p), else Admissible.  Admissible means no obstruction
    was found at the tested primes, never that a map exists.
    """
    if not isinstance(k, int) or isinstance(k, bool) or k == 0:
        raise ValueError(f"degree must be a non-zero integer, got {k!r}")
    tested = sorted(set(primes))
    for p in tested:
        _check_odd_prime(p)
    skipped = tuple(p for p in tested if k % p == 0)
    for p in tested:
        if k % p == 0:
            continue
        actual = genus.lookup(p)
        if not compatible(p, actual, k):
            return Verdict(
                "Obstructed",
                prime=p,
                required=legendre(k, p),
                actual=actual,
                skipped=skipped,
            )
    return Verdict("Admissible", skipped=skipped)


@dataclass(frozen=True)
class ForcedGenusReport:
    """Per-degree census of the invariants a degree-k map forces.

    At every odd prime p <= bound coprime to k the invariant is forced to
    legendre(k, p).  The prime 2 is always free, as are the odd primes
    dividing k; over ALL primes that leaves 1 + (number of distinct odd
    prime factors of k) free slots, so at most 2^free_count_total genus
    points survive the test for this degree.  Finitely many per degree,
    countably many over all degrees.
    """

    degree: int
    bound: int
    forced: tuple[tuple[int, Sign], ...]
    free: tuple[int, ...]
    free_count_total: int

    @property
    def max_surviving(self) -> int:
        """Upper bound (necessary-condition only) on surviving genus points."""
        return 2**self.free_count_total

    def forced_map(self) -> dict[int, Sign]:
        return dict(self.forced)

    def to_json_dict(self) -> dict:
        return {
            "degree": self.degree,
            "bound": self.bound,
            "forced": {str(p): sign_to_str(s) for p, s in self.forced},
            "free": list(self.free),
            "free_count_total": self.free_count_total,
            "max_surviving_genus_points": self.max_surviving,
        }


def forced_genus(k: int, bound: int) -> ForcedGenusReport:
    """Which invariants a degree-k map forces at the odd primes up to bound."""
    if not isinstance(k, int) or isinstance(k, bool) or k == 0:
        raise ValueError(f"degree must be a non-zero integer, got {k!r}")
    if not isinstance(bound, int) or bound < 2:
        raise ValueError(f"bound must be an integer >= 2, got {bound!r}")
    forced = []
    free_odd = []
    for p in odd_primes_upto(bound):
        if k % p == 0:
            free_odd.append(p)
        else:
            forced.append((p, legendre(k, p)))
    free = (2,) + tuple(free_odd)
    free_count_total = 1 + len(distinct_odd_prime_factors(k))
    return ForcedGenusReport(k, bound, tuple(forced), free, free_count_total)


def example_xp(p: int) -> tuple[RectorInvariant, int]:
    """The genus point whose sign is -1 at exactly the odd prime p, plus a witness.

    The witness is the smallest k with 1 < k < p that is a quadratic
    non-residue mod p, so ``compatible(p, -1, k)`` holds by construction and
    the single-prime test cannot rule out a map of that degree.
    """
    _check_odd_prime(p)
    point = make_genus(1, {p: -1})
    for k in range(2, p):
        if legendre(k, p) == -1:
            return point, k
    raise AssertionError(f"no non-residue in (1, {p}): {p} cannot be an odd prime")
