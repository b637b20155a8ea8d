"""Exact p-adic integer utilities: valuations, unit parts, modular inverses.

All arithmetic is exact big-integer arithmetic; valuations of 0 are the
float infinity sentinel so that zero polygon coefficients sort above every
finite lattice point.
"""

from __future__ import annotations

import math

INFINITY = math.inf

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


def is_prime(n: int) -> bool:
    """Deterministic primality test for the small primes used here."""
    if n < 2:
        return False
    for q in _SMALL_PRIMES:
        if n == q:
            return True
        if n % q == 0:
            return False
    if n < 47 * 47:
        return True
    # Rare path (p > 2209): fall back to sympy's deterministic BPSW.
    from sympy import isprime

    return bool(isprime(n))


def _require_prime(p: int) -> None:
    if not is_prime(p):
        raise ValueError(f"p = {p} is not prime")


def val(p: int, m: int) -> int | float:
    """nu_p(m): the largest k with p^k | m, or INFINITY for m = 0."""
    _require_prime(p)
    if m == 0:
        return INFINITY
    k = 0
    while m % p == 0:
        m //= p
        k += 1
    return k


def unit_part(p: int, m: int) -> int:
    """m / p^val(p, m); coprime to p, sign of m preserved."""
    _require_prime(p)
    if m == 0:
        raise ValueError("unit_part of 0 is undefined")
    while m % p == 0:
        m //= p
    return m


def inv_mod_pk(p: int, x: int, k: int) -> int:
    """Inverse of x modulo p^k, for x coprime to p.  Result in [0, p^k)."""
    _require_prime(p)
    if k < 1:
        raise ValueError("k must be positive")
    if x % p == 0:
        raise ValueError(f"{x} is divisible by {p}, not invertible mod {p}^{k}")
    return pow(x, -1, p**k)
