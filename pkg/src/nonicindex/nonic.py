"""Index classifier for nonic trinomial fields K = Q[x]/(x^9 + ax + b).

For each prime p this decides whether p divides the field index i(K),
gives the exact valuation nu_p(i(K)) where it is determined, and the
splitting type of pZ_K.  Only p = 2 and p = 3 can divide i(K); no p >= 5
ever does.  First-order-resolvable branches run through the polygon
engine (with the critical shift u = -9b/(8a) where a repeated root needs
it); the branches that genuinely require higher-order data are encoded as
congruence tables keyed on (a, b) residues plus nu_2(Delta) and
Delta_2 mod 8.  Every exact valuation is produced by the Engstrom lookup
on the splitting type, so values have a single source of truth.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from math import gcd

from . import gf
from .arith import INFINITY, inv_mod_pk, unit_part, val
from .engstrom import IndexValuation, nu_lookup
from .polygon import (
    NotRegularError,
    Splitting,
    ore_analyze,
    trinomial,
    zeval,
    ztrim,
)


class ClassifierError(Exception):
    pass


class Unclassified(ClassifierError):
    """The decision tree has a gap for this input (transcription bug)."""


class ReduciblePolynomial(ClassifierError):
    pass


class IndeterminateFactorization(ClassifierError):
    """An integer did not factor within the effort bound; refusing to guess."""


# ---------------------------------------------------------------------------
# discriminant and normalization


def disc(a: int, b: int) -> int:
    """Discriminant of x^9 + ax + b."""
    return 2**24 * a**9 + 3**18 * b**8


def delta_unit(a: int, b: int, p: int) -> int:
    """The prime-to-p part of the discriminant, sign preserved."""
    d = disc(a, b)
    if d == 0:
        raise ReduciblePolynomial("discriminant is zero")
    return unit_part(p, d)


def _iroot(x: int, n: int) -> int:
    if x < 0:
        raise ValueError("x must be >= 0")
    if x in (0, 1):
        return x
    k = int(round(x ** (1.0 / n)))
    while (k + 1) ** n <= x:
        k += 1
    while k**n > x:
        k -= 1
    return k


def _sieve_upto(limit: int) -> tuple:
    if limit < 2:
        return ()
    sieve = bytearray([1]) * (limit + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, _iroot(limit, 2) + 1):
        if sieve[i]:
            sieve[i * i :: i] = b"\x00" * len(sieve[i * i :: i])
    return tuple(i for i in range(2, limit + 1) if sieve[i])


_TRIAL_PRIMES: tuple = ()


def _small_primes_upto(limit: int):
    global _TRIAL_PRIMES
    if limit > (len(_TRIAL_PRIMES) and _TRIAL_PRIMES[-1]):
        _TRIAL_PRIMES = _sieve_upto(max(limit, 1024))
    for p in _TRIAL_PRIMES:
        if p > limit:
            return
        yield p


def is_normalized(a: int, b: int) -> bool:
    """True when no prime has nu_p(a) >= 8 and nu_p(b) >= 9 simultaneously."""
    if a == 0 and b == 0:
        return False
    limit = min(
        _iroot(abs(a), 8) if a else 10**9,
        _iroot(abs(b), 9) if b else 10**9,
    )
    for p in _small_primes_upto(limit):
        if (a == 0 or val(p, a) >= 8) and (b == 0 or val(p, b) >= 9):
            return False
    return True


def normalize(a: int, b: int) -> tuple:
    """Strip substitutions x -> px: divide (a, b) by (p^8, p^9) while possible.

    The result defines the same field and satisfies nu_p(a) <= 7 or
    nu_p(b) <= 8 for every prime.
    """
    if a == 0 and b == 0:
        return 0, 0
    while True:
        limit = min(
            _iroot(abs(a), 8) if a else 10**9,
            _iroot(abs(b), 9) if b else 10**9,
        )
        for p in _small_primes_upto(limit):
            if (a == 0 or val(p, a) >= 8) and (b == 0 or val(p, b) >= 9):
                a //= p**8
                b //= p**9
                break
        else:
            return a, b


# ---------------------------------------------------------------------------
# bounded integer factoring (plumbing for the maximality conditions)

_TRIAL_LIMIT = 30_000


def bounded_factor(n: int, rho_rounds: int = 16) -> tuple:
    """Factor |n| with trial division plus a bounded Pollard-rho pass.

    Returns (factors, leftover): factors maps primes to exponents and
    leftover is 1 on success, else the composite part that resisted.
    """
    n = abs(n)
    if n <= 1:
        return {}, 1
    factors: dict = {}
    for p in _small_primes_upto(_TRIAL_LIMIT):
        if p * p > n:
            break
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
    if n == 1:
        return factors, 1
    from sympy import isprime, perfect_power
    from sympy.ntheory.factor_ import pollard_rho

    stack = [n]
    leftover = 1
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if isprime(m):
            factors[m] = factors.get(m, 0) + 1
            continue
        power = perfect_power(m)
        if power:
            base, exp = power
            for _ in range(exp):
                stack.append(base)
            continue
        d = None
        for seed in range(rho_rounds):
            d = pollard_rho(m, seed=seed)
            if d not in (None, m):
                break
            d = None
        if d is None:
            leftover *= m
        else:
            stack.append(d)
            stack.append(m // d)
    return factors, leftover


# ---------------------------------------------------------------------------
# irreducibility certificate


class Certificate(enum.Enum):
    PROVEN = "proven"
    REDUCIBLE = "reducible"
    UNKNOWN = "unknown"


_CERT_PRIMES = tuple(_small_primes_upto(100))


def irreducibility_certificate(a: int, b: int) -> tuple:
    """(Certificate, detail) for x^9 + ax + b, by cheap deterministic means.

    Proven: a totally-ramified polygon at some small prime, an irreducible
    reduction mod p <= 100, or mod-p factor-degree patterns whose subset
    sums only allow the trivial factor degrees.  Reducible: an integer
    root (the root bound for this shape is tiny, so the search is
    complete).  Unknown otherwise.
    """
    if b == 0:
        return Certificate.REDUCIBLE, "x divides x^9 + ax"
    F = trinomial(a, b)
    # complete integer root search: |r| >= 2 forces |r|^8 <= |a| + |b|
    root_bound = max(1, _iroot(abs(a) + abs(b), 8) + 1)
    for r in range(-root_bound, root_bound + 1):
        if zeval(F, r) == 0:
            return Certificate.REDUCIBLE, f"integer root x = {r}"
    # one-sided polygon of totally ramified shape at a small prime
    for p in (q for q in _CERT_PRIMES if b % q == 0):
        vb = val(p, b)
        va = val(p, a) if a else INFINITY
        if 8 * vb < 9 * va and gcd(vb, 9) == 1:
            return Certificate.PROVEN, f"one-sided polygon at p = {p} (slope -{vb}/9)"
    allowed_degrees = None
    for p in _CERT_PRIMES:
        field_p = gf.PrimeField(p)
        fbar = gf.ptrim(tuple(c % p for c in F))
        if gf.pdeg(fbar) != 9:
            continue
        if gf.is_irreducible(field_p, fbar):
            return Certificate.PROVEN, f"irreducible mod {p}"
        if gf.pdeg(gf.pgcd(field_p, fbar, gf.pderiv(field_p, fbar))) > 0:
            continue  # not squarefree mod p, degree pattern unusable
        degrees = []
        for part, d in gf.distinct_degree(field_p, fbar):
            degrees.extend([d] * (gf.pdeg(part) // d))
        sums = {0}
        for d in degrees:
            sums |= {s + d for s in sums}
        allowed_degrees = sums if allowed_degrees is None else (allowed_degrees & sums)
        if allowed_degrees == {0, 9}:
            return Certificate.PROVEN, "mod-p factor degrees only allow trivial splits"
    return Certificate.UNKNOWN, "no cheap certificate found"


# ---------------------------------------------------------------------------
# Theorem-of-maximality check for Z[alpha]

_MOD9_MAXIMAL = {
    (0, 2), (0, 5), (3, 8), (3, 2), (6, 8), (6, 5),
    (0, 4), (0, 7), (3, 1), (3, 7), (6, 1), (6, 4),
}

_MOD4_MAXIMAL = {(1, 0), (3, 2)}


def is_order_maximal(a: int, b: int, rho_rounds: int = 16) -> tuple:
    """Is Z[alpha] integrally closed?  Returns (flag, failing condition).

    Needs the odd primes >= 5 dividing the discriminant; raises
    IndeterminateFactorization when the bounded factoring pass cannot
    certify squarefreeness of the relevant part.
    """
    g = gcd(a, b)
    if g > 1:
        gfac, leftover = bounded_factor(g, rho_rounds)
        if leftover != 1:
            raise IndeterminateFactorization(
                f"gcd(a,b) has an unfactored part {leftover}"
            )
        for p in gfac:
            if val(p, b) != 1:
                return False, f"p={p} divides a and b with nu_p(b) != 1"
    if a % 2 and b % 2 == 0:
        if (a % 4, b % 4) not in _MOD4_MAXIMAL:
            return False, f"(a,b) = ({a % 4},{b % 4}) mod 4"
    if a % 3 == 0 and b % 3:
        if (a % 9, b % 9) not in _MOD9_MAXIMAL:
            return False, f"(a,b) = ({a % 9},{b % 9}) mod 9"
    d = disc(a, b)
    if d == 0:
        raise ReduciblePolynomial("discriminant is zero")
    rough = unit_part(3, unit_part(2, abs(d)))
    ab = abs(a * b)
    if ab:
        while (shared := gcd(rough, ab)) > 1:
            rough //= shared
    if rough > 1:
        dfac, leftover = bounded_factor(rough, rho_rounds)
        if leftover != 1:
            from sympy import isprime

            if not isprime(leftover):
                raise IndeterminateFactorization(
                    f"disc has an unfactored part {leftover}"
                )
            dfac[leftover] = dfac.get(leftover, 0) + 1
        for p, e in dfac.items():
            if e >= 2:
                return False, f"nu_{p}(disc) = {e} > 1 with p coprime to 6ab"
    return True, None


# ---------------------------------------------------------------------------
# per-prime classification


@dataclass(frozen=True)
class PrimeEntry:
    p: int
    nu: IndexValuation
    splitting: Splitting | None
    rule: str
    warnings: tuple = ()


_S = Splitting.of

# splitting shorthands shared by several rules
_TOTALLY_RAMIFIED = _S([(9, 1)])
_RAMIFIED_3_3 = _S([(3, 1), (3, 2)])
_ONE_EIGHT = _S([(1, 1), (8, 1)])
_THREE_LINEAR_7 = _S([(1, 1), (1, 1), (7, 1)])
_QUARTIC_F2 = _S([(1, 1), (4, 2)])
_T3_DIVIDING = _S([(1, 1), (1, 1), (3, 1), (4, 1)])
_T3_QUAD = _S([(1, 1), (2, 2), (4, 1)])
_SHAPE_EXACT3 = _S([(1, 1), (2, 1), (2, 1), (4, 1)])
_SHAPE_FIVE = _S([(1, 1), (1, 1), (1, 1), (2, 1), (4, 1)])
_SHAPE_QUAD = _S([(1, 1), (1, 2), (2, 1), (4, 1)])
_TWO_QUARTIC = _S([(1, 1), (4, 1), (4, 1)])
_TWO_QUAD_F2 = _S([(1, 1), (2, 2), (2, 2)])
_QUAD_MIXED = _S([(1, 1), (2, 1), (2, 1), (2, 2)])
_FOUR_DOUBLES = _S([(1, 1), (2, 1), (2, 1), (2, 1), (2, 1)])

# p = 2, nu_2(a) = 2 (a = 4 mod 8, b = 0 mod 8): rows (modulus, classes,
# splitting).  These shapes come from order-2 polygon data and are pure
# lookup; the classes partition the domain.
_TABLE_A2 = (
    (16, ((4, 8), (12, 8)), _ONE_EIGHT),
    (32, ((12, 16), (28, 16)), _ONE_EIGHT),
    (32, ((12, 0),), _QUARTIC_F2),
    (32, ((28, 0),), _TWO_QUARTIC),
    (32, ((4, 16), (20, 16)), _ONE_EIGHT),
    (64, ((4, 32), (36, 32)), _ONE_EIGHT),
    (64, ((36, 0),), _QUARTIC_F2),
    (64, ((4, 0),), _TWO_QUARTIC),
    (64, ((20, 0), (52, 0)), _ONE_EIGHT),
    (64, ((20, 32),), _QUARTIC_F2),
    (64, ((52, 32),), _TWO_QUARTIC),
)

# p = 2, nu_2(a) = 4 (a = 16 mod 32, b = 0 mod 32): order-2/3 polygon data.
_TABLE_A4 = (
    (64, ((16, 32), (48, 32)), _ONE_EIGHT),
    (64, ((16, 0),), _ONE_EIGHT),
    (128, ((48, 64), (112, 64)), _ONE_EIGHT),
    (128, ((48, 0),), _QUARTIC_F2),
    (256, ((112, 128), (240, 128)), _TWO_QUARTIC),
    (512, ((112, 0), (368, 0)), _T3_QUAD),
    (512, ((368, 256),), _TWO_QUAD_F2),
    (512, ((112, 256),), _QUAD_MIXED),
    (512, ((240, 256), (496, 256)), _SHAPE_EXACT3),
    (512, ((240, 0),), _QUAD_MIXED),
    (512, ((496, 0),), _FOUR_DOUBLES),
)

# p = 2, nu_2(a) = 6 (a = 64 mod 128, b = 0 mod 128).  The (576,512) class
# is printed as (566,512) in the source table; 566 is not 64 mod 128, so
# the corrected class is encoded and flagged when matched.
_TABLE_A6 = (
    (256, ((64, 128), (192, 128)), _ONE_EIGHT),
    (512, ((64, 256), (320, 256)), _ONE_EIGHT),
    (1024, ((64, 512), (576, 512)), _ONE_EIGHT),
    (1024, ((576, 0),), _QUARTIC_F2),
    (1024, ((64, 0),), _TWO_QUARTIC),
    (1024, ((320, 512), (832, 512)), _ONE_EIGHT),
    (1024, ((320, 0), (832, 0)), _ONE_EIGHT),
    (512, ((192, 256), (448, 256)), _ONE_EIGHT),
    (512, ((192, 0),), _QUARTIC_F2),
    (512, ((448, 0),), _TWO_QUARTIC),
)


def _table_entry(a, b, table, tag):
    for modulus, classes, splitting in table:
        cell = (a % modulus, b % modulus)
        if cell in classes:
            warnings = ()
            if tag == "a6" and cell == (576 % 1024, 512 % 1024) and modulus == 1024:
                warnings = (
                    "class (576,512) mod 1024: source row printed as (566,512), "
                    "encoded with the congruence-consistent 576",
                )
            rule = f"2:{tag}:{cell[0]},{cell[1]}m{modulus}"
            return PrimeEntry(2, nu_lookup(splitting, 2), splitting, rule, warnings)
    raise Unclassified(f"no {tag} row matches ({a}, {b})")


def _vinf(p, n):
    return val(p, n) if n else INFINITY


def critical_shift(a: int, b: int, p: int, precision: int) -> int:
    """Integer u = -9b/(8a) mod p^precision (the double root direction)."""
    g = val(p, 8 * a)
    num = -9 * b
    if val(p, num) < g:
        raise ValueError("shift is not p-integral")
    pk = p**precision
    return (num // p**g) * inv_mod_pk(p, (8 * a) // p**g, precision) % pk


def engine_split(a: int, b: int, p: int, refine: bool = True):
    """Ore engine result for x^9 + ax + b at p, with shift refinement."""
    return ore_analyze(trinomial(a, b), p, refine=refine)


def nu2(a: int, b: int) -> PrimeEntry:
    """nu_2(i(K)), splitting of 2Z_K and the matched rule.

    Input must be normalized and irreducible.
    """
    if b == 0:
        raise ReduciblePolynomial("b = 0: x divides the trinomial")
    F = trinomial(a, b)
    if b % 2:
        split = ore_analyze(F, 2).splitting
        return PrimeEntry(2, nu_lookup(split, 2), split, "2:unit-b")
    va, vb = _vinf(2, a), _vinf(2, b)
    if va >= 8 and vb >= 9:
        raise ValueError("input not normalized at 2")
    if va >= 1:
        if 8 * vb < 9 * va:
            if gcd(int(vb), 9) == 1:
                return PrimeEntry(2, IndexValuation.exact(0), _TOTALLY_RAMIFIED,
                                  f"2:x:one-side:d1:vb={vb}")
            split = _RAMIFIED_3_3
            return PrimeEntry(2, nu_lookup(split, 2), split, f"2:x:one-side:d3:vb={vb}")
        d = gcd(int(va), 8)
        if d == 1:
            return PrimeEntry(2, nu_lookup(_ONE_EIGHT, 2), _ONE_EIGHT,
                              f"2:x:two-sides:d1:va={va}")
        if va == 2:
            return _table_entry(a, b, _TABLE_A2, "a2")
        if va == 4:
            return _table_entry(a, b, _TABLE_A4, "a4")
        if va == 6:
            return _table_entry(a, b, _TABLE_A6, "a6")
        raise Unclassified(f"unexpected nu_2(a) = {va}")  # pragma: no cover
    # a odd, b even: the polygon sits over the lift of x - 1
    w0, w1 = _vinf(2, a + b + 1), _vinf(2, a + 9)
    if w0 == 1:
        return PrimeEntry(2, IndexValuation.exact(0), _ONE_EIGHT, "2:lin:(1,0)|(3,2)m4")
    if w1 == 1:
        split = _THREE_LINEAR_7
        return PrimeEntry(2, nu_lookup(split, 2), split, "2:lin:(1,2)m4")
    if w0 == 2:
        return PrimeEntry(2, nu_lookup(_QUARTIC_F2, 2), _QUARTIC_F2,
                          "2:lin:(3,0)|(7,4)m8")
    if w1 == 2:
        split = _T3_DIVIDING
        return PrimeEntry(2, nu_lookup(split, 2), split, "2:lin:(3,4)m8")
    if w0 == 3:
        return PrimeEntry(2, nu_lookup(_T3_QUAD, 2), _T3_QUAD,
                          "2:lin:(7,0)|(15,8)m16")
    if w1 == 3:
        split = _SHAPE_QUAD if w0 == 4 else _SHAPE_FIVE
        return PrimeEntry(
            2, nu_lookup(split, 2), split,
            f"2:lin:(15,0)m16:w0={'4' if w0 == 4 else '5+'}",
            warnings=(
                "class (15,0) mod 16: the source table's splitting row is "
                "unreachable for this class; splitting taken from the polygon",
            ),
        )
    # w0 >= 4 and w1 >= 4, i.e. (a,b) = (7,8) mod 16: two-step shift territory
    v = val(2, disc(a, b))
    if v % 2:
        split = _SHAPE_EXACT3
        return PrimeEntry(2, nu_lookup(split, 2), split, "2:lin:(7,8)m16:vodd")
    u8 = delta_unit(a, b, 2) % 8
    if v == 28:
        shape = {1: _SHAPE_FIVE, 5: _SHAPE_QUAD, 3: _SHAPE_EXACT3, 7: _SHAPE_EXACT3}[u8]
    else:
        shape = {7: _SHAPE_FIVE, 3: _SHAPE_QUAD, 1: _SHAPE_EXACT3, 5: _SHAPE_EXACT3}[u8]
    rule = f"2:lin:(7,8)m16:v={'28' if v == 28 else '30+'}:D2={u8}m8"
    return PrimeEntry(2, nu_lookup(shape, 2), shape, rule)


_NU3_DEEP_SHAPES = {
    "odd": _S([(1, 1), (2, 1), (6, 1)]),
    "even:unit": _S([(1, 1), (1, 2), (6, 1)]),
    "even:split": _S([(1, 1), (1, 1), (1, 1), (6, 1)]),
}


def nu3(a: int, b: int) -> PrimeEntry:
    """nu_3(i(K)), splitting of 3Z_K and the matched rule.

    Input must be normalized and irreducible.
    """
    if b == 0:
        raise ReduciblePolynomial("b = 0: x divides the trinomial")
    F = trinomial(a, b)
    if a % 3:
        split = ore_analyze(F, 3).splitting
        return PrimeEntry(3, nu_lookup(split, 3), split, "3:unit-a")
    va, vb = _vinf(3, a), _vinf(3, b)
    if b % 3 == 0:
        if va >= 8 and vb >= 9:
            raise ValueError("input not normalized at 3")
        if 8 * vb < 9 * va:
            if gcd(int(vb), 9) == 1:
                return PrimeEntry(3, IndexValuation.exact(0), _TOTALLY_RAMIFIED,
                                  f"3:x:one-side:d1:vb={vb}")
            # slope -vb/9 with e = 3: every ramification index above 3 is a
            # multiple of 3, so at most three primes of residue degree 1 and
            # one of degree 2 can occur; 3 never divides i(K) here.  The
            # residual y^3 +- 1 is a cube, so first-order data cannot name
            # the splitting.
            return PrimeEntry(3, IndexValuation.exact(0), None,
                              f"3:x:one-side:d3:vb={vb}",
                              warnings=("splitting needs data beyond this engine",))
        d = gcd(int(va), 8)
        if d == 1:
            return PrimeEntry(3, nu_lookup(_ONE_EIGHT, 3), _ONE_EIGHT,
                              f"3:x:two-sides:d1:va={va}")
        split = ore_analyze(F, 3).splitting
        return PrimeEntry(3, nu_lookup(split, 3), split, f"3:x:two-sides:d{d}:va={va}")
    # 3 | a, 3 does not divide b: the reduction is (x - s)^9 with s = -b mod 3
    s = 1 if b % 3 == 2 else -1
    w0, w1 = _vinf(3, zeval(F, s)), _vinf(3, a + 9)
    tag = f"3:lin{'+' if s == 1 else '-'}"
    if w0 == 1:
        return PrimeEntry(3, IndexValuation.exact(0), _TOTALLY_RAMIFIED, f"{tag}:w0=1")
    if w1 == 1:
        return PrimeEntry(3, nu_lookup(_ONE_EIGHT, 3), _ONE_EIGHT, f"{tag}:w1=1")
    if w0 == 2:
        split = _S([(3, 1), (6, 1)])
        return PrimeEntry(3, nu_lookup(split, 3), split, f"{tag}:w0=2")
    if w1 == 2:
        split = _S([(1, 1), (2, 1), (6, 1)])
        return PrimeEntry(3, nu_lookup(split, 3), split, f"{tag}:w1=2")
    if w0 == 3:
        split = _S([(3, 1), (6, 1)])
        return PrimeEntry(3, nu_lookup(split, 3), split, f"{tag}:w0=3")
    # w0 >= 4, w1 >= 3: residual factorization decides, or the critical
    # shift when the naive lift is irregular
    phibar = gf.ptrim(((-s) % 3, 1))
    try:
        res = ore_analyze(F, 3, refine=False, overrides={phibar: (-s, 1)})
        split = res.splitting
        return PrimeEntry(3, nu_lookup(split, 3), split,
                          f"{tag}:w0={_fmt_w(w0)}:w1={_fmt_w(w1)}:res")
    except NotRegularError:
        pass
    v = val(3, disc(a, b))
    if v % 2:
        shape, sub = _NU3_DEEP_SHAPES["odd"], "vodd"
    elif delta_unit(a, b, 3) % 3 == 1:
        shape, sub = _NU3_DEEP_SHAPES["even:unit"], "veven:D3=1"
    else:
        shape, sub = _NU3_DEEP_SHAPES["even:split"], "veven:D3=-1"
    precision = int(v) + 10
    u = critical_shift(a, b, 3, precision)
    deep = ore_analyze(F, 3, refine=False, overrides={phibar: ztrim((-u, 1))})
    if deep.splitting != shape:
        raise Unclassified(
            f"shifted polygon gave {deep.splitting}, expected {shape}"
        )  # pragma: no cover
    return PrimeEntry(3, nu_lookup(shape, 3), shape,
                      f"{tag}:w0={_fmt_w(w0)}:w1={_fmt_w(w1)}:deep:{sub}")


def _fmt_w(w) -> str:
    return "inf" if w == INFINITY else str(int(w))


def nup_large(a: int, b: int, p: int) -> IndexValuation:
    """nu_p(i(K)) for p >= 5: always exactly 0."""
    if p < 5:
        raise ValueError("use nu2/nu3 for p in {2, 3}")
    return IndexValuation.exact(0)


# ---------------------------------------------------------------------------
# the assembled report


@dataclass
class ClassifierReport:
    a_input: int
    b_input: int
    a: int
    b: int
    certificate: str
    certificate_detail: str
    entries: dict  # p -> PrimeEntry
    monogenic_order: bool | None
    monogenic_order_detail: str | None
    field_monogenic: bool | None
    i_K: int | None
    i_K_known_divisor: int
    warnings: list = field(default_factory=list)

    def describe_index(self) -> str:
        if self.i_K is not None:
            return str(self.i_K)
        parts = []
        for p in (2, 3):
            nu = self.entries[p].nu
            if nu.is_exact and nu.value == 0:
                continue
            if nu.is_exact:
                parts.append(f"{p}^{nu.value}")
            else:
                parts.append(f"{p}^(>={nu.value})")
        return " * ".join(parts) if parts else "1"

    def to_json(self) -> dict:
        def entry_json(e: PrimeEntry) -> dict:
            return {
                "p": e.p,
                "nu": {"kind": e.nu.kind, "value": e.nu.value},
                "splitting": [list(ef) for ef in e.splitting.primes] if e.splitting else None,
                "rule": e.rule,
            }

        return {
            "input": {"a": self.a_input, "b": self.b_input},
            "normalized": {"a": self.a, "b": self.b},
            "certificate": self.certificate,
            "certificate_detail": self.certificate_detail,
            "primes": {str(p): entry_json(e) for p, e in sorted(self.entries.items())},
            "monogenic_order": self.monogenic_order,
            "monogenic_order_detail": self.monogenic_order_detail,
            "field_monogenic": self.field_monogenic,
            "i_K": self.i_K,
            "i_K_known_divisor": self.i_K_known_divisor,
            "i_K_description": self.describe_index(),
            "warnings": list(self.warnings),
        }


def classify(a: int, b: int, rho_rounds: int = 16, large_primes: bool = True) -> ClassifierReport:
    """Full index report for x^9 + ax + b.

    Normalizes the input, certifies irreducibility (an Unknown certificate
    is reported, not fatal; a Reducible one raises), computes nu_2 and
    nu_3, records nu_p = 0 for the primes p >= 5 dividing the
    discriminant, and assembles i(K) = 2^nu2 * 3^nu3 when both are exact.
    """
    a_in, b_in = a, b
    warnings = []
    a, b = normalize(a, b)
    if (a, b) != (a_in, b_in):
        warnings.append(f"input normalized to (a, b) = ({a}, {b})")
    cert, cert_detail = irreducibility_certificate(a, b)
    if cert is Certificate.REDUCIBLE:
        raise ReduciblePolynomial(cert_detail)
    if cert is Certificate.UNKNOWN:
        warnings.append("irreducibility not certified; report assumes it")
    entries = {2: nu2(a, b), 3: nu3(a, b)}
    for e in entries.values():
        warnings.extend(e.warnings)
    if large_primes:
        rough = unit_part(3, unit_part(2, abs(disc(a, b))))
        dfac, leftover = bounded_factor(rough, rho_rounds)
        for p in sorted(dfac):
            try:
                split = engine_split(a, b, p).splitting if p <= 7 else None
            except NotRegularError:  # pragma: no cover - not expected for p >= 5
                split = None
            entries[p] = PrimeEntry(p, nup_large(a, b, p), split, f"{p}:ge5")
        if leftover != 1:
            warnings.append(
                f"disc has an unfactored part ({leftover}); primes >= 5 dividing "
                "it are omitted from the report (their nu is 0 regardless)"
            )
    try:
        maximal, failing = is_order_maximal(a, b, rho_rounds)
    except IndeterminateFactorization as exc:
        maximal, failing = None, str(exc)
        warnings.append(f"maximality undecided: {exc}")
    nu2_val, nu3_val = entries[2].nu, entries[3].nu
    i_K = None
    if nu2_val.is_exact and nu3_val.is_exact:
        i_K = 2**nu2_val.value * 3**nu3_val.value
    known = 1
    for p in (2, 3):
        nu = entries[p].nu
        if nu.value:
            known *= p**nu.value
    if i_K is not None and i_K > 1:
        field_monogenic = False
    elif maximal:
        field_monogenic = True
    elif i_K == 1:
        field_monogenic = None  # index 1 alone does not decide monogenicity
    else:
        field_monogenic = False if known > 1 else None
    return ClassifierReport(
        a_input=a_in,
        b_input=b_in,
        a=a,
        b=b,
        certificate=cert.value,
        certificate_detail=cert_detail,
        entries=entries,
        monogenic_order=maximal,
        monogenic_order_detail=failing,
        field_monogenic=field_monogenic,
        i_K=i_K,
        i_K_known_divisor=known,
        warnings=warnings,
    )
