"""First-order Newton polygon machinery for prime ideal splitting.

Given a monic F in Z[x] and a prime p, each monic lift phi of an
irreducible factor of F mod p carries: the phi-adic expansion of F, the
principal polygon (negative-slope lower hull of the coefficient
valuations), residual polynomials over the residue field F_p[x]/(phi mod p),
and a lattice-point index count.  When every residual polynomial is
squarefree the polygon data determines the splitting of p exactly; when a
repeated linear residual root sits on a denominator-1 side, the lift can be
nudged (phi -> phi - p^h * root) and reanalyzed, which resolves every
first-order case the classifier needs.  Anything else raises NotRegular.

Integer polynomials are tuples of ints, lowest degree first.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from . import gf
from .arith import INFINITY, val


# ---------------------------------------------------------------------------
# integer polynomials


def ztrim(c) -> tuple:
    c = tuple(c)
    n = len(c)
    while n and c[n - 1] == 0:
        n -= 1
    return c[:n]


def zdeg(c) -> int:
    return len(c) - 1


def zsub(f, g) -> tuple:
    out = list(f) + [0] * max(0, len(g) - len(f))
    for i, e in enumerate(g):
        out[i] -= e
    return ztrim(out)


def zmul(f, g) -> tuple:
    if not f or not g:
        return ()
    out = [0] * (len(f) + len(g) - 1)
    for i, x in enumerate(f):
        if x:
            for j, y in enumerate(g):
                out[i + j] += x * y
    return ztrim(out)


def zdivmod_monic(f, g) -> tuple:
    """Exact quotient/remainder by a monic g, no fractions introduced."""
    if not g or g[-1] != 1:
        raise ValueError("divisor must be monic")
    rem = list(f)
    dq = len(f) - len(g)
    if dq < 0:
        return (), ztrim(rem)
    quo = [0] * (dq + 1)
    for i in range(dq, -1, -1):
        c = rem[i + len(g) - 1]
        quo[i] = c
        if c:
            for j, y in enumerate(g):
                rem[i + j] -= c * y
    return ztrim(quo), ztrim(rem[: len(g) - 1])


def zeval(f, x: int) -> int:
    acc = 0
    for c in reversed(f):
        acc = acc * x + c
    return acc


def trinomial(a: int, b: int) -> tuple:
    """x^9 + a*x + b as a coefficient tuple."""
    return (b, a, 0, 0, 0, 0, 0, 0, 0, 1)


def phi_expand(f, phi) -> list:
    """Coefficients a_0..a_l of the phi-adic expansion of f.

    Each a_i is an integer polynomial of degree < deg(phi), and
    sum a_i * phi^i reconstructs f exactly.
    """
    if not phi or phi[-1] != 1 or zdeg(phi) < 1:
        raise ValueError("phi must be monic of degree >= 1")
    out = []
    rem = ztrim(f)
    while rem:
        rem, low = zdivmod_monic(rem, phi)
        out.append(low)
    return out if out else [()]


def coeff_val(p: int, c) -> int | float:
    """min over coefficients of nu_p; INFINITY for the zero polynomial."""
    if not c:
        return INFINITY
    return min(val(p, x) for x in c)


# ---------------------------------------------------------------------------
# principal polygon


@dataclass(frozen=True)
class Side:
    """One segment of slope -h/e (gcd(h,e)=1), length l, degree d = l/e."""

    x0: int
    y0: int
    x1: int
    y1: int
    h: int
    e: int
    length: int
    degree: int

    def height_num(self, i: int) -> int:
        """e * (height of the side above x = i)."""
        return self.y0 * self.e - (i - self.x0) * self.h

    def __str__(self):
        return (
            f"({self.x0},{self.y0})->({self.x1},{self.y1}) "
            f"slope -{self.h}/{self.e} l={self.length} d={self.degree}"
        )


@dataclass(frozen=True)
class NewtonPolygon:
    points: tuple  # finite-valuation lattice points (i, v_i)
    vertices: tuple
    sides: tuple

    @property
    def is_empty(self) -> bool:
        return not self.sides


def _lower_hull(points):
    hull = []
    for pt in points:
        while len(hull) >= 2:
            (x0, y0), (x1, y1) = hull[-2], hull[-1]
            if (x1 - x0) * (pt[1] - y0) - (y1 - y0) * (pt[0] - x0) <= 0:
                hull.pop()
            else:
                break
        hull.append(pt)
    return hull


def principal_polygon(points) -> NewtonPolygon:
    """Negative-slope part of the lower convex hull of the given points.

    Collinear points merge into one side; the vertex list has no interior
    points.  Points at infinite valuation must be filtered out by the
    caller (zero coefficients never become hull candidates).
    """
    pts = sorted(points)
    hull = _lower_hull(pts)
    vertices = []
    sides = []
    for (x0, y0), (x1, y1) in zip(hull, hull[1:]):
        if y1 >= y0:
            break
        dy, dx = y0 - y1, x1 - x0
        g = gcd(dy, dx)
        sides.append(
            Side(x0, y0, x1, y1, h=dy // g, e=dx // g, length=dx, degree=g)
        )
        if not vertices:
            vertices.append((x0, y0))
        vertices.append((x1, y1))
    return NewtonPolygon(points=tuple(pts), vertices=tuple(vertices), sides=tuple(sides))


def ore_index(polygon: "NewtonPolygon", phi_degree: int) -> int:
    """deg(phi) times the on-or-below lattice count: one lift's share of
    the index valuation (exact when the polynomial is p-regular)."""
    return phi_degree * lattice_index(polygon)


def lattice_index(polygon: NewtonPolygon) -> int:
    """Lattice points (i, j) with i >= 1, j >= 1 on or below the polygon."""
    total = 0
    for side in polygon.sides:
        start = max(side.x0, 1)
        for i in range(start, side.x1 + 1):
            if i == side.x0:
                continue  # column counted by the previous side
            total += max(0, side.height_num(i) // side.e)
    # leftmost column of the first side, if it is at x >= 1
    if polygon.sides and polygon.sides[0].x0 >= 1:
        total += max(0, polygon.sides[0].y0)
    return total


# ---------------------------------------------------------------------------
# residual polynomials and per-phi analysis


def residue_field(p: int, phibar):
    """F_p[x]/(phibar): F_p itself for linear phibar."""
    if gf.pdeg(phibar) == 1:
        return gf.PrimeField(p)
    return gf.ExtField(p, phibar)


def _reduce_coeff_poly(field, p, c, v: int):
    """Image of c(x) / p^v in the residue field (deg c < deg phi)."""
    ints = [x // p**v for x in c]
    if isinstance(field, gf.PrimeField):
        return ints[0] % p if ints else 0
    return field.from_coeffvec(ints)


def residual_poly(expansion, p: int, phi, side: Side):
    """Residual polynomial of the side: t_d y^d + ... + t_0 over F_phi.

    t_j is the residue of a_{x0+je} / p^(y0-jh) when the lattice point
    (x0+je, v) lies on the side, and 0 when it lies strictly above.
    """
    phibar = gf.ptrim(tuple(c % p for c in phi))
    field = residue_field(p, phibar)
    coeffs = []
    for j in range(side.degree + 1):
        i = side.x0 + j * side.e
        target = side.y0 - j * side.h
        c = expansion[i] if i < len(expansion) else ()
        v = coeff_val(p, c)
        if v == target:
            coeffs.append(_reduce_coeff_poly(field, p, c, target))
        elif v > target:
            coeffs.append(field.zero)
        else:  # pragma: no cover - would mean the side is not on the hull
            raise AssertionError("expansion point below its own side")
    if not gf.nonzero(coeffs[0]) or not gf.nonzero(coeffs[-1]):
        raise AssertionError("residual endpoints must be nonzero")
    return field, tuple(coeffs)


@dataclass(frozen=True)
class SideData:
    side: Side
    field: object
    residual: tuple
    factorization: gf.Factorization

    @property
    def squarefree(self) -> bool:
        return all(m == 1 for _, m in self.factorization.factors)


@dataclass(frozen=True)
class PhiAnalysis:
    phi: tuple
    p: int
    expansion_vals: tuple
    polygon: NewtonPolygon
    sides: tuple  # SideData per polygon side
    index: int  # deg(phi) * lattice count

    @property
    def regular(self) -> bool:
        return all(sd.squarefree for sd in self.sides)


def analyze_phi(F, p: int, phi) -> PhiAnalysis:
    """Expansion, principal polygon, residuals and index for one lift phi."""
    exp = phi_expand(F, phi)
    vals = tuple(coeff_val(p, c) for c in exp)
    if vals[0] == INFINITY:
        raise ValueError("phi divides F exactly; F is reducible")
    points = [(i, v) for i, v in enumerate(vals) if v != INFINITY]
    polygon = principal_polygon(points)
    sides = []
    for side in polygon.sides:
        field, res = residual_poly(exp, p, phi, side)
        sides.append(
            SideData(side=side, field=field, residual=res,
                     factorization=gf.factor(field, res))
        )
    return PhiAnalysis(
        phi=ztrim(phi),
        p=p,
        expansion_vals=vals,
        polygon=polygon,
        sides=tuple(sides),
        index=zdeg(phi) * lattice_index(polygon),
    )


class NotRegularError(Exception):
    """First-order data is not enough: some residual stays non-squarefree."""

    def __init__(self, p, analyses):
        self.p = p
        self.analyses = analyses
        bad = [
            f"phi={a.phi}"
            for a in analyses
            if not a.regular
        ]
        super().__init__(f"polynomial is not {p}-regular ({'; '.join(bad)})")


def _refinement_step(analysis: PhiAnalysis):
    """(h, root) for a repeated linear residual root on an e=1 side, else None."""
    for sd in analysis.sides:
        if sd.side.e != 1 or sd.squarefree:
            continue
        for psi, mult in sd.factorization.factors:
            if mult >= 2 and gf.pdeg(psi) == 1:
                return sd.side.h, sd.field.neg(psi[0])
    return None


def _lift_element(field, elem) -> tuple:
    if isinstance(field, gf.PrimeField):
        return ztrim((elem,))
    return ztrim(tuple(elem))


def analyze_phi_refined(F, p: int, phi, max_steps: int = 256) -> PhiAnalysis:
    """analyze_phi, nudging phi while a repeated linear root allows it.

    Each accepted step replaces phi by phi -+ p^h * root and strictly
    increases the valuation of the expansion's constant term, so the loop
    terminates for squarefree F.  Returns the last (possibly irregular)
    analysis if no step applies.
    """
    analysis = analyze_phi(F, p, phi)
    for _ in range(max_steps):
        if analysis.regular:
            return analysis
        step = _refinement_step(analysis)
        if step is None:
            return analysis
        h, root = step
        shift = ztrim(tuple(c * p**h for c in _lift_element(analysis.sides[0].field, root)))
        improved = None
        for cand in (zsub(analysis.phi, shift), zsub(analysis.phi, tuple(-c for c in shift))):
            trial = analyze_phi(F, p, cand)
            if trial.expansion_vals[0] > analysis.expansion_vals[0]:
                improved = trial
                break
        if improved is None:
            return analysis
        analysis = improved
    return analysis  # pragma: no cover - defensive cap


# ---------------------------------------------------------------------------
# splitting types and Ore's theorem


@dataclass(frozen=True)
class Splitting:
    """Multiset of (ramification index e, residue degree f) pairs."""

    primes: tuple

    @staticmethod
    def of(pairs) -> "Splitting":
        return Splitting(primes=tuple(sorted(pairs, key=lambda ef: (ef[1], ef[0]))))

    @property
    def mass(self) -> int:
        return sum(e * f for e, f in self.primes)

    def residue_counts(self) -> dict:
        counts: dict = {}
        for _, f in self.primes:
            counts[f] = counts.get(f, 0) + 1
        return counts

    def __str__(self):
        return " ".join(f"({e},{f})" for e, f in self.primes)


@dataclass(frozen=True)
class OreResult:
    splitting: Splitting
    index: int  # sum over lifts of the lattice index
    analyses: tuple


def lift_poly(phibar) -> tuple:
    return ztrim(tuple(int(c) for c in phibar))


def ore_analyze(F, p: int, refine: bool = True, overrides=None) -> OreResult:
    """Splitting of p and the Ore index, via one analyzed lift per factor.

    overrides maps a factor of F mod p (a gf poly tuple) to the integer
    lift to use for it; other factors get the naive lift.  Raises
    NotRegular when some factor stays irregular after refinement.
    """
    field = gf.PrimeField(p)
    fbar = gf.ptrim(tuple(c % p for c in F))
    if gf.pdeg(fbar) != zdeg(F):
        raise ValueError("F must be monic of positive degree")
    fact = gf.factor(field, fbar)
    analyses = []
    pairs = []
    for phibar, _mult in fact.factors:
        phi = (overrides or {}).get(phibar) or lift_poly(phibar)
        if gf.ptrim(tuple(c % p for c in phi)) != phibar:
            raise ValueError("override lift does not reduce to its factor")
        analysis = (analyze_phi_refined if refine else analyze_phi)(F, p, phi)
        analyses.append(analysis)
        if not analysis.regular:
            continue
        m = gf.pdeg(phibar)
        for sd in analysis.sides:
            for psi, _one in sd.factorization.factors:
                pairs.append((sd.side.e, m * gf.pdeg(psi)))
    if any(not a.regular for a in analyses):
        raise NotRegularError(p, analyses)
    splitting = Splitting.of(pairs)
    if splitting.mass != zdeg(F):
        raise AssertionError(
            f"splitting mass {splitting.mass} != deg F = {zdeg(F)}"
        )  # pragma: no cover
    return OreResult(
        splitting=splitting,
        index=sum(a.index for a in analyses),
        analyses=tuple(analyses),
    )


def ore_split(F, p: int, refine: bool = True, overrides=None) -> Splitting:
    return ore_analyze(F, p, refine=refine, overrides=overrides).splitting


def is_p_regular(F, p: int, phis=None):
    """(flag, analyses) for the given lifts (naive lifts by default).

    No refinement is applied: this reports regularity of the polynomial
    with respect to the lifts as supplied.
    """
    if phis is None:
        field = gf.PrimeField(p)
        fbar = gf.ptrim(tuple(c % p for c in F))
        phis = [lift_poly(phibar) for phibar, _ in gf.factor(field, fbar).factors]
    analyses = [analyze_phi(F, p, phi) for phi in phis]
    return all(a.regular for a in analyses), analyses


# ---------------------------------------------------------------------------
# Dedekind's index-divisibility criterion (independent of the polygons)


def dedekind_divides(F, p: int) -> bool:
    """True iff p divides (Z_K : Z[alpha]) for alpha a root of monic F.

    Uses the g*h reconstruction form of the criterion with g the radical
    of F mod p and h its cofactor; only gcd arithmetic is needed, so any
    prime works.
    """
    field = gf.PrimeField(p)
    fbar = gf.ptrim(tuple(c % p for c in F))
    if gf.pdeg(fbar) != zdeg(F):
        raise ValueError("F must be monic")
    gbar = gf.radical(field, fbar)
    hbar = gf.pdivmod(field, fbar, gbar)[0]
    g_lift = lift_poly(gbar)
    h_lift = lift_poly(hbar)
    diff = zsub(zmul(g_lift, h_lift), ztrim(F))
    assert all(c % p == 0 for c in diff), "g*h must reconstruct F mod p"
    tbar = gf.ptrim(tuple((c // p) % p for c in diff))
    g1 = gf.pgcd(field, tbar, gbar)
    return gf.pdeg(gf.pgcd(field, g1, hbar)) >= 1
