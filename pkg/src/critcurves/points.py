"""Local structure at a rational critical point ζ = (p/q, r/s).

Every chain through ζ has parameters (i_t, j_t) = (ruq′ + tq, rup′ + tp);
the two *dominant* chains minimize |i| in each sign and carry the pencil
index ℓ = 0.  Four pencils of curves are concurrent at an interior ζ —
labelled I (right, positive slopes), II (right... conventionally the
positive sign refers to I and III, the negative to II and IV — and the
ℓ-th pencil curve ends at a Farey point ζ^σ(ℓ) on a dominant line of the
upper neighbour (σ = I, II) or the lower one (σ = III, IV).  On the rows
ρ = 0, 1 and at the corners some pencils are missing; the special rows
ρ = 1/q and (q−1)/q send two pencils' endpoints onto the horizontal
segments instead of a neighbour's dominant curve.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import ConsistencyError, DomainError, ParameterError
from .exact import (
    ContinuedFraction,
    Rational,
    _convergents,
    continued_fraction,
    fractional_part,
)
from .orbit import (
    CriticalPoint,
    Word,
    brute_force_critical_word,
    critical_point,
    is_critical,
    switch_first,
)

QUADRANTS = ("I", "II", "III", "IV")


def _require_critical(zeta: CriticalPoint) -> None:
    ok, _ = is_critical(zeta.theta, zeta.rho)
    if not ok:
        raise DomainError(f"({zeta.theta}, {zeta.rho}) is not a critical point")


def _is_corner(zeta: CriticalPoint) -> bool:
    return zeta.theta in (0, 1) and zeta.rho in (0, 1)


@dataclass(frozen=True)
class PointContext:
    """Derived quantities at an interior rational critical point.

    q′ = (−1)^{n−1} q_{n−1} and p′ likewise, built from the continued
    fraction of θ with last coefficient 1, so that p·q′ − q·p′ = 1.
    τ = q′·r/s and τ± = q′·(r/s ± 1/q) are never integers away from the
    rows ρ = 1/q, (q−1)/q; t⁺ = ⌈−τ⌉ and t⁻ = t⁺ − 1 are the parameter
    slots of the two dominant chains.
    """

    zeta: CriticalPoint
    cf: ContinuedFraction
    p: int
    q: int
    r: int
    s: int
    u: int
    p_prime: int
    q_prime: int
    tau: Rational
    tau_minus: Rational
    tau_plus: Rational
    t_plus: int
    t_minus: int


def point_context(zeta: CriticalPoint) -> PointContext:
    _require_critical(zeta)
    if zeta.rho == 0 or zeta.rho == 1:
        raise DomainError(
            "point_context needs 0 < rho < 1; the rows rho = 0, 1 are served "
            "by the explicit boundary conventions"
        )
    theta, rho = zeta.theta, zeta.rho
    p, q = theta.numerator, theta.denominator
    r, s = rho.numerator, rho.denominator
    cf = continued_fraction(theta)
    n = cf.n
    sign = -1 if n % 2 == 0 else 1
    q_prime = sign * cf.q(n - 1)
    p_prime = sign * cf.p(n - 1)
    if p * q_prime - q * p_prime != 1:
        raise ConsistencyError(f"unimodularity failed at theta = {theta}")
    tau = Fraction(q_prime) * rho
    tau_plus = q_prime * (rho + Fraction(1, q))
    tau_minus = q_prime * (rho - Fraction(1, q))
    t_plus = -math.floor(tau)
    return PointContext(
        zeta=zeta,
        cf=cf,
        p=p,
        q=q,
        r=r,
        s=s,
        u=q // s,
        p_prime=p_prime,
        q_prime=q_prime,
        tau=tau,
        tau_minus=tau_minus,
        tau_plus=tau_plus,
        t_plus=t_plus,
        t_minus=t_plus - 1,
    )


def neighbours(
    zeta: CriticalPoint,
) -> tuple[CriticalPoint | None, CriticalPoint | None]:
    """(ζ↑, ζ↓) = ζ ± (0, 1/q); a side is None where it would leave the
    square."""
    _require_critical(zeta)
    step = Fraction(1, zeta.theta.denominator)
    up = zeta.rho + step
    down = zeta.rho - step
    return (
        CriticalPoint(zeta.theta, up) if up <= 1 else None,
        CriticalPoint(zeta.theta, down) if down >= 0 else None,
    )


def all_chain_params(zeta: CriticalPoint, t: int) -> tuple[int, int]:
    """The t-th solution (i_t, j_t) of i·θ − j = ρ at an interior point."""
    ctx = point_context(zeta)
    ru = ctx.r * ctx.u
    i_t = ru * ctx.q_prime + t * ctx.q
    j_t = ru * ctx.p_prime + t * ctx.p
    return i_t, j_t


def dominant_params(
    zeta: CriticalPoint,
) -> tuple[tuple[int, int] | None, tuple[int, int] | None]:
    """Minimal-|i| chain parameters through ζ, one per sign.

    Interior: i± = ±q·{±τ}, j± = ±p·{±τ} − r/s.  Rows: ρ = 0 carries
    ((0,0), (−q,−p)) and ρ = 1 carries ((q, p−1), (0,−1)).  At the two
    left corners the inadmissible member degenerates to None.
    """
    _require_critical(zeta)
    theta, rho = zeta.theta, zeta.rho
    p, q = theta.numerator, theta.denominator
    if _is_corner(zeta):
        if zeta == CriticalPoint(Fraction(0), Fraction(0)):
            return (0, 0), None
        if zeta == CriticalPoint(Fraction(1), Fraction(0)):
            return (0, 0), (-1, -1)
        if zeta == CriticalPoint(Fraction(0), Fraction(1)):
            return None, (0, -1)
        return (1, 0), (0, -1)
    if rho == 0:
        return (0, 0), (-q, -p)
    if rho == 1:
        return (q, p - 1), (0, -1)
    ctx = point_context(zeta)
    frac_plus = fractional_part(ctx.tau)
    frac_minus = fractional_part(-ctx.tau)
    i_plus = q * frac_plus
    j_plus = p * frac_plus - rho
    i_minus = -q * frac_minus
    j_minus = -p * frac_minus - rho
    if i_plus.denominator != 1 or j_plus.denominator != 1:
        raise ConsistencyError(f"non-integer dominant parameters at {zeta}")
    return (int(i_plus), int(j_plus)), (int(i_minus), int(j_minus))


def available_quadrants(zeta: CriticalPoint) -> tuple[str, ...]:
    """Which pencils exist at ζ: all four inside, two on the rows
    ρ = 0 (I, II) and ρ = 1 (III, IV), exactly one at each corner."""
    _require_critical(zeta)
    if _is_corner(zeta):
        corner = (zeta.theta == 1, zeta.rho == 1)
        return {
            (False, False): ("I",),
            (True, False): ("II",),
            (False, True): ("IV",),
            (True, True): ("III",),
        }[corner]
    if zeta.rho == 0:
        return ("I", "II")
    if zeta.rho == 1:
        return ("III", "IV")
    return QUADRANTS


def _check_pencil_args(zeta: CriticalPoint, sigma: str, ell: int) -> None:
    if sigma not in QUADRANTS:
        raise ParameterError(f"unknown pencil quadrant {sigma!r}")
    if ell < 0:
        raise ParameterError("pencil index ell must be non-negative")
    if sigma not in available_quadrants(zeta):
        raise DomainError(
            f"pencil {sigma} does not exist at ({zeta.theta}, {zeta.rho}); "
            f"available: {', '.join(available_quadrants(zeta))}"
        )


def pencil_params(zeta: CriticalPoint, sigma: str, ell: int) -> tuple[int, int]:
    """Chain parameters of the ℓ-th curve of pencil σ.

    Pencils I and III share the positive chains i⁺(ℓ) = q({τ} + ℓ),
    II and IV the negative ones i⁻(ℓ) = −q({−τ} + ℓ); ℓ = 0 is the
    dominant chain.  On the rows the formulas degenerate to
    i⁺(ℓ) = qℓ (ρ = 0) and i⁺(ℓ) = q(ℓ+1) (ρ = 1), which also covers
    the corners.
    """
    _check_pencil_args(zeta, sigma, ell)
    theta, rho = zeta.theta, zeta.rho
    p, q = theta.numerator, theta.denominator
    if rho == 0:
        if sigma == "I":
            return q * ell, p * ell
        return -q * (ell + 1), -p * (ell + 1)
    if rho == 1:
        if sigma == "III":
            return q * (ell + 1), p * (ell + 1) - 1
        return -q * ell, -p * ell - 1
    ctx = point_context(zeta)
    if sigma in ("I", "III"):
        scale = fractional_part(ctx.tau) + ell
        i_ell = q * scale
        j_ell = p * scale - rho
    else:
        scale = fractional_part(-ctx.tau) + ell
        i_ell = -q * scale
        j_ell = -p * scale - rho
    if i_ell.denominator != 1 or j_ell.denominator != 1:
        raise ConsistencyError(f"non-integer pencil parameters at {zeta}")
    return int(i_ell), int(j_ell)


def pencil_endpoint(zeta: CriticalPoint, sigma: str, ell: int) -> CriticalPoint:
    """The Farey point ζ^σ(ℓ) of the ℓ-th pencil curve distinct from ζ.

    Generic endpoints lie on the σ-assigned dominant line of the upper
    (I, II) or lower (III, IV) neighbour:

        σ = I:   k = ℓ + t⁺ + ⌊τ⁺⌋,  (p^σ, q^σ) = (−p′ + pk, −q′ + qk)
        σ = II:  k = ℓ − t⁻ + ⌊−τ⁺⌋, (p^σ, q^σ) = ( p′ + pk,  q′ + qk)
        σ = III: k = ℓ + t⁺ + ⌊τ⁻⌋,  (p^σ, q^σ) = ( p′ + pk,  q′ + qk)
        σ = IV:  k = ℓ − t⁻ + ⌊−τ⁻⌋, (p^σ, q^σ) = (−p′ + pk, −q′ + qk)

    with θ^σ(ℓ) = p^σ/q^σ and ρ from the pencil chain's equation.  On
    the special rows ρ = 1/q and (q−1)/q (where a τ± is an integer and
    the table breaks down) the affected pencils intersect the horizontal
    segments instead: ζ^σ(ℓ) = (j/i, 0) for σ = III, IV at ρ = 1/q and
    ((j+1)/i, 1) for σ = I, II at ρ = (q−1)/q.  The rows ρ = 0, 1 use
    their own closed forms, branching on the sign of q′, and the corner
    endpoints are explicit.
    """
    if ell < 1:
        raise ParameterError("pencil endpoints exist for ell >= 1")
    i_ell, j_ell = pencil_params(zeta, sigma, ell)
    theta, rho = zeta.theta, zeta.rho
    p, q = theta.numerator, theta.denominator

    if _is_corner(zeta):
        if zeta.theta == 0:
            end_theta = Fraction(1, ell)
        else:
            end_theta = Fraction(ell, ell + 1)
        end_rho = Fraction(1) if rho == 0 else Fraction(0)
        return critical_point(end_theta, end_rho)

    if rho == 0 or rho == 1:
        cf = continued_fraction(theta)
        sign = -1 if cf.n % 2 == 0 else 1
        q_prime = sign * cf.q(cf.n - 1)
        p_prime = sign * cf.p(cf.n - 1)
        # I and IV walk one family of convergent combinations, II and
        # III the other; q′ < 0 shifts both by one full convergent step
        if sigma in ("I", "IV"):
            if q_prime > 0:
                num, den = p * ell - p_prime, q * ell - q_prime
            else:
                num, den = p * ell - p - p_prime, q * ell - q - q_prime
        else:
            if q_prime > 0:
                num, den = p * ell + p_prime, q * ell + q_prime
            else:
                num, den = p * ell + p + p_prime, q * ell + q + q_prime
        end_theta = Fraction(num, den)
        return critical_point(end_theta, i_ell * end_theta - j_ell)

    ctx = point_context(zeta)
    if rho == Fraction(1, q) and sigma in ("III", "IV"):
        return critical_point(Fraction(j_ell, i_ell), Fraction(0))
    if rho == Fraction(q - 1, q) and sigma in ("I", "II"):
        return critical_point(Fraction(j_ell + 1, i_ell), Fraction(1))

    if sigma == "I":
        k = ell + ctx.t_plus + math.floor(ctx.tau_plus)
        num, den = -ctx.p_prime + p * k, -ctx.q_prime + q * k
    elif sigma == "II":
        k = ell - ctx.t_minus + math.floor(-ctx.tau_plus)
        num, den = ctx.p_prime + p * k, ctx.q_prime + q * k
    elif sigma == "III":
        k = ell + ctx.t_plus + math.floor(ctx.tau_minus)
        num, den = ctx.p_prime + p * k, ctx.q_prime + q * k
    else:
        k = ell - ctx.t_minus + math.floor(-ctx.tau_minus)
        num, den = -ctx.p_prime + p * k, -ctx.q_prime + q * k
    end_theta = Fraction(num, den)
    return critical_point(end_theta, i_ell * end_theta - j_ell)


@dataclass(frozen=True)
class PencilDescriptor:
    sigma: str
    ell: int
    chain_params: tuple[int, int]
    endpoint: CriticalPoint | None


def pencil_descriptor(zeta: CriticalPoint, sigma: str, ell: int) -> PencilDescriptor:
    """Bundle of the ℓ-th pencil curve's data; ℓ = 0 (the dominant
    curve) has no endpoint of its own."""
    params = pencil_params(zeta, sigma, ell)
    endpoint = pencil_endpoint(zeta, sigma, ell) if ell >= 1 else None
    return PencilDescriptor(sigma, ell, params, endpoint)


def dominant_words(zeta: CriticalPoint) -> tuple[Word, Word]:
    """(u⁺, u⁻): critical words of the two dominant curves.

    On ρ = 0 these are (ε, b^q) and on ρ = 1 (a^q, ε) — covering the
    corners via q = 1 — so the pencil word formulas below never need a
    special case.
    """
    _require_critical(zeta)
    q = zeta.theta.denominator
    if zeta.rho == 0:
        return "", "b" * q
    if zeta.rho == 1:
        return "a" * q, ""
    plus, _, _ = brute_force_critical_word(zeta, 1)
    minus, _, _ = brute_force_critical_word(zeta, -1)
    return plus, minus


def pencil_word(zeta: CriticalPoint, sigma: str, ell: int) -> Word:
    """Word of the ℓ-th curve of pencil σ.

    With u± the dominant words and v± = u± with the first letter
    switched:  I: u⁺(v⁻u⁺)^ℓ, II: u⁻(u⁺v⁻)^ℓ, III: u⁺(u⁻v⁺)^ℓ,
    IV: u⁻(v⁺u⁻)^ℓ.  ℓ = 0 returns the dominant word itself.
    """
    _check_pencil_args(zeta, sigma, ell)
    u_plus, u_minus = dominant_words(zeta)
    if ell == 0:
        return u_plus if sigma in ("I", "III") else u_minus
    if sigma == "I":
        return u_plus + (switch_first(u_minus) + u_plus) * ell
    if sigma == "II":
        return u_minus + (u_plus + switch_first(u_minus)) * ell
    if sigma == "III":
        return u_plus + (u_minus + switch_first(u_plus)) * ell
    return u_minus + (switch_first(u_plus) + u_minus) * ell


@dataclass(frozen=True)
class ApproachStep:
    k: int
    theta: Rational
    rho: Rational
    valid: bool
    dominant: bool


def approach_sequence(
    coefficients: tuple[int, ...], i: int, count: int
) -> list[ApproachStep]:
    """Follow ζ_k = (p_k/q_k, i·p_k/q_k − j) along the convergents of a
    continued-fraction target.

    j = ⌊i·θ⌋ is computed from the exact value of the full coefficient
    list, which must be at least count + 2 long so the target outlasts
    the reported convergents.  Steps whose ρ falls outside [0, 1] are
    marked invalid; (i, j) should become and stay dominant as k grows.
    """
    coefficients = tuple(coefficients)
    if count < 1:
        raise ParameterError("count must be at least 1")
    if len(coefficients) < count + 2:
        raise ParameterError(
            f"need at least {count + 2} coefficients for {count} steps"
        )
    if coefficients[0] != 0:
        raise ParameterError("targets lie in [0, 1]: the expansion starts with 0")
    if any(a < 1 for a in coefficients[1:]):
        raise ParameterError("continued-fraction coefficients past a0 must be >= 1")
    convergents = _convergents(coefficients)
    theta = Fraction(*convergents[-1])
    j = math.floor(i * theta)
    steps = []
    for k in range(1, count + 1):
        p_k, q_k = convergents[k]
        theta_k = Fraction(p_k, q_k)
        rho_k = i * theta_k - j
        valid = 0 <= rho_k <= 1
        dominant = False
        if valid:
            pair = dominant_params(CriticalPoint(theta_k, rho_k))
            dominant = (i, j) in [entry for entry in pair if entry is not None]
        steps.append(ApproachStep(k, theta_k, rho_k, valid, dominant))
    return steps
