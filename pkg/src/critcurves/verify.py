"""Verification sweeps: every structural claim the package relies on,
re-checked against brute force at a configurable scale.

Each check is a plain function taking the sweep bound and returning a
human-readable detail string; any exception marks the check failed.
The functions are module-level so a process pool can ship them to
workers for the larger sweeps.
"""

from __future__ import annotations

import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from . import render as render_mod
from .chains import chain_new, curve_count, decompose, farey_point_tests, residue_cover
from .errors import ParameterError
from .exact import (
    continued_fraction,
    farey_neighbours,
    farey_sequence,
    standard_continued_fraction,
)
from .net import net
from .orbit import brute_force_critical_word, code_orbit, critical_point, is_critical
from .points import (
    all_chain_params,
    available_quadrants,
    dominant_params,
    dominant_words,
    neighbours,
    pencil_descriptor,
    pencil_endpoint,
    pencil_params,
    pencil_word,
    point_context,
)
from .triples import (
    _alternate_triple_locations,
    triple_point_farey_status,
    triple_points,
)


@dataclass(frozen=True)
class CheckResult:
    suite: str
    name: str
    passed: bool
    detail: str


def _totients(n: int) -> list[int]:
    phi = list(range(n + 1))
    for p in range(2, n + 1):
        if phi[p] == p:
            for k in range(p, n + 1, p):
                phi[k] -= phi[k] // p
    return phi


def _coprime_pairs(max_q: int):
    """(p, q) with 0 < p < q ≤ max_q and gcd(p, q) = 1."""
    for q in range(2, max_q + 1):
        for p in range(1, q):
            if math.gcd(p, q) == 1:
                yield p, q


def _theta_values(max_q: int, ends: bool = False):
    """Reduced θ values; with ``ends`` also the integers 0 and 1."""
    if ends:
        yield 0, 1
        yield 1, 1
    yield from _coprime_pairs(max_q)


def _valid_rhos(q: int):
    """Every ρ = r/s with s | q, 0 ≤ ρ ≤ 1."""
    out = set()
    for s in range(1, q + 1):
        if q % s == 0:
            for r in range(0, s + 1):
                out.add(Fraction(r, s))
    return sorted(out)


def _word_start(sign: int, rho: Fraction) -> Fraction:
    return Fraction(0) if sign > 0 else rho


# ---------------------------------------------------------------------------
# exact


def check_farey_adjacency(max_q: int) -> str:
    phi = _totients(max_q)
    pairs = 0
    for n in range(1, max_q + 1):
        seq = farey_sequence(n, Fraction(0), Fraction(1))
        assert len(seq) == 2 + sum(phi[2 : n + 1]), f"|F_{n}| wrong"
        for a, b in zip(seq, seq[1:]):
            assert b.numerator * a.denominator - a.numerator * b.denominator == 1
            pairs += 1
    return f"{pairs} adjacent pairs across F_1..F_{max_q}"


def check_cf_conventions(max_q: int) -> str:
    count = 0
    for p, q in _coprime_pairs(max_q):
        x = Fraction(p, q)
        for cf in (continued_fraction(x), standard_continued_fraction(x)):
            assert cf.value == x
            assert cf.coefficients[0] == 0
            for (pa, qa), (pb, qb) in zip(cf.convergents, cf.convergents[1:]):
                assert abs(pb * qa - pa * qb) == 1
        assert continued_fraction(x).coefficients[-1] == 1
        assert standard_continued_fraction(x).coefficients[-1] >= 2
        count += 1
    return f"{count} fractions, both conventions"


def check_farey_neighbours(max_q: int) -> str:
    checked = 0
    for n in range(1, max_q + 1):
        seq = farey_sequence(n, Fraction(0), Fraction(1))
        for k, x in enumerate(seq):
            left, right = farey_neighbours(x, n)
            assert left == (seq[k - 1] if k > 0 else None)
            assert right == (seq[k + 1] if k + 1 < len(seq) else None)
            checked += 1
    return f"{checked} members matched against full sequences, n ≤ {max_q}"


# ---------------------------------------------------------------------------
# orbit


def check_coding_periodicity(max_q: int) -> str:
    count = 0
    for p, q in _coprime_pairs(max_q):
        theta = Fraction(p, q)
        for rho in _valid_rhos(q):
            w = code_orbit(theta, rho, Fraction(0), q)
            assert code_orbit(theta, rho, Fraction(0), 2 * q) == w + w
            count += 1
    return f"{count} codings doubled"


def check_brute_word_structure(max_q: int) -> str:
    count = 0
    for p, q in _theta_values(max_q, ends=True):
        theta = Fraction(p, q)
        for rho in _valid_rhos(q):
            zeta = critical_point(theta, rho)
            ok, _ = is_critical(theta, rho)
            assert ok
            for sign in (1, -1):
                word, i, j = brute_force_critical_word(zeta, sign)
                assert i * theta - j == rho
                assert len(word) == abs(i)
                if word:
                    assert word == code_orbit(theta, rho, _word_start(sign, rho), abs(i))
                # nothing shorter of the same sign connects the boundary points
                for smaller in range(1, abs(i)):
                    assert (sign * smaller * theta - rho).denominator != 1
                count += 1
    return f"{count} (point, sign) pairs, minimality confirmed"


# ---------------------------------------------------------------------------
# chains


def check_decomposition_oracle(max_q: int) -> str:
    cap = min(max_q, 12)
    flip_pairs = {1: ("b", "a"), -1: ("a", "b")}
    chains = curves = 0
    for n in range(1, cap + 1):
        for i in (n, -n):
            js = range(0, n) if i > 0 else range(-n, 0)
            for j in js:
                chain = chain_new(i, j)
                dec = decompose(chain)
                start_letter, end_letter = flip_pairs[chain.sign]
                words = []
                for k, curve in enumerate(dec.curves):
                    fp = dec.farey_points[k]
                    words.append(fp.boundary_word)
                    mid = (curve.theta_lo + curve.theta_hi) / 2
                    rho = chain.rho_at(mid)
                    assert curve.word == code_orbit(mid, rho, _word_start(chain.sign, rho), n)
                    words.append(curve.word)
                    curves += 1
                fp = dec.farey_points[-1]
                words.append(fp.boundary_word)
                for fp in dec.farey_points:
                    rho = chain.rho_at(fp.theta)
                    assert fp.boundary_word == code_orbit(
                        fp.theta, rho, _word_start(chain.sign, rho), n
                    )
                    expected = (
                        ""
                        if rho in (0, 1)
                        else brute_force_critical_word(
                            critical_point(fp.theta, rho), chain.sign
                        )[0]
                    )
                    assert fp.critical_word == expected
                # endpoint words and the single-flip law
                assert words[0] == start_letter * n
                assert words[-1] == end_letter * n
                for pos in range(n):
                    flips = sum(
                        1
                        for wa, wb in zip(words, words[1:])
                        if wa[pos] != wb[pos]
                    )
                    assert flips == 1, f"index {pos} flips {flips} times"
                assert curve_count(chain) == len(dec.curves)
                chains += 1
    for j in (0, -1):
        dec0 = decompose(chain_new(0, j))
        assert dec0.farey_points == ()
        assert len(dec0.curves) == 1 and dec0.curves[0].word == ""
        chains += 1
    return f"{chains} chains, {curves} curve words matched against direct coding"


def check_residue_cover(max_q: int) -> str:
    bound = max(max_q, 30)
    cells = 0
    for n in range(1, bound + 1):
        for m in range(0, n):
            cover = residue_cover(n, m)
            assert set(cover) == set(range(n))
            cells += 1
    return f"n ≤ {bound}, {cells} windows covered"


def check_farey_point_tests(max_q: int) -> str:
    cap = min(max_q, 8)
    positives = negatives = 0
    for n in range(1, cap + 1):
        for i in (n, -n):
            js = range(0, n) if i > 0 else range(-n, 0)
            for j in js:
                chain = chain_new(i, j)
                dec = decompose(chain)
                for fp in dec.farey_points:
                    zeta = critical_point(fp.theta, chain.rho_at(fp.theta))
                    t = farey_point_tests(chain, zeta)
                    assert t.is_farey and t.short_word and t.transversal_witness
                    positives += 1
                for a, b in zip(dec.farey_points, dec.farey_points[1:]):
                    mid = (a.theta + b.theta) / 2
                    zeta = critical_point(mid, chain.rho_at(mid))
                    t = farey_point_tests(chain, zeta)
                    assert not (t.is_farey or t.short_word or t.transversal_witness)
                    negatives += 1
    return f"{positives} Farey points all-true, {negatives} interior points all-false"


# ---------------------------------------------------------------------------
# points


def check_dominant_minimality(max_q: int) -> str:
    count = 0
    for p, q in _theta_values(max_q, ends=True):
        theta = Fraction(p, q)
        for rho in _valid_rhos(q):
            zeta = critical_point(theta, rho)
            plus, minus = dominant_params(zeta)
            for sign, slot in ((1, plus), (-1, minus)):
                word, i, j = brute_force_critical_word(zeta, sign)
                if slot is not None:
                    assert slot == (i, j), f"{zeta}: {slot} vs brute {(i, j)}"
                    count += 1
            if 0 < rho < 1:
                ctx = point_context(zeta)
                assert plus == all_chain_params(zeta, ctx.t_plus)
                assert minus == all_chain_params(zeta, ctx.t_minus)
    return f"{count} dominant slots equal the brute-force minima"


def check_pencil_endpoints(max_q: int) -> str:
    max_ell = 4
    count = 0
    for p, q in _theta_values(max_q, ends=True):
        theta = Fraction(p, q)
        for rho in _valid_rhos(q):
            zeta = critical_point(theta, rho)
            up, down = neighbours(zeta)
            for sigma in available_quadrants(zeta):
                target = up if sigma in ("I", "II") else down
                side = 1 if sigma in ("I", "IV") else 0
                prev = None
                for ell in range(1, max_ell + 1):
                    i_l, j_l = pencil_params(zeta, sigma, ell)
                    end = pencil_endpoint(zeta, sigma, ell)
                    assert i_l * end.theta - j_l == end.rho
                    left, right = farey_neighbours(theta, abs(i_l))
                    assert end.theta == (right if side == 1 else left)
                    t_plus, t_minus = dominant_params(target)
                    matched = t_plus if sigma in ("I", "III") else t_minus
                    on_matched = (
                        matched is not None
                        and matched[0] * end.theta - matched[1] == end.rho
                    )
                    if not on_matched:
                        # endpoints pushed onto a boundary row sit on the
                        # row itself, the neighbour's other dominant line
                        assert end.rho in (0, 1), (
                            f"{zeta} {sigma} ℓ={ell}: endpoint off the "
                            "neighbour's dominant lines"
                        )
                        other = t_minus if sigma in ("I", "III") else t_plus
                        assert other is not None
                        assert other[0] * end.theta - other[1] == end.rho, (
                            f"{zeta} {sigma} ℓ={ell}: endpoint off the "
                            "neighbour's dominant lines"
                        )
                    if prev is not None and 0 < rho < 1:
                        # consecutive endpoints line up along the bold slope
                        ctx = point_context(zeta)
                        bold = {
                            "I": ctx.q * (ctx.tau_plus - math.floor(ctx.tau_plus)),
                            "II": -ctx.q * (-ctx.tau_plus - math.floor(-ctx.tau_plus)),
                            "III": ctx.q * (ctx.tau_minus - math.floor(ctx.tau_minus)),
                            "IV": -ctx.q * (-ctx.tau_minus - math.floor(-ctx.tau_minus)),
                        }[sigma]
                        d_theta = end.theta - prev.theta
                        assert d_theta != 0
                        assert (end.rho - prev.rho) / d_theta == bold
                    prev = end
                    count += 1
    return f"{count} endpoints on the matching neighbour dominant lines"


def check_pencil_words(max_q: int) -> str:
    cap = min(max_q, 10)
    max_ell = 2
    count = 0
    for p, q in _theta_values(cap, ends=True):
        theta = Fraction(p, q)
        for rho in _valid_rhos(q):
            zeta = critical_point(theta, rho)
            u_plus, u_minus = dominant_words(zeta)
            if 0 < rho < 1:
                assert len(u_plus) + len(u_minus) == q
                assert u_plus + u_minus == code_orbit(theta, rho, Fraction(0), q)
                assert u_minus + u_plus == code_orbit(theta, rho, rho, q)
            for sigma in available_quadrants(zeta):
                sign = 1 if sigma in ("I", "III") else -1
                for ell in range(0, max_ell + 1):
                    word = pencil_word(zeta, sigma, ell)
                    i_l, j_l = pencil_params(zeta, sigma, ell)
                    assert len(word) == abs(i_l)
                    if ell == 0:
                        sample, s_rho = theta, rho
                    else:
                        end = pencil_endpoint(zeta, sigma, ell)
                        sample = Fraction(
                            theta.numerator + end.theta.numerator,
                            theta.denominator + end.theta.denominator,
                        )
                        s_rho = i_l * sample - j_l
                    assert word == code_orbit(
                        sample, s_rho, _word_start(sign, s_rho), abs(i_l)
                    )
                    count += 1
    return f"{count} pencil words equal the direct coding beside the base point"


# ---------------------------------------------------------------------------
# triples


def check_triple_points(max_q: int) -> str:
    points = 0
    for p, q in _coprime_pairs(max_q):
        theta = Fraction(p, q)
        for rho in _valid_rhos(q):
            if rho == 0 or rho == 1:
                continue
            zeta = critical_point(theta, rho)
            report = triple_points(zeta)
            assert report.mu in (-1, 0, 1)
            assert report.determinant_table.count(0) == 2
            cf = continued_fraction(theta)
            convergent_thetas = {
                Fraction(cf.p(cf.n - 1), cf.q(cf.n - 1)),
                Fraction(cf.p(cf.n - 2), cf.q(cf.n - 2)),
            }
            for pt in report.points:
                assert pt.location.theta in convergent_thetas
            alt = _alternate_triple_locations(zeta)
            assert alt == tuple(
                (pt.location.theta, pt.location.rho) for pt in report.points
            )
            for status in triple_point_farey_status(zeta):
                needed = 1 if report.kind == "I" else 2
                assert status.farey_count >= needed
            points += 2
    return f"{points} triple points cross-checked, convention-independent"


# ---------------------------------------------------------------------------
# net / render


def check_net_cardinality(max_q: int) -> str:
    bound = max(max_q, 40)
    for n in range(0, bound + 1):
        chains = net(n).chains
        assert len(chains) == n * (n + 1) + 2
        keys = [(c.i, c.j) for c in chains]
        assert keys == sorted(keys)
    return f"orders 0..{bound}, cardinality n(n+1)+2 and (i, j) ordering"


def check_render_determinism(max_q: int) -> str:
    del max_q
    net6 = net(6)
    assert render_mod.render_net(net6) == render_mod.render_net(net6)
    chain = chain_new(7, 5)
    dec = decompose(chain)
    assert render_mod.render_decomposition(dec) == render_mod.render_decomposition(dec)
    assert render_mod.segments_csv([chain]) == render_mod.segments_csv([chain])
    zeta = critical_point(Fraction(3, 5), Fraction(2, 5))
    assert render_mod.render_pencils(zeta) == render_mod.render_pencils(zeta)
    assert render_mod.render_triples(zeta, normalized=True) == render_mod.render_triples(
        zeta, normalized=True
    )
    doc = render_mod.decomposition_document(dec)
    dumped = json.dumps(doc, indent=2, sort_keys=True)
    assert json.dumps(json.loads(dumped), indent=2, sort_keys=True) == dumped
    return "SVG, CSV and JSON byte-stable; JSON round-trips"


_SUITES: dict[str, tuple] = {
    "exact": (
        ("farey-adjacency", check_farey_adjacency),
        ("cf-conventions", check_cf_conventions),
        ("farey-neighbours", check_farey_neighbours),
    ),
    "orbit": (
        ("coding-periodicity", check_coding_periodicity),
        ("brute-word-structure", check_brute_word_structure),
    ),
    "chains": (
        ("decomposition-oracle", check_decomposition_oracle),
        ("residue-cover", check_residue_cover),
        ("farey-point-tests", check_farey_point_tests),
    ),
    "points": (
        ("dominant-minimality", check_dominant_minimality),
        ("pencil-endpoints", check_pencil_endpoints),
        ("pencil-words", check_pencil_words),
    ),
    "triples": (("triple-points", check_triple_points),),
    "net": (
        ("net-cardinality", check_net_cardinality),
        ("render-determinism", check_render_determinism),
    ),
}

SUITE_NAMES = (*_SUITES, "all")


def _checks_for(suite: str):
    if suite == "all":
        return tuple(
            (name, func, group)
            for group, checks in _SUITES.items()
            for name, func in checks
        )
    if suite not in _SUITES:
        raise ParameterError(
            f"unknown suite {suite!r}; choose from {', '.join(SUITE_NAMES)}"
        )
    return tuple((name, func, suite) for name, func in _SUITES[suite])


def _run_check(item) -> CheckResult:
    name, func, group, max_q = item
    try:
        return CheckResult(group, name, True, func(max_q))
    except Exception as exc:  # a failing check is a result, not a crash
        return CheckResult(group, name, False, f"{type(exc).__name__}: {exc}")


def run_suite(suite: str, max_q: int = 12, jobs: int = 1) -> list[CheckResult]:
    if max_q < 2:
        raise ParameterError(f"--max-q must be at least 2, got {max_q}")
    items = [(name, func, group, max_q) for name, func, group in _checks_for(suite)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_run_check, items))
    return [_run_check(item) for item in items]
