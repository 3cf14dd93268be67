"""Exact real-root counting for univariate rational polynomials.

Used by the Leray-Schauder oracle: eigenvalue counts in an interval come from
Sturm chains on the characteristic polynomial, with square-free decomposition
supplying multiplicities.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Poly = list[Fraction]  # ascending coefficients, no trailing zeros


def _trim(p: Sequence[Fraction]) -> Poly:
    p = [Fraction(c) for c in p]
    while p and p[-1] == 0:
        p.pop()
    return p


def degree(p: Poly) -> int:
    return len(p) - 1


def eval_poly(p: Poly, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def derivative(p: Poly) -> Poly:
    return _trim([c * i for i, c in enumerate(p)][1:])


def poly_divmod(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    a, b = _trim(a), _trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    r = list(a)
    db, lead = degree(b), b[-1]
    while _trim(r) and degree(_trim(r)) >= db:
        r = _trim(r)
        shift = degree(r) - db
        coef = r[-1] / lead
        q[shift] = coef
        for i in range(len(b)):
            r[shift + i] -= coef * b[i]
    return _trim(q), _trim(r)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    a, b = _trim(a), _trim(b)
    while b:
        _, r = poly_divmod(a, b)
        a, b = b, r
    if a:
        lead = a[-1]
        a = [c / lead for c in a]
    return a


def square_free_factors(p: Poly) -> list[tuple[Poly, int]]:
    """Yun-style decomposition: [(factor, multiplicity)] with factors square-free."""
    p = _trim(p)
    if degree(p) < 1:
        return []
    g = poly_gcd(p, derivative(p))
    if degree(g) == 0:
        return [(p, 1)]
    w, _ = poly_divmod(p, g)
    out: list[tuple[Poly, int]] = []
    mult = 1
    while degree(w) > 0:
        y = poly_gcd(w, g)
        f, _ = poly_divmod(w, y)
        if degree(f) > 0:
            out.append((f, mult))
        w = y
        g, _ = poly_divmod(g, y)
        mult += 1
    return out


def _sturm_chain(p: Poly) -> list[Poly]:
    chain = [_trim(p), derivative(p)]
    while _trim(chain[-1]):
        _, r = poly_divmod(chain[-2], chain[-1])
        r = _trim(r)
        if not r:
            break
        chain.append([-c for c in r])
    return [c for c in chain if _trim(c)]


def _sign_changes(values: list[Fraction]) -> int:
    signs = [1 if v > 0 else -1 for v in values if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _changes_at(chain: list[Poly], x: Fraction) -> int:
    return _sign_changes([eval_poly(c, x) for c in chain])


def _changes_at_plus_infinity(chain: list[Poly]) -> int:
    return _sign_changes([c[-1] for c in chain])


def _changes_at_minus_infinity(chain: list[Poly]) -> int:
    vals = []
    for c in chain:
        s = c[-1] if degree(c) % 2 == 0 else -c[-1]
        vals.append(s)
    return _sign_changes(vals)


def count_distinct_roots_in(p: Poly, a: Fraction | None, b: Fraction | None) -> int:
    """Distinct real roots in (a, b]; None endpoints mean -inf / +inf."""
    p = _trim(p)
    if degree(p) < 1:
        return 0
    chain = _sturm_chain(p)
    va = _changes_at(chain, a) if a is not None else _changes_at_minus_infinity(chain)
    vb = _changes_at(chain, b) if b is not None else _changes_at_plus_infinity(chain)
    return va - vb


def count_roots_with_multiplicity_above(p: Poly, threshold: Fraction) -> int:
    """Real roots strictly greater than threshold, counted with multiplicity."""
    total = 0
    for factor, mult in square_free_factors(p):
        total += mult * count_distinct_roots_in(factor, Fraction(threshold), None)
    return total


def has_root_at(p: Poly, x: Fraction) -> bool:
    return eval_poly(_trim(p), Fraction(x)) == 0


def isolate_real_roots(
    p: Poly, lo: Fraction, hi: Fraction, max_width: Fraction = Fraction(1, 2**20)
) -> list[tuple[Fraction, Fraction]]:
    """Disjoint isolating intervals (half-open (a,b]) for roots in (lo, hi]."""
    p = _trim(p)
    if degree(p) < 1:
        return []
    chain = _sturm_chain(p)

    out: list[tuple[Fraction, Fraction]] = []

    def recurse(a: Fraction, b: Fraction, va: int, vb: int):
        n = va - vb
        if n == 0:
            return
        if n == 1 and (b - a) <= max_width:
            out.append((a, b))
            return
        mid = (a + b) / 2
        vm = _changes_at(chain, mid)
        recurse(a, mid, va, vm)
        recurse(mid, b, vm, vb)

    recurse(lo, hi, _changes_at(chain, lo), _changes_at(chain, hi))
    return sorted(out)
