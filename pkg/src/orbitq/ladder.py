"""Spectral engine for the ladder: multidegrees, multiplier profiles,
eigenvalues, parameter extraction, and the rung norms.

Everything here is a pure function of the case's block data (q, d, w)
and m; no Lie-theoretic structure is instantiated.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .jordan import JordanCase, derived_vectors

Q = Fraction


class ExtractionFailure(Exception):
    """The vacuum multiplier multiset lacks a required element.

    This is the bracket-validity failure signal: the lowering relation
    cannot close on the vacuum when it fires.
    """

    def __init__(self, missing, multiset):
        super().__init__(f"missing {missing} (need it in {sorted(multiset)})")
        self.missing = missing
        self.multiset = multiset


@dataclass(frozen=True)
class LadderPoint:
    p: Fraction          # half-integer exponent of the distinguished section
    t: tuple             # exponents of the degree filtration generators


@dataclass(frozen=True)
class CapelliProfile:
    entries: dict  # (i, j) with 1 <= i <= q_total, 0 <= j <= v_i - 1

    def values(self) -> list:
        return [v for _, v in sorted(self.entries.items())]


def multidegree(case: JordanCase, t) -> tuple:
    """Exponent-weighted degree vector; entry i gets a 2 for every
    generator whose support reaches slot i of its block."""
    q = case.q_total
    if len(t) != q:
        raise ValueError(f"t must have length {q}")
    if any(ti < 0 for ti in t):
        raise ValueError("t must be componentwise >= 0")
    mu = [0] * q
    c = 0
    for b in case.blocks:
        for j in range(1, b.q + 1):
            tij = t[c + j - 1]
            for slot in range(c, c + j):
                mu[slot] += 2 * tij
        c += b.q
    return tuple(mu)


def capelli_profile(case: JordanCase, mu) -> CapelliProfile:
    v, delta, _ = derived_vectors(case)
    entries = {}
    for i in range(len(v)):
        for j in range(v[i]):
            entries[(i + 1, j)] = Q(mu[i] + delta[i] - 2 * j, 2 * v[i])
    return CapelliProfile(entries)


def level_data(case: JordanCase, pt: LadderPoint):
    """(r, z, X): grading eigenvalue, filtration degree, vector-field
    eigenvalue at the given ladder point."""
    z = sum(t * (idx_degree) for t, idx_degree in zip(pt.t, _degrees(case)))
    r = Q(pt.p) + z + Q(case.m + 1, 2)
    x = 2 * Q(pt.p) + z + Q(case.m + 2, 2)
    return r, z, x


def _degrees(case: JordanCase) -> list:
    degs = []
    for b in case.blocks:
        degs.extend(range(1, b.q + 1))
    return degs


def R_eigenvalue(case: JordanCase, mu, r):
    """(R_raw or None, R_simplified).

    R_raw is the four-term product formula, undefined at r in {0, 1, -1};
    R_simplified = 2r - 2 - sum of the multiplier profile.
    """
    r = Q(r)
    cs = capelli_profile(case, mu).values()
    total = sum(cs)
    simplified = 2 * r - 2 - total
    if r in (0, 1, -1):
        return None, simplified
    def prod(vals):
        out = Q(1)
        for v in vals:
            out *= v
        return out
    raw = (prod(cs) / ((r - 1) * r)
           - prod([c + 1 for c in cs]) / (r * (r + 1))
           - prod([r - 1 - c for c in cs]) / ((r - 1) * r)
           + prod([r - c for c in cs]) / (r * (r + 1)))
    return raw, simplified


def j_identity_check(a0, a1, a2, a3, b) -> bool:
    """Formal four-variable identity behind the simplification of R."""
    b = Q(b)
    if b in (0, -1) or b + 1 in (0, -1):
        raise ValueError("singular b")
    a = [Q(a0), Q(a1), Q(a2), Q(a3)]

    def j(vals, bb):
        out = Q(1)
        for v in vals:
            out *= v
        return out / (bb * (bb + 1))

    lhs = (j(a, b) - j([b - x for x in a], b)
           - j([x + 1 for x in a], b + 1) + j([b - x + 1 for x in a], b + 1))
    return lhs == 2 * b - sum(a)


def extract_ab(case: JordanCase, r0):
    """Recover (a, b), sorted ascending, from the vacuum profile.

    The vacuum multiplier multiset must contain 0 and r0 - 1 (two zeros
    when r0 = 1); the two leftover values c <= c' give (r0 - c', r0 - c).
    Raises ExtractionFailure otherwise.
    """
    r0 = Q(r0)
    mu0 = (0,) * case.q_total
    vals = capelli_profile(case, mu0).values()
    for needed in (Q(0), r0 - 1):
        if needed in vals:
            vals.remove(needed)
        else:
            raise ExtractionFailure(needed, vals)
    c1, c2 = sorted(vals)
    return (r0 - c2, r0 - c1)


def ladder_norms(case: JordanCase, r0, a, b, n: int):
    """(gammas, norm): the lowering scalars at rungs 1..n and the squared
    norm of the n-th normalized rung section."""
    r0, a, b = Q(r0), Q(a), Q(b)
    if r0 <= 0 or a <= 0 or b <= 0:
        raise ValueError("parameters must be positive")
    gammas = [Q(k) * (k - 1 + a) * (k - 1 + b) / (r0 + k) for k in range(1, n + 1)]
    norm = Q(1)
    for g in gammas:
        norm *= g
    fact = 1
    for k in range(2, n + 1):
        fact *= k
    return gammas, norm / (fact * fact)


def vacuum_candidates(case: JordanCase) -> list:
    """Degree-one candidate multidegrees: constant 2*(w_n - u'_n) on each
    block, 0 <= u'_n <= w_n.  Diagnostics only; no membership decision."""
    ranges = [range(b.w + 1) for b in case.blocks]
    out = []

    def rec(idx, acc):
        if idx == len(case.blocks):
            mu = []
            for b, u in zip(case.blocks, acc):
                mu.extend([2 * (b.w - u)] * b.q)
            out.append(tuple(mu))
            return
        for u in ranges[idx]:
            rec(idx + 1, acc + [u])

    rec(0, [])
    return out


def bracket_valid(case: JordanCase, r0):
    """(valid, diagnostics).

    valid is False iff parameter extraction fails at the vacuum.  When
    r0 = 1 the diagnostics list each candidate multidegree with its
    multiplier zero-count (the closing condition needs at least two).
    """
    r0 = Q(r0)
    try:
        extract_ab(case, r0)
        valid = True
    except ExtractionFailure:
        valid = False
    diagnostics = []
    if r0 == 1:
        for mu in vacuum_candidates(case):
            vals = capelli_profile(case, mu).values()
            diagnostics.append((mu, sum(1 for v in vals if v == 0)))
    return valid, diagnostics
