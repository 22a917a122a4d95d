"""Half-form bundle classification: twist parity tests, minimal grading
eigenvalue r0, and the fundamental-group component order."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from . import ladder
from .catalog import TWIST_F0, TWIST_PLAIN, vacuum_label
from .jordan import JordanCase

Q = Fraction


@dataclass
class BundleModel:
    case_id: str
    twist: str               # TWIST_PLAIN or TWIST_F0
    alpha: int
    zeta0_exponents: tuple   # per-block exponents alpha*w_n - u_n
    r0: Fraction
    vacuum_label: str
    a: Fraction | None = None
    b: Fraction | None = None
    valid: bool | None = None


def alpha_of(case: JordanCase):
    """Smallest alpha >= 1 with alpha*w_n >= u_n for all blocks,
    where u_n = 2 + d_n*(q_n - 1)."""
    u = tuple(2 + b.d * (b.q - 1) for b in case.blocks)
    alpha = max(-(-un // b.w) for un, b in zip(u, case.blocks))
    return max(alpha, 1), u


def pi1_component_order(case: JordanCase) -> int:
    out = 0
    for b in case.blocks:
        out = gcd(out, b.w)
    return out


def classify_bundles(case: JordanCase, fill_spectral: bool = True) -> list:
    """0, 1, or 2 bundles.  The plain twist exists iff all exponents
    alpha*w_n - u_n are even; the shifted twist iff all (alpha+1)*w_n - u_n
    are even.  The two parity vectors differ by w, so at most one twist
    survives per parity class of w -- both can only appear when every w_n
    is even."""
    alpha, u = alpha_of(case)
    out = []
    for twist, aa in ((TWIST_PLAIN, alpha), (TWIST_F0, alpha + 1)):
        exps = tuple(aa * b.w - un for b, un in zip(case.blocks, u))
        if all(e % 2 == 0 for e in exps):
            bm = BundleModel(case.id, twist, alpha, exps, Q(aa, 2),
                             vacuum_label(case.id, twist))
            if fill_spectral:
                bm.valid, _ = ladder.bracket_valid(case, bm.r0)
                if bm.valid:
                    bm.a, bm.b = ladder.extract_ab(case, bm.r0)
            out.append(bm)
    return out
