"""Exact rising factorials and the two series: reproducing-kernel
coefficients and the one-parameter matrix coefficient partial sums."""

from __future__ import annotations

from fractions import Fraction

Q = Fraction


def pochhammer(x, n: int) -> Fraction:
    if n < 0:
        raise ValueError("n must be >= 0")
    out = Q(1)
    x = Q(x)
    for k in range(n):
        out *= x + k
    return out


def kernel_coefficients(r0, a, b, n_max: int) -> list:
    """p_n = (r0+1)_n / (n! (a)_n (b)_n) for n = 0..n_max."""
    r0, a, b = Q(r0), Q(a), Q(b)
    if r0 <= 0 or a <= 0 or b <= 0:
        raise ValueError("parameters must be positive")
    out = [Q(1)]
    for n in range(1, n_max + 1):
        # ratio p_n / p_{n-1}
        k = n - 1
        out.append(out[-1] * (r0 + 1 + k) / ((a + k) * (b + k) * (k + 1)))
    return out


def matrix_coefficient(r0, a, b, y, n_terms: int):
    """(partial sum, remainder bound) of sum_n c_n (-y)^n with
    c_n = (a)_n (b)_n / ((1+r0)_n n!), summed for n <= n_terms.

    Requires |y| < 1.  The bound is geometric: for n > N the term ratio
    is at most |y| * max(1, (N+a)/(N+1)) * max(1, (N+b)/(N+1)); when that
    is >= 1 no finite bound is returned (None).
    """
    r0, a, b, y = Q(r0), Q(a), Q(b), Q(y)
    if abs(y) >= 1:
        raise ValueError("series form needs |y| < 1")
    total = Q(0)
    term = Q(1)  # c_n * (-y)^n
    for n in range(n_terms + 1):
        total += term
        term *= (a + n) * (b + n) / ((1 + r0 + n) * (n + 1)) * (-y)
    # `term` is now the first omitted term (n = n_terms + 1)
    nn = n_terms + 1
    ratio = abs(y) * max(Q(1), (nn + a) / (nn + 1)) * max(Q(1), (nn + b) / (nn + 1))
    bound = abs(term) / (1 - ratio) if ratio < 1 else None
    return total, bound
