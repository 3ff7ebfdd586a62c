"""Independent oracles for Chern classes of twisted forms and Bott cohomology.

Neither oracle shares code with the engine: the first goes through the Chern
character of the Koszul resolution and Newton's identities over the rationals,
the second computes sections as kernels of explicit Koszul matrices mod a prime
and propagates them through the long exact sequences of the Euler sequence.
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from math import comb

import numpy as np

PRIME = 32003


def forms_chern_via_character(m: int, p: int, t: int) -> list[int]:
    """``c_0..c_m`` of ``Omega^p(t)`` on ``P^m`` as multiples of ``H^k``.

    ``ch(Omega^p(t)) = sum_j (-1)^j C(m+1, p-j) exp((t-p+j) H)`` from the
    resolution of ``Omega^p`` by ``Lambda^{p-j} V (x) O(j-p)``.
    """
    # power sums p_k = k! ch_k
    power = [Fraction(0)] * (m + 1)
    for j in range(p + 1):
        mult = (-1) ** j * comb(m + 1, p - j)
        a = t - p + j
        for k in range(m + 1):
            power[k] += mult * Fraction(a) ** k
    rank = power[0]
    e = [Fraction(1)] + [Fraction(0)] * m
    for k in range(1, m + 1):
        e[k] = sum((-1) ** (i - 1) * e[k - i] * power[i] for i in range(1, k + 1)) / k
    assert rank == comb(m, p)
    assert all(x.denominator == 1 for x in e)
    return [int(x) for x in e]


def line_bundle_cohomology(m: int, k: int) -> list[int]:
    out = [0] * (m + 1)
    if k >= 0:
        out[0] = comb(m + k, m)
    elif k <= -m - 1:
        out[m] = comb(-k - 1, m)
    return out


def _monomials(nvars: int, deg: int):
    if deg < 0:
        return []
    return [c for c in itertools.product(range(deg + 1), repeat=nvars) if sum(c) == deg]


def _rank_mod_p(mat: np.ndarray) -> int:
    a = mat.copy() % PRIME
    rows, cols = a.shape
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if a[i, c]), None)
        if piv is None:
            continue
        a[[r, piv]] = a[[piv, r]]
        inv = pow(int(a[r, c]), PRIME - 2, PRIME)
        a[r] = (a[r] * inv) % PRIME
        for i in range(rows):
            if i != r and a[i, c]:
                a[i] = (a[i] - a[i, c] * a[r]) % PRIME
        r += 1
        if r == rows:
            break
    return r


def koszul_matrix(m: int, p: int, d: int) -> np.ndarray:
    """Contraction ``Lambda^p V (x) S^d -> Lambda^{p-1} V (x) S^{d+1}`` on ``m+1`` variables."""
    nv = m + 1
    src = [(I, a) for I in itertools.combinations(range(nv), p) for a in _monomials(nv, d)]
    dst = {(J, b): k for k, (J, b) in enumerate(
        (J, b) for J in itertools.combinations(range(nv), p - 1) for b in _monomials(nv, d + 1)
    )}
    mat = np.zeros((len(dst), len(src)), dtype=np.int64)
    for col, (I, a) in enumerate(src):
        for pos, i in enumerate(I):
            J = I[:pos] + I[pos + 1:]
            b = list(a)
            b[i] += 1
            mat[dst[(J, tuple(b))], col] += (-1) ** pos
    return mat


@lru_cache(maxsize=None)
def h0_forms(m: int, p: int, t: int) -> int:
    """``h^0(Omega^p(t))`` as the kernel of the Koszul contraction on sections."""
    if p == 0:
        return line_bundle_cohomology(m, t)[0]
    d = t - p
    if d < 0:
        return 0
    mat = koszul_matrix(m, p, d)
    return mat.shape[1] - _rank_mod_p(mat)


@lru_cache(maxsize=None)
def forms_cohomology(m: int, p: int, t: int) -> list[int]:
    """All ``h^q(Omega^p(t))`` from ``0 -> Omega^p(t) -> Lambda^p V (x) O(t-p) -> Omega^{p-1}(t) -> 0``."""
    if p == 0:
        return line_bundle_cohomology(m, t)
    out = [0] * (m + 1)
    out[0] = h0_forms(m, p, t)
    # Serre duality: Omega^p(t)^dual (x) omega = Omega^{m-p}(-t)
    out[m] = h0_forms(m, m - p, -t)
    if m >= 2:
        line = line_bundle_cohomology(m, t - p)
        out[1] = forms_cohomology(m, p - 1, t)[0] - (comb(m + 1, p) * line[0] - out[0])
        for q in range(2, m):
            out[q] = forms_cohomology(m, p - 1, t)[q - 1]
    return out

