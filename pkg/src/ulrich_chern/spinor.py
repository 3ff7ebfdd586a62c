"""Chern classes of the spinor bundles on smooth quadrics.

On ``Q_{2m}`` the bundles ``S'`` and ``S''`` restrict to an ``m``-plane as a sum
of twisted forms: on a plane of one family ``S'`` is ``(+) Omega^{2i+1}(2i+1)``
and ``S''`` is ``(+) Omega^{2i}(2i)``; on the other family the roles swap.  Our
labeling puts the odd forms of ``S'`` on planes of class ``l = b_m``; with it
``c_2(S') = l`` on ``Q_4`` and ``c(S') = 1 - l'`` on ``Q_2``.

Restriction fixes ``c_i`` for ``i <= m``.  Above the middle we use

* ``c(S') c(S''(1)) = 1`` (the Ulrich sequence ``0 -> S' -> O^N -> S''(1) -> 0``),
* ``S'* = S''(1)`` when ``m`` is odd and ``S'* = S'(1)`` when ``m`` is even,
* ``c_i(S') = c_i(S'')`` for ``i != m`` (an automorphism swaps the families).

The dual identity gives the odd ``c_j``; the even ones come from
``c(S') c(S'*) = 1`` for odd ``m`` and from the Ulrich sequence for even ``m``
(where ``c(S') c(S'*)`` is not 1).  Each step divides by 2 and the division is
checked to be exact.

For odd ``n`` the bundle ``S`` on ``Q_n`` is the restriction of ``S'`` from
``Q_{n+1}``.  The Ulrich spinor bundles are the twists ``S(1)``, ``S'(1)``,
``S''(1)``.
"""
from __future__ import annotations

import enum
from functools import lru_cache
from math import comb

from .bundles import BundleClass, chern_of_twisted_forms, direct_sum, dual, invert, nu, twist
from .report import VerificationReport
from .ring import (
    FAMILY_L,
    FAMILY_LP,
    CohClass,
    format_class,
    MultiProjective,
    Quadric,
    hyperplane,
    restrict_to_hyperplane_quadric,
    restrict_to_linear,
)

__all__ = [
    "SpinorKind",
    "SpinorError",
    "n_max",
    "spinor_rank",
    "spinor_chern",
    "ulrich_spinor",
    "spinor_nu_table",
    "spinor_identities_check",
    "form_sum",
]


class SpinorKind(str, enum.Enum):
    S = "s"
    SPRIME = "sprime"
    SDOUBLEPRIME = "sdoubleprime"

    def swapped(self) -> "SpinorKind":
        return {SpinorKind.SPRIME: SpinorKind.SDOUBLEPRIME, SpinorKind.SDOUBLEPRIME: SpinorKind.SPRIME}.get(self, self)


class SpinorError(ArithmeticError):
    """Internal inconsistency in the spinor computation (never bad user input)."""


def n_max() -> int:
    from .config import load_config

    return load_config().n_max


def spinor_rank(n: int) -> int:
    return 2 ** ((n - 1) // 2)


def _check_kind(n: int, kind: SpinorKind):
    kind = SpinorKind(kind)
    if (n % 2 == 1) != (kind is SpinorKind.S):
        raise ValueError(f"spinor kind {kind.value} does not exist on Q{n}")
    return kind


def form_sum(m: int, parity: int) -> BundleClass:
    """``(+) Omega^p(p)`` on ``P^m`` over ``p = parity, parity + 2, ...``."""
    return direct_sum(*(chern_of_twisted_forms(m, p, p) for p in range(parity, m + 1, 2)))


def _halve(x: CohClass, what: str) -> CohClass:
    if any(c % 2 for c in x.coeffs):
        raise SpinorError(f"{what} is not divisible by 2: {x!r}")
    return CohClass(x.ring, tuple(c // 2 for c in x.coeffs))


def _restriction_data(n: int) -> tuple[list[CohClass], list[CohClass]]:
    """``c_i(S')`` and ``c_i(S'')`` for ``i <= m`` from the two plane families."""
    m = n // 2
    Q = Quadric(n)
    h = hyperplane(Q)
    odd, even = form_sum(m, 1), form_sum(m, 0)
    # S' gives odd forms on family l, even forms on family l'; S'' the other way
    obs = {
        (SpinorKind.SPRIME, FAMILY_L): odd,
        (SpinorKind.SPRIME, FAMILY_LP): even,
        (SpinorKind.SDOUBLEPRIME, FAMILY_L): even,
        (SpinorKind.SDOUBLEPRIME, FAMILY_LP): odd,
    }
    l, lp = CohClass.basis(Q, f"b{m}"), CohClass.basis(Q, f"bp{m}")
    # how l and l' restrict to the two families, as t^m coefficients
    mat = [
        [restrict_to_linear(n, fam, x).coeffs[m] for fam in (FAMILY_L, FAMILY_LP)]
        for x in (l, lp)
    ]
    det = mat[0][0] * mat[1][1] - mat[0][1] * mat[1][0]
    if abs(det) != 1:
        raise SpinorError(f"middle restriction matrix {mat} is not unimodular")
    out = {}
    for kind in (SpinorKind.SPRIME, SpinorKind.SDOUBLEPRIME):
        rL = obs[kind, FAMILY_L].chern.coeffs
        rLP = obs[kind, FAMILY_LP].chern.coeffs
        cs = [CohClass.one(Q)]
        for i in range(1, m):
            if rL[i] != rLP[i]:
                raise SpinorError(f"families disagree on c_{i} of {kind.value} on Q{n}")
            cs.append((h ** i).scale(rL[i]))
        # solve (alpha, beta) . mat = (rL[m], rLP[m])
        y0, y1 = rL[m], rLP[m]
        alpha = (y0 * mat[1][1] - y1 * mat[1][0]) * det
        beta = (y1 * mat[0][0] - y0 * mat[0][1]) * det
        cs.append(l.scale(alpha) + lp.scale(beta))
        out[kind] = cs
    return out[SpinorKind.SPRIME], out[SpinorKind.SDOUBLEPRIME]


def _twist_part(cs: list[CohClass], rank: int, h: CohClass, j: int, upto: int) -> CohClass:
    # sum_{i < upto} C(rank - i, j - i) c_i h^{j-i}: codegree-j part of c(E(1)) from c_0..c_{upto-1}
    out = CohClass.zero(h.ring)
    for i in range(min(upto, j + 1)):
        if not cs[i].is_zero() and i <= rank:
            out = out + (cs[i] * h ** (j - i)).scale(comb(rank - i, j - i))
    return out


@lru_cache(maxsize=None)
def _even_spinors(n: int) -> tuple[CohClass, CohClass]:
    if n % 2 or n < 2:
        raise ValueError(f"expected an even quadric dimension, got {n}")
    m = n // 2
    Q = Quadric(n)
    h = hyperplane(Q)
    R = spinor_rank(n)
    c1, c2 = _restriction_data(n)  # lists for S', S''
    for j in range(m + 1, n + 1):
        # partner T with S'* = T(1)
        T = c2 if m % 2 else c1
        if j % 2:
            val = -_halve(_twist_part(T, R, h, j, j), f"odd recursion c_{j} on Q{n}")
        elif m % 2:
            k = j // 2
            acc = (c1[k] * c1[k]).scale((-1) ** (k + 1))
            acc2 = CohClass.zero(Q)
            for i in range(1, k):
                acc2 = acc2 + (c1[i] * c1[j - i]).scale((-1) ** (i + 1))
            val = _halve(acc, f"even recursion c_{j} on Q{n}") + acc2
        else:
            # c_j(S') + c_j(S''(1)) + sum_{0<i<j} c_i(S') c_{j-i}(S''(1)) = 0
            tw = [CohClass.one(Q)] + [_twist_part(c2, R, h, k, k + 1) for k in range(1, j)]
            acc = _twist_part(c2, R, h, j, j)
            for i in range(1, j):
                acc = acc + c1[i] * tw[j - i]
            val = -_halve(acc, f"even recursion c_{j} on Q{n}")
        c1.append(val)
        c2.append(val)
    tot1 = sum(c1[1:], c1[0])
    tot2 = sum(c2[1:], c2[0])
    return tot1, tot2


@lru_cache(maxsize=None)
def _spinor(n: int, kind: SpinorKind, ulrich_twist: bool) -> BundleClass:
    R = spinor_rank(n)
    if kind is SpinorKind.S:
        S = restrict_to_hyperplane_quadric(_even_spinors(n + 1)[0])
        E = BundleClass(R, S)
    else:
        cp, cpp = _even_spinors(n)
        E = BundleClass(R, cp if kind is SpinorKind.SPRIME else cpp)
    if ulrich_twist:
        E = twist(E, hyperplane(E.ring))
    return E


def spinor_chern(n: int, kind: SpinorKind | str, ulrich_twist: bool = False) -> BundleClass:
    """Chern class of ``S``, ``S'`` or ``S''`` on ``Q_n`` (``S(1)`` etc. with ``ulrich_twist``)."""
    if not isinstance(n, int) or not 2 <= n <= n_max():
        raise ValueError(f"n={n!r} outside the supported range 2..{n_max()}")
    kind = _check_kind(n, kind)
    return _spinor(n, kind, bool(ulrich_twist))


def ulrich_spinor(n: int, kind: SpinorKind | str) -> BundleClass:
    return spinor_chern(n, kind, ulrich_twist=True)


def spinor_nu_table(n_lo: int, n_hi: int) -> list[tuple[int, int]]:
    """``(n, nu)`` of the Ulrich spinor bundle(s) on ``Q_n`` for ``n_lo <= n <= n_hi``."""
    if not 2 <= n_lo <= n_hi <= n_max():
        raise ValueError(f"range {n_lo}..{n_hi} outside 2..{n_max()}")
    out = []
    for n in range(n_lo, n_hi + 1):
        if n % 2:
            out.append((n, nu(ulrich_spinor(n, SpinorKind.S))))
        else:
            a = nu(ulrich_spinor(n, SpinorKind.SPRIME))
            b = nu(ulrich_spinor(n, SpinorKind.SDOUBLEPRIME))
            if a != b:
                raise SpinorError(f"nu(S') != nu(S'') on Q{n}: {a} vs {b}")
            out.append((n, a))
    return out


def spinor_identities_check(n: int) -> VerificationReport:
    """Check the identities the recursion relies on, in every codegree."""
    if n % 2 or not 2 <= n <= n_max():
        raise ValueError(f"identities are checked on even quadrics 2..{n_max()}, got {n}")
    m = n // 2
    Q = Quadric(n)
    h = hyperplane(Q)
    Sp = spinor_chern(n, SpinorKind.SPRIME)
    Spp = spinor_chern(n, SpinorKind.SDOUBLEPRIME)
    one = CohClass.one(Q)
    rep = VerificationReport(f"spinor-identities-Q{n}")
    partner, pname = (Spp, "S''") if m % 2 else (Sp, "S'")
    rep.add(
        "ulrich-sequence",
        expected="1",
        computed=format_class(Sp.chern * twist(Spp, h).chern),
        ok=Sp.chern * twist(Spp, h).chern == one,
        tag="DERIVED",
        note="c(S') c(S''(1)) = 1",
    )
    rep.add(
        "dual-twist",
        expected=f"c({pname}(1))",
        computed=format_class(dual(Sp).chern - twist(partner, h).chern),
        ok=dual(Sp).chern == twist(partner, h).chern,
        tag="PAPER" if m % 2 else "DERIVED",
        note=f"c(S'*) = c({pname}(1))",
    )
    if m % 2:
        prod = Sp.chern * dual(Sp).chern
        rep.add(
            "self-dual-product",
            expected="1",
            computed=format_class(prod),
            ok=prod == one,
            tag="PAPER",
            note="c(S') c(S'*) = 1",
        )
    same = all(Sp.c(i) == Spp.c(i) for i in range(n + 1) if i != m)
    rep.add(
        "off-middle-agreement",
        expected="c_i(S') = c_i(S'') for i != m",
        computed="equal" if same else "differ",
        ok=same,
        tag="PAPER",
    )
    seg = invert(twist(Sp, h).chern) == Spp.chern
    rep.add(
        "segre-of-ulrich-twist",
        expected="s(S'(1)) = c(S'')",
        computed="equal" if seg else "differ",
        ok=seg,
        tag="PAPER",
    )
    return rep

