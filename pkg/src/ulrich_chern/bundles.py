"""Chern and Segre calculus for formal bundle classes.

A :class:`BundleClass` is a rank together with a total Chern class.  Segre
classes follow the convention ``s(E) c(E) = 1``; with it, for a globally
generated bundle ``E`` of rank ``r``

    nu(E) = r - 1 + max{k : s_k(E) != 0}

and ``E`` is big exactly when ``s_n(E*) = (-1)^n s_n(E)`` has positive degree.

Global generation cannot be read off Chern data.  :func:`nu`, :func:`is_big`
and :func:`sum_big_certificate` evaluate their formulas for any input; whether
the number means anything is the caller's business.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Mapping

from .ring import (
    CohClass,
    MultiProjective,
    RingDescriptor,
    class_from_json,
    hyperplane,
    integrate,
    ring_from_json,
    ring_to_json,
)

__all__ = [
    "BundleClass",
    "CertificateError",
    "trivial",
    "line_bundle",
    "dual",
    "twist",
    "whitney_sum",
    "direct_sum",
    "segre",
    "segre_dual",
    "nu",
    "is_big",
    "sum_big_certificate",
    "chern_of_twisted_forms",
    "bundle_to_json",
    "bundle_from_json",
]


class CertificateError(ArithmeticError):
    """A Segre product that must be nonnegative for globally generated bundles was negative."""


@dataclass(frozen=True)
class BundleClass:
    rank: int
    chern: CohClass

    def __post_init__(self):
        if not isinstance(self.rank, int) or self.rank < 0:
            raise ValueError(f"rank must be a nonnegative integer, got {self.rank!r}")
        c = self.chern
        unit = c.part(0)
        if unit != CohClass.one(c.ring):
            raise ValueError("total Chern class must start with 1")
        if c.top_degree() > min(self.rank, c.ring.dim):
            raise ValueError(f"Chern class has a component in codegree {c.top_degree()} above rank {self.rank}")

    @property
    def ring(self) -> RingDescriptor:
        return self.chern.ring

    def c(self, i: int) -> CohClass:
        return self.chern.part(i)

    def __repr__(self):
        return f"BundleClass(rank={self.rank}, c={self.chern!r})"


def trivial(ring: RingDescriptor, rank: int = 1) -> BundleClass:
    return BundleClass(rank, CohClass.one(ring))


def line_bundle(c1: CohClass) -> BundleClass:
    if not c1.is_homogeneous(1):
        raise ValueError("first Chern class of a line bundle must have codegree 1")
    return BundleClass(1, CohClass.one(c1.ring) + c1)


def dual(E: BundleClass) -> BundleClass:
    c = E.chern
    return BundleClass(E.rank, CohClass(c.ring, tuple(-a if d % 2 else a for a, d in zip(c.coeffs, c.degrees))))


def twist(E: BundleClass, lam: CohClass) -> BundleClass:
    """Chern class of ``E`` tensored with the line bundle of first Chern class ``lam``."""
    if lam.ring != E.ring:
        raise ValueError(f"ring mismatch: {E.ring} vs {lam.ring}")
    if not lam.is_homogeneous(1):
        raise ValueError("twisting class must be homogeneous of codegree 1")
    r, dim = E.rank, E.ring.dim
    powers = [CohClass.one(E.ring)]
    for _ in range(dim):
        powers.append(powers[-1] * lam)
    parts = [E.c(i) for i in range(min(r, dim) + 1)]
    out = CohClass.one(E.ring)
    for k in range(1, min(r, dim) + 1):
        for i in range(k + 1):
            if not parts[i].is_zero():
                out = out + (parts[i] * powers[k - i]).scale(comb(r - i, k - i))
    return BundleClass(r, out)


def whitney_sum(E: BundleClass, F: BundleClass) -> BundleClass:
    if E.ring != F.ring:
        raise ValueError(f"ring mismatch: {E.ring} vs {F.ring}")
    return BundleClass(E.rank + F.rank, E.chern * F.chern)


def direct_sum(*bundles: BundleClass, ring: RingDescriptor | None = None) -> BundleClass:
    """Whitney sum of any number of summands; ``ring`` is needed only when there are none."""
    if not bundles:
        if ring is None:
            raise ValueError("empty direct sum needs an explicit ring")
        return trivial(ring, 0)
    out = bundles[0]
    for F in bundles[1:]:
        out = whitney_sum(out, F)
    return out


def invert(c: CohClass) -> CohClass:
    """Inverse of a class with constant term 1, solved degree by degree."""
    ring = c.ring
    one = CohClass.one(ring)
    if c.part(0) != one:
        raise ValueError("only classes with constant term 1 are invertible here")
    parts = [c.part(i) for i in range(ring.dim + 1)]
    s = [one]
    for k in range(1, ring.dim + 1):
        acc = CohClass.zero(ring)
        for i in range(1, k + 1):
            if not parts[i].is_zero():
                acc = acc + parts[i] * s[k - i]
        s.append(-acc)
    out = CohClass.zero(ring)
    for x in s:
        out = out + x
    return out


def segre(E: BundleClass) -> CohClass:
    return invert(E.chern)


def segre_dual(E: BundleClass, i: int) -> CohClass:
    """``s_i(E*) = (-1)^i s_i(E)`` as a homogeneous class."""
    if not 0 <= i <= E.ring.dim:
        raise ValueError(f"codegree {i} outside 0..{E.ring.dim}")
    s = segre(E).part(i)
    return -s if i % 2 else s


def nu(E: BundleClass) -> int:
    """Numerical dimension of a globally generated bundle from its Segre classes."""
    s = segre(E)
    return E.rank - 1 + max(k for k in range(E.ring.dim + 1) if not s.part(k).is_zero())


def is_big(E: BundleClass) -> tuple[bool, int]:
    """Bigness of a globally generated bundle; the witness is ``deg s_n(E*)``."""
    w = integrate(segre_dual(E, E.ring.dim))
    return w > 0, w


def sum_big_certificate(E: BundleClass, F: BundleClass) -> tuple[bool, list[int]]:
    """Terms ``deg s_i(E*) s_{n-i}(F*)`` deciding bigness of ``E + F``.

    For globally generated ``E`` and ``F`` every term is nonnegative and the
    sum is big iff one of them is positive.  A negative term raises
    :class:`CertificateError`.
    """
    if E.ring != F.ring:
        raise ValueError(f"ring mismatch: {E.ring} vs {F.ring}")
    n = E.ring.dim
    sE = [segre_dual(E, i) for i in range(n + 1)]
    sF = [segre_dual(F, i) for i in range(n + 1)]
    terms = [integrate(sE[i] * sF[n - i]) for i in range(n + 1)]
    bad = [i for i, t in enumerate(terms) if t < 0]
    if bad:
        raise CertificateError(f"negative Segre products at i={bad}: {terms}")
    return any(t > 0 for t in terms), terms


def chern_of_twisted_forms(m: int, p: int, t: int) -> BundleClass:
    """Chern class of ``Omega^p(t)`` on ``P^m``.

    Built from ``0 -> Omega^p(p) -> Lambda^p V (x) O -> Omega^{p-1}(p) -> 0``
    starting at ``Omega^0 = O``, then twisted by ``(t - p) H``.
    """
    if not 0 <= p <= m:
        raise ValueError(f"form degree {p} outside 0..{m}")
    return twist(_forms(m, p), hyperplane(MultiProjective((m,))).scale(t - p))


def _forms(m: int, p: int) -> BundleClass:
    # Chern class of Omega^p(p) on P^m
    ring = MultiProjective((m,))
    H = hyperplane(ring)
    E = trivial(ring, 1)
    for q in range(1, p + 1):
        prev = twist(E, H)  # Omega^{q-1}(q)
        E = BundleClass(comb(m, q), invert(prev.chern))
    return E


# -- JSON ----------------------------------------------------------------------

def bundle_to_json(E: BundleClass) -> dict:
    return {"ring": ring_to_json(E.ring), "rank": E.rank, "chern": E.chern.to_dict()}


def bundle_from_json(data: Mapping) -> BundleClass:
    ring = ring_from_json(data["ring"])
    rank = data["rank"]
    if isinstance(rank, bool) or not isinstance(rank, int):
        raise TypeError("rank must be an integer")
    return BundleClass(rank, class_from_json({"ring": ring_to_json(ring), "coeffs": data["chern"]}))
