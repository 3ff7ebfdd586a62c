"""Split bundles on products of projective spaces.

Cohomology of ``Omega^p(t)`` on ``P^m`` comes from Bott's formula, box products
are handled by Kunneth, and a split bundle is Ulrich for ``O(1, ..., 1)`` when
every twist ``E(-p)``, ``1 <= p <= dim``, is acyclic.

Two pipelines live here:

* :func:`nonbig_family_pipeline` builds
  ``[O(n-2) x T(-1)] + [O(n-1) x O]^(r-n+1)`` on ``P^1 x P^(n-1)`` and checks that
  it is Ulrich, that ``c_1^n > 0`` and that ``nu = r + 1``.
* :func:`p2p2_nonbig_pipeline` replays the integer bookkeeping that rules out
  non-big Ulrich bundles with ``c_1^4 > 0`` on ``P^2 x P^2``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import comb
from typing import Any

from .bundles import BundleClass, chern_of_twisted_forms, direct_sum, invert, is_big, nu, segre_dual, twist
from .ring import CohClass, MultiProjective, factor_class, hyperplane, integrate, pullback_factor

__all__ = [
    "Atom",
    "BoxBundle",
    "DeductionRecord",
    "DeductionError",
    "bott_cohomology",
    "box_cohomology",
    "cohomology",
    "is_ulrich_split",
    "box_chern",
    "nonbig_family_bundle",
    "nonbig_family_pipeline",
    "p2p2_nonbig_pipeline",
    "pullback_o2_bundle",
    "resolution_chern",
    "tangent_twist",
]


class DeductionError(RuntimeError):
    """A pipeline step produced something other than the expected chain of results."""


def bott_cohomology(m: int, p: int, t: int) -> list[tuple[int, int]]:
    """``[(q, h^q(P^m, Omega^p(t))) for q in 0..m]``."""
    if not 0 <= p <= m:
        raise ValueError(f"form degree {p} outside 0..{m}")
    dims = [0] * (m + 1)
    if t == 0:
        dims[p] = 1
    elif t > p:
        dims[0] = comb(t + m - p, t) * comb(t - 1, p)
    elif t < p - m:
        dims[m] = comb(-t + p, -t) * comb(-t - 1, m - p)
    return list(enumerate(dims))


@dataclass(frozen=True)
class Atom:
    """``Omega^p(t)`` on one factor; ``p = 0`` is the line bundle ``O(t)``."""

    p: int
    t: int

    def rank(self, m: int) -> int:
        return comb(m, self.p)

    def shifted(self, k: int) -> "Atom":
        return Atom(self.p, self.t + k)


def tangent_twist(m: int) -> Atom:
    """``T_{P^m}(-1) = Omega^{m-1}(m)``."""
    return Atom(m - 1, m)


@dataclass(frozen=True)
class BoxBundle:
    """A direct sum of box products; each summand has one atom per factor."""

    dims: tuple[int, ...]
    summands: tuple[tuple[Atom, ...], ...]

    def __post_init__(self):
        if not self.summands:
            raise ValueError("a box bundle needs at least one summand")
        for s in self.summands:
            if len(s) != len(self.dims):
                raise ValueError("each summand needs one atom per factor")
            for atom, m in zip(s, self.dims):
                if not 0 <= atom.p <= m:
                    raise ValueError(f"form degree {atom.p} outside 0..{m}")

    @property
    def rank(self) -> int:
        out = 0
        for s in self.summands:
            r = 1
            for atom, m in zip(s, self.dims):
                r *= atom.rank(m)
            out += r
        return out

    @property
    def dim(self) -> int:
        return sum(self.dims)

    def twisted(self, k: int) -> "BoxBundle":
        """Tensor with ``O(k, ..., k)``."""
        return BoxBundle(self.dims, tuple(tuple(a.shifted(k) for a in s) for s in self.summands))


def box_cohomology(dims: tuple[int, ...], atoms: tuple[Atom, ...]) -> list[int]:
    """Kunneth: ``h^q`` of a box product of atoms, ``q = 0..sum(dims)``."""
    out = [0] * (sum(dims) + 1)
    factors = [bott_cohomology(m, a.p, a.t) for m, a in zip(dims, atoms)]
    for combo in itertools.product(*factors):
        q = sum(qi for qi, _ in combo)
        v = 1
        for _, d in combo:
            v *= d
        out[q] += v
    return out


def cohomology(E: BoxBundle) -> list[int]:
    out = [0] * (E.dim + 1)
    for s in E.summands:
        for q, v in enumerate(box_cohomology(E.dims, s)):
            out[q] += v
    return out


def is_ulrich_split(E: BoxBundle) -> tuple[bool, dict[int, list[int]]]:
    """Ulrich test for ``O(1, ..., 1)``; the report maps ``p`` to the cohomology of ``E(-p)``."""
    report = {p: cohomology(E.twisted(-p)) for p in range(1, E.dim + 1)}
    return all(not any(h) for h in report.values()), report


def box_chern(E: BoxBundle) -> BundleClass:
    """Total Chern class of a split bundle on ``P^{a_1} x ... x P^{a_k}``."""
    ring = MultiProjective(E.dims)
    parts = []
    for s in E.summands:
        # build the box product factor by factor: pull back, then tensor with line bundles
        pieces = [(atom, i) for i, atom in enumerate(s) if atom.p not in (0, E.dims[i])]
        if len(pieces) > 1:
            raise NotImplementedError("box products with more than one non-line-bundle factor")
        lam = CohClass.zero(ring)
        if pieces:
            atom, i = pieces[0]
            base = chern_of_twisted_forms(E.dims[i], atom.p, 0)
            F = BundleClass(base.rank, pullback_factor(base.chern, ring, i))
            lam = lam + factor_class(ring, i).scale(atom.t)
        else:
            F = BundleClass(1, CohClass.one(ring))
        for j, atom in enumerate(s):
            if pieces and j == pieces[0][1]:
                continue
            # O(t) or Omega^{m}(t) = O(t - m - 1) on this factor
            deg = atom.t if atom.p == 0 else atom.t - E.dims[j] - 1
            lam = lam + factor_class(ring, j).scale(deg)
        parts.append(twist(F, lam))
    return direct_sum(*parts)


@dataclass
class DeductionRecord:
    name: str
    steps: list[dict[str, Any]] = field(default_factory=list)

    def step(self, name: str, equation: Any, outcome: Any, ok: bool = True):
        self.steps.append({"step": name, "equation": equation, "outcome": outcome, "ok": bool(ok)})

    @property
    def ok(self) -> bool:
        return all(s["ok"] for s in self.steps)

    def to_json(self) -> dict:
        return {"name": self.name, "steps": self.steps, "pass": self.ok}

    def transcript(self) -> str:
        lines = [f"## {self.name}"]
        for i, s in enumerate(self.steps, 1):
            mark = "ok" if s["ok"] else "FAILED"
            lines.append(f"{i}. {s['step']}: {s['equation']} => {s['outcome']} [{mark}]")
        lines.append(f"result: {'PASS' if self.ok else 'FAIL'}")
        return "\n".join(lines)


# -- Example: P^1 x P^(n-1) -------------------------------------------------------

def nonbig_family_bundle(n: int, r: int) -> BoxBundle:
    if n < 3 or r < n - 1:
        raise ValueError(f"need n >= 3 and r >= n - 1, got n={n}, r={r}")
    m = n - 1
    summands = [(Atom(0, n - 2), tangent_twist(m))]
    summands += [(Atom(0, n - 1), Atom(0, 0))] * (r - n + 1)
    return BoxBundle((1, m), tuple(summands))


def nonbig_family_pipeline(n: int, r: int) -> DeductionRecord:
    E = nonbig_family_bundle(n, r)
    rec = DeductionRecord(f"nonbig-family n={n} r={r}")
    ok, rep = is_ulrich_split(E)
    rec.step("ulrich vanishing", "H^i(E(-p)) = 0 for 1 <= p <= n", {str(p): h for p, h in rep.items()}, ok)
    ring = MultiProjective(E.dims)
    C = box_chern(E)
    if C.rank != r:
        raise DeductionError(f"rank bookkeeping: {C.rank} != {r}")
    top = integrate(C.c(1) ** n)
    rec.step("top self-intersection", "c1(E)^n", top, top > 0)
    v = nu(C)
    rec.step("numerical dimension", "nu(E) = r - 1 + max{k : s_k(E) != 0}", v, v == r + 1)
    d = integrate(hyperplane(ring) ** n)
    h0 = cohomology(E)[0]
    rec.step("sections", f"h0(E) = r * deg X = {r} * {d}", h0, h0 == r * d)
    return rec


# -- P^2 x P^2 ----------------------------------------------------------------------

def _p2p2():
    ring = MultiProjective((2, 2))
    return ring, factor_class(ring, 0), factor_class(ring, 1)


def _y_pairing(e: CohClass) -> tuple[int, int]:
    # codegree-2 classes on the hyperplane section Y, read through A|Y and B|Y
    ring, A, B = _p2p2()
    H = A + B
    return integrate(e * A * H), integrate(e * B * H)


def _coeffs2(e: CohClass) -> tuple[int, int, int]:
    return e["t1^2*t2^0"], e["t1^1*t2^1"], e["t1^0*t2^2"]


def resolution_chern(a: int, b: int, c: int, d: int) -> CohClass:
    """``c(G1(1)^b + G2(1)^a) / c(O(A)^d + O(B)^c)`` on ``P^2 x P^2``.

    ``G_i`` is ``Omega(1)`` pulled back from the ``i``-th factor and ``(1)`` is
    ``O(A + B)``; every term is a restriction from the ambient product.
    """
    ring, A, B = _p2p2()
    H = A + B
    omega1 = chern_of_twisted_forms(2, 1, 1)
    G1 = twist(BundleClass(2, pullback_factor(omega1.chern, ring, 0)), H)
    G2 = twist(BundleClass(2, pullback_factor(omega1.chern, ring, 1)), H)
    mid = (G1.chern ** b) * (G2.chern ** a)
    left = ((CohClass.one(ring) + A) ** d) * ((CohClass.one(ring) + B) ** c)
    return mid * invert(left)


def p2p2_nonbig_pipeline(r_range) -> DeductionRecord:
    """Integer steps excluding non-big Ulrich bundles with ``c_1^4 > 0`` on ``P^2 x P^2``.

    For each rank ``r``: the curve-section degree fixes ``det E = A + (2r-1)B``;
    rank and ``c_1`` of the resolution leave exactly two multiplicity vectors
    ``(a, b, c, d)``; the ``A^2`` coefficient of ``c_2`` (pinned to 1 by the
    restriction to a fiber) then forces ``r = 1`` or ``r = 2``, and the ``r = 2``
    bundle has ``s_4(E*) = 6 > 0``.
    """
    r_values = list(r_range)
    if not r_values or min(r_values) < 1 or max(r_values) > 16:
        raise ValueError("r_range must lie within 1..16")
    ring, A, B = _p2p2()
    H = A + B
    rec = DeductionRecord("p2xp2-nonbig")
    deg_curve = integrate(H ** 4)
    rec.step("curve section degree", "deg C = (A+B)^4", deg_curve, deg_curve == 6)
    f0, f1 = integrate(A * H ** 3), integrate(B * H ** 3)
    rec.step("degree form", "(A + beta B)(A+B)^3", f"{f0} + {f1} beta", (f0, f1) == (3, 3))
    g1c, g2c = resolution_chern(0, 1, 0, 0).part(1), resolution_chern(1, 0, 0, 0).part(1)
    g1 = (g1c["t1^1*t2^0"], g1c["t1^0*t2^1"])
    g2 = (g2c["t1^1*t2^0"], g2c["t1^0*t2^1"])
    rec.step("resolution c1", "c1(G1(1)), c1(G2(1))", f"{g1}, {g2}", (g1, g2) == ((1, 2), (2, 1)))
    survivors = []
    for r in r_values:
        num = deg_curve * r - f0
        beta, rem = divmod(num, f1)
        if rem:
            raise DeductionError(f"no integral beta for r={r}")
        rec.step(f"r={r} beta", f"{f0} + {f1} beta = {deg_curve * r}", beta, beta == 2 * r - 1)
        c1E = A + B.scale(beta)
        # rank and c1 of the resolution against det E = A + beta B; any solution has
        # a + b = 2r, so a, b, c, d <= 4r bounds the search
        target = (c1E["t1^1*t2^0"], c1E["t1^0*t2^1"])
        sols = []
        for a, b, c in itertools.product(range(4 * r + 1), repeat=3):
            d = 2 * a + 2 * b - c - r
            if d < 0:
                continue
            if (b * g1[0] + a * g2[0] - d, b * g1[1] + a * g2[1] - c) == target:
                sols.append((a, b, c, d))
        expected = sorted([(0, r, 1, r - 1), (1, r - 1, 0, r)])
        rec.step(
            f"r={r} solutions",
            "2a+2b = c+d+r, 1 = b+2a-d, 2r-1 = 2b+a-c",
            sols,
            sorted(sols) == expected and all(s[0] + s[2] == 1 for s in sols),
        )
        if sorted(sols) != expected:
            raise DeductionError(f"unexpected solution set for r={r}: {sols}")
        for branch, sol in enumerate(expected, 1):
            cE = resolution_chern(*sol)
            if cE.part(1) != c1E:
                raise DeductionError(f"c1 mismatch in branch {branch} for r={r}")
            c2 = cE.part(2)
            g, dl, ep = _coeffs2(c2)
            consistent = g == 1
            rec.step(
                f"r={r} branch {branch} c2",
                f"c2 = {g} A^2 + {dl} AB + {ep} B^2 (Y-pairing {_y_pairing(c2)}); A^2 coefficient must be 1",
                "consistent" if consistent else "excluded",
                True,
            )
            if consistent:
                survivors.append((r, branch, c2))
    # the two surviving cases
    found = sorted((r, br) for r, br, _ in survivors)
    rec.step("surviving cases", "A^2 coefficient = 1", found, all(
        (br == 1 and r == 1) or (br == 2 and r == 2) for r, br in found
    ))
    for r, br, c2 in survivors:
        if br == 1:
            rec.step("branch 1 endpoint", "r = 1", "rank one: not a non-big case (contradiction)", r == 1)
        else:
            E = BundleClass(2, CohClass.one(ring) + A + B.scale(3) + c2)
            coeffs = _coeffs2(c2)
            rec.step("branch 2 endpoint", "r = 2, det E = A + 3B", f"c2 = {coeffs[0]} A^2 + {coeffs[1]} AB + {coeffs[2]} B^2", coeffs == (1, 1, 4))
            big, w = is_big(E)
            s4 = integrate(segre_dual(E, 4))
            rec.step("branch 2 bigness", "s4(E*)", s4, s4 == 6 and big and w == s4)
    return rec


def pullback_o2_bundle(r: int) -> BoxBundle:
    """``p^* O(2)^r`` on ``P^2 x P^2``."""
    return BoxBundle((2, 2), ((Atom(0, 2), Atom(0, 0)),) * r)
