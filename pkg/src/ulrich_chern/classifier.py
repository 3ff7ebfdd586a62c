"""Non-big Ulrich bundles on quadrics.

Every Ulrich bundle on ``Q_n`` is a sum of Ulrich spinor bundles, so a model
is a pair of multiplicities ``(a, b)`` of ``S'(1)`` and ``S''(1)`` (even ``n``)
or a single multiplicity ``a`` of ``S(1)`` (odd ``n``, with ``b = 0``).
Bigness of a sum is decided by the Segre products
``deg s_i(E*) s_{n-i}(F*)``, all nonnegative for globally generated summands.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import factorial

from .bundles import BundleClass, direct_sum, is_big, nu, sum_big_certificate, trivial
from .report import VerificationReport
from .ring import Quadric
from .spinor import SpinorKind, n_max, spinor_rank, ulrich_spinor

__all__ = [
    "UlrichModel",
    "ClassificationRow",
    "FANO_FACTS",
    "model_class",
    "evaluate_model",
    "enumerate_models",
    "classify_nonbig",
    "infinite_family_note",
    "nu_of_model",
    "line_criterion_forces_big",
    "linear_space_count_checks",
    "NONBIG_QUADRIC_MODELS",
    "expected_nonbig",
    "nonbig_table_report",
]

# Dimension counts of families of linear spaces, used as inputs.
FANO_FACTS = {
    "dim F1(Q_n, x)": "n - 2",
    "h(E, x) for a spinor on Q_n": "2^floor((n-3)/2)",
    "dim Fm(Q_2m, x)": "m(m-1)/2",
    "dim Fm(G(1, m+1), x)": "1",
    "deg G(1, m+1)": "(2m)! / (m! (m+1)!)",
}

# Non-big Ulrich bundles on Q_n as (a, b); n = 2 is the infinite family a = 0 or b = 0.
NONBIG_QUADRIC_MODELS = {
    3: {(1, 0)},
    4: {(1, 0), (0, 1), (1, 1)},
    5: {(1, 0)},
    6: {(1, 0), (0, 1), (2, 0), (0, 2)},
    7: set(),
    8: set(),
    9: set(),
    10: {(1, 0), (0, 1)},
}


@dataclass(frozen=True, order=True)
class UlrichModel:
    n: int
    a: int
    b: int = 0

    def __post_init__(self):
        if self.a < 0 or self.b < 0 or self.a + self.b < 1:
            raise ValueError(f"multiplicities must be >= 0 with a + b >= 1, got ({self.a}, {self.b})")
        if self.n % 2 and self.b:
            raise ValueError(f"Q{self.n} has a single spinor bundle; b must be 0")
        if not 2 <= self.n <= n_max():
            raise ValueError(f"n={self.n} outside 2..{n_max()}")

    @property
    def rank(self) -> int:
        return (self.a + self.b) * spinor_rank(self.n)

    @property
    def is_spinor(self) -> bool:
        return self.a + self.b == 1

    def summands(self) -> list[BundleClass]:
        if self.n % 2:
            return [ulrich_spinor(self.n, SpinorKind.S)] * self.a
        return [ulrich_spinor(self.n, SpinorKind.SPRIME)] * self.a + [
            ulrich_spinor(self.n, SpinorKind.SDOUBLEPRIME)
        ] * self.b

    def label(self) -> str:
        if self.n % 2:
            return "S" if self.a == 1 else f"S^{self.a}"
        parts = []
        for mult, name in ((self.a, "S'"), (self.b, "S''")):
            if mult == 1:
                parts.append(name)
            elif mult:
                parts.append(f"({name})^{mult}")
        return " + ".join(parts)


@dataclass(frozen=True)
class ClassificationRow:
    model: UlrichModel
    rank: int
    nu: int
    is_big: bool
    witness: list[int] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "n": self.model.n,
            "a": self.model.a,
            "b": self.model.b,
            "rank": self.rank,
            "nu": self.nu,
            "big": self.is_big,
            "witness": list(self.witness),
        }


def model_class(m: UlrichModel) -> BundleClass:
    return direct_sum(*m.summands())


def evaluate_model(m: UlrichModel) -> ClassificationRow:
    """Rank, nu, bigness and Segre-product witness of one model.

    The witness splits ``E`` as (first summand) + (rest) and lists the
    ``n + 1`` products; they sum to ``deg s_n(E*)``.
    """
    parts = m.summands()
    first = parts[0]
    rest = direct_sum(*parts[1:], ring=Quadric(m.n)) if len(parts) > 1 else trivial(Quadric(m.n), 0)
    big, terms = sum_big_certificate(first, rest)
    E = direct_sum(*parts)
    big2, w = is_big(E)
    if big != big2 or w != sum(terms):
        raise AssertionError(f"certificate and direct bigness disagree on {m}: {terms} vs {w}")
    return ClassificationRow(m, E.rank, nu(E), big, terms)


def enumerate_models(n: int, r_max: int) -> list[UlrichModel]:
    """All models of rank at most ``r_max``, ordered by rank then ``(a, b)``."""
    R = spinor_rank(n)
    top = r_max // R
    out = []
    for total in range(1, top + 1):
        if n % 2:
            out.append(UlrichModel(n, total, 0))
        else:
            out.extend(UlrichModel(n, a, total - a) for a in range(total + 1))
    return out


def classify_nonbig(n: int, r_max: int) -> list[ClassificationRow]:
    """Non-big Ulrich bundles on ``Q_n`` of rank at most ``r_max``."""
    if not isinstance(n, int) or not 2 <= n <= n_max():
        raise ValueError(f"n={n!r} outside 2..{n_max()}")
    if r_max < spinor_rank(n):
        raise ValueError(f"r_max={r_max} is below the spinor rank {spinor_rank(n)} on Q{n}")
    rows = [evaluate_model(m) for m in enumerate_models(n, r_max)]
    nonbig = [r for r in rows if not r.is_big]
    keys = {(r.model.a, r.model.b) for r in nonbig}
    # a big summand makes the whole sum big, so non-big models are closed under removing summands
    for a, b in keys:
        for sub in ((a - 1, b), (a, b - 1)):
            if min(sub) >= 0 and sum(sub) >= 1 and sub not in keys:
                raise AssertionError(f"non-big set on Q{n} is not downward closed at {(a, b)}")
    return nonbig


def infinite_family_note(n: int) -> str | None:
    if n == 2:
        return "Q2: every (S')^r and (S'')^r is non-big (a = 0 or b = 0); the list above is truncated at r_max"
    return None


def nu_of_model(m: UlrichModel) -> int:
    return nu(model_class(m))


def line_criterion_forces_big(n: int) -> bool:
    """True when ``n - 2 + 2^floor((n-3)/2) < 2^floor((n-1)/2)``.

    A non-big rank ``r`` Ulrich bundle needs ``dim F1(X, x) + h(E, x) >= r``; on
    ``Q_n`` a spinor has ``dim F1 = n - 2`` and ``h = 2^floor((n-3)/2)``, so when
    the inequality fails the spinors (and every Ulrich bundle) are big.
    """
    if n < 3:
        raise ValueError("the line criterion needs n >= 3")
    return n - 2 + 2 ** ((n - 3) // 2) < 2 ** ((n - 1) // 2)


def grassmannian_degree(m: int) -> int:
    return factorial(2 * m) // (factorial(m) * factorial(m + 1))


def linear_space_count_checks(m_max: int) -> VerificationReport:
    """Dimension counts ruling out small numerical dimension on Q_2m and G(1, m+1)."""
    if m_max < 3:
        raise ValueError("m_max must be at least 3")
    rep = VerificationReport("linear-space-counts")
    for m in range(2, m_max + 1):
        lhs, rhs = m * (m - 1) // 2, 2 ** (m - 1) - 1
        holds = lhs >= rhs
        rep.add(
            f"quadric-m{m}",
            expected=m in (2, 3),
            computed=holds,
            tag="PAPER" if m <= 4 else "DERIVED",
            note=f"dim Fm(Q{2 * m},x) = {lhs} vs r - 1 = {rhs}",
        )
    for m in range(3, m_max + 1):
        d = grassmannian_degree(m)
        rep.add(
            f"grassmannian-m{m}",
            expected=False,
            computed=m + 1 == 2 * d - 1,
            tag="DERIVED",
            note=f"d = {d}: m + 1 = {m + 1}, 2d - 1 = {2 * d - 1}",
        )
    return rep


def expected_nonbig(n: int, r_max: int) -> set[tuple[int, int]]:
    """Known non-big models on ``Q_n`` of rank at most ``r_max``.

    ``n = 2`` is the family with ``a = 0`` or ``b = 0``; from ``n = 11`` on
    every Ulrich bundle is big.
    """
    R = spinor_rank(n)
    top = r_max // R
    if n == 2:
        return {(k, 0) for k in range(1, top + 1)} | {(0, k) for k in range(1, top + 1)}
    if n >= 11:
        return set()
    return {(a, b) for a, b in NONBIG_QUADRIC_MODELS[n] if a + b <= top}


def nonbig_table_report(ns, multiples: int) -> VerificationReport:
    """Compare :func:`classify_nonbig` with the known table, ``r_max = multiples * rank(spinor)``."""
    if multiples < 1:
        raise ValueError("multiples must be at least 1")
    rep = VerificationReport("nonbig-table")
    for n in ns:
        r_max = multiples * spinor_rank(n)
        got = sorted((r.model.a, r.model.b) for r in classify_nonbig(n, r_max))
        want = sorted(expected_nonbig(n, r_max))
        rep.add(f"Q{n}", expected=[list(x) for x in want], computed=[list(x) for x in got], note=f"r_max={r_max}")
    return rep
