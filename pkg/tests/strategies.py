"""Hypothesis strategies for rings, classes and bundle classes."""
from __future__ import annotations

from hypothesis import strategies as st

from ulrich_chern.bundles import BundleClass
from ulrich_chern.ring import CohClass, MultiProjective, Quadric

COEFF = st.integers(-6, 6)

quadrics = st.integers(2, 9).map(Quadric)
products = st.lists(st.integers(1, 3), min_size=1, max_size=3).map(MultiProjective)
rings = st.one_of(quadrics, products)


@st.composite
def classes(draw, ring=None, degree=None):
    ring = ring if ring is not None else draw(rings)
    zero = CohClass.zero(ring)
    coeffs = []
    for d in zero.degrees:
        coeffs.append(draw(COEFF) if degree is None or d == degree else 0)
    return CohClass(ring, tuple(coeffs))


@st.composite
def bundles(draw, ring=None, max_rank=5):
    ring = ring if ring is not None else draw(rings)
    rank = draw(st.integers(0, max_rank))
    top = min(rank, ring.dim)
    zero = CohClass.zero(ring)
    coeffs = [1 if d == 0 else (draw(COEFF) if d <= top else 0) for d in zero.degrees]
    return BundleClass(rank, CohClass(ring, tuple(coeffs)))


@st.composite
def ring_and(draw, *makers):
    ring = draw(rings)
    return (ring, *[draw(m(ring)) for m in makers])
