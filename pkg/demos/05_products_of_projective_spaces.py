"""Ulrich split bundles on products of projective spaces."""
from ulrich_chern.products import (
    Atom,
    BoxBundle,
    is_ulrich_split,
    nonbig_family_pipeline,
    p2p2_nonbig_pipeline,
    pullback_o2_bundle,
)

# O(1) x O on P1 x P1 is Ulrich, O x O is not
print(is_ulrich_split(BoxBundle((1, 1), ((Atom(0, 1), Atom(0, 0)),)))[0])
ok, report = is_ulrich_split(BoxBundle((1, 1), ((Atom(0, 0), Atom(0, 0)),)))
print(ok, report)

print(is_ulrich_split(pullback_o2_bundle(3))[0])

# a non-big Ulrich bundle with c1^n > 0 on P1 x P3
print(nonbig_family_pipeline(4, 5).transcript())
print()
print(p2p2_nonbig_pipeline(range(1, 4)).transcript())
