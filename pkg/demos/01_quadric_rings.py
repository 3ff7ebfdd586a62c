"""Integral cohomology of quadrics and products of projective spaces."""
from ulrich_chern.ring import CohClass, MultiProjective, Quadric, hyperplane, integrate

Q = Quadric(4)
h = hyperplane(Q)
l = CohClass.basis(Q, "b2")     # a plane of one family
lp = CohClass.basis(Q, "bp2")   # a plane of the other

print("h^2 on Q4:", h**2)                       # l + l'
print("deg Q4:", integrate(h**4))               # 2
print("l.l, l.l':", integrate(l * l), integrate(l * lp))

# on Q6 the planes of a family are disjoint
Q6 = Quadric(6)
l3 = CohClass.basis(Q6, "b3")
print("l^2 on Q6:", integrate(l3 * l3))

# P2 x P2 in its Segre embedding has degree 6
P = MultiProjective((2, 2))
print("deg P2 x P2:", integrate(hyperplane(P) ** 4))
