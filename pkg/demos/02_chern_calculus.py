"""Twisted forms on projective space and the Segre/bigness calculus."""
from ulrich_chern.bundles import chern_of_twisted_forms, direct_sum, is_big, nu, segre, sum_big_certificate, twist
from ulrich_chern.ring import MultiProjective, hyperplane

# Omega(1) on P^2 and its twist T(-1) = Omega^1(2)
print("c(Omega(1)):", chern_of_twisted_forms(2, 1, 1).chern)
print("c(T(-1)):   ", chern_of_twisted_forms(2, 1, 2).chern)

P = MultiProjective((3,))
H = hyperplane(P)
T = chern_of_twisted_forms(3, 2, 3)             # T_{P3}(-1), globally generated
print("s(T(-1)):", segre(T))
print("nu(T(-1)) =", nu(T), " big:", is_big(T))

# O(1) is big, so adding anything globally generated keeps bigness
O1 = chern_of_twisted_forms(3, 0, 1)
big, terms = sum_big_certificate(O1, T)
print("O(1) + T(-1) big:", big, "terms:", terms)

# twisting by H commutes with sums
E = direct_sum(T, O1)
print(twist(E, H).chern == (twist(T, H).chern * twist(O1, H).chern))
