# coding: utf-8

# # Partially trivial idempotents
#
# eps_k^(n) averages over permutations fixing 1..k. On a Specht vector it is
# computed along cover paths instead of expanding the (n-k)!-term sum, and the
# expanded sum is kept around as an oracle.

# In[1]:

from infhecke.hecke import epsilon_fin
from infhecke.specht import SpechtVector
from infhecke.stable import (
    alpha_coefficient,
    count_C,
    epsilon_fin_oracle,
    epsilon_level,
    epsilon_stable,
    stability_defect,
)
from infhecke.tableaux import StableSYT, level_tableaux

# ## The element itself

# In[2]:

print("eps_1^(3) =", epsilon_fin(1, 3))
print("eps_0^(3) has", len(epsilon_fin(0, 3).support()), "terms")


# ## Cover-path formula against the finite sum

# In[3]:

n, r = 5, 3
agree = 0
for tau in level_tableaux((1,), n):
    v = SpechtVector.basis(tau)
    agree += epsilon_level(r, tau, n) == epsilon_fin_oracle(r, n, v)
print(f"{agree} of {len(level_tableaux((1,), n))} basis vectors agree at n={n}, r={r}")


# ## Strip pairs: the image has a basis indexed by C_{lambda,r}

# In[4]:

print(count_C((2, 1), 8), "total", sum(count_C((2, 1), 8).values()))


# ## Does eps_r^(n) settle down as n grows?
#
# When every label above r lies in the long row, yes. When the strip reaches
# below the long row it does not: each new level adds another basis vector with
# a coefficient of valuation 0, so the sequence has no t-adic limit.

# In[5]:

tau = StableSYT.from_rows((1,), [[1, 2], [3]])
for level in range(3, 8):
    img = epsilon_level(2, tau, level)
    print(f"n={level}: {len(img.support())} terms")
print("defect between m and m+2 is zero:", stability_defect(2, tau).is_zero())

row_one = StableSYT.from_rows((1,), [[1, 3], [2]])
print("strip in row one, defect zero:", stability_defect(2, row_one).is_zero())
alpha, pair = alpha_coefficient(2, row_one)
print("alpha =", alpha, " strip", pair.strip)
print("eps_2(e) at the default level:", epsilon_stable(2, SpechtVector.basis(row_one)))
