# coding: utf-8

# # Specht modules in the seminormal basis
#
# Vectors live in the span of stable tableaux: fillings of the infinite diagram
# whose first row is infinitely long. A stable tableau is stored by its rows at
# the smallest level where it is still interesting (its rank).

# In[1]:

from infhecke.scalars import T, format_ratfunc
from infhecke.specht import SpechtVector, act_T, act_phi, act_theta, verify_finite_relations
from infhecke.tableaux import StableSYT, content, enumerate_by_inv, inv, tau_lambda

# ## The minimal tableau and its neighbours

# In[2]:

lam = (2, 1)
tl = tau_lambda(lam)
print("tau_lambda:", tl, "rank", tl.rank)

for tau in enumerate_by_inv(lam, 2):
    print(f"inv={inv(tau)}  {tau}  contents 1..6: {[content(tau, i) for i in range(1, 7)]}")


# ## Generators act by the four-case rule
#
# Same row gives 1, same column gives -t, and covers produce two-term answers.

# In[3]:

e = SpechtVector.basis
v = e(StableSYT.from_rows((1,), [[1, 3], [2]]))
print("T2 e[1,3/2] =", act_T(2, v))

w = e(StableSYT.from_rows((2, 1), [[1, 2], [3, 5], [4]]))
print("T3 on a same-column pair:", act_T(3, w))


# ## Jucys-Murphy elements are diagonal, intertwiners move between eigenvectors

# In[4]:

print("theta_4 e_tau_lambda =", act_theta(4, e(tl)))
print("phi_3 e_tau_lambda   =", act_phi(3, e(tl)))


# ## All defining relations, checked exactly on a finite level

# In[5]:

report = verify_finite_relations((2, 1), 6)
print("\n".join(report.lines()))
