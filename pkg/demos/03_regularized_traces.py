# coding: utf-8

# # Regularized traces
#
# Gamma_lambda(X) sums the diagonal entries of X against the rescaled basis.
# Each term carries t^inv(tau), so truncating at inv <= K certifies the series
# through t^K.

# In[1]:

from infhecke.hecke import HeckeElement, Permutation, t_sigma
from infhecke.scalars import format_ratfunc
from infhecke.tableaux import StableSYT
from infhecke.trace import (
    a_weight,
    gamma_theta,
    gamma_trunc,
    gamma_weight,
    rational_guess,
    self_adjointness_check,
    skew_vanishing_check,
)

# ## Weights

# In[2]:

tau = StableSYT.from_rows((2, 1), [[1, 2, 3], [4, 6], [5]])
print("a(tau)        =", format_ratfunc(a_weight(tau)))
print("(e~,e~)(tau)  =", format_ratfunc(gamma_weight(tau)))


# ## The one-box case telescopes

# In[3]:

res = gamma_trunc((1,), HeckeElement.one(), 20)
print(res.value, " from", res.tableaux_summed, "tableaux")
print("guess:", rational_guess(res.value))


# ## Other small shapes

# In[4]:

for lam in [(2,), (1, 1), (2, 1), (3,), (1, 1, 1)]:
    series = gamma_trunc(lam, HeckeElement.one(), 16).value
    guess = rational_guess(series)
    print(lam, series, "->", guess if guess is not None else "no product form found")


# ## Symmetries

# In[5]:

print(gamma_trunc((1,), t_sigma([1, 2]), 8).value)
print(gamma_trunc((1,), t_sigma([2, 1]), 8).value)
print(self_adjointness_check((2,), Permutation.from_word([2, 3, 1]), 6).passed)
print(skew_vanishing_check((1,), Permutation.from_word([1, 2, 1]), 6).passed)
print("theta_2 trace:", gamma_theta((1,), [0, 1], 8).value)
