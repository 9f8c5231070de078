"""
Recovering the factors of a semiprime
=====================================

When the Euler condition holds but N is composite, N must be
(2^n u + 1)(2^n v + 1).  Then k mod 2^n = u + v and k >> n = u*v, so u and v
are the roots of a quadratic.
"""

# %%
from prothx import decompose, euler_residue, extended_proth_test, jacobi, semiprime_resolve

N = 1649          # 17 * 97 = (16*1 + 1)(16*6 + 1)
form = decompose(N)
print(form)

# %%
# Base 27 is a non-residue whose Euler residue is -1, exactly as for a prime.
print(jacobi(27, N), euler_residue(N, 27))

# %%
# The quadratic gives u = 1, v = 6, so the factors are 17 and 97.
print(semiprime_resolve(form))
print(extended_proth_test(N, base=27))

# %%
# The same happens for larger cases, e.g. 1677953.
for N in (3281, 18721, 1677953):
    sol = semiprime_resolve(decompose(N))
    print(N, "=", sol.p, "*", sol.q)
