"""
Proth testing past the classical size bound
===========================================

Classical Proth testing of N = k*2^n + 1 needs 2^n > k.  The extended test
only needs 2^(3n) > N, which admits far more candidates, at the cost of one
extra step that rules out a product of two primes.
"""

# %%
from prothx import classic_proth_test, decompose, extended_proth_test, regime

N = 337
form = decompose(N)
print(form)
print(regime(form))

# %%
# 337 = 21*2^4 + 1 has 16 < 21, so the classical test refuses it ...
print(classic_proth_test(N))

# %%
# ... while the extended test proves it prime with base 5.
print(extended_proth_test(N))

# %%
# A composite in the same regime is caught by its Euler residue.
print(extended_proth_test(1649))

# %%
# How many odd N below a million fall into each regime?
counts = {"classic": 0, "extended only": 0, "neither": 0}
for N in range(3, 10**6, 2):
    r = regime(decompose(N))
    if r.classic_ok:
        counts["classic"] += 1
    elif r.cube_ok:
        counts["extended only"] += 1
    else:
        counts["neither"] += 1
print(counts)
