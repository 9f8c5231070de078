"""
N - 1 tests with a prime-power part
===================================

For N = m*p^z + 1 a base a proves N prime when a^(N-1) = 1,
a^(m p^(z-1)) != 1 and the prime power is large enough.  A failure proves
nothing, so the outcome is Prime or Inconclusive.
"""

# %%
from prothx import BlsInstance, bls_power_test, bls_search

inst = BlsInstance.build(37, 4, 3, 2)       # 37 = 4*3^2 + 1
print(bls_power_test(inst, 2))

# %%
# 25 is composite, so every base fails; base 7 fails on the order condition.
inst = BlsInstance.build(25, 8, 3, 1)
print(bls_power_test(inst, 7))
print(bls_search(inst, 20))

# %%
# With p = 2 the size bound uses 2^z + 1 instead of 2*2^z + 1: the larger
# bound would let 15 = 7*2 + 1 through with base 4.
print(bls_power_test(BlsInstance.build(15, 7, 2, 1), 4))
