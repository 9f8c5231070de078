"""
Exact integer primitives
========================

The tests rest on three small kernels: modular exponentiation, the Jacobi
symbol and an exact integer square root.  None of them touch floating point.
"""

# %%
# Modular powers, checked against Python's builtin three-argument pow.
from prothx import isqrt, is_perfect_square, jacobi, mod_pow

print(mod_pow(2, 6, 19), pow(2, 6, 19))
print(mod_pow(27, 824, 1649))   # 1648, i.e. -1 mod 1649

# %%
# The Jacobi symbol is computed by reciprocity, without factoring the bottom
# argument.  For a prime bottom it is the Legendre symbol, so Euler's
# criterion a^((p-1)/2) = (a/p) mod p can be seen directly.
p = 337
for a in range(2, 8):
    print(a, jacobi(a, p), mod_pow(a, (p - 1) // 2, p))

# %%
# For composite bottoms the symbol is multiplicative: 1649 = 17 * 97.
print(jacobi(3, 1649), jacobi(3, 17) * jacobi(3, 97))

# %%
# isqrt returns the floor root and whether it was exact, for any size.
print(isqrt(25), isqrt(21))
big = (10**60 + 7) ** 2
print(isqrt(big), is_perfect_square(big + 1))
