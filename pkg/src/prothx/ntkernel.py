"""Exact integer primitives: modular powers, Jacobi symbols, integer roots.

Everything here works on Python ints and never touches floating point.
"""


def mod_pow(base, exponent, modulus):
    """Return ``base**exponent % modulus`` by left-to-right square-and-multiply.

    >>> mod_pow(2, 6, 19)
    7
    """
    if modulus < 2:
        raise ValueError(f"modulus must be >= 2, got {modulus}")
    if exponent < 0:
        raise ValueError(f"exponent must be >= 0, got {exponent}")
    base %= modulus
    result = 1
    # MSB first; a sliding window would cut multiplications by ~20% on huge exponents
    for bit in bin(exponent)[2:]:
        result = result * result % modulus
        if bit == "1":
            result = result * base % modulus
    return result


def jacobi(a, n):
    """Jacobi symbol (a/n) for odd positive n, via quadratic reciprocity.

    Returns -1, 0 or 1.  Zero exactly when gcd(a, n) > 1.
    """
    if n <= 0 or n % 2 == 0:
        raise ValueError(f"jacobi needs odd positive n, got {n}")
    a %= n
    sign = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                sign = -sign
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            sign = -sign
        a %= n
    return sign if n == 1 else 0


def isqrt(x):
    """Floor square root by integer Newton iteration.

    Returns ``(root, exact)`` where ``root*root <= x < (root+1)**2`` and
    ``exact`` tells whether x is a perfect square.
    """
    if x < 0:
        raise ValueError(f"isqrt of negative number {x}")
    if x == 0:
        return 0, True
    # 2**ceil(bits/2) is >= sqrt(x), so the iterates decrease monotonically to the floor
    r = 1 << ((x.bit_length() + 1) // 2)
    while True:
        nxt = (r + x // r) // 2
        if nxt >= r:
            break
        r = nxt
    assert r * r <= x < (r + 1) * (r + 1)
    return r, r * r == x


def is_perfect_square(x):
    if x < 0:
        return False
    # quadratic residues mod 64 reject ~80% of non-squares without a root
    if (x & 63) not in _SQUARES_MOD_64:
        return False
    return isqrt(x)[1]


_SQUARES_MOD_64 = frozenset(i * i % 64 for i in range(64))


def trailing_zeros(x):
    """Number of trailing zero bits of a positive integer."""
    if x <= 0:
        raise ValueError("trailing_zeros needs a positive integer")
    return (x & -x).bit_length() - 1
