"""Brute-force ground truth: trial-division primality, factorization, orders.

Deliberately naive.  These are the references the fast tests are checked
against, so they share nothing with them beyond Python's integers.
"""
from dataclasses import dataclass
from math import gcd, lcm


def oracle_is_prime(n):
    """Trial division by 2, 3 and then 6k +/- 1 up to floor(sqrt(n))."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0 or n % 3 == 0:
        return False
    d = 5
    while d * d <= n:
        if n % d == 0 or n % (d + 2) == 0:
            return False
        d += 6
    return True


@dataclass(frozen=True)
class Factorization:
    """Prime factorization as ``((prime, multiplicity), ...)`` with primes increasing."""

    factors: tuple

    def __post_init__(self):
        primes = [p for p, _ in self.factors]
        if primes != sorted(set(primes)):
            raise ValueError("primes must be strictly increasing")
        if any(e < 1 for _, e in self.factors):
            raise ValueError("multiplicities must be positive")

    def value(self):
        out = 1
        for p, e in self.factors:
            out *= p**e
        return out

    def primes(self):
        return [p for p, _ in self.factors]

    def __iter__(self):
        return iter(self.factors)

    def __len__(self):
        return len(self.factors)


def oracle_factor(n):
    if n < 2:
        raise ValueError(f"cannot factor {n}")
    factors = []
    for p in (2, 3):
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        if e:
            factors.append((p, e))
    d, step = 5, 2
    while d * d <= n:
        e = 0
        while n % d == 0:
            n //= d
            e += 1
        if e:
            factors.append((d, e))
        d += step
        step = 6 - step
    if n > 1:
        factors.append((n, 1))
    return Factorization(tuple(factors))


def carmichael(n):
    """Carmichael function lambda(n), from the factorization of n."""
    if n < 1:
        raise ValueError("carmichael needs n >= 1")
    if n == 1:
        return 1
    out = 1
    for p, e in oracle_factor(n):
        if p == 2 and e >= 3:
            part = 2 ** (e - 2)
        else:
            part = (p - 1) * p ** (e - 1)
        out = lcm(out, part)
    return out


STEPPING_LIMIT = 10**5


def oracle_order(a, n, method="auto"):
    """Multiplicative order of a modulo n.

    ``method`` is ``"step"`` (multiply until 1), ``"divisors"`` (smallest
    divisor of lambda(n) that works) or ``"auto"``, which steps for
    n <= 10**5.
    """
    if n < 2:
        raise ValueError(f"modulus must be >= 2, got {n}")
    if gcd(a, n) != 1:
        raise ValueError(f"{a} is not a unit modulo {n}")
    a %= n
    if method == "auto":
        method = "step" if n <= STEPPING_LIMIT else "divisors"
    if method == "step":
        x, e = a, 1
        while x != 1:
            x = x * a % n
            e += 1
        return e
    if method == "divisors":
        lam = carmichael(n)
        order = lam
        # strip each prime of lambda while the power still hits 1
        for p, _ in oracle_factor(lam) if lam > 1 else ():
            while order % p == 0 and pow(a, order // p, n) == 1:
                order //= p
        return order
    raise ValueError(f"unknown method {method!r}")
