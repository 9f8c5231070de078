"""Sufficient primality test for ``N = m*p**z + 1`` with p prime.

If ``2*p**z + 1 > sqrt(N)``, ``a**(N-1) == 1`` and ``a**(m*p**(z-1)) != 1``
(all mod N) then N is prime.  The converse does not hold: a failure proves
nothing, so the outcome is Prime or Inconclusive, never Composite.

The ``2*p**z + 1`` bound is the least odd number that is 1 mod p**z, so it
only holds for odd p and odd N.  For p = 2 the least candidate factor is
``2**z + 1`` and that is the bound used; even N never passes the size
check.  Without these two adjustments 15 = 7*2 + 1 with a = 4 and
276 = 25*11 + 1 with a = 13 would both be reported prime.
"""
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .ntkernel import mod_pow
from .oracle import oracle_is_prime

# p above this is taken on trust rather than trial-divided
PRIME_CHECK_LIMIT = 10**7


@dataclass(frozen=True)
class BlsInstance:
    N: int
    m: int
    p: int
    z: int
    p_verified: bool = True

    def __post_init__(self):
        if self.m < 1:
            raise ValueError(f"m must be positive, got {self.m}")
        if self.z < 1:
            raise ValueError(f"z must be >= 1, got {self.z}")
        if self.p < 2:
            raise ValueError(f"p must be prime, got {self.p}")
        if self.N != self.m * self.p**self.z + 1:
            raise ValueError(f"{self.N} != {self.m}*{self.p}^{self.z} + 1")

    @classmethod
    def build(cls, N, m, p, z):
        """Validate the decomposition; trial-divide p when it is small enough."""
        if p <= PRIME_CHECK_LIMIT:
            if not oracle_is_prime(p):
                raise ValueError(f"p = {p} is not prime")
            return cls(N, m, p, z, p_verified=True)
        return cls(N, m, p, z, p_verified=False)


class Condition(str, Enum):
    SIZE = "SizeBound"
    FERMAT = "FermatCondition"
    ORDER = "OrderCondition"


class BlsKind(str, Enum):
    PRIME = "Prime"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class BlsOutcome:
    kind: BlsKind
    failed_condition: Optional[Condition] = None
    base: Optional[int] = None
    p_verified: bool = True

    def __post_init__(self):
        object.__setattr__(self, "kind", BlsKind(self.kind))
        if self.failed_condition is not None:
            object.__setattr__(self, "failed_condition", Condition(self.failed_condition))
        if (self.kind is BlsKind.PRIME) != (self.failed_condition is None):
            raise ValueError("Inconclusive needs exactly one failed condition; Prime none")

    @property
    def is_prime(self):
        return self.kind is BlsKind.PRIME


def smallest_factor_bound(inst):
    """Least value a prime factor of N can take once p**z divides its order."""
    pz = inst.p**inst.z
    return pz + 1 if inst.p == 2 else 2 * pz + 1


def size_bound_ok(inst):
    """Exact form of ``smallest_factor_bound > sqrt(N)``, for odd N only."""
    if inst.N % 2 == 0:
        return False
    return smallest_factor_bound(inst) ** 2 > inst.N


def bls_power_test(inst, a):
    N = inst.N
    if not 2 <= a < N:
        raise ValueError(f"base {a} outside [2, {N})")
    if not size_bound_ok(inst):
        failed = Condition.SIZE
    elif mod_pow(a, N - 1, N) != 1:
        failed = Condition.FERMAT
    elif mod_pow(a, inst.m * inst.p ** (inst.z - 1), N) == 1:
        failed = Condition.ORDER
    else:
        return BlsOutcome(BlsKind.PRIME, base=a, p_verified=inst.p_verified)
    return BlsOutcome(BlsKind.INCONCLUSIVE, failed, base=a, p_verified=inst.p_verified)


def _prime_bases(limit):
    for a in range(2, limit + 1):
        if oracle_is_prime(a):
            yield a


def bls_search(inst, base_limit=50):
    """Try prime bases 2, 3, 5, ... up to ``base_limit`` (and below N).

    Returns the first Prime outcome, or the Inconclusive outcome of the last
    base tried.  A failed size bound returns at once since no base helps.
    """
    if not size_bound_ok(inst):
        return BlsOutcome(BlsKind.INCONCLUSIVE, Condition.SIZE, p_verified=inst.p_verified)
    last = None
    for a in _prime_bases(min(base_limit, inst.N - 1)):
        last = bls_power_test(inst, a)
        if last.is_prime:
            return last
    if last is None:
        # base_limit < 2: nothing was tried
        return BlsOutcome(BlsKind.INCONCLUSIVE, Condition.FERMAT, p_verified=inst.p_verified)
    return last
