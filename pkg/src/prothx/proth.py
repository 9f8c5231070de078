"""Proth-form primality testing, extended to 2**n > N**(1/3).

For ``N = k*2**n + 1`` with k odd and a base a with Jacobi symbol
(a/N) = -1, the Euler condition ``a**((N-1)/2) == -1 (mod N)`` leaves only
two possibilities once ``2**(3n) > N``: N is prime, or N is a product of two
primes both congruent to 1 mod 2**n.  The second case is settled exactly by
solving ``u + v = k mod 2**n``, ``u*v = k >> n`` for the factors
``2**n*u + 1`` and ``2**n*v + 1``.
"""
from dataclasses import dataclass
from enum import Enum
from math import gcd
from typing import Optional, Union

from .ntkernel import is_perfect_square, isqrt, jacobi, mod_pow, trailing_zeros

DEFAULT_WITNESS_CAP = 1000

SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47,
                53, 59, 61, 67, 71, 73, 79, 83, 89, 97)


class InapplicableError(ValueError):
    """N has no usable Proth decomposition."""


class WitnessExhausted(RuntimeError):
    """No base with Jacobi symbol -1 was found below the search cap."""

    def __init__(self, n, cap):
        super().__init__(f"no base a <= {cap} with jacobi(a, {n}) = -1")
        self.n = n
        self.cap = cap


@dataclass(frozen=True)
class ProthForm:
    N: int
    k: int
    n: int

    def __post_init__(self):
        if self.n < 1 or self.k < 1 or self.k % 2 == 0:
            raise InapplicableError(f"need odd k >= 1 and n >= 1, got k={self.k}, n={self.n}")
        if self.N != (self.k << self.n) + 1:
            raise InapplicableError(f"{self.N} != {self.k}*2^{self.n} + 1")

    @classmethod
    def from_pair(cls, k, n):
        return cls((k << n) + 1, k, n)


@dataclass(frozen=True)
class RegimeCheck:
    cube_ok: bool     # 2^(3n) > N
    square_ok: bool   # 2^(2n) > N
    classic_ok: bool  # 2^n > k


# Composite evidence.  Each carries just what is needed to re-check it.

@dataclass(frozen=True)
class EulerWitness:
    a: int
    residue: int


@dataclass(frozen=True)
class SharedFactor:
    g: int


@dataclass(frozen=True)
class FactorPair:
    p: int
    q: int


@dataclass(frozen=True)
class PerfectSquare:
    r: int


Evidence = Union[EulerWitness, SharedFactor, FactorPair, PerfectSquare]


class Kind(str, Enum):
    PRIME = "Prime"
    COMPOSITE = "Composite"
    INAPPLICABLE = "Inapplicable"


@dataclass(frozen=True)
class Verdict:
    """Outcome of a primality test on a single N.

    A Prime verdict carries the base that proved it (``witness``); a
    Composite verdict carries checkable ``evidence``; Inapplicable carries a
    human-readable ``reason``.
    """

    N: int
    kind: Kind
    witness: Optional[int] = None
    evidence: Optional[Evidence] = None
    reason: Optional[str] = None

    def __post_init__(self):
        object.__setattr__(self, "kind", Kind(self.kind))
        if self.kind is Kind.PRIME and self.evidence is not None:
            raise ValueError("a Prime verdict cannot carry composite evidence")
        if self.kind is Kind.COMPOSITE:
            _check_evidence(self.N, self.evidence)

    @property
    def is_prime(self):
        return self.kind is Kind.PRIME

    @property
    def is_composite(self):
        return self.kind is Kind.COMPOSITE


def _check_evidence(N, ev):
    if isinstance(ev, FactorPair):
        ok = ev.p * ev.q == N and ev.p > 1 and ev.q > 1
    elif isinstance(ev, SharedFactor):
        ok = 1 < ev.g < N and N % ev.g == 0
    elif isinstance(ev, PerfectSquare):
        ok = ev.r > 1 and ev.r * ev.r == N
    elif isinstance(ev, EulerWitness):
        ok = ev.residue != N - 1
    else:
        ok = False
    if not ok:
        raise ValueError(f"invalid composite evidence {ev!r} for N={N}")


def decompose(N):
    """Split odd ``N >= 3`` as ``k*2**n + 1`` with k odd."""
    if N < 3 or N % 2 == 0:
        raise InapplicableError(f"{N} is not an odd integer >= 3")
    n = trailing_zeros(N - 1)
    return ProthForm(N, (N - 1) >> n, n)


def regime(form):
    N, k, n = form.N, form.k, form.n
    return RegimeCheck(
        cube_ok=1 << (3 * n) > N,
        square_ok=1 << (2 * n) > N,
        classic_ok=1 << n > k,
    )


def find_witness(N, cap=DEFAULT_WITNESS_CAP):
    """Smallest ``a >= 2`` with ``jacobi(a, N) == -1``.

    If a smaller base shares a factor with N, the search stops there and a
    :class:`SharedFactor` is returned instead of an int.  Raises
    :class:`WitnessExhausted` when nothing turns up in ``[2, cap]``.
    """
    if N < 3 or N % 2 == 0:
        raise ValueError(f"find_witness needs odd N >= 3, got {N}")
    if is_perfect_square(N):
        raise ValueError(f"{N} is a perfect square; every Jacobi symbol is 0 or 1")
    for a in range(2, min(cap, N - 1) + 1):
        j = jacobi(a, N)
        if j == -1:
            return a
        if j == 0:
            return SharedFactor(gcd(a, N))
    raise WitnessExhausted(N, cap)


class ResidueKind(str, Enum):
    PLUS_ONE = "PlusOne"
    MINUS_ONE = "MinusOne"
    OTHER = "Other"


@dataclass(frozen=True)
class EulerResidue:
    kind: ResidueKind
    value: int


def euler_residue(N, a):
    """Classify ``a**((N-1)/2) mod N`` as +1, -1 or something else."""
    if N < 3 or N % 2 == 0:
        raise ValueError(f"euler_residue needs odd N >= 3, got {N}")
    if not 2 <= a < N:
        raise ValueError(f"base {a} outside [2, {N})")
    r = mod_pow(a, (N - 1) // 2, N)
    if r == 1:
        kind = ResidueKind.PLUS_ONE
    elif r == N - 1:
        kind = ResidueKind.MINUS_ONE
    else:
        kind = ResidueKind.OTHER
    return EulerResidue(kind, r)


@dataclass(frozen=True)
class SemiprimeSolution:
    u: int
    v: int
    p: int
    q: int
    s: int
    prod: int


def semiprime_resolve(form):
    """Look for ``N = (2**n*u + 1)(2**n*v + 1)`` with ``1 <= u <= v``.

    Returns a :class:`SemiprimeSolution` or ``None``.  Only meaningful when
    ``2**(3n) > N``; outside that regime ``k mod 2**n`` need not equal u + v.
    """
    N, k, n = form.N, form.k, form.n
    if not regime(form).cube_ok:
        raise ValueError(f"semiprime_resolve needs 2^(3n) > N (N={N}, n={n})")
    s = k & ((1 << n) - 1)
    prod = k >> n
    disc = s * s - 4 * prod
    if disc < 0:
        return None
    root, exact = isqrt(disc)
    if not exact:
        return None
    # s and root share parity whenever disc is a square: s^2 - root^2 = 4*prod
    assert (s - root) % 2 == 0, f"parity mismatch s={s} root={root}"
    u = (s - root) // 2
    if u < 1:
        return None
    v = (s + root) // 2
    p = (u << n) + 1
    q = (v << n) + 1
    assert p * q == N, f"recovered factors {p}*{q} != {N}"
    return SemiprimeSolution(u=u, v=v, p=p, q=q, s=s, prod=prod)


def _small_factor(N):
    for p in SMALL_PRIMES:
        if p * p > N:
            return None
        if N % p == 0:
            return p
    return None


def _screen(N, trial_division):
    """Shared front end: perfect squares and (optionally) tiny factors."""
    if is_perfect_square(N):
        return Verdict(N, Kind.COMPOSITE, evidence=PerfectSquare(isqrt(N)[0]))
    if trial_division:
        p = _small_factor(N)
        if p is not None:
            return Verdict(N, Kind.COMPOSITE, evidence=SharedFactor(p))
    return None


def _pick_base(N, cap, base):
    """Returns an int base, or a Verdict when the search already settled N."""
    if base is None:
        found = find_witness(N, cap)
        if isinstance(found, SharedFactor):
            return Verdict(N, Kind.COMPOSITE, evidence=found)
        return found
    if not 2 <= base < N:
        raise ValueError(f"base {base} outside [2, {N})")
    j = jacobi(base, N)
    if j == 0:
        return Verdict(N, Kind.COMPOSITE, evidence=SharedFactor(gcd(base, N)))
    if j != -1:
        raise ValueError(f"forced base {base} has jacobi({base}, {N}) = {j}, need -1")
    return base


def extended_proth_test(N, cap=DEFAULT_WITNESS_CAP, *, base=None, trial_division=False):
    """Decide primality of ``N = k*2**n + 1`` whenever ``2**(3n) > N``.

    ``base`` forces a particular witness (it must have Jacobi symbol -1)
    instead of searching for the smallest one.  ``trial_division`` enables a
    fast path that reports a factor below 100 directly.
    """
    if N < 3 or N % 2 == 0:
        return Verdict(N, Kind.INAPPLICABLE, reason="N must be an odd integer >= 3")
    form = decompose(N)
    reg = regime(form)
    if not reg.cube_ok:
        return Verdict(N, Kind.INAPPLICABLE,
                       reason=f"2^(3n) <= N for k={form.k}, n={form.n}")
    screened = _screen(N, trial_division)
    if screened is not None:
        return screened
    a = _pick_base(N, cap, base)
    if isinstance(a, Verdict):
        return a
    res = euler_residue(N, a)
    if res.kind is not ResidueKind.MINUS_ONE:
        return Verdict(N, Kind.COMPOSITE, evidence=EulerWitness(a, res.value))
    if reg.square_ok:
        return Verdict(N, Kind.PRIME, witness=a)
    sol = semiprime_resolve(form)
    if sol is not None:
        return Verdict(N, Kind.COMPOSITE, witness=a, evidence=FactorPair(sol.p, sol.q))
    return Verdict(N, Kind.PRIME, witness=a)


def classic_proth_test(N, cap=DEFAULT_WITNESS_CAP, *, base=None, trial_division=False):
    """Proth's original test, valid only when ``2**n > k``."""
    if N < 3 or N % 2 == 0:
        return Verdict(N, Kind.INAPPLICABLE, reason="N must be an odd integer >= 3")
    form = decompose(N)
    if not regime(form).classic_ok:
        return Verdict(N, Kind.INAPPLICABLE,
                       reason=f"2^n <= k for k={form.k}, n={form.n}")
    screened = _screen(N, trial_division)
    if screened is not None:
        return screened
    a = _pick_base(N, cap, base)
    if isinstance(a, Verdict):
        return a
    res = euler_residue(N, a)
    if res.kind is ResidueKind.MINUS_ONE:
        return Verdict(N, Kind.PRIME, witness=a)
    return Verdict(N, Kind.COMPOSITE, witness=a, evidence=EulerWitness(a, res.value))
