"""Proth-form primality testing beyond the classical 2**n > k bound."""
from .bls import BlsInstance, BlsOutcome, bls_power_test, bls_search
from .ntkernel import is_perfect_square, isqrt, jacobi, mod_pow
from .oracle import Factorization, oracle_factor, oracle_is_prime, oracle_order
from .proth import (EulerWitness, FactorPair, InapplicableError, Kind, PerfectSquare,
                    ProthForm, RegimeCheck, SemiprimeSolution, SharedFactor, Verdict,
                    WitnessExhausted, classic_proth_test, decompose, euler_residue,
                    extended_proth_test, find_witness, regime, semiprime_resolve)

__version__ = "0.1.0"
