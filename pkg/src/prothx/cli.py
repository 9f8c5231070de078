"""Command line front end: ``prothx test|pair|search|bls|verify``.

Exit codes: 0 verdict reached (or clean verification), 2 usage error,
3 inapplicable form, 4 BLS inconclusive, 5 verification disagreement.
"""
import argparse
import heapq
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from itertools import repeat

from .bls import BlsInstance, bls_power_test, bls_search
from .oracle import oracle_factor, oracle_is_prime
from .proth import (DEFAULT_WITNESS_CAP, EulerWitness, FactorPair, InapplicableError,
                    Kind, SharedFactor, Verdict, WitnessExhausted, decompose,
                    extended_proth_test, regime)
from .report import Report

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_INAPPLICABLE = 3
EXIT_INCONCLUSIVE = 4
EXIT_DISAGREE = 5

ORACLE_LIMIT = 10**14


class UsageError(Exception):
    pass


def parse_natural(text, allow_hex=False):
    t = text.strip()
    if allow_hex and t.lower().startswith("0x"):
        digits, base = t[2:], 16
        ok = digits != "" and all(c in "0123456789abcdefABCDEF" for c in digits)
    else:
        digits, base = t, 10
        ok = digits.isascii() and digits.isdigit()
    if not ok:
        raise UsageError(f"not a nonnegative integer: {text!r}")
    return int(digits, base)


# -- single candidates -------------------------------------------------------

def _oracle_verdict(N):
    if N < 2:
        return Verdict(N, Kind.INAPPLICABLE, reason="N < 2 is neither prime nor composite")
    if oracle_is_prime(N):
        return Verdict(N, Kind.PRIME)
    return Verdict(N, Kind.COMPOSITE, evidence=SharedFactor(oracle_factor(N).primes()[0]))


def evaluate(N, cap=DEFAULT_WITNESS_CAP, oracle_fallback=False, inp=None):
    """Run the extended test on N and wrap the result in a Report.

    Raises WitnessExhausted if the witness search gives up.
    """
    t0 = time.perf_counter()
    try:
        form = decompose(N)
        reg = regime(form)
    except InapplicableError:
        form = reg = None
    verdict = extended_proth_test(N, cap)
    test_used = "extended"
    if verdict.kind is Kind.INAPPLICABLE and oracle_fallback and N <= ORACLE_LIMIT:
        verdict = _oracle_verdict(N)
        test_used = "oracle"
    return Report(input=N if inp is None else inp, N=N, form=form, regime=reg,
                  verdict=verdict, test_used=test_used,
                  elapsed=time.perf_counter() - t0)


def _emit(report, args, out):
    print(report.to_json() if args.json else report.render(), file=out)


def _single(N, args, out, inp=None):
    try:
        report = evaluate(N, args.witness_cap, args.oracle_fallback, inp)
    except WitnessExhausted as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INAPPLICABLE
    _emit(report, args, out)
    return EXIT_INAPPLICABLE if report.verdict.kind is Kind.INAPPLICABLE else EXIT_OK


def cmd_test(args, out):
    return _single(parse_natural(args.N, args.hex), args, out)


def cmd_pair(args, out):
    k = parse_natural(args.k, args.hex)
    n = parse_natural(args.n, args.hex)
    if k < 1 or k % 2 == 0:
        raise UsageError(f"k must be odd and positive, got {k}")
    if n < 1:
        raise UsageError(f"n must be >= 1, got {n}")
    N = (k << n) + 1
    if not args.json:
        print(f"N = {k}*2^{n} + 1 = {N}", file=out)
    return _single(N, args, out, inp=(k, n))


# -- ranges ------------------------------------------------------------------

def proth_candidates(lo, hi, new_regime_only=False):
    """Odd N in [lo, hi] whose Proth form has 2^(3n) > N, ascending.

    With ``new_regime_only`` keep only those with 2^n <= k, i.e. the ones
    the classical test cannot handle.
    """
    streams = []
    n = 1
    # the smallest N with exponent n is 2^n + 1
    while (1 << n) + 1 <= hi:
        step = 1 << (n + 1)
        top = min(hi, (1 << (3 * n)) - 1)
        if new_regime_only:
            lo_n = max(lo, (1 << (2 * n)) + 1)  # k >= 2^n + 1 since k odd
        else:
            lo_n = lo
        first = (1 << n) + 1
        if lo_n > first:
            first += -(-(lo_n - first) // step) * step
        if first <= top:
            streams.append(range(first, top + 1, step))
        n += 1
    return heapq.merge(*streams)


def _chunks(seq, size):
    buf = []
    for x in seq:
        buf.append(x)
        if len(buf) == size:
            yield buf
            buf = []
    if buf:
        yield buf


def _search_chunk(chunk, cap):
    return [r for r in (evaluate(N, cap) for N in chunk) if r.verdict.is_prime]


def _map_chunks(fn, chunks, workers, *extra):
    """Apply fn to every chunk, yielding results in input order."""
    extra = [repeat(e) for e in extra]
    if workers <= 1:
        yield from map(fn, chunks, *extra)
        return
    with ProcessPoolExecutor(max_workers=workers) as pool:
        yield from pool.map(fn, chunks, *extra)


def cmd_search(args, out):
    lo = parse_natural(args.lo, args.hex)
    hi = parse_natural(args.hi, args.hex)
    if lo > hi:
        raise UsageError(f"empty range: lo={lo} > hi={hi}")
    cands = proth_candidates(max(lo, 3), hi, args.new_regime_only)
    for reports in _map_chunks(_search_chunk, _chunks(cands, 512), args.workers,
                               args.witness_cap):
        for r in reports:
            _emit(r, args, out)
    return EXIT_OK


# -- verification sweep --------------------------------------------------------

def _verify_chunk(chunk, cap):
    counts = {"tested": 0, "primes": 0, "semiprimes_factored": 0,
              "euler_witness": 0, "shared_factor": 0, "perfect_square": 0}
    bad = []
    for N in chunk:
        v = extended_proth_test(N, cap)
        counts["tested"] += 1
        if v.is_prime:
            counts["primes"] += 1
        elif isinstance(v.evidence, FactorPair):
            counts["semiprimes_factored"] += 1
        elif isinstance(v.evidence, EulerWitness):
            counts["euler_witness"] += 1
        elif isinstance(v.evidence, SharedFactor):
            counts["shared_factor"] += 1
        else:
            counts["perfect_square"] += 1
        if v.is_prime != oracle_is_prime(N):
            bad.append(N)
    return counts, bad


def verify(limit, workers=1, cap=DEFAULT_WITNESS_CAP):
    """Cross-check the extended test against trial division for every
    eligible N <= limit.  Returns ``(counts, disagreements)``."""
    total = {}
    bad = []
    for counts, b in _map_chunks(_verify_chunk, _chunks(proth_candidates(3, limit), 2048),
                                 workers, cap):
        for key, val in counts.items():
            total[key] = total.get(key, 0) + val
        bad.extend(b)
    if not total:
        total = _verify_chunk([], cap)[0]
    return total, bad


def cmd_verify(args, out):
    limit = parse_natural(args.limit, args.hex)
    counts, bad = verify(limit, args.workers, args.witness_cap)
    counts = {"limit": limit, **counts, "disagreements": len(bad)}
    if args.json:
        print(json.dumps({**counts, "disagreeing_N": [str(N) for N in bad]},
                         sort_keys=True), file=out)
    else:
        print("  ".join(f"{k}={v}" for k, v in counts.items()), file=out)
        for N in bad:
            print(f"disagreement at N = {N}", file=out)
    return EXIT_DISAGREE if bad else EXIT_OK


# -- BLS -----------------------------------------------------------------------

def cmd_bls(args, out):
    N, m, p, z = (parse_natural(x, args.hex) for x in (args.N, args.m, args.p, args.z))
    try:
        inst = BlsInstance.build(N, m, p, z)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    t0 = time.perf_counter()
    if args.base is not None:
        a = parse_natural(args.base, args.hex)
        if not 2 <= a < N:
            raise UsageError(f"base {a} outside [2, {N})")
        outcome = bls_power_test(inst, a)
    else:
        outcome = bls_search(inst, args.base_limit)
    report = Report(input=N, N=N, form=None, regime=None, verdict=outcome,
                    test_used="bls", elapsed=time.perf_counter() - t0, bls=inst)
    _emit(report, args, out)
    return EXIT_OK if outcome.is_prime else EXIT_INCONCLUSIVE


# -- argument parsing ----------------------------------------------------------

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="one JSON object per line")
    common.add_argument("--workers", type=int, default=1, metavar="W")
    common.add_argument("--witness-cap", type=int, default=DEFAULT_WITNESS_CAP, metavar="C")
    common.add_argument("--hex", action="store_true", help="also accept 0x-prefixed numbers")

    parser = argparse.ArgumentParser(prog="prothx", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("test", parents=[common], help="test a single N")
    p.add_argument("N")
    p.add_argument("--oracle-fallback", action="store_true",
                   help="use trial division when the Proth test does not apply")
    p.set_defaults(func=cmd_test)

    p = sub.add_parser("pair", parents=[common], help="test N = k*2^n + 1")
    p.add_argument("k")
    p.add_argument("n")
    p.add_argument("--oracle-fallback", action="store_true")
    p.set_defaults(func=cmd_pair)

    p = sub.add_parser("search", parents=[common], help="list Proth primes in [lo, hi]")
    p.add_argument("lo")
    p.add_argument("hi")
    p.add_argument("--new-regime-only", action="store_true",
                   help="only candidates with 2^n <= k")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("bls", parents=[common], help="test N = m*p^z + 1")
    for name in ("N", "m", "p", "z"):
        p.add_argument(name)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--base", metavar="a")
    g.add_argument("--base-limit", type=int, default=50, metavar="L")
    p.set_defaults(func=cmd_bls)

    p = sub.add_parser("verify", parents=[common], help="cross-check against trial division")
    p.add_argument("limit", nargs="?", default=str(2 * 10**6))
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None, out=None):
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code
    if args.workers < 1 or args.witness_cap < 2:
        print("error: --workers must be >= 1 and --witness-cap >= 2", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
