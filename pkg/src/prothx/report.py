"""Report records shared by the command line front end.

A report is serialized as one JSON object per line.  Integers that can grow
without bound are written as decimal strings; small counters (n, z) stay
JSON numbers.
"""
import json
from dataclasses import dataclass, replace
from typing import Optional, Union

from .bls import BlsInstance, BlsOutcome
from .proth import (EulerWitness, FactorPair, Kind, PerfectSquare, ProthForm,
                    RegimeCheck, SharedFactor, Verdict)

TESTS = ("extended", "classic", "bls", "oracle")

_EVIDENCE = {
    "EulerWitness": (EulerWitness, ("a", "residue")),
    "SharedFactor": (SharedFactor, ("g",)),
    "FactorPair": (FactorPair, ("p", "q")),
    "PerfectSquare": (PerfectSquare, ("r",)),
}


@dataclass(frozen=True)
class Report:
    input: Union[int, tuple]  # N, or (k, n) for pair requests
    N: int
    form: Optional[ProthForm]
    regime: Optional[RegimeCheck]
    verdict: Union[Verdict, BlsOutcome]
    test_used: str
    elapsed: float = 0.0
    bls: Optional[BlsInstance] = None

    def __post_init__(self):
        if self.test_used not in TESTS:
            raise ValueError(f"unknown test {self.test_used!r}")

    def canonical(self):
        """The report with timing zeroed, for equality and determinism checks."""
        return replace(self, elapsed=0.0)

    def to_dict(self):
        d = {"input": _input_to_json(self.input), "N": str(self.N)}
        if self.form is not None:
            d["k"] = str(self.form.k)
            d["n"] = self.form.n
        if self.regime is not None:
            d["regime"] = {
                "cube_ok": self.regime.cube_ok,
                "square_ok": self.regime.square_ok,
                "classic_ok": self.regime.classic_ok,
            }
        if self.bls is not None:
            d["bls"] = {"m": str(self.bls.m), "p": str(self.bls.p), "z": self.bls.z,
                        "p_verified": self.bls.p_verified}
        d["verdict"] = _verdict_to_json(self.verdict)
        d["test_used"] = self.test_used
        d["elapsed_s"] = round(self.elapsed, 6)
        return d

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, d):
        N = int(d["N"])
        form = ProthForm(N, int(d["k"]), d["n"]) if "k" in d else None
        reg = RegimeCheck(**d["regime"]) if "regime" in d else None
        bls = None
        if "bls" in d:
            b = d["bls"]
            bls = BlsInstance(N, int(b["m"]), int(b["p"]), b["z"], b["p_verified"])
        v = d["verdict"]
        if d["test_used"] == "bls":
            verdict = BlsOutcome(v["kind"], v.get("failed_condition"),
                                 base=_opt_int(v.get("witness")),
                                 p_verified=bls.p_verified if bls else True)
        else:
            evidence = None
            if "evidence" in v:
                ev = dict(v["evidence"])
                klass, fields = _EVIDENCE[ev.pop("type")]
                evidence = klass(*(int(ev[f]) for f in fields))
            verdict = Verdict(N, Kind(v["kind"]), witness=_opt_int(v.get("witness")),
                              evidence=evidence, reason=v.get("reason"))
        return cls(input=_input_from_json(d["input"]), N=N, form=form, regime=reg,
                   verdict=verdict, test_used=d["test_used"],
                   elapsed=d.get("elapsed_s", 0.0), bls=bls)

    @classmethod
    def from_json(cls, line):
        return cls.from_dict(json.loads(line))

    def render(self):
        """Human-readable form; states the same facts as :meth:`to_json`."""
        parts = [f"N = {self.N}"]
        if isinstance(self.input, tuple):
            parts[0] += f" (k = {self.input[0]}, n = {self.input[1]})"
        elif self.form is not None:
            parts.append(f"form: {self.form.k}*2^{self.form.n} + 1")
        if self.bls is not None:
            b = self.bls
            parts.append(f"form: {b.m}*{b.p}^{b.z} + 1"
                         + ("" if b.p_verified else " (p assumed prime)"))
        if self.regime is not None:
            r = self.regime
            parts.append(f"regime: cube_ok={r.cube_ok} square_ok={r.square_ok} "
                         f"classic_ok={r.classic_ok}")
        parts.append(f"verdict: {_verdict_text(self.verdict)}")
        parts.append(f"test: {self.test_used}  ({self.elapsed * 1e3:.3f} ms)")
        return "\n  ".join(parts)


def _opt_int(x):
    return None if x is None else int(x)


def _input_to_json(inp):
    if isinstance(inp, tuple):
        return {"k": str(inp[0]), "n": inp[1]}
    return str(inp)


def _input_from_json(inp):
    if isinstance(inp, dict):
        return (int(inp["k"]), inp["n"])
    return int(inp)


def _verdict_to_json(v):
    if isinstance(v, BlsOutcome):
        d = {"kind": v.kind.value}
        if v.failed_condition is not None:
            d["failed_condition"] = v.failed_condition.value
        if v.base is not None:
            d["witness"] = str(v.base)
        return d
    d = {"kind": v.kind.value}
    if v.witness is not None:
        d["witness"] = str(v.witness)
    if v.evidence is not None:
        name = type(v.evidence).__name__
        _, fields = _EVIDENCE[name]
        d["evidence"] = {"type": name, **{f: str(getattr(v.evidence, f)) for f in fields}}
    if v.reason is not None:
        d["reason"] = v.reason
    return d


def _verdict_text(v):
    if isinstance(v, BlsOutcome):
        if v.is_prime:
            return f"Prime (base {v.base})"
        base = f", base {v.base}" if v.base is not None else ""
        return f"Inconclusive ({v.failed_condition.value} failed{base})"
    if v.kind is Kind.PRIME:
        return "Prime" + (f" (witness {v.witness})" if v.witness is not None else "")
    if v.kind is Kind.INAPPLICABLE:
        return f"Inapplicable ({v.reason})"
    ev = v.evidence
    if isinstance(ev, EulerWitness):
        detail = f"Euler witness a={ev.a}, residue {ev.residue}"
    elif isinstance(ev, FactorPair):
        detail = f"factors {ev.p} * {ev.q}"
        if v.witness is not None:
            detail += f" (witness {v.witness})"
    elif isinstance(ev, SharedFactor):
        detail = f"shared factor {ev.g}"
    else:
        detail = f"perfect square {ev.r}^2"
    return f"Composite ({detail})"
