"""Theorem and oracle suites behind ``tatami verify``."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import partial

from .catgen import gen_vh
from .core import decode_code
from .oracle import enumerate_tn, enumerate_valid_codes, vertical_histogram
from .parallel import ordered_map
from .polylab.generating import (
    TheoremViolation,
    d_at_one_predicted,
    d_poly,
    p_at_one_predicted,
    predicted_deg_p,
    r_poly,
    vh_coeff,
    vh_degree,
    vh_poly,
)
from .polylab.intpoly import IntPoly, NonzeroRemainderError

@dataclass(frozen=True)
class CheckResult:
    name: str
    n: int
    ok: bool
    detail: str = ""

    def line(self) -> str:
        verdict = "PASS" if self.ok else "FAIL"
        return f"{verdict} {self.name} n={self.n}" + (f": {self.detail}" if self.detail else "")


def theorem_checks(n: int, corrupt_d: int | None = None) -> list[CheckResult]:
    out = []

    def record(name, ok, detail=""):
        out.append(CheckResult(name, n, bool(ok), "" if ok else detail))

    vh = vh_poly(n)
    expected_total = n * Fraction(2) ** (n - 3)
    record("vh-degree", vh.degree == vh_degree(n), f"degree {vh.degree}")
    record("vh-count", vh(1) == expected_total, f"VH(1) = {vh(1)}, expected {expected_total}")
    bad = [k for k in range(len(vh)) if vh_coeff(n, k) != vh[k]]
    record("vh-coeff-formula", not bad, f"mismatch at k={bad[:5]}")
    try:
        d = d_poly(n)
    except TheoremViolation as exc:
        record("d-forms-agree", False, str(exc))
        return out
    record("d-forms-agree", True)
    record("d-at-one", d(1) == d_at_one_predicted(n), f"D(1) = {d(1)}")
    if corrupt_d == n:
        d = d + IntPoly.monomial(1)
    try:
        p = vh.exact_divide(d)
    except NonzeroRemainderError as exc:
        rem = [str(Fraction(c)) for c in exc.remainder]
        record("d-divides-vh", False, "remainder [" + ", ".join(rem) + "]")
        return out
    record("d-divides-vh", True)
    try:
        predicted = predicted_deg_p(n)
        record("p-degree", p.degree == predicted, f"degree {p.degree}, predicted {predicted}")
        record("p-at-one", p(1) == p_at_one_predicted(n), f"P(1) = {p(1)}")
    except TheoremViolation as exc:
        record("p-formulas", False, str(exc))
    r = r_poly(n)
    record("r-self-reciprocal", r.is_self_reciprocal(), "R_n(x,1) is not self-reciprocal")
    record("r-count", r(1) == n * Fraction(2) ** (n - 1), f"R(1) = {r(1)}")
    return out


def oracle_checks(n: int) -> list[CheckResult]:
    out = []

    def record(name, ok, detail):
        out.append(CheckResult(name, n, bool(ok), "" if ok else detail))

    oracle = {cov.key for cov in enumerate_tn(n)}
    row = vertical_histogram(n).row()
    vh = list(vh_poly(n).coeffs)
    record("oracle-histogram", row == vh, f"{row} != {vh}")
    decoded = {decode_code(n, code).key for code in enumerate_valid_codes(n)}
    record("codes-decode-to-oracle", decoded == oracle, f"{len(decoded)} decoded vs {len(oracle)} tilings")
    generated: list[str] = []
    for k in range(len(vh)):
        gen_vh(n, k, lambda cov: generated.append(cov.key))
    distinct = set(generated)
    record("generator-matches-oracle", len(generated) == len(distinct) and distinct == oracle,
           f"{len(generated)} generated, {len(distinct)} distinct, {len(oracle)} expected")
    return out


def run_verify(nmax: int, oracle_nmax: int, corrupt_d: int | None = None) -> list[CheckResult]:
    results = []
    for batch in ordered_map(partial(theorem_checks, corrupt_d=corrupt_d), range(2, nmax + 1)):
        results.extend(batch)
    for batch in ordered_map(oracle_checks, range(2, oracle_nmax + 1)):
        results.extend(batch)
    return results
