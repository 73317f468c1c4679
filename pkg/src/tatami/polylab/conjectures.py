"""Machine checks of the observed-but-unproved structure of VH_n and P_n.

Every checker returns a :class:`ConjectureReport`; a counterexample is data,
never an exception.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .generating import p_poly, vh_poly
from .published import P_ABS_COEFF_SUMS, P_AT_MINUS_ONE
from .series import distinct_parts, pn_neg1_series
from .sturm import count_roots, isolate_root, root_bound, sturm_sequence

CONJECTURE_IDS = ("vhcon-a", "vhcon-b", "pcon-a", "pcon-b", "pcon-c", "pcon-e", "pcon-f")
STURM_NMAX = 25


@dataclass
class ConjectureReport:
    conjecture: str
    n_range: tuple[int, int]
    holds: bool = True
    failed_at: int | None = None
    detail: str = ""
    witnesses: dict[str, Any] = field(default_factory=dict)

    @property
    def status(self) -> str:
        return "holds" if self.holds else f"fails-at({self.failed_at})"

    def fail(self, n: int, detail: str) -> None:
        """Record the first counterexample only."""
        if self.holds:
            self.holds, self.failed_at, self.detail = False, n, detail

    def to_json(self) -> dict[str, Any]:
        return {
            "id": self.conjecture,
            "range": list(self.n_range),
            "status": self.status,
            "detail": self.detail,
            "witnesses": _stringify(self.witnesses),
        }


def _stringify(value):
    # integers become decimal strings so that big values survive JSON readers
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, dict):
        return {str(k): _stringify(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_stringify(v) for v in value]
    return value


def _prefix_match(actual, expected) -> int:
    """Length of the longest common prefix."""
    k = 0
    while k < min(len(actual), len(expected)) and actual[k] == expected[k]:
        k += 1
    return k


def check_vhcon_a(nmax: int) -> ConjectureReport:
    """<z^k> VH_n equals <z^k> prod_{m>=1} (1+z^m)^2 for k <= n-2."""
    report = ConjectureReport("vhcon-a", (2, nmax))
    widest = {}
    for n in range(2, nmax + 1):
        vh = vh_poly(n).coeffs
        series = distinct_parts(len(vh) + 1, types=2)
        agree = _prefix_match(vh, series)
        widest[n] = agree - 1
        if agree < n - 1:
            report.fail(n, f"coefficient {agree}: {vh[agree]} != {series[agree]}")
    report.witnesses["max_k_matching"] = widest
    return report


def check_vhcon_b(nmax: int) -> ConjectureReport:
    """<z^(deg-k)> VH_n equals 2 <z^k> prod_{m>=1} (1+z^m) for k < n-3."""
    report = ConjectureReport("vhcon-b", (2, nmax))
    widest = {}
    for n in range(2, nmax + 1):
        top = vh_poly(n).coeffs[::-1]
        twice = [2 * c for c in distinct_parts(len(top) + 1)]
        agree = _prefix_match(top, twice)
        widest[n] = agree - 1
        if agree < n - 3:
            report.fail(n, f"k={agree}: {top[agree]} != {twice[agree]}")
    report.witnesses["max_k_matching"] = widest
    return report


def check_pcon_a(nmax: int) -> ConjectureReport:
    """Prefix stabilization: when n = 2 mod 2^k, <z^i> P_n = <z^i> P_(n+j)
    for i <= (n-2)/2^(k-1) and j <= 2^k.

    ``n + j`` ranges up to ``nmax``. The literal reading sets the status;
    the witnesses record, per (n, k), the largest j for which the window
    holds and whether the reading with j < 2^k holds throughout.
    """
    report = ConjectureReport("pcon-a", (3, nmax))
    windows = []
    strict_ok = True
    for n in range(3, nmax + 1):
        k = 1
        while 2 ** k <= n:
            if n % 2 ** k == 2 and n + 2 ** k <= nmax:
                limit = (n - 2) // 2 ** (k - 1)
                base = p_poly(n)
                largest_j = 0
                for j in range(1, 2 ** k + 1):
                    other = p_poly(n + j)
                    bad = next((i for i in range(limit + 1) if base[i] != other[i]), None)
                    if bad is not None:
                        report.fail(n, f"k={k}, j={j}, i={bad}: {base[bad]} != {other[bad]}")
                        if j < 2 ** k:
                            strict_ok = False
                        break
                    largest_j = j
                windows.append({"n": n, "k": k, "i_max": limit, "j_max_holding": largest_j})
            k += 1
    report.witnesses["windows"] = windows
    report.witnesses["strict_j_reading_holds"] = strict_ok
    return report


def _alpha_bracket(p, lo=Fraction(-1), hi=Fraction(-1, 2), width=Fraction(1, 2**48)):
    return isolate_root(p, lo, hi, width)


def check_pcon_bc(nmax: int) -> tuple[ConjectureReport, ConjectureReport]:
    """Odd n: one real root, in (-1, -1/2], decreasing in n.  Even n: none."""
    top = min(nmax, STURM_NMAX)
    odd = ConjectureReport("pcon-b", (3, top))
    even = ConjectureReport("pcon-c", (4, top))
    brackets: dict[int, tuple[Fraction, Fraction]] = {}
    previous = None
    for n in range(3, top + 1):
        p = p_poly(n)
        seq = sturm_sequence(p)
        bound = root_bound(p)
        total = count_roots(p, -bound, bound, seq)
        if n % 2 == 0:
            if total:
                even.fail(n, f"{total} real roots")
            continue
        inside = count_roots(p, -1, Fraction(-1, 2))
        if total != 1 or inside != 1:
            odd.fail(n, f"{total} real roots, {inside} in (-1, -1/2]")
            continue
        lo, hi = _alpha_bracket(p)
        brackets[n] = (lo, hi)
        if previous is not None:
            plo, phi = brackets[previous]
            # refine both until the brackets separate or the order is clear
            width = Fraction(1, 2**48)
            while not (hi < plo or phi < lo) and width > Fraction(1, 2**200):
                width /= 2**16
                lo, hi = _alpha_bracket(p, lo, hi, width)
                plo, phi = _alpha_bracket(p_poly(previous), plo, phi, width)
                brackets[n], brackets[previous] = (lo, hi), (plo, phi)
            if not hi < plo:
                odd.fail(n, f"alpha_{n} is not below alpha_{previous}")
        previous = n
    odd.witnesses["alpha"] = {n: float((lo + hi) / 2) for n, (lo, hi) in brackets.items()}
    odd.witnesses["alpha_bracket"] = {n: [lo, hi] for n, (lo, hi) in brackets.items()}
    return odd, even


def check_pcon_e(nmax: int) -> ConjectureReport:
    report = ConjectureReport("pcon-e", (2, nmax))
    series = pn_neg1_series(nmax - 2)
    values = []
    for n in range(2, nmax + 1):
        value = p_poly(n)(-1)
        values.append(value)
        if value != series[n - 2]:
            report.fail(n, f"P_{n}(-1) = {value}, series gives {series[n - 2]}")
    listed = min(len(P_AT_MINUS_ONE), len(values))
    report.witnesses["values"] = values
    report.witnesses["published_list_matches"] = tuple(values[:listed]) == P_AT_MINUS_ONE[:listed]
    if not report.witnesses["published_list_matches"]:
        report.fail(2 + _prefix_match(values, P_AT_MINUS_ONE), "published P_n(-1) list differs")
    return report


def check_pcon_f(nmax: int, start: int = 20) -> ConjectureReport:
    report = ConjectureReport("pcon-f", (start, nmax))
    for n in range(start + start % 2, nmax + 1, 2):
        p = p_poly(n)
        if p.abs_sum() != p(-1):
            report.fail(n, f"sum |coeff| = {p.abs_sum()}, P_{n}(-1) = {p(-1)}")
    sums = [p_poly(n).abs_sum() for n in range(2, min(nmax, 1 + len(P_ABS_COEFF_SUMS)) + 1)]
    report.witnesses["abs_sums"] = sums
    report.witnesses["published_list_matches"] = tuple(sums) == P_ABS_COEFF_SUMS[: len(sums)]
    if not report.witnesses["published_list_matches"]:
        report.fail(2 + _prefix_match(sums, P_ABS_COEFF_SUMS), "published absolute-sum list differs")
    return report


def check_conjectures(nmax: int) -> list[ConjectureReport]:
    if nmax < 3:
        raise ValueError("nmax must be at least 3")
    odd, even = check_pcon_bc(nmax)
    return [
        check_vhcon_a(nmax),
        check_vhcon_b(nmax),
        check_pcon_a(nmax),
        odd,
        even,
        check_pcon_e(nmax),
        check_pcon_f(nmax),
    ]
