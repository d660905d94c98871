"""Cross-verification harness: enumeration vs bijections vs the series oracle.

``verify_counts`` checks the four-way count identity (enumerated family
sizes against the generating-function coefficients), ``verify_roundtrips``
exhaustively round-trips every bijection, and ``reproduce_table`` recomputes
the six reference pairing tables that are stored as golden files under
``mexpart/golden/``.  Failures accumulate in the report instead of aborting,
so one run surfaces every discrepancy.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources

from .bijections import (
    even_forward,
    even_inverse,
    mex_forward,
    mex_inverse,
    odd_forward,
    odd_inverse,
)
from .families import Family, count_family, enumerate_family, is_member
from .partitions import conjugate, glaisher_split
from .qseries import gf_pmex

__all__ = [
    "Check",
    "VerificationReport",
    "golden_table",
    "reproduce_table",
    "verify_counts",
    "verify_roundtrips",
]

TABLE_IDS = (1, 2, 3, 4, 5, 6)


@dataclass(frozen=True)
class Check:
    """One comparison: passes iff expected equals actual."""

    name: str
    params: str
    expected: object
    actual: object

    @property
    def passed(self) -> bool:
        return self.expected == self.actual

    def describe(self) -> str:
        status = "ok" if self.passed else "FAIL"
        return f"{status} {self.name} [{self.params}]: expected {self.expected}, actual {self.actual}"


@dataclass(frozen=True)
class VerificationReport:
    checks: tuple[Check, ...]

    @property
    def overall(self) -> bool:
        return all(check.passed for check in self.checks)

    def failures(self) -> list[Check]:
        return [check for check in self.checks if not check.passed]


def verify_counts(max_n: int, max_r: int) -> VerificationReport:
    """Compare enumerated counts with the series oracle for every (n, r).

    For each 0 <= n <= max_n and 1 <= r <= max_r the ``pmex`` count must
    equal the ``obar`` count and the generating-function coefficient, plus
    the ``pe`` count for odd r and the ``po2`` count for even r.
    """
    if max_n < 0 or max_r < 1:
        raise ValueError("need max_n >= 0 and max_r >= 1")
    series = {r: gf_pmex(r, max_n) for r in range(1, max_r + 1)}
    checks = []
    for n in range(max_n + 1):
        for r in range(1, max_r + 1):
            params = f"n={n} r={r}"
            base = count_family(Family("pmex", r), n)
            checks.append(Check("pmex count = series coefficient", params, series[r][n], base))
            checks.append(
                Check("obar count = pmex count", params, base, count_family(Family("obar", r), n))
            )
            if r % 2 == 1:
                checks.append(
                    Check("pe count = pmex count", params, base, count_family(Family("pe", r), n))
                )
            else:
                checks.append(
                    Check("po2 count = pmex count", params, base, count_family(Family("po2", r), n))
                )
    return VerificationReport(tuple(checks))


def _roundtrip_checks(checks, name, params, domain, codomain, forward, inverse):
    bad_image = 0
    bad_identity = 0
    for obj in domain:
        image = forward(obj)
        if not is_member(codomain, image):
            bad_image += 1
        if inverse(image) != obj:
            bad_identity += 1
    checks.append(Check(f"{name}: images in codomain", params, 0, bad_image))
    checks.append(Check(f"{name}: inverse returns source", params, 0, bad_identity))


def verify_roundtrips(max_n: int, max_r: int) -> VerificationReport:
    """Round-trip every applicable bijection over every object at each (n, r)."""
    if max_n < 0 or max_r < 1:
        raise ValueError("need max_n >= 0 and max_r >= 1")
    checks = []
    for n in range(max_n + 1):
        for r in range(1, max_r + 1):
            params = f"n={n} r={r}"
            pmex, obar = Family("pmex", r), Family("obar", r)
            mex_dom = enumerate_family(pmex, n)
            obar_dom = enumerate_family(obar, n)
            _roundtrip_checks(
                checks, "t5", params, mex_dom, obar,
                lambda k, r=r: mex_forward(k, r), lambda o, r=r: mex_inverse(o, r),
            )
            _roundtrip_checks(
                checks, "t5inv", params, obar_dom, pmex,
                lambda o, r=r: mex_inverse(o, r), lambda k, r=r: mex_forward(k, r),
            )
            if r % 2 == 1:
                pe = Family("pe", r)
                _roundtrip_checks(
                    checks, "odd", params, enumerate_family(pe, n), obar,
                    lambda p, r=r: odd_forward(p, r), lambda o, r=r: odd_inverse(o, r),
                )
                _roundtrip_checks(
                    checks, "oddinv", params, obar_dom, pe,
                    lambda o, r=r: odd_inverse(o, r), lambda p, r=r: odd_forward(p, r),
                )
            else:
                po2 = Family("po2", r)
                _roundtrip_checks(
                    checks, "even", params, enumerate_family(po2, n), obar,
                    lambda c, r=r: even_forward(c, r), lambda o, r=r: even_inverse(o, r),
                )
                _roundtrip_checks(
                    checks, "eveninv", params, obar_dom, po2,
                    lambda o, r=r: even_inverse(o, r), lambda c, r=r: even_forward(c, r),
                )
    return VerificationReport(tuple(checks))


def _distinct_partitions(n: int):
    return [p for p in enumerate_family(Family("p"), n) if len(set(p.parts)) == len(p.parts)]


def reproduce_table(table_id: int) -> str:
    """Recompute one of the six reference tables as pairing rows.

    Each row is ``domain<TAB>image`` in the textual grammar; table 4 has two
    blocks (the forward map at r=2 and the inverse map at r=3) separated by
    a blank line.  Every image is computed by the corresponding map, never
    hard-coded.
    """
    if table_id == 1:
        rows = [(d, conjugate(d)) for d in _distinct_partitions(6)]
    elif table_id == 2:
        rows = [(d, glaisher_split(d)) for d in _distinct_partitions(6)]
    elif table_id == 3:
        rows = [(p, odd_forward(p, 1)) for p in enumerate_family(Family("p"), 6)]
    elif table_id == 4:
        forward = [(k, mex_forward(k, 2)) for k in enumerate_family(Family("pmex", 2), 7)]
        backward = [(o, mex_inverse(o, 3)) for o in enumerate_family(Family("obar", 3), 7)]
        lines = [f"{a.text()}\t{b.text()}" for a, b in forward]
        lines.append("")
        lines.extend(f"{a.text()}\t{b.text()}" for a, b in backward)
        return "\n".join(lines) + "\n"
    elif table_id == 5:
        rows = [(p, odd_forward(p, 3)) for p in enumerate_family(Family("pe", 3), 8)]
    elif table_id == 6:
        rows = [(c, even_forward(c, 2)) for c in enumerate_family(Family("po2", 2), 6)]
    else:
        raise ValueError(f"table id must be 1..6, got {table_id!r}")
    return "".join(f"{a.text()}\t{b.text()}\n" for a, b in rows)


def golden_table(table_id: int) -> str:
    """The stored expected text for one table."""
    if table_id not in TABLE_IDS:
        raise ValueError(f"table id must be 1..6, got {table_id!r}")
    path = resources.files("mexpart") / "golden" / f"table{table_id}.txt"
    return path.read_text(encoding="utf-8")
