"""
Acceptance gate: one check per criterion, each printing a single PASS/FAIL line.

Every criterion runs the same check family that `artin-dn sweep` runs, at the parameters and
runtime budgets below. Run standalone with `python3 tests/test_acceptance.py`.
"""
from __future__ import annotations

import dataclasses
import sys
import time

import pytest

from artin_dn import checks

P_GRID = range(-2, 3)
Q_GRID = range(-2, 3)


@dataclasses.dataclass(frozen=True)
class Criterion:
    number: int
    title: str
    family: str
    n_min: int
    n_max: int
    ps: tuple[int, ...] = (0,)
    qs: tuple[int, ...] = (0,)
    budget: float | None = None  # seconds
    extra: tuple[tuple[str, object], ...] = ()

    def cells(self) -> list[checks.Cell]:
        return checks.plan(self.n_min, self.n_max, self.ps, self.qs, families=[self.family], **dict(self.extra))


CRITERIA = [
    Criterion(1, "Garside identities, A and D, n=4..8", "garside", 4, 8, budget=60),
    Criterion(2, "Delta[A_r]^2 product formula, r=1..7", "delta_square", 4, 7, budget=30,
              extra=(("square_ranks", tuple(range(1, 8))),)),
    Criterion(3, "homomorphism catalog and its identities, n=4..8, p,q=-2..2", "catalog", 4, 8,
              tuple(P_GRID), tuple(Q_GRID)),
    Criterion(4, "gamma_p(u) = u Delta^(kappa p z(u)) and z scaling, 500 words per (n,p)", "gamma_scaling", 4, 8,
              tuple(P_GRID), extra=(("samples", 500),)),
    Criterion(5, "pi(Delta) and beta_pq(Delta[A]^2kappa), n=4..7, p,q=-1..1", "delta_images", 4, 7,
              (-1, 0, 1), (-1, 0, 1)),
    Criterion(6, "lifting honest, inner and perturbed candidates; 20 broken ones fail", "lifting", 4, 8),
    Criterion(7, "kernel generators lie in Ker(pi), n=4..8", "kernel", 4, 8),
    Criterion(8, "homology relations, form, forgetful square, n=4..9", "homology", 4, 9),
    Criterion(9, "1000 relation rewrites per (type, n=4..8) keep the normal form", "nf_soundness", 4, 8,
              budget=300, extra=(("rewrites", 1000),)),
    Criterion(10, "pinch test separates beta-pi and cyclic maps from gamma_p", "pinch", 4, 8,
              tuple(P_GRID), tuple(Q_GRID)),
]


def evaluate(c: Criterion) -> tuple[bool, str]:
    start = time.perf_counter()
    report = checks.run_family(c.family, c.cells())
    elapsed = time.perf_counter() - start
    ok = report.ok and (c.budget is None or elapsed <= c.budget)
    budget = f" budget {c.budget:.0f}s" if c.budget else ""
    line = (
        f"{'PASS' if ok else 'FAIL'} criterion {c.number:2d}: {c.title} "
        f"[{report.passed} checks, {report.failed} failed, {elapsed:.1f}s{budget}]"
    )
    for f in report.failures[:5]:
        line += f"\n    {f}"
    return ok, line


@pytest.mark.parametrize("criterion", CRITERIA, ids=lambda c: f"{c.number:02d}-{c.family}")
def test_criterion(criterion, capsys):
    ok, line = evaluate(criterion)
    with capsys.disabled():
        print("\n" + line, flush=True)
    assert ok, line


if __name__ == "__main__":
    results = [evaluate(c) for c in CRITERIA]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
