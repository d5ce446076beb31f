"""Brute-force cross-validation of the closed forms against explicit lattices."""

from __future__ import annotations

import csv
import io
import json
import time
from dataclasses import dataclass, field

from . import formulas, lattice, meet
from .qparam import require_positive_rational

STATISTICS = ("words", "coverings", "intervals", "join_irr", "meet_irr")

_CLOSED = {
    "words": formulas.gf_words,
    "coverings": formulas.gf_coverings,
    "intervals": formulas.gf_intervals,
    "join_irr": lambda q: formulas.gf_join_irreducible(),
    "meet_irr": meet.gf_meet,
}


def _brute(model: lattice.LatticeModel) -> dict[str, int]:
    return {
        "words": len(model),
        "coverings": lattice.count_coverings(model),
        "intervals": lattice.count_intervals(model),
        "join_irr": len(lattice.join_irreducibles(model)),
        "meet_irr": len(lattice.meet_irreducibles(model)),
    }


@dataclass
class Row:
    n: int
    statistic: str
    brute: int
    closed: int

    @property
    def match(self) -> bool:
        return self.brute == self.closed


@dataclass
class VerifyReport:
    q: str
    n_max: int
    rows: list[Row] = field(default_factory=list)
    seconds: dict[int, float] = field(default_factory=dict)
    truncated_at: int | None = None

    @property
    def passed(self) -> bool:
        return self.truncated_at is None and all(r.match for r in self.rows)

    @property
    def mismatches(self) -> list[Row]:
        return [r for r in self.rows if not r.match]

    def table(self, statistic: str) -> list[tuple[int, int, int, bool]]:
        return [(r.n, r.brute, r.closed, r.match) for r in self.rows if r.statistic == statistic]

    def row(self, n: int) -> dict[str, int]:
        return {r.statistic: r.brute for r in self.rows if r.n == n}

    def to_dict(self, timing: bool = False) -> dict:
        out = {
            "q": self.q,
            "n_max": self.n_max,
            "pass": self.passed,
            "truncated_at": self.truncated_at,
            "statistics": {
                s: [
                    {"n": n, "brute": b, "closed": c, "match": m}
                    for n, b, c, m in self.table(s)
                ]
                for s in STATISTICS
            },
        }
        if timing:
            out["seconds"] = {str(n): t for n, t in sorted(self.seconds.items())}
        return out

    def to_json(self, timing: bool = False) -> str:
        return json.dumps(self.to_dict(timing), indent=2) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["q", "n", "statistic", "brute", "closed", "match"])
        for r in self.rows:
            writer.writerow([self.q, r.n, r.statistic, r.brute, r.closed, int(r.match)])
        if self.truncated_at is not None:
            writer.writerow([self.q, self.truncated_at, "TRUNCATED", "", "", 0])
        return buf.getvalue()


def verify(q, n_max: int, cap: int = lattice.DEFAULT_CAP) -> VerifyReport:
    """Compare brute counts on W_n^q with closed-form coefficients for 1 <= n <= n_max.

    If a lattice would exceed ``cap`` the report stops there and records
    ``truncated_at``; a truncated report never passes.
    """
    q = require_positive_rational(q)
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    series = {s: _CLOSED[s](q).integer_series(n_max) for s in STATISTICS}
    report = VerifyReport(str(q), n_max)
    for n in range(1, n_max + 1):
        start = time.perf_counter()
        try:
            model = lattice.build_lattice(n, q, cap=cap)
        except lattice.LatticeTooLarge:
            report.truncated_at = n
            break
        brute = _brute(model)
        for s in STATISTICS:
            report.rows.append(Row(n, s, brute[s], series[s][n]))
        report.seconds[n] = time.perf_counter() - start
    return report


def verify_covers_equivalence(q, n_max: int, cap: int = lattice.DEFAULT_CAP) -> bool:
    """Structural cover test agrees with the definition on every ordered pair, n <= n_max."""
    q = require_positive_rational(q)
    for n in range(1, n_max + 1):
        model = lattice.build_lattice(n, q, cap=cap)
        by_def = lattice.cover_matrix_by_definition(model)
        els = model.elements
        for i, v in enumerate(els):
            for j, w in enumerate(els):
                if lattice.covers(v, w, q) != bool(by_def[i, j]):
                    return False
    return True


__all__ = ["STATISTICS", "Row", "VerifyReport", "verify", "verify_covers_equivalence"]
