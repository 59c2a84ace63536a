"""Coefficient-sequence diagnostics and theorem checks on computed polynomials."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Mapping

from .enumerator import enumerate_alliances
from .graph import Graph, VertexSet, degree_in_set, is_connected_subset
from .polynomial import AlliancePolynomial, evaluate_at_one, min_support, poly_from_json, poly_to_json


@dataclass(frozen=True)
class SequenceVerdict:
    unimodal: bool
    mode_index: int | None
    mode_unique: bool
    log_concave: bool


def sequence_verdict(p: AlliancePolynomial) -> SequenceVerdict:
    """Unimodality and log-concavity of the coefficients from ``min_support`` to ``degree``.

    Zeros inside that window are kept. Log-concavity is strict
    (``a_i**2 > a_{i-1} * a_{i+1}``) at every interior index, so a window
    with an interior zero is never log-concave.
    """
    lo = min_support(p)
    window = [p[k] for k in range(lo, p.degree + 1)]
    peak = max(window)
    first = window.index(peak)
    last = len(window) - 1 - window[::-1].index(peak)
    unimodal = (
        all(window[i] <= window[i + 1] for i in range(first))
        and all(window[i] == peak for i in range(first, last + 1))
        and all(window[i] >= window[i + 1] for i in range(last, len(window) - 1))
    )
    mode = lo + first if unimodal else None
    mode_unique = unimodal and p[mode - 1] < p[mode] > p[mode + 1]
    log_concave = all(window[i] ** 2 > window[i - 1] * window[i + 1] for i in range(1, len(window) - 1))
    return SequenceVerdict(unimodal, mode, mode_unique, log_concave)


def _light_edges(g: Graph) -> list[tuple[int, int]]:
    return [(u, v) for u, v in g.sorted_edges() if g.degree[u] <= 2 and g.degree[v] <= 2]


def coefficient_checks(g: Graph, p: AlliancePolynomial) -> dict[str, bool]:
    """Each entry is True when the polynomial side agrees with the graph side."""
    a2 = p[2]
    return {
        "a2_le_m": 0 <= a2 <= g.m,
        "a2_eq_m_iff_maxdeg_le_2": (a2 == g.m) == (g.max_degree <= 2),
        "an_eq_1_iff_connected": (p[g.n] == 1) == g.is_connected(),
        "a2_eq_1_iff_unique_light_edge": (a2 == 1) == (len(_light_edges(g)) == 1),
    }


def vanishing_coefficients_agree(g: Graph, p: AlliancePolynomial) -> dict[int, bool]:
    """For every cardinality k, compare ``a_k == 0`` against a direct subset scan.

    The scan asks whether every connected k-subset S has a member v with
    ``deg_S(v) <= floor((deg(v) - 1) / 2)``. Sets ranged over are the connected
    ones, matching what the polynomial counts.
    """
    out = {}
    for k in range(1, g.n + 1):
        every_has_weak = True
        for combo in combinations(range(g.n), k):
            s = VertexSet.of(g, combo)
            if not is_connected_subset(g, s):
                continue
            if not any(degree_in_set(g, v, s) <= (g.degree[v] - 1) // 2 for v in s):
                every_has_weak = False
                break
        out[k] = (p[k] == 0) == every_has_weak
    return out


def check_empty_characterization(p: AlliancePolynomial, g: Graph) -> bool:
    """If ``p`` is ``c*x`` then ``g`` must be the edgeless graph on ``c`` vertices."""
    nonzero = p.terms()
    if set(nonzero) != {1}:
        return True
    return g.n == nonzero[1] and g.m == 0


@dataclass(frozen=True)
class AllianceReport:
    polynomial: AlliancePolynomial
    alliance_number: int
    total_alliances: int
    verdict: SequenceVerdict
    theorem_checks: dict[str, bool] = field(default_factory=dict)

    @property
    def all_checks_pass(self) -> bool:
        return all(self.theorem_checks.values())

    def to_json(self) -> dict[str, Any]:
        return {
            "polynomial": poly_to_json(self.polynomial),
            "alliance_number": self.alliance_number,
            "count": str(self.total_alliances),
            "unimodal": self.verdict.unimodal,
            "log_concave": self.verdict.log_concave,
            "mode": self.verdict.mode_index,
            "checks": dict(self.theorem_checks),
        }

    @classmethod
    def from_json(cls, obj: Mapping[str, Any]) -> AllianceReport:
        poly = poly_from_json(obj["polynomial"])
        verdict = sequence_verdict(poly)
        if (verdict.unimodal, verdict.log_concave, verdict.mode_index) != (obj["unimodal"], obj["log_concave"], obj["mode"]):
            raise ValueError("report verdict does not match its polynomial")
        return cls(
            polynomial=poly,
            alliance_number=int(obj["alliance_number"]),
            total_alliances=int(obj["count"]),
            verdict=verdict,
            theorem_checks={str(k): bool(v) for k, v in obj["checks"].items()},
        )


def report_for(g: Graph, p: AlliancePolynomial) -> AllianceReport:
    return AllianceReport(
        polynomial=p,
        alliance_number=min_support(p),
        total_alliances=evaluate_at_one(p),
        verdict=sequence_verdict(p),
        theorem_checks=coefficient_checks(g, p),
    )


def build_report(g: Graph, *, engine: str = "auto", workers: int | str = 1, budget: float | None = None) -> AllianceReport:
    p, _ = enumerate_alliances(g, engine, workers=workers, budget=budget)
    return report_for(g, p)
