"""Difference-constraint feasibility with exact strict inequalities.

Systems of constraints x_a - x_b <= w or x_a - x_b < w over the rationals.
Strictness is handled symbolically: edge weights are pairs (w, s) where s
counts strict edges, ordered lexicographically with more strictness counting
as smaller.  A Bellman-Ford pass then either finds a witness of the form
x_v = p_v - q_v * eps, valid for every sufficiently small eps > 0, or proves
infeasibility via a cycle of total weight < (0, 0).  A concrete rational eps
is computed from the slacks afterwards, so no numeric epsilon ever appears.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional


@dataclass(frozen=True)
class Constraint:
    """x[a] - x[b] <= w, strict when strict=True."""

    a: int
    b: int
    w: Fraction
    strict: bool = False


def _less(w1: Fraction, s1: int, w2: Fraction, s2: int) -> bool:
    # (w, s) represents w - s*eps; smaller means tighter.
    return w1 < w2 or (w1 == w2 and s1 > s2)


def solve_difference_constraints(
    nvars: int, constraints: list[Constraint]
) -> Optional[list[Fraction]]:
    """A rational witness satisfying every constraint, or None if infeasible."""
    # Virtual source: dist 0 to every variable, then relax nvars * |E| times.
    dist_w = [Fraction(0)] * nvars
    dist_s = [0] * nvars
    for _ in range(nvars):
        changed = False
        for c in constraints:
            # edge b -> a with weight (w, strict): dist[a] <= dist[b] + w
            nw = dist_w[c.b] + c.w
            ns = dist_s[c.b] + (1 if c.strict else 0)
            if _less(nw, ns, dist_w[c.a], dist_s[c.a]):
                dist_w[c.a] = nw
                dist_s[c.a] = ns
                changed = True
        if not changed:
            break
    else:
        # One more pass; any further improvement means a negative cycle.
        for c in constraints:
            nw = dist_w[c.b] + c.w
            ns = dist_s[c.b] + (1 if c.strict else 0)
            if _less(nw, ns, dist_w[c.a], dist_s[c.a]):
                return None

    # dist satisfies dist[a] - dist[b] <= (w, s) lexicographically; pick eps.
    eps_bound: Optional[Fraction] = None
    for c in constraints:
        margin = c.w - (dist_w[c.a] - dist_w[c.b])
        qdiff = dist_s[c.a] - dist_s[c.b]  # x_a - x_b gains -qdiff * eps
        if margin > 0 and qdiff < 0:
            cand = margin / (-qdiff)
            if eps_bound is None or cand < eps_bound:
                eps_bound = cand
    eps = (eps_bound / 2) if eps_bound is not None else Fraction(1)
    x = [dist_w[v] - dist_s[v] * eps for v in range(nvars)]
    for c in constraints:
        gap = x[c.a] - x[c.b] - c.w
        assert gap < 0 if c.strict else gap <= 0
    return x
