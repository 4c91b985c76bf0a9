"""Tropical determinants as optimal assignments, with singularity certificates.

The tropical determinant of a square matrix is the minimum over all
permutations of the diagonal sum; the matrix is tropically singular when that
minimum is attained by at least two permutations.  Computing the value is the
linear assignment problem, solved here by the standard O(r^3)
shortest-augmenting-path method, kept exact over the rationals.

Every answer ships with an independently checkable certificate: an optimal
permutation, feasible dual potentials proving optimality, and, in the
singular case, a second optimal permutation found as an alternating cycle in
the tight graph of the duals.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .core import (
    InternalInvariantError,
    ResourceLimitError,
    ShapeError,
    TropMatrix,
)

BRUTE_FORCE_LIMIT = 10


@dataclass(frozen=True)
class SingularityCertificate:
    """Verdict on a square tropical matrix, with everything needed to re-check it.

    ``sigma`` maps row i to the column sigma[i] in one optimal assignment
    (the lexicographically smallest optimal permutation).  ``row_duals`` and
    ``col_duals`` satisfy u_i + v_j <= m_ij with equality on sigma, and sum
    to the determinant value.  ``second_sigma`` is a distinct permutation
    attaining the same value when the matrix is singular, else None.
    """

    det_value: Fraction
    sigma: tuple[int, ...]
    row_duals: tuple[Fraction, ...]
    col_duals: tuple[Fraction, ...]
    second_sigma: Optional[tuple[int, ...]]

    @property
    def is_singular(self) -> bool:
        return self.second_sigma is not None

    def verify(self, m: TropMatrix) -> None:
        """Re-check the certificate against m; raises on any discrepancy."""
        r = m.d
        if sorted(self.sigma) != list(range(r)):
            raise InternalInvariantError("sigma is not a permutation")
        if sum(m[i, self.sigma[i]] for i in range(r)) != self.det_value:
            raise InternalInvariantError("sigma does not attain det_value")
        u, v = self.row_duals, self.col_duals
        for i in range(r):
            for j in range(r):
                if u[i] + v[j] > m[i, j]:
                    raise InternalInvariantError("duals infeasible")
        if sum(u) + sum(v) != self.det_value:
            raise InternalInvariantError("duals do not certify optimality")
        if self.second_sigma is not None:
            s2 = self.second_sigma
            if s2 == self.sigma or sorted(s2) != list(range(r)):
                raise InternalInvariantError("second_sigma invalid")
            if sum(m[i, s2[i]] for i in range(r)) != self.det_value:
                raise InternalInvariantError("second_sigma does not attain det_value")


def _assignment_duals(m: TropMatrix) -> tuple[list[Fraction], list[Fraction]]:
    """Solve the assignment problem, returning feasible optimal duals (u, v)."""
    n = m.d
    cost = m.entries
    # 1-indexed arrays; column 0 is the virtual start of each augmenting path.
    u = [Fraction(0)] * (n + 1)
    v = [Fraction(0)] * (n + 1)
    p = [0] * (n + 1)  # p[j] = row matched to column j
    way = [0] * (n + 1)
    for i in range(1, n + 1):
        p[0] = i
        j0 = 0
        minv: list[Optional[Fraction]] = [None] * (n + 1)  # None = +inf
        used = [False] * (n + 1)
        while True:
            used[j0] = True
            i0 = p[j0]
            delta: Optional[Fraction] = None
            j1 = 0
            for j in range(1, n + 1):
                if used[j]:
                    continue
                cur = cost[i0 - 1][j - 1] - u[i0] - v[j]
                if minv[j] is None or cur < minv[j]:
                    minv[j] = cur
                    way[j] = j0
                if delta is None or minv[j] < delta:
                    delta = minv[j]
                    j1 = j
            assert delta is not None
            for j in range(n + 1):
                if used[j]:
                    u[p[j]] += delta
                    v[j] -= delta
                else:
                    assert minv[j] is not None
                    minv[j] -= delta
            j0 = j1
            if p[j0] == 0:
                break
        while j0 != 0:
            j1 = way[j0]
            p[j0] = p[j1]
            j0 = j1
    row_duals = u[1:]
    col_duals = v[1:]
    return row_duals, col_duals


def _tight_graph(m: TropMatrix, u, v) -> list[list[int]]:
    """tight[i] = columns j with u_i + v_j = m_ij, ascending."""
    return [
        [j for j in range(m.n) if u[i] + v[j] == m[i, j]]
        for i in range(m.d)
    ]


def _has_perfect_matching(tight: list[list[int]], rows: list[int], banned: set[int]) -> bool:
    """Kuhn's algorithm on the tight graph restricted to `rows`, avoiding banned columns."""
    match: dict[int, int] = {}

    def try_row(i: int, seen: set[int]) -> bool:
        for j in tight[i]:
            if j in banned or j in seen:
                continue
            seen.add(j)
            if j not in match or try_row(match[j], seen):
                match[j] = i
                return True
        return False

    for i in rows:
        if not try_row(i, set()):
            return False
    return True


def _lex_smallest_matching(tight: list[list[int]]) -> tuple[int, ...]:
    """Lexicographically smallest perfect matching in the tight graph."""
    r = len(tight)
    chosen: list[int] = []
    used: set[int] = set()
    for i in range(r):
        rest = list(range(i + 1, r))
        for j in tight[i]:
            if j in used:
                continue
            if _has_perfect_matching(tight, rest, used | {j}):
                chosen.append(j)
                used.add(j)
                break
        else:
            raise InternalInvariantError("tight graph lost its perfect matching")
    return tuple(chosen)


def _second_matching(tight: list[list[int]], sigma: tuple[int, ...]) -> Optional[tuple[int, ...]]:
    """A second perfect matching in the tight graph, or None.

    Exists iff the digraph on columns with arcs sigma[i] -> j (for every tight
    (i, j), j != sigma[i]) has a directed cycle; swapping along the cycle keeps
    all edges tight, hence optimal.
    """
    r = len(sigma)
    row_of = {sigma[i]: i for i in range(r)}
    succ = [
        [j for j in tight[row_of[c]] if j != c]
        for c in range(r)
    ]
    color = [0] * r  # 0 unseen, 1 on stack, 2 done
    parent: dict[int, int] = {}

    cycle: Optional[list[int]] = None

    def dfs(c: int) -> Optional[list[int]]:
        color[c] = 1
        for j in succ[c]:
            if color[j] == 0:
                parent[j] = c
                found = dfs(j)
                if found is not None:
                    return found
            elif color[j] == 1:
                cyc = [c]
                while cyc[-1] != j:
                    cyc.append(parent[cyc[-1]])
                cyc.reverse()
                return cyc
        color[c] = 2
        return None

    for start in range(r):
        if color[start] == 0:
            parent[start] = start
            cycle = dfs(start)
            if cycle is not None:
                break
    if cycle is None:
        return None
    sigma2 = list(sigma)
    k = len(cycle)
    for idx in range(k):
        c, cnext = cycle[idx], cycle[(idx + 1) % k]
        sigma2[row_of[c]] = cnext
    return tuple(sigma2)


def trop_det(m: TropMatrix) -> SingularityCertificate:
    """Tropical determinant with a two-permutation singularity certificate."""
    if not m.is_square():
        raise ShapeError(f"determinant needs a square matrix, got {m.shape}")
    u, v = _assignment_duals(m)
    det_value = sum(u) + sum(v)
    tight = _tight_graph(m, u, v)
    sigma = _lex_smallest_matching(tight)
    sigma2 = _second_matching(tight, sigma)
    cert = SingularityCertificate(
        det_value=det_value,
        sigma=sigma,
        row_duals=tuple(u),
        col_duals=tuple(v),
        second_sigma=sigma2,
    )
    cert.verify(m)
    return cert


def _perm_parity(perm: tuple[int, ...]) -> int:
    """0 for even, 1 for odd."""
    seen = [False] * len(perm)
    parity = 0
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        parity ^= (length - 1) & 1
    return parity


def det_bruteforce(m: TropMatrix) -> SingularityCertificate:
    """Same contract as trop_det, by explicit enumeration of all r! permutations.

    Test oracle; guarded at r <= 10.
    """
    if not m.is_square():
        raise ShapeError(f"determinant needs a square matrix, got {m.shape}")
    r = m.d
    if r > BRUTE_FORCE_LIMIT:
        raise ResourceLimitError(f"brute force limited to r <= {BRUTE_FORCE_LIMIT}")
    best: Optional[Fraction] = None
    best_perms: list[tuple[int, ...]] = []
    for perm in itertools.permutations(range(r)):
        s = sum(m[i, perm[i]] for i in range(r))
        if best is None or s < best:
            best = s
            best_perms = [perm]
        elif s == best:
            if len(best_perms) < 2:
                best_perms.append(perm)
    assert best is not None
    sigma = best_perms[0]  # itertools yields permutations in lex order
    # Duals certifying optimality: reuse the assignment solver's potentials.
    u, v = _assignment_duals(m)
    if sum(u) + sum(v) != best:
        raise InternalInvariantError("assignment duals disagree with enumeration")
    cert = SingularityCertificate(
        det_value=best,
        sigma=sigma,
        row_duals=tuple(u),
        col_duals=tuple(v),
        second_sigma=best_perms[1] if len(best_perms) > 1 else None,
    )
    cert.verify(m)
    return cert


def even_odd_minima(m: TropMatrix) -> tuple[Fraction, Optional[Fraction]]:
    """Minimum permutation sums split by parity (even_min, odd_min).

    odd_min is None for 1x1 input, where no odd permutation exists.  Brute
    force by design, guarded at r <= 10; min(even_min, odd_min) equals the
    tropical determinant.
    """
    if not m.is_square():
        raise ShapeError(f"need a square matrix, got {m.shape}")
    r = m.d
    if r > BRUTE_FORCE_LIMIT:
        raise ResourceLimitError(f"brute force limited to r <= {BRUTE_FORCE_LIMIT}")
    even_min: Optional[Fraction] = None
    odd_min: Optional[Fraction] = None
    for perm in itertools.permutations(range(r)):
        s = sum(m[i, perm[i]] for i in range(r))
        if _perm_parity(perm) == 0:
            if even_min is None or s < even_min:
                even_min = s
        else:
            if odd_min is None or s < odd_min:
                odd_min = s
    assert even_min is not None
    return even_min, odd_min
