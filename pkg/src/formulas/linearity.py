"""Linearity predicates on Betti tables and the Cohen–Macaulay test."""

from __future__ import annotations

from typing import Sequence

from helpers import degrees
from helpers.errors import UsageError
from ideals.models import MonomialIdeal
from ideals.utils import require_t_determined
from modreps.models import CohomologyTable


def _clamp(x: int, lo: int, hi: int) -> int:
    return max(lo, min(hi, x))


def is_c_linear(betti: CohomologyTable, c: Sequence[int], n: int | None = None) -> bool:
    """
    Some p0 makes #{j : b_j ≥ c_j} equal clamp(p - p0, 0, n) for every nonzero
    B_p at degree b. The table stores Bⁱ, so p = -i.
    """
    n = len(betti.t) if n is None else n
    if len(c) != n:
        raise UsageError(f"c={tuple(c)} does not have {n} coordinates")
    entries = [(-i, sum(1 for bj, cj in zip(b, c) if bj >= cj)) for (i, b) in betti.dims]
    if not entries:
        return True
    ps = [p for p, _ in entries]
    for p0 in range(min(ps) - n, max(ps) + 1):
        if all(count == _clamp(p - p0, 0, n) for p, count in entries):
            return True
    return False


def is_support_linear(betti: CohomologyTable) -> bool:
    """
    Every generator degree (p = 0) has the same support size d, and
    d ≥ |supp(b)| - p for every nonzero B_p at degree b.
    """
    if betti.is_empty():
        return True
    sizes = {len(degrees.support(b)) for b in betti.degrees_at(0)}
    if len(sizes) != 1:
        return False
    d = sizes.pop()
    return all(d >= len(degrees.support(b)) - (-i) for (i, b) in betti.dims)


def is_cohen_macaulay(table: CohomologyTable) -> bool:
    """For the table of N^1_t(M): exactly one nonvanishing cohomology index."""
    return len(table.indices()) == 1


def two_var_linearity(I: MonomialIdeal, t: Sequence[int], k: Sequence[int]) -> bool:
    """
    Whether T⁴N^{t+1-k}_t(S/I) is (t-k)-linear, read off the generators of I
    for two variables and 1 ≤ k ≤ t.
    """
    t, k = degrees.degree(t), degrees.degree(k)
    if len(t) != 2 or len(k) != 2:
        raise UsageError("the two-variable classification needs n = 2")
    require_t_determined(I, t)
    if not (degrees.leq((1, 1), k) and degrees.leq(k, t)):
        raise UsageError(f"k={k} is outside [1, t] for t={t}")
    gens = I.gens
    if all(degrees.leq(g, k) for g in gens):
        return True
    if len(gens) == 1 and degrees.leq(k, gens[0]):
        return True
    pure_x = any(g[0] > 0 and g[1] == 0 for g in gens)
    pure_y = any(g[0] == 0 and g[1] > 0 for g in gens)
    if pure_x and pure_y:
        return all(g[0] == 0 or g[0] >= k[0] for g in gens) and all(g[1] == 0 or g[1] >= k[1] for g in gens)
    return False
