"""
Closed forms: the γ/u/v calculus, interval summaries and the cohomology and
Betti tables read off the complexes Δ^b_a(S/I;t).
"""

from __future__ import annotations

import logging
from typing import Sequence

from django.conf import settings

from helpers import degrees
from helpers.degrees import Box, Multidegree
from helpers.errors import UsageError
from helpers.linalg import get_field
from ideals.models import MonomialIdeal, SupportProfile
from ideals.utils import support_profile
from modreps.models import CohomologyTable
from simplicial.utils import delta_complex, mv_connecting, reduced_cohomology, restriction_map

from .models import BettiParams, GuvTriple, IntervalSummary

logger = logging.getLogger(__name__)


def _lengths(t, *others):
    for other in others:
        if len(other) != len(t):
            raise UsageError(f"{tuple(other)} does not match t={tuple(t)}")


def _require_in_box(r, t):
    degrees.require_natural(r, name="r")
    if not degrees.leq(r, t):
        raise UsageError(f"r={tuple(r)} is outside [0, {tuple(t)}]")


def guv(k: Sequence[int], t: Sequence[int], r: Sequence[int]) -> GuvTriple:
    _lengths(t, k, r)
    degrees.require_natural(k, name="k")
    if not degrees.leq(k, degrees.add(t, degrees.ones(len(t)))):
        raise UsageError(f"k={tuple(k)} exceeds t+1, reduce it first")
    _require_in_box(r, t)
    gamma, u, v = 0, [], []
    for kj, tj, rj in zip(k, t, r):
        if kj <= rj:
            u.append(rj - kj)
            v.append(tj - kj)
        else:
            gamma += 1
            u.append(tj - kj + 1)
            v.append(tj - kj + rj + 1)
    return GuvTriple(gamma=gamma, u=tuple(u), v=tuple(v))


def reduce_k(k: Sequence[int], t: Sequence[int]) -> tuple[Multidegree, int]:
    """k_j mod t_j+2 per coordinate, and the number of full periods removed."""
    _lengths(t, k)
    degrees.require_natural(k, name="k")
    periods = sum(kj // (tj + 2) for kj, tj in zip(k, t))
    return tuple(kj % (tj + 2) for kj, tj in zip(k, t)), periods


def interval_nakayama_summary(
    t: Sequence[int], k: Sequence[int], a: Sequence[int], b: Sequence[int]
) -> IntervalSummary:
    """N^k_t(K_t{a,b}), one coordinate at a time, by the one-step interval rule."""
    _lengths(t, k, a, b)
    degrees.require_natural(k, name="k")
    if not degrees.leq(b, t):
        raise UsageError(f"b={tuple(b)} is not below t={tuple(t)}")
    if not degrees.leq(a, b):
        return IntervalSummary.zero()
    gamma, lo, hi = 0, [], []
    for tj, kj, aj, bj in zip(t, k, a, b):
        for _ in range(kj):
            if bj < tj:
                aj, bj = aj + 1, bj + 1
            else:
                aj, bj = 0, aj
                gamma += 1
        lo.append(aj)
        hi.append(bj)
    return IntervalSummary(gamma=gamma, lo=tuple(lo), hi=tuple(hi))


def thecalc1_params(k: Sequence[int], t: Sequence[int], r: Sequence[int]) -> GuvTriple:
    """guv after reducing k, each removed period adding 2 to γ."""
    reduced, periods = reduce_k(k, t)
    params = guv(reduced, t, r)
    return GuvTriple(gamma=params.gamma + 2 * periods, u=params.u, v=params.v)


def betti_params(k: Sequence[int], t: Sequence[int], r: Sequence[int]) -> BettiParams:
    reduced, periods = reduce_k(k, t)
    _require_in_box(r, t)
    gamma, a, b = 2 * periods, [], []
    for kj, tj, rj in zip(reduced, t, r):
        if kj < rj:
            gamma -= 1
            a.append(rj - kj - 1)
            b.append(rj - kj - 1)
        elif kj == rj:
            a.append(0)
            b.append(tj)
        else:
            gamma += 1
            a.append(tj - kj + rj + 1)
            b.append(tj - kj + rj + 1)
    return BettiParams(gamma=gamma, a=tuple(a), b=tuple(b))


def betti_params_recursive(k: Sequence[int], t: Sequence[int], r: Sequence[int]) -> BettiParams:
    """Read (γ, a, b) off N^{k+1}_t(K_t{t-r, t-r}) = K_t{t-b, t-a} in degree γ+n."""
    _lengths(t, k, r)
    _require_in_box(r, t)
    n = len(t)
    corner = degrees.sub(t, r)
    summary = interval_nakayama_summary(t, degrees.add(k, degrees.ones(n)), corner, corner)
    return BettiParams(
        gamma=summary.gamma - n,
        a=degrees.sub(t, summary.hi),
        b=degrees.sub(t, summary.lo),
    )


def _field(field):
    return get_field(field if field is not None else settings.NAK_DEFAULT_FIELD)


def _shifted_dims(profile: SupportProfile, lo, hi, gamma: int, field) -> dict[int, int]:
    delta = delta_complex(profile, lo, hi)
    return {e + gamma + 1: d for e, d in reduced_cohomology(delta, field).dims().items()}


def cohomology_dims_at(profile: SupportProfile, k, r, field) -> dict[int, int]:
    params = thecalc1_params(k, profile.t, r)
    return _shifted_dims(profile, params.u, params.v, params.gamma, field)


def multiplication_rank_formula(
    I: MonomialIdeal,
    t: Sequence[int],
    k: Sequence[int],
    i: int,
    r: Sequence[int],
    j: int,
    field=None,
    profile: SupportProfile | None = None,
) -> int:
    """
    Rank of x_j: Hⁱ N^k_t(S/I)_{r-ε_j} → Hⁱ N^k_t(S/I)_r, with j a 0-based
    direction. For k_j ≠ r_j this is a restriction map between the two
    complexes; for k_j = r_j it is a Mayer–Vietoris connecting map.
    """
    field = _field(field)
    profile = profile or support_profile(I, t)
    t = profile.t
    n = len(t)
    r = degrees.degree(r)
    if not 0 <= j < n:
        raise UsageError(f"direction {j} is outside 0..{n - 1}")
    _require_in_box(r, t)
    if r[j] == 0:
        raise UsageError(f"r={r} has no predecessor in direction {j + 1}")
    reduced, periods = reduce_k(k, t)
    i -= 2 * periods
    s = degrees.sub(r, degrees.unit(n, j))
    here = guv(reduced, t, r)
    if reduced[j] != r[j]:
        there = guv(reduced, t, s)
        small = delta_complex(profile, here.u, here.v)
        big = delta_complex(profile, there.u, there.v)
        return restriction_map(small, big, field).rank(i - here.gamma - 1)
    alpha = t[j] - r[j] + 1
    beta = r[j]
    return mv_connecting(profile, here.u, here.v, alpha, beta, j, field).rank(i - here.gamma - 2)


def cohomology_table_formula(
    I: MonomialIdeal, t: Sequence[int], k: Sequence[int], field=None, with_mult: bool = False
) -> CohomologyTable:
    field = _field(field)
    profile = support_profile(I, t)
    t = profile.t
    n = len(t)
    dims = {}
    for r in Box.upto(t):
        for i, d in cohomology_dims_at(profile, k, r, field).items():
            dims[(i, r)] = d
    ranks = {}
    if with_mult:
        for (i, r) in list(dims):
            for j in range(n):
                if r[j] == 0:
                    continue
                s = degrees.sub(r, degrees.unit(n, j))
                if not dims.get((i, s)):
                    continue
                ranks[(i, r, j)] = multiplication_rank_formula(I, t, k, i, r, j, field, profile=profile)
    logger.debug("formula table for %s, t=%s, k=%s: %s entries", I, t, tuple(k), len(dims))
    return CohomologyTable(t=t, dims=dims, ranks=ranks, with_mult=with_mult)


def betti_table_formula(I: MonomialIdeal, t: Sequence[int], k: Sequence[int], field=None) -> CohomologyTable:
    """Betti spaces Bⁱ of N^k_t(S/I); at k = 0, B^{-p} is the classical β_p."""
    field = _field(field)
    profile = support_profile(I, t)
    dims = {}
    for r in Box.upto(profile.t):
        params = betti_params(k, profile.t, r)
        for i, d in _shifted_dims(profile, params.a, params.b, params.gamma, field).items():
            dims[(i, r)] = d
    return CohomologyTable(t=profile.t, dims=dims)


def local_cohomology(I: MonomialIdeal, t: Sequence[int], i: int, z: Sequence[int], field=None) -> int:
    """dim Hⁱ_m(S/I)_z for any z in ℤⁿ."""
    field = _field(field)
    profile = support_profile(I, t)
    t = profile.t
    _lengths(t, z)
    if any(zj >= tj for zj, tj in zip(z, t)):
        return 0
    r = tuple(max(zj + 1, 0) for zj in z)
    return cohomology_dims_at(profile, degrees.ones(len(t)), r, field).get(i, 0)
