"""Vanishing of the extreme cohomology groups of N^k_t(S/I), from peaks and indents."""

from __future__ import annotations

from typing import Sequence

from helpers import degrees
from helpers.degrees import Box
from helpers.errors import UsageError
from ideals.models import MonomialIdeal
from ideals.utils import indents, is_interval, peaks, relative_dimension, support_profile

from .models import SingleCase, TwoVarReport, Witness, WitnessReason


def _window(t: Sequence[int], k: Sequence[int]):
    """Check 1 ≤ k ≤ t+1 and return w = t+1-k."""
    t, k = degrees.degree(t), degrees.degree(k)
    n = len(t)
    if len(k) != n:
        raise UsageError(f"k={k} does not match t={t}")
    if not (degrees.leq(degrees.ones(n), k) and degrees.leq(k, degrees.add(t, degrees.ones(n)))):
        raise UsageError(f"k={k} is outside [1, t+1] for t={t}")
    return degrees.sub(degrees.add(t, degrees.ones(n)), k)


def vanishing_h0(I: MonomialIdeal, t: Sequence[int], k: Sequence[int]) -> bool:
    """H⁰ vanishes iff no peak lies in [0, t-k]."""
    w = _window(t, k)
    ceiling = degrees.sub(w, degrees.ones(len(w)))
    return not any(degrees.leq(y, ceiling) for y in peaks(I, t))


def vanishing_top(I: MonomialIdeal, t: Sequence[int], k: Sequence[int]) -> bool:
    """H^{2n-1} vanishes iff no indent is ≥ t+2-k; S itself in one variable is the exception."""
    w = _window(t, k)
    if len(w) == 1 and I.is_zero():
        return False
    floor = degrees.add(w, degrees.ones(len(w)))
    return not any(degrees.leq(floor, y) for y in indents(I, t))


def nonvanishing_witness(I: MonomialIdeal, t: Sequence[int], k: Sequence[int]) -> list[Witness]:
    """
    Peaks y ≤ t+1-k force H^{n-m} ≠ 0 and indents y ≥ t+1-k force H^{n-1+m} ≠ 0,
    m being the relative dimension of y against t+1-k.
    """
    w = _window(t, k)
    n = len(w)
    if I.is_unit():
        return []
    found = []
    for y in peaks(I, t):
        if degrees.leq(y, w):
            found.append(Witness(n - relative_dimension(y, w, "below"), WitnessReason.PEAK, y))
    for y in indents(I, t):
        if degrees.leq(w, y):
            found.append(Witness(n - 1 + relative_dimension(y, w, "above"), WitnessReason.INDENT, y))
    return sorted(found, key=lambda x: (x.i, str(x.reason), x.y))


def two_var_report(I: MonomialIdeal, t: Sequence[int], k: Sequence[int]) -> TwoVarReport:
    w = _window(t, k)
    if len(w) != 2:
        raise UsageError("the two-variable report needs n = 2")
    profile = support_profile(I, t)
    t = profile.t
    support = profile.nonzero
    ceiling = degrees.sub(w, (1, 1))
    low = Box(degrees.zeros(2), w)
    high = Box(w, t)

    complement = [a for a in low if a not in support]
    upper = [a for a in support if a in high]
    support_low = all(degrees.leq(a, ceiling) for a in support)
    w_nonzero = profile.is_nonzero(w)

    h0 = is_interval(complement)
    h3 = is_interval(upper)
    h2 = not w_nonzero
    h1 = w_nonzero or support_low

    case = None
    if support_low:
        case = SingleCase.SUPPORT_LOW
    elif upper and is_interval(upper):
        case = SingleCase.UPPER_INTERVAL
    elif complement and is_interval(complement):
        case = SingleCase.LOWER_COMPLEMENT
    return TwoVarReport(
        h0_vanishes=h0,
        h1_vanishes=h1,
        h2_vanishes=h2,
        h3_vanishes=h3,
        single_nonvanishing=case is not None,
        case=case,
    )
