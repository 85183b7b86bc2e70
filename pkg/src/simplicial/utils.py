"""Complexes Δ^b_a(S/I;t), their reduced cohomology and the maps between them."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from helpers import degrees
from helpers.errors import ComplexError, UsageError
from helpers.linalg import (
    CochainComplex,
    CohomologyBasis,
    CohomologyMap,
    ExactMatrix,
    FieldSpec,
    block_matrix,
    cohomology,
    connecting_map,
    induced_map,
)
from ideals.models import SupportProfile

from .models import Face, SimplicialComplex


def mixed_degree(a: Sequence[int], b: Sequence[int], F: Face) -> degrees.Multidegree:
    """a_i off F and b_i + 1 on F."""
    return tuple(b[i] + 1 if (i + 1) in F else a[i] for i in range(len(a)))


def delta_complex(profile: SupportProfile, a: Sequence[int], b: Sequence[int]) -> SimplicialComplex:
    t = profile.t
    n = len(t)
    if len(a) != n or len(b) != n:
        raise UsageError(f"a={tuple(a)} and b={tuple(b)} must have length {n}")
    degrees.require_natural(a, name="lower corner")
    if not degrees.leq(b, t):
        raise UsageError(f"b={tuple(b)} is not below t={tuple(t)}")
    if not degrees.leq(a, degrees.add(b, degrees.ones(n))):
        raise UsageError(f"a={tuple(a)} is not below b+1={degrees.add(b, degrees.ones(n))}")
    faces = set()
    for size in range(n + 1):
        for F in itertools.combinations(range(1, n + 1), size):
            F = frozenset(F)
            x = mixed_degree(a, b, F)
            if degrees.leq(x, t) and profile.is_nonzero(x):
                faces.add(F)
    return SimplicialComplex(n, frozenset(faces))


@dataclass
class ReducedCochainComplex:
    complex: SimplicialComplex
    cochains: CochainComplex
    bases: dict[int, list[Face]]

    def index(self, i: int) -> dict[Face, int]:
        return {F: pos for pos, F in enumerate(self.bases.get(i, []))}


def reduced_cochain_complex(delta: SimplicialComplex, field: FieldSpec) -> ReducedCochainComplex:
    """Cochains in degrees -1..n-1, degree i indexed by the faces with i+1 vertices."""
    bases = {i: delta.faces_of_size(i + 1) for i in range(-1, delta.n)}
    dims = {i: len(faces) for i, faces in bases.items()}
    diffs = {}
    for i in range(-1, delta.n - 1):
        rows, cols = bases[i + 1], bases[i]
        if not rows or not cols:
            continue
        col_index = {F: pos for pos, F in enumerate(cols)}
        data = field.zeros(len(rows), len(cols))
        for r, G in enumerate(rows):
            for pos, v in enumerate(sorted(G)):
                data[r, col_index[G - {v}]] = field.signed(-1 if pos % 2 else 1)
        diffs[i] = ExactMatrix(field, data)
    return ReducedCochainComplex(delta, CochainComplex(field, dims, diffs), bases)


def reduced_cohomology(delta: SimplicialComplex, field: FieldSpec) -> CohomologyBasis:
    return cohomology(reduced_cochain_complex(delta, field).cochains)


def restriction_matrices(
    big: ReducedCochainComplex, small: ReducedCochainComplex
) -> dict[int, ExactMatrix]:
    field = big.cochains.field
    maps = {}
    for i, faces in small.bases.items():
        if not faces or not big.bases.get(i):
            continue
        big_index = big.index(i)
        data = field.zeros(len(faces), len(big.bases[i]))
        for r, F in enumerate(faces):
            data[r, big_index[F]] = field.one
        maps[i] = ExactMatrix(field, data)
    return maps


def restriction_map(sub: SimplicialComplex, delta: SimplicialComplex, field: FieldSpec) -> CohomologyMap:
    """Map H̃(Δ) → H̃(Δ') induced by restricting cochains to a subcomplex Δ'."""
    if not sub.is_subcomplex_of(delta):
        raise UsageError("restriction needs a subcomplex")
    big = reduced_cochain_complex(delta, field)
    small = reduced_cochain_complex(sub, field)
    return induced_map(restriction_matrices(big, small), big.cochains, small.cochains)


def _direct_sum(first: CochainComplex, second: CochainComplex) -> CochainComplex:
    field = first.field
    degrees_ = set(first.degrees()) | set(second.degrees())
    dims = {i: first.dim(i) + second.dim(i) for i in degrees_}
    diffs = {
        i: block_matrix(
            field,
            [first.dim(i + 1), second.dim(i + 1)],
            [first.dim(i), second.dim(i)],
            {(0, 0): first.d(i), (1, 1): second.d(i)},
        )
        for i in degrees_
    }
    return CochainComplex(field, dims, diffs)


def _component(maps, i, rows, cols, field):
    return maps.get(i) or ExactMatrix.zeros(field, rows, cols)


def mv_connecting(
    profile: SupportProfile,
    a: Sequence[int],
    b: Sequence[int],
    alpha: int,
    beta: int,
    j: int,
    field: FieldSpec,
) -> CohomologyMap:
    """
    Connecting map δ^i: H̃^i(Δ^{b+βε_j}_{a+αε_j}) → H̃^{i+1}(Δ^b_a) of the
    Mayer–Vietoris sequence of the cover Δ^b_a = Δ^{b+βε_j}_a ∪ Δ^b_{a+αε_j}.
    ``j`` is a 0-based direction.
    """
    n = len(profile.t)
    if alpha < 0 or beta < 0:
        raise UsageError("alpha and beta must be natural numbers")
    if a[j] + alpha > b[j] + 1:
        raise UsageError(f"a_j + alpha = {a[j] + alpha} exceeds b_j + 1 = {b[j] + 1}")
    shifted_a = degrees.add(a, degrees.scale(alpha, degrees.unit(n, j)))
    shifted_b = degrees.add(b, degrees.scale(beta, degrees.unit(n, j)))
    whole = delta_complex(profile, a, b)
    upper = delta_complex(profile, a, shifted_b)
    lower = delta_complex(profile, shifted_a, b)
    meet = delta_complex(profile, shifted_a, shifted_b)
    if whole.faces != upper.faces | lower.faces:
        raise ComplexError("Mayer–Vietoris cover does not reproduce the whole complex")
    if meet.faces != upper.faces & lower.faces:
        raise ComplexError("Mayer–Vietoris intersection is not the expected complex")

    X = reduced_cochain_complex(whole, field)
    U = reduced_cochain_complex(upper, field)
    V = reduced_cochain_complex(lower, field)
    W = reduced_cochain_complex(meet, field)
    middle = _direct_sum(U.cochains, V.cochains)
    to_upper = restriction_matrices(X, U)
    to_lower = restriction_matrices(X, V)
    upper_to_meet = restriction_matrices(U, W)
    lower_to_meet = restriction_matrices(V, W)

    inj, surj = {}, {}
    for i in range(-1, n):
        du, dv, dx, dw = U.cochains.dim(i), V.cochains.dim(i), X.cochains.dim(i), W.cochains.dim(i)
        inj[i] = block_matrix(field, [du, dv], [dx], {
            (0, 0): _component(to_upper, i, du, dx, field),
            (1, 0): _component(to_lower, i, dv, dx, field),
        })
        surj[i] = block_matrix(field, [dw], [du, dv], {
            (0, 0): _component(upper_to_meet, i, dw, du, field),
            (0, 1): -_component(lower_to_meet, i, dw, dv, field),
        })
    return connecting_map(inj, surj, X.cochains, middle, W.cochains)


def link(delta: SimplicialComplex, A) -> SimplicialComplex:
    A = frozenset(A)
    return SimplicialComplex(
        delta.n, frozenset(F for F in delta.faces if not (F & A) and (F | A) in delta.faces)
    )


def restriction(delta: SimplicialComplex, A) -> SimplicialComplex:
    A = frozenset(A)
    return SimplicialComplex(delta.n, frozenset(F for F in delta.faces if F <= A))


def is_cone(delta: SimplicialComplex, j: int) -> bool:
    """True when F ∈ Δ ⇔ F ∪ {j} ∈ Δ (j a 1-based vertex)."""
    return bool(delta.faces) and all((F | {j}) in delta.faces for F in delta.faces)


def reduced_euler_characteristic(delta: SimplicialComplex) -> int:
    return sum((-1) ** ((len(F) - 1) % 2) for F in delta.faces)
