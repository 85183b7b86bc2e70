"""Exact linear algebra over GF(p) and ℚ.

Matrices are numpy arrays: int64 reduced mod p for prime fields, object arrays
of ``Fraction`` for the rationals. Nothing in here ever touches a float.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Iterable, Mapping

import numpy as np
import sympy

from .errors import ComplexError, ParseError, UsageError

# keeps every product of two reduced entries inside int64
MAX_PRIME = 2**24


class FieldSpec:
    name = ""
    one = 1

    def zeros(self, rows: int, cols: int) -> np.ndarray:
        raise NotImplementedError

    def coerce(self, data) -> np.ndarray:
        raise NotImplementedError

    def reduce(self, arr: np.ndarray) -> np.ndarray:
        return arr

    def inverse(self, x):
        raise NotImplementedError

    def signed(self, sign: int):
        raise NotImplementedError

    def as_json(self) -> dict:
        raise NotImplementedError

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class PrimeField(FieldSpec):
    p: int = 2

    def __post_init__(self):
        if not sympy.isprime(self.p):
            raise UsageError(f"field characteristic {self.p} is not prime")
        if self.p >= MAX_PRIME:
            raise UsageError(f"prime {self.p} is too large, use p < {MAX_PRIME}")

    @property
    def name(self):
        return "gf2" if self.p == 2 else f"gfp:{self.p}"

    def zeros(self, rows, cols):
        return np.zeros((rows, cols), dtype=np.int64)

    def coerce(self, data):
        return np.asarray(data, dtype=np.int64) % self.p

    def reduce(self, arr):
        return arr % self.p

    def inverse(self, x):
        return pow(int(x), -1, self.p)

    def signed(self, sign):
        return 1 if sign > 0 else self.p - 1

    def as_json(self):
        return {"type": "gfp", "p": self.p}


@dataclass(frozen=True)
class RationalField(FieldSpec):
    name = "q"
    one = Fraction(1)

    def zeros(self, rows, cols):
        return np.full((rows, cols), Fraction(0), dtype=object)

    def coerce(self, data):
        arr = np.asarray(data, dtype=object)
        return np.vectorize(Fraction, otypes=[object])(arr) if arr.size else arr.astype(object)

    def inverse(self, x):
        return 1 / Fraction(x)

    def signed(self, sign):
        return Fraction(1 if sign > 0 else -1)

    def as_json(self):
        return {"type": "q"}


GF2 = PrimeField(2)
QQ = RationalField()


def get_field(value) -> FieldSpec:
    """Read a field from a CLI flag (``gf2``, ``q``, ``gfp:5``, ``5``) or a JSON object."""
    if isinstance(value, FieldSpec):
        return value
    if isinstance(value, Mapping):
        kind = value.get("type")
        if kind == "q":
            return QQ
        if kind == "gfp":
            return PrimeField(int(value.get("p", 2)))
        raise ParseError(f"unknown field type {kind!r}")
    text = f"{value}".strip().lower()
    if text in ("q", "qq", "rationals"):
        return QQ
    if text == "gf2":
        return GF2
    if text.startswith("gfp:"):
        text = text[4:]
    try:
        return PrimeField(int(text))
    except ValueError as exc:
        raise ParseError(f"unknown field {value!r}") from exc


@dataclass(frozen=True, eq=False)
class ExactMatrix:
    field: FieldSpec
    data: np.ndarray

    @classmethod
    def zeros(cls, field, rows, cols):
        return cls(field, field.zeros(rows, cols))

    @classmethod
    def identity(cls, field, n):
        data = field.zeros(n, n)
        for i in range(n):
            data[i, i] = field.one
        return cls(field, data)

    @classmethod
    def from_rows(cls, field, rows, cols=None):
        rows = [list(row) for row in rows]
        if not rows:
            return cls.zeros(field, 0, cols or 0)
        return cls(field, field.coerce(rows).reshape(len(rows), len(rows[0])))

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    @property
    def shape(self):
        return self.data.shape

    @property
    def T(self) -> "ExactMatrix":
        return ExactMatrix(self.field, self.data.T.copy())

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows:
            raise ComplexError(f"cannot compose {self.shape} with {other.shape}")
        if self.cols == 0:
            return ExactMatrix.zeros(self.field, self.rows, other.cols)
        return ExactMatrix(self.field, self.field.reduce(self.data @ other.data))

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        return ExactMatrix(self.field, self.field.reduce(self.data + other.data))

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        return ExactMatrix(self.field, self.field.reduce(self.data - other.data))

    def __neg__(self) -> "ExactMatrix":
        return ExactMatrix(self.field, self.field.reduce(-self.data))

    def scaled(self, sign: int) -> "ExactMatrix":
        if sign == 1:
            return self
        return ExactMatrix(self.field, self.field.reduce(self.data * sign))

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.shape == other.shape and bool(np.array_equal(self.data, other.data))

    def is_zero(self) -> bool:
        return not self.data.any()

    def select_cols(self, cols: Iterable[int]) -> "ExactMatrix":
        cols = list(cols)
        return ExactMatrix(self.field, self.data[:, cols].reshape(self.rows, len(cols)))

    def select_rows(self, rows: Iterable[int]) -> "ExactMatrix":
        rows = list(rows)
        return ExactMatrix(self.field, self.data[rows, :].reshape(len(rows), self.cols))

    def rank(self) -> int:
        return rank(self)

    def tolist(self):
        if isinstance(self.field, PrimeField):
            return self.data.astype(int).tolist()
        return [[f"{x}" for x in row] for row in self.data.tolist()]


def hstack(*blocks: ExactMatrix) -> ExactMatrix:
    field = blocks[0].field
    rows = blocks[0].rows
    data = field.zeros(rows, sum(b.cols for b in blocks))
    col = 0
    for b in blocks:
        data[:, col:col + b.cols] = b.data
        col += b.cols
    return ExactMatrix(field, data)


def block_matrix(field, row_sizes, col_sizes, blocks: Mapping[tuple[int, int], ExactMatrix]) -> ExactMatrix:
    """Assemble a matrix from blocks keyed by (block row, block col); missing blocks are zero."""
    row_starts = np.cumsum([0, *row_sizes])
    col_starts = np.cumsum([0, *col_sizes])
    data = field.zeros(int(row_starts[-1]), int(col_starts[-1]))
    for (i, j), b in blocks.items():
        if b.shape != (row_sizes[i], col_sizes[j]):
            raise ComplexError(f"block {(i, j)} has shape {b.shape}, expected {(row_sizes[i], col_sizes[j])}")
        data[row_starts[i]:row_starts[i + 1], col_starts[j]:col_starts[j + 1]] = b.data
    return ExactMatrix(field, data)


def rref(M: ExactMatrix) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and the pivot columns."""
    field = M.field
    R = M.data.copy()
    m, n = R.shape
    pivots = []
    row = 0
    for col in range(n):
        if row == m:
            break
        candidates = np.flatnonzero(R[row:, col])
        if candidates.size == 0:
            continue
        pivot = row + int(candidates[0])
        if pivot != row:
            R[[row, pivot]] = R[[pivot, row]]
        R[row] = field.reduce(R[row] * field.inverse(R[row, col]))
        others = np.flatnonzero(R[:, col])
        others = others[others != row]
        if others.size:
            R[others] = field.reduce(R[others] - np.outer(R[others, col], R[row]))
        pivots.append(col)
        row += 1
    return R, pivots


def gf2_rank(rows: list[int], n_cols: int) -> int:
    """Rank over GF(2) of rows packed as int bitsets."""
    work = rows[:]
    rank = 0
    for col in range(n_cols):
        pivot = None
        for r in range(rank, len(work)):
            if (work[r] >> col) & 1:
                pivot = r
                break
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        for r in range(rank + 1, len(work)):
            if (work[r] >> col) & 1:
                work[r] ^= work[rank]
        rank += 1
        if rank == len(work):
            break
    return rank


def bareiss_rank(rows: list[list[int]]) -> int:
    """Fraction-free elimination rank of an integer matrix."""
    A = [row[:] for row in rows]
    m = len(A)
    n = len(A[0]) if A else 0
    rank = 0
    prev = 1
    for col in range(n):
        pivot = next((i for i in range(rank, m) if A[i][col] != 0), None)
        if pivot is None:
            continue
        A[rank], A[pivot] = A[pivot], A[rank]
        head = A[rank][col]
        for i in range(rank + 1, m):
            lead = A[i][col]
            for j in range(col + 1, n):
                A[i][j] = (A[i][j] * head - lead * A[rank][j]) // prev
            A[i][col] = 0
        prev = head
        rank += 1
        if rank == m:
            break
    return rank


def _pack_gf2(M: ExactMatrix) -> list[int]:
    return [sum(1 << int(c) for c in np.flatnonzero(row)) for row in M.data]


def _clear_denominators(M: ExactMatrix) -> list[list[int]]:
    rows = []
    for row in M.data:
        values = [Fraction(x) for x in row]
        scale = math.lcm(*(v.denominator for v in values)) if values else 1
        rows.append([int(v * scale) for v in values])
    return rows


def rank(M: ExactMatrix) -> int:
    if M.rows == 0 or M.cols == 0:
        return 0
    if isinstance(M.field, PrimeField) and M.field.p == 2:
        return gf2_rank(_pack_gf2(M), M.cols)
    if isinstance(M.field, RationalField):
        return bareiss_rank(_clear_denominators(M))
    return len(rref(M)[1])


def pivot_columns(M: ExactMatrix) -> list[int]:
    """Greedy left-to-right choice of linearly independent columns."""
    return rref(M)[1]


def kernel_basis(M: ExactMatrix) -> ExactMatrix:
    """Columns spanning ker M."""
    field = M.field
    R, pivots = rref(M)
    pivot_set = set(pivots)
    free = [c for c in range(M.cols) if c not in pivot_set]
    K = field.zeros(M.cols, len(free))
    for idx, f in enumerate(free):
        K[f, idx] = field.one
        for i, p in enumerate(pivots):
            K[p, idx] = field.reduce(-R[i, f])
    return ExactMatrix(field, K)


def solve(A: ExactMatrix, Y: ExactMatrix) -> ExactMatrix:
    """A particular solution X of A·X = Y."""
    if A.rows != Y.rows:
        raise ComplexError(f"cannot solve {A.shape} against {Y.shape}")
    R, pivots = rref(hstack(A, Y))
    n = A.cols
    if any(p >= n for p in pivots):
        raise ComplexError("linear system has no solution")
    X = A.field.zeros(n, Y.cols)
    for i, p in enumerate(pivots):
        X[p, :] = R[i, n:]
    return ExactMatrix(A.field, X)


@dataclass
class CochainComplex:
    """Finite cochain complex; ``diffs[i]`` maps degree i to degree i+1."""

    field: FieldSpec
    dims: dict[int, int]
    diffs: dict[int, ExactMatrix] = dc_field(default_factory=dict)
    check: bool = True

    def __post_init__(self):
        self.dims = {i: d for i, d in self.dims.items() if d}
        if self.check:
            self.validate()

    def dim(self, i: int) -> int:
        return self.dims.get(i, 0)

    def degrees(self) -> range:
        if not self.dims:
            return range(0)
        return range(min(self.dims), max(self.dims) + 1)

    def d(self, i: int) -> ExactMatrix:
        found = self.diffs.get(i)
        if found is None:
            return ExactMatrix.zeros(self.field, self.dim(i + 1), self.dim(i))
        return found

    def validate(self):
        for i, d in self.diffs.items():
            if d.shape != (self.dim(i + 1), self.dim(i)):
                raise ComplexError(f"d^{i} has shape {d.shape}, expected {(self.dim(i + 1), self.dim(i))}")
        for i in self.degrees():
            if not (self.d(i + 1) @ self.d(i)).is_zero():
                raise ComplexError(f"d^{i + 1} ∘ d^{i} is not zero")

    def euler_characteristic(self) -> int:
        return sum((-1) ** (i % 2) * d for i, d in self.dims.items())


def shift_cochain(C: CochainComplex, m: int) -> CochainComplex:
    """(C[m])^i = C^{i+m} with the differential negated m times."""
    sign = -1 if m % 2 else 1
    return CochainComplex(
        C.field,
        {i - m: d for i, d in C.dims.items()},
        {i - m: d.scaled(sign) for i, d in C.diffs.items()},
    )


@dataclass
class CohomologyGroup:
    dim: int
    representatives: ExactMatrix
    frame: ExactMatrix
    image_rank: int

    def project(self, cocycles: ExactMatrix) -> ExactMatrix:
        """Coordinates in this group of the classes of the given cocycles."""
        coords = solve(self.frame, cocycles)
        return coords.select_rows(range(self.image_rank, self.frame.cols))


@dataclass
class CohomologyBasis:
    complex: CochainComplex
    groups: dict[int, CohomologyGroup]

    def dim(self, i: int) -> int:
        group = self.groups.get(i)
        return group.dim if group else 0

    def dims(self) -> dict[int, int]:
        return {i: g.dim for i, g in self.groups.items() if g.dim}

    def euler_characteristic(self) -> int:
        return sum((-1) ** (i % 2) * d for i, d in self.dims().items())


def cohomology(C: CochainComplex) -> CohomologyBasis:
    groups = {}
    for i in C.degrees():
        if not C.dim(i):
            continue
        Z = kernel_basis(C.d(i))
        B = C.d(i - 1)
        candidates = hstack(B, Z)
        chosen = pivot_columns(candidates)
        image_rank = sum(1 for c in chosen if c < B.cols)
        reps = [c for c in chosen if c >= B.cols]
        if len(chosen) != Z.cols:
            raise ComplexError(f"image of d^{i - 1} is not inside ker d^{i}")
        groups[i] = CohomologyGroup(
            dim=len(reps),
            representatives=candidates.select_cols(reps),
            frame=candidates.select_cols(chosen),
            image_rank=image_rank,
        )
    return CohomologyBasis(C, groups)


@dataclass
class CohomologyMap:
    """Per-degree matrices of a map on cohomology, in the chosen bases."""

    maps: dict[int, ExactMatrix]

    def rank(self, i: int) -> int:
        found = self.maps.get(i)
        return rank(found) if found is not None else 0

    def ranks(self) -> dict[int, int]:
        return {i: r for i in self.maps if (r := self.rank(i))}


def _component(f: Mapping[int, ExactMatrix], i, rows, cols, field) -> ExactMatrix:
    found = f.get(i)
    if found is None:
        return ExactMatrix.zeros(field, rows, cols)
    if found.shape != (rows, cols):
        raise ComplexError(f"map in degree {i} has shape {found.shape}, expected {(rows, cols)}")
    return found


def check_chain_map(f: Mapping[int, ExactMatrix], C: CochainComplex, D: CochainComplex):
    degrees = set(C.degrees()) | set(D.degrees())
    for i in sorted(degrees):
        fi = _component(f, i, D.dim(i), C.dim(i), C.field)
        fnext = _component(f, i + 1, D.dim(i + 1), C.dim(i + 1), C.field)
        if not (D.d(i) @ fi - fnext @ C.d(i)).is_zero():
            raise ComplexError(f"map does not commute with the differential in degree {i}")


def induced_map(
    f: Mapping[int, ExactMatrix],
    C: CochainComplex,
    D: CochainComplex,
    HC: CohomologyBasis | None = None,
    HD: CohomologyBasis | None = None,
) -> CohomologyMap:
    check_chain_map(f, C, D)
    HC = HC or cohomology(C)
    HD = HD or cohomology(D)
    maps = {}
    for i, group in HC.groups.items():
        if not group.dim:
            continue
        target = HD.groups.get(i)
        if target is None or not target.dim:
            maps[i] = ExactMatrix.zeros(C.field, 0, group.dim)
            continue
        fi = _component(f, i, D.dim(i), C.dim(i), C.field)
        maps[i] = target.project(fi @ group.representatives)
    return CohomologyMap(maps)


def connecting_map(
    inj: Mapping[int, ExactMatrix],
    surj: Mapping[int, ExactMatrix],
    A: CochainComplex,
    B: CochainComplex,
    C: CochainComplex,
) -> CohomologyMap:
    """δ^i: H^i(C) → H^{i+1}(A) for the short exact sequence 0 → A → B → C → 0."""
    field = B.field
    for i in sorted(set(A.degrees()) | set(B.degrees()) | set(C.degrees())):
        ii = _component(inj, i, B.dim(i), A.dim(i), field)
        si = _component(surj, i, C.dim(i), B.dim(i), field)
        if not (si @ ii).is_zero():
            raise ComplexError(f"composite is not zero in degree {i}")
        if rank(ii) != A.dim(i) or rank(si) != C.dim(i) or B.dim(i) != A.dim(i) + C.dim(i):
            raise ComplexError(f"sequence is not exact in degree {i}")
    check_chain_map(inj, A, B)
    check_chain_map(surj, B, C)

    HA = cohomology(A)
    HC = cohomology(C)
    maps = {}
    for i, group in HC.groups.items():
        if not group.dim:
            continue
        lift = solve(_component(surj, i, C.dim(i), B.dim(i), field), group.representatives)
        boundary = B.d(i) @ lift
        pulled = solve(_component(inj, i + 1, B.dim(i + 1), A.dim(i + 1), field), boundary)
        target = HA.groups.get(i + 1)
        if target is None or not target.dim:
            maps[i] = ExactMatrix.zeros(field, 0, group.dim)
        else:
            maps[i] = target.project(pulled)
    return CohomologyMap(maps)


@dataclass
class MappingCone:
    cone: CochainComplex
    inclusion: dict[int, ExactMatrix]
    projection: dict[int, ExactMatrix]
    shifted_source: CochainComplex


def mapping_cone(g: Mapping[int, ExactMatrix], source: CochainComplex, target: CochainComplex) -> MappingCone:
    """Cone of g: cone^i = source^{i+1} ⊕ target^i, d(x, y) = (-dx, gx + dy)."""
    check_chain_map(g, source, target)
    field = target.field
    degrees = set(target.degrees()) | {i - 1 for i in source.degrees()}
    dims = {i: source.dim(i + 1) + target.dim(i) for i in degrees}
    diffs, inclusion, projection = {}, {}, {}
    for i in sorted(degrees):
        rows = [source.dim(i + 2), target.dim(i + 1)]
        cols = [source.dim(i + 1), target.dim(i)]
        diffs[i] = block_matrix(field, rows, cols, {
            (0, 0): -source.d(i + 1),
            (1, 0): _component(g, i + 1, target.dim(i + 1), source.dim(i + 1), field),
            (1, 1): target.d(i),
        })
        inclusion[i] = block_matrix(field, cols, [target.dim(i)], {
            (1, 0): ExactMatrix.identity(field, target.dim(i)),
        })
        projection[i] = block_matrix(field, [source.dim(i + 1)], cols, {
            (0, 0): ExactMatrix.identity(field, source.dim(i + 1)),
        })
    cone = CochainComplex(field, dims, diffs)
    return MappingCone(cone, inclusion, projection, shift_cochain(source, 1))
