from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Callable

from helpers import degrees
from helpers.degrees import Box, Multidegree
from helpers.errors import ComplexError
from helpers.linalg import CochainComplex, ExactMatrix, FieldSpec


def _nonzero(table: dict) -> dict:
    return {key: value for key, value in table.items() if value}


@dataclass
class ModuleRep:
    """
    A positively t-determined module stored on the box [0,t]: a dimension per
    degree and one multiplication matrix x_j: M_a → M_{a+ε_j} per direction.
    """
    t: Multidegree
    field: FieldSpec
    dims: dict[Multidegree, int]
    mult: dict[tuple[int, Multidegree], ExactMatrix] = dc_field(default_factory=dict)

    def __post_init__(self):
        self.dims = _nonzero(self.dims)
        self.validate()

    @property
    def n(self) -> int:
        return len(self.t)

    @property
    def box(self) -> Box:
        return Box.upto(self.t)

    def dim(self, a) -> int:
        return self.dims.get(tuple(a), 0)

    def x(self, j: int, a) -> ExactMatrix:
        a = tuple(a)
        found = self.mult.get((j, a))
        if found is None:
            return ExactMatrix.zeros(self.field, self.dim(degrees.add(a, degrees.unit(self.n, j))), self.dim(a))
        return found

    def is_zero(self) -> bool:
        return not self.dims

    def validate(self):
        n = self.n
        for (j, a), m in self.mult.items():
            up = degrees.add(a, degrees.unit(n, j))
            if m.shape != (self.dim(up), self.dim(a)):
                raise ComplexError(f"x_{j + 1} at {a} has shape {m.shape}")
        for a in self.box:
            for i in range(n):
                for j in range(i + 1, n):
                    ai = degrees.add(a, degrees.unit(n, i))
                    aj = degrees.add(a, degrees.unit(n, j))
                    if not (ai in self.box and aj in self.box):
                        continue
                    if self.x(j, ai) @ self.x(i, a) != self.x(i, aj) @ self.x(j, a):
                        raise ComplexError(f"x_{i + 1} and x_{j + 1} do not commute at {a}")

    def as_complex(self, q: int = 0) -> "ComplexOfReps":
        return ComplexOfReps(
            t=self.t,
            field=self.field,
            dims={(q, a): d for a, d in self.dims.items()},
            mult={(q, j, a): m for (j, a), m in self.mult.items()},
        )


@dataclass
class ComplexOfReps:
    """
    Chain complex of positively t-determined modules, homologically indexed.

    ``dims[(q, r)]`` is the dimension of C_q in degree r, ``diff[(q, r)]`` is
    d: C_{q,r} → C_{q-1,r} and ``mult[(q, j, r)]`` is x_j: C_{q,r} → C_{q,r+ε_j}.
    Missing matrices are zero.
    """
    t: Multidegree
    field: FieldSpec
    dims: dict[tuple[int, Multidegree], int]
    diff: dict[tuple[int, Multidegree], ExactMatrix] = dc_field(default_factory=dict)
    mult: dict[tuple[int, int, Multidegree], ExactMatrix] = dc_field(default_factory=dict)
    check: bool = True

    def __post_init__(self):
        self.t = degrees.degree(self.t)
        self.dims = _nonzero(self.dims)
        if self.check:
            self.validate()

    @property
    def n(self) -> int:
        return len(self.t)

    @property
    def box(self) -> Box:
        return Box.upto(self.t)

    def dim(self, q: int, r) -> int:
        return self.dims.get((q, tuple(r)), 0)

    def d(self, q: int, r) -> ExactMatrix:
        r = tuple(r)
        found = self.diff.get((q, r))
        if found is None:
            return ExactMatrix.zeros(self.field, self.dim(q - 1, r), self.dim(q, r))
        return found

    def x(self, q: int, j: int, r) -> ExactMatrix:
        r = tuple(r)
        found = self.mult.get((q, j, r))
        if found is None:
            up = degrees.add(r, degrees.unit(self.n, j))
            return ExactMatrix.zeros(self.field, self.dim(q, up), self.dim(q, r))
        return found

    def indices(self) -> list[int]:
        return sorted({q for q, _ in self.dims})

    def cells(self) -> int:
        return sum(self.dims.values())

    def is_zero(self) -> bool:
        return not self.dims

    def term(self, q: int) -> ModuleRep:
        return ModuleRep(
            t=self.t,
            field=self.field,
            dims={r: d for (p, r), d in self.dims.items() if p == q},
            mult={(j, r): m for (p, j, r), m in self.mult.items() if p == q},
        )

    def validate(self):
        n = self.n
        for (q, r), m in self.diff.items():
            if m.shape != (self.dim(q - 1, r), self.dim(q, r)):
                raise ComplexError(f"d at index {q}, degree {r} has shape {m.shape}")
        for (q, j, r), m in self.mult.items():
            if m.shape != (self.dim(q, degrees.add(r, degrees.unit(n, j))), self.dim(q, r)):
                raise ComplexError(f"x_{j + 1} at index {q}, degree {r} has shape {m.shape}")
        indices = self.indices()
        if not indices:
            return
        for q in range(indices[0], indices[-1] + 2):
            for r in self.box:
                if not (self.d(q - 1, r) @ self.d(q, r)).is_zero():
                    raise ComplexError(f"d∘d is not zero at index {q}, degree {r}")
                for j in range(n):
                    up = degrees.add(r, degrees.unit(n, j))
                    if up not in self.box:
                        continue
                    if self.d(q, up) @ self.x(q, j, r) != self.x(q - 1, j, r) @ self.d(q, r):
                        raise ComplexError(f"d does not commute with x_{j + 1} at index {q}, degree {r}")
            self.term(q)

    def slice(self, r) -> CochainComplex:
        """The degree-r part as a cochain complex, C^i = C_{-i}."""
        r = tuple(r)
        return CochainComplex(
            self.field,
            {-q: d for (q, s), d in self.dims.items() if s == r},
            {-q: m for (q, s), m in self.diff.items() if s == r},
            check=False,
        )

    def slice_map(self, j: int, r) -> dict[int, ExactMatrix]:
        """x_j from the degree-r slice to the degree r+ε_j slice, as cochain maps."""
        r = tuple(r)
        return {-q: m for (q, i, s), m in self.mult.items() if i == j and s == r}


@dataclass(eq=False)
class CohomologyTable:
    """
    Finitely supported table (i, r) → dim H^i, optionally with the ranks of
    x_j: H^i_{r-ε_j} → H^i_r keyed by (i, r, j). Zero entries are not stored.
    """
    t: Multidegree
    dims: dict[tuple[int, Multidegree], int] = dc_field(default_factory=dict)
    ranks: dict[tuple[int, Multidegree, int], int] = dc_field(default_factory=dict)
    with_mult: bool = False

    def __post_init__(self):
        self.t = degrees.degree(self.t)
        self.dims = _nonzero(self.dims)
        self.ranks = _nonzero(self.ranks)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CohomologyTable):
            return NotImplemented
        return self.t == other.t and self.dims == other.dims and self.ranks == other.ranks

    def dim(self, i: int, r) -> int:
        return self.dims.get((i, tuple(r)), 0)

    def mult_rank(self, i: int, r, j: int) -> int:
        return self.ranks.get((i, tuple(r), j), 0)

    def indices(self) -> list[int]:
        return sorted({i for i, _ in self.dims})

    nonvanishing_indices = indices

    def is_empty(self) -> bool:
        return not self.dims

    def vanishes(self, i: int) -> bool:
        return all(key[0] != i for key in self.dims)

    def degrees_at(self, i: int) -> list[Multidegree]:
        return sorted(r for (k, r) in self.dims if k == i)

    def shifted(self, m: int) -> "CohomologyTable":
        """Table of the shifted complex: H^i(T^m C) = H^{i+m}(C)."""
        return CohomologyTable(
            t=self.t,
            dims={(i - m, r): d for (i, r), d in self.dims.items()},
            ranks={(i - m, r, j): v for (i, r, j), v in self.ranks.items()},
            with_mult=self.with_mult,
        )

    def reindexed(self, q: Callable[[Multidegree], Multidegree], t_new) -> "CohomologyTable":
        """Pull the table back along a degree map q: [0, t_new] → [0, t]."""
        box = Box.upto(t_new)
        dims = {}
        for i in self.indices():
            for d in box:
                dims[(i, d)] = self.dim(i, q(d))
        return CohomologyTable(t=t_new, dims=dims)

    def without_mult(self) -> "CohomologyTable":
        return CohomologyTable(t=self.t, dims=dict(self.dims))

    def first_difference(self, other: "CohomologyTable"):
        keys = sorted(set(self.dims) | set(other.dims))
        for key in keys:
            if self.dims.get(key, 0) != other.dims.get(key, 0):
                return {"i": key[0], "r": list(key[1]), "left": self.dims.get(key, 0), "right": other.dims.get(key, 0)}
        for key in sorted(set(self.ranks) | set(other.ranks)):
            if self.ranks.get(key, 0) != other.ranks.get(key, 0):
                return {
                    "i": key[0], "r": list(key[1]), "j": key[2] + 1,
                    "left_rank": self.ranks.get(key, 0), "right_rank": other.ranks.get(key, 0),
                }
        return None

    def rows(self) -> list[dict]:
        return [{"i": i, "r": list(r), "dim": d} for (i, r), d in sorted(self.dims.items())]

    def mult_rows(self) -> list[dict]:
        return [
            {"i": i, "r": list(r), "j": j + 1, "mult_rank": v}
            for (i, r, j), v in sorted(self.ranks.items())
        ]

    def as_json(self) -> dict:
        payload = {"t": list(self.t), "rows": self.rows()}
        if self.with_mult:
            payload["mult"] = self.mult_rows()
        return payload
