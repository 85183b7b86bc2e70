from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable

from helpers.errors import UsageError

Face = frozenset[int]


def face_key(F: Face):
    return (len(F), tuple(sorted(F)))


@dataclass(frozen=True)
class SimplicialComplex:
    """
    Simplicial complex on the vertices 1..n.

    ``faces`` empty is the void complex; ``faces == {∅}`` is the complex
    whose only face is the empty set. The two have different reduced cohomology.
    """
    n: int
    faces: frozenset[Face]

    def __post_init__(self):
        for F in self.faces:
            if any(v < 1 or v > self.n for v in F):
                raise UsageError(f"face {sorted(F)} is not on the vertices 1..{self.n}")
            for v in F:
                if F - {v} not in self.faces:
                    raise UsageError(f"face {sorted(F)} is present but {sorted(F - {v})} is not")

    @classmethod
    def void(cls, n: int) -> "SimplicialComplex":
        return cls(n, frozenset())

    @classmethod
    def empty_face(cls, n: int) -> "SimplicialComplex":
        return cls(n, frozenset({frozenset()}))

    @classmethod
    def from_facets(cls, n: int, facets: Iterable[Iterable[int]]) -> "SimplicialComplex":
        faces = set()
        for facet in facets:
            facet = sorted(facet)
            for size in range(len(facet) + 1):
                faces.update(frozenset(c) for c in itertools.combinations(facet, size))
        return cls(n, frozenset(faces))

    @classmethod
    def boundary_of_simplex(cls, n: int) -> "SimplicialComplex":
        return cls.from_facets(n, itertools.combinations(range(1, n + 1), n - 1))

    def __contains__(self, F) -> bool:
        return frozenset(F) in self.faces

    def __len__(self) -> int:
        return len(self.faces)

    def is_void(self) -> bool:
        return not self.faces

    def is_subcomplex_of(self, other: "SimplicialComplex") -> bool:
        return self.n == other.n and self.faces <= other.faces

    def faces_of_size(self, size: int) -> list[Face]:
        return sorted((F for F in self.faces if len(F) == size), key=face_key)

    def sorted_faces(self) -> list[Face]:
        return sorted(self.faces, key=face_key)

    def as_json(self):
        return [sorted(F) for F in self.sorted_faces()]
