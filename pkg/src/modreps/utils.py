"""
Brute-force side: modules and complexes stored on the box [0,t], the Nakayama
step, the Koszul tensor and cohomology tables computed slice by slice.
"""

from __future__ import annotations

import itertools
import logging
from typing import Sequence

from django.conf import settings

from helpers import degrees
from helpers.degrees import Box, Multidegree
from helpers.errors import ComplexTooLarge, UsageError
from helpers.linalg import ExactMatrix, FieldSpec, block_matrix, cohomology, get_field, induced_map
from ideals.models import MonomialIdeal
from ideals.utils import require_t_determined

from .models import CohomologyTable, ComplexOfReps, ModuleRep

logger = logging.getLogger(__name__)


def _field(field) -> FieldSpec:
    return get_field(field if field is not None else settings.NAK_DEFAULT_FIELD)


def _store(table: dict, key, m: ExactMatrix):
    if m.rows and m.cols:
        table[key] = m


def quotient_module(I: MonomialIdeal, t: Sequence[int], field=None) -> ModuleRep:
    field = _field(field)
    require_t_determined(I, t)
    box = Box.upto(t)
    dims = {a: 0 if I.contains(a) else 1 for a in box}
    one = ExactMatrix.identity(field, 1)
    mult = {}
    for a in box:
        for j in range(box.n):
            up = degrees.add(a, degrees.unit(box.n, j))
            if up in box and dims[a] and dims[up]:
                mult[(j, a)] = one
    return ModuleRep(t=box.hi, field=field, dims=dims, mult=mult)


def interval_module(t: Sequence[int], a: Sequence[int], b: Sequence[int], field=None) -> ModuleRep:
    """K_t{a,b}: K on the degrees of [a,b], identity maps inside; zero when a ≰ b."""
    field = _field(field)
    t = degrees.degree(t)
    degrees.require_natural(t, name="box corner")
    if not degrees.leq(b, t):
        raise UsageError(f"interval end {tuple(b)} is not below t={t}")
    box = Box.upto(t)
    interval = Box(a, b)
    dims = {r: 1 for r in box if r in interval}
    one = ExactMatrix.identity(field, 1)
    mult = {}
    for r in dims:
        for j in range(box.n):
            up = degrees.add(r, degrees.unit(box.n, j))
            if up in dims:
                mult[(j, r)] = one
    return ModuleRep(t=t, field=field, dims=dims, mult=mult)


def concentrated(M: ModuleRep, q: int = 0) -> ComplexOfReps:
    return M.as_complex(q)


def _guard(cells: int, max_cells: int | None):
    cap = settings.NAK_MAX_CELLS if max_cells is None else max_cells
    if cells > cap:
        logger.warning("aborting construction: %s cells above cap %s", cells, cap)
        raise ComplexTooLarge(cells, cap)


def _climb(C: ComplexOfReps, q: int, j: int, start: Multidegree, stop: Multidegree) -> ExactMatrix:
    """Composite of the x_j maps of C_q from degree ``start`` up to ``stop``."""
    n = C.n
    e = degrees.unit(n, j)
    result = ExactMatrix.identity(C.field, C.dim(q, start))
    s = start
    while s != stop:
        result = C.x(q, j, s) @ result
        s = degrees.add(s, e)
    return result


def nakayama_step(C: ComplexOfReps, j: int, max_cells: int | None = None) -> ComplexOfReps:
    """
    One Nakayama step in the 0-based direction j.

    In degree r the result is A ⊕ B with A = C_q(r - ε_j) at index q (zero when
    r_j = 0) and B = C_{q+1}(r̄) at index q, where r̄ is r with r_j raised to t_j.
    d restricts to d_C on A and to -d_C on B; the A → B part is x_j^{t_j - r_j + 1}.
    On B, x_j acts as the identity.
    """
    t, n, field = C.t, C.n, C.field
    if not 0 <= j < n:
        raise UsageError(f"direction {j} is outside 0..{n - 1}")
    box = C.box
    e = degrees.unit(n, j)

    def below(r):
        return degrees.sub(r, e) if r[j] > 0 else None

    def bar(r):
        return degrees.replace(r, j, t[j])

    def a_dim(q, r):
        s = below(r)
        return C.dim(q, s) if s is not None else 0

    def b_dim(q, r):
        return C.dim(q + 1, bar(r))

    qs = C.indices()
    indices = sorted(set(qs) | {q - 1 for q in qs})
    dims = {}
    for q in indices:
        for r in box:
            dims[(q, r)] = a_dim(q, r) + b_dim(q, r)
    _guard(sum(dims.values()), max_cells)

    diff, mult = {}, {}
    for q in indices:
        for r in box:
            if not dims.get((q, r)):
                continue
            s = below(r)
            blocks = {(1, 1): -C.d(q + 1, bar(r))}
            if s is not None:
                blocks[(0, 0)] = C.d(q, s)
                blocks[(1, 0)] = _climb(C, q, j, s, bar(r))
            _store(diff, (q, r), block_matrix(
                field,
                [a_dim(q - 1, r), b_dim(q - 1, r)],
                [a_dim(q, r), b_dim(q, r)],
                blocks,
            ))
            for i in range(n):
                up = degrees.add(r, degrees.unit(n, i))
                if up not in box:
                    continue
                blocks = {}
                if s is not None:
                    blocks[(0, 0)] = C.x(q, i, s)
                if i == j:
                    blocks[(1, 1)] = ExactMatrix.identity(field, b_dim(q, r))
                else:
                    blocks[(1, 1)] = C.x(q + 1, i, bar(r))
                _store(mult, (q, i, r), block_matrix(
                    field,
                    [a_dim(q, up), b_dim(q, up)],
                    [a_dim(q, r), b_dim(q, r)],
                    blocks,
                ))
    result = ComplexOfReps(t=t, field=field, dims=dims, diff=diff, mult=mult)
    logger.debug("nakayama step in direction %s: %s cells", j + 1, result.cells())
    return result


def nakayama(
    C: ComplexOfReps,
    k: Sequence[int],
    order: Sequence[int] | None = None,
    max_cells: int | None = None,
) -> ComplexOfReps:
    """
    Iterate nakayama_step k_j times in each direction. The default order applies
    direction n first and direction 1 last; ``order`` lists 0-based directions
    from innermost to outermost.
    """
    k = degrees.degree(k)
    if len(k) != C.n:
        raise UsageError(f"k={k} does not match t={C.t}")
    degrees.require_natural(k, name="k")
    order = list(reversed(range(C.n))) if order is None else list(order)
    if sorted(order) != list(range(C.n)):
        raise UsageError(f"order {order} is not a permutation of the directions")
    for j in order:
        for _ in range(k[j]):
            C = nakayama_step(C, j, max_cells=max_cells)
    return C


def _subsets(n: int) -> list[tuple[int, ...]]:
    return [E for size in range(n + 1) for E in itertools.combinations(range(n), size)]


def koszul_tensor(C: ComplexOfReps, max_cells: int | None = None) -> ComplexOfReps:
    """
    F ⊗ C with F the Koszul resolution of K. In degree r the index p part is
    ⊕_E C_{p-|E|}(r - ε_E). The differential is (-1)^{|E|} d_C on each summand
    plus Σ_{j∈E} (-1)^{pos(j)} x_j into the E∖{j} summand.
    """
    n, field, box = C.n, C.field, C.box
    subsets = _subsets(n)
    position = {E: pos for pos, E in enumerate(subsets)}

    def lowered(r, E):
        s = tuple(r[i] - (1 if i in E else 0) for i in range(n))
        return s if degrees.is_natural(s) else None

    def part(p, r, E):
        s = lowered(r, E)
        return C.dim(p - len(E), s) if s is not None else 0

    def sizes(p, r):
        return [part(p, r, E) for E in subsets]

    qs = C.indices()
    indices = sorted({q + size for q in qs for size in range(n + 1)})
    dims = {}
    for p in indices:
        for r in box:
            dims[(p, r)] = sum(sizes(p, r))
    _guard(sum(dims.values()), max_cells)

    diff, mult = {}, {}
    for p in indices:
        for r in box:
            if not dims.get((p, r)):
                continue
            d_blocks, x_blocks = {}, {i: {} for i in range(n)}
            for E in subsets:
                s = lowered(r, E)
                if s is None or not part(p, r, E):
                    continue
                q = p - len(E)
                col = position[E]
                d_blocks[(col, col)] = C.d(q, s).scaled(-1 if len(E) % 2 else 1)
                for pos, j in enumerate(E):
                    rest = tuple(i for i in E if i != j)
                    d_blocks[(position[rest], col)] = C.x(q, j, s).scaled(-1 if pos % 2 else 1)
                for i in range(n):
                    if degrees.add(r, degrees.unit(n, i)) in box:
                        x_blocks[i][(col, col)] = C.x(q, i, s)
            _store(diff, (p, r), block_matrix(field, sizes(p - 1, r), sizes(p, r), d_blocks))
            for i in range(n):
                up = degrees.add(r, degrees.unit(n, i))
                if up in box:
                    _store(mult, (p, i, r), block_matrix(field, sizes(p, up), sizes(p, r), x_blocks[i]))
    return ComplexOfReps(t=C.t, field=field, dims=dims, diff=diff, mult=mult)


def cohomology_table(C: ComplexOfReps, with_mult: bool = False) -> CohomologyTable:
    """H^i(C)_r = H_{-i} of the degree-r slice, for every r in [0,t]."""
    n = C.n
    slices, bases = {}, {}
    dims = {}
    for r in C.box:
        slices[r] = C.slice(r)
        bases[r] = cohomology(slices[r])
        for i, d in bases[r].dims().items():
            dims[(i, r)] = d
    ranks = {}
    if with_mult:
        for r in C.box:
            for j in range(n):
                if r[j] == 0:
                    continue
                s = degrees.sub(r, degrees.unit(n, j))
                induced = induced_map(C.slice_map(j, s), slices[s], slices[r], bases[s], bases[r])
                for i, v in induced.ranks().items():
                    ranks[(i, r, j)] = v
    return CohomologyTable(t=C.t, dims=dims, ranks=ranks, with_mult=with_mult)


def module_table(M: ModuleRep) -> CohomologyTable:
    """Dimension table of a module, placed at i = 0."""
    return CohomologyTable(t=M.t, dims={(0, a): d for a, d in M.dims.items()})


def same_module(M: ModuleRep, N: ModuleRep) -> bool:
    """Equal as stored representations: same box, dimensions and matrices."""
    if M.t != N.t or M.dims != N.dims:
        return False
    for a in M.box:
        for j in range(M.n):
            if degrees.add(a, degrees.unit(M.n, j)) in M.box and M.x(j, a) != N.x(j, a):
                return False
    return True


def alexander_dual_module(M: ModuleRep) -> ModuleRep:
    """A_t(M)_a = Hom(M_{t-a}, K); x_j is the transpose of x_j at t - a - ε_j."""
    t, n = M.t, M.n
    box = M.box

    def flip(a):
        return degrees.sub(t, a)

    dims = {a: M.dim(flip(a)) for a in box}
    mult = {}
    for a in box:
        for j in range(n):
            up = degrees.add(a, degrees.unit(n, j))
            if up in box:
                _store(mult, (j, a), M.x(j, flip(up)).T)
    return ModuleRep(t=t, field=M.field, dims=dims, mult=mult)


def shift(C: ComplexOfReps, m: int) -> ComplexOfReps:
    """T^m C: (T^m C)_q = C_{q-m}, with the differential negated m times."""
    sign = -1 if m % 2 else 1
    return ComplexOfReps(
        t=C.t,
        field=C.field,
        dims={(q + m, r): d for (q, r), d in C.dims.items()},
        diff={(q + m, r): d.scaled(sign) for (q, r), d in C.diff.items()},
        mult={(q + m, j, r): x for (q, j, r), x in C.mult.items()},
    )


def interval_complex(k: int, t: int, y: int, field=None) -> ComplexOfReps:
    """
    The complex N^k_t(t-y) in one variable: K_t{k, t-y+k} at index 0 when k ≤ y,
    otherwise the inclusion K_t{k,t} → K_t{k-y-1,t} at indices 0 and -1.
    """
    field = _field(field)
    if not 0 <= y <= t:
        raise UsageError(f"y={y} is outside [0, {t}]")
    if not 0 <= k <= t + 1:
        raise UsageError(f"k={k} is outside [0, {t + 1}]")
    if k <= y:
        return concentrated(interval_module((t,), (k,), (t - y + k,), field))
    source = interval_module((t,), (k,), (t,), field)
    target = interval_module((t,), (k - y - 1,), (t,), field)
    dims = {(0, r): d for r, d in source.dims.items()}
    dims.update({(-1, r): d for r, d in target.dims.items()})
    one = ExactMatrix.identity(field, 1)
    diff = {(0, r): one for r in source.dims if target.dim(r)}
    mult = {(0, j, r): m for (j, r), m in source.mult.items()}
    mult.update({(-1, j, r): m for (j, r), m in target.mult.items()})
    return ComplexOfReps(t=(t,), field=field, dims=dims, diff=diff, mult=mult)


def pullback(C: ComplexOfReps, k: Sequence[int], r: Sequence[int]) -> ComplexOfReps:
    """Reindex C along q_k^r: [0, t+r] → [0, t]; needs k ≤ t."""
    k, r = degrees.degree(k), degrees.degree(r)
    if not degrees.leq(k, C.t):
        raise UsageError(f"k={k} is not below t={C.t}")
    degrees.require_natural(r, name="r")
    n = C.n
    t_new = degrees.add(C.t, r)
    box = Box.upto(t_new)
    image = {d: degrees.q_vector(k, r, d) for d in box}
    dims, diff, mult = {}, {}, {}
    for q in C.indices():
        for d in box:
            dims[(q, d)] = C.dim(q, image[d])
            _store(diff, (q, d), C.d(q, image[d]))
            for j in range(n):
                up = degrees.add(d, degrees.unit(n, j))
                if up not in box:
                    continue
                if image[up] == image[d]:
                    m = ExactMatrix.identity(C.field, C.dim(q, image[d]))
                else:
                    m = C.x(q, j, image[d])
                _store(mult, (q, j, d), m)
    return ComplexOfReps(t=t_new, field=C.field, dims=dims, diff=diff, mult=mult)


def nakayama_table(
    I: MonomialIdeal, t: Sequence[int], k: Sequence[int], field=None, with_mult: bool = False
) -> CohomologyTable:
    """Oracle table of N^k_t(S/I)."""
    M = quotient_module(I, t, field)
    return cohomology_table(nakayama(concentrated(M), k), with_mult=with_mult)


def betti_table(I: MonomialIdeal, t: Sequence[int], k: Sequence[int], field=None) -> CohomologyTable:
    """Oracle Betti spaces B^i(N^k_t(S/I)) through the Koszul tensor; B^{-p} is Tor_p."""
    M = quotient_module(I, t, field)
    return cohomology_table(koszul_tensor(nakayama(concentrated(M), k)))
