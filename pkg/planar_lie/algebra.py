"""
Finite-dimensional spans of planar vector fields.

Fields are flattened into exact coordinate vectors indexed by ``(component, monomial)``
pairs, so membership, closure and every series computation reduce to Gaussian
elimination over Q(i). Nothing in this module uses a numeric tolerance.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import cached_property

from .coeffring import ONE, ZERO, ExpMonomial, ExpPoly, GaussianRational
from .exceptions import EmptySpan, NotClosed
from .fields import VectorField, bracket
from .linalg import Vector, independent_columns, nullspace, solve_in_span
from .utils.logging import setup_logging

logger = setup_logging(__name__)

CoordinateKey = tuple[int, ExpMonomial]


def _keys_of(v: VectorField) -> set[CoordinateKey]:
    return {(0, m) for m in v.p} | {(1, m) for m in v.q}


def _sorted_keys(keys: Iterable[CoordinateKey]) -> tuple[CoordinateKey, ...]:
    return tuple(sorted(keys, key=lambda k: (k[0], k[1].sort_key())))


def _flatten(v: VectorField, index: dict[CoordinateKey, int]) -> Vector:
    out = [ZERO] * len(index)
    for m, c in v.p.terms.items():
        out[index[(0, m)]] = c
    for m, c in v.q.terms.items():
        out[index[(1, m)]] = c
    return tuple(out)


@dataclass(frozen=True)
class StructureConstants:
    """``[e_i, e_j] = sum_k c[i][j][k] * e_k`` for a closed span."""

    c: tuple[tuple[Vector, ...], ...]

    @property
    def dimension(self) -> int:
        return len(self.c)

    def is_zero(self) -> bool:
        return not any(any(vec) for row in self.c for vec in row)

    def is_antisymmetric(self) -> bool:
        n = self.dimension
        return all(
            self.c[i][j][k] == -self.c[j][i][k]
            for i in range(n)
            for j in range(n)
            for k in range(n)
        )

    def satisfies_jacobi(self) -> bool:
        n = self.dimension

        def bracket_coords(u: Vector, v: Vector) -> list[GaussianRational]:
            out = [ZERO] * n
            for a in range(n):
                if not u[a]:
                    continue
                for b in range(n):
                    if not v[b]:
                        continue
                    scale = u[a] * v[b]
                    for k in range(n):
                        out[k] += scale * self.c[a][b][k]
            return out

        basis = [tuple(ONE if a == i else ZERO for a in range(n)) for i in range(n)]
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    total = [ZERO] * n
                    for x, y, z in ((i, j, k), (j, k, i), (k, i, j)):
                        inner = tuple(self.c[y][z])
                        term = bracket_coords(basis[x], inner)
                        total = [t + s for t, s in zip(total, term, strict=True)]
                    if any(total):
                        return False
        return True


class AlgebraSpan:
    """An ordered, linearly independent basis of vector fields."""

    def __init__(self, basis: Sequence[VectorField]):
        self.basis: tuple[VectorField, ...] = tuple(basis)
        keys: set[CoordinateKey] = set()
        for v in self.basis:
            keys |= _keys_of(v)
        self.coordinate_map: tuple[CoordinateKey, ...] = _sorted_keys(keys)
        self._index = {k: i for i, k in enumerate(self.coordinate_map)}
        self._columns = [_flatten(v, self._index) for v in self.basis]

    @classmethod
    def zero(cls) -> AlgebraSpan:
        return cls(())

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def __len__(self) -> int:
        return len(self.basis)

    def __iter__(self):
        return iter(self.basis)

    def __repr__(self) -> str:
        return f"AlgebraSpan([{', '.join(str(v) for v in self.basis)}])"

    def member(self, v: VectorField) -> Vector | None:
        if not v:
            return tuple(ZERO for _ in self.basis)
        if not _keys_of(v) <= self._index.keys():
            return None
        return solve_in_span(self._columns, _flatten(v, self._index))

    def combination(self, coords: Sequence[GaussianRational]) -> VectorField:
        result = VectorField.zero()
        for c, v in zip(coords, self.basis, strict=True):
            if c:
                result = result + v * c
        return result

    @cached_property
    def structure_constants(self) -> StructureConstants:
        n = self.dimension
        table: list[list[Vector]] = [[()] * n for _ in range(n)]
        zero_vec = tuple(ZERO for _ in range(n))
        for i in range(n):
            table[i][i] = zero_vec
            for j in range(i + 1, n):
                w = bracket(self.basis[i], self.basis[j])
                coords = self.member(w)
                if coords is None:
                    raise NotClosed(i, j, w)
                table[i][j] = coords
                table[j][i] = tuple(-c for c in coords)
        return StructureConstants(tuple(tuple(row) for row in table))


def make_span(fields: Iterable[VectorField], allow_zero: bool = False) -> AlgebraSpan:
    """Maximal linearly independent subset of ``fields``, in input order."""
    fields = list(fields)
    keys: set[CoordinateKey] = set()
    for v in fields:
        keys |= _keys_of(v)
    index = {k: i for i, k in enumerate(_sorted_keys(keys))}
    columns = [_flatten(v, index) for v in fields]
    chosen = independent_columns(columns, len(index))
    if not chosen and not allow_zero:
        raise EmptySpan()
    return AlgebraSpan([fields[i] for i in chosen])


def member(g: AlgebraSpan, v: VectorField) -> Vector | None:
    return g.member(v)


def verify_closure(g: AlgebraSpan) -> StructureConstants:
    constants = g.structure_constants
    logger.debug(f"Closure verified for a span of dimension {g.dimension}")
    return constants


def contains(g: AlgebraSpan, h: AlgebraSpan) -> bool:
    return all(g.member(v) is not None for v in h.basis)


def same_span(g: AlgebraSpan, h: AlgebraSpan) -> bool:
    return g.dimension == h.dimension and contains(g, h)


def bracket_span(a: AlgebraSpan, b: AlgebraSpan) -> AlgebraSpan:
    """``[a, b]``: the span of all brackets of basis elements."""
    return make_span(
        (bracket(v, w) for v in a.basis for w in b.basis), allow_zero=True
    )


def derived(g: AlgebraSpan) -> AlgebraSpan:
    n = g.dimension
    return make_span(
        (bracket(g.basis[i], g.basis[j]) for i in range(n) for j in range(i + 1, n)),
        allow_zero=True,
    )


def _series(g: AlgebraSpan, step) -> list[AlgebraSpan]:
    series = [g]
    while series[-1].dimension:
        nxt = step(series[-1])
        if nxt.dimension == series[-1].dimension:
            break
        series.append(nxt)
    return series


def derived_series(g: AlgebraSpan) -> list[AlgebraSpan]:
    """``g, g', g'', ...`` until the dimension repeats or reaches zero."""
    return _series(g, derived)


def lower_central_series(g: AlgebraSpan) -> list[AlgebraSpan]:
    """``g, [g, g], [g, [g, g]], ...`` with the same stopping rule."""
    return _series(g, lambda h: bracket_span(g, h))


def is_solvable(g: AlgebraSpan) -> bool:
    return derived_series(g)[-1].dimension == 0


def is_nilpotent(g: AlgebraSpan) -> bool:
    return lower_central_series(g)[-1].dimension == 0


def is_abelian(g: AlgebraSpan) -> bool:
    return g.structure_constants.is_zero()


def center(g: AlgebraSpan) -> AlgebraSpan:
    """Kernel of the joint ad-action, solved on structure-constant coordinates."""
    n = g.dimension
    c = g.structure_constants.c
    rows = [tuple(c[i][j][k] for i in range(n)) for j in range(n) for k in range(n)]
    kernel = nullspace(rows, n)
    return make_span((g.combination(vec) for vec in kernel), allow_zero=True)


def determinant(v: VectorField, w: VectorField) -> ExpPoly:
    return v.p * w.q - v.q * w.p


def rank(g: AlgebraSpan | Sequence[VectorField]) -> int:
    """Generic orbit dimension, decided on the 2x2 minors of the basis."""
    basis = g.basis if isinstance(g, AlgebraSpan) else tuple(g)
    nonzero = [v for v in basis if v]
    if not nonzero:
        return 0
    for i, v in enumerate(nonzero):
        for w in nonzero[i + 1 :]:
            if determinant(v, w):
                return 2
    return 1
