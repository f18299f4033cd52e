"""Local components of the degree-one resonance variety and the span-disjoint
bipartition obstruction.

Coordinates index the lines of the projective arrangement (equivalently the
hyperplanes of its central cone).  A point of multiplicity m >= 3 on lines
I contributes the (m-1)-dimensional subspace of vectors supported on I with
coordinate sum zero.  All linear algebra is exact over the rationals, with
subspaces held in reduced row echelon form so equality is structural.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DimensionMismatchError, TooFewComponentsError, TooSmallError
from .exactgeom import ProjPoint
from .gpp import GppWitness, has_gpp_decone
from .incidence import IncidenceData

Vector = tuple[Fraction, ...]


def _rref(rows: list[list[Fraction]], width: int) -> tuple[Vector, ...]:
    rows = [list(r) for r in rows]
    rank = 0
    for col in range(width):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = rows[rank][col]
        rows[rank] = [v / inv for v in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col] != 0:
                factor = rows[r][col]
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
    return tuple(tuple(r) for r in rows[:rank])


@dataclass(frozen=True)
class SubspaceBasis:
    """Reduced row echelon basis of a subspace of Q^ambient; two equal
    subspaces have identical rows."""

    rows: tuple[Vector, ...]
    ambient: int

    @classmethod
    def from_vectors(cls, vectors, ambient: int) -> "SubspaceBasis":
        rows = [[Fraction(v) for v in vec] for vec in vectors]
        for r in rows:
            if len(r) != ambient:
                raise DimensionMismatchError(
                    f"vector of length {len(r)} in ambient dimension {ambient}"
                )
        return cls(_rref(rows, ambient), ambient)

    @classmethod
    def zero(cls, ambient: int) -> "SubspaceBasis":
        return cls((), ambient)

    @property
    def dim(self) -> int:
        return len(self.rows)


def span_dim(a: SubspaceBasis) -> int:
    return a.dim


def span_sum(a: SubspaceBasis, b: SubspaceBasis) -> SubspaceBasis:
    if a.ambient != b.ambient:
        raise DimensionMismatchError(
            f"ambient dimensions differ: {a.ambient} vs {b.ambient}"
        )
    return SubspaceBasis.from_vectors(a.rows + b.rows, a.ambient)


def intersection_dim(a: SubspaceBasis, b: SubspaceBasis) -> int:
    return a.dim + b.dim - span_sum(a, b).dim


def basis_vector(n: int, i: int) -> Vector:
    return tuple(Fraction(1 if k == i else 0) for k in range(n))


@dataclass(frozen=True)
class LocalComponent:
    """Subspace attached to one point of multiplicity >= 3."""

    point: ProjPoint
    lines: tuple[int, ...]
    basis: SubspaceBasis


def local_components(inc: IncidenceData) -> list[LocalComponent]:
    """One component per multiplicity >= 3 point, in point order; spanned by
    f_i - f_k over the point's lines i, with k the largest incident index."""
    n = inc.n_lines
    comps = []
    for rec in inc.points:
        if rec.multiplicity < 3:
            continue
        k = max(rec.lines)
        vectors = [
            tuple(x - y for x, y in zip(basis_vector(n, i), basis_vector(n, k)))
            for i in rec.lines
            if i != k
        ]
        comps.append(
            LocalComponent(rec.point, rec.lines, SubspaceBasis.from_vectors(vectors, n))
        )
    return comps


def find_span_disjoint_bipartition(
    comps: list[LocalComponent],
) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """Split the components into two families whose spans meet only in zero.

    Components with pairwise nontrivial intersection must land on the same
    side, so candidate parts are unions of connected components of the
    pairwise-intersection graph; each candidate bipartition is then tested by
    exact dimension additivity (pairwise triviality alone is not sufficient).
    Returns index sets into `comps`, or None.
    """
    k = len(comps)
    if k < 2:
        raise TooFewComponentsError("need at least two local components")
    parent = list(range(k))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i in range(k):
        for j in range(i + 1, k):
            if intersection_dim(comps[i].basis, comps[j].basis) > 0:
                parent[find(j)] = find(i)
    blocks: dict[int, list[int]] = {}
    for i in range(k):
        blocks.setdefault(find(i), []).append(i)
    block_list = sorted(blocks.values())
    if len(block_list) < 2:
        return None

    ambient = comps[0].basis.ambient
    block_spans = []
    for block in block_list:
        span = SubspaceBasis.zero(ambient)
        for i in block:
            span = span_sum(span, comps[i].basis)
        block_spans.append(span)
    total = SubspaceBasis.zero(ambient)
    for span in block_spans:
        total = span_sum(total, span)

    b = len(block_list)
    for mask in range(2 ** (b - 1) - 1):
        side1_blocks = [0] + [i + 1 for i in range(b - 1) if mask >> i & 1]
        side2_blocks = [i + 1 for i in range(b - 1) if not mask >> i & 1]
        span1 = SubspaceBasis.zero(ambient)
        for i in side1_blocks:
            span1 = span_sum(span1, block_spans[i])
        span2 = SubspaceBasis.zero(ambient)
        for i in side2_blocks:
            span2 = span_sum(span2, block_spans[i])
        if span1.dim + span2.dim == total.dim:
            side1 = tuple(sorted(i for blk in side1_blocks for i in block_list[blk]))
            side2 = tuple(sorted(i for blk in side2_blocks for i in block_list[blk]))
            return (side1, side2)
    return None


@dataclass(frozen=True)
class Verdict:
    """Outcome of the product obstruction pipeline.

    kind "product_possible": some decone splits into two parts meeting only
    in transverse double points, so the decone's complement group is the
    direct product of the parts' groups.  kind "not_a_product": no decone
    admits such a partition, so the projective complement group is not a
    nontrivial direct product; the bipartition field carries the (equally
    negative) span-disjointness evidence when at least two local components
    exist.
    """

    kind: str
    gpp_witness: GppWitness | None
    n_local_components: int
    bipartition: tuple[tuple[int, ...], tuple[int, ...]] | None

    @property
    def is_product_possible(self) -> bool:
        return self.kind == "product_possible"


def product_obstruction(inc: IncidenceData) -> Verdict:
    """Combine the deconing predicate (the decider) with the resonance
    bipartition search (corroborating evidence)."""
    if inc.n_lines < 3:
        raise TooSmallError("needs at least three lines")
    witness = has_gpp_decone(inc)
    comps = local_components(inc)
    bipart = find_span_disjoint_bipartition(comps) if len(comps) >= 2 else None
    kind = "product_possible" if witness is not None else "not_a_product"
    return Verdict(kind, witness, len(comps), bipart)
