"""Incidence structure of line arrangements: multiple points, cone/decone,
general position partitions and the transverse-intersection check for pairs
of affine arrangements.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import (
    BadPartitionError,
    DuplicateLineError,
    SharedLineError,
    TooSmallError,
)
from .exactgeom import (
    AffLine,
    ProjLine,
    ProjPoint,
    intersect,
    point_on_line,
    projectivize,
    restrict_to_affine,
)


@dataclass(frozen=True)
class ProjArrangement:
    """Ordered collection of pairwise distinct projective lines."""

    lines: tuple[ProjLine, ...]

    def __post_init__(self):
        object.__setattr__(self, "lines", tuple(self.lines))
        if not self.lines:
            raise ValueError("an arrangement needs at least one line")
        _check_distinct(self.lines)

    @property
    def n(self) -> int:
        return len(self.lines)

    def labels(self) -> tuple[str, ...]:
        return tuple(l.label for l in self.lines)


@dataclass(frozen=True)
class AffArrangement:
    """Ordered collection of pairwise distinct affine lines."""

    lines: tuple[AffLine, ...]

    def __post_init__(self):
        object.__setattr__(self, "lines", tuple(self.lines))
        if not self.lines:
            raise ValueError("an arrangement needs at least one line")
        _check_distinct(self.lines)

    @property
    def n(self) -> int:
        return len(self.lines)

    def labels(self) -> tuple[str, ...]:
        return tuple(l.label for l in self.lines)


def _check_distinct(lines) -> None:
    seen: dict = {}
    for l in lines:
        if l.coeffs in seen:
            raise DuplicateLineError(
                f"lines {seen[l.coeffs]!r} and {l.label!r} coincide"
            )
        seen[l.coeffs] = l.label
    labels = [l.label for l in lines]
    if len(set(labels)) != len(labels):
        dup = next(x for x in labels if labels.count(x) > 1)
        raise ValueError(f"duplicate label {dup!r}")


@dataclass(frozen=True)
class PointRecord:
    """An intersection point together with the indices of all lines through it."""

    point: ProjPoint
    lines: tuple[int, ...]

    @property
    def multiplicity(self) -> int:
        return len(self.lines)


@dataclass(frozen=True)
class IncidenceData:
    """All pairwise intersection points of an arrangement, grouped by point.

    Points are sorted lexicographically on canonical coordinates, so indices
    into `points` are stable point ids for the rest of the pipeline.
    """

    arrangement: ProjArrangement
    points: tuple[PointRecord, ...]

    @property
    def n_lines(self) -> int:
        return self.arrangement.n

    def point_ids(self, min_mult: int = 2) -> tuple[int, ...]:
        return tuple(
            i for i, rec in enumerate(self.points) if rec.multiplicity >= min_mult
        )


def build_incidence(arr: ProjArrangement) -> IncidenceData:
    """Group all C(n,2) pairwise intersections by canonical point."""
    groups: dict[ProjPoint, set[int]] = {}
    for i, j in combinations(range(arr.n), 2):
        p = intersect(arr.lines[i], arr.lines[j])
        groups.setdefault(p, set()).update((i, j))
    records = tuple(
        PointRecord(p, tuple(sorted(groups[p])))
        for p in sorted(groups, key=lambda q: q.sort_key())
    )
    return IncidenceData(arr, records)


def multiple_points(inc: IncidenceData, min_mult: int) -> list[PointRecord]:
    """Points of multiplicity >= min_mult, in lexicographic coordinate order."""
    if min_mult < 2:
        raise ValueError("min_mult must be at least 2")
    return [rec for rec in inc.points if rec.multiplicity >= min_mult]


def cone(arr: AffArrangement, infinity_label: str) -> ProjArrangement:
    """Homogenize every affine line and append the line at infinity z = 0.

    Affine lines have (a, b) != (0, 0), so none can projectivize to z = 0;
    parallel affine lines meet the cone's incidence structure on z = 0.
    """
    lines = tuple(projectivize(l) for l in arr.lines)
    return ProjArrangement(lines + (ProjLine((0, 0, 1), infinity_label),))


def decone(arr: ProjArrangement, at: int) -> AffArrangement:
    """Affine arrangement obtained by sending line `at` to infinity.

    Every other line keeps its label.  Projective points not on line `at`
    biject with the affine intersection points; points on it become parallel
    classes.
    """
    if arr.n < 2:
        raise TooSmallError("deconing needs at least two lines")
    if not 0 <= at < arr.n:
        raise IndexError(f"line index {at} out of range for {arr.n} lines")
    infinity = arr.lines[at]
    return AffArrangement(
        tuple(
            restrict_to_affine(l, infinity)
            for i, l in enumerate(arr.lines)
            if i != at
        )
    )


def decone_index(original: int, at: int) -> int:
    """Index of original line `original` inside decone(arr, at)."""
    if original == at:
        raise ValueError("the line at infinity has no image in the decone")
    return original if original < at else original - 1


@dataclass(frozen=True)
class CrossPairIssue:
    """A cross pair violating the general position requirement.

    `line1` and `line2` index the two parts' lines in the analyzed affine
    arrangement; `kind` is "parallel" or "multiple_point".
    """

    line1: int
    line2: int
    kind: str
    point: ProjPoint | None = None
    multiplicity: int | None = None


def cross_pair_issues(lines, part1, part2) -> list[CrossPairIssue]:
    """All cross pairs (one line from each part) that are parallel or meet at
    a point carrying three or more lines of the full affine arrangement."""
    proj = [projectivize(l) for l in lines]
    issues = []
    for i in sorted(part1):
        for j in sorted(part2):
            p = intersect(proj[i], proj[j])
            if p.coords[2] == 0:
                issues.append(CrossPairIssue(i, j, "parallel"))
                continue
            mult = sum(1 for q in proj if point_on_line(p, q))
            if mult != 2:
                issues.append(CrossPairIssue(i, j, "multiple_point", p, mult))
    return issues


def is_general_position_partition(arr: AffArrangement, part1, part2) -> bool:
    """True iff every cross pair meets in the affine plane at a point of
    multiplicity exactly two.

    Distinctness of the |part1|*|part2| intersection points is implied: two
    different cross pairs sharing a point would put at least three lines
    through it.
    """
    p1, p2 = set(part1), set(part2)
    if not p1 or not p2:
        raise BadPartitionError("both parts must be nonempty")
    if p1 & p2:
        raise BadPartitionError(f"parts overlap in {sorted(p1 & p2)}")
    if p1 | p2 != set(range(arr.n)):
        raise BadPartitionError("parts must cover all line indices")
    return not cross_pair_issues(arr.lines, p1, p2)


@dataclass(frozen=True)
class OkaSakamotoResult:
    """Outcome of the transversality check for a pair of affine arrangements.

    `issues` lists every offending cross pair; `line1` indexes into the first
    arrangement, `line2` into the second.
    """

    ok: bool
    issues: tuple[CrossPairIssue, ...]

    def __bool__(self):
        return self.ok


def check_oka_sakamoto_hypothesis(
    a1: AffArrangement, a2: AffArrangement
) -> OkaSakamotoResult:
    """Do the two arrangements meet in exactly |a1|*|a2| transverse double
    points of their union?"""
    coeffs2 = {l.coeffs: l.label for l in a2.lines}
    for l in a1.lines:
        if l.coeffs in coeffs2:
            raise SharedLineError(
                f"line {l.label!r} / {coeffs2[l.coeffs]!r} occurs in both arrangements"
            )
    union = list(a1.lines) + list(a2.lines)
    part1 = range(a1.n)
    part2 = range(a1.n, a1.n + a2.n)
    raw = cross_pair_issues(union, part1, part2)
    issues = tuple(
        CrossPairIssue(i.line1, i.line2 - a1.n, i.kind, i.point, i.multiplicity)
        for i in raw
    )
    return OkaSakamotoResult(not issues, issues)


def affine_intersection_points(arr: AffArrangement) -> list[PointRecord]:
    """Intersection points of an affine arrangement (parallel pairs excluded),
    as projective records with z != 0, sorted on canonical coordinates."""
    proj = [projectivize(l) for l in arr.lines]
    groups: dict[ProjPoint, set[int]] = {}
    for i, j in combinations(range(arr.n), 2):
        p = intersect(proj[i], proj[j])
        if p.coords[2] != 0:
            groups.setdefault(p, set()).update((i, j))
    return [
        PointRecord(p, tuple(sorted(groups[p])))
        for p in sorted(groups, key=lambda q: q.sort_key())
    ]
