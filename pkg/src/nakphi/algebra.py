"""Cyclic Nakayama algebras given by a Kupisch series.

Vertices are numbered 1..N and all vertex arithmetic is taken mod N with
representatives in [1, N].  The arrow ``alpha_i`` goes from ``i`` to ``i+1``,
so the indecomposable projective ``P_i`` has composition factors
``S_i, S_{i+1}, ..., S_{i+c_i-1}`` from top to socle.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


class NakayamaError(ValueError):
    """Base class for invalid input."""


class InvalidKupisch(NakayamaError):
    pass


class InvalidRelation(NakayamaError):
    pass


class RedundantSystem(NakayamaError):
    pass


@dataclass(frozen=True)
class Algebra:
    n: int
    kupisch: tuple[int, ...]

    def wrap(self, i: int) -> int:
        return (i - 1) % self.n + 1

    def c(self, i: int) -> int:
        """Length of the projective at vertex ``i`` (any integer, taken mod N)."""
        return self.kupisch[(i - 1) % self.n]

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @property
    def label(self) -> str:
        return ",".join(map(str, self.kupisch))

    def __str__(self) -> str:
        return f"Algebra(N={self.n}, kupisch={self.label})"


@dataclass(frozen=True, order=True)
class Relation:
    """A zero relation: the path of ``arrow_count`` arrows leaving ``start``."""

    start: int
    arrow_count: int
    end: int


@dataclass(frozen=True)
class ProjectiveClass:
    index: int
    socle: int
    members: tuple[int, ...]  # from the minimal projective to the maximal one

    @property
    def minimal(self) -> int:
        return self.members[0]

    @property
    def maximal(self) -> int:
        return self.members[-1]


def from_kupisch(n: int, series: Sequence[int]) -> Algebra:
    series = tuple(int(c) for c in series)
    if n < 3:
        raise InvalidKupisch(f"need at least 3 vertices, got N={n}")
    if len(series) != n:
        raise InvalidKupisch(f"series has {len(series)} entries, expected {n}")
    for i, c in enumerate(series, start=1):
        if c < 2:
            raise InvalidKupisch(
                f"c_{i}={c}: every projective needs length c >= 2 (no simple projectives)")
    for i in range(n):
        nxt = (i + 1) % n
        if series[nxt] < series[i] - 1:
            raise InvalidKupisch(
                f"c_{nxt + 1}={series[nxt]} < c_{i + 1}-1={series[i] - 1}: "
                "violates the cyclic Kupisch condition c_(i+1) >= c_i - 1")
    return Algebra(n, series)


def from_relations(n: int, rels: Iterable[tuple[int, int]]) -> Algebra:
    """Build the algebra defined by an irredundant system of zero relations.

    ``rels`` holds ``(start, arrow_count)`` pairs.  Vertices that start no
    relation get ``c_v = c_(v+1) + 1``.
    """
    rels = sorted((int(s), int(L)) for s, L in rels)
    if n < 3:
        raise InvalidKupisch(f"need at least 3 vertices, got N={n}")
    if not rels:
        raise InvalidRelation("a cyclic Nakayama algebra needs at least one relation")
    starts = [s for s, _ in rels]
    if len(set(starts)) != len(starts):
        raise InvalidRelation(f"duplicate relation starts in {starts}")
    for s, L in rels:
        if not 1 <= s <= n:
            raise InvalidRelation(f"start {s} outside [1, {n}]")
        if L < 2:
            raise InvalidRelation(f"relation at {s} has {L} arrows; need at least 2")

    length = dict(rels)
    c = [0] * (n + 1)
    for s, L in rels:
        c[s] = L
        v, value = s - 1, L
        while True:
            v = (v - 1) % n + 1
            if v in length:
                break
            value += 1
            c[v] = value
            v -= 1
    for s, L in rels:
        nxt = s % n + 1
        if L > c[nxt]:
            raise RedundantSystem(
                f"relation {s}:{L} contains the path of the relation implied at vertex "
                f"{nxt} (length {c[nxt]})")
    return from_kupisch(n, c[1:])


def relations(a: Algebra) -> list[Relation]:
    return [Relation(i, a.c(i), a.wrap(i + a.c(i) - 1))
            for i in a.vertices if a.c(i) <= a.c(i + 1)]


def projective_classes(a: Algebra) -> list[ProjectiveClass]:
    rels = relations(a)
    classes = []
    for j, rel in enumerate(rels):
        prev_start = rels[j - 1].start
        members = [rel.start]
        v = a.wrap(rel.start - 1)
        while v != prev_start:
            members.append(v)
            v = a.wrap(v - 1)
        # a single relation owns every vertex; the loop above stops at its own start
        classes.append(ProjectiveClass(j + 1, rel.end, tuple(members)))
    return classes


def is_self_injective(a: Algebra) -> bool:
    return len(set(a.kupisch)) == 1


def socle_marks(a: Algebra) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Relation ends and their successors, both in relation order."""
    ends = tuple(rel.end for rel in relations(a))
    return ends, tuple(a.wrap(e + 1) for e in ends)


def parse_kupisch(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.replace(" ", "").split(",") if part)
    except ValueError:
        raise InvalidKupisch(f"cannot parse Kupisch series {text!r}") from None


def parse_relations(text: str) -> list[tuple[int, int]]:
    """Parse ``"1:3;3:4"`` into ``[(1, 3), (3, 4)]``."""
    rels = []
    for item in text.replace(" ", "").split(";"):
        if not item:
            continue
        try:
            s, L = item.split(":")
            rels.append((int(s), int(L)))
        except ValueError:
            raise InvalidRelation(f"cannot parse relation {item!r}; expected start:arrows") from None
    return rels


def format_relations(a: Algebra) -> str:
    return ";".join(f"{rel.start}:{rel.arrow_count}" for rel in relations(a))
