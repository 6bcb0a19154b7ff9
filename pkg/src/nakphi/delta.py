"""The Delta-modules of a cyclic Nakayama algebra.

For each relation end ``e`` (a socle of projectives) the next Delta-module
starts at ``e + 1`` and runs up to the following relation end.  The
Delta-modules partition the simples, and every syzygy beyond the first is
glued together from consecutive Delta-modules.

Delta-modules are indexed 1..r in increasing order of their top vertex.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .algebra import Algebra, socle_marks
from .modcat import Module, is_projective


@dataclass(frozen=True)
class DeltaSystem:
    deltas: tuple[Module, ...]
    delta_kupisch: tuple[int, ...]

    @property
    def r(self) -> int:
        return len(self.deltas)


@lru_cache(maxsize=512)
def _deltas(a: Algebra) -> tuple[Module, ...]:
    ends = sorted(socle_marks(a)[0])
    deltas = []
    for j, end in enumerate(ends):
        prev = ends[j - 1]
        length = (end - prev - 1) % a.n + 1
        deltas.append(Module(a.wrap(prev + 1), length))
    return tuple(sorted(deltas))


@lru_cache(maxsize=512)
def _by_top(a: Algebra) -> dict[int, int]:
    return {d.top: j for j, d in enumerate(_deltas(a), start=1)}


def delta_decompose(a: Algebra, m: Module) -> list[int] | None:
    """Delta-factors of ``m`` from top to socle, or None if ``m`` is not a Delta-module."""
    by_top = _by_top(a)
    deltas = _deltas(a)
    j = by_top.get(m.top)
    if j is None:
        return None
    factors = []
    remaining = m.length
    while remaining > 0:
        d = deltas[j - 1]
        if d.length > remaining:
            return None
        factors.append(j)
        remaining -= d.length
        j = j % len(deltas) + 1
    return factors


@lru_cache(maxsize=512)
def delta_system(a: Algebra) -> DeltaSystem:
    deltas = _deltas(a)
    d = []
    for delta in deltas:
        factors = delta_decompose(a, Module(delta.top, a.c(delta.top)))
        if factors is None:
            raise AssertionError(
                f"projective P_{delta.top} of {a} has no Delta-filtration")
        d.append(len(factors))
    return DeltaSystem(deltas, tuple(d))


def delta_projectives(a: Algebra) -> list[tuple[int, int]]:
    system = delta_system(a)
    return [(delta.top, d) for delta, d in zip(system.deltas, system.delta_kupisch)]


def delta_contains_projective(a: Algebra) -> bool:
    return any(is_projective(a, d) for d in _deltas(a))


def is_delta_module(a: Algebra, m: Module) -> bool:
    return delta_decompose(a, m) is not None


def delta_socle(a: Algebra, m: Module) -> int | None:
    factors = delta_decompose(a, m)
    return None if factors is None else factors[-1]


def delta_name(a: Algebra, m: Module) -> str | None:
    """``"Δ2"`` if ``m`` is itself a Delta-module, else None."""
    factors = delta_decompose(a, m)
    if factors is not None and len(factors) == 1:
        return f"Δ{factors[0]}"
    return None

