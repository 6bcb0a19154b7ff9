"""The Igusa-Todorov function and phi-dimension for cyclic Nakayama algebras.

Syzygies of indecomposables are zero or indecomposable, so the subgroup of
K_0 spanned by the t-th syzygies of the summands of M is free on the distinct
nonprojective classes among them.  Its rank is therefore a plain count of
iso-classes, and phi(M) is the first step from which that count never moves.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable

from .algebra import Algebra, is_self_injective, relations
from .delta import delta_system
from .modcat import (
    INFINITE, Module, MaybeModule, ZERO, all_indecomposables, findim, gldim,
    is_projective, periodic_modules, projective_cover, syzygy, syzygy_table,
)


def _classes(a: Algebra, ms: Iterable[MaybeModule]) -> frozenset[Module]:
    return frozenset(m for m in ms if m is not ZERO and not is_projective(a, m))


def alpha(a: Algebra, ms: Iterable[MaybeModule]) -> int:
    """Number of distinct nonprojective indecomposable summands."""
    return len(_classes(a, ms))


def syzygy_classes(a: Algebra, ms: Iterable[MaybeModule], t: int = 1) -> frozenset[Module]:
    """Nonprojective iso-classes among the ``t``-th syzygies of ``ms``."""
    current = _classes(a, ms)
    for _ in range(t):
        current = _classes(a, (syzygy(a, m) for m in current))
    return current


def class_trace(a: Algebra, ms: Iterable[MaybeModule]) -> tuple[list[frozenset[Module]], int]:
    """Class sets of Omega^0, Omega^1, ... until the sequence repeats.

    Returns the list of distinct sets and the index where the cycle re-enters.
    """
    table = syzygy_table(a)
    current = _classes(a, ms)
    sets = []
    index: dict[frozenset[Module], int] = {}
    while current not in index:
        index[current] = len(sets)
        sets.append(current)
        current = frozenset(x for x in (table[m] for m in current)
                            if x is not ZERO and not is_projective(a, x))
    return sets, index[current]


def _phi_from_counts(counts: list[int]) -> int:
    final = counts[-1]
    t = len(counts)
    while t > 0 and counts[t - 1] == final:
        t -= 1
    return t


def phi(a: Algebra, ms: Iterable[MaybeModule]) -> int:
    sets, _ = class_trace(a, ms)
    return _phi_from_counts([len(s) for s in sets])


def alpha_trace(a: Algebra, ms: Iterable[MaybeModule]) -> list[int]:
    """alpha(Omega^t M) for t = 0 .. phi(M)."""
    sets, _ = class_trace(a, ms)
    counts = [len(s) for s in sets]
    return counts[:_phi_from_counts(counts) + 1]


@lru_cache(maxsize=512)
def phi_dim(a: Algebra) -> int:
    via_trace = phi(a, all_indecomposables(a))
    g = gldim(a)
    if g != INFINITE and g != via_trace:
        raise RuntimeError(
            f"{a}: gldim {g} disagrees with phi of all indecomposables ({via_trace})")
    return via_trace


@dataclass(frozen=True)
class PeriodicPart:
    modules: frozenset[Module]
    perm: dict[Module, Module] = field(hash=False, compare=False)


@lru_cache(maxsize=512)
def omega_periodic(a: Algebra) -> PeriodicPart:
    members = periodic_modules(a)
    perm = {m: syzygy(a, m) for m in members}
    image = set(perm.values())
    if image != set(members) or len(image) != len(members):
        raise RuntimeError(f"{a}: syzygy is not a bijection on the periodic modules")
    return PeriodicPart(members, perm)


def periodic_projectives(a: Algebra) -> frozenset[Module]:
    return frozenset(projective_cover(a, m) for m in omega_periodic(a).modules)


def rho(a: Algebra, m: Module) -> int | None:
    """Steps until the syzygy orbit of ``m`` is periodic; None for finite pdim."""
    periodic = omega_periodic(a).modules
    t = 0
    current: MaybeModule = m
    while current is not ZERO:
        if current in periodic:
            return t
        current = syzygy(a, current)
        t += 1
    return None


@dataclass
class PhiReport:
    algebra: str
    n: int
    r: int
    self_injective: bool
    gldim: float
    findim: int
    phi_dim: int
    alpha_trace: list[int]
    omega_per: list[Module]
    delta_subset_of_omega_per: bool
    gustafson_d: int

    @property
    def omega_per_size(self) -> int:
        return len(self.omega_per)


def phi_report(a: Algebra) -> PhiReport:
    from .theorems import gustafson_d

    periodic = omega_periodic(a).modules
    return PhiReport(
        algebra=a.label,
        n=a.n,
        r=len(relations(a)),
        self_injective=is_self_injective(a),
        gldim=gldim(a),
        findim=findim(a),
        phi_dim=phi_dim(a),
        alpha_trace=alpha_trace(a, all_indecomposables(a)),
        omega_per=sorted(periodic),
        delta_subset_of_omega_per=set(delta_system(a).deltas) <= periodic,
        gustafson_d=gustafson_d(a).d,
    )
