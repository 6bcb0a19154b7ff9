"""Indecomposable modules, syzygies and projective dimensions.

Every indecomposable module over a cyclic Nakayama algebra is uniserial and
is pinned down by its top vertex and its length.  The syzygy of ``(t, l)``
is the kernel of ``P_t -> (t, l)``, i.e. ``(t + l, c_t - l)``, or zero when
the module is projective.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Union

from .algebra import Algebra, NakayamaError

INFINITE = math.inf


class InvalidModule(NakayamaError):
    pass


@dataclass(frozen=True, order=True)
class Module:
    top: int
    length: int

    def __str__(self) -> str:
        return f"{self.top}:{self.length}"


class _Zero:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "ZERO"

    __str__ = __repr__

    def __reduce__(self):
        return (_Zero, ())


ZERO = _Zero()

MaybeModule = Union[Module, _Zero]


def module(a: Algebra, top: int, length: int) -> Module:
    if not 1 <= top <= a.n:
        raise InvalidModule(f"top vertex {top} outside [1, {a.n}]")
    if length < 1 or length > a.c(top):
        raise InvalidModule(f"length {length} outside [1, c_{top}={a.c(top)}]")
    return Module(top, length)


def parse_module(a: Algebra, text: str) -> Module:
    try:
        t, l = text.strip().split(":")
        return module(a, int(t), int(l))
    except ValueError as exc:
        if isinstance(exc, InvalidModule):
            raise
        raise InvalidModule(f"cannot parse module {text!r}; expected top:length") from None


def socle(a: Algebra, m: Module) -> int:
    return a.wrap(m.top + m.length - 1)


def composition_factors(a: Algebra, m: Module) -> list[int]:
    return [a.wrap(m.top + i) for i in range(m.length)]


def is_projective(a: Algebra, m: Module) -> bool:
    return m.length == a.c(m.top)


def projective(a: Algebra, v: int) -> Module:
    return Module(v, a.c(v))


def projective_cover(a: Algebra, m: Module) -> Module:
    return Module(m.top, a.c(m.top))


def syzygy(a: Algebra, m: MaybeModule) -> MaybeModule:
    if m is ZERO:
        return ZERO
    c = a.c(m.top)
    if m.length == c:
        return ZERO
    return Module(a.wrap(m.top + m.length), c - m.length)


def all_indecomposables(a: Algebra) -> list[Module]:
    return [Module(t, l) for t in a.vertices for l in range(1, a.c(t) + 1)]


def nonprojective_indecomposables(a: Algebra) -> list[Module]:
    return [Module(t, l) for t in a.vertices for l in range(1, a.c(t))]


def simples(a: Algebra) -> list[Module]:
    return [Module(t, 1) for t in a.vertices]


def is_injective(a: Algebra, m: Module) -> bool:
    s = socle(a, m)
    longest = max(a.kupisch)
    for length in range(m.length + 1, longest + 1):
        if length <= a.c(s - length + 1):
            return False
    return True


@lru_cache(maxsize=512)
def syzygy_table(a: Algebra) -> dict[Module, MaybeModule]:
    """Syzygy of every nonprojective indecomposable; projectives map to ZERO."""
    return {m: syzygy(a, m) for m in all_indecomposables(a)}


@lru_cache(maxsize=512)
def periodic_modules(a: Algebra) -> frozenset[Module]:
    """Modules on a cycle of the syzygy map (ZERO excluded)."""
    table = syzygy_table(a)
    state: dict[Module, int] = {}  # 1 = on the current walk, 2 = finished
    periodic: set[Module] = set()
    for start in table:
        walk = []
        m = start
        while m is not ZERO and m not in state:
            state[m] = 1
            walk.append(m)
            m = table[m]
        if m is not ZERO and state[m] == 1:
            periodic.update(walk[walk.index(m):])
        for w in walk:
            state[w] = 2
    return frozenset(periodic)


def pdim(a: Algebra, m: Module) -> float:
    """Projective dimension; an ``int`` or ``INFINITE``.

    Infinite exactly when the syzygy orbit revisits a module before reaching
    a projective, which is decided exactly on the finite syzygy graph.
    """
    seen = set()
    k = 0
    while not is_projective(a, m):
        if m in seen:
            return INFINITE
        seen.add(m)
        m = syzygy(a, m)
        k += 1
    return k


@lru_cache(maxsize=512)
def pdim_table(a: Algebra) -> dict[Module, float]:
    table = syzygy_table(a)
    result: dict[Module, float] = {}
    for start in table:
        path = []
        m = start
        while m not in result:
            if is_projective(a, m):
                result[m] = 0
                break
            if m in path:
                for w in path:
                    result[w] = INFINITE
                break
            path.append(m)
            m = table[m]
        base = result[m]
        for w in reversed(path):
            if w in result:
                base = result[w]
                continue
            base = base + 1
            result[w] = base
    return result


def gldim(a: Algebra) -> float:
    table = pdim_table(a)
    return max(table[s] for s in simples(a))


def findim(a: Algebra) -> int:
    return max(int(d) for d in pdim_table(a).values() if d != INFINITE)


@dataclass(frozen=True)
class Outcome:
    kind: str  # "finite", "periodic" or "truncated"
    index: int


@dataclass(frozen=True)
class ResolutionTrail:
    start: Module
    steps: tuple[tuple[Module, MaybeModule], ...] = field(default=())
    outcome: Outcome = Outcome("truncated", 0)

    def modules(self) -> list[MaybeModule]:
        return [self.start] + [syz for _, syz in self.steps]


def resolve(a: Algebra, m: Module, steps: int | None = None) -> ResolutionTrail:
    """Minimal projective resolution of ``m``.

    Stops when a projective is reached (``finite``), when the current syzygy
    is Omega-periodic (``periodic``), or after ``steps`` syzygies.
    """
    periodic = periodic_modules(a)
    trail = []
    current: MaybeModule = m
    k = 0
    while True:
        if is_projective(a, current):
            outcome = Outcome("finite", k)
            break
        if current in periodic:
            outcome = Outcome("periodic", k)
            break
        if steps is not None and k >= steps:
            outcome = Outcome("truncated", k)
            break
        nxt = syzygy(a, current)
        trail.append((projective_cover(a, current), nxt))
        current = nxt
        k += 1
    return ResolutionTrail(m, tuple(trail), outcome)
