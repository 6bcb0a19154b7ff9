"""Decidable statements about a single algebra, each returning evidence.

Every check returns a :class:`CheckResult`.  ``NA`` means the hypothesis of
the statement does not hold for the algebra at hand; ``FAIL`` always carries
a concrete counterexample in its evidence.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass

from .algebra import (
    Algebra, NakayamaError, from_relations, is_self_injective, projective_classes,
    relations, socle_marks,
)
from .delta import delta_decompose, delta_system
from .modcat import (
    INFINITE, Module, ZERO, all_indecomposables, findim, gldim, is_projective,
    nonprojective_indecomposables, pdim_table, socle, syzygy, syzygy_table,
)
from .phi import alpha, class_trace, omega_periodic, phi_dim, rho


class Status(enum.Enum):
    PASS = "pass"
    FAIL = "fail"
    NA = "n/a"


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: Status
    evidence: str = ""

    @property
    def ok(self) -> bool:
        return self.status is not Status.FAIL


class NotProjective(NakayamaError):
    pass


def _check(name: str, ok: bool, evidence: str) -> CheckResult:
    return CheckResult(name, Status.PASS if ok else Status.FAIL, evidence)


def _infinite(a: Algebra) -> bool:
    return gldim(a) == INFINITE


def _na(name: str, reason: str) -> CheckResult:
    return CheckResult(name, Status.NA, reason)


def check_theorem_A(a: Algebra) -> CheckResult:
    name = "theorem_A_even"
    if not _infinite(a):
        return _na(name, f"gldim = {gldim(a)} is finite")
    p = phi_dim(a)
    return _check(name, p % 2 == 0, f"phi_dim = {p}")


def check_theorem_B(a: Algebra) -> CheckResult:
    name = "theorem_B_bound"
    if not _infinite(a):
        return _na(name, f"gldim = {gldim(a)} is finite")
    p, r = phi_dim(a), len(relations(a))
    rel = "=" if p == 2 * r else ("<" if p < 2 * r else ">")
    return _check(name, p <= 2 * r, f"phi_dim = {p} {rel} 2r = {2 * r}")


def check_small_phi(a: Algebra) -> CheckResult:
    name = "small_phi"
    if not _infinite(a):
        return _na(name, f"gldim = {gldim(a)} is finite")
    p = phi_dim(a)
    selfinj = is_self_injective(a)
    periodic = omega_periodic(a).modules
    outside = [d for d in delta_system(a).deltas if d not in periodic]
    problems = []
    if (p == 0) != selfinj:
        problems.append(f"phi_dim = {p} but self_injective = {selfinj}")
    if p == 1:
        problems.append("phi_dim = 1")
    # self-injective algebras have every Delta periodic with phi_dim 0
    if not selfinj and (p == 2) != (not outside):
        problems.append(f"phi_dim = {p} but Deltas outside the periodic part: "
                        f"{', '.join(map(str, outside)) or 'none'}")
    if problems:
        return _check(name, False, "; ".join(problems))
    evidence = f"phi_dim = {p}"
    if outside:
        evidence += f"; Delta not periodic: {outside[0]}"
    return _check(name, True, evidence)


def check_one_relation(a: Algebra) -> CheckResult:
    name = "one_relation"
    rels = relations(a)
    if len(rels) != 1:
        return _na(name, f"r = {len(rels)}")
    top = a.wrap(rels[0].end + 1)
    D = Module(top, a.n)
    g = gldim(a)
    if is_projective(a, D):
        return _check(name, g == 2, f"D = {D} projective, gldim = {g}")
    p = phi_dim(a)
    d_pdim = pdim_table(a)[D]
    ok = g == INFINITE and d_pdim == INFINITE and p == 2
    return _check(name, ok, f"D = {D} not projective, pdim D = {d_pdim}, phi_dim = {p}")


def check_delta_projective(a: Algebra) -> CheckResult:
    name = "delta_projective"
    proj = [d for d in delta_system(a).deltas if is_projective(a, d)]
    if not proj:
        return _na(name, "no Delta-module is projective")
    g = gldim(a)
    return _check(name, g != INFINITE, f"projective Delta {proj[0]}, gldim = {g}")


@dataclass(frozen=True)
class GustafsonResult:
    d: int
    f: tuple[int, ...]
    cycle_points: frozenset[int]
    bound_ok: bool


def gustafson_d(a: Algebra) -> GustafsonResult:
    """Iterate the Delta-level shift i -> [i + d_i] until it permutes its image."""
    dk = delta_system(a).delta_kupisch
    r = len(dk)
    f = tuple((i + dk[i - 1] - 1) % r + 1 for i in range(1, r + 1))
    image = frozenset(range(1, r + 1))
    d = 0
    while True:
        nxt = frozenset(f[i - 1] for i in image)
        if len(nxt) == len(image):
            break
        image = nxt
        d += 1
    ok = d <= r - 1 and bool(image)
    if _infinite(a):
        ok = ok and phi_dim(a) <= 2 * d + 2
    return GustafsonResult(d, f, image, ok)


def check_gustafson(a: Algebra) -> CheckResult:
    g = gustafson_d(a)
    r = len(g.f)
    evidence = f"d = {g.d}, r = {r}, Y = {sorted(g.cycle_points)}"
    if _infinite(a):
        evidence += f", phi_dim = {phi_dim(a)} vs 2d+2 = {2 * g.d + 2}"
    return _check("gustafson_d", g.bound_ok, evidence)


def check_odd_rho_witness(a: Algebra) -> CheckResult:
    name = "odd_rho_witness"
    if not _infinite(a):
        return _na(name, f"gldim = {gldim(a)} is finite")
    first: dict[int, Module] = {}
    for m in all_indecomposables(a):
        t = rho(a, m)
        if t is not None and t not in first:
            first[t] = m
    odd = sorted(k for k in first if k % 2 == 1)
    if not odd:
        return _check(name, True, "no odd rho value")
    missing = [k for k in odd if k + 1 not in first]
    if missing:
        k = missing[0]
        return _check(name, False, f"rho({first[k]}) = {k} but no module has rho = {k + 1}")
    return _check(name, True, "; ".join(f"({k}, {first[k]}, {first[k + 1]})" for k in odd))


class ProjectiveType(enum.Enum):
    TYPE1 = "type1"
    TYPE2 = "type2"
    TYPE3 = "type3"
    NONE = "no_periodic_part"


def classify_terminal_projective(a: Algebra, p: Module) -> ProjectiveType:
    """Shape of a projective relative to the periodic modules.

    Tested in the order type 2, type 1, type 3:  a periodic proper quotient
    (whose kernel is then its periodic syzygy), a periodic proper submodule,
    a periodic subquotient strictly inside.
    """
    if not is_projective(a, p):
        raise NotProjective(f"{p} is not projective")
    periodic = omega_periodic(a).modules
    t, c = p.top, p.length
    for i in range(1, c):
        quotient, sub = Module(t, i), Module(a.wrap(t + i), c - i)
        if quotient in periodic and sub in periodic and syzygy(a, quotient) == sub:
            return ProjectiveType.TYPE2
    for i in range(1, c):
        if Module(a.wrap(t + i), c - i) in periodic:
            return ProjectiveType.TYPE1
    for i in range(1, c - 1):
        for j in range(1, c - i):
            if Module(a.wrap(t + i), j) in periodic:
                return ProjectiveType.TYPE3
    return ProjectiveType.NONE


def terminal_projective_types(a: Algebra) -> Counter:
    """Types of the last projective in every finite resolution of a nonprojective module."""
    types: Counter = Counter()
    table = syzygy_table(a)
    for m, k in pdim_table(a).items():
        if k == INFINITE or k == 0:
            continue
        last = m
        for _ in range(int(k)):
            last = table[last]
        types[classify_terminal_projective(a, last).value] += 1
    return types


def check_terminal_projectives(a: Algebra) -> CheckResult:
    name = "terminal_projective_types"
    if not _infinite(a):
        return _na(name, f"gldim = {gldim(a)} is finite")
    types = terminal_projective_types(a)
    evidence = ", ".join(f"{k}: {v}" for k, v in sorted(types.items())) or "no finite resolutions"
    return _check(name, ProjectiveType.NONE.value not in types, evidence)


# invariant suites


def check_roundtrip(a: Algebra) -> CheckResult:
    rels = relations(a)
    b = from_relations(a.n, [(x.start, x.arrow_count) for x in rels])
    return _check("presentation_roundtrip", b == a and relations(b) == rels,
                  f"relations {[(x.start, x.arrow_count) for x in rels]}")


def check_classes(a: Algebra) -> CheckResult:
    classes = projective_classes(a)
    members = [v for cl in classes for v in cl.members]
    problems = []
    if sorted(members) != list(a.vertices):
        problems.append(f"classes do not partition the vertices: {members}")
    for cl in classes:
        lengths = [a.c(v) for v in cl.members]
        if any(lengths[i + 1] != lengths[i] + 1 for i in range(len(lengths) - 1)):
            problems.append(f"class {cl.index} lengths {lengths} not consecutive")
        if any(socle(a, Module(v, a.c(v))) != cl.socle for v in cl.members):
            problems.append(f"class {cl.index} members do not share socle {cl.socle}")
    selfinj = is_self_injective(a)
    socles = {socle(a, Module(v, a.c(v))) for v in a.vertices}
    if not (selfinj == all(len(cl.members) == 1 for cl in classes)
            == (len(classes) == a.n) == (len(socles) == a.n)):
        problems.append("self-injectivity characterisations disagree")
    starts = [x.start for x in relations(a)]
    ends = socle_marks(a)[0]
    # the relation ends must follow the starts around the cycle
    shift = min(range(len(ends)), key=lambda k: ends[k])
    if sorted(ends) != list(ends[shift:] + ends[:shift]):
        problems.append(f"relation ends {ends} are not in the cyclic order of starts {starts}")
    return _check("projective_classes", not problems, "; ".join(problems) or f"r = {len(classes)}")


def check_syzygy_marks(a: Algebra) -> CheckResult:
    """Socles of Omega^i (i >= 1) are relation ends; tops of Omega^i (i >= 2) follow them."""
    ends, succ = socle_marks(a)
    ends, succ = set(ends), set(succ)
    table = syzygy_table(a)
    for m in nonprojective_indecomposables(a):
        om = table[m]
        if om.top != a.wrap(socle(a, m) + 1):
            return _check("syzygy_socle_top", False, f"top of Omega({m}) = {om.top}")
        if socle(a, om) not in ends:
            return _check("syzygy_socle_top", False, f"socle of Omega({m}) not a relation end")
        if om is not ZERO and not is_projective(a, om):
            om2 = table[om]
            if om2.top not in succ:
                return _check("syzygy_socle_top", False, f"top of Omega^2({m}) = {om2.top}")
    return _check("syzygy_socle_top", True, "")


def check_delta_partition(a: Algebra) -> CheckResult:
    deltas = delta_system(a).deltas
    covered = sorted(a.wrap(d.top + i) for d in deltas for i in range(d.length))
    return _check("delta_partition", covered == list(a.vertices),
                  f"Delta lengths {[d.length for d in deltas]}")


def check_delta_filtration(a: Algebra) -> CheckResult:
    """Omega^i(X) for i >= 2 is Delta-filtered; Delta-filtered iff top/socle are marked."""
    name = "delta_filtration"
    ends, succ = map(set, socle_marks(a))
    system = delta_system(a)
    table = syzygy_table(a)
    for m in all_indecomposables(a):
        filtered = delta_decompose(a, m) is not None
        marked = m.top in succ and socle(a, m) in ends
        if filtered != marked:
            return _check(name, False, f"{m}: Delta-filtered {filtered}, marked {marked}")
        om = table[m]
        if om is not ZERO and not is_projective(a, om):
            om2 = table[om]
            if om2 is not ZERO and delta_decompose(a, om2) is None:
                return _check(name, False, f"Omega^2({m}) = {om2} has no Delta-filtration")
    for delta, d in zip(system.deltas, system.delta_kupisch):
        factors = delta_decompose(a, Module(delta.top, a.c(delta.top)))
        if len(factors) != d or sum(system.deltas[j - 1].length for j in factors) != a.c(delta.top):
            return _check(name, False, f"Delta-factors of P_{delta.top} do not add up")
    return _check(name, True, f"delta_kupisch = {system.delta_kupisch}")


def check_projective_submodules(a: Algebra) -> CheckResult:
    """No projective sits inside a nonprojective indecomposable."""
    for m in nonprojective_indecomposables(a):
        for i in range(1, m.length):
            sub = Module(a.wrap(m.top + i), m.length - i)
            if is_projective(a, sub):
                return _check("projective_not_submodule", False, f"{sub} inside {m}")
    return _check("projective_not_submodule", True, "")


def check_alpha_and_stable_part(a: Algebra) -> list[CheckResult]:
    sets, _ = class_trace(a, all_indecomposables(a))
    counts = [len(s) for s in sets]
    part = omega_periodic(a)
    periodic = part.modules
    p = phi_dim(a)
    results = [_check("alpha_monotone",
                      all(counts[i + 1] <= counts[i] for i in range(len(counts) - 1)),
                      f"alpha trace {counts}")]
    bij = set(part.perm.values()) == set(periodic)
    results.append(_check("periodic_bijection", bij, f"|Omega^per| = {len(periodic)}"))
    if _infinite(a):
        stable = sets[p]
        ok = stable == periodic
        # summands that are not periodic force phi_dim beyond that step
        ok = ok and all(not (s - periodic) or k < p for k, s in enumerate(sets))
        results.append(_check("stable_syzygies_periodic", ok,
                              f"Omega^{p}(M) has {len(stable)} classes, Omega^per has {len(periodic)}"))
    else:
        results.append(_check("stable_syzygies_periodic", not periodic,
                              "finite gldim, no periodic modules"))
    return results


def check_equal_delta_lengths(a: Algebra) -> CheckResult:
    name = "equal_delta_lengths"
    if not _infinite(a):
        return _na(name, f"gldim = {gldim(a)} is finite")
    dk = delta_system(a).delta_kupisch
    equal = len(set(dk)) == 1
    inside = set(delta_system(a).deltas) <= omega_periodic(a).modules
    ok = equal == inside
    if ok and equal:
        table = pdim_table(a)
        filtered = [m for m in nonprojective_indecomposables(a)
                    if delta_decompose(a, m) is not None]
        ok = all(table[m] == INFINITE for m in filtered)
        images = [syzygy(a, m) for m in filtered]
        ok = ok and len(set(images)) == len(images)
    return _check(name, ok, f"delta_kupisch = {dk}, Deltas periodic = {inside}")


def check_dimensions(a: Algebra) -> list[CheckResult]:
    g, fd, p = gldim(a), findim(a), phi_dim(a)
    results = [_check("findim_le_phi_dim", fd <= p, f"findim = {fd}, phi_dim = {p}")]
    if g == INFINITE:
        results.append(_na("gldim_bound", "gldim infinite"))
    else:
        results.append(_check("gldim_bound", g <= 2 * a.n - 2 and p == g,
                              f"gldim = {g} <= 2N-2 = {2 * a.n - 2}, phi_dim = {p}"))
    return results


def check_alpha_single(a: Algebra) -> CheckResult:
    """phi of an indecomposable is its pdim, or 0 when the pdim is infinite."""
    from .phi import phi

    table = pdim_table(a)
    for m, k in table.items():
        expected = 0 if k == INFINITE else k
        if phi(a, [m]) != expected:
            return _check("phi_of_indecomposable", False, f"phi({m}) != {expected}")
        if alpha(a, [m, m]) != (0 if is_projective(a, m) else 1):
            return _check("phi_of_indecomposable", False, f"alpha([{m}, {m}])")
    return _check("phi_of_indecomposable", True, "")


def theorem_checks(a: Algebra) -> list[CheckResult]:
    return [
        check_theorem_A(a),
        check_theorem_B(a),
        check_small_phi(a),
        check_one_relation(a),
        check_delta_projective(a),
        check_gustafson(a),
        check_odd_rho_witness(a),
        check_terminal_projectives(a),
    ]


def invariant_checks(a: Algebra) -> list[CheckResult]:
    return [
        check_roundtrip(a),
        check_classes(a),
        check_syzygy_marks(a),
        check_delta_partition(a),
        check_delta_filtration(a),
        check_projective_submodules(a),
        *check_alpha_and_stable_part(a),
        check_equal_delta_lengths(a),
        *check_dimensions(a),
        check_alpha_single(a),
    ]


def verify_all(a: Algebra) -> list[CheckResult]:
    return theorem_checks(a) + invariant_checks(a)
