"""Syzygies, homological dimensions and the Igusa-Todorov phi-dimension of
cyclic Nakayama algebras."""

from .algebra import (
    Algebra, InvalidKupisch, InvalidRelation, NakayamaError, ProjectiveClass, RedundantSystem,
    Relation, from_kupisch, from_relations, is_self_injective, projective_classes, relations,
    socle_marks,
)
from .delta import (
    DeltaSystem, delta_contains_projective, delta_decompose, delta_projectives, delta_system,
)
from .modcat import (
    INFINITE, ZERO, InvalidModule, Module, all_indecomposables, findim, gldim, is_injective,
    module, pdim, projective_cover, resolve, syzygy,
)
from .phi import (
    PhiReport, alpha, alpha_trace, omega_periodic, periodic_projectives, phi, phi_dim,
    phi_report, rho,
)
from .theorems import CheckResult, Status, gustafson_d, verify_all

__version__ = "0.1.0"
