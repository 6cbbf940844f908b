"""Exact matrix models of Weyl group extensions inside normalizers of
maximal tori, over the eighth cyclotomic field."""

from .cyclotomic import CycloNum, ExactMatrix, mat_from_json, mat_to_json
from .rootsystem import (
    CartanMatrix,
    RootSystem,
    build_cartan,
    coxeter_m,
    generate_roots,
    root_system,
    weyl_group_order,
    weyl_reflect_cartan,
)
from .chevalley import (
    Representation,
    StructureConstants,
    adjoint_rep,
    defining_rep,
    exp_ih_quarter,
    exp_nilpotent,
    exp_semisimple_interp,
    representation,
)
from .tits import (
    TitsElements,
    enumerate_group,
    tits_lift,
    verify_lift_identities,
    verify_normalizer_action,
    verify_tits_presentation,
)
from .galois_ext import (
    GroupElement,
    UnitaryLifts,
    gamma_element,
    gprod,
    make_unitary_lifts,
    verify_m_intersection,
    verify_unitary_lemmas,
    verify_wu_presentation,
)
from .adjoint_action import (
    ActionTable,
    bracket_rhs_tits,
    bracket_rhs_unitary,
    conj_generator,
    verify_action_tables,
)
from .splitting import SplitReport, cww_oracle, split_search, torus_two_torsion
from .report import RelationCheck, VerificationReport

__all__ = [name for name in dir() if not name.startswith("_")]
