"""Shadow module enhanced birack counting invariants of classical knots and links."""

from .algebra import (
    GeneratorIndex,
    NotAUnit,
    RelationInstance,
    ShadowModuleStructure,
    failing_relation,
    generate_relations,
    iter_modules,
    search_modules,
    verify_module,
)
from .birack import (
    AxiomViolation,
    Birack,
    PreconditionFailed,
    Shadow,
    birack_from_tables,
    is_birack_homomorphism,
    is_subbirack,
    quandle_promotion,
    shadow_from_table,
    tsr_birack,
)
from .diagram import (
    LinkDiagram,
    add_positive_kink,
    diagram_from_pd,
    mirror,
    mirror_pd,
    unknot,
    writhe_targets,
)
from .invariants import (
    InvariantValue,
    PresentationMatrix,
    ShadowLabeling,
    birack_counting_invariant,
    count_module_homs,
    enumerate_shadow_labelings,
    presentation_matrix,
    shadow_module_invariant,
)
from .zn import Permutation, count_homogeneous_solutions, smith_normal_form

__version__ = "0.1.0"
