"""Knot colorings by permutation groups, the permutation number, and linking numbers in dihedral covers."""

__version__ = "0.1.0"

import logging

from .coloring import (
    check_coloring,
    extend_coloring,
    first_coloring,
    fox_coloring_space,
    gn_member,
    is_surjective,
    meridional_rank_certificate,
    monochromatic_combination,
    permutation_number,
    solve_class_colorings,
)
from .covers import (
    branched_homology,
    dihedral_linking,
    linking_set,
    lk_obstruction,
    reidemeister_schreier,
    smith_normal_form,
    unbranched_homology,
)
from .diagram import (
    braid_closure,
    connected_sum,
    crossing_change,
    longitude_word,
    mirror,
    pretzel_diagram,
    standard_knot,
    torus_braid,
    trefoil_sum_braid,
    whitehead_braid,
    whitehead_double_diagram,
    wirtinger,
)
from .enums.case_label import CaseLabel
from .enums.class_kind import ClassKind
from .enums.group_kind import GroupKind
from .enums.output_format import OutputFormat
from .models.braid_word import BraidWord
from .models.class_coloring import ClassColoring
from .models.class_spec import ClassSpec
from .models.planar_diagram import Crossing, PlanarDiagram
from .models.solver_options import SolverOptions, SynthesisOptions
from .models.undefined import Undefined
from .paths import classify_clasp_case, clasp_section, is_one_crossing_adjacent, synthesize_k1_tilde


logging.getLogger(__name__).addHandler(logging.NullHandler())
