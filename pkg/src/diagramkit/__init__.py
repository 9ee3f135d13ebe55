"""Planar pure braid groups as diagram groups.

Word problem via dipole-reduced diagram normal forms, braid/diagram
conversion, Squier cube complexes with their fundamental-group presentations
and integral homology, and an annular braid model.
"""

from .annular import AnnularElement, a_compose, a_equal, a_invert, a_make, a_reduce
from .diagram import (
    Cell,
    Diagram,
    bottom_word,
    compose,
    equal,
    identity,
    insert_dipole,
    invert,
    is_reduced,
    make_diagram,
    normalize,
    reduce,
)
from .errors import DiagramKitError
from .homology import HomologyGroup, abelianization, boundary_matrix, homology
from .ppbraid import (
    BraidWord,
    braid_equal,
    braid_inv,
    braid_mul,
    braid_to_diagram,
    diagram_to_braid,
    is_pure,
    make_braid,
    permutation,
)
from .presentation import (
    BACKWARD,
    FORWARD,
    Direction,
    Presentation,
    applicable_cells,
    apply_relation,
    make_presentation,
    planar_presentation,
)
from .snf import IntegerMatrix, SNFResult, smith_normal_form
from .squier import (
    GroupPresentation,
    SquierComplex,
    build_squier,
    cube_counts,
    euler_characteristic,
    fundamental_presentation,
    simplify_presentation,
    spanning_tree,
)

__all__ = [
    "AnnularElement",
    "a_compose",
    "a_equal",
    "a_invert",
    "a_make",
    "a_reduce",
    "Cell",
    "Diagram",
    "bottom_word",
    "compose",
    "equal",
    "identity",
    "insert_dipole",
    "invert",
    "is_reduced",
    "make_diagram",
    "normalize",
    "reduce",
    "DiagramKitError",
    "HomologyGroup",
    "abelianization",
    "boundary_matrix",
    "homology",
    "BraidWord",
    "braid_equal",
    "braid_inv",
    "braid_mul",
    "braid_to_diagram",
    "diagram_to_braid",
    "is_pure",
    "make_braid",
    "permutation",
    "BACKWARD",
    "FORWARD",
    "Direction",
    "Presentation",
    "applicable_cells",
    "apply_relation",
    "make_presentation",
    "planar_presentation",
    "IntegerMatrix",
    "SNFResult",
    "smith_normal_form",
    "GroupPresentation",
    "SquierComplex",
    "build_squier",
    "cube_counts",
    "euler_characteristic",
    "fundamental_presentation",
    "simplify_presentation",
    "spanning_tree",
]

__version__ = "0.1.0"
