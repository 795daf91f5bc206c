"""Exact group-cohomology toolkit with a p-adic layer for Chatelet surfaces.

Everything is integer or rational arithmetic: Smith normal forms over Z,
cohomology of finite-group modules as finitely presented abelian groups,
extension classes, p-adic fields as explicit towers with exact elements,
and verdict reports for conic bundle surfaces under base change.
"""

from .cohomology import (
    CohMap,
    CohomologyGroup,
    corestriction_map,
    dual_group,
    dual_map,
    h0,
    h1,
    induced_map,
    restriction_map,
)
from .extensions import (
    ExtensionClass,
    Lemma52Result,
    class_of,
    cores_ext,
    ext1,
    extension_from_cocycle,
    lemma52_check,
    pullback,
    pushout,
    res_ext,
)
from .groups import (
    FiniteGroup,
    Subgroup,
    cyclic_group,
    dihedral_group,
    direct_product,
    quaternion_group,
    symmetric_group,
)
from .intmat import (
    IntMatrix,
    LatticeSubquotient,
    SmithDecomposition,
    cokernel_structure,
    kernel_basis,
    smith_normal_form,
    solve,
)
from .modules import (
    GModule,
    GModuleMap,
    chatelet_picard_module,
    describe_invariants,
    hom_module,
    induce_module,
    permutation_module,
    regular_module,
    restrict_module,
    trivial_module,
)
from .padic import (
    LocalField,
    PadicElement,
    embed,
    is_square,
    norm,
    square_class,
    square_class_group,
    valuation,
)
from .surfaces import (
    AnalysisReport,
    ChateletSurface,
    RationalChateletSurface,
    analyze_global,
    analyze_local,
    brauer_h1,
    corestriction_on_h1,
    picard_module,
    restriction_on_h1,
)

__version__ = "0.1.0"

__all__ = [
    "AnalysisReport",
    "ChateletSurface",
    "CohMap",
    "CohomologyGroup",
    "ExtensionClass",
    "FiniteGroup",
    "GModule",
    "GModuleMap",
    "IntMatrix",
    "LatticeSubquotient",
    "Lemma52Result",
    "LocalField",
    "PadicElement",
    "RationalChateletSurface",
    "SmithDecomposition",
    "Subgroup",
    "analyze_global",
    "analyze_local",
    "brauer_h1",
    "chatelet_picard_module",
    "class_of",
    "cokernel_structure",
    "cores_ext",
    "corestriction_map",
    "corestriction_on_h1",
    "cyclic_group",
    "describe_invariants",
    "dihedral_group",
    "direct_product",
    "dual_group",
    "dual_map",
    "embed",
    "ext1",
    "extension_from_cocycle",
    "h0",
    "h1",
    "hom_module",
    "induce_module",
    "induced_map",
    "is_square",
    "kernel_basis",
    "lemma52_check",
    "norm",
    "permutation_module",
    "picard_module",
    "pullback",
    "pushout",
    "quaternion_group",
    "regular_module",
    "res_ext",
    "restrict_module",
    "restriction_map",
    "restriction_on_h1",
    "smith_normal_form",
    "solve",
    "square_class",
    "square_class_group",
    "symmetric_group",
    "trivial_module",
    "valuation",
]
