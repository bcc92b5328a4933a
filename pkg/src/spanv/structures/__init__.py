"""Algebraic structures on families of objects and their checkers."""

from .base import (
    AntipodeData,
    AxiomResult,
    CheckReport,
    ComonoidData,
    FrobeniusData,
    MonoidData,
    MoritaContextData,
    OplaxBimonoidData,
    OplaxModuleData,
    OplaxMorphismData,
    check_frobenius,
    check_strict_comonoid,
    check_strict_monoid,
    compose_chain,
    framed,
    tensor_2chain,
    tensor_chain,
    tensor_monoid,
)
from .bimonoid import (
    check_oplax_bimonoid,
    infer_unique_structure_cells,
    structure_cell_boundaries,
)
from .convolution import (
    antipode_context,
    check_fusion_inverse,
    check_oplax_hopf,
    check_oplax_inverse,
    convolution,
    convolution_2cells,
    convolution_to_endo,
    convolution_unit,
    endo_to_convolution,
    fusion_cell,
    morita_uniqueness_iso,
)
from .modules import (
    check_oplax_module,
    regular_module,
    tensor_modules,
    unit_module,
)
from .morphisms import (
    check_module_morphism,
    check_module_transformation,
    check_oplax_bimonoid_morphism,
    check_oplax_comonoid_morphism,
    check_oplax_monoid_morphism,
    tensor_module_morphism,
)

__all__ = [
    "AntipodeData",
    "AxiomResult",
    "CheckReport",
    "ComonoidData",
    "FrobeniusData",
    "MonoidData",
    "MoritaContextData",
    "OplaxBimonoidData",
    "OplaxModuleData",
    "OplaxMorphismData",
    "antipode_context",
    "check_frobenius",
    "check_fusion_inverse",
    "check_module_morphism",
    "check_module_transformation",
    "check_oplax_bimonoid",
    "check_oplax_bimonoid_morphism",
    "check_oplax_comonoid_morphism",
    "check_oplax_hopf",
    "check_oplax_inverse",
    "check_oplax_module",
    "check_oplax_monoid_morphism",
    "check_strict_comonoid",
    "check_strict_monoid",
    "compose_chain",
    "convolution",
    "convolution_2cells",
    "convolution_to_endo",
    "convolution_unit",
    "endo_to_convolution",
    "framed",
    "fusion_cell",
    "infer_unique_structure_cells",
    "morita_uniqueness_iso",
    "regular_module",
    "structure_cell_boundaries",
    "tensor_2chain",
    "tensor_chain",
    "tensor_module_morphism",
    "tensor_modules",
    "tensor_monoid",
    "unit_module",
]
