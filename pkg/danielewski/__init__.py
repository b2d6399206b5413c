# Author: Simon Blanke
# Email: simon.blanke@yahoo.com
# License: MIT License

__version__ = "0.1.0"
__license__ = "MIT"


from .fields import CoefficientField, RATIONALS
from .surface import (
    SurfaceSpec,
    SurfaceElement,
    normalize,
    reduce_mod_x,
    divide_exact_x,
    load_spec,
    save_spec,
)
from .expmap import (
    ExpMap,
    expmap_canonical,
    verify_expmap,
    extend_to_A,
    makar_limanov_spot_check,
)
from .graded import rho_B, rho_D, verify_graded_relations
from .morphisms import (
    IsoData,
    Morphism,
    build_iso,
    auto_from_seed,
    compare_invariants,
    danielewski_to_standard,
    solve_fiber_conditions,
)
from .stable import (
    StableIsoCertificate,
    bezout_certificate,
    build_stable_iso,
    verify_certificate,
    cancellation_demo,
    stable_chain,
)
from .verifier import Verifier


__all__ = [
    "CoefficientField",
    "RATIONALS",
    "SurfaceSpec",
    "SurfaceElement",
    "normalize",
    "reduce_mod_x",
    "divide_exact_x",
    "load_spec",
    "save_spec",
    "ExpMap",
    "expmap_canonical",
    "verify_expmap",
    "extend_to_A",
    "makar_limanov_spot_check",
    "rho_B",
    "rho_D",
    "verify_graded_relations",
    "IsoData",
    "Morphism",
    "build_iso",
    "auto_from_seed",
    "compare_invariants",
    "danielewski_to_standard",
    "solve_fiber_conditions",
    "StableIsoCertificate",
    "bezout_certificate",
    "build_stable_iso",
    "verify_certificate",
    "cancellation_demo",
    "stable_chain",
    "Verifier",
]
