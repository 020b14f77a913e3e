"""zdbench: zero-divisor analysis of finite commutative rings and modules.

Constructs small commutative rings and modules, decides the zero-divisor
predicates (Auslander, torsion-free, property (A), content, Ohm-Rush, McCoy),
and verifies a registry of transfer statements exhaustively over an
enumerated universe, with constructive witnesses throughout.
"""

from .dsl import build_algebra, build_module, build_ring, parse_dsl, print_node
from .extensions import (ExtElement, FiniteAlgebra, brute_force_zd,
                         content_ideal, ext_arith, is_mccoy_algebra,
                         is_ohm_rush, is_zd_on_extension, mccoy_witness,
                         module_poly, module_series, ring_poly, ring_series)
from .localize import (Localization, localize, localize_module,
                       natural_map_kernel, total_quotient)
from .modules import (FiniteModule, Submodule, Verdict, ann, content_of_element,
                      content_surjective, cyclic_module, direct_sum,
                      free_module, has_property_A, hom_module, ideal_action,
                      is_auslander, is_content_module, is_faithfully_flat,
                      is_flat, is_torsion_free, regular_module,
                      tensor_with_algebra, zero_divisors_module)
from .rings import (FiniteRing, Ideal, MultiplicativeSet, Zmod, all_ideals,
                    annihilator, ideal_combine, ideal_generated, ideal_power,
                    poly_quotient, product_ring, ring_predicates,
                    zero_divisors_ring)
from .statements import (REGISTRY, run_statement, run_suite,
                         search_counterexample, z_adapter_check)
from .universe import UniverseLimits, generate_universe

make_ring = build_ring

__version__ = "0.1.0"

__all__ = [
    "ExtElement", "FiniteAlgebra", "FiniteModule", "FiniteRing", "Ideal",
    "Localization", "MultiplicativeSet", "REGISTRY", "Submodule",
    "UniverseLimits", "Verdict", "Zmod", "all_ideals", "ann", "annihilator",
    "brute_force_zd", "build_algebra", "build_module", "build_ring",
    "content_ideal", "content_of_element", "content_surjective",
    "cyclic_module", "direct_sum", "ext_arith", "free_module",
    "generate_universe", "has_property_A", "hom_module", "ideal_action",
    "ideal_combine", "ideal_generated", "ideal_power", "is_auslander",
    "is_content_module", "is_faithfully_flat", "is_flat", "is_mccoy_algebra",
    "is_ohm_rush", "is_torsion_free", "is_zd_on_extension", "localize",
    "localize_module", "make_ring", "mccoy_witness", "module_poly",
    "module_series", "natural_map_kernel", "parse_dsl", "poly_quotient",
    "print_node", "product_ring", "regular_module", "ring_poly",
    "ring_predicates", "ring_series", "run_statement", "run_suite",
    "search_counterexample", "tensor_with_algebra", "total_quotient",
    "z_adapter_check", "zero_divisors_module", "zero_divisors_ring",
]
