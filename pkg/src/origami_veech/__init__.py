"""Veech groups of square-tiled surfaces by exact SL2(Z) orbit enumeration."""

from .origami import (Origami, Stratum, MinusOneLift, make_origami, validate,
                      genus, stratum, are_isomorphic, canonical_key,
                      translations, minus_one_lifts, quotient_by_translations)
from .orbit import (CosetAction, OrbitGraph, act_generator, orbit,
                    veech_action, veech_generators, veech_contains)
from .sl2 import MatZ, S, T, decompose_word, word_to_matrix
from .modular import (MatMod, FiniteAction, TorsionConfig, sl2_group_order,
                      general_position, stab_of_config, predicted_veech_action,
                      pointed_equivalent, conj_to_rotation, find_alignment,
                      in_gamma_uu)
from .covers import (Flavor, FLAVORS, build_w, build_dp, solve_cocycle,
                     classify_flavors, verify_theorem)
from .quartic import (QuarticParams, ParamSymmetry, is_singular,
                      singular_points_mod_q, transform_quartic, quartic_form,
                      param_group_L, subgroup_L_H, l_orbit,
                      lambda_a_convert, legendre_orbit)

__all__ = [n for n in dir() if not n.startswith("_")]
__version__ = "0.1.0"
