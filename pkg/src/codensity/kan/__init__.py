"""Codensity monads, reflective localizations and cofinality witnesses."""

from types import ModuleType as _ModuleType

from .codensity import (CodensityMonad, CodensityShape, CodensityValue, codensity_monad, codensity_value,
                        d_preserving_check, restriction_map, retract_closure, retract_witness,
                        terminality_count, unit_compatible_bijections)
from .cofinal import (CofinalityWitness, WitnessError, bk_sketch_witness, cofinality_witness_check,
                      identity_witness)
from .localization import Localization, codensity_by_limit, localization_postconditions, reflector_and_localization

__all__ = [n for n, v in dict(globals()).items() if not n.startswith("_") and not isinstance(v, _ModuleType)]
