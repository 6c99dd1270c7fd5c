"""Monads on finite sets: laws, algebras, the subcategory chain, Fakir completion, cobar, walking action."""

from types import ModuleType as _ModuleType

from .algebras import (AlgebraStructure, ChainReport, RetractWitness, SplittingResult, algebra_search,
                       check_algebra, extras_from_algebra, free_algebra, isar_chain_check, lemma_retraction,
                       max_action_map, retract_membership, split_resolution_search, splitting_violations,
                       verify_splitting)
from .cobar import CobarTable, cobar, cobar_apply, cobar_map, codegeneracy, coface, mult_power_map
from .comparison import (FakirCodensityReport, IdentityMorphismReport, algebra_sizes, fakir_vs_codensity,
                         monad_morphisms_from_identity)
from .explicit import ExplicitMonad, dump_monad, load_monad, monad_from_document, tabulate
from .fakir import FakirFunctor, FakirReport, fakir, fakir_oracle, fakir_report
from .laws import Check, LawReport, functor_checks, monad_law_check, window_generators, window_maps
from .monad import CoaugmentedFunctor, TableError, TableMonad, ensure_budget_power
from .walking import (LevelOverflow, WalkingReport, action_power, chain_lattice_algebra, walking_action,
                      walking_functoriality)

__all__ = [n for n, v in dict(globals()).items() if not n.startswith("_") and not isinstance(v, _ModuleType)]
