from .category import CategoryError, FinCategory, FinFunctor, NatTransf, Report, validate_category
from .concrete import ConcreteCategory, FinSetCategory, FinVectF2, TableConcreteCategory, finset_window_category
from .constructions import (comma_functor_over, comma_under, connected_components, initial_object,
                            is_initial_functor, is_limit_cone, limit_in_finite_category, over_fiber,
                            slice_over, terminal_object, twisted_arrow)
from .io import category_from_document, dump_category, load_category
from .ordinals import (OrdMap, amax, count_monotone, delta, delta_inj, delta_max, delta_plus, join_all,
                       max_canonical_form, max_compose, monotone_maps, obj_card, obj_name, ord_compose,
                       ord_id, ordinal_join, simplex_category)
