"""Truncated simplicial sets, chains of ordinal maps and free simplicial monoids."""

from types import ModuleType as _ModuleType

from .free import *  # noqa: F401,F403
from .ndelta import *  # noqa: F401,F403
from .sset import *  # noqa: F401,F403

__all__ = [n for n, v in dict(globals()).items() if not n.startswith("_") and not isinstance(v, _ModuleType)]
