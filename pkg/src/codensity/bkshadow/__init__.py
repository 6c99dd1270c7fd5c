"""Finite rings, the built-in monad catalog and the affine-span shadow."""

from types import ModuleType as _ModuleType

from .builtins import *  # noqa: F401,F403
from .ring import *  # noqa: F401,F403
from .shadow import *  # noqa: F401,F403

__all__ = [n for n, v in dict(globals()).items() if not n.startswith("_") and not isinstance(v, _ModuleType)]
