"""CA-MIQ: dual-critic tabular Q-learning with priority-aware exploration.

Thin Python surface over the C++ core. Everything lives in camiq._core;
this package re-exports it.
"""

from camiq._core import *  # noqa: F401,F403
from camiq._core import __doc__ as _core_doc

__version__ = "0.1.0"
__doc__ = _core_doc
