"""Exact rank-metric code and linear-set toolkit."""

try:
    from ._rankgeo import *  # noqa: F401,F403
    from ._rankgeo import __doc__  # noqa: F401
except ImportError:
    # In-tree builds put the extension on sys.path next to the build dir.
    from _rankgeo import *  # noqa: F401,F403
    from _rankgeo import __doc__  # noqa: F401
