"""K-orbit closures and Kazhdan-Lusztig-Vogan polynomials for symmetric pairs.

Thin wrapper around the compiled extension.  Installed wheels carry the
extension inside this package; in a build tree the module sits next to it on
sys.path instead, so fall back to the top-level name.
"""

try:
    from ._klv import *  # noqa: F401,F403
    from ._klv import __version__  # noqa: F401
except ImportError:  # pragma: no cover - build-tree layout
    from _klv import *  # noqa: F401,F403
    from _klv import __version__  # noqa: F401
