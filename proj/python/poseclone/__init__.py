"""Deterministic numerics for pose-driven video analysis.

The heavy lifting lives in the compiled ``_poseclone`` extension; this
package re-exports its full surface.
"""

try:
    from ._poseclone import *  # noqa: F401,F403
    from ._poseclone import __version__  # noqa: F401
except ImportError:
    # In-tree development: the extension sits on PYTHONPATH next to the
    # CMake build instead of inside the package.
    from _poseclone import *  # noqa: F401,F403
    from _poseclone import __version__  # noqa: F401
