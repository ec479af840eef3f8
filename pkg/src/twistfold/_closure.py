"""Selects the compiled closure kernel when it was built, else the pure-Python one."""

try:
    from ._kernel import perm_closure
    COMPILED = True
except ImportError:  # extension not built
    from ._closure_py import perm_closure
    COMPILED = False

__all__ = ["perm_closure", "COMPILED"]
