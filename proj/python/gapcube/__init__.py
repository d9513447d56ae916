"""Exact counts, enumeration and Hasse diagrams for independent sets of
powers of paths and cycles (generalized Fibonacci and Lucas cubes).

Counts are returned as Python ints of arbitrary size. Vertex subsets are bit
strings b_1 ... b_n where b_i = "1" means v_i is in the set.
"""

from contextlib import contextmanager

from ._core import *  # noqa: F401,F403
from ._core import CapacityError, ConventionError, active_fault, inject_fault

__version__ = "0.1.0"


@contextmanager
def injected_fault(name):
    """Run a block with one base case deliberately broken (testing aid)."""
    previous = active_fault()
    inject_fault(name)
    try:
        yield
    finally:
        inject_fault(previous)
