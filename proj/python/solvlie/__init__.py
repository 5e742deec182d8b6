"""Exact conjugacy kernel for finite-dimensional solvable Lie algebras.

The heavy lifting happens in the C++ extension; this package re-exports the
surface.  Subspaces travel as semicolon-separated coordinate rows
("0,1,0;1,0,2") and scalars as decimal/fraction strings, matching the CLI.
"""

from ._core import Algebra, Error, check_algebra, run_suite

__all__ = ["Algebra", "Error", "check_algebra", "run_suite"]
__version__ = "0.1.0"
