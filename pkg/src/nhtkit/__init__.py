"""Number theoretic Hilbert transform toolkit."""

from nhtkit.catalog import CatalogEntry, builtin_catalog, load_catalog, save_catalog
from nhtkit.circulant import NhtMatrix, build_first_row, gram, is_identity, row_of
from nhtkit.codec import (ScrambleKey, apply_matrix, descramble_stream, forward, inverse,
                          scramble_stream)
from nhtkit.conditions import Verdict, autocorrelation, check_solution, condition_set
from nhtkit.errors import NhtError
from nhtkit.residue import dot_mod, mul_mod, reduce
from nhtkit.search import SearchSpec, canonicalize, census, enumerate_solutions, random_search

__version__ = "0.1.0"

__all__ = [
    "CatalogEntry", "NhtError", "NhtMatrix", "ScrambleKey", "SearchSpec", "Verdict",
    "apply_matrix", "autocorrelation", "build_first_row", "builtin_catalog", "canonicalize",
    "census", "check_solution", "condition_set", "descramble_stream", "dot_mod",
    "enumerate_solutions", "forward", "gram", "inverse", "is_identity", "load_catalog",
    "mul_mod", "random_search", "reduce", "row_of", "save_catalog", "scramble_stream",
]
