"""Central simple algebras representing cup products of Galois cocycles.

Given a finite Galois datum (a number field L, its automorphism group over K,
a p-th root of unity and two 1-cocycle tables) the package builds the
p^2-dimensional algebra D with basis beta^i z^j, verifies it is central
simple, and cross-checks it against the commutant inside the full crossed
product.  For p = 2 over Q it decides splitness with Hilbert symbols.
"""
from .brauer2 import (QuaternionPresentation, equal_kernel_quaternion, hilbert_symbol, is_split,
                      norm_search, normalize_quaternion)
from .crossed import CrossedProduct, commutant_oracle, compare_with_theorem, run_oracle
from .datum import GaloisDatum, check_minimal, detect_special, load_datum, reduce_datum, subgroups
from .exactnum import Polynomial, invert_matrix, poly_gcd_ext, solve_linear
from .fieldtower import Automorphism, FieldElement, FieldL
from .theorem import (StructureAlgebra, TheoremContext, build_D, run_theorem, verify_central_simple,
                      verify_min_poly)

__version__ = "0.1.0"
