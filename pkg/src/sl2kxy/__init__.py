"""Exact computations in SL2(K[x, y]).

Unimodular rows and Bezout witnesses, elementary reductions of rows with a
low-degree entry, certified factorization of determinant-one matrices into
transvections and a Cohn-type factor, and the homogeneous-component identities
of associated rows.  All arithmetic is exact over Q extended by square roots.
"""

from .canonical import CanonicalForm, canonicalize_quadratic
from .cofactors import (UnimodularRow, cofactors, cofactors_ansatz, is_unimodular, lemma2_split,
                        reduce_cofactor_pair, top_gcd_degree)
from .decompose import Verdict, decompose, decompose_theorem1, verify_certificate
from .endo import AffineAuto, Endo, apply, compose, invert_affine
from .errors import *  # noqa: F401,F403
from .homog import StarData, alpha_sequence, verify_star
from .mat import (COHN_MATRIX, Certificate, CohnFactor, ElemMat, L, Mat2, U, det, expand_special,
                  mat_mul)
from .parse import format_poly, parse_poly, parse_scalar
from .poly import Poly, exact_div, gcd_bivariate, homogeneous_components
from .reduce import (RowCert, Terminal, corollary1_reduce, lemma5_reduce, lemma6_reduce,
                     lemma7_reduce, reduce_row)
from .scalar import QuadExt, Tower, sqrt, sqrt_adjoin

__version__ = "0.1.0"
