"""qcconv: exact-arithmetic quantum convolutional code toolkit.

Stabilizers of quantum convolutional codes are polynomial matrices
(X(D)|Z(D)) over a small finite field; this package builds them (CSS,
tensor-product and cyclic-product constructions), verifies the
commutation condition, synthesizes finite-depth encoding circuits from
frame-translation-invariant Clifford gates, and searches for good
self-orthogonal classical convolutional codes.
"""

__version__ = "0.1.0"

from .constructions import (CssInput, OverlappedResult, css_construct,
                            cyclic_g2, overlapped_generator,
                            product_construct, product_distance_bound)
from .convcode import (ConvCode, DistanceReport, WeightCapExceeded, bch_bound,
                       dual_code, free_distance)
from .fields import Field, FieldElement, field_from_order, make_field
from .gates import (Add, Circuit, CircuitStats, CPhase, Dft, Gate, Mult,
                    Phase, apply_circuit, apply_gate, circuit_stats,
                    cz_gates, decompose_column_addition, inverse_circuit,
                    inverse_gates, swap_gates)
from .laurent import (LaurentPoly, constant, delay, divmod_poly, gcd_poly,
                      laurent, monomial, one, zero)
from .polymatrix import (PolyMatrix, SmithDecomposition, determinant, hstack,
                         is_unimodular, kernel_basis, kron, rank,
                         row_modules_equal, row_reduce, smith_normal_form,
                         vstack)
from .search import SearchConfig, SearchRecord, enumerate_candidates, search
from .stabilizer import (CodeParams, SemiInfiniteSlice, StabilizerMatrix,
                         code_params, expand_semi_infinite, is_self_orthogonal,
                         reconstruct, render_pauli, symplectic_commutator,
                         trivial_stabilizer)
from .synthesis import (SynthesisError, SynthesisResult, depth_bound,
                        synthesize_block_inverse_encoder,
                        synthesize_css_encoder, synthesize_product_encoder,
                        verify_inverse_encoder)

__all__ = [name for name in dir() if not name.startswith("_")]
