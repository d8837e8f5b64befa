"""bskoda: exact ideal-theoretic toolkit and containment verifier.

Core layers: polynomial arithmetic (`polys`), Groebner engine
(`groebner`), ideal calculus (`ideals`), numerical invariants
(`invariants`), Newton polyhedra (`newton`), closure oracles
(`closures`), the randomized parameter construction (`construction`),
the theorem harness (`harness`) and the CLI (`cli`).
"""

from .polys import (GREVLEX, LEX, Poly, Ring, RingMismatchError, TermOrder,
                    derivative, frobenius_power, mono_cmp)
from .groebner import (BudgetExceededError, GroebnerBasis, buchberger,
                       exact_div, is_member, krull_dim, normal_form)
from .ideals import (Ideal, bracket_power, colon, eliminate, ideal_combine,
                     ideal_equal, ideal_power, ideal_product, ideal_sum,
                     intersect, saturation, unit_ideal, zero_ideal)
from .invariants import (INFINITE_HEIGHT, InvariantProfile, ReductionVerdict,
                         analytic_spread, height, invariant_profile,
                         is_parameters, is_reduction, is_regular_sequence_mod,
                         minimal_reduction, monomial_min_primes)
from .newton import (NewtonPolyhedron, NotMonomialError, monomial_icl,
                     monomial_icl_member, newton_hull)
from .closures import (IclVerdict, TcTrace, find_multiplier_c,
                       icl_member_general, jacobian_test_candidates, tc_trace)
from .construction import (ConstructionError, ConstructionState,
                           construct_32, find_M, lemma31_condition,
                           verify_34, verify_35, verify_items)
from .grammar import (Fixture, ParseError, ReportDoc, emit_report,
                      parse_fixture, parse_ideal, parse_poly, parse_report,
                      parse_ring, poly_text, ring_text)
from .harness import (ContainmentResult, HypothesisError, run_fixture,
                      verify_bs_monomial, verify_bs_sampled,
                      verify_krull_step, verify_thm41)
from .cli import cli_main

__version__ = "0.1.0"
