"""pik: an exact executable model of reversible quantum programs.

Terms over the generators zeta (a 2^k-th root of unity) and V (a square
root of NOT) are interpreted as unitary matrices over Z[1/2, zeta_k], where
equality is decided exactly.
"""

from .catalytic import catalysis_check, catalyst, phi, precision_transfer_check
from .channels import (
    Channel,
    CqObject,
    HugPresentation,
    chan_apply,
    chan_compose,
    chan_copair,
    chan_discard,
    chan_eq,
    chan_from_hug,
    chan_inj,
    chan_measure,
    chan_new,
    chan_of_unitary,
    chan_oplus,
    chan_tensor,
    completeness_check,
    staton_suite,
)
from .decide import ApproxWitness, PhaseWitness, approx_witness_compose, decide_approx, eq, eq_up_to_phase
from .errors import (
    ChannelError,
    ParseError,
    PikError,
    PrecisionError,
    ShapeError,
    SynthesisCancelled,
    SynthesisError,
    WellFormednessError,
    WitnessError,
)
from .linalg import ExactMatrix, dagger, direct_sum, is_unitary, kron, mat_mul, perm_matrix, star_entrywise
from .qft import QftStats, build_qft, qft_stats
from .ring import RingElem, complex_conj, float_embed, galois_star, ring_add, ring_lift, ring_mul, zeta_pow
from .semantics import check_axioms, check_coherence, eval_term
from .synth2 import SynthesisResult, normalize, synth
from .syntax import parse, pretty
from .tensor import elaborate_kron, n_fold_sum, sigma_tensor
from .term import (
    Comp,
    Id,
    Kron,
    Scale,
    Sum,
    SwapPlus,
    Term,
    V,
    X,
    Zeta,
    lift_term,
    term_conj,
    term_dagger,
    well_formed,
)

evaluate = eval_term

__version__ = "0.1.0"
