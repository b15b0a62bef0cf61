"""Loop braid groups through their faithful action on free groups.

Words in sigma_i^{+-1}, rho_i and tau_i are evaluated to permutation-conjugacy
automorphisms of F_n, which decides equality of (extended) loop braids.
"""

from ._kernels import BACKEND
from .automorphism import (
    PCAut,
    compose,
    generator_alpha,
    generator_rho,
    generator_sigma,
    generator_sigma_inverse,
    generator_tau,
    identity,
    recognize_pc_shape,
)
from .free_group import FreeWord, as_conjugate_of_generator, parse_word
from .gauss import GaussDiagram, apply_gauss_move, from_word, gauss_equal, realize
from .presentations import plbe_presentation, pur_presentation, r_presentation, ur_presentation, verify
from .rewriting import bfs_equivalent, neighbors, rule_table, simplify
from .words import (
    BraidWord,
    ParseError,
    alpha_word,
    equal,
    evaluate,
    inverse_word,
    is_extended,
    is_pure,
    parse,
    permutation,
    random_word,
)

__version__ = "0.1.0"
