"""Solve x^2 + d*y^2 = m with Cornacchia's continued-fraction algorithm."""

from .compose import PrimePowerRep, compose_pair, prime_power_rep, smith_two_squares, solve_general
from .contfrac import Antenaresis, expand, find_mu, find_nu, is_palindromic, lemma_bound_check
from .cornacchia import ProblemSpec, Representation, solve_d1_for_root, solve_for_root, solve_proper
from .factor import Factorization, FactorizationError, factorize, fermat_base2, is_prime, pollard_rho
from .integer import ext_gcd, isqrt, mod_pow, perfect_square
from .modsqrt import RootSet, hensel_lift, normalize_root, sqrt_minus_d_mod_m, tonelli
from .oracle import brute_solutions

__version__ = "0.1.0"

__all__ = [
    "Antenaresis",
    "Factorization",
    "FactorizationError",
    "PrimePowerRep",
    "ProblemSpec",
    "Representation",
    "RootSet",
    "brute_solutions",
    "compose_pair",
    "expand",
    "ext_gcd",
    "factorize",
    "fermat_base2",
    "find_mu",
    "find_nu",
    "hensel_lift",
    "is_palindromic",
    "is_prime",
    "isqrt",
    "lemma_bound_check",
    "mod_pow",
    "normalize_root",
    "perfect_square",
    "pollard_rho",
    "prime_power_rep",
    "smith_two_squares",
    "solve_d1_for_root",
    "solve_for_root",
    "solve_general",
    "solve_proper",
    "sqrt_minus_d_mod_m",
    "tonelli",
]
