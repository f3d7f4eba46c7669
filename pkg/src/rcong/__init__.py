"""r-congruences: a ≡_r b (mod m) whenever m divides a - b - r."""

from .algebra import (
    DerivedClaim,
    FalsePremise,
    ModulusMismatch,
    add_claims,
    cancel,
    combine_lcm,
    mul_claims,
    power_claim,
    restrict_modulus,
    scale_claim,
)
from .classes import ClassTable, ResidueClass, class_eq, class_table, contains, make_class, members_in_range
from .core import (
    CongruenceClaim,
    Convention,
    Kind,
    Modulus,
    canonical_r,
    classify,
    div_rem,
    gcd_ext,
    is_r_congruent,
    lcm_many,
)
from .oracle import Bounds, Verdict, VerificationReport, verify, verify_all
from .ring import FormalRingElement, ResidueRing, collision_witness, psi, ring_add, ring_mul, to_class
from .shift import ShiftPermutation, compose, cycle_decomposition, generated_subgroup, order, shift_permutation
from .solver import SolutionSet, find_r, solve_linear

__version__ = "0.1.0"
