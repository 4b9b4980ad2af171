"""Frobenius number, genus and Apery sets of quotients of GCNS numerical semigroups."""

from .apery import AperyTable
from .errors import (ConditionNotMet, EmptyGenerators, GcdViolation, GcnsError,
                     IntegralityViolation, NonpositiveGenerator, ParameterDomain,
                     WNotMember)
from .formulas import (PHI_VARIANTS, PhiTable, apery_quotient_formula, closed_form_k3,
                       closed_form_phi, cns_frobenius, cns_genus, frobenius_quotient,
                       genus_quotient)
from .greedy import (GreedyPresentation, colex_compare, greedy_presentation, o_bh, opt_B,
                     weight)
from .model import (ConditionReport, GcnsSpec, QuotientSpec, build_cns_spec, build_spec,
                    check_conditions, quotient)
from .oracle import (SemigroupOracle, apery_oracle, frobenius_oracle, genus_oracle,
                     ndrp_m, opt_oracle, oracle_build, quotient_apery_oracle,
                     quotient_oracle)

__version__ = "0.1.0"
