"""Degenerate hyperbolic functions, degenerate Bernoulli/Euler numbers and
p-adic Riemann/fermionic sums in exact rational arithmetic."""

from .ring import LAMBDA, LambdaPoly, format_lambda_poly, parse_lambda_poly, parse_rational
from .series import Series, ps_div, ps_eq, ps_mul
from .special import (cauchy_numbers, classical_numbers, degenerate_bernoulli, degenerate_euler,
                      degenerate_exp_series, number_table, oracle_degenerate_number)
from .hyperbolic import (coth_half_scaled_series, cosh_series, hyperbolic_series, sinh_series,
                         tanh_half_series)
from .padic import (IntegrandSpec, PadicContext, convergence_report, exact_to_padic,
                    fermionic_sum, padic_distance, verify_shift_equation, volkenborn_sum)
from .report import IdentityReport
from .identities import all_passed, run_all

__version__ = "0.1.0"
