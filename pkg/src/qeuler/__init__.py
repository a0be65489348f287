"""q-Euler polynomial families, their Dirichlet and Barnes generalizations,
and the multiple q-zeta / q-l functions that interpolate them.

Exact arithmetic over rationals, double precision, and arbitrary-precision
floats share one scalar wrapper; every infinite summation ships a certified
tail bound.  See the ``verify`` module for the executable identity suite and
``cli`` for the command line front end.
"""

from .backends import backend_name, get_backend
from .characters import (DirichletCharacter, character_convolution,
                         character_from_table, character_value,
                         parse_character, trivial_character)
from .eulerpoly import (BarnesParams, EulerFamilySpec, barnes_euler,
                        barnes_euler_chi, euler_chi, euler_chi_hr,
                        euler_chi_order, euler_poly, euler_poly_hr,
                        euler_poly_order)
from .qcore import (QBinomialTable, gauss_expansion_rhs, q_binomial,
                    q_binomial_table, q_bracket_two, q_factorial, q_number,
                    q_pochhammer)
from .scalar import (ExactModeError, Number, QParam, exact_root_pow,
                     pow_principal, to_float)
from .series import (DEFAULT_CONFIG, DivergenceError, SeriesConfig,
                     SeriesValue, TailBoundError, TermCapError)
from .verify import (CheckEntry, CheckReport, IdentityCheck, SuiteConfig,
                     SuiteConfigError, build_suite, classical_barnes_euler,
                     classical_euler_order, classical_euler_poly,
                     richardson_q_limit, run_check, run_suite)
from .zeta import (ZetaQuery, barnes_l, barnes_zeta, l_multi, l_multi_h,
                   zeta_multi, zeta_multi_h)

__version__ = "0.1.0"

__all__ = [
    "BarnesParams", "CheckEntry", "CheckReport", "DEFAULT_CONFIG",
    "DirichletCharacter", "DivergenceError", "EulerFamilySpec",
    "ExactModeError", "IdentityCheck", "Number", "QBinomialTable", "QParam",
    "SeriesConfig", "SeriesValue", "SuiteConfig", "SuiteConfigError",
    "TailBoundError", "TermCapError", "ZetaQuery", "backend_name",
    "barnes_euler", "barnes_euler_chi", "barnes_l", "barnes_zeta",
    "build_suite", "character_convolution", "character_from_table",
    "character_value", "classical_barnes_euler", "classical_euler_order",
    "classical_euler_poly", "euler_chi", "euler_chi_hr", "euler_chi_order",
    "euler_poly", "euler_poly_hr", "euler_poly_order", "exact_root_pow",
    "gauss_expansion_rhs", "get_backend", "l_multi", "l_multi_h",
    "parse_character", "pow_principal", "q_binomial", "q_binomial_table",
    "q_bracket_two", "q_factorial", "q_number", "q_pochhammer",
    "richardson_q_limit", "run_check", "run_suite", "to_float",
    "trivial_character", "zeta_multi", "zeta_multi_h",
]
