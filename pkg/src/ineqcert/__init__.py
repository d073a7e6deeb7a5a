"""Certified trigonometric and hyperbolic inequality toolkit.

Exact Bernoulli-number power series, validated interval arithmetic with
outward rounding, an inequality DSL, a machine-checkable catalog of sharp
circular/hyperbolic bounds, and branch-and-bound sign certification.
"""

__version__ = "0.1.0"

from .intervals import Interval, IntervalError, PoleError, DomainError  # noqa: F401
from .series import bernoulli_even, series, tail_bound, ratio_monotone  # noqa: F401
from .expr import eval_interval, eval_point, differentiate, print_expr  # noqa: F401
from .parser import parse_expr, parse_inequality, ParseError  # noqa: F401
from .catalog import load_builtin, load_statement_file  # noqa: F401
from .certify import (  # noqa: F401
    Certificate,
    CertifyConfig,
    find_root,
    gap_scan,
    limit_at,
    revalidate,
    verify_inequality,
    verify_monotone,
    verify_sign,
    verify_value,
)
