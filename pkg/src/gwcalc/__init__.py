"""Exact genus-series calculus for blow-up formulae of Gromov-Witten invariants.

Submodules: :mod:`gwcalc.series` (exact even power series),
:mod:`gwcalc.correspondence` (triangular genus systems and blow-up
coefficients), :mod:`gwcalc.degeneration` (admissible triples and the
dimension filter), :mod:`gwcalc.bps` (generalized BPS numbers) and
:mod:`gwcalc.cli`.
"""
from .correspondence import (
    CorrespondenceKind,
    GenusSequence,
    apply_blowup,
    closed_form,
    convolve,
    deconvolve,
    generating_function_check,
    impulse,
    verify_closed_form,
)
from .series import (
    EvenSeries,
    Rational,
    series_add,
    series_inverse,
    series_mul,
    series_pow,
    sin_u_over_u,
    sinc_half,
    sinc_scaled,
)

__version__ = "0.1.0"
