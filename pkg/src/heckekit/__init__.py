"""heckekit: exact-arithmetic extended affine Weyl groups, affine Hecke
algebras, the anti-spherical module, and trace polynomials."""

from .affine_weyl import AffineWeylElement, ExtendedAffineWeyl, weyl_group
from .antispherical import AntisphericalElement, AntisphericalModule
from .errors import (DatumMismatchError, HeckeKitError, NotDominantError,
                     ParseError, ResourceBudgetError, UnknownLabelError)
from .hecke import GroupAlgebraElement, HeckeAlgebra, HeckeElement, hecke_algebra
from .laurent import LaurentPoly
from .root_datum import RootDatum, build_root_datum, weights_to_json
from .suites import SUITE_NAMES, SuiteReport, run_suite
from .whittaker import (QWeightTable, compare_with_kl, lusztig_q_analogue,
                        lusztig_q_analogue_unreduced, translation_length,
                        whittaker_table, whittaker_trace)

__version__ = "0.1.0"

__all__ = [
    "AffineWeylElement", "AntisphericalElement", "AntisphericalModule",
    "DatumMismatchError", "ExtendedAffineWeyl", "GroupAlgebraElement",
    "HeckeAlgebra", "HeckeElement", "HeckeKitError", "LaurentPoly",
    "NotDominantError", "ParseError", "QWeightTable", "ResourceBudgetError",
    "RootDatum", "SUITE_NAMES", "SuiteReport", "UnknownLabelError",
    "build_root_datum", "compare_with_kl", "hecke_algebra",
    "lusztig_q_analogue", "lusztig_q_analogue_unreduced", "run_suite",
    "translation_length", "weights_to_json", "weyl_group", "whittaker_table",
    "whittaker_trace",
]
