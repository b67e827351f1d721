# Copyright 2026 The modwit Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Exact Eisenstein series, Witten classes, regularized Pfaffians and
equivariant localization checks."""

from fractions import Fraction

from ._modwit import (
    FIXED_POINT_CONSTANT,
    FixedPointDegenerate,
    NoDecomposition,
    NotDivisible,
    NotInvertible,
    QSeries,
    a_hat_taylor,
    bv_localize,
    decompose,
    determinant,
    eisenstein_hat,
    eisenstein_lattice,
    eisenstein_q,
    pfaffian,
    regularized_product,
    regularized_product_identity,
    run_cli,
    string_modularity_check,
    transform_residual,
    two_zeta,
    verify_anomaly,
    witten_class,
    witten_class_q0,
    witten_genus,
)


def coefficients(series):
    """Coefficients of a QSeries as Fractions, starting at q^min_exp."""
    return [Fraction(c) for c in series.coeffs]


__all__ = [name for name in dir() if not name.startswith("_")]
