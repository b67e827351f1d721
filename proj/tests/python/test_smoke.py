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

import cmath
import math
import os
from fractions import Fraction

import pytest

import modwit

DATA = os.environ.get("MODWIT_TEST_DATA", os.path.join(os.path.dirname(__file__), "..", "data"))


def test_eisenstein_table():
    e4 = modwit.eisenstein_q(2, 3)
    assert str(e4) == "1 + 240 q + 2160 q^2"
    assert e4.weight == 4
    assert modwit.coefficients(e4) == [1, 240, 2160]


def test_eisenstein_relation():
    e4 = modwit.eisenstein_q(2, 20)
    assert e4 * e4 == modwit.eisenstein_q(4, 20)


def test_lattice_matches_series():
    tau = 2j
    lat = modwit.eisenstein_lattice(2, tau, "shells", 200)
    ser = modwit.eisenstein_q(2, 20).evaluate(cmath.exp(2j * math.pi * tau))
    assert abs(lat / modwit.two_zeta(2) - ser) < 1e-4


def test_decompose_discriminant():
    rec = open(os.path.join(DATA, "delta.yaml")).read()
    d = modwit.decompose(modwit.QSeries.from_record(rec))
    assert d["decomposition"] == "(1/1728)·E4^3 - (1/1728)·E6^2"
    assert d["modular"]
    with pytest.raises(modwit.NoDecomposition):
        modwit.decompose(modwit.QSeries.from_record("{weight: 4, coeffs: ['1', '1'], order: 6}"))


def test_pfaffian():
    m = [["0", "1/2", "1", "0"], ["-1/2", "0", "0", "3"], ["-1", "0", "0", "2"], ["0", "-3", "-2", "0"]]
    pf = Fraction(modwit.pfaffian(m))
    assert pf * pf == Fraction(modwit.determinant(m))
    with pytest.raises(ValueError):
        modwit.pfaffian([["0", "1"], ["1", "0"]])


def test_genus_and_verdict():
    g = modwit.witten_genus('{dim: 4, pontryagin_numbers: {"1": "0"}}', 8)
    assert str(g) == "0"
    rep = modwit.string_modularity_check('{dim: 8, pontryagin_numbers: {"1,1": "0", "2": "720"}}', 8)
    assert rep["verdict"] == "modular"
    assert rep["decomposition"] == "-E4"
    assert rep["weight"] == 4


def test_witten_class_and_a_hat():
    assert modwit.witten_class(1, 4, 3) == "1 + (-1/12 + 2 q + 6 q^2)·b^2·x1^2"
    assert modwit.witten_class_q0(2, 8) == modwit.a_hat_taylor(2, 8, 2)


def test_regularized_product_identity():
    assert modwit.regularized_product_identity(1, 8, 2)


def test_anomaly():
    r = modwit.verify_anomaly(1, 8, 4)
    assert r["ok"]


def test_localization():
    r = modwit.bv_localize("{alpha0: z, g: '-1', s: '1', t: 2}")
    assert r["residual"] < 1e-9
    with pytest.raises(modwit.FixedPointDegenerate):
        modwit.bv_localize("{alpha0: z, g: '-1', s: '0'}")


def test_cli_round_trip():
    code, out, err = modwit.run_cli(["anomaly", "--roots", "1", "--dim", "8"])
    assert code == 0
    assert "delta(Wit) == d(A): OK" in out
    code, _, err = modwit.run_cli(["genus", "/no/such/file"])
    assert code == 1
    assert err
