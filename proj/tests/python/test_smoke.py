# Copyright 2026 The recip-sums Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

from fractions import Fraction

import pytest

import recip_sums as rs


def test_table_rows():
    rows = rs.compare_table()
    assert [(r["alpha"], r["beta"]) for r in rows] == [
        (Fraction(2, 5), Fraction(3, 10)),
        (Fraction(2, 5), Fraction(2, 5)),
        (Fraction(1, 5), Fraction(4, 5)),
    ]
    first = rows[0]["bounds"]["SAbd"]
    assert first["exponent"] == Fraction(419, 600)
    assert first["k_set"] == [14, 15] and first["winner"]
    assert rows[1]["bounds"]["KMix1"]["winner"]
    assert rows[2]["bounds"]["KMix2"]["exponent"] == Fraction(14, 15)


def test_table_compare_gate():
    assert rs.table_compare()["exit_code"] == 0
    assert rs.table_compare(k_max=1)["exit_code"] == 1


def test_exponent_accepts_strings_and_fractions():
    assert rs.exponent("KMix1", "2/5", Fraction(2, 5)) == Fraction(31, 40)
    assert rs.exponent("SAbd", Fraction(2, 5), Fraction(3, 10), k=14) == Fraction(419, 600)


def test_complete_sum():
    r = rs.eval_S(11, U=10, V=10)
    assert abs(r["value"] + 10) < 1e-9
    assert r["terms"] == 100


def test_T_complete_vanishes():
    r = rs.eval_T(101, U=101, V=101)
    assert abs(r["value"]) < 1e-6 * 101


def test_K_bounded():
    r = rs.eval_K(101, a=3, b=5, U=40, V=50, weights="random", seed=7)
    assert abs(r["value"]) <= 40 * 50


def test_polygon_region():
    r = rs.eval_S(31, U=10, V=10, polygon=[(0, 0), (10, 0), (0, 10)])
    assert 0 < r["terms"] < 100


def test_counts():
    assert rs.count_J(11, d=1, k=2, T=3)["count"] == 15
    assert rs.count_J(11, d=1, k=2, T=3, method="naive")["count"] == 15
    assert abs(rs.char_moment(5, 2, 1, 2) - 6) < 1e-9


def test_count_N_brute():
    p, U, Z = 23, 9, 13
    want = sum(1 for u in range(1, U + 1) for z in range(1, Z + 1) if (u * u + 1) * z % p == 1)
    assert rs.count_N(p, [1, 0, 1], U, Z)["count"] == want


def test_find_t():
    r = rs.find_t(97, [3, 5], [10.0, 10.0])
    assert r["guarantee"] and r["c"] <= 2


def test_run_config():
    csv = rs.run_config("eval", "p = 11\nU = 10\nV = 10\nsums = S\n")
    assert csv.splitlines()[0].startswith("sum,p,d")


def test_errors():
    with pytest.raises(rs.RecipError, match="NotPrime"):
        rs.eval_S(15, U=3, V=3)
    with pytest.raises(ValueError):
        rs.count_J(11, d=1, k=2, T=3, method="fft")


def test_verify_quick():
    ok, text = rs.verify("quick")
    assert ok, text
