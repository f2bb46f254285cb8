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

"""Bilinear sums with reciprocals over prime fields."""

from ._core import (
    RecipError,
    char_moment,
    compare_table,
    count_J,
    count_N,
    count_N_tuples,
    discrepancy,
    eval_K,
    eval_S,
    eval_T,
    exponent,
    find_t,
    is_prime,
    run_config,
    table_compare,
    verify,
)

__all__ = [
    "RecipError",
    "char_moment",
    "compare_table",
    "count_J",
    "count_N",
    "count_N_tuples",
    "discrepancy",
    "eval_K",
    "eval_S",
    "eval_T",
    "exponent",
    "find_t",
    "is_prime",
    "run_config",
    "table_compare",
    "verify",
]
