# Copyright 2026 The gaussbound Authors
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

"""Bound entangled Gaussian states.

Covariance matrices are numpy arrays in interleaved (q1, p1, q2, p2, ...)
ordering with vacuum equal to the identity. Mode indices are zero-based; when
no partition is given the first half of the modes forms party A.
"""

from ._core import (
    GaussboundError,
    classify,
    construct,
    estimate_asymptote,
    euler,
    find_boundary,
    is_minimal_ppt,
    is_ppt,
    is_valid_covariance,
    min_slack,
    partial_transpose,
    preparation_state,
    preset,
    scan,
    symplectic_eigenvalues,
    validate_params,
    williamson,
)

__all__ = [
    "GaussboundError",
    "classify",
    "construct",
    "estimate_asymptote",
    "euler",
    "find_boundary",
    "is_minimal_ppt",
    "is_ppt",
    "is_valid_covariance",
    "min_slack",
    "partial_transpose",
    "preparation_state",
    "preset",
    "scan",
    "symplectic_eigenvalues",
    "validate_params",
    "williamson",
]
