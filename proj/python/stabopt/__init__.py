# Copyright 2026 The stabopt Authors
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

"""Stabilizer code construction, evaluation and search on asymmetric Pauli channels."""

from ._stabopt import (
    BudgetExceeded,
    InfeasibleConstraint,
    MutationFailed,
    PauliChannel,
    PauliVector,
    Stabilizer,
    UnsatisfiableChannel,
    __version__,
    channel_list,
    classify,
    distance,
    enumerate_cyclic,
    fer,
    geometric_mean_fer,
    hill_climb,
    permutation_equivalent,
    random_stabilizer,
    resolve_channel,
    run_cli,
)

__all__ = [
    "BudgetExceeded",
    "InfeasibleConstraint",
    "MutationFailed",
    "PauliChannel",
    "PauliVector",
    "Stabilizer",
    "UnsatisfiableChannel",
    "__version__",
    "channel_list",
    "classify",
    "distance",
    "enumerate_cyclic",
    "fer",
    "geometric_mean_fer",
    "hill_climb",
    "permutation_equivalent",
    "random_stabilizer",
    "resolve_channel",
    "run_cli",
]
