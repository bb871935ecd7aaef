# Copyright 2026 The icoheat Authors
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

"""Quantum-switch heat extraction and refrigeration simulator."""

from ._icoheat import (
    Hamiltonian,
    KrausChannel,
    ThermalSpec,
    VanishingBranch,
    __version__,
    branch_energy_change,
    channel_fidelity,
    cli,
    compose,
    cop_sweep,
    cycle_report,
    energy,
    full_ad_excited,
    full_ad_ground,
    identity_channel,
    multipass,
    run_switch,
    run_verification,
    sample_switch,
    steady_state,
    thermal_state,
    thermalizing_channel,
)

__all__ = [
    "Hamiltonian",
    "KrausChannel",
    "ThermalSpec",
    "VanishingBranch",
    "__version__",
    "branch_energy_change",
    "channel_fidelity",
    "cli",
    "compose",
    "cop_sweep",
    "cycle_report",
    "energy",
    "full_ad_excited",
    "full_ad_ground",
    "identity_channel",
    "multipass",
    "run_switch",
    "run_verification",
    "sample_switch",
    "steady_state",
    "thermal_state",
    "thermalizing_channel",
]
