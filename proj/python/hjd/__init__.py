# SPDX-License-Identifier: Apache-2.0
"""Hybrid joint diagonalization of matrix sets under Hermitian and transpose congruences."""

from ._hjd import (  # noqa: F401
    HjdError,
    SweepConfig,
    __version__,
    builtin_config_names,
    co_hjd,
    h_cjdi,
    jd_cost,
    modulus_of_uniqueness,
    oracle_check,
    performance_index,
    ro_hjd,
    run_experiment,
)
