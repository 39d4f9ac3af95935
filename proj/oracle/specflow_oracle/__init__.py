"""Reference solver and plotting interfaces. Not implemented in this release."""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

import numpy as np

__all__ = ["OracleRun", "OracleResult", "OutOfScopeError", "oracle_run", "plot_frames", "plot_energy"]


class OutOfScopeError(ValueError):
    """Raised for configurations outside the parity scope."""


@dataclass
class OracleRun:
    model: str
    dim: int
    n: int
    length: float
    method: str
    h: float
    t_final: float
    ic_kind: str
    eta0: float = 0.0
    ic_params: dict[str, float] = field(default_factory=dict)
    model_params: dict[str, float] = field(default_factory=dict)


@dataclass
class OracleResult:
    frames: list[np.ndarray]
    times: list[float]
    free_energy: list[float]


def oracle_run(config: OracleRun) -> OracleResult:
    """Advances config with the reference update rule, dx = L/N.

    Accepts only cosine_probe and noise-free uniform initial conditions;
    anything else raises OutOfScopeError.
    """
    if config.ic_kind not in ("cosine_probe", "uniform_noise"):
        raise OutOfScopeError(f"ic.kind '{config.ic_kind}' is outside the parity scope")
    raise NotImplementedError("oracle_run is not implemented")


def plot_frames(manifest: Path, out_dir: Path) -> Sequence[Path]:
    """Writes one heatmap per frame listed in a specflow manifest."""
    raise NotImplementedError("plot_frames is not implemented")


def plot_energy(diagnostics_csv: Path, out_path: Path) -> Path:
    """Writes a free energy versus time plot with a logarithmic time axis."""
    raise NotImplementedError("plot_energy is not implemented")
