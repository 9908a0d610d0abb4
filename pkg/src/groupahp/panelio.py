"""Loading and saving expert panels and run configuration.

Panel files are JSON::

    { "n": 4, "experts": [ { "id": "e1", "matrix": [[...], ...] }, ... ] }

Printed matrices are often rounded to a few decimals, so the loader
accepts reciprocity violations up to 1e-2 relative and then re-symmetrizes
from the upper triangle before any computation.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from importlib import resources
from pathlib import Path

import numpy as np

from .core import ExpertPanel, PCMatrix, resymmetrize
from .errors import DomainError, ShapeError
from .robust import (
    CredibilityScale2,
    CredibilityScale3,
    RobustConfig,
    credibility_from_matrix,
    DEFAULT_SCALE3,
)

LOAD_RECIPROCITY_RTOL = 1e-2


class PanelParseError(Exception):
    """Panel file is malformed (missing keys, bad shapes, bad JSON)."""


def _parse_matrix(raw, n: int, expert_id: str) -> PCMatrix:
    arr = np.asarray(raw, dtype=float)
    if arr.shape != (n, n):
        raise PanelParseError(
            f"expert {expert_id!r}: matrix shape {arr.shape} does not match n={n}"
        )
    if np.any(~np.isfinite(arr)) or np.any(arr <= 0.0):
        i, j = np.argwhere(~(np.isfinite(arr) & (arr > 0.0)))[0]
        raise DomainError(
            f"expert {expert_id!r}: non-positive entry at row {i + 1}, column {j + 1}"
        )
    dev = np.abs(arr * arr.T - 1.0)
    if np.max(dev) > LOAD_RECIPROCITY_RTOL:
        i, j = np.unravel_index(np.argmax(dev), dev.shape)
        raise DomainError(
            f"expert {expert_id!r}: reciprocity violated at row {i + 1}, "
            f"column {j + 1} (c_ij*c_ji = {arr[i, j] * arr[j, i]:.4f})"
        )
    return resymmetrize(arr)


def parse_panel(doc: dict) -> tuple[ExpertPanel, list[str]]:
    try:
        n = int(doc["n"])
        experts = doc["experts"]
    except (KeyError, TypeError) as exc:
        raise PanelParseError(f"missing field: {exc}") from None
    if not experts:
        raise PanelParseError("panel has no experts")
    ids, mats = [], []
    for q, entry in enumerate(experts):
        eid = str(entry.get("id", f"e{q + 1}"))
        if "matrix" not in entry:
            raise PanelParseError(f"expert {eid!r}: missing 'matrix' field")
        ids.append(eid)
        mats.append(_parse_matrix(entry["matrix"], n, eid))
    return ExpertPanel(tuple(mats)), ids


def load_panel(path: str | Path) -> tuple[ExpertPanel, list[str]]:
    try:
        doc = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise PanelParseError(f"{path}: invalid JSON at line {exc.lineno}") from None
    if not isinstance(doc, dict):
        raise PanelParseError(f"{path}: top level must be an object")
    return parse_panel(doc)


def save_panel(path: str | Path, panel: ExpertPanel, ids: list[str] | None = None) -> None:
    ids = ids or [f"e{q + 1}" for q in range(panel.k)]
    doc = {
        "n": panel.n,
        "experts": [
            {"id": eid, "matrix": m.values.tolist()}
            for eid, m in zip(ids, panel.matrices)
        ],
    }
    Path(path).write_text(json.dumps(doc, indent=1))


def bundled_panel(name: str) -> tuple[ExpertPanel, list[str]]:
    """Load one of the sample panels shipped with the package."""
    text = resources.files("groupahp.data").joinpath(f"{name}.json").read_text()
    return parse_panel(json.loads(text))


@dataclass(frozen=True)
class RunConfig:
    """Batch configuration for experiments and the attack model."""

    seed: int = 20230
    counts: dict[int, int] = field(default_factory=lambda: {5: 34, 6: 33, 7: 33})
    alpha_start: float = 1.1
    alpha_stop: float = 5.0
    alpha_step: float = 0.1
    panel_size: int = 20
    metric: str = "manhattan"
    h: float = 5.0
    l: float = 1.0
    credibility: CredibilityScale3 = DEFAULT_SCALE3
    beta: float = 0.5
    saturation: float = 9.0
    max_bribes: int | None = None
    recompute_support: bool = False
    epsilon_distribution: str = "log-uniform"
    workers: int = 1

    @property
    def alphas(self) -> tuple[float, ...]:
        count = int(round((self.alpha_stop - self.alpha_start) / self.alpha_step)) + 1
        return tuple(round(self.alpha_start + i * self.alpha_step, 10) for i in range(count))

    def robust_config(self) -> RobustConfig:
        return RobustConfig(
            scale2=CredibilityScale2(self.h, self.l),
            scale3=self.credibility,
            beta=self.beta,
            metric=self.metric,  # type: ignore[arg-type]
        )


def _parse_credibility(doc: dict) -> CredibilityScale3:
    if "credibility_matrix" in doc:
        return credibility_from_matrix(resymmetrize(np.asarray(doc["credibility_matrix"])))
    if "credibility_procedural_alpha" in doc:
        # resolved later from panel inconsistencies; only explicit forms here
        raise PanelParseError(
            "procedural credibility must be resolved against a panel; "
            "use the library API for that"
        )
    if "credibility_ratios" in doc:
        h, m, l = (float(x) for x in doc["credibility_ratios"])
        return CredibilityScale3.from_ratios(h, m, l)
    return DEFAULT_SCALE3


def load_config(path: str | Path | None) -> RunConfig:
    cfg = RunConfig()
    if path is None:
        return cfg
    try:
        doc = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise PanelParseError(f"{path}: invalid JSON at line {exc.lineno}") from None
    known = {
        "seed", "panel_size", "metric", "h", "l", "beta", "saturation",
        "max_bribes", "recompute_support", "epsilon_distribution", "workers",
        "alpha_start", "alpha_stop", "alpha_step",
    }
    updates = {k: doc[k] for k in known if k in doc}
    if "counts" in doc:
        updates["counts"] = {int(k): int(v) for k, v in doc["counts"].items()}
    updates["credibility"] = _parse_credibility(doc)
    unknown = set(doc) - known - {"counts", "credibility_matrix", "credibility_ratios"}
    if unknown:
        raise PanelParseError(f"unknown config keys: {sorted(unknown)}")
    return replace(cfg, **updates)
