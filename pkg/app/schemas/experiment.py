from enum import Enum
from typing import Optional

from pydantic import AliasChoices, BaseModel, ConfigDict, Field, model_validator

from app.config import get_settings
from app.core.regret_dynamics import DEFAULT_DRM_ALPHA, DEFAULT_DRM_BETA, RegretVariant
from app.schemas.solver import (
    AdaptivePerturbation,
    Algorithm,
    FixedPerturbation,
    SolverConfig,
)


class PerturbationMode(str, Enum):
    FIXED = "fixed"
    ADAPTIVE = "adaptive"


class ExperimentConfig(BaseModel):
    """One solver run as written in a flat ``key=value`` config file."""

    model_config = ConfigDict(extra="forbid", populate_by_name=True, frozen=True)

    game: str
    """Benchmark key such as ``leduc3`` or a path to a serialized game."""

    label: Optional[str] = None
    """Curve label in sweeps; derived from the algorithm when omitted."""

    algorithm: Algorithm = Algorithm.RTCFR
    variant: RegretVariant = RegretVariant.RM_PLUS
    drm_alpha: float = DEFAULT_DRM_ALPHA
    drm_beta: float = DEFAULT_DRM_BETA
    mu: float = Field(0.0, ge=0.0)

    iterations_per_problem: int = Field(
        1, ge=1, validation_alias=AliasChoices("T", "iterations_per_problem")
    )
    problems: Optional[int] = Field(
        None, ge=1, validation_alias=AliasChoices("N", "problems")
    )

    perturbation: PerturbationMode = PerturbationMode.FIXED
    epsilon: float = Field(0.0, ge=0.0, lt=1.0)
    """ε for fixed runs, ε⁰ for adaptive runs."""
    delta: Optional[float] = Field(None, gt=0.0)
    gamma: Optional[float] = Field(None, gt=0.0, lt=1.0)

    alternating: Optional[bool] = None
    eval_every: int = Field(
        default_factory=lambda: get_settings().default_eval_every, ge=1
    )
    traversal_budget: int = Field(100_000, ge=1)
    log_initial: bool = False
    record_wall_time: bool = False
    until_exploitability: Optional[float] = Field(None, gt=0.0)
    until_max_regret: Optional[float] = Field(None, gt=0.0)

    seed: int = 0
    """Recorded in run metadata; no solver here samples."""

    output_dir: str = Field(default_factory=lambda: get_settings().output_dir)
    verify_sizes: bool = False

    @model_validator(mode="after")
    def check_combination(self) -> "ExperimentConfig":
        if self.traversal_budget < self.eval_every:
            raise ValueError("traversal_budget must be at least eval_every")
        if self.perturbation is PerturbationMode.ADAPTIVE:
            missing = [name for name in ("delta", "gamma") if getattr(self, name) is None]
            if missing:
                raise ValueError(f"adaptive perturbation needs {', '.join(missing)}")
            if self.epsilon <= 0.0:
                raise ValueError("adaptive perturbation needs epsilon > 0")
            if self.algorithm is Algorithm.CFR_PLUS:
                raise ValueError("adaptive perturbation requires algorithm=rtcfr")
        if self.algorithm is Algorithm.CFR_PLUS:
            if self.mu != 0.0:
                raise ValueError("cfr+ does not use a reward transformation (mu must be 0)")
            if self.variant is not RegretVariant.RM_PLUS:
                raise ValueError("cfr+ uses the rm+ variant")
        return self

    def solver_config(self) -> SolverConfig:
        if self.perturbation is PerturbationMode.ADAPTIVE:
            perturbation = AdaptivePerturbation(
                epsilon0=self.epsilon, delta=self.delta, gamma=self.gamma
            )
        else:
            perturbation = FixedPerturbation(epsilon=self.epsilon)
        return SolverConfig(
            algorithm=self.algorithm,
            variant=self.variant,
            drm_alpha=self.drm_alpha,
            drm_beta=self.drm_beta,
            mu=self.mu,
            iterations_per_problem=self.iterations_per_problem,
            problems=self.problems,
            perturbation=perturbation,
            alternating=self.alternating,
            eval_every=self.eval_every,
            traversal_budget=self.traversal_budget,
            log_initial=self.log_initial,
            record_wall_time=self.record_wall_time,
            until_exploitability=self.until_exploitability,
            until_max_regret=self.until_max_regret,
        )

    @property
    def run_label(self) -> str:
        if self.label:
            return self.label
        if self.algorithm is Algorithm.CFR_PLUS:
            return f"CFR+({self.epsilon:g})"
        name = {
            RegretVariant.RM: "RTCFR",
            RegretVariant.RM_PLUS: "RTCFR+",
            RegretVariant.DRM: "RTCFR-DRM",
        }[self.variant]
        if self.perturbation is PerturbationMode.ADAPTIVE:
            return f"{name}(adp)"
        return f"{name}({self.epsilon:g})"
