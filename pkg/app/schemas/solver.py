from enum import Enum
from typing import Annotated, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, model_validator

from app.core.regret_dynamics import (
    DEFAULT_DRM_ALPHA,
    DEFAULT_DRM_BETA,
    RegretRule,
    RegretVariant,
)


class Algorithm(str, Enum):
    CFR_PLUS = "cfr+"
    RTCFR = "rtcfr"


class FixedPerturbation(BaseModel):
    """A constant ε for the whole run."""

    model_config = ConfigDict(frozen=True)

    mode: Literal["fixed"] = "fixed"
    epsilon: float = Field(0.0, ge=0.0, lt=1.0)


class AdaptivePerturbation(BaseModel):
    """ε and δ start at epsilon0/delta and shrink by gamma whenever an RT problem starts δ-close to an ISNE."""

    model_config = ConfigDict(frozen=True)

    mode: Literal["adaptive"] = "adaptive"
    epsilon0: float = Field(..., gt=0.0, lt=1.0)
    delta: float = Field(..., gt=0.0)
    gamma: float = Field(..., gt=0.0, lt=1.0)


Perturbation = Annotated[
    Union[FixedPerturbation, AdaptivePerturbation], Field(discriminator="mode")
]


class SolverConfig(BaseModel):
    model_config = ConfigDict(frozen=True)

    algorithm: Algorithm = Algorithm.RTCFR
    """CFR+ (alternating, quadratic averaging) or reward-transformation CFR."""

    variant: RegretVariant = RegretVariant.RM_PLUS
    """Local regret minimizer."""

    drm_alpha: float = DEFAULT_DRM_ALPHA
    drm_beta: float = DEFAULT_DRM_BETA

    mu: float = Field(0.0, ge=0.0)
    """Reward-transformation weight."""

    iterations_per_problem: int = Field(1, ge=1)
    """T: iterations per RT problem before the reference strategy is reset."""

    problems: Optional[int] = Field(None, ge=1)
    """N: number of RT problems; unbounded when only a traversal budget is given."""

    perturbation: Perturbation = FixedPerturbation()

    alternating: Optional[bool] = None
    """Alternating updates unless set to false; player 2 sees player 1's fresh strategy."""

    eval_every: int = Field(10, ge=1)
    """Traversal interval between logged trajectory points."""

    traversal_budget: Optional[int] = Field(None, ge=1)

    log_initial: bool = False
    """Also log the starting profile at traversal 0."""

    record_wall_time: bool = False

    until_exploitability: Optional[float] = Field(None, gt=0.0)
    until_max_regret: Optional[float] = Field(None, gt=0.0)

    @model_validator(mode="after")
    def check_combination(self) -> "SolverConfig":
        if self.algorithm is Algorithm.CFR_PLUS:
            if isinstance(self.perturbation, AdaptivePerturbation):
                raise ValueError("adaptive perturbation requires algorithm=rtcfr")
            if self.mu != 0.0:
                raise ValueError("cfr+ does not use a reward transformation (mu must be 0)")
            if self.variant is not RegretVariant.RM_PLUS:
                raise ValueError("cfr+ uses the rm+ variant")
        if self.problems is None and self.traversal_budget is None:
            raise ValueError("either problems (N) or traversal_budget must be set")
        return self

    @property
    def uses_alternation(self) -> bool:
        return True if self.alternating is None else self.alternating

    @property
    def traversals_per_iteration(self) -> int:
        """RTCFR shares one walk between both players; alternating CFR+ walks once per player."""
        if self.algorithm is Algorithm.CFR_PLUS and self.uses_alternation:
            return 2
        return 1

    @property
    def is_adaptive(self) -> bool:
        return isinstance(self.perturbation, AdaptivePerturbation)

    @property
    def initial_epsilon(self) -> float:
        if isinstance(self.perturbation, AdaptivePerturbation):
            return self.perturbation.epsilon0
        return self.perturbation.epsilon

    @property
    def rule(self) -> RegretRule:
        return RegretRule(variant=self.variant, alpha=self.drm_alpha, beta=self.drm_beta)

    @property
    def averages(self) -> bool:
        """CFR+ reports the quadratic average; RTCFR reports the last iterate."""
        return self.algorithm is Algorithm.CFR_PLUS
