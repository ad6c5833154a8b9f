from typing import List

from pydantic import BaseModel, Field

from app.constants.trajectory import TRAJECTORY_COLUMNS


class TrajectoryRow(BaseModel):
    traversals: int = Field(..., ge=0)
    exploitability: float
    max_isregret: float
    epsilon: float
    delta: float
    """NaN when the perturbation is fixed."""
    wall_ms: int = 0

    def values(self) -> tuple:
        return tuple(getattr(self, column) for column in TRAJECTORY_COLUMNS)


class Trajectory(BaseModel):
    rows: List[TrajectoryRow] = []

    def append(self, row: TrajectoryRow) -> None:
        if self.rows and row.traversals <= self.rows[-1].traversals:
            raise ValueError("trajectory traversals must be strictly increasing")
        self.rows.append(row)

    @property
    def last(self) -> TrajectoryRow:
        return self.rows[-1]

    def __len__(self) -> int:
        return len(self.rows)


class ComparisonRow(TrajectoryRow):
    label: str
