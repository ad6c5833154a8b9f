from typing import Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field

from app.constants.games import (
    FAMILY_DISPLAY_NAMES,
    GAME_KEYS,
    MAX_RANK,
    MIN_RANK,
    REFERENCE_SIZES,
    GameFamily,
)


class GameSpec(BaseModel):
    """A benchmark game family at a given rank."""

    model_config = ConfigDict(frozen=True)

    family: GameFamily
    """Game family."""

    rank: int = Field(..., ge=MIN_RANK, le=MAX_RANK)
    """Number of card ranks or die faces."""

    @property
    def key(self) -> str:
        return f"{self.family.value}{self.rank}"

    @property
    def display_name(self) -> str:
        return f"{FAMILY_DISPLAY_NAMES[self.family]} ({self.rank})"

    @property
    def reference_sizes(self) -> Optional[Tuple[int, int, int]]:
        """Reference (infosets, sequences, leaves) when this is a listed instance."""
        return REFERENCE_SIZES.get((self.family, self.rank))

    @classmethod
    def from_key(cls, key: str) -> "GameSpec":
        """Parse keys such as ``leduc3``; unlisted ranks like ``kuhn4`` are accepted too."""
        if key in GAME_KEYS:
            family, rank = GAME_KEYS[key]
            return cls(family=family, rank=rank)
        for family in GameFamily:
            suffix = key[len(family.value) :]
            if key.startswith(family.value) and suffix.isdigit():
                return cls(family=family, rank=int(suffix))
        raise ValueError(f"unknown game key {key!r}")


class GameSizes(BaseModel):
    """Size triple reported by ``inspect``."""

    name: str = ""
    infosets: int
    sequences: int
    leaves: int

    def as_tuple(self) -> Tuple[int, int, int]:
        return self.infosets, self.sequences, self.leaves
