"""Game construction and serialization exceptions."""


class GameError(Exception):
    """Base exception for game-related errors."""

    pass


class InvalidGameError(GameError):
    """Raised when a game tree violates a structural invariant."""

    pass


class PerfectRecallViolationError(InvalidGameError):
    """Raised when two nodes of one infoset disagree on the owner's parent sequence."""

    def __init__(self, infoset: str, first_node: int, second_node: int):
        self.message = (
            f"Infoset {infoset} breaks perfect recall: nodes {first_node} and "
            f"{second_node} have different parent sequences for the owning player"
        )
        super().__init__(self.message)
        self.infoset = infoset
        self.first_node = first_node
        self.second_node = second_node


class GameFormatError(GameError):
    """Raised when a serialized game cannot be parsed."""

    def __init__(self, line_number: int, message: str):
        self.message = f"line {line_number}: {message}"
        super().__init__(self.message)
        self.line_number = line_number


class UnsupportedRankError(GameError):
    """Raised when a game family is asked for a rank outside its supported envelope."""

    def __init__(self, family: str, rank: int, low: int, high: int):
        self.message = f"{family} supports ranks {low}..{high}, got {rank}"
        super().__init__(self.message)
        self.family = family
        self.rank = rank
