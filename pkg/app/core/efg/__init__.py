from app.core.efg.game_tree import (
    ChanceNode,
    DecisionNode,
    GameNode,
    GameTree,
    GameTreeBuilder,
    TerminalNode,
    walk_preorder,
)
from app.core.efg.sequence_form import (
    EMPTY_SEQUENCE,
    BehaviorStrategy,
    InfoSet,
    PlayerSequences,
    SequenceIndex,
    SequenceStrategy,
    SolvableGame,
    SparseUtilityMatrix,
    StrategyProfile,
    behavior_to_sequence,
    build_sequence_index,
    expected_value,
    pure_behavior,
    random_behavior,
    sequence_to_behavior,
    uniform_behavior,
    uniform_profile,
    utility_matrix,
)
from app.core.efg.serialization import dumps, loads, read_game, write_game

__all__ = [
    "EMPTY_SEQUENCE",
    "BehaviorStrategy",
    "ChanceNode",
    "DecisionNode",
    "GameNode",
    "GameTree",
    "GameTreeBuilder",
    "InfoSet",
    "PlayerSequences",
    "SequenceIndex",
    "SequenceStrategy",
    "SolvableGame",
    "SparseUtilityMatrix",
    "StrategyProfile",
    "TerminalNode",
    "behavior_to_sequence",
    "build_sequence_index",
    "dumps",
    "expected_value",
    "loads",
    "pure_behavior",
    "random_behavior",
    "read_game",
    "sequence_to_behavior",
    "uniform_behavior",
    "uniform_profile",
    "utility_matrix",
    "walk_preorder",
    "write_game",
]
