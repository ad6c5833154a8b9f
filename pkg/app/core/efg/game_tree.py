"""Immutable two-player zero-sum extensive-form game trees.

Nodes are stored in creation order; generators create them depth first so node
ids follow a deterministic pre-order. Action labels are small integers into a
per-game string table, and information sets are integers into a table of
string keys (the keys are what the text format writes).
"""

import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from app.constants.games import CHANCE_PLAYER, PLAYERS
from app.exceptions.game_exceptions import InvalidGameError

PROBABILITY_TOLERANCE = 1e-12


@dataclass(frozen=True)
class ChanceNode:
    outcomes: Tuple[Tuple[int, float], ...]
    """(action label id, probability) per outcome, in child order."""

    @property
    def actions(self) -> Tuple[int, ...]:
        return tuple(label for label, _ in self.outcomes)

    @property
    def player(self) -> int:
        return CHANCE_PLAYER


@dataclass(frozen=True)
class DecisionNode:
    player: int
    infoset: int
    actions: Tuple[int, ...]


@dataclass(frozen=True)
class TerminalNode:
    utility_p1: float

    @property
    def actions(self) -> Tuple[int, ...]:
        return ()


GameNode = Union[ChanceNode, DecisionNode, TerminalNode]


@dataclass(frozen=True)
class GameTree:
    nodes: Tuple[GameNode, ...]
    children: Tuple[Tuple[int, ...], ...]
    parents: np.ndarray
    action_labels: Tuple[str, ...]
    infoset_keys: Tuple[str, ...]
    name: str = ""
    root: int = 0
    players: Tuple[int, int] = PLAYERS

    @property
    def n_nodes(self) -> int:
        return len(self.nodes)

    @property
    def n_infosets(self) -> int:
        return len(self.infoset_keys)

    @property
    def n_leaves(self) -> int:
        return sum(1 for node in self.nodes if isinstance(node, TerminalNode))

    def label(self, action: int) -> str:
        return self.action_labels[action]

    def infoset_key(self, infoset: int) -> str:
        return self.infoset_keys[infoset]

    def utility(self, node: int, player: int) -> float:
        """Terminal utility for either player (player 2 is the negation)."""
        terminal = self.nodes[node]
        if not isinstance(terminal, TerminalNode):
            raise InvalidGameError(f"node {node} is not terminal")
        return terminal.utility_p1 if player == 1 else -terminal.utility_p1


@dataclass
class GameTreeBuilder:
    """Incremental construction of a GameTree.

    Nodes are added first and wired with edges afterwards; ``build`` checks the
    structural invariants and freezes the result.
    """

    name: str = ""
    _nodes: List[GameNode] = field(default_factory=list)
    _edges: Dict[Tuple[int, int], int] = field(default_factory=dict)
    _labels: List[str] = field(default_factory=list)
    _label_ids: Dict[str, int] = field(default_factory=dict)
    _infoset_keys: List[str] = field(default_factory=list)
    _infoset_ids: Dict[str, int] = field(default_factory=dict)

    def action(self, label: str) -> int:
        """Intern an action label and return its id."""
        label_id = self._label_ids.get(label)
        if label_id is None:
            if not label or any(ch.isspace() for ch in label):
                raise InvalidGameError(f"invalid action label {label!r}")
            label_id = len(self._labels)
            self._labels.append(label)
            self._label_ids[label] = label_id
        return label_id

    def infoset(self, key: str) -> int:
        infoset_id = self._infoset_ids.get(key)
        if infoset_id is None:
            if not key or any(ch.isspace() for ch in key):
                raise InvalidGameError(f"invalid infoset key {key!r}")
            infoset_id = len(self._infoset_keys)
            self._infoset_keys.append(key)
            self._infoset_ids[key] = infoset_id
        return infoset_id

    def chance(self, outcomes: Sequence[Tuple[str, float]]) -> int:
        node = ChanceNode(
            outcomes=tuple((self.action(label), float(p)) for label, p in outcomes)
        )
        return self._append(node)

    def decision(self, player: int, infoset: str, actions: Sequence[str]) -> int:
        node = DecisionNode(
            player=player,
            infoset=self.infoset(infoset),
            actions=tuple(self.action(label) for label in actions),
        )
        return self._append(node)

    def terminal(self, utility_p1: float) -> int:
        return self._append(TerminalNode(utility_p1=float(utility_p1)))

    def edge(self, parent: int, action: str, child: int) -> None:
        key = (parent, self.action(action))
        if key in self._edges:
            raise InvalidGameError(f"duplicate edge {parent} --{action}-->")
        self._edges[key] = child

    def _append(self, node: GameNode) -> int:
        self._nodes.append(node)
        return len(self._nodes) - 1

    def build(self, root: int = 0) -> GameTree:
        n = len(self._nodes)
        if n == 0:
            raise InvalidGameError("empty game")

        parents = np.full(n, -1, dtype=np.int64)
        children: List[Tuple[int, ...]] = []
        infoset_actions: Dict[int, Tuple[int, Tuple[int, ...]]] = {}

        for node_id, node in enumerate(self._nodes):
            _check_node(node_id, node)
            if isinstance(node, DecisionNode):
                seen = infoset_actions.setdefault(
                    node.infoset, (node.player, node.actions)
                )
                if seen != (node.player, node.actions):
                    raise InvalidGameError(
                        f"infoset {self._infoset_keys[node.infoset]} has members "
                        "with different players or action sets"
                    )
            row = []
            for action in node.actions:
                child = self._edges.get((node_id, action))
                if child is None:
                    raise InvalidGameError(
                        f"node {node_id} has no child for action {self._labels[action]}"
                    )
                if not 0 <= child < n or child == root:
                    raise InvalidGameError(f"edge {node_id} -> {child} is invalid")
                if parents[child] != -1:
                    raise InvalidGameError(f"node {child} has more than one parent")
                parents[child] = node_id
                row.append(child)
            children.append(tuple(row))

        if len(self._edges) != sum(len(row) for row in children):
            raise InvalidGameError("edge references an action its parent does not have")

        _check_reachable(root, children, n)

        return GameTree(
            nodes=tuple(self._nodes),
            children=tuple(children),
            parents=parents,
            action_labels=tuple(self._labels),
            infoset_keys=tuple(self._infoset_keys),
            name=self.name,
            root=root,
        )


def _check_node(node_id: int, node: GameNode) -> None:
    if isinstance(node, ChanceNode):
        if not node.outcomes:
            raise InvalidGameError(f"chance node {node_id} has no outcomes")
        probs = [p for _, p in node.outcomes]
        if any(p < 0.0 or not math.isfinite(p) for p in probs):
            raise InvalidGameError(f"chance node {node_id} has a negative probability")
        if abs(math.fsum(probs) - 1.0) > PROBABILITY_TOLERANCE:
            raise InvalidGameError(
                f"chance node {node_id} probabilities sum to {math.fsum(probs)!r}"
            )
    elif isinstance(node, DecisionNode):
        if node.player not in PLAYERS:
            raise InvalidGameError(f"node {node_id} has invalid player {node.player}")
        if not node.actions:
            raise InvalidGameError(f"decision node {node_id} has no actions")
    elif not math.isfinite(node.utility_p1):
        raise InvalidGameError(f"terminal node {node_id} has non-finite utility")


def _check_reachable(root: int, children: List[Tuple[int, ...]], n: int) -> None:
    seen = 0
    stack = [root]
    while stack:
        node = stack.pop()
        seen += 1
        stack.extend(children[node])
    if seen != n:
        raise InvalidGameError(f"{n - seen} nodes are not reachable from the root")


def walk_preorder(tree: GameTree, start: Optional[int] = None):
    """Yield node ids depth first, children in action order."""
    stack = [tree.root if start is None else start]
    while stack:
        node = stack.pop()
        yield node
        stack.extend(reversed(tree.children[node]))
