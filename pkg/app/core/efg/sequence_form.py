"""Sequence-form view of a game: sequence indexes, strategy conversions and the payoff matrix.

Sequence ids are assigned per player in depth-first order of first visit: id 0
is the empty sequence and every infoset owns a contiguous block of ids, one per
action, allocated when the infoset is first reached. A parent sequence is always
allocated before the blocks that hang below it, so sequence ids grow with depth
along every path.
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, List, Optional, Tuple

import numpy as np
from scipy import sparse

from app.core.efg.game_tree import ChanceNode, DecisionNode, GameTree, TerminalNode
from app.exceptions.game_exceptions import PerfectRecallViolationError

EMPTY_SEQUENCE = 0


@dataclass(frozen=True, eq=False)
class InfoSet:
    id: int
    key: str
    player: int
    actions: Tuple[int, ...]
    parent_sequence: int
    member_nodes: Tuple[int, ...]
    local: int
    """Position of the infoset among its owner's infosets."""
    start: int
    """Sequence id of the infoset's first action."""

    @property
    def size(self) -> int:
        return len(self.actions)

    @property
    def sequences(self) -> range:
        return range(self.start, self.start + self.size)


@dataclass(frozen=True, eq=False)
class InfosetLevel:
    """All infosets of one player whose sequences sit at the same depth."""

    depth: int
    infosets: np.ndarray
    sequences: np.ndarray
    offsets: np.ndarray
    parents: np.ndarray
    sequence_parents: np.ndarray


@dataclass(frozen=True, eq=False)
class PlayerSequences:
    player: int
    infosets: Tuple[InfoSet, ...]
    infoset_start: np.ndarray
    infoset_size: np.ndarray
    infoset_parent: np.ndarray
    sequence_infoset: np.ndarray
    sequence_parent: np.ndarray
    depth: np.ndarray
    node_infoset: np.ndarray
    """Local infoset of every decision node owned by this player."""
    node_opponent_sequence: np.ndarray
    """Opponent's last sequence on the path to each of those nodes."""
    node_chance_reach: np.ndarray

    @property
    def n_sequences(self) -> int:
        return int(self.depth.shape[0])

    @property
    def n_infosets(self) -> int:
        return len(self.infosets)

    @cached_property
    def levels(self) -> Tuple[InfosetLevel, ...]:
        """Infoset levels ordered deepest first (bottom-up processing order)."""
        if self.n_infosets == 0:
            return ()
        infoset_depth = self.depth[self.infoset_start]
        levels = []
        for d in sorted(set(infoset_depth.tolist()), reverse=True):
            members = np.flatnonzero(infoset_depth == d)
            starts = self.infoset_start[members]
            sizes = self.infoset_size[members]
            offsets = np.concatenate(([0], np.cumsum(sizes)[:-1])).astype(np.int64)
            sequences = np.repeat(starts - offsets, sizes) + np.arange(sizes.sum())
            parents = self.infoset_parent[members]
            levels.append(
                InfosetLevel(
                    depth=int(d),
                    infosets=members,
                    sequences=sequences,
                    offsets=offsets,
                    parents=parents,
                    sequence_parents=np.repeat(parents, sizes),
                )
            )
        return tuple(levels)

    def infoset_sums(self, values: np.ndarray) -> np.ndarray:
        """Sum a per-sequence vector over each infoset's block."""
        if self.n_infosets == 0:
            return np.zeros(0, dtype=values.dtype)
        return np.add.reduceat(values[1:], self.infoset_start - 1)

    def infoset_maxima(self, values: np.ndarray) -> np.ndarray:
        if self.n_infosets == 0:
            return np.zeros(0, dtype=values.dtype)
        return np.maximum.reduceat(values[1:], self.infoset_start - 1)

    def broadcast(self, per_infoset: np.ndarray, empty: float = 0.0) -> np.ndarray:
        """Expand a per-infoset vector to the sequence space."""
        out = np.empty(self.n_sequences, dtype=np.result_type(per_infoset, float))
        out[0] = empty
        out[1:] = np.repeat(per_infoset, self.infoset_size)
        return out

    def block(self, values: np.ndarray, infoset: InfoSet) -> np.ndarray:
        return values[infoset.start : infoset.start + infoset.size]


@dataclass(frozen=True, eq=False)
class SequenceIndex:
    players: Tuple[PlayerSequences, PlayerSequences]
    infosets: Tuple[InfoSet, ...]
    """Indexed by the tree's global infoset id."""
    node_sequences: np.ndarray
    """Shape (2, n_nodes): each player's last sequence on the path to a node."""
    chance_reach: np.ndarray
    leaves: np.ndarray

    def player(self, player: int) -> PlayerSequences:
        return self.players[player - 1]

    @property
    def n_sequences(self) -> int:
        return sum(p.n_sequences for p in self.players)

    @property
    def n_infosets(self) -> int:
        return len(self.infosets)

    @property
    def n_leaves(self) -> int:
        return int(self.leaves.shape[0])

    def sizes(self) -> Tuple[int, int, int]:
        """(infosets, sequences, leaves)."""
        return self.n_infosets, self.n_sequences, self.n_leaves


@dataclass(frozen=True, eq=False)
class BehaviorStrategy:
    """Behavioral strategy stored over the sequence space: values[Ia] = x(I)[a], values[EMPTY] = 1."""

    player: int
    values: np.ndarray

    def at(self, infoset: InfoSet) -> np.ndarray:
        return self.values[infoset.start : infoset.start + infoset.size]


@dataclass(frozen=True, eq=False)
class SequenceStrategy:
    """Realization plan over one player's sequences."""

    player: int
    values: np.ndarray


@dataclass(frozen=True, eq=False)
class SparseUtilityMatrix:
    matrix: sparse.csr_matrix
    """Player-1 payoffs, rows Σ₁, columns Σ₂."""
    leaf_rows: np.ndarray
    leaf_cols: np.ndarray
    leaf_values: np.ndarray
    """q₀(z)·u(z) per leaf."""

    @property
    def n_leaves(self) -> int:
        return int(self.leaf_values.shape[0])

    @cached_property
    def transposed(self) -> sparse.csr_matrix:
        return self.matrix.T.tocsr()

    def values_for(self, player: int, q_opponent: np.ndarray) -> np.ndarray:
        """⟨U_player, q_opp⟩: immediate leaf payoffs per sequence of `player`."""
        if player == 1:
            return np.asarray(self.matrix @ q_opponent, dtype=float)
        return -np.asarray(self.transposed @ q_opponent, dtype=float)


@dataclass(frozen=True, eq=False)
class StrategyProfile:
    player1: BehaviorStrategy
    player2: BehaviorStrategy

    def behavior(self, player: int) -> BehaviorStrategy:
        return self.player1 if player == 1 else self.player2


@dataclass(frozen=True, eq=False)
class SolvableGame:
    """A game tree together with its sequence index and payoff matrix."""

    tree: GameTree
    index: SequenceIndex
    utility: SparseUtilityMatrix

    @classmethod
    def from_tree(cls, tree: GameTree) -> "SolvableGame":
        index = build_sequence_index(tree)
        return cls(tree=tree, index=index, utility=utility_matrix(tree, index))

    @property
    def name(self) -> str:
        return self.tree.name

    def sizes(self) -> Tuple[int, int, int]:
        return self.index.sizes()

    def sequence(self, strategy: BehaviorStrategy) -> SequenceStrategy:
        return behavior_to_sequence(strategy, self.index)


def build_sequence_index(tree: GameTree) -> SequenceIndex:
    n = tree.n_nodes
    node_sequences = np.zeros((2, n), dtype=np.int64)
    chance_reach = np.zeros(n, dtype=float)

    next_sequence = [1, 1]
    depths: List[List[int]] = [[0], [0]]
    start: Dict[int, int] = {}
    parent_sequence: Dict[int, int] = {}
    members: Dict[int, List[int]] = {}
    discovery: List[List[int]] = [[], []]
    leaves: List[int] = []
    decision_nodes: List[List[int]] = [[], []]

    stack = [(tree.root, 0, 0, 1.0)]
    while stack:
        h, s1, s2, reach = stack.pop()
        node_sequences[0, h] = s1
        node_sequences[1, h] = s2
        chance_reach[h] = reach
        node = tree.nodes[h]
        kids = tree.children[h]

        if isinstance(node, DecisionNode):
            p = node.player - 1
            own = s1 if p == 0 else s2
            infoset = node.infoset
            if infoset not in start:
                start[infoset] = next_sequence[p]
                next_sequence[p] += len(node.actions)
                parent_sequence[infoset] = own
                members[infoset] = []
                discovery[p].append(infoset)
                depths[p].extend([depths[p][own] + 1] * len(node.actions))
            elif parent_sequence[infoset] != own:
                raise PerfectRecallViolationError(
                    tree.infoset_key(infoset), members[infoset][0], h
                )
            members[infoset].append(h)
            decision_nodes[p].append(h)
            base = start[infoset]
            for k in range(len(kids) - 1, -1, -1):
                if p == 0:
                    stack.append((kids[k], base + k, s2, reach))
                else:
                    stack.append((kids[k], s1, base + k, reach))
        elif isinstance(node, ChanceNode):
            for k in range(len(kids) - 1, -1, -1):
                stack.append((kids[k], s1, s2, reach * node.outcomes[k][1]))
        else:
            leaves.append(h)

    infosets: List[Optional[InfoSet]] = [None] * tree.n_infosets
    players = []
    for p in range(2):
        local_infosets = []
        for local, infoset_id in enumerate(discovery[p]):
            first = tree.nodes[members[infoset_id][0]]
            info = InfoSet(
                id=infoset_id,
                key=tree.infoset_key(infoset_id),
                player=p + 1,
                actions=first.actions,
                parent_sequence=parent_sequence[infoset_id],
                member_nodes=tuple(members[infoset_id]),
                local=local,
                start=start[infoset_id],
            )
            infosets[infoset_id] = info
            local_infosets.append(info)
        players.append(
            _player_sequences(
                p + 1,
                tuple(local_infosets),
                np.asarray(depths[p], dtype=np.int64),
                np.asarray(decision_nodes[p], dtype=np.int64),
                tree,
                node_sequences,
                chance_reach,
            )
        )

    return SequenceIndex(
        players=(players[0], players[1]),
        infosets=tuple(infosets),
        node_sequences=node_sequences,
        chance_reach=chance_reach,
        leaves=np.asarray(leaves, dtype=np.int64),
    )


def _player_sequences(
    player: int,
    infosets: Tuple[InfoSet, ...],
    depth: np.ndarray,
    decision_nodes: np.ndarray,
    tree: GameTree,
    node_sequences: np.ndarray,
    chance_reach: np.ndarray,
) -> PlayerSequences:
    n_sequences = depth.shape[0]
    infoset_start = np.asarray([i.start for i in infosets], dtype=np.int64)
    infoset_size = np.asarray([i.size for i in infosets], dtype=np.int64)
    infoset_parent = np.asarray([i.parent_sequence for i in infosets], dtype=np.int64)

    sequence_infoset = np.full(n_sequences, -1, dtype=np.int64)
    sequence_parent = np.full(n_sequences, -1, dtype=np.int64)
    sequence_infoset[1:] = np.repeat(np.arange(len(infosets)), infoset_size)
    sequence_parent[1:] = np.repeat(infoset_parent, infoset_size)

    local_of = {info.id: info.local for info in infosets}
    node_infoset = np.asarray(
        [local_of[tree.nodes[h].infoset] for h in decision_nodes.tolist()],
        dtype=np.int64,
    )
    opponent = 1 if player == 1 else 0
    return PlayerSequences(
        player=player,
        infosets=infosets,
        infoset_start=infoset_start,
        infoset_size=infoset_size,
        infoset_parent=infoset_parent,
        sequence_infoset=sequence_infoset,
        sequence_parent=sequence_parent,
        depth=depth,
        node_infoset=node_infoset,
        node_opponent_sequence=node_sequences[opponent, decision_nodes],
        node_chance_reach=chance_reach[decision_nodes],
    )


def behavior_to_sequence(x: BehaviorStrategy, idx: SequenceIndex) -> SequenceStrategy:
    seqs = idx.player(x.player)
    q = np.empty(seqs.n_sequences, dtype=float)
    q[EMPTY_SEQUENCE] = 1.0
    # Parents are shallower, so shallow-to-deep levels see finished parent entries
    for level in reversed(seqs.levels):
        q[level.sequences] = x.values[level.sequences] * q[level.sequence_parents]
    return SequenceStrategy(player=x.player, values=q)


def sequence_to_behavior(q: SequenceStrategy, idx: SequenceIndex) -> BehaviorStrategy:
    """x[Ia] = q[Ia] / q[pI]; infosets whose parent sequence has zero mass get the uniform strategy."""
    seqs = idx.player(q.player)
    x = np.empty(seqs.n_sequences, dtype=float)
    x[EMPTY_SEQUENCE] = 1.0
    parent_mass = q.values[seqs.sequence_parent[1:]]
    uniform = 1.0 / np.repeat(seqs.infoset_size, seqs.infoset_size)
    positive = parent_mass > 0.0
    x[1:] = np.where(
        positive, q.values[1:] / np.where(positive, parent_mass, 1.0), uniform
    )
    return BehaviorStrategy(player=q.player, values=x)


def utility_matrix(tree: GameTree, idx: SequenceIndex) -> SparseUtilityMatrix:
    leaves = idx.leaves
    rows = idx.node_sequences[0, leaves]
    cols = idx.node_sequences[1, leaves]
    payoffs = np.asarray(
        [tree.nodes[z].utility_p1 for z in leaves.tolist()], dtype=float
    )
    values = idx.chance_reach[leaves] * payoffs
    shape = (idx.player(1).n_sequences, idx.player(2).n_sequences)
    matrix = sparse.coo_matrix((values, (rows, cols)), shape=shape).tocsr()
    return SparseUtilityMatrix(
        matrix=matrix, leaf_rows=rows, leaf_cols=cols, leaf_values=values
    )


def expected_value(
    U: SparseUtilityMatrix, q1: SequenceStrategy, q2: SequenceStrategy
) -> float:
    """Player 1's expected utility q1ᵀ U q2."""
    return float(q1.values @ (U.matrix @ q2.values))


def uniform_behavior(idx: SequenceIndex, player: int) -> BehaviorStrategy:
    seqs = idx.player(player)
    return BehaviorStrategy(
        player=player,
        values=seqs.broadcast(1.0 / seqs.infoset_size.astype(float), empty=1.0),
    )


def random_behavior(
    idx: SequenceIndex, player: int, rng: np.random.Generator
) -> BehaviorStrategy:
    """A Dirichlet(1) draw at every infoset."""
    seqs = idx.player(player)
    weights = rng.exponential(size=seqs.n_sequences)
    weights[EMPTY_SEQUENCE] = 1.0
    totals = seqs.broadcast(seqs.infoset_sums(weights), empty=1.0)
    return BehaviorStrategy(player=player, values=weights / totals)


def pure_behavior(
    idx: SequenceIndex, player: int, choices: np.ndarray
) -> BehaviorStrategy:
    """Behavior strategy playing action `choices[I]` (an offset into A(I)) at every local infoset I."""
    seqs = idx.player(player)
    values = np.zeros(seqs.n_sequences, dtype=float)
    values[EMPTY_SEQUENCE] = 1.0
    values[seqs.infoset_start + np.asarray(choices, dtype=np.int64)] = 1.0
    return BehaviorStrategy(player=player, values=values)


def uniform_profile(idx: SequenceIndex) -> StrategyProfile:
    return StrategyProfile(uniform_behavior(idx, 1), uniform_behavior(idx, 2))
