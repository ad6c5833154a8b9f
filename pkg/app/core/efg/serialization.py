"""Line-oriented text format for game trees.

    # game kuhn3
    players 2
    node 0 chance 12:0.16666666666666666 13:0.16666666666666666 ...
    node 1 player 1 infoset 1: actions k b
    node 7 terminal -1.0
    edge 0 12 1

Node ids must be listed in increasing order starting at 0; node 0 is the root.
"""

from pathlib import Path
from typing import List, Union

import numpy as np

from app.core.efg.game_tree import (
    ChanceNode,
    DecisionNode,
    GameTree,
    GameTreeBuilder,
)
from app.exceptions.game_exceptions import GameFormatError, InvalidGameError

PROBABILITY_DIGITS = 17


def _format_probability(p: float) -> str:
    return np.format_float_positional(
        p, precision=PROBABILITY_DIGITS, unique=False, fractional=False, trim="k"
    )


def dumps(tree: GameTree, name: str = "") -> str:
    if tree.root != 0:
        raise InvalidGameError("only trees rooted at node 0 can be serialized")
    lines: List[str] = []
    name = name or tree.name
    if name:
        lines.append(f"# game {name}")
    lines.append("players 2")
    for node_id, node in enumerate(tree.nodes):
        if isinstance(node, ChanceNode):
            outcomes = " ".join(
                f"{tree.label(label)}:{_format_probability(p)}"
                for label, p in node.outcomes
            )
            lines.append(f"node {node_id} chance {outcomes}")
        elif isinstance(node, DecisionNode):
            actions = " ".join(tree.label(a) for a in node.actions)
            lines.append(
                f"node {node_id} player {node.player} "
                f"infoset {tree.infoset_key(node.infoset)} actions {actions}"
            )
        else:
            lines.append(f"node {node_id} terminal {node.utility_p1!r}")
    for node_id, node in enumerate(tree.nodes):
        for action, child in zip(node.actions, tree.children[node_id]):
            lines.append(f"edge {node_id} {tree.label(action)} {child}")
    return "\n".join(lines) + "\n"


def loads(text: str) -> GameTree:
    builder = GameTreeBuilder()
    saw_players = False
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            parts = line[1:].split()
            if len(parts) == 2 and parts[0] == "game":
                builder.name = parts[1]
            continue
        tokens = line.split()
        try:
            if tokens[0] == "players":
                if tokens[1:] != ["2"]:
                    raise GameFormatError(line_number, "only two-player games are supported")
                saw_players = True
            elif tokens[0] == "node":
                _parse_node(builder, tokens, line_number)
            elif tokens[0] == "edge":
                if len(tokens) != 4:
                    raise GameFormatError(line_number, "expected 'edge <parent> <action> <child>'")
                builder.edge(int(tokens[1]), tokens[2], int(tokens[3]))
            else:
                raise GameFormatError(line_number, f"unknown record {tokens[0]!r}")
        except (ValueError, IndexError) as exc:
            raise GameFormatError(line_number, str(exc) or "malformed line") from exc
        except InvalidGameError as exc:
            raise GameFormatError(line_number, str(exc)) from exc
    if not saw_players:
        raise GameFormatError(0, "missing 'players 2' header")
    try:
        return builder.build(root=0)
    except InvalidGameError as exc:
        raise GameFormatError(0, str(exc)) from exc


def _parse_node(builder: GameTreeBuilder, tokens: List[str], line_number: int) -> None:
    node_id = int(tokens[1])
    kind = tokens[2]
    if kind == "chance":
        outcomes = []
        for item in tokens[3:]:
            label, _, prob = item.rpartition(":")
            if not label:
                raise GameFormatError(line_number, f"bad chance outcome {item!r}")
            outcomes.append((label, float(prob)))
        created = builder.chance(outcomes)
    elif kind == "player":
        if tokens[4] != "infoset" or tokens[6] != "actions":
            raise GameFormatError(line_number, "expected 'player <p> infoset <key> actions ...'")
        created = builder.decision(int(tokens[3]), tokens[5], tokens[7:])
    elif kind == "terminal":
        if len(tokens) != 4:
            raise GameFormatError(line_number, "expected 'terminal <utility>'")
        created = builder.terminal(float(tokens[3]))
    else:
        raise GameFormatError(line_number, f"unknown node kind {kind!r}")
    if created != node_id:
        raise GameFormatError(
            line_number, f"node ids must be consecutive from 0, expected {created}"
        )


def write_game(tree: GameTree, path: Union[str, Path], name: str = "") -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(dumps(tree, name), encoding="utf-8")
    return path


def read_game(path: Union[str, Path]) -> GameTree:
    return loads(Path(path).read_text(encoding="utf-8"))
