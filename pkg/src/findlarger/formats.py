"""Text formats for sequences and trees.

Sequence files: whitespace-separated integers, optionally preceded by a
count header (first token equals the number of remaining tokens).  The
generators always write the header.

Tree files: either a parent array in the same headered layout with -1
marking the root, or a balanced-parenthesis string.
"""

from __future__ import annotations

from typing import Sequence, TextIO

from .trees import MalformedTreeError, Tree, parse_balanced_parens, parse_parent_array

__all__ = [
    "SequenceParseError",
    "read_sequence",
    "write_sequence",
    "read_tree",
    "write_parent_array",
    "write_parens",
    "FORMATS",
]

FORMATS = ("seq", "parent", "parens")


class SequenceParseError(ValueError):
    """Sequence file tokens are missing or not integers."""


def read_sequence(text: str) -> list[int]:
    """Parse integers, dropping the count header when present."""
    tokens = text.split()
    if not tokens:
        raise SequenceParseError("no tokens")
    try:
        numbers = [int(t) for t in tokens]
    except ValueError as e:
        raise SequenceParseError(f"non-integer token: {e}") from None
    if len(numbers) >= 2 and numbers[0] == len(numbers) - 1 and numbers[0] >= 1:
        return numbers[1:]
    return numbers


def write_sequence(values: Sequence[int], out: TextIO) -> None:
    out.write(f"{len(values)}\n")
    out.write(" ".join(map(str, values)))
    out.write("\n")


def read_tree(text: str, fmt: str) -> Tree:
    """Parse a tree in the named format ("parent" or "parens")."""
    if fmt == "parent":
        return parse_parent_array(text)
    if fmt == "parens":
        return parse_balanced_parens(text)
    raise MalformedTreeError(f"unknown tree format {fmt!r}")


def write_parent_array(tree: Tree, out: TextIO) -> None:
    out.write(f"{tree.n_nodes}\n")
    out.write(" ".join(map(str, tree.parent)))
    out.write("\n")


def write_parens(tree: Tree, out: TextIO) -> None:
    parts: list[str] = []
    # preorder with explicit closing markers
    stack: list[int | None] = [tree.root]
    while stack:
        v = stack.pop()
        if v is None:
            parts.append(")")
            continue
        parts.append("(")
        stack.append(None)
        for w in reversed(tree.children[v]):
            stack.append(w)
    out.write("".join(parts))
    out.write("\n")
