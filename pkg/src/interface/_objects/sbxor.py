# diffinfo: exact bijections and information efficiency on the natural numbers
# Copyright (c) 2024-2026 The diffinfo Team. All rights reserved.

from typing import Dict, Optional, Sequence, Tuple

from ..errors import DomainError
from .bitvector import BitVector


class SbxorInstance:
    """
    A Subset-Bitwise-XOR instance: n distinct rows of k bits and a k-bit target.

    hidden_selection is the generator's witness (an n-bit selection vector);
    it is None for instances that were not generated with a known solution.
    """

    def __init__(self, rows: Sequence[BitVector], target: BitVector,
                 hidden_selection: Optional[BitVector] = None):
        rows = tuple(rows)
        if not rows:
            raise DomainError("An SB-XOR instance needs at least one row.")
        k = rows[0].length
        if any(r.length != k for r in rows):
            raise DomainError("All rows of an SB-XOR instance must have the same length.")
        if len(set(rows)) != len(rows):
            raise DomainError("The rows of an SB-XOR instance must be pairwise distinct.")
        if target.length != k:
            raise DomainError(f"Target length {target.length} differs from row length {k}.")
        if hidden_selection is not None and hidden_selection.length != len(rows):
            raise DomainError(f"Selection length {hidden_selection.length} differs from row count {len(rows)}.")
        self._rows: Tuple[BitVector, ...] = rows
        self._target = target
        self._hidden_selection = hidden_selection

    @property
    def rows(self) -> Tuple[BitVector, ...]:
        return self._rows

    @property
    def target(self) -> BitVector:
        return self._target

    @property
    def hidden_selection(self) -> Optional[BitVector]:
        return self._hidden_selection

    @property
    def n(self) -> int:
        return len(self._rows)

    @property
    def k(self) -> int:
        return self._target.length

    def selected_rows(self, sel: BitVector) -> Tuple[BitVector, ...]:
        if sel.length != self.n:
            raise DomainError(f"Selection length {sel.length} differs from row count {self.n}.")
        return tuple(self._rows[i] for i in sel.indices())

    def __eq__(self, other):
        if not isinstance(other, SbxorInstance):
            return NotImplemented
        return (self._rows, self._target, self._hidden_selection) == \
            (other._rows, other._target, other._hidden_selection)

    def __repr__(self):
        return (f"SbxorInstance(rows={[str(r) for r in self._rows]}, target='{self._target}'"
                + ("" if self._hidden_selection is None else f", selection='{self._hidden_selection}'")
                + ")")

    def __str__(self):
        lines = [str(r) for r in self._rows]
        lines.append("-" * self.k)
        lines.append(str(self._target))
        return "\n".join(lines)

    def to_json(self) -> Dict:
        data = {"rows": [str(r) for r in self._rows], "target": str(self._target)}
        if self._hidden_selection is not None:
            data["selection"] = str(self._hidden_selection)
        return data

    @classmethod
    def from_json(cls, data: Dict) -> "SbxorInstance":
        selection = data.get("selection")
        return cls([BitVector.from_string(r) for r in data["rows"]],
                   BitVector.from_string(data["target"]),
                   None if selection is None else BitVector.from_string(selection))
