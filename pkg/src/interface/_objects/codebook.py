# diffinfo: exact bijections and information efficiency on the natural numbers
# Copyright (c) 2024-2026 The diffinfo Team. All rights reserved.

from typing import Dict, Iterable, Optional, Tuple

from ..errors import DomainError, nat
from .._options.options import SubsetOp


class Codebook:
    """
    An ordered list of distinct naturals; entry i sits at scale position i.

    template_len is the length of the template the codebook was derived from
    (the number of powers of two it randomizes).
    """

    def __init__(self, entries: Iterable[int], template_len: Optional[int] = None):
        entries = tuple(nat(e, "codebook entry") for e in entries)
        if len(set(entries)) != len(entries):
            seen = set()
            dup = next(e for e in entries if e in seen or seen.add(e))
            raise DomainError(f"Codebook entries must be unique; {dup} occurs twice.")
        self._entries: Tuple[int, ...] = entries
        self.template_len = len(entries) if template_len is None else nat(template_len, "template_len")

    @property
    def entries(self) -> Tuple[int, ...]:
        return self._entries

    def __len__(self):
        return len(self._entries)

    def __iter__(self):
        return iter(self._entries)

    def __getitem__(self, i):
        return self._entries[i]

    def __eq__(self, other):
        if not isinstance(other, Codebook):
            return NotImplemented
        return self._entries == other._entries

    def __hash__(self):
        return hash(self._entries)

    def __repr__(self):
        return f"Codebook({list(self._entries)})"

    def to_json(self) -> Dict:
        return {"codebook": [str(e) for e in self._entries],
                "template_len": str(self.template_len)}

    @classmethod
    def from_json(cls, data: Dict) -> "Codebook":
        template_len = data.get("template_len")
        return cls((int(v) for v in data["codebook"]),
                   None if template_len is None else int(template_len))


class SubsetProblem:
    """ Is there a selection from the codebook whose op-value equals target? """

    def __init__(self, codebook: Codebook, target: int, op=SubsetOp.sum):
        if not isinstance(codebook, Codebook):
            codebook = Codebook(codebook)
        self.codebook = codebook
        self.target = nat(target, "target")
        self.op = SubsetOp(op)

    def to_json(self) -> Dict:
        return {"codebook": [str(e) for e in self.codebook],
                "target": str(self.target),
                "op": self.op.value}

    @classmethod
    def from_json(cls, data: Dict) -> "SubsetProblem":
        return cls(Codebook(int(v) for v in data["codebook"]), int(data["target"]),
                   data.get("op", SubsetOp.sum.value))

    def __repr__(self):
        return f"SubsetProblem({list(self.codebook)}, target={self.target}, op={self.op.value!r})"
