# diffinfo: exact bijections and information efficiency on the natural numbers
# Copyright (c) 2024-2026 The diffinfo Team. All rights reserved.

"""
Propositional formulas and clause sets.

A `PropFormula` is an immutable tree of var / not / and / or / xor / iff
nodes. `and` and `or` take any number of operands (the empty `and` is true,
the empty `or` is false), `xor` takes one or more, `iff` exactly two.
"""

from typing import Dict, List, Mapping, Sequence, Tuple

from ..errors import DomainError


_SYMBOLS = {"and": " & ", "or": " | ", "xor": " ^ ", "iff": " <-> "}


class PropFormula:

    __slots__ = ("op", "args", "name")

    def __init__(self, op: str, args: Tuple["PropFormula", ...] = (), name: str = None):
        if op not in ("var", "not", "and", "or", "xor", "iff"):
            raise DomainError(f"Unknown connective '{op}'.")
        if op == "var" and not name:
            raise DomainError("A variable needs a name.")
        if op == "not" and len(args) != 1:
            raise DomainError("Negation takes exactly one operand.")
        if op == "iff" and len(args) != 2:
            raise DomainError("An equivalence takes exactly two operands.")
        if op == "xor" and not args:
            raise DomainError("An exclusive or needs at least one operand.")
        object.__setattr__(self, "op", op)
        object.__setattr__(self, "args", tuple(args))
        object.__setattr__(self, "name", name)

    def __setattr__(self, key, value):
        raise AttributeError("PropFormula is immutable.")

    @classmethod
    def var(cls, name: str) -> "PropFormula":
        return cls("var", name=name)

    @classmethod
    def neg(cls, f: "PropFormula") -> "PropFormula":
        return cls("not", (f,))

    @classmethod
    def conj(cls, *fs: "PropFormula") -> "PropFormula":
        return cls("and", fs)

    @classmethod
    def disj(cls, *fs: "PropFormula") -> "PropFormula":
        return cls("or", fs)

    @classmethod
    def xor(cls, *fs: "PropFormula") -> "PropFormula":
        return cls("xor", fs)

    @classmethod
    def iff(cls, a: "PropFormula", b: "PropFormula") -> "PropFormula":
        return cls("iff", (a, b))

    @classmethod
    def literal(cls, name: str, value: bool) -> "PropFormula":
        v = cls.var(name)
        return v if value else cls.neg(v)

    def evaluate(self, assignment: Mapping[str, bool]) -> bool:
        op = self.op
        if op == "var":
            try:
                return bool(assignment[self.name])
            except KeyError:
                raise DomainError(f"Variable '{self.name}' has no value in the assignment.") from None
        if op == "not":
            return not self.args[0].evaluate(assignment)
        if op == "and":
            return all(a.evaluate(assignment) for a in self.args)
        if op == "or":
            return any(a.evaluate(assignment) for a in self.args)
        if op == "xor":
            return sum(a.evaluate(assignment) for a in self.args) % 2 == 1
        return self.args[0].evaluate(assignment) == self.args[1].evaluate(assignment)

    def variables(self) -> List[str]:
        """ Variable names in order of first occurrence. """
        seen: Dict[str, None] = {}
        stack = [self]
        while stack:
            node = stack.pop()
            if node.op == "var":
                seen.setdefault(node.name)
            else:
                stack.extend(reversed(node.args))
        return list(seen)

    def size(self) -> int:
        """ Number of nodes. """
        return 1 + sum(a.size() for a in self.args)

    def conjuncts(self) -> List["PropFormula"]:
        """ The operands of nested top-level conjunctions, flattened. """
        if self.op != "and":
            return [self]
        out = []
        for a in self.args:
            out.extend(a.conjuncts())
        return out

    def __eq__(self, other):
        if not isinstance(other, PropFormula):
            return NotImplemented
        return (self.op, self.name, self.args) == (other.op, other.name, other.args)

    def __hash__(self):
        return hash((self.op, self.name, self.args))

    def __repr__(self):
        return f"PropFormula('{self}')"

    def __str__(self):
        if self.op == "var":
            return self.name
        if self.op == "not":
            return "~" + str(self.args[0])
        if not self.args:
            return "T" if self.op == "and" else "F"
        if len(self.args) == 1:
            return str(self.args[0])
        return "(" + _SYMBOLS[self.op].join(str(a) for a in self.args) + ")"


class CNF:
    """
    A clause set over variables 1..num_vars. Literals are signed integers;
    `names` maps the variables of the source formula to their indices, the
    remaining indices are auxiliary.
    """

    def __init__(self, clauses: Sequence[Sequence[int]], num_vars: int, names: Mapping[str, int] = None):
        self.clauses: List[Tuple[int, ...]] = [tuple(c) for c in clauses]
        self.num_vars = num_vars
        self.names: Dict[str, int] = dict(names or {})
        for clause in self.clauses:
            for lit in clause:
                if lit == 0 or abs(lit) > num_vars:
                    raise DomainError(f"Literal {lit} is outside variables 1..{num_vars}.")

    def __len__(self):
        return len(self.clauses)

    def to_dimacs(self, comments: Sequence[str] = ()) -> str:
        lines = [f"c {c}" for c in comments]
        lines += [f"c {name} {index}" for name, index in self.names.items()]
        lines.append(f"p cnf {self.num_vars} {len(self.clauses)}")
        lines += [" ".join(str(lit) for lit in clause) + " 0" for clause in self.clauses]
        return "\n".join(lines) + "\n"

    def __str__(self):
        return f"CNF: {self.num_vars} variables, {len(self.clauses)} clauses"
