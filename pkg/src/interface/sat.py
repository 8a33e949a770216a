# diffinfo: exact bijections and information efficiency on the natural numbers
# Copyright (c) 2024-2026 The diffinfo Team. All rights reserved.

"""
SB-XOR as propositional satisfiability.

The formula for an instance with rows s_1..s_n of k bits and target c is
the conjunction of four blocks:

  p1  bit facts b{i}_{j} for every row and bc_{j} for the target;
  p2  for some length L, the fold of y1..yL equals c bit by bit;
  p3  each intermediate vector y{l} equals exactly one row
      (an XOR over the rows; rows are distinct, so at most one can match);
  p4  the intermediate vectors are pairwise distinct.

Together y1..yn is an ordering of the rows, so p2 holds for some L iff a
non-empty selection folds to c.
"""

from typing import Dict, List, Optional, Tuple

from .errors import require_budget
from .objects import CNF, PropFormula, SbxorInstance
from .options import resolve_options

V = PropFormula.var


def _b(i: int, j: int) -> PropFormula:
    return V(f"b{i}_{j}")


def _c(j: int) -> PropFormula:
    return V(f"bc_{j}")


def _y(r: int, j: int) -> PropFormula:
    return V(f"y{r}_{j}")


def bit_block(inst: SbxorInstance) -> PropFormula:
    rows = [PropFormula.conj(*(PropFormula.literal(f"b{i}_{j}", bool(bit))
                               for j, bit in enumerate(row.bits, start=1)))
            for i, row in enumerate(inst.rows, start=1)]
    rows.append(PropFormula.conj(*(PropFormula.literal(f"bc_{j}", bool(bit))
                                   for j, bit in enumerate(inst.target.bits, start=1))))
    return PropFormula.conj(*rows)


def chain_block(inst: SbxorInstance) -> PropFormula:
    n, k = inst.n, inst.k
    chains = []
    for length in range(1, n + 1):
        chains.append(PropFormula.conj(*(
            PropFormula.iff(PropFormula.xor(*(_y(r, j) for r in range(1, length + 1))), _c(j))
            for j in range(1, k + 1))))
    return PropFormula.disj(*chains)


def _equal(r: int, i: int, k: int) -> PropFormula:
    return PropFormula.conj(*(PropFormula.iff(_y(r, j), _b(i, j)) for j in range(1, k + 1)))


def distribution_block(inst: SbxorInstance) -> PropFormula:
    n, k = inst.n, inst.k
    return PropFormula.conj(*(PropFormula.xor(*(_equal(r, i, k) for i in range(1, n + 1)))
                              for r in range(1, n + 1)))


def uniqueness_block(inst: SbxorInstance) -> PropFormula:
    n, k = inst.n, inst.k
    return PropFormula.conj(*(
        PropFormula.disj(*(PropFormula.neg(PropFormula.iff(_y(a, j), _y(b, j))) for j in range(1, k + 1)))
        for a in range(1, n + 1) for b in range(a + 1, n + 1)))


def sat_encode(inst: SbxorInstance, options=None) -> PropFormula:
    options = resolve_options(options)
    require_budget(max(inst.n, inst.k), options.sat_bound, "sat_encode")
    return PropFormula.conj(bit_block(inst), chain_block(inst),
                            distribution_block(inst), uniqueness_block(inst))


class _Tseitin:
    """ Structural clause form: one fresh variable per connective. """

    def __init__(self, names: List[str]):
        self.index: Dict[str, int] = {name: i for i, name in enumerate(names, start=1)}
        self.count = len(names)
        self.clauses: List[Tuple[int, ...]] = []

    def fresh(self) -> int:
        self.count += 1
        return self.count

    def literal(self, f: PropFormula) -> int:
        if f.op == "var":
            return self.index[f.name]
        if f.op == "not":
            return -self.literal(f.args[0])
        if f.op == "xor":
            lits = [self.literal(a) for a in f.args]
            out = lits[0]
            for other in lits[1:]:
                out = self._xor(out, other)
            return out
        lits = [self.literal(a) for a in f.args]
        g = self.fresh()
        if f.op == "and":
            self.clauses.extend((-g, a) for a in lits)
            self.clauses.append((g,) + tuple(-a for a in lits))
        elif f.op == "or":
            self.clauses.extend((g, -a) for a in lits)
            self.clauses.append((-g,) + tuple(lits))
        else:
            a, b = lits
            self.clauses += [(-g, -a, b), (-g, a, -b), (g, a, b), (g, -a, -b)]
        return g

    def _xor(self, a: int, b: int) -> int:
        g = self.fresh()
        self.clauses += [(-g, a, b), (-g, -a, -b), (g, -a, b), (g, a, -b)]
        return g


def to_cnf(f: PropFormula) -> CNF:
    """ Equisatisfiable clause set; a bare variable gives a single unit clause. """
    names = f.variables()
    t = _Tseitin(names)
    root = t.literal(f)
    t.clauses.append((root,))
    return CNF(t.clauses, t.count, t.index)


def to_dimacs(cnf: CNF, comments=()) -> str:
    return cnf.to_dimacs(comments)


def evaluate(f: PropFormula, assignment: Dict[str, bool]) -> bool:
    return f.evaluate(assignment)


def satisfiable(f: PropFormula) -> Optional[Dict[str, bool]]:
    """
    A satisfying assignment or None, by fixing the literals asserted at the
    top level and enumerating every assignment of the remaining variables.
    """
    fixed: Dict[str, bool] = {}
    for part in f.conjuncts():
        if part.op == "var":
            value, name = True, part.name
        elif part.op == "not" and part.args[0].op == "var":
            value, name = False, part.args[0].name
        else:
            continue
        if fixed.get(name, value) != value:
            return None
        fixed[name] = value
    free = [v for v in f.variables() if v not in fixed]
    for bits in range(1 << len(free)):
        assignment = dict(fixed)
        assignment.update((v, bool((bits >> i) & 1)) for i, v in enumerate(free))
        if f.evaluate(assignment):
            return assignment
    return None


def dpll(cnf: CNF) -> Optional[Dict[int, bool]]:
    """
    Davis-Putnam-Logemann-Loveland search with unit propagation. It branches
    on the lowest open variable, so the named variables of a Tseitin clause
    set are fixed before any auxiliary one.
    """

    def propagate(clauses, assignment):
        changed = True
        while changed:
            changed = False
            remaining = []
            for clause in clauses:
                if any(assignment.get(abs(lit)) == (lit > 0) for lit in clause):
                    continue
                open_lits = [lit for lit in clause if abs(lit) not in assignment]
                if not open_lits:
                    return None
                if len(open_lits) == 1:
                    assignment[abs(open_lits[0])] = open_lits[0] > 0
                    changed = True
                    continue
                remaining.append(open_lits)
            clauses = remaining
        return clauses

    def search(clauses, assignment):
        clauses = propagate(clauses, assignment)
        if clauses is None:
            return None
        if not clauses:
            return assignment
        lit = min((lit for clause in clauses for lit in clause), key=abs)
        for value in (lit > 0, lit < 0):
            trial = dict(assignment)
            trial[abs(lit)] = value
            result = search(clauses, trial)
            if result is not None:
                return result
        return None

    result = search(cnf.clauses, {})
    if result is None:
        return None
    return {v: result.get(v, False) for v in range(1, cnf.num_vars + 1)}


def decode(cnf: CNF, model: Dict[int, bool]) -> Dict[str, bool]:
    """ The values of the named variables in a model of cnf. """
    return {name: model[index] for name, index in cnf.names.items()}
