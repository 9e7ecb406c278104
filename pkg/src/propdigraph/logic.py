"""The boolean logic of "most X are Y".

Sentences are built from atoms ``M(X,Y)`` ("more than half of the X's
are Y's") with the usual connectives.  A model interprets each relation
symbol as a finite set; an atom is true when the intersection strictly
exceeds half of the subject's extension.  Satisfiability is decided by
searching truth assignments over the sentence's atoms: an assignment is
admissible when the digraph it induces on the symbols has no one-way
cycle and never asserts M(X,Y) without M(X,X) and M(Y,Y).  Every
admissible satisfying assignment is turned into a concrete finite model
through the rational witness construction, so SAT verdicts always come
with a checkable model.

Grammar:  atom ``M(X,Y)``; prefix ``~``; infix ``&``, ``|``, ``->``,
``<->`` in decreasing binding order, ``->`` and ``<->`` right
associative; parentheses for grouping.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .digraph import Digraph, find_one_way_cycle
from .errors import ResourceLimitError, SentenceSyntaxError
from .rational import realize_rational

DEFAULT_ATOM_LIMIT = 24

# --------------------------------------------------------------------------
# Sentences


@dataclass(frozen=True)
class Atom:
    subject: str
    predicate: str


@dataclass(frozen=True)
class Not:
    body: "Sentence"


@dataclass(frozen=True)
class And:
    left: "Sentence"
    right: "Sentence"


@dataclass(frozen=True)
class Or:
    left: "Sentence"
    right: "Sentence"


@dataclass(frozen=True)
class Implies:
    left: "Sentence"
    right: "Sentence"


@dataclass(frozen=True)
class Iff:
    left: "Sentence"
    right: "Sentence"


Sentence = Union[Atom, Not, And, Or, Implies, Iff]


def atoms_of(s: Sentence) -> set[tuple[str, str]]:
    if isinstance(s, Atom):
        return {(s.subject, s.predicate)}
    if isinstance(s, Not):
        return atoms_of(s.body)
    return atoms_of(s.left) | atoms_of(s.right)


def symbols_of(s: Sentence) -> set[str]:
    out = set()
    for x, y in atoms_of(s):
        out.add(x)
        out.add(y)
    return out


def conjoin(sentences) -> Sentence:
    """Conjunction of a nonempty sequence of sentences (left associated)."""
    sentences = list(sentences)
    if not sentences:
        raise ValueError("cannot conjoin an empty sequence")
    acc = sentences[0]
    for s in sentences[1:]:
        acc = And(acc, s)
    return acc


def disjoin(sentences) -> Sentence:
    sentences = list(sentences)
    if not sentences:
        raise ValueError("cannot disjoin an empty sequence")
    acc = sentences[0]
    for s in sentences[1:]:
        acc = Or(acc, s)
    return acc


# --------------------------------------------------------------------------
# Parser and printer

_PRECEDENCE = {Iff: 1, Implies: 2, Or: 3, And: 4, Not: 5, Atom: 6}
_INFIX = {Iff: "<->", Implies: "->", Or: "|", And: "&"}
_RIGHT_ASSOC = (Implies, Iff)


def sentence_to_text(s: Sentence) -> str:
    """Render with the minimal parentheses the grammar needs to round-trip."""

    def render(node, min_prec):
        kind = type(node)
        if kind is Atom:
            return f"M({node.subject},{node.predicate})"
        if kind is Not:
            return "~" + render(node.body, _PRECEDENCE[Not])
        prec = _PRECEDENCE[kind]
        if kind in _RIGHT_ASSOC:
            left = render(node.left, prec + 1)
            right = render(node.right, prec)
        else:
            left = render(node.left, prec)
            right = render(node.right, prec + 1)
        text = f"{left} {_INFIX[kind]} {right}"
        return f"({text})" if prec < min_prec else text

    return render(s, 0)


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def _skip_space(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def _peek(self, token: str) -> bool:
        self._skip_space()
        return self.text.startswith(token, self.pos)

    def _eat(self, token: str) -> bool:
        if self._peek(token):
            self.pos += len(token)
            return True
        return False

    def _expect(self, token: str):
        if not self._eat(token):
            raise SentenceSyntaxError(f"expected {token!r}", self.pos)

    def _identifier(self) -> str:
        self._skip_space()
        start = self.pos
        while self.pos < len(self.text) and (
            self.text[self.pos].isalnum() or self.text[self.pos] == "_"
        ):
            self.pos += 1
        if self.pos == start:
            raise SentenceSyntaxError("expected a relation symbol", self.pos)
        return self.text[start:self.pos]

    def parse(self) -> Sentence:
        s = self._iff()
        self._skip_space()
        if self.pos != len(self.text):
            raise SentenceSyntaxError("unexpected trailing input", self.pos)
        return s

    def _iff(self) -> Sentence:
        left = self._implies()
        if self._eat("<->"):
            return Iff(left, self._iff())
        return left

    def _implies(self) -> Sentence:
        left = self._or()
        if self._eat("->"):
            return Implies(left, self._implies())
        return left

    def _or(self) -> Sentence:
        node = self._and()
        while self._eat("|"):
            node = Or(node, self._and())
        return node

    def _and(self) -> Sentence:
        node = self._unary()
        while self._eat("&"):
            node = And(node, self._unary())
        return node

    def _unary(self) -> Sentence:
        if self._eat("~"):
            return Not(self._unary())
        if self._eat("("):
            node = self._iff()
            self._expect(")")
            return node
        self._skip_space()
        if self._eat("M"):
            self._expect("(")
            subject = self._identifier()
            self._expect(",")
            predicate = self._identifier()
            self._expect(")")
            return Atom(subject, predicate)
        raise SentenceSyntaxError("expected 'M(', '~', or '('", self.pos)


def parse_sentence(text: str) -> Sentence:
    return _Parser(text).parse()


# --------------------------------------------------------------------------
# Models and evaluation


class LogicModel:
    """Finite universe plus a set interpretation per relation symbol.

    Unmentioned symbols are interpreted as the empty set.
    """

    __slots__ = ("universe", "interp")

    def __init__(self, universe, interp):
        self.universe = frozenset(universe)
        self.interp = {sym: frozenset(ext) for sym, ext in interp.items()}
        for sym, ext in self.interp.items():
            if not ext <= self.universe:
                raise ValueError(f"interpretation of {sym} leaves the universe")

    def extension(self, symbol: str) -> frozenset:
        return self.interp.get(symbol, frozenset())

    def __repr__(self):
        return f"LogicModel(|universe|={len(self.universe)}, symbols={sorted(self.interp)})"


def evaluate(model: LogicModel, s: Sentence) -> bool:
    if isinstance(s, Atom):
        subj = model.extension(s.subject)
        pred = model.extension(s.predicate)
        return 2 * len(subj & pred) > len(subj)
    if isinstance(s, Not):
        return not evaluate(model, s.body)
    if isinstance(s, And):
        return evaluate(model, s.left) and evaluate(model, s.right)
    if isinstance(s, Or):
        return evaluate(model, s.left) or evaluate(model, s.right)
    if isinstance(s, Implies):
        return (not evaluate(model, s.left)) or evaluate(model, s.right)
    if isinstance(s, Iff):
        return evaluate(model, s.left) == evaluate(model, s.right)
    raise TypeError(f"not a sentence: {s!r}")


# --------------------------------------------------------------------------
# Assignments and the induced symbol digraph


@dataclass(frozen=True)
class AtomDigraphResult:
    valid: bool
    vertices: tuple[str, ...]       # symbols with a true diagonal atom, sorted
    digraph: Digraph | None         # over 1..len(vertices), matching order
    violation: str | None           # "axiom-two" or "one-way-cycle"
    witness: tuple[str, ...] | None  # offending atom pair or cycle symbols


def atom_digraph(assignment: dict[tuple[str, str], bool]) -> AtomDigraphResult:
    """Digraph induced on symbols by a truth assignment to atoms.

    Invalid when a true M(X,Y) lacks a true diagonal M(X,X) or M(Y,Y),
    or when the induced digraph has a one-way cycle; either defect means
    no finite model realizes the assignment.
    """
    vertices = tuple(sorted(x for (x, y), v in assignment.items() if x == y and v))
    in_graph = set(vertices)
    for (x, y), value in assignment.items():
        if not value:
            continue
        if x not in in_graph or y not in in_graph:
            return AtomDigraphResult(
                valid=False, vertices=vertices, digraph=None,
                violation="axiom-two", witness=(x, y),
            )
    index = {sym: k for k, sym in enumerate(vertices, start=1)}
    edges = frozenset(
        (index[x], index[y])
        for (x, y), value in assignment.items()
        if value and x != y
    )
    g = Digraph(len(vertices), edges)
    cycle = find_one_way_cycle(g)
    if cycle is not None:
        return AtomDigraphResult(
            valid=False, vertices=vertices, digraph=g,
            violation="one-way-cycle",
            witness=tuple(vertices[v - 1] for v in cycle),
        )
    return AtomDigraphResult(
        valid=True, vertices=vertices, digraph=g, violation=None, witness=None
    )


def build_model(assignment: dict[tuple[str, str], bool]) -> LogicModel:
    """Concrete finite model realizing a valid assignment.

    The assignment's symbol digraph is represented at threshold 1/2 and
    materialized; symbols outside the digraph get the empty extension.
    """
    result = atom_digraph(assignment)
    if not result.valid:
        raise ValueError(f"assignment is not realizable: {result.violation}")
    family = realize_rational(result.digraph, 1, 2).materialize()
    interp = {}
    for k, sym in enumerate(result.vertices, start=1):
        interp[sym] = family.member(k)
    for (x, y) in assignment:
        interp.setdefault(x, frozenset())
        interp.setdefault(y, frozenset())
    return LogicModel(universe=family.universe, interp=interp)


# --------------------------------------------------------------------------
# Satisfiability


@dataclass(frozen=True)
class SatResult:
    satisfiable: bool
    assignment: dict | None = None
    model: LogicModel | None = None


def closed_atom_domain(s: Sentence) -> list[tuple[str, str]]:
    """The sentence's atoms plus a diagonal atom for every mentioned symbol.

    Diagonals must be decided for the symbol digraph to be well defined.
    """
    atoms = atoms_of(s)
    for sym in symbols_of(s):
        atoms.add((sym, sym))
    return sorted(atoms)


def _simplify(s: Sentence, assignment) -> Union[Sentence, bool]:
    """Partial evaluation under a partial assignment; returns bool when decided."""
    if isinstance(s, Atom):
        key = (s.subject, s.predicate)
        return assignment[key] if key in assignment else s
    if isinstance(s, Not):
        body = _simplify(s.body, assignment)
        return (not body) if isinstance(body, bool) else Not(body)
    left = _simplify(s.left, assignment)
    right = _simplify(s.right, assignment)
    if isinstance(s, And):
        if left is False or right is False:
            return False
        if left is True:
            return right
        if right is True:
            return left
        return And(left, right)
    if isinstance(s, Or):
        if left is True or right is True:
            return True
        if left is False:
            return right
        if right is False:
            return left
        return Or(left, right)
    if isinstance(s, Implies):
        if left is False or right is True:
            return True
        if left is True:
            return right
        if right is False:
            return Not(left)
        return Implies(left, right)
    if isinstance(s, Iff):
        if isinstance(left, bool) and isinstance(right, bool):
            return left == right
        if left is True:
            return right
        if right is True:
            return left
        if left is False:
            return Not(right) if not isinstance(right, bool) else not right
        if right is False:
            return Not(left)
        return Iff(left, right)
    raise TypeError(f"not a sentence: {s!r}")


def decide_sat(s: Sentence, atom_limit: int = DEFAULT_ATOM_LIMIT) -> SatResult:
    """Decide satisfiability; a SAT verdict carries a verifying finite model.

    Backtracking over the closed atom domain with partial evaluation for
    pruning and two admissibility rules applied during search: a true
    M(X,Y) forces both diagonals true, and every one-way cycle found in a
    candidate's symbol digraph is turned into a blocking constraint (the
    cycle must keep a reversal) before the search continues.
    """
    domain = closed_atom_domain(s)
    if len(domain) > atom_limit:
        raise ResourceLimitError(
            f"{len(domain)} atoms exceeds the limit of {atom_limit}"
        )
    # Learned constraints: sets of (atom, value) pairs that cannot all hold.
    blocked: list[tuple[tuple[tuple[str, str], bool], ...]] = []

    def violates_block(assignment) -> bool:
        for combo in blocked:
            if all(assignment.get(atom) is value for atom, value in combo):
                return True
        return False

    def propagate_diagonals(assignment) -> bool:
        # A true off-diagonal atom needs both diagonals true.
        for (x, y), value in assignment.items():
            if not value:
                continue
            for sym in (x, y):
                diag = assignment.get((sym, sym))
                if diag is False:
                    return False
        return True

    def search(idx, assignment, current):
        if isinstance(current, bool):
            if not current:
                return None
            # Close off the remaining atoms as false: fewest edges, and any
            # admissible completion works for a decided skeleton.
            full = dict(assignment)
            for atom in domain[idx:]:
                full.setdefault(atom, False)
            if not propagate_diagonals(full) or violates_block(full):
                return _resume_completions(idx, assignment)
            result = atom_digraph(full)
            if result.valid:
                return full
            if result.violation == "one-way-cycle":
                _learn_cycle(full, result.witness)
            return _resume_completions(idx, assignment)
        if idx == len(domain):
            return None
        atom = domain[idx]
        for value in (False, True):
            assignment[atom] = value
            if propagate_diagonals(assignment) and not violates_block(assignment):
                found = search(idx + 1, assignment, _simplify(current, assignment))
                if found is not None:
                    return found
            del assignment[atom]
        return None

    def _resume_completions(idx, assignment):
        # The propositional skeleton is already true; enumerate the still
        # free atoms to look for an admissible digraph.
        if idx == len(domain):
            return None
        atom = domain[idx]
        if atom in assignment:
            return _resume_completions(idx + 1, assignment)
        for value in (False, True):
            assignment[atom] = value
            if propagate_diagonals(assignment) and not violates_block(assignment):
                found = search(idx + 1, assignment, True)
                if found is not None:
                    return found
            del assignment[atom]
        return None

    def _learn_cycle(assignment, cycle_symbols):
        # Instantiated cycle axiom: the cycle atoms cannot all be true
        # while every reversal atom is false.
        combo = []
        syms = list(cycle_symbols)
        for a, b in zip(syms, syms[1:]):
            combo.append(((a, b), True))
            combo.append(((b, a), False))
        blocked.append(tuple(combo))

    assignment = search(0, {}, _simplify(s, {}))
    if assignment is None:
        return SatResult(satisfiable=False)
    model = build_model(assignment)
    if not evaluate(model, s):
        raise AssertionError("constructed model fails to satisfy the sentence")
    return SatResult(satisfiable=True, assignment=assignment, model=model)


def entails(premises, conclusion: Sentence,
            atom_limit: int = DEFAULT_ATOM_LIMIT) -> bool:
    """Whether every finite model of all premises satisfies the conclusion.

    Only finite premise lists are supported; the relation is decided by
    refuting premises + negated conclusion.
    """
    premises = list(premises)
    query = Not(conclusion) if not premises else And(conjoin(premises), Not(conclusion))
    return not decide_sat(query, atom_limit=atom_limit).satisfiable


# --------------------------------------------------------------------------
# 3SAT reduction


def reduce_3sat(clauses) -> Sentence:
    """Translate a 3-CNF over variables 1..n into an equisatisfiable sentence.

    Variable k becomes the atom M(X_{2k-1}, X_{2k}); a negative literal
    becomes its negation; clauses become disjunctions, the instance their
    conjunction.  An empty instance translates to a tautology.
    """
    translated = []
    for clause in clauses:
        literals = list(clause)
        if len(literals) != 3 or any(lit == 0 for lit in literals):
            raise ValueError(f"clause must have exactly 3 nonzero literals: {clause!r}")
        parts = []
        for lit in literals:
            k = abs(lit)
            atom = Atom(f"X{2 * k - 1}", f"X{2 * k}")
            parts.append(atom if lit > 0 else Not(atom))
        translated.append(disjoin(parts))
    if not translated:
        tautology_atom = Atom("X1", "X2")
        return Or(tautology_atom, Not(tautology_atom))
    return conjoin(translated)
