"""Signatures, terms and formula ASTs, plus desugaring into the primitive basis.

Primitive nodes are ``LogicalConst``, ``Rel``, ``Eq``, ``Not``, ``And``,
``StrongImp`` and ``Forall``.  The derived nodes ``Or``, ``WeakImp``,
``WeakIff``, ``StrongIff``, ``Exists`` and ``Status`` are definitional
shorthands; :func:`desugar` rewrites them away.

All nodes are immutable values with structural equality, safe to share and
hash.  Nullary relations double as propositional atoms.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Mapping, Union

from .errors import ArityMismatchError, SubstitutionError, UnknownSymbolError
from .values import BOT, BOTH, TOP, StatusOp, TruthValue

# ---------------------------------------------------------------------------
# Terms


@dataclass(frozen=True)
class Var:
    name: str

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Const:
    name: str

    def __str__(self) -> str:
        return self.name


Term = Union[Var, Const]


# ---------------------------------------------------------------------------
# Signatures


@dataclass(frozen=True)
class Signature:
    """Constant symbols plus relation symbols with arities.  No functions."""

    constants: frozenset[str] = frozenset()
    relations: Mapping[str, int] = None  # type: ignore[assignment]

    def __post_init__(self):
        object.__setattr__(self, "constants", frozenset(self.constants))
        object.__setattr__(self, "relations", dict(self.relations or {}))
        clash = self.constants & self.relations.keys()
        if clash:
            raise ValueError(f"symbols declared both constant and relation: {sorted(clash)}")
        for name, arity in self.relations.items():
            if arity < 0:
                raise ValueError(f"negative arity for relation {name}")

    def rel_arity(self, name: str) -> int:
        try:
            return self.relations[name]
        except KeyError:
            raise UnknownSymbolError(f"unknown relation symbol: {name}") from None


# ---------------------------------------------------------------------------
# Formulas


class Formula:
    """Base class for all formula nodes."""

    __slots__ = ()


@dataclass(frozen=True)
class LogicalConst(Formula):
    value: TruthValue


@dataclass(frozen=True)
class Rel(Formula):
    name: str
    args: tuple[Term, ...] = ()


@dataclass(frozen=True)
class Eq(Formula):
    left: Term
    right: Term


@dataclass(frozen=True)
class Not(Formula):
    body: Formula


@dataclass(frozen=True)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class WeakImp(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class WeakIff(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class StrongImp(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class StrongIff(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Status(Formula):
    body: Formula
    op: StatusOp


@dataclass(frozen=True)
class Forall(Formula):
    var: str
    body: Formula


@dataclass(frozen=True)
class Exists(Formula):
    var: str
    body: Formula


TRUE = LogicalConst(TOP)
PARA = LogicalConst(BOTH)
FALSE = LogicalConst(BOT)

_BINARY = (And, Or, WeakImp, WeakIff, StrongImp, StrongIff)
_QUANT = (Forall, Exists)
_DERIVED = (Or, WeakImp, WeakIff, StrongIff, Exists, Status)


def atom(name: str) -> Rel:
    """Nullary relation, i.e. a propositional atom."""
    return Rel(name)


# ---------------------------------------------------------------------------
# Structural helpers


def subformulas(f: Formula) -> Iterator[Formula]:
    """Yield ``f`` and every proper subformula, preorder."""
    yield f
    if isinstance(f, (Not, Status)):
        yield from subformulas(f.body)
    elif isinstance(f, _BINARY):
        yield from subformulas(f.left)
        yield from subformulas(f.right)
    elif isinstance(f, _QUANT):
        yield from subformulas(f.body)


def node_count(f: Formula) -> int:
    return sum(1 for _ in subformulas(f))


def is_primitive(f: Formula) -> bool:
    """True when no derived node occurs anywhere in ``f``."""
    return not any(isinstance(g, _DERIVED) for g in subformulas(f))


def free_vars(f: Formula) -> frozenset[str]:
    if isinstance(f, LogicalConst):
        return frozenset()
    if isinstance(f, Rel):
        return frozenset(t.name for t in f.args if isinstance(t, Var))
    if isinstance(f, Eq):
        return frozenset(t.name for t in (f.left, f.right) if isinstance(t, Var))
    if isinstance(f, (Not, Status)):
        return free_vars(f.body)
    if isinstance(f, _BINARY):
        return free_vars(f.left) | free_vars(f.right)
    if isinstance(f, _QUANT):
        return free_vars(f.body) - {f.var}
    raise TypeError(f"not a formula: {f!r}")


def status_definition(body: Formula, op: StatusOp) -> Formula:
    """The defining formula of a status operator, with ``body`` plugged in.

    ^t is TRUE => p, ^p is p <=> BOTH, ^f is p => FALSE, ^nf is BOTH => p,
    and ^c is p => p^t.
    """
    if op is StatusOp.TOP_TEST:
        return StrongImp(TRUE, body)
    if op is StatusOp.BOTH_TEST:
        return StrongIff(body, PARA)
    if op is StatusOp.BOT_TEST:
        return StrongImp(body, FALSE)
    if op is StatusOp.NOT_FALSE:
        return StrongImp(PARA, body)
    if op is StatusOp.CONSISTENT:
        return StrongImp(body, StrongImp(TRUE, body))
    raise ValueError(f"unknown status operator: {op!r}")


def desugar(f: Formula) -> Formula:
    """Rewrite every derived node into the primitive basis.

    The result is semantically equivalent (same truth value in every model
    under every assignment) and idempotent under further desugaring.
    """
    if isinstance(f, (LogicalConst, Rel, Eq)):
        return f
    if isinstance(f, Not):
        return Not(desugar(f.body))
    if isinstance(f, And):
        return And(desugar(f.left), desugar(f.right))
    if isinstance(f, StrongImp):
        return StrongImp(desugar(f.left), desugar(f.right))
    if isinstance(f, Forall):
        return Forall(f.var, desugar(f.body))
    if isinstance(f, Or):
        return Not(And(Not(desugar(f.left)), Not(desugar(f.right))))
    if isinstance(f, WeakImp):
        return desugar(Or(Not(f.left), f.right))
    if isinstance(f, WeakIff):
        return And(desugar(WeakImp(f.left, f.right)), desugar(WeakImp(f.right, f.left)))
    if isinstance(f, StrongIff):
        return And(StrongImp(desugar(f.left), desugar(f.right)),
                   StrongImp(desugar(f.right), desugar(f.left)))
    if isinstance(f, Exists):
        return Not(Forall(f.var, Not(desugar(f.body))))
    if isinstance(f, Status):
        return desugar(status_definition(desugar(f.body), f.op))
    raise TypeError(f"not a formula: {f!r}")


def substitute(f: Formula, mapping: Mapping[str, Term]) -> Formula:
    """Replace free variables by terms.  Raises on capture rather than
    renaming, so output stays structurally predictable."""

    def sub_term(t: Term) -> Term:
        if isinstance(t, Var) and t.name in mapping:
            return mapping[t.name]
        return t

    if isinstance(f, LogicalConst):
        return f
    if isinstance(f, Rel):
        return Rel(f.name, tuple(sub_term(t) for t in f.args))
    if isinstance(f, Eq):
        return Eq(sub_term(f.left), sub_term(f.right))
    if isinstance(f, Not):
        return Not(substitute(f.body, mapping))
    if isinstance(f, Status):
        return Status(substitute(f.body, mapping), f.op)
    if isinstance(f, _BINARY):
        return type(f)(substitute(f.left, mapping), substitute(f.right, mapping))
    if isinstance(f, _QUANT):
        inner = {v: t for v, t in mapping.items() if v != f.var}
        for v, t in inner.items():
            if isinstance(t, Var) and t.name == f.var and v in free_vars(f.body):
                raise SubstitutionError(
                    f"substituting {t.name} for {v} would be captured by the "
                    f"quantifier binding {f.var}"
                )
        return type(f)(f.var, substitute(f.body, inner))
    raise TypeError(f"not a formula: {f!r}")


def validate(f: Formula, sig: Signature) -> None:
    """Check every symbol in ``f`` against ``sig``.

    Raises UnknownSymbolError or ArityMismatchError; bound variables may not
    reuse signature symbols.
    """

    def check(g: Formula, bound: frozenset[str]) -> None:
        if isinstance(g, LogicalConst):
            return
        if isinstance(g, Rel):
            arity = sig.rel_arity(g.name)
            if arity != len(g.args):
                raise ArityMismatchError(
                    f"relation {g.name} has arity {arity}, got {len(g.args)} arguments"
                )
            for t in g.args:
                check_term(t, bound)
        elif isinstance(g, Eq):
            check_term(g.left, bound)
            check_term(g.right, bound)
        elif isinstance(g, (Not, Status)):
            check(g.body, bound)
        elif isinstance(g, _BINARY):
            check(g.left, bound)
            check(g.right, bound)
        elif isinstance(g, _QUANT):
            if g.var in sig.constants or g.var in sig.relations:
                raise UnknownSymbolError(
                    f"quantified variable {g.var} collides with a signature symbol"
                )
            check(g.body, bound | {g.var})
        else:
            raise TypeError(f"not a formula: {g!r}")

    def check_term(t: Term, bound: frozenset[str]) -> None:
        if isinstance(t, Const):
            if t.name not in sig.constants:
                raise UnknownSymbolError(f"unknown constant symbol: {t.name}")
        elif isinstance(t, Var):
            if t.name in sig.relations:
                raise UnknownSymbolError(
                    f"relation symbol {t.name} used in term position"
                )

    check(f, frozenset())
