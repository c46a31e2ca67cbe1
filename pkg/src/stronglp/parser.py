"""Concrete grammar: tokenizer, recursive-descent parser and printer.

Grammar (tightest binding first)::

    postfix status  ^t ^p ^f ^nf ^c
    negation        ~
    conjunction     &          (left-associative)
    disjunction     |          (left-associative)
    implications    ->  =>     (right-associative, shared level)
    biconditionals  <->  <=>   (right-associative, shared level)

``forall x. BODY`` and ``exists x. BODY`` extend maximally to the right.
Atoms are lowercase identifiers; ``TRUE``/``BOTH``/``FALSE`` are the three
logical constants; ``=`` between terms is equality.  Relation arguments are
terms: bound variables stay variables, identifiers declared in the signature
are constants, anything else is a free variable.

Without a signature the parser runs unchecked: bare identifiers are nullary
relations and applied identifiers get their arity inferred (and must be used
consistently).  Errors report 1-based line:column positions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import ArityMismatchError, FormulaSyntaxError, UnknownSymbolError
from .syntax import (
    And,
    Const,
    Eq,
    Exists,
    Forall,
    Formula,
    LogicalConst,
    Not,
    Or,
    Rel,
    Signature,
    Status,
    StrongIff,
    StrongImp,
    Term,
    Var,
    WeakIff,
    WeakImp,
)
from .values import BOT, BOTH, TOP, StatusOp, TruthValue

# ---------------------------------------------------------------------------
# Lexer

_PUNCT = ("<=>", "<->", "=>", "->", "=", "~", "&", "|", "(", ")", ",", ".")
_CONSTS = {"TRUE": TOP, "BOTH": BOTH, "FALSE": BOT}
_STATUS_CODES = {op.value: op for op in StatusOp}


@dataclass(frozen=True)
class _Token:
    kind: str  # punct text, or 'ident', 'const', 'status', 'forall', 'exists', 'eof'
    text: str
    line: int
    col: int


def _tokenize(text: str) -> list[_Token]:
    toks: list[_Token] = []
    line, col = 1, 1
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            i += 1
            line += 1
            col = 1
            continue
        if ch.isspace():
            i += 1
            col += 1
            continue
        start_line, start_col = line, col
        matched = None
        for p in _PUNCT:
            if text.startswith(p, i):
                matched = p
                break
        if matched:
            toks.append(_Token(matched, matched, start_line, start_col))
            i += len(matched)
            col += len(matched)
            continue
        if ch == "^":
            j = i + 1
            while j < n and text[j].isalpha():
                j += 1
            code = text[i + 1 : j]
            if code not in _STATUS_CODES:
                raise FormulaSyntaxError(
                    f"unknown status operator ^{code!r} (expected ^t ^p ^f ^nf ^c)",
                    start_line,
                    start_col,
                )
            toks.append(_Token("status", code, start_line, start_col))
            col += j - i
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            word = text[i:j]
            if word in _CONSTS:
                toks.append(_Token("const", word, start_line, start_col))
            elif word in ("forall", "exists"):
                toks.append(_Token(word, word, start_line, start_col))
            elif word[0].islower():
                toks.append(_Token("ident", word, start_line, start_col))
            else:
                raise FormulaSyntaxError(
                    f"unknown keyword {word!r} (identifiers are lowercase; "
                    f"constants are TRUE, BOTH, FALSE)",
                    start_line,
                    start_col,
                )
            col += j - i
            i = j
            continue
        raise FormulaSyntaxError(f"unexpected character {ch!r}", start_line, start_col)
    toks.append(_Token("eof", "", line, col))
    return toks


# ---------------------------------------------------------------------------
# Parser


class _Parser:
    def __init__(self, text: str, sig: Optional[Signature]):
        self.toks = _tokenize(text)
        self.pos = 0
        self.sig = sig
        self.bound: list[str] = []
        self.inferred: dict[str, int] = {}

    def peek(self) -> _Token:
        return self.toks[self.pos]

    def advance(self) -> _Token:
        tok = self.toks[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str) -> _Token:
        tok = self.peek()
        if tok.kind != kind:
            what = tok.text or "end of input"
            raise FormulaSyntaxError(f"expected {kind!r}, found {what!r}", tok.line, tok.col)
        return self.advance()

    def fail(self, msg: str, tok: _Token):
        raise FormulaSyntaxError(msg, tok.line, tok.col)

    # precedence ladder -----------------------------------------------------

    def parse(self) -> Formula:
        f = self.iff()
        tok = self.peek()
        if tok.kind != "eof":
            self.fail(f"unexpected {tok.text!r} after a complete formula", tok)
        return f

    def iff(self) -> Formula:
        left = self.imp()
        tok = self.peek()
        if tok.kind == "<->":
            self.advance()
            return WeakIff(left, self.iff())
        if tok.kind == "<=>":
            self.advance()
            return StrongIff(left, self.iff())
        return left

    def imp(self) -> Formula:
        left = self.disj()
        tok = self.peek()
        if tok.kind == "->":
            self.advance()
            return WeakImp(left, self.imp())
        if tok.kind == "=>":
            self.advance()
            return StrongImp(left, self.imp())
        return left

    def disj(self) -> Formula:
        f = self.conj()
        while self.peek().kind == "|":
            self.advance()
            f = Or(f, self.conj())
        return f

    def conj(self) -> Formula:
        f = self.unary()
        while self.peek().kind == "&":
            self.advance()
            f = And(f, self.unary())
        return f

    def unary(self) -> Formula:
        tok = self.peek()
        if tok.kind == "~":
            self.advance()
            return Not(self.unary())
        if tok.kind in ("forall", "exists"):
            self.advance()
            var = self.expect("ident")
            if self.sig is not None and (
                var.text in self.sig.constants or var.text in self.sig.relations
            ):
                self.fail(
                    f"quantified variable {var.text!r} collides with a signature symbol",
                    var,
                )
            self.expect(".")
            self.bound.append(var.text)
            try:
                body = self.iff()
            finally:
                self.bound.pop()
            return Forall(var.text, body) if tok.kind == "forall" else Exists(var.text, body)
        return self.postfix()

    def postfix(self) -> Formula:
        f = self.primary()
        while self.peek().kind == "status":
            tok = self.advance()
            f = Status(f, _STATUS_CODES[tok.text])
        return f

    def primary(self) -> Formula:
        tok = self.peek()
        if tok.kind == "const":
            self.advance()
            return LogicalConst(_CONSTS[tok.text])
        if tok.kind == "(":
            self.advance()
            f = self.iff()
            self.expect(")")
            return f
        if tok.kind == "ident":
            self.advance()
            nxt = self.peek()
            if nxt.kind == "(":
                return self.relation(tok)
            if nxt.kind == "=":
                left = self.term_from_ident(tok)
                self.advance()
                right = self.term()
                return Eq(left, right)
            return self.nullary(tok)
        self.fail(f"expected a formula, found {tok.text or 'end of input'!r}", tok)

    def relation(self, name: _Token) -> Formula:
        if name.text in self.bound:
            self.fail(f"quantified variable {name.text!r} cannot be applied", name)
        self.expect("(")
        args: list[Term] = []
        if self.peek().kind != ")":
            args.append(self.term())
            while self.peek().kind == ",":
                self.advance()
                args.append(self.term())
        self.expect(")")
        self.check_rel(name, len(args))
        return Rel(name.text, tuple(args))

    def nullary(self, name: _Token) -> Formula:
        if name.text in self.bound:
            self.fail(f"quantified variable {name.text!r} used as a formula", name)
        self.check_rel(name, 0)
        return Rel(name.text)

    def check_rel(self, name: _Token, nargs: int) -> None:
        at = f"{name.line}:{name.col}"
        if self.sig is not None:
            if name.text in self.sig.constants:
                raise UnknownSymbolError(
                    f"{at}: constant symbol {name.text!r} used as a relation"
                )
            if name.text not in self.sig.relations:
                raise UnknownSymbolError(f"{at}: unknown relation symbol: {name.text!r}")
            arity = self.sig.relations[name.text]
            if arity != nargs:
                raise ArityMismatchError(
                    f"{at}: relation {name.text!r} has arity {arity}, got {nargs} arguments"
                )
        else:
            arity = self.inferred.setdefault(name.text, nargs)
            if arity != nargs:
                raise ArityMismatchError(
                    f"{at}: relation {name.text!r} used with arities {arity} and {nargs}"
                )

    def term(self) -> Term:
        tok = self.expect("ident")
        return self.term_from_ident(tok)

    def term_from_ident(self, tok: _Token) -> Term:
        if tok.text in self.bound:
            return Var(tok.text)
        if self.sig is not None:
            if tok.text in self.sig.constants:
                return Const(tok.text)
            if tok.text in self.sig.relations:
                raise UnknownSymbolError(
                    f"{tok.line}:{tok.col}: relation symbol {tok.text!r} used in term position"
                )
        return Var(tok.text)


def parse_formula(text: str, sig: Optional[Signature] = None) -> Formula:
    """Parse formula text.  With a signature, symbols and arities are checked;
    without one, atoms are taken at face value and arities are inferred."""
    return _Parser(text, sig).parse()


# ---------------------------------------------------------------------------
# Printer

_PREC_QUANT = 0
_PREC_IFF = 1
_PREC_IMP = 2
_PREC_OR = 3
_PREC_AND = 4
_PREC_NOT = 5
_PREC_STATUS = 6
_PREC_ATOM = 7

_CONST_NAMES = {TOP: "TRUE", BOTH: "BOTH", BOT: "FALSE"}
_IFF_TEXT = {WeakIff: "<->", StrongIff: "<=>"}
_IMP_TEXT = {WeakImp: "->", StrongImp: "=>"}


def format_formula(f: Formula) -> str:
    """Render with minimal parentheses; inverse of :func:`parse_formula`."""
    return _fmt(f, _PREC_QUANT)


def format_term(t: Term) -> str:
    return t.name


def _fmt(f: Formula, required: int) -> str:
    if isinstance(f, LogicalConst):
        return _CONST_NAMES[f.value]
    if isinstance(f, Rel):
        if not f.args:
            return f.name
        return f"{f.name}({', '.join(format_term(t) for t in f.args)})"
    if isinstance(f, Eq):
        return f"{format_term(f.left)} = {format_term(f.right)}"
    if isinstance(f, Status):
        return _wrap(f"{_fmt(f.body, _PREC_STATUS)}^{f.op.value}", _PREC_STATUS, required)
    if isinstance(f, Not):
        return _wrap(f"~{_fmt(f.body, _PREC_NOT)}", _PREC_NOT, required)
    if isinstance(f, And):
        text = f"{_fmt(f.left, _PREC_AND)} & {_fmt(f.right, _PREC_AND + 1)}"
        return _wrap(text, _PREC_AND, required)
    if isinstance(f, Or):
        text = f"{_fmt(f.left, _PREC_OR)} | {_fmt(f.right, _PREC_OR + 1)}"
        return _wrap(text, _PREC_OR, required)
    if isinstance(f, (WeakImp, StrongImp)):
        op = _IMP_TEXT[type(f)]
        text = f"{_fmt(f.left, _PREC_IMP + 1)} {op} {_fmt(f.right, _PREC_IMP)}"
        return _wrap(text, _PREC_IMP, required)
    if isinstance(f, (WeakIff, StrongIff)):
        op = _IFF_TEXT[type(f)]
        text = f"{_fmt(f.left, _PREC_IFF + 1)} {op} {_fmt(f.right, _PREC_IFF)}"
        return _wrap(text, _PREC_IFF, required)
    if isinstance(f, (Forall, Exists)):
        word = "forall" if isinstance(f, Forall) else "exists"
        text = f"{word} {f.var}. {_fmt(f.body, _PREC_QUANT)}"
        return _wrap(text, _PREC_QUANT, required)
    raise TypeError(f"not a formula: {f!r}")


def _wrap(text: str, prec: int, required: int) -> str:
    return f"({text})" if prec < required else text
