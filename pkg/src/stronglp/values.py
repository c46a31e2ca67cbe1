"""The three truth values and all propositional connectives on them.

Values are ordered ``BOT < BOTH < TOP``.  ``BOTH`` is the paradoxical value,
read as "both true and false".  Under the numeric view (``to_numeric``) the
lattice connectives are min/max and negation is ``1 - x``; strong implication
compares the two sides in the value order and always answers two-valued.

Canonical ASCII letters used by every file format and CLI output:
``T`` for TOP, ``P`` for BOTH, ``F`` for BOT.
"""

from __future__ import annotations

from enum import Enum, IntEnum, unique
from fractions import Fraction


@unique
class TruthValue(IntEnum):
    BOT = 0
    BOTH = 1
    TOP = 2

    @property
    def letter(self) -> str:
        return _LETTERS[self]

    @classmethod
    def from_letter(cls, text: str) -> "TruthValue":
        try:
            return _BY_LETTER[text]
        except KeyError:
            raise ValueError(
                f"not a truth value letter: {text!r} (expected T, P or F)"
            ) from None

    def __str__(self) -> str:
        return self.letter

    def __repr__(self) -> str:
        return f"TruthValue.{self.name}"


TOP = TruthValue.TOP
BOTH = TruthValue.BOTH
BOT = TruthValue.BOT

# Canonical enumeration order: TOP first.  Valuation sweeps, truth tables and
# model enumeration all iterate values in this order.
VALUES = (TOP, BOTH, BOT)

_LETTERS = {TOP: "T", BOTH: "P", BOT: "F"}
_BY_LETTER = {"T": TOP, "P": BOTH, "F": BOT}


def to_numeric(v: TruthValue) -> Fraction:
    """Numeric view: TOP -> 1, BOTH -> 1/2, BOT -> 0."""
    return Fraction(int(v), 2)


def from_numeric(q) -> TruthValue:
    """Inverse of :func:`to_numeric`; rejects every other number."""
    try:
        q = Fraction(q)
    except (TypeError, ValueError):
        raise ValueError(f"not a number: {q!r}") from None
    for v in VALUES:
        if to_numeric(v) == q:
            return v
    raise ValueError(f"{q} is not one of the truth value numerics 0, 1/2, 1")


def neg(v: TruthValue) -> TruthValue:
    return TruthValue(2 - int(v))


def conj(a: TruthValue, b: TruthValue) -> TruthValue:
    return a if a <= b else b


def disj(a: TruthValue, b: TruthValue) -> TruthValue:
    return a if a >= b else b


def weak_imp(a: TruthValue, b: TruthValue) -> TruthValue:
    """Material implication: ``~a | b``.  Not detachable: BOTH premises leak."""
    return disj(neg(a), b)


def weak_iff(a: TruthValue, b: TruthValue) -> TruthValue:
    return conj(weak_imp(a, b), weak_imp(b, a))


def strong_imp(a: TruthValue, b: TruthValue) -> TruthValue:
    """TOP when ``a <= b`` in the value order, otherwise BOT.  Never BOTH."""
    return TOP if a <= b else BOT


def strong_iff(a: TruthValue, b: TruthValue) -> TruthValue:
    """TOP exactly when both sides have the same value, otherwise BOT."""
    return TOP if a == b else BOT


def designated(v: TruthValue) -> bool:
    """Whether ``v`` counts as satisfied: anything above BOT."""
    return v > BOT


@unique
class StatusOp(Enum):
    """The five unary status operators, written postfix in the concrete
    syntax: ``^t ^p ^f ^nf ^c``.

    Each answers two-valued: TOP_TEST / BOTH_TEST / BOT_TEST check for one
    specific value, NOT_FALSE checks "not plainly false", and CONSISTENT
    checks "not paradoxical".
    """

    TOP_TEST = "t"
    BOTH_TEST = "p"
    BOT_TEST = "f"
    NOT_FALSE = "nf"
    CONSISTENT = "c"


_STATUS_TABLES = {
    StatusOp.TOP_TEST: {TOP: TOP, BOTH: BOT, BOT: BOT},
    StatusOp.BOTH_TEST: {TOP: BOT, BOTH: TOP, BOT: BOT},
    StatusOp.BOT_TEST: {TOP: BOT, BOTH: BOT, BOT: TOP},
    StatusOp.NOT_FALSE: {TOP: TOP, BOTH: TOP, BOT: BOT},
    StatusOp.CONSISTENT: {TOP: TOP, BOTH: BOT, BOT: TOP},
}


def status(v: TruthValue, which: StatusOp) -> TruthValue:
    """Apply a status operator.  Output is always TOP or BOT."""
    return _STATUS_TABLES[which][v]
