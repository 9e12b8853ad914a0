"""Propositional language layer: signatures, formulas, parsing and printing,
substitutions, plain and generalized subformulas, bounded unary enumeration.

Formulas are a free term algebra: a formula is a variable or a connective
applied to the declared number of arguments.  Any identifier not declared in
the signature at hand is a variable.  The canonical concrete syntax is prefix
application ``name(arg, ...)``; infix sugar exists only for connectives given
a notation alias, and always with mandatory parentheses.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Iterator, Mapping

from .errors import LanguageError, ParseError

_IDENT_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_INFIX_TOKEN_RE = re.compile(r"[^\w\s(),]+\Z")


class Formula:
    """Base class; concrete formulas are Var or App. Equality is syntactic."""

    __slots__ = ()


@dataclass(frozen=True, slots=True)
class Var(Formula):
    name: str

    def __str__(self) -> str:
        return self.name

    def __repr__(self) -> str:
        return f"Var({self.name!r})"


@dataclass(frozen=True, slots=True)
class App(Formula):
    conn: str
    args: tuple[Formula, ...] = ()

    def __str__(self) -> str:
        if not self.args:
            return self.conn
        return f"{self.conn}({','.join(str(a) for a in self.args)})"

    def __repr__(self) -> str:
        return f"App({self.conn!r}, {self.args!r})"


@dataclass(frozen=True)
class Signature:
    """Finite family of connective names with arities.

    ``notation`` maps a connective name to an infix alias (binary only),
    e.g. ``{"imp": "->"}`` lets the parser read ``(p -> q)``.
    """

    connectives: Mapping[str, int]
    notation: Mapping[str, str] = field(default_factory=dict)

    def __post_init__(self):
        conns = dict(self.connectives)
        notation = dict(self.notation)
        for name, arity in conns.items():
            if not isinstance(name, str) or not _IDENT_RE.fullmatch(name):
                raise LanguageError(f"bad connective name: {name!r}")
            if not isinstance(arity, int) or arity < 0:
                raise LanguageError(f"bad arity for {name!r}: {arity!r}")
        seen_aliases: dict[str, str] = {}
        for name, alias in notation.items():
            if name not in conns:
                raise LanguageError(f"notation for undeclared connective {name!r}")
            if conns[name] != 2:
                raise LanguageError(f"infix notation requires arity 2: {name!r}")
            if not isinstance(alias, str) or not _INFIX_TOKEN_RE.fullmatch(alias):
                raise LanguageError(f"bad infix alias for {name!r}: {alias!r}")
            if alias in seen_aliases:
                raise LanguageError(f"alias {alias!r} used by both "
                                    f"{seen_aliases[alias]!r} and {name!r}")
            seen_aliases[alias] = name
        object.__setattr__(self, "connectives", conns)
        object.__setattr__(self, "notation", notation)

    def arity(self, name: str) -> int:
        try:
            return self.connectives[name]
        except KeyError:
            raise LanguageError(f"unknown connective {name!r}") from None

    def infix_aliases(self) -> dict[str, str]:
        """alias -> connective name."""
        return {alias: name for name, alias in self.notation.items()}


# ---------------------------------------------------------------------------
# parsing / printing

_TOK_IDENT = "ident"
_TOK_LP = "("
_TOK_RP = ")"
_TOK_COMMA = ","
_TOK_INFIX = "infix"
_TOK_EOF = "eof"


def _tokenize(text: str, infix_tokens: list[str]) -> list[tuple[str, str, int]]:
    toks = []
    i, n = 0, len(text)
    # longest-match-first so "->" wins over a hypothetical "-"
    infix_tokens = sorted(infix_tokens, key=len, reverse=True)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in "(),":
            toks.append((ch, ch, i))
            i += 1
            continue
        m = _IDENT_RE.match(text, i)
        if m:
            toks.append((_TOK_IDENT, m.group(), i))
            i = m.end()
            continue
        for tok in infix_tokens:
            if text.startswith(tok, i):
                toks.append((_TOK_INFIX, tok, i))
                i += len(tok)
                break
        else:
            raise ParseError(f"unknown token {text[i]!r}", i)
    toks.append((_TOK_EOF, "", n))
    return toks


class _Parser:
    def __init__(self, toks, sig: Signature | None):
        self.toks = toks
        self.pos = 0
        self.sig = sig
        self.infix = sig.infix_aliases() if sig else {}

    def peek(self):
        return self.toks[self.pos]

    def take(self, kind):
        tok = self.toks[self.pos]
        if tok[0] != kind:
            raise ParseError(f"expected {kind!r}, found {tok[1]!r}", tok[2])
        self.pos += 1
        return tok

    def formula(self) -> Formula:
        kind, text, at = self.peek()
        if kind == _TOK_IDENT:
            self.pos += 1
            if self.peek()[0] == _TOK_LP:
                return self._application(text, at)
            return self._bare(text, at)
        if kind == _TOK_LP:
            self.pos += 1
            left = self.formula()
            k2, alias, at2 = self.peek()
            if k2 != _TOK_INFIX:
                raise ParseError(f"expected an infix operator, found {alias!r}", at2)
            self.pos += 1
            right = self.formula()
            self.take(_TOK_RP)
            return App(self.infix[alias], (left, right))
        raise ParseError(f"expected a formula, found {text!r}", at)

    def _application(self, name: str, at: int) -> Formula:
        self.take(_TOK_LP)
        args = [self.formula()]
        while self.peek()[0] == _TOK_COMMA:
            self.pos += 1
            args.append(self.formula())
        self.take(_TOK_RP)
        if self.sig is not None:
            if name not in self.sig.connectives:
                raise ParseError(f"unknown connective {name!r}", at)
            want = self.sig.connectives[name]
            if want != len(args):
                raise ParseError(
                    f"connective {name!r} expects {want} arguments, got {len(args)}",
                    at)
        return App(name, tuple(args))

    def _bare(self, name: str, at: int) -> Formula:
        if self.sig is not None and name in self.sig.connectives:
            if self.sig.connectives[name] == 0:
                return App(name, ())
            raise ParseError(
                f"connective {name!r} used without arguments", at)
        return Var(name)


def parse_formula(text: str, sig: Signature | None = None) -> Formula:
    """Parse ``text`` into a Formula.

    With a signature: applied identifiers must be declared with the right
    arity, bare declared nullary names become applications, and infix sugar
    from the signature's notation is accepted.  Without one (permissive
    mode): every applied identifier is a connective, every bare identifier
    is a variable, and no infix sugar is available.
    """
    toks = _tokenize(text, list(sig.notation.values()) if sig else [])
    p = _Parser(toks, sig)
    f = p.formula()
    kind, text2, at = p.peek()
    if kind != _TOK_EOF:
        raise ParseError(f"trailing input {text2!r}", at)
    return f


def format_formula(f: Formula) -> str:
    """Canonical prefix rendering; round-trips through parse_formula."""
    return str(f)


# ---------------------------------------------------------------------------
# structural operations

Substitution = Mapping[str, Formula]


def substitute(f: Formula, s: Substitution) -> Formula:
    """Simultaneously replace every variable occurrence; identity on
    variables absent from ``s``."""
    memo: dict[Formula, Formula] = {}

    def go(g: Formula) -> Formula:
        got = memo.get(g)
        if got is not None:
            return got
        if isinstance(g, Var):
            out = s.get(g.name, g)
        else:
            out = App(g.conn, tuple(go(a) for a in g.args))
        memo[g] = out
        return out

    return go(f)


def compose(s2: Substitution, s1: Substitution) -> dict[str, Formula]:
    """The substitution equivalent to applying s1 first, then s2."""
    out = {v: substitute(g, s2) for v, g in s1.items()}
    for v, g in s2.items():
        out.setdefault(v, g)
    return out


def variables(f: Formula) -> tuple[str, ...]:
    """Distinct variable names in first-occurrence (leftmost) order."""
    seen: list[str] = []

    def go(g: Formula):
        if isinstance(g, Var):
            if g.name not in seen:
                seen.append(g.name)
        else:
            for a in g.args:
                go(a)

    go(f)
    return tuple(seen)


def subformulas(f: Formula) -> frozenset[Formula]:
    """All subformulas of ``f``, including ``f`` itself."""
    return frozenset(subformula_sequence([f]))


def subformula_sequence(fs: Iterable[Formula]) -> tuple[Formula, ...]:
    """Subformulas of all of ``fs``, duplicate-free, in post order of first
    occurrence: every formula appears after all of its parts."""
    out: list[Formula] = []
    seen: set[Formula] = set()

    def go(g: Formula):
        if g in seen:
            return
        if isinstance(g, App):
            for a in g.args:
                go(a)
        seen.add(g)
        out.append(g)

    for f in fs:
        go(f)
    return tuple(out)


def depth(f: Formula) -> int:
    """Connective-nesting depth: 0 for variables."""
    if isinstance(f, Var):
        return 0
    return 1 + max((depth(a) for a in f.args), default=0)


def size(f: Formula) -> int:
    """Node count."""
    if isinstance(f, Var):
        return 1
    return 1 + sum(size(a) for a in f.args)


# ---------------------------------------------------------------------------
# theta sets and generalized subformulas

P = Var("p")


def theta_set(formulas: Iterable[Formula]) -> frozenset[Formula]:
    """Validate and canonicalize a set of unary formulas.

    Every member must use at most one distinct variable (renamed to ``p``),
    and the bare variable ``p`` must be in the set.
    """
    out = set()
    for f in formulas:
        vs = variables(f)
        if len(vs) > 1:
            raise LanguageError(f"theta member {f} uses more than one variable")
        if len(vs) == 1 and vs[0] != "p":
            f = substitute(f, {vs[0]: P})
        out.add(f)
    if P not in out:
        raise LanguageError("theta must contain the bare variable p")
    return frozenset(out)


def gen_subformulas(theta: Iterable[Formula],
                    fs: Iterable[Formula]) -> frozenset[Formula]:
    """Generalized subformulas: every theta member instantiated at every
    plain subformula of every formula in ``fs``.  With theta = {p} this is
    exactly the plain subformula set."""
    subs = subformula_sequence(fs)
    out: set[Formula] = set()
    for th in theta:
        vs = variables(th)
        if not vs:
            out.add(th)
            continue
        v = vs[0]
        for g in subs:
            out.add(substitute(th, {v: g}))
    return frozenset(out)


def enumerate_unary_formulas(sig: Signature, max_depth: int) -> list[Formula]:
    """All formulas over the single variable ``p`` of depth <= max_depth,
    duplicate-free, depth-major, then lexicographic by connective name,
    then by argument tuple in enumeration order."""
    if max_depth < 0:
        raise LanguageError("max_depth must be >= 0")
    pool: list[Formula] = [P]
    depth_of: dict[Formula, int] = {P: 0}
    names = sorted(sig.connectives)
    for d in range(1, max_depth + 1):
        fresh: list[Formula] = []
        for name in names:
            k = sig.connectives[name]
            if k == 0:
                if d == 1:
                    f = App(name, ())
                    fresh.append(f)
                    depth_of[f] = 1
                continue
            for combo in product(pool, repeat=k):
                if max(depth_of[a] for a in combo) == d - 1:
                    f = App(name, combo)
                    fresh.append(f)
                    depth_of[f] = d
        pool.extend(fresh)
    return pool
