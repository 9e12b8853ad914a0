"""Finite non-deterministic matrices in one and two dimensions.

An NdAlgebra interprets every connective as a set-valued table over a finite
value set; an NdMatrix adds one distinguished (designated) set, a BMatrix
adds two (designated and antidesignated).  Consequence is decided by
enumerating coherent valuations over the subformula closure of a statement;
the first assignment in the fixed enumeration order that witnesses failure
is returned as the countermodel, so every verdict is reproducible.

Semantic checking is restricted to total algebras: a coherent valuation on
a subformula-closed set then always extends to the full language, which
makes finite enumeration sound and complete.  Partial algebras can be
represented but every checking operation rejects them with
NonTotalAlgebraError.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Iterator, Mapping, Sequence, Union

from .errors import NonTotalAlgebraError, SemanticsError
from .language import (App, Formula, Signature, Var, enumerate_unary_formulas,
                       subformula_sequence, variables)

# ---------------------------------------------------------------------------
# algebras and matrices

Interpretation = Mapping[str, Mapping[tuple[str, ...], frozenset[str]]]


@dataclass(frozen=True)
class NdAlgebra:
    """Finite set-valued algebra over a signature.

    ``interpretation[conn][args]`` is the set of possible outputs for that
    argument tuple; an empty cell makes the algebra partial.
    """

    signature: Signature
    values: tuple[str, ...]
    interpretation: Interpretation
    # derived lookup tables, not part of the algebra's identity
    _index: Mapping[str, int] = field(compare=False, repr=False, default=None)
    _tables: Mapping[str, Mapping[tuple[int, ...], tuple[int, ...]]] = \
        field(compare=False, repr=False, default=None)

    def __post_init__(self):
        values = tuple(self.values)
        if len(set(values)) != len(values) or not values:
            raise SemanticsError("values must be non-empty and distinct")
        index = {v: i for i, v in enumerate(values)}
        interp: dict[str, dict[tuple[str, ...], frozenset[str]]] = {}
        tables: dict[str, dict[tuple[int, ...], tuple[int, ...]]] = {}
        for conn, arity in self.signature.connectives.items():
            cells = self.interpretation.get(conn)
            if cells is None:
                raise SemanticsError(f"no interpretation for connective {conn!r}")
            fixed: dict[tuple[str, ...], frozenset[str]] = {}
            fixed_int: dict[tuple[int, ...], tuple[int, ...]] = {}
            want = len(values) ** arity
            if len(cells) != want:
                raise SemanticsError(
                    f"interpretation of {conn!r} has {len(cells)} cells, "
                    f"expected {want}")
            for args, out in cells.items():
                args = tuple(args)
                if len(args) != arity or any(a not in index for a in args):
                    raise SemanticsError(f"bad cell key {args!r} for {conn!r}")
                out = frozenset(out)
                if not out <= set(values):
                    raise SemanticsError(f"cell {conn}{args} not within values")
                fixed[args] = out
                fixed_int[tuple(index[a] for a in args)] = \
                    tuple(i for i, v in enumerate(values) if v in out)
            interp[conn] = {tuple(values[i] for i in ik): fixed[
                tuple(values[i] for i in ik)] for ik in sorted(fixed_int)}
            tables[conn] = {ik: fixed_int[ik] for ik in sorted(fixed_int)}
        extra = set(self.interpretation) - set(self.signature.connectives)
        if extra:
            raise SemanticsError(f"interpretation for undeclared {sorted(extra)}")
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "interpretation", interp)
        object.__setattr__(self, "_index", index)
        object.__setattr__(self, "_tables", tables)


def check_total(alg: NdAlgebra) -> bool:
    """True iff no interpretation cell is empty."""
    return all(out for cells in alg.interpretation.values()
               for out in cells.values())


def _require_total(alg: NdAlgebra):
    if not check_total(alg):
        raise NonTotalAlgebraError(
            "operation requires a total algebra; some cell is empty")


@dataclass(frozen=True)
class NdMatrix:
    """One-dimensional matrix: algebra plus a designated value set."""

    algebra: NdAlgebra
    designated: frozenset[str]

    def __post_init__(self):
        designated = frozenset(self.designated)
        if not designated <= set(self.algebra.values):
            raise SemanticsError("designated set must be a subset of values")
        object.__setattr__(self, "designated", designated)


@dataclass(frozen=True)
class BMatrix:
    """Two-dimensional matrix: algebra plus designated and antidesignated
    sets; the two may freely overlap."""

    algebra: NdAlgebra
    designated: frozenset[str]
    antidesignated: frozenset[str]

    def __post_init__(self):
        designated = frozenset(self.designated)
        anti = frozenset(self.antidesignated)
        values = set(self.algebra.values)
        if not designated <= values or not anti <= values:
            raise SemanticsError("distinguished sets must be subsets of values")
        object.__setattr__(self, "designated", designated)
        object.__setattr__(self, "antidesignated", anti)


Matrix = Union[NdMatrix, BMatrix]


class Attitude(Enum):
    """The four cognitive attitudes indexing a BStatement's components."""

    ACC = "acc"
    NACC = "nacc"
    REJ = "rej"
    NREJ = "nrej"

    def flip(self) -> "Attitude":
        return _FLIP[self]


_FLIP = {Attitude.ACC: Attitude.NACC, Attitude.NACC: Attitude.ACC,
         Attitude.REJ: Attitude.NREJ, Attitude.NREJ: Attitude.REJ}


# ---------------------------------------------------------------------------
# statements and verdicts


def _fset(fs: Iterable[Formula]) -> frozenset[Formula]:
    fs = frozenset(fs)
    for f in fs:
        if not isinstance(f, Formula):
            raise SemanticsError(f"not a formula: {f!r}")
    return fs


@dataclass(frozen=True)
class Statement1D:
    """A pair of finite formula sets: antecedent and succedent."""

    antecedent: frozenset[Formula] = frozenset()
    succedent: frozenset[Formula] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "antecedent", _fset(self.antecedent))
        object.__setattr__(self, "succedent", _fset(self.succedent))

    def formulas(self) -> tuple[Formula, ...]:
        return _sorted(self.antecedent) + _sorted(self.succedent)


@dataclass(frozen=True)
class BStatement:
    """Four attitude-indexed finite formula sets.  The antecedent pair is
    (acc, rej); the succedent pair is (nacc, nrej)."""

    acc: frozenset[Formula] = frozenset()
    nacc: frozenset[Formula] = frozenset()
    rej: frozenset[Formula] = frozenset()
    nrej: frozenset[Formula] = frozenset()

    def __post_init__(self):
        for att in ("acc", "nacc", "rej", "nrej"):
            object.__setattr__(self, att, _fset(getattr(self, att)))

    def get(self, attitude: Attitude) -> frozenset[Formula]:
        return getattr(self, attitude.value)

    def formulas(self) -> tuple[Formula, ...]:
        return (_sorted(self.acc) + _sorted(self.nacc)
                + _sorted(self.rej) + _sorted(self.nrej))


def _sorted(fs: Iterable[Formula]) -> tuple[Formula, ...]:
    return tuple(sorted(fs, key=str))


@dataclass(frozen=True)
class Valuation:
    """A coherent assignment on a subformula-closed domain, reported in
    enumeration order: variables first, then compounds bottom-up."""

    domain: tuple[Formula, ...]
    assignment: Mapping[Formula, str]

    def __call__(self, f: Formula) -> str:
        return self.assignment[f]

    def lines(self) -> list[str]:
        return [f"v({f}) = {self.assignment[f]}" for f in self.domain]

    def __str__(self) -> str:
        return ", ".join(f"v({f})={self.assignment[f]}" for f in self.domain)


@dataclass(frozen=True)
class Verdict:
    """Outcome of a semantic check; invalid verdicts carry the first
    countermodel in enumeration order."""

    valid: bool
    countermodel: Valuation | None = None

    def __bool__(self) -> bool:
        return self.valid


# ---------------------------------------------------------------------------
# valuation enumeration

# plan entry: (None, var_name) for a variable, (conn, arg_positions) otherwise
_Plan = list[tuple]


def _compile(alg: NdAlgebra, fs: Sequence[Formula]):
    """Order the subformula closure (variables first, then compounds
    bottom-up) and compile per-position evaluation instructions."""
    seq = subformula_sequence(fs)
    doms = [f for f in seq if isinstance(f, Var)] + \
           [f for f in seq if not isinstance(f, Var)]
    pos = {f: i for i, f in enumerate(doms)}
    plan: _Plan = []
    conns = alg.signature.connectives
    for f in doms:
        if isinstance(f, Var):
            plan.append((None, f.name))
        else:
            if f.conn not in conns:
                raise SemanticsError(f"connective {f.conn!r} not interpreted")
            if conns[f.conn] != len(f.args):
                raise SemanticsError(f"arity mismatch for {f.conn!r} in {f}")
            plan.append((f.conn, tuple(pos[a] for a in f.args)))
    return tuple(doms), plan


def _iter_raw(alg: NdAlgebra, plan: _Plan,
              fixed: Mapping[str, int] | None = None) -> Iterator[list[int]]:
    """Yield every coherent assignment as a reused list of value indices.
    Depth-first, candidate values in declared order, earlier positions
    varying slowest."""
    n = len(plan)
    vals = [0] * n
    tables = alg._tables
    all_values = tuple(range(len(alg.values)))

    def rec(i: int) -> Iterator[list[int]]:
        if i == n:
            yield vals
            return
        kind, info = plan[i]
        if kind is None:
            if fixed is not None and info in fixed:
                candidates: Sequence[int] = (fixed[info],)
            else:
                candidates = all_values
        else:
            candidates = tables[kind][tuple(vals[j] for j in info)]
        for c in candidates:
            vals[i] = c
            yield from rec(i + 1)

    return rec(0)


def _to_valuation(alg: NdAlgebra, doms: tuple[Formula, ...],
                  vals: Sequence[int]) -> Valuation:
    names = alg.values
    return Valuation(doms, {f: names[v] for f, v in zip(doms, vals)})


def coherent_valuations(alg: NdAlgebra, fs: Iterable[Formula],
                        ) -> list[Valuation]:
    """All coherent valuations on the subformula closure of ``fs`` in
    enumeration order.  Requires a total algebra."""
    _require_total(alg)
    doms, plan = _compile(alg, _sorted(fs))
    return [_to_valuation(alg, doms, vals)
            for vals in _iter_raw(alg, plan)]


def induced_multifunction(alg: NdAlgebra, f: Formula,
                          inputs: Sequence[str]) -> frozenset[str]:
    """The value set a formula can take when its distinct variables (in
    first-occurrence order) are fixed to ``inputs``."""
    _require_total(alg)
    vs = variables(f)
    if len(vs) != len(inputs):
        raise SemanticsError(
            f"formula has {len(vs)} variables, got {len(inputs)} inputs")
    index = alg._index
    for x in inputs:
        if x not in index:
            raise SemanticsError(f"unknown value {x!r}")
    fixed = {v: index[x] for v, x in zip(vs, inputs)}
    doms, plan = _compile(alg, [f])
    root = len(doms) - 1
    out = {vals[root] for vals in _iter_raw(alg, plan, fixed)}
    return frozenset(alg.values[i] for i in out)


# ---------------------------------------------------------------------------
# entailment

def entails_1d(m: NdMatrix, s: Statement1D) -> Verdict:
    """SET-SET entailment: valid iff every coherent valuation that
    designates the whole antecedent designates some succedent formula."""
    _require_total(m.algebra)
    doms, plan = _compile(m.algebra, s.formulas())
    pos = {f: i for i, f in enumerate(doms)}
    des = frozenset(m.algebra._index[v] for v in m.designated)
    ant = [pos[f] for f in s.antecedent]
    suc = [pos[f] for f in s.succedent]
    for vals in _iter_raw(m.algebra, plan):
        if all(vals[i] in des for i in ant) and \
                not any(vals[i] in des for i in suc):
            return Verdict(False, _to_valuation(m.algebra, doms, vals))
    return Verdict(True)


def b_entails(b: BMatrix, s: BStatement) -> Verdict:
    """B-entailment: valid iff no coherent valuation places acc inside the
    designated set, nacc outside it, rej inside the antidesignated set and
    nrej outside it, all at once."""
    _require_total(b.algebra)
    alg = b.algebra
    doms, plan = _compile(alg, s.formulas())
    pos = {f: i for i, f in enumerate(doms)}
    des = frozenset(alg._index[v] for v in b.designated)
    anti = frozenset(alg._index[v] for v in b.antidesignated)
    acc = [pos[f] for f in s.acc]
    nacc = [pos[f] for f in s.nacc]
    rej = [pos[f] for f in s.rej]
    nrej = [pos[f] for f in s.nrej]
    for vals in _iter_raw(alg, plan):
        if (all(vals[i] in des for i in acc)
                and not any(vals[i] in des for i in nacc)
                and all(vals[i] in anti for i in rej)
                and not any(vals[i] in anti for i in nrej)):
            return Verdict(False, _to_valuation(alg, doms, vals))
    return Verdict(True)


def aspect_entails(b: BMatrix, aspect: str, s: Statement1D) -> Verdict:
    """One-dimensional consequence recovered from a B-matrix: the t-aspect
    reads the statement through acc/nacc, the f-aspect through rej/nrej."""
    if aspect in ("t", "t-aspect"):
        return b_entails(b, BStatement(acc=s.antecedent, nacc=s.succedent))
    if aspect in ("f", "f-aspect"):
        return b_entails(b, BStatement(rej=s.antecedent, nrej=s.succedent))
    raise SemanticsError(f"unknown aspect {aspect!r}; use 't' or 'f'")


def b_product(m1: NdMatrix, m2: NdMatrix) -> BMatrix:
    """Combine two matrices sharing one algebra into a B-matrix whose
    designated set comes from the first and antidesignated set from the
    second."""
    if m1.algebra != m2.algebra:
        raise SemanticsError(
            "product requires the two matrices to share an identical algebra")
    return BMatrix(m1.algebra, m1.designated, m2.designated)


# ---------------------------------------------------------------------------
# strong homomorphisms

def strong_hom_report(m1: NdMatrix, m2: NdMatrix, mapping: Mapping[str, str],
                      subsig: Signature) -> list[str]:
    """Violations of the strong-homomorphism conditions for ``mapping``
    restricted to the connectives of ``subsig``; empty means it holds."""
    a1, a2 = m1.algebra, m2.algebra
    for v in a1.values:
        if v not in mapping:
            raise SemanticsError(f"mapping not total: missing {v!r}")
        if mapping[v] not in a2._index:
            raise SemanticsError(f"mapping image {mapping[v]!r} not a value")
    for conn, arity in subsig.connectives.items():
        if a1.signature.connectives.get(conn) != arity or \
                a2.signature.connectives.get(conn) != arity:
            raise SemanticsError(
                f"connective {conn!r}/{arity} not shared by both matrices")
    out = []
    for conn in sorted(subsig.connectives):
        arity = subsig.connectives[conn]
        for args, cell in a1.interpretation[conn].items():
            mapped_args = tuple(mapping[a] for a in args)
            target = a2.interpretation[conn][mapped_args]
            image = {mapping[z] for z in cell}
            if not image <= target:
                out.append(
                    f"{conn}({','.join(args)}): image {sorted(image)} not "
                    f"within {conn}({','.join(mapped_args)}) = {sorted(target)}")
    for x in a1.values:
        if (x in m1.designated) != (mapping[x] in m2.designated):
            out.append(f"designation not preserved at {x!r} -> {mapping[x]!r}")
    return out


def check_strong_hom(m1: NdMatrix, m2: NdMatrix, mapping: Mapping[str, str],
                     subsig: Signature) -> bool:
    """True iff ``mapping`` is a strong homomorphism on ``subsig``: cell
    images stay within target cells and designation is preserved both ways."""
    return not strong_hom_report(m1, m2, mapping, subsig)


# ---------------------------------------------------------------------------
# separators and expressiveness

_STRADDLES = object()  # sentinel: value set meets both sides of every
                       # distinguished set, so the formula separates nothing


def _distinguished(target: Matrix) -> list[tuple[str, frozenset[str]]]:
    if isinstance(target, BMatrix):
        return [("designated", target.designated),
                ("antidesignated", target.antidesignated)]
    return [("designated", target.designated)]


def _induced_set_pruned(alg: NdAlgebra, plan: _Plan, root: int,
                        x: int, dist: list[frozenset[int]]):
    """Exact set of root values reachable with the single variable fixed to
    ``x``; aborts with the _STRADDLES sentinel as soon as the set meets both
    sides of every distinguished set."""
    achieved: set[int] = set()
    n_dist = len(dist)
    inside = [False] * n_dist
    outside = [False] * n_dist

    for vals in _iter_raw(alg, plan, {"p": x}):
        v = vals[root]
        if v in achieved:
            continue
        achieved.add(v)
        straddling = True
        for i, d in enumerate(dist):
            if v in d:
                inside[i] = True
            else:
                outside[i] = True
            if not (inside[i] and outside[i]):
                straddling = False
        if straddling:
            return _STRADDLES
    return frozenset(achieved)


class _SeparatorScan:
    """Shared machinery for separator search over one target matrix;
    caches per-formula compiled plans and induced sets."""

    def __init__(self, target: Matrix):
        self.target = target
        self.alg = target.algebra
        _require_total(self.alg)
        self.dist = _distinguished(target)
        self.dist_int = [frozenset(self.alg._index[v] for v in d)
                         for _, d in self.dist]
        self.plans: dict[Formula, tuple] = {}
        self.sets: dict[tuple[Formula, int], object] = {}

    def induced(self, theta: Formula, x: int):
        key = (theta, x)
        got = self.sets.get(key)
        if got is None:
            compiled = self.plans.get(theta)
            if compiled is None:
                doms, plan = _compile(self.alg, [theta])
                compiled = (plan, len(doms) - 1)
                self.plans[theta] = compiled
            plan, root = compiled
            got = _induced_set_pruned(self.alg, plan, root, x, self.dist_int)
            self.sets[key] = got
        return got

    def separates(self, theta: Formula, x: int, y: int):
        """None, or (set-name, value-landing-inside) when theta puts x and
        y on opposite sides of that distinguished set."""
        sx = self.induced(theta, x)
        if sx is _STRADDLES:
            return None
        sy = self.induced(theta, y)
        if sy is _STRADDLES:
            return None
        for (name, _), d in zip(self.dist, self.dist_int):
            if sx <= d and not (sy & d):
                return name, x
            if sy <= d and not (sx & d):
                return name, y
        return None


def separator_for_pair(target: Matrix, x: str, y: str,
                       max_depth: int) -> Formula | None:
    """First unary formula (in enumeration order) whose induced value sets
    at ``x`` and ``y`` fall on opposite sides of a distinguished set; None
    if no formula up to ``max_depth`` does."""
    found = _separator_search(_SeparatorScan(target), x, y, max_depth)
    return found[0] if found else None


def _separator_search(scan: _SeparatorScan, x: str, y: str, max_depth: int):
    if x == y:
        raise SemanticsError("separator search requires two distinct values")
    index = scan.alg._index
    for v in (x, y):
        if v not in index:
            raise SemanticsError(f"unknown value {v!r}")
    xi, yi = index[x], index[y]
    for theta in enumerate_unary_formulas(scan.alg.signature, max_depth):
        hit = scan.separates(theta, xi, yi)
        if hit:
            return theta, hit[0], scan.alg.values[hit[1]]
    return None


@dataclass(frozen=True)
class PairSeparation:
    """One unordered value pair's separation result; ``into`` is the value
    whose induced set lies inside the named distinguished set."""

    x: str
    y: str
    separator: Formula | None
    via: str | None = None
    into: str | None = None


@dataclass(frozen=True)
class ExpressivenessReport:
    target_kind: str
    max_depth: int
    entries: tuple[PairSeparation, ...]
    sufficiently_expressive: bool

    def lines(self) -> list[str]:
        out = [f"expressiveness report ({self.target_kind}, "
               f"depth <= {self.max_depth})"]
        for e in self.entries:
            if e.separator is None:
                out.append(f"  <{e.x},{e.y}>: none up to depth {self.max_depth}")
            else:
                out.append(f"  <{e.x},{e.y}>: {e.separator}"
                           f"  [{e.into} inside {e.via}]")
        verdict = "sufficiently expressive (up to bound)" if \
            self.sufficiently_expressive else "not separated within bound"
        out.append(f"  => {verdict}")
        return out


def expressiveness_report(target: Matrix, max_depth: int,
                          ) -> ExpressivenessReport:
    """Separator search over every unordered pair of distinct values."""
    scan = _SeparatorScan(target)
    values = scan.alg.values
    entries = []
    for i, x in enumerate(values):
        for y in values[i + 1:]:
            found = _separator_search(scan, x, y, max_depth)
            if found:
                entries.append(PairSeparation(x, y, *found))
            else:
                entries.append(PairSeparation(x, y, None))
    return ExpressivenessReport(
        "bmatrix" if isinstance(target, BMatrix) else "matrix",
        max_depth, tuple(entries),
        all(e.separator is not None for e in entries))


# ---------------------------------------------------------------------------
# schema validation

def validate_rule(target: Matrix, rule) -> Verdict:
    """Check a rule schema semantically: its variables are read as atoms
    and the schema statement is run through the matching entailment (valid
    schemas stay valid under all substitutions)."""
    if rule.dimension == 1:
        if not isinstance(target, NdMatrix):
            raise SemanticsError(
                f"rule {rule.name!r} is one-dimensional; target is not an "
                f"ordinary matrix")
        return entails_1d(target,
                          Statement1D(rule.antecedent, rule.succedent))
    if rule.dimension == 2:
        if not isinstance(target, BMatrix):
            raise SemanticsError(
                f"rule {rule.name!r} is two-dimensional; target is not a "
                f"B-matrix")
        return b_entails(target, BStatement(acc=rule.acc, nacc=rule.nacc,
                                            rej=rule.rej, nrej=rule.nrej))
    raise SemanticsError(f"bad rule dimension {rule.dimension!r}")
