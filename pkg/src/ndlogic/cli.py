"""Command-line front end.

Thin adapters over the library: every verdict printed here equals the
corresponding library call on the parsed inputs.  Matrices and calculi
are loaded from ``builtin:`` names, file paths, ``@file`` references, or
inline JSON; statements, trees, and theta sets from inline JSON or
``@file``.  Exit codes: 0 for valid/proved/pass, 1 for the checked
property failing (countermodel or open label printed), 2 for usage or
input errors, reported as a one-line diagnostic.
"""

from __future__ import annotations

import sys
from functools import wraps

import click

from .calculi import (Calculus, Proved, Saturated, check_proof,
                      render_tree_dot, render_tree_text)
from .calculi import prove as run_prove
from .errors import NdlogicError
from .language import parse_formula
from .logics import (cpl_pos, example1, example1_rules, example2,
                     hmci_axioms, mci_artifacts, mk_matrix,
                     verify_paper_suite)
from .semantics import (BMatrix, BStatement, NdMatrix, Statement1D,
                        b_entails, b_product, entails_1d,
                        expressiveness_report, validate_rule)
from . import serialize


class CliInputError(Exception):
    """Bad command input; reported as a one-line diagnostic, exit 2."""


def _fail(message: str) -> "CliInputError":
    return CliInputError(message)


# ---------------------------------------------------------------------------
# input resolution


def _read_source(spec: str, what: str) -> str:
    """Raw text behind a spec: inline JSON as-is, @file or bare path read
    from disk."""
    if spec.lstrip().startswith(("{", "[")):
        return spec
    path = spec[1:] if spec.startswith("@") else spec
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as e:
        raise _fail(f"cannot read {what} from {path!r}: {e.strerror}")


_MATRIX_BUILTINS = {
    "mci5": lambda: mci_artifacts().m5,
    "mci5-rej": lambda: mci_artifacts().m5_rej,
    "mci-b": lambda: mci_artifacts().b5,
    "ex1": lambda: example1()[0],
    "ex2": lambda: example2()[0],
}

_CALCULUS_BUILTINS = {
    "hmci2d": lambda: mci_artifacts().hmci2d,
    "ex2-calc": lambda: example2()[1],
    "cplpos": cpl_pos,
}


def _builtin(name: str):
    """Resolve a builtin artifact name, without the ``builtin:`` prefix."""
    if name in _MATRIX_BUILTINS:
        return _MATRIX_BUILTINS[name]()
    if name in _CALCULUS_BUILTINS:
        return _CALCULUS_BUILTINS[name]()
    head, sep, arg = name.rpartition(":")
    if sep:
        try:
            idx = int(arg)
        except ValueError:
            raise _fail(f"builtin {name!r}: index {arg!r} is not an integer")
        if head == "mk":
            return mk_matrix(idx).matrix
        if head == "hmci":
            return hmci_axioms(idx).calculus
        if head == "ex1-rules":
            return example1_rules(idx)
    known = sorted(_MATRIX_BUILTINS) + sorted(_CALCULUS_BUILTINS) + \
        ["mk:<k>", "hmci:<k>", "ex1-rules:<i>"]
    raise _fail(f"unknown builtin {name!r}; known: {', '.join(known)}")


def _load_matrix(spec: str) -> NdMatrix | BMatrix:
    if spec.startswith("builtin:"):
        got = _builtin(spec[len("builtin:"):])
        if not isinstance(got, (NdMatrix, BMatrix)):
            raise _fail(f"{spec!r} names a calculus, not a matrix")
        return got
    return serialize.matrix_from_data(
        serialize.loads(_read_source(spec, "matrix")))


def _load_calculus(spec: str) -> Calculus:
    if spec.startswith("builtin:"):
        got = _builtin(spec[len("builtin:"):])
        if not isinstance(got, Calculus):
            raise _fail(f"{spec!r} names a matrix, not a calculus")
        return got
    return serialize.calculus_from_data(
        serialize.loads(_read_source(spec, "calculus")))


def _load_statement(spec: str, sig=None):
    return serialize.statement_from_data(
        serialize.loads(_read_source(spec, "statement")), sig)


def _load_theta(spec: str, sig=None) -> frozenset:
    data = serialize.loads(_read_source(spec, "theta"))
    if not isinstance(data, list) or \
            not all(isinstance(x, str) for x in data):
        raise _fail("theta must be a JSON list of formula strings")
    return frozenset(parse_formula(t, sig) for t in data)


def _statement_option(statement, bstatement, sig=None):
    """Resolve the mutually exclusive --statement/--bstatement pair."""
    if (statement is None) == (bstatement is None):
        raise _fail("exactly one of --statement/--bstatement is required")
    if statement is not None:
        s = _load_statement(statement, sig)
        if not isinstance(s, Statement1D):
            raise _fail("--statement requires antecedent/succedent keys")
        return s
    s = _load_statement(bstatement, sig)
    if not isinstance(s, BStatement):
        raise _fail("--bstatement requires acc/nacc/rej/nrej keys")
    return s


def _guarded(fn):
    """Report domain and input errors as one-line diagnostics, exit 2."""

    @wraps(fn)
    def run(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except (CliInputError, NdlogicError) as e:
            click.echo(f"error: {e}", err=True)
            sys.exit(2)

    return run


def _emit(text: str, out_path: str | None):
    if out_path is None:
        click.echo(text, nl=False)
    else:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)


# ---------------------------------------------------------------------------
# commands


@click.group()
def main():
    """Workbench for finite-valued non-deterministic matrix logics."""


@main.command()
@click.option("--matrix", "matrix_spec", required=True,
              help="Matrix: builtin:NAME, file path, @file, or inline JSON.")
@click.option("--statement", default=None,
              help="One-dimensional statement as inline JSON or @file.")
@click.option("--bstatement", default=None,
              help="Two-dimensional statement as inline JSON or @file.")
@_guarded
def check(matrix_spec, statement, bstatement):
    """Decide a statement against a matrix; print the first countermodel."""
    m = _load_matrix(matrix_spec)
    s = _statement_option(statement, bstatement, m.algebra.signature)
    if isinstance(s, Statement1D):
        if not isinstance(m, NdMatrix):
            raise _fail("a one-dimensional statement needs a plain matrix "
                        "(no antidesignated set)")
        verdict = entails_1d(m, s)
    else:
        if not isinstance(m, BMatrix):
            raise _fail("a two-dimensional statement needs a B-matrix "
                        "(matrix with an antidesignated set)")
        verdict = b_entails(m, s)
    if verdict.valid:
        click.echo("valid")
        sys.exit(0)
    click.echo("invalid; countermodel:")
    for line in verdict.countermodel.lines():
        click.echo(f"  {line}")
    sys.exit(1)


@main.command()
@click.option("--calculus", "calculus_spec", required=True,
              help="Calculus: builtin:NAME, file path, @file, or inline JSON.")
@click.option("--statement", default=None,
              help="One-dimensional statement as inline JSON or @file.")
@click.option("--bstatement", default=None,
              help="Two-dimensional statement as inline JSON or @file.")
@click.option("--theta", default=None,
              help="Theta set as a JSON list of formulas; defaults to the "
                   "calculus theta.")
@click.option("--max-nodes", type=int, default=10 ** 6, show_default=True)
@click.option("--max-depth", type=int, default=None,
              help="Depth limit; defaults to four times the fence size.")
@click.option("--dot", is_flag=True, help="Render the proof tree as DOT.")
@_guarded
def prove(calculus_spec, statement, bstatement, theta, max_nodes, max_depth,
          dot):
    """Search for a proof; print the tree, or why none was found."""
    c = _load_calculus(calculus_spec)
    s = _statement_option(statement, bstatement)
    theta_set = _load_theta(theta) if theta is not None else c.theta
    if theta_set is None:
        raise _fail("no theta: pass --theta or use a calculus that has one")
    kwargs = {"max_nodes": max_nodes}
    if max_depth is not None:
        kwargs["max_depth"] = max_depth
    outcome = run_prove(c, s, theta_set, **kwargs)
    if isinstance(outcome, Proved):
        render = render_tree_dot if dot else render_tree_text
        click.echo(render(outcome.tree, c.dimension))
        sys.exit(0)
    if isinstance(outcome, Saturated):
        click.echo("not proved: saturated at open label "
                   + outcome.label.render(c.dimension))
        sys.exit(1)
    click.echo(f"not proved: {outcome.limit} limit reached "
               f"({outcome.nodes} nodes, depth {outcome.depth})")
    sys.exit(1)


@main.command("check-proof")
@click.option("--calculus", "calculus_spec", required=True,
              help="Calculus: builtin:NAME, file path, @file, or inline JSON.")
@click.option("--statement", default=None,
              help="One-dimensional statement as inline JSON or @file.")
@click.option("--bstatement", default=None,
              help="Two-dimensional statement as inline JSON or @file.")
@click.option("--tree", "tree_spec", required=True,
              help="Derivation tree as inline JSON or @file.")
@_guarded
def check_proof_cmd(calculus_spec, statement, bstatement, tree_spec):
    """Check a transcribed derivation tree against calculus and statement."""
    c = _load_calculus(calculus_spec)
    s = _statement_option(statement, bstatement)
    tree = serialize.tree_from_data(
        serialize.loads(_read_source(tree_spec, "tree")))
    if check_proof(c, s, tree):
        click.echo("proof ok")
        sys.exit(0)
    click.echo("proof rejected")
    sys.exit(1)


@main.command()
@click.argument("left")
@click.argument("right")
@click.option("-o", "--output", default=None,
              help="Write the product matrix JSON here instead of stdout.")
@_guarded
def product(left, right, output):
    """Combine two matrices over one algebra into a B-matrix."""
    m1, m2 = _load_matrix(left), _load_matrix(right)
    if not isinstance(m1, NdMatrix) or not isinstance(m2, NdMatrix):
        raise _fail("product needs two plain matrices")
    b = b_product(m1, m2)
    _emit(serialize.dumps(serialize.matrix_to_data(b)), output)
    sys.exit(0)


@main.command()
@click.option("--matrix", "matrix_spec", required=True,
              help="Matrix: builtin:NAME, file path, @file, or inline JSON.")
@click.option("--depth", type=int, default=3, show_default=True,
              help="Maximum separator formula depth.")
@_guarded
def separators(matrix_spec, depth):
    """Search for unary separators for every pair of values."""
    m = _load_matrix(matrix_spec)
    report = expressiveness_report(m, depth)
    for line in report.lines():
        click.echo(line)
    sys.exit(0 if report.sufficiently_expressive else 1)


@main.command("validate-calculus")
@click.option("--calculus", "calculus_spec", required=True,
              help="Calculus: builtin:NAME, file path, @file, or inline JSON.")
@click.option("--matrix", "matrix_spec", required=True,
              help="Matrix: builtin:NAME, file path, @file, or inline JSON.")
@_guarded
def validate_calculus(calculus_spec, matrix_spec):
    """Check every rule of a calculus for validity in a matrix."""
    c = _load_calculus(calculus_spec)
    m = _load_matrix(matrix_spec)
    bad = 0
    for r in c.rules:
        verdict = validate_rule(m, r)
        if verdict.valid:
            click.echo(f"ok   {r.name}")
        else:
            bad += 1
            click.echo(f"BAD  {r.name}; countermodel: "
                       + str(verdict.countermodel))
    click.echo(f"{len(c.rules) - bad}/{len(c.rules)} rules valid")
    sys.exit(0 if bad == 0 else 1)


@main.command()
@click.argument("name")
@click.option("-o", "--output", default=None,
              help="Write the artifact JSON here instead of stdout.")
@_guarded
def builtin(name, output):
    """Print a bundled artifact as JSON; NAME may carry a builtin: prefix."""
    if name.startswith("builtin:"):
        name = name[len("builtin:"):]
    got = _builtin(name)
    if isinstance(got, (NdMatrix, BMatrix)):
        data = serialize.matrix_to_data(got)
    else:
        data = serialize.calculus_to_data(got)
    _emit(serialize.dumps(data), output)
    sys.exit(0)


@main.command("verify-suite")
@click.option("--chain-k", type=int, default=3, show_default=True,
              help="Largest family index exercised by the chain items.")
@click.option("--timings", is_flag=True,
              help="Include per-item wall-clock times (non-reproducible).")
@_guarded
def verify_suite(chain_k, timings):
    """Run the bundled verification battery and report per-item results."""
    report = verify_paper_suite(chain_k=chain_k)
    for line in report.lines(timings=timings):
        click.echo(line)
    sys.exit(0 if report.passed else 1)


if __name__ == "__main__":
    main()
