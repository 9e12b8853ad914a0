"""Derivation checking and bounded saturation proof search.

Run with: python3 demos/proof_search.py
"""

from ndlogic import (BStatement, LimitExceeded, Proved, Saturated, check_proof,
                     mci_artifacts, mci_worked_derivations, parse_formula,
                     prove, render_tree_dot, render_tree_text)

arts = mci_artifacts()
calc = arts.hmci2d
sig = arts.sigma_mci

# Transcribed derivations re-check against the calculus and statement.
print("== transcribed derivations ==")
for s, tree in mci_worked_derivations():
    print("re-checks:", check_proof(calc, s, tree))

# The search rebuilds one of them from scratch, bounded by the fence that
# theta spans over the statement's subformulas.
target = BStatement(nacc={parse_formula("cons(neg(cons(p)))", sig)})
out = prove(calc, target, calc.theta)
assert isinstance(out, Proved)
print()
print("== search on a provable statement ==")
print(render_tree_text(out.tree), end="")
print()
print("same tree as DOT, first lines:")
print("\n".join(render_tree_dot(out.tree).splitlines()[:4]))

# An unprovable statement saturates: some branch stays open although every
# applicable instance is already satisfied on it.
gap = BStatement(nacc={parse_formula("p", sig)},
                 nrej={parse_formula("p", sig)})
out = prove(calc, gap, calc.theta)
assert isinstance(out, Saturated)
print()
print("== search on an unprovable statement ==")
print("saturated at open label:", out.label.render(2))

# Tight resource bounds surface as an explicit outcome instead of silence.
out = prove(calc, target, calc.theta, max_nodes=3)
assert isinstance(out, LimitExceeded)
print()
print(f"with max_nodes=3: {out.limit} limit reached "
      f"({out.nodes} nodes, depth {out.depth})")
