"""Build a matrix by hand, ask consequence questions, read countermodels.

Run with: python3 demos/consequence_basics.py
"""

from ndlogic import (NdAlgebra, NdMatrix, Signature, Statement1D, entails_1d,
                     mci_artifacts, parse_formula)

# A three-valued matrix with one non-deterministic cell: disjunction of two
# designated values may land on either designated value.
sig = Signature({"or": 2}, {"or": "|"})
alg = NdAlgebra(sig, ("0", "h", "1"), {
    "or": {
        ("0", "0"): {"0"}, ("0", "h"): {"h"}, ("0", "1"): {"1"},
        ("h", "0"): {"h"}, ("h", "h"): {"h", "1"}, ("h", "1"): {"1"},
        ("1", "0"): {"1"}, ("1", "h"): {"h", "1"}, ("1", "1"): {"1"},
    },
})
m = NdMatrix(alg, frozenset({"h", "1"}))

p = parse_formula("p", sig)
q = parse_formula("q", sig)
disj = parse_formula("(p | q)", sig)


def fset(fs):
    return "{" + ", ".join(sorted(map(str, fs))) + "}"


def show(s):
    return f"{fset(s.antecedent)} > {fset(s.succedent)}"


print("== hand-built three-valued matrix ==")
for s in (Statement1D({p}, {disj}), Statement1D({disj}, {p, q})):
    verdict = entails_1d(m, s)
    print(f"{show(s)}: {'valid' if verdict.valid else 'invalid'}")
    if not verdict.valid:
        print(verdict.countermodel)

# The bundled five-valued matrix tolerates a contradiction but explodes as
# soon as the contradictory formula is also marked consistent.
arts = mci_artifacts()
mci_sig = arts.sigma_mci
pv = parse_formula("p", mci_sig)
np = parse_formula("neg(p)", mci_sig)
cp = parse_formula("cons(p)", mci_sig)
qv = parse_formula("q", mci_sig)

print()
print("== bundled five-valued matrix ==")
contradiction = Statement1D({pv, np}, {qv})
verdict = entails_1d(arts.m5, contradiction)
print(f"{show(contradiction)}: {'valid' if verdict.valid else 'invalid'}")
print("countermodel keeps the contradiction designated:")
print(verdict.countermodel)

explosion = Statement1D({cp, pv, np}, set())
print(f"{show(explosion)}: "
      f"{'valid' if entails_1d(arts.m5, explosion).valid else 'invalid'}")
