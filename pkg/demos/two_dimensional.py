"""Two-dimensional consequence: products, aspects, separators.

Run with: python3 demos/two_dimensional.py
"""

from ndlogic import (BStatement, Statement1D, aspect_entails, b_entails,
                     b_product, entails_1d, expressiveness_report,
                     mci_artifacts, parse_formula)

arts = mci_artifacts()
sig = arts.sigma_mci
p = parse_formula("p", sig)
cp = parse_formula("cons(p)", sig)


def fset(fs):
    return "{" + ", ".join(sorted(map(str, fs))) + "}"


def showb(s):
    return (f"acc{fset(s.acc)} nacc{fset(s.nacc)} "
            f"rej{fset(s.rej)} nrej{fset(s.nrej)}")

# The product pairs an acceptance matrix with a rejection matrix over the
# same algebra; the bundled b5 is exactly this product.
b = b_product(arts.m5, arts.m5_rej)
print("product equals the bundled B-matrix:", b == arts.b5)
print("designated:", sorted(b.designated))
print("antidesignated:", sorted(b.antidesignated))

# A formula may be neither accepted nor rejected (a gap), and accepting a
# formula together with its consistency claim does not force rejecting it.
print()
for s in (BStatement(nacc={p}, nrej={p}),
          BStatement(acc={p, cp}, nrej={p})):
    verdict = b_entails(b, s)
    print(f"{showb(s)}: {'valid' if verdict.valid else 'invalid'}")
    if not verdict.valid:
        print(verdict.countermodel)

# Each one-dimensional relation is recoverable from the product by reading
# the statement through one aspect.
print()
s = Statement1D({p, parse_formula("neg(p)", sig)},
                {parse_formula("q", sig)})
print("t-aspect matches the acceptance matrix:",
      aspect_entails(b, "t", s).valid == entails_1d(arts.m5, s).valid)
print("f-aspect matches the rejection matrix:",
      aspect_entails(b, "f", s).valid == entails_1d(arts.m5_rej, s).valid)

# Separator search: the product distinguishes every pair of values by a
# one-variable formula, while the plain matrix leaves two pairs blind.
print()
print("\n".join(expressiveness_report(b, 1).lines()))
print()
print("\n".join(expressiveness_report(arts.m5, 3).lines()))
