"""Run the built-in verification battery and show that it bites.

Run with: python3 demos/verification_suite.py
"""

from ndlogic import BMatrix, MciArtifacts, mci_artifacts, verify_paper_suite

report = verify_paper_suite(chain_k=2)
print("\n".join(report.lines()))

# Corrupt the product's designated set and re-run: construction checks and
# soundness checks must start failing while derivation re-checks still pass.
arts = mci_artifacts()
broken = MciArtifacts(
    arts.sigma_mci, arts.m5, arts.m5_rej,
    BMatrix(arts.b5.algebra, frozenset({"I", "T"}), arts.b5.antidesignated),
    arts.hmci2d)
bad = verify_paper_suite(artifacts=broken, chain_k=1)
print()
print("with a corrupted product matrix:")
print("\n".join(line for line in bad.lines(timings=False)
                if line.startswith(("FAIL", "OK", "FAILED"))))
