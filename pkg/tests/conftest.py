"""Shared fixtures: golden interpretation tables written out by hand and
the matrices built from them.  Tests compare library-constructed artifacts
against these frozen literals, so the tables here must never be generated
by the code under test.
"""

import pytest

from ndlogic.language import Signature
from ndlogic.semantics import BMatrix, NdAlgebra, NdMatrix

SIG5 = Signature({"neg": 1, "cons": 1, "and": 2, "or": 2, "imp": 2},
                 {"and": "&", "or": "|", "imp": "->"})

V5 = ("f", "F", "I", "T", "t")
D5 = frozenset({"I", "T", "t"})
R5 = frozenset({"f", "I", "T"})

NEG5 = {
    ("f",): {"I", "t"},
    ("F",): {"T"},
    ("I",): {"I", "t"},
    ("T",): {"F"},
    ("t",): {"f"},
}

CONS5 = {
    ("f",): {"T"},
    ("F",): {"T"},
    ("I",): {"F"},
    ("T",): {"T"},
    ("t",): {"T"},
}

AND5 = {
    ("f", "f"): {"f"}, ("f", "F"): {"f"}, ("f", "I"): {"f"},
    ("f", "T"): {"f"}, ("f", "t"): {"f"},
    ("F", "f"): {"f"}, ("F", "F"): {"f"}, ("F", "I"): {"f"},
    ("F", "T"): {"f"}, ("F", "t"): {"f"},
    ("I", "f"): {"f"}, ("I", "F"): {"f"}, ("I", "I"): {"I", "t"},
    ("I", "T"): {"I", "t"}, ("I", "t"): {"I", "t"},
    ("T", "f"): {"f"}, ("T", "F"): {"f"}, ("T", "I"): {"I", "t"},
    ("T", "T"): {"I", "t"}, ("T", "t"): {"I", "t"},
    ("t", "f"): {"f"}, ("t", "F"): {"f"}, ("t", "I"): {"I", "t"},
    ("t", "T"): {"I", "t"}, ("t", "t"): {"I", "t"},
}

OR5 = {
    ("f", "f"): {"f"}, ("f", "F"): {"f"}, ("f", "I"): {"I", "t"},
    ("f", "T"): {"I", "t"}, ("f", "t"): {"I", "t"},
    ("F", "f"): {"f"}, ("F", "F"): {"f"}, ("F", "I"): {"I", "t"},
    ("F", "T"): {"I", "t"}, ("F", "t"): {"I", "t"},
    ("I", "f"): {"I", "t"}, ("I", "F"): {"I", "t"}, ("I", "I"): {"I", "t"},
    ("I", "T"): {"I", "t"}, ("I", "t"): {"I", "t"},
    ("T", "f"): {"I", "t"}, ("T", "F"): {"I", "t"}, ("T", "I"): {"I", "t"},
    ("T", "T"): {"I", "t"}, ("T", "t"): {"I", "t"},
    ("t", "f"): {"I", "t"}, ("t", "F"): {"I", "t"}, ("t", "I"): {"I", "t"},
    ("t", "T"): {"I", "t"}, ("t", "t"): {"I", "t"},
}

IMP5 = {
    ("f", "f"): {"I", "t"}, ("f", "F"): {"I", "t"}, ("f", "I"): {"I", "t"},
    ("f", "T"): {"I", "t"}, ("f", "t"): {"I", "t"},
    ("F", "f"): {"I", "t"}, ("F", "F"): {"I", "t"}, ("F", "I"): {"I", "t"},
    ("F", "T"): {"I", "t"}, ("F", "t"): {"I", "t"},
    ("I", "f"): {"f"}, ("I", "F"): {"f"}, ("I", "I"): {"I", "t"},
    ("I", "T"): {"I", "t"}, ("I", "t"): {"I", "t"},
    ("T", "f"): {"f"}, ("T", "F"): {"f"}, ("T", "I"): {"I", "t"},
    ("T", "T"): {"I", "t"}, ("T", "t"): {"I", "t"},
    ("t", "f"): {"f"}, ("t", "F"): {"f"}, ("t", "I"): {"I", "t"},
    ("t", "T"): {"I", "t"}, ("t", "t"): {"I", "t"},
}

INTERP5 = {"neg": NEG5, "cons": CONS5, "and": AND5, "or": OR5, "imp": IMP5}


def make_alg5() -> NdAlgebra:
    return NdAlgebra(SIG5, V5, INTERP5)


@pytest.fixture(scope="session")
def alg5():
    return make_alg5()


@pytest.fixture(scope="session")
def m5(alg5):
    return NdMatrix(alg5, D5)


@pytest.fixture(scope="session")
def m5_rej(alg5):
    return NdMatrix(alg5, R5)


@pytest.fixture(scope="session")
def b5(alg5):
    return BMatrix(alg5, D5, R5)


# three-valued repair example: one designated value, an operator that pins
# the third value to truth and one that pins falsity to itself

SIG_GH = Signature({"g": 1, "h": 1})
VGH = ("t", "f", "bot")
ALLGH = {"t", "f", "bot"}

INTERP_GH = {
    "g": {("t",): ALLGH, ("f",): ALLGH, ("bot",): {"t"}},
    "h": {("t",): ALLGH, ("f",): {"f"}, ("bot",): ALLGH},
}


@pytest.fixture(scope="session")
def alg_gh():
    return NdAlgebra(SIG_GH, VGH, INTERP_GH)


@pytest.fixture(scope="session")
def m_gh(alg_gh):
    return NdMatrix(alg_gh, frozenset({"t"}))


@pytest.fixture(scope="session")
def b_gh(alg_gh):
    return BMatrix(alg_gh, frozenset({"t"}), frozenset({"f"}))
