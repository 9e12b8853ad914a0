"""Calculi layer tests: rule instantiation, deterministic instance
ordering, derivation checking against hand-built trees, and saturation
proof search with frozen outcomes and renderings."""

import pytest

from ndlogic.calculi import (STAR, Calculus, Label, LimitExceeded, Node,
                             Proved, RuleSchema, Saturated,
                             applicable_instances, check_derivation,
                             check_proof, instantiate_rule, lift_calculus,
                             prove, render_tree_dot, render_tree_text)
from ndlogic.errors import CalculiError, LanguageError
from ndlogic.language import Signature, Var, parse_formula
from ndlogic.semantics import BStatement, Statement1D

p = Var("p")
q = Var("q")

GH = Signature({"g": 1, "h": 1})


def fgh(text):
    return parse_formula(text, GH)


R1 = RuleSchema("r1", 2, acc={p}, rej={p})
R2 = RuleSchema("r2", 2, nacc={fgh("g(p)"), p}, nrej={p})
R3 = RuleSchema("r3", 2, rej={p}, nrej={fgh("h(p)")})
GH_CALC = Calculus("gh", 2, (R1, R2, R3), theta={p})

IMP = Signature({"imp": 2}, {"imp": "->"})


def fi(text):
    return parse_formula(text, IMP)


AX_K = RuleSchema("K", 1, nacc={fi("(p -> (q -> p))")})
MP = RuleSchema("mp", 1, acc={p, fi("(p -> q)")}, nacc={q})
HILBERT = Calculus("mini-hilbert", 1, (AX_K, MP))


# ---------------------------------------------------------------------------
# schemas and calculi


class TestSchemas:
    def test_dim1_aliases(self):
        r = RuleSchema("x", 1, acc={p}, nacc={q})
        assert r.antecedent == frozenset({p})
        assert r.succedent == frozenset({q})

    def test_dim1_rejects_rej_side(self):
        with pytest.raises(CalculiError):
            RuleSchema("x", 1, acc={p}, nrej={p})

    def test_dimension_range(self):
        with pytest.raises(CalculiError):
            RuleSchema("x", 3, acc={p})

    def test_schema_variables_sorted(self):
        r = RuleSchema("x", 2, acc={fgh("g(q)")}, nrej={p})
        assert r.schema_variables() == ("p", "q")

    def test_instantiate(self):
        inst = instantiate_rule(R2, {"p": fgh("h(q)")})
        assert inst.nacc == frozenset({fgh("g(h(q))"), fgh("h(q)")})
        assert inst.nrej == frozenset({fgh("h(q)")})
        assert inst.subst == (("p", fgh("h(q)")),)
        assert inst.branches == 3 and not inst.closing

    def test_instantiate_partial_is_identity(self):
        inst = instantiate_rule(R1, {})
        assert inst.acc == frozenset({p}) and inst.closing

    def test_duplicate_rule_names_rejected(self):
        with pytest.raises(CalculiError):
            Calculus("c", 2, (R1, RuleSchema("r1", 2, acc={p})))

    def test_mixed_dimension_rejected(self):
        with pytest.raises(CalculiError):
            Calculus("c", 2, (R1, AX_K))

    def test_rule_named(self):
        assert GH_CALC.rule_named("r2") is R2
        with pytest.raises(CalculiError):
            GH_CALC.rule_named("nope")

    def test_calculus_theta_validated(self):
        with pytest.raises(LanguageError):
            Calculus("c", 2, (R1,), theta={fgh("g(p)")})

    def test_lift(self):
        lifted = lift_calculus(HILBERT)
        assert lifted.dimension == 2
        assert all(r.dimension == 2 and not r.rej and not r.nrej
                   for r in lifted.rules)
        with pytest.raises(CalculiError):
            lift_calculus(lifted)


# ---------------------------------------------------------------------------
# instance generation


class TestApplicableInstances:
    def test_order_and_skip(self):
        fence = [p, fgh("g(p)"), fgh("h(p)")]
        label = Label({p}, {p})
        insts = applicable_instances(GH_CALC, label, fence)
        # r2 at p is satisfied (p already accepted); closing r1 leads
        assert [(i.rule, dict(i.subst)["p"]) for i in insts] == \
            [("r1", p), ("r3", p)]

    def test_fence_bounds_substitution(self):
        insts = applicable_instances(GH_CALC, Label(), [p, fgh("g(p)")])
        assert [(i.rule, str(dict(i.subst)["p"])) for i in insts] == \
            [("r2", "p")]

    def test_two_variable_rule(self):
        r = RuleSchema("pair", 2, acc={p}, nacc={q})
        c = Calculus("c", 2, (r,))
        insts = applicable_instances(c, Label({p}), [p, fgh("g(p)")])
        assert [dict(i.subst) for i in insts] == \
            [{"p": p, "q": fgh("g(p)")}]

    def test_empty_label_no_antecedent_rules(self):
        insts = applicable_instances(HILBERT, Label(), [p])
        assert insts == []


# ---------------------------------------------------------------------------
# derivation checking


def proof_r2():
    """Hand-built derivation: expand the empty label with r2 at p."""
    return Node(Label(), "r2", (("p", p),), (
        Node(Label({fgh("g(p)")})),
        Node(Label({p})),
        Node(Label(rej={p})),
    ))


class TestCheckDerivation:
    def test_correct_tree(self):
        assert check_derivation(GH_CALC, proof_r2())

    def test_closing_rule_star_child(self):
        t = Node(Label({p}, {p}), "r1", (("p", p),), (Node(STAR),))
        assert check_derivation(GH_CALC, t)

    def test_star_must_be_leaf(self):
        t = Node(STAR, None, None, (Node(STAR),))
        assert not check_derivation(GH_CALC, t)

    def test_leaf_with_rule_rejected(self):
        assert not check_derivation(GH_CALC, Node(Label(), "r2", (("p", p),)))

    def test_unknown_rule_raises(self):
        t = Node(Label(), "zz", (("p", p),), (Node(Label({p})),))
        with pytest.raises(CalculiError):
            check_derivation(GH_CALC, t)

    def test_antecedent_not_contained(self):
        t = Node(Label(), "r1", (("p", p),), (Node(STAR),))
        assert not check_derivation(GH_CALC, t)

    def test_missing_child(self):
        t = proof_r2()
        broken = Node(t.label, t.rule, t.subst, t.children[:2])
        assert not check_derivation(GH_CALC, broken)

    def test_duplicated_child_fails_multiset(self):
        t = proof_r2()
        broken = Node(t.label, t.rule, t.subst,
                      (t.children[0], t.children[0], t.children[2]))
        assert not check_derivation(GH_CALC, broken)

    def test_wrong_child_label(self):
        t = proof_r2()
        broken = Node(t.label, t.rule, t.subst,
                      (Node(Label({fgh("h(p)")})), t.children[1],
                       t.children[2]))
        assert not check_derivation(GH_CALC, broken)

    def test_star_child_under_branching_rule(self):
        t = proof_r2()
        broken = Node(t.label, t.rule, t.subst,
                      (Node(STAR), t.children[1], t.children[2]))
        assert not check_derivation(GH_CALC, broken)

    def test_nonstar_child_under_closing_rule(self):
        t = Node(Label({p}, {p}), "r1", (("p", p),), (Node(Label({p})),))
        assert not check_derivation(GH_CALC, t)


class TestCheckProof:
    S_R2 = BStatement(nacc={fgh("g(p)"), p}, nrej={p})

    def test_accepts(self):
        assert check_proof(GH_CALC, self.S_R2, proof_r2())

    def test_root_outside_antecedent(self):
        assert not check_proof(GH_CALC, self.S_R2, Node(Label({fgh("g(p)")})))

    def test_open_leaf(self):
        assert not check_proof(GH_CALC, self.S_R2, Node(Label()))

    def test_star_root_rejected(self):
        assert not check_proof(GH_CALC, self.S_R2, Node(STAR))

    def test_star_leaves_always_close(self):
        s = BStatement(acc={p}, rej={p}, nacc={fgh("g(p)")})
        t = Node(Label({p}, {p}), "r1", (("p", p),), (Node(STAR),))
        assert check_proof(GH_CALC, s, t)

    def test_dimension_mismatch(self):
        with pytest.raises(CalculiError):
            check_proof(GH_CALC, Statement1D({p}, {p}), Node(Label({p})))
        with pytest.raises(CalculiError):
            check_proof(HILBERT, self.S_R2, Node(Label()))


# ---------------------------------------------------------------------------
# proof search


class TestProve:
    def test_branching_proof(self):
        out = prove(GH_CALC, TestCheckProof.S_R2, {p})
        assert isinstance(out, Proved)
        assert check_proof(GH_CALC, TestCheckProof.S_R2, out.tree)
        assert render_tree_text(out.tree) == (
            "acc{} | rej{}  -- r2 {p := p}\n"
            "  acc{g(p)} | rej{}\n"
            "  acc{p} | rej{}\n"
            "  acc{} | rej{p}")

    def test_rejection_side_proof(self):
        s = BStatement(rej={p}, nrej={fgh("h(p)")})
        out = prove(GH_CALC, s, {p})
        assert isinstance(out, Proved)
        assert render_tree_text(out.tree) == (
            "acc{} | rej{p}  -- r3 {p := p}\n"
            "  acc{} | rej{h(p), p}")

    def test_discontinuation_proof(self):
        s = BStatement(acc={p}, rej={p}, nacc={fgh("g(p)")})
        out = prove(GH_CALC, s, {p})
        assert isinstance(out, Proved)
        assert render_tree_text(out.tree) == (
            "acc{p} | rej{p}  -- r1 {p := p}\n"
            "  *")

    def test_immediate_overlap(self):
        s = BStatement(acc={p}, nacc={p})
        out = prove(GH_CALC, s, {p})
        assert isinstance(out, Proved)
        assert out.tree == Node(Label({p}))

    def test_saturation(self):
        s = BStatement(acc={p}, nacc={fgh("g(p)")})
        out = prove(GH_CALC, s, {p})
        assert isinstance(out, Saturated)
        assert out.label == Label({p})

    def test_node_limit(self):
        out = prove(GH_CALC, TestCheckProof.S_R2, {p}, max_nodes=1)
        assert isinstance(out, LimitExceeded)
        assert out.limit == "max_nodes" and out.nodes == 2

    def test_depth_limit(self):
        out = prove(GH_CALC, TestCheckProof.S_R2, {p}, max_depth=0)
        assert isinstance(out, LimitExceeded)
        assert out.limit == "max_depth"

    def test_theta_must_contain_p(self):
        with pytest.raises(LanguageError):
            prove(GH_CALC, TestCheckProof.S_R2, {fgh("g(p)")})

    def test_dimension_mismatch(self):
        with pytest.raises(CalculiError):
            prove(GH_CALC, Statement1D({p}, {p}), {p})

    def test_deterministic(self):
        a = prove(GH_CALC, TestCheckProof.S_R2, {p})
        b = prove(GH_CALC, TestCheckProof.S_R2, {p})
        assert a == b

    def test_hilbert_axiom(self):
        goal = fi("(p -> (q -> p))")
        out = prove(HILBERT, Statement1D(set(), {goal}), {p})
        assert isinstance(out, Proved)
        assert check_proof(HILBERT, Statement1D(set(), {goal}), out.tree)
        assert render_tree_text(out.tree, dim=1) == (
            "{}  -- K {p := p, q := q}\n"
            "  {imp(p,imp(q,p))}")

    def test_hilbert_detachment(self):
        # from x and x -> y the search reaches y via mp
        x, y = Var("x"), Var("y")
        s = Statement1D({x, fi("(x -> y)")}, {y})
        out = prove(HILBERT, s, {p})
        assert isinstance(out, Proved)
        assert check_proof(HILBERT, s, out.tree)

    def test_hilbert_unprovable_saturates(self):
        s = Statement1D(set(), {p})
        out = prove(HILBERT, s, {p})
        assert isinstance(out, Saturated)

    def test_dim1_embeds_into_dim2(self):
        lifted = lift_calculus(HILBERT)
        goal = fi("(p -> (q -> p))")
        out1 = prove(HILBERT, Statement1D(set(), {goal}), {p})
        out2 = prove(lifted, BStatement(nacc={goal}), {p})
        assert isinstance(out1, Proved) and isinstance(out2, Proved)
        assert render_tree_text(out2.tree) == (
            "acc{} | rej{}  -- K {p := p, q := q}\n"
            "  acc{imp(p,imp(q,p))} | rej{}")

    def test_sibling_order_left_to_right(self):
        out = prove(GH_CALC, TestCheckProof.S_R2, {p})
        kids = out.tree.children
        assert [k.label for k in kids] == \
            [Label({fgh("g(p)")}), Label({p}), Label(rej={p})]


# ---------------------------------------------------------------------------
# rendering


class TestRendering:
    def test_dot_output(self):
        out = prove(GH_CALC, TestCheckProof.S_R2, {p})
        dot = render_tree_dot(out.tree)
        assert dot.startswith("digraph proof {")
        assert dot.endswith("}")
        assert '[label="acc{} | rej{}"]' in dot
        assert '[label="r2"]' in dot
        assert "n0 -> n1" in dot

    def test_dot_star_box(self):
        s = BStatement(acc={p}, rej={p}, nacc={fgh("g(p)")})
        out = prove(GH_CALC, s, {p})
        assert '[label="*", shape=box];' in render_tree_dot(out.tree)

    def test_dim1_rendering_hides_rejection(self):
        t = Node(Label({p}))
        assert render_tree_text(t, dim=1) == "{p}"
