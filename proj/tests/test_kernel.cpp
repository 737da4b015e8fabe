#include <doctest.h>

#include "decoreq/derived.hpp"
#include "decoreq/kernel.hpp"

using namespace decoreq;
using namespace decoreq::rules;

namespace {

MemorySignature default_sig() {
  return MemorySignature::declare({"i", "j"}, {{"0", "1"}, {"0", "1"}});
}

RejectReason reason_of(const Verdict& v) {
  REQUIRE_FALSE(v.ok);
  return v.rejection->reason;
}

} // namespace

TEST_CASE("reflexivity, symmetry, transitivity") {
  auto sig = default_sig();
  Term f = mk_update(sig, "i");
  Term g = mk_comp(f, mk_id(f.dom()));

  Verdict refl = check_proof(strong_refl(f), sig);
  REQUIRE(refl.ok);
  CHECK(*refl.conclusion == Equation{f, f, EqMode::Strong});

  Proof fg = id_src(f);                       // f o id == f ... wait, this is (f o id, f)
  Verdict v = check_proof(strong_sym(fg), sig); // f == f o id
  REQUIRE(v.ok);
  CHECK(v.conclusion->lhs == f);
  CHECK(v.conclusion->rhs == g);

  Verdict t = check_proof(strong_trans(strong_sym(fg), fg), sig); // f == f
  REQUIRE(t.ok);
  CHECK(*t.conclusion == Equation{f, f, EqMode::Strong});
}

TEST_CASE("transitivity rejects mismatched middles") {
  auto sig = default_sig();
  Term f = mk_update(sig, "i");
  Term h = mk_lookup(sig, "j");
  Verdict v = check_proof(strong_trans(strong_refl(f), strong_refl(h)), sig);
  CHECK(reason_of(v) == RejectReason::SchemaMismatch);
}

TEST_CASE("associativity and the identity laws") {
  auto sig = default_sig();
  Term up = mk_update(sig, "i");
  Term lk = mk_lookup(sig, "j");
  Term fin = mk_final(lk.cod());

  Verdict a = check_proof(assoc(up, lk, fin), sig);
  REQUIRE(a.ok);
  CHECK(a.conclusion->lhs == mk_comp(fin, mk_comp(lk, up)));
  CHECK(a.conclusion->rhs == mk_comp(mk_comp(fin, lk), up));

  Verdict s = check_proof(id_src(up), sig);
  REQUIRE(s.ok);
  CHECK(s.conclusion->lhs == mk_comp(up, mk_id(up.dom())));

  Verdict t = check_proof(id_tgt(up), sig);
  REQUIRE(t.ok);
  CHECK(t.conclusion->lhs == mk_comp(mk_id(up.cod()), up));
}

TEST_CASE("associativity rejects non-composable bindings") {
  auto sig = default_sig();
  Term up = mk_update(sig, "i");
  Verdict v = check_proof(assoc(up, up, up), sig);
  CHECK(reason_of(v) == RejectReason::TypeMismatch);
}

TEST_CASE("substitution and replacement") {
  auto sig = default_sig();
  Term up = mk_update(sig, "i");
  Term lk = mk_lookup(sig, "j");
  Proof base = id_tgt(lk); // id o lookup j == lookup j

  Verdict subs = check_proof(strong_subs(up, base), sig);
  REQUIRE(subs.ok);
  CHECK(subs.conclusion->lhs == mk_comp(mk_comp(mk_id(lk.cod()), lk), up));
  CHECK(subs.conclusion->rhs == mk_comp(lk, up));

  Term post = mk_final(lk.cod());
  Verdict repl = check_proof(strong_repl(post, base), sig);
  REQUIRE(repl.ok);
  CHECK(repl.conclusion->rhs == mk_comp(post, lk));

  // substitution with a non-composable term
  Verdict bad = check_proof(strong_subs(lk, base), sig);
  CHECK(reason_of(bad) == RejectReason::TypeMismatch);
}

TEST_CASE("weak replacement demands a pure context") {
  auto sig = default_sig();
  Proof weak_ax = axiom1("i"); // lookup i o update i ~ id
  Term pure_ctx = mk_final(val_ty(sig, "i"));
  Verdict ok = check_proof(pure_weak_repl(pure_ctx, weak_ax), sig);
  REQUIRE(ok.ok);
  CHECK(ok.conclusion->mode == EqMode::Weak);

  Term rw_ctx = mk_update(sig, "i");
  Verdict bad = check_proof(pure_weak_repl(rw_ctx, weak_ax), sig);
  CHECK(reason_of(bad) == RejectReason::SideConditionViolated);
}

TEST_CASE("weak equalities of accessors upgrade to strong ones") {
  auto sig = default_sig();
  Term lk = mk_lookup(sig, "i");
  Proof weak = strong_to_weak(strong_refl(lk));
  Verdict up = check_proof(ro_weak_to_strong(weak), sig);
  REQUIRE(up.ok);
  CHECK(up.conclusion->mode == EqMode::Strong);

  Proof weak_rw = axiom1("i");
  Verdict bad = check_proof(ro_weak_to_strong(weak_rw), sig);
  CHECK(reason_of(bad) == RejectReason::SideConditionViolated);
}

TEST_CASE("weak closure rules") {
  auto sig = default_sig();
  Proof ax = axiom1("i");
  CHECK(check_proof(weak_sym(ax), sig).ok);
  CHECK(check_proof(weak_trans(ax, weak_sym(strong_to_weak(strong_refl(
                                  mk_id(val_ty(sig, "i")))))),
                    sig)
            .ok);
  Term pre = mk_pi1(val_ty(sig, "i"), unit_ty());
  Verdict subs = check_proof(weak_subs(pre, ax), sig);
  REQUIRE(subs.ok);
  CHECK(subs.conclusion->mode == EqMode::Weak);
}

TEST_CASE("anything into unit is weakly equal") {
  auto sig = default_sig();
  ObjType vi = val_ty(sig, "i");
  Verdict v = check_proof(weak_final_unique(mk_update(sig, "i"), mk_final(vi)), sig);
  REQUIRE(v.ok);
  CHECK(v.conclusion->mode == EqMode::Weak);

  // not landing in unit
  Verdict bad = check_proof(weak_final_unique(mk_id(vi), mk_id(vi)), sig);
  CHECK(reason_of(bad) == RejectReason::SchemaMismatch);

  // different domains are not parallel
  Verdict bad2 =
      check_proof(weak_final_unique(mk_final(vi), mk_final(val_ty(sig, "j"))), sig);
  CHECK(reason_of(bad2) == RejectReason::TypeMismatch);
}

TEST_CASE("effect plus result yields strong equality") {
  auto sig = default_sig();
  Term f = mk_update(sig, "i");
  Term g = mk_comp(f, mk_id(f.dom()));
  Proof result = strong_to_weak(strong_sym(id_src(f))); // f ~ f o id
  Proof effect = strong_repl(mk_final(unit_ty()), strong_sym(id_src(f)));
  Verdict v = check_proof(comp_final_unique(effect, result), sig);
  REQUIRE(v.ok);
  CHECK(*v.conclusion == Equation{f, g, EqMode::Strong});

  // effect premise about different terms
  Proof wrong_effect = strong_refl(mk_comp(mk_final(unit_ty()), f));
  Verdict bad = check_proof(comp_final_unique(wrong_effect, result), sig);
  CHECK(reason_of(bad) == RejectReason::SchemaMismatch);
}

TEST_CASE("pair projection rules and their side condition") {
  auto sig = default_sig();
  ObjType vi = val_ty(sig, "i");
  Term f1 = mk_id(vi);
  Term f2 = mk_update(sig, "i");

  Verdict p1 = check_proof(weak_proj_pi1(f1, f2), sig);
  REQUIRE(p1.ok);
  CHECK(p1.conclusion->rhs == f1);
  CHECK(p1.conclusion->mode == EqMode::Weak);

  Verdict p2 = check_proof(strong_proj_pi2(f1, f2), sig);
  REQUIRE(p2.ok);
  CHECK(p2.conclusion->rhs == f2);
  CHECK(p2.conclusion->mode == EqMode::Strong);

  // a modifier first component is not projectable
  Term rw1 = mk_comp(mk_lookup(sig, "i"), mk_update(sig, "i"));
  Verdict bad = check_proof(weak_proj_pi1(rw1, mk_id(vi)), sig);
  CHECK(reason_of(bad) == RejectReason::SideConditionViolated);
  Verdict bad2 = check_proof(strong_proj_pi2(rw1, mk_id(vi)), sig);
  CHECK(reason_of(bad2) == RejectReason::SideConditionViolated);
}

TEST_CASE("pairwise weak equality of projections implies weak equality") {
  auto sig = default_sig();
  ObjType vi = val_ty(sig, "i");
  Term f = mk_pair(mk_id(vi), mk_final(vi));
  Term pi1t = mk_pi1(vi, unit_ty());
  Term pi2t = mk_pi2(vi, unit_ty());
  Proof p1 = strong_to_weak(strong_refl(mk_comp(pi1t, f)));
  Proof p2 = strong_to_weak(strong_refl(mk_comp(pi2t, f)));
  Verdict v = check_proof(weak_pair_unicity(p1, p2), sig);
  REQUIRE(v.ok);
  CHECK(*v.conclusion == Equation{f, f, EqMode::Weak});

  // premises about different terms
  Term g = mk_pair(mk_id(vi), mk_final(vi));
  Proof mixed = strong_to_weak(strong_refl(mk_comp(pi2t, mk_comp(g, mk_id(vi)))));
  Verdict bad = check_proof(weak_pair_unicity(p1, mixed), sig);
  CHECK(reason_of(bad) == RejectReason::SchemaMismatch);
}

TEST_CASE("observational axioms") {
  auto sig = default_sig();
  Verdict a1 = check_proof(axiom1("i"), sig);
  REQUIRE(a1.ok);
  CHECK(a1.conclusion->mode == EqMode::Weak);
  CHECK(a1.conclusion->lhs == mk_comp(mk_lookup(sig, "i"), mk_update(sig, "i")));
  CHECK(a1.conclusion->rhs == mk_id(val_ty(sig, "i")));

  Verdict a2 = check_proof(axiom2("i", "j"), sig);
  REQUIRE(a2.ok);
  CHECK(a2.conclusion->lhs == mk_comp(mk_lookup(sig, "i"), mk_update(sig, "j")));
  CHECK(a2.conclusion->rhs == mk_comp(mk_lookup(sig, "i"), mk_final(val_ty(sig, "j"))));

  Verdict clash = check_proof(axiom2("i", "i"), sig);
  CHECK(reason_of(clash) == RejectReason::LocationClash);

  Verdict unknown_loc = check_proof(axiom1("zzz"), sig);
  CHECK(reason_of(unknown_loc) == RejectReason::TypeMismatch);
}

TEST_CASE("local observations at every location give a global equality") {
  auto sig = default_sig();
  Term f = mk_update(sig, "i");
  std::vector<Proof> premises;
  for (const auto& loc : sig.locations())
    premises.push_back(strong_to_weak(strong_refl(mk_comp(mk_lookup(sig, loc), f))));
  Verdict v = check_proof(local_to_global(premises), sig);
  REQUIRE(v.ok);
  CHECK(*v.conclusion == Equation{f, f, EqMode::Strong});

  // one premise missing
  Verdict missing = check_proof(local_to_global({premises[0]}), sig);
  CHECK(reason_of(missing) == RejectReason::MissingLocationPremise);

  // wrong order
  Verdict swapped = check_proof(local_to_global({premises[1], premises[0]}), sig);
  CHECK(reason_of(swapped) == RejectReason::MissingLocationPremise);
}

TEST_CASE("unknown rules are rejected as such") {
  auto sig = default_sig();
  Verdict v = check_proof(Proof::unknown("frobnicate"), sig);
  CHECK(reason_of(v) == RejectReason::UnknownRule);
}

TEST_CASE("premises at the wrong strength are rejected") {
  auto sig = default_sig();
  // symmetry of strong equations over a weak premise
  Verdict v = check_proof(strong_sym(axiom1("i")), sig);
  CHECK(reason_of(v) == RejectReason::SchemaMismatch);
  // and the weak converter over a weak premise
  Verdict w = check_proof(strong_to_weak(axiom1("i")), sig);
  CHECK(reason_of(w) == RejectReason::SchemaMismatch);
}

TEST_CASE("missing metavariable bindings are schema errors") {
  auto sig = default_sig();
  Verdict v = check_proof(Proof::make(RuleName::StrongRefl, {}, {}, {}), sig);
  CHECK(reason_of(v) == RejectReason::SchemaMismatch);
  Verdict w = check_proof(Proof::make(RuleName::Axiom1, {}, {}, {}), sig);
  CHECK(reason_of(w) == RejectReason::SchemaMismatch);
}

TEST_CASE("premise counts are enforced") {
  auto sig = default_sig();
  Term f = mk_id(unit_ty());
  Verdict v = check_proof(Proof::make(RuleName::StrongSym, {}, {}, {}), sig);
  CHECK(reason_of(v) == RejectReason::SchemaMismatch);
  Verdict w = check_proof(
      Proof::make(RuleName::StrongRefl, {{"f", f}}, {}, {rules::strong_refl(f)}), sig);
  CHECK(reason_of(w) == RejectReason::SchemaMismatch);
}

TEST_CASE("stated conclusions are checked against the computed ones") {
  auto sig = default_sig();
  Term f = mk_update(sig, "i");
  Equation wrong{f, mk_comp(f, mk_id(f.dom())), EqMode::Strong};
  Verdict v = check_proof(strong_refl(f).with_stated(wrong), sig);
  CHECK(reason_of(v) == RejectReason::SchemaMismatch);
}

TEST_CASE("conclude returns the conclusion of valid proofs only") {
  auto sig = default_sig();
  Term idt = mk_id(val_ty(sig, "i"));
  CHECK(conclude(strong_refl(idt), sig) == Equation{idt, idt, EqMode::Strong});
  CHECK(conclude(axiom1("i"), sig).mode == EqMode::Weak);
  try {
    conclude(axiom2("i", "i"), sig);
    FAIL("expected InvalidProof");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidProof);
  }
}

TEST_CASE("rejection paths point at the failing node") {
  auto sig = default_sig();
  Proof bad = strong_trans(strong_refl(mk_id(unit_ty())),
                           ro_weak_to_strong(axiom1("i")));
  Verdict v = check_proof(bad, sig);
  REQUIRE_FALSE(v.ok);
  CHECK(v.rejection->path == "main/premise[1]");
}

TEST_CASE("weak derivability of accessors collapses into strong derivability") {
  auto sig = default_sig();
  // two parallel accessors, weakly equal by the final rule
  Term f = mk_final(val_ty(sig, "i"));
  Term g = mk_comp(mk_final(unit_ty()), mk_final(val_ty(sig, "i")));
  Proof weak = weak_final_unique(f, g);
  REQUIRE(check_proof(weak, sig).ok);
  Verdict strong = check_proof(ro_weak_to_strong(weak), sig);
  REQUIRE(strong.ok);
  CHECK(strong.conclusion->mode == EqMode::Strong);
}
