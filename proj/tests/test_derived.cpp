#include <doctest.h>

#include "decoreq/derived.hpp"
#include "decoreq/semantics.hpp"
#include "support/gen.hpp"

using namespace decoreq;

namespace {

MemorySignature default_sig() {
  return MemorySignature::declare({"i", "j"}, {{"0", "1"}, {"0", "1"}});
}

Equation checked(const Proof& p, const MemorySignature& sig) {
  Verdict v = check_proof(p, sig);
  if (!v.ok) FAIL(v.rejection->message << " at " << v.rejection->path);
  return *v.conclusion;
}

} // namespace

TEST_CASE("weak reflexivity is derivable for any term") {
  auto sig = default_sig();
  for (Term f : {mk_update(sig, "i"), mk_id(val_ty(sig, "i")),
                 mk_comp(mk_lookup(sig, "j"), mk_update(sig, "i"))}) {
    Equation eq = checked(derive_weak_refl(f), sig);
    CHECK(eq == Equation{f, f, EqMode::Weak});
  }
}

TEST_CASE("parallel pure maps into unit are strongly equal") {
  auto sig = default_sig();
  ObjType vj = val_ty(sig, "j");
  ObjType u = unit_ty();

  // the instance the commutation proof uses
  Term f = mk_final(vj);
  Term g = mk_pi2(u, vj);
  Term h = mk_pi1(u, vj);
  Equation eq = checked(derive_E_0_3(f, g, h), sig);
  CHECK(eq.lhs == mk_comp(f, g));
  CHECK(eq.rhs == h);
  CHECK(eq.mode == EqMode::Strong);

  // another pure instance
  ObjType vi = val_ty(sig, "i");
  checked(derive_E_0_3(mk_final(vi), mk_pi1(vi, u), mk_pi2(vi, u)), sig);
}

TEST_CASE("the unit comparison refuses modifiers") {
  auto sig = default_sig();
  ObjType vi = val_ty(sig, "i");
  try {
    derive_E_0_3(mk_final(unit_ty()), mk_update(sig, "i"), mk_final(vi));
    FAIL("expected SideConditionViolated");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SideConditionViolated);
  }
}

TEST_CASE("observations from unit compose with final to the identity") {
  auto sig = default_sig();
  Term lk = mk_lookup(sig, "j");
  Equation eq = checked(derive_E_1_4(lk), sig);
  CHECK(eq.lhs == mk_comp(mk_final(lk.cod()), lk));
  CHECK(eq.rhs == mk_id(unit_ty()));
  CHECK(eq.mode == EqMode::Strong);

  checked(derive_E_1_4(mk_id(unit_ty())), sig);

  Term writes = mk_comp(mk_update(sig, "i"), mk_lookup(sig, "i"));
  try {
    derive_E_1_4(writes);
    FAIL("expected SideConditionViolated");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SideConditionViolated);
  }
}

TEST_CASE("left pair projections, pure/accessor variant: both strong") {
  auto sig = default_sig();
  ObjType u = unit_ty();
  Term f1 = mk_id(u);
  Term f2 = mk_lookup(sig, "j");
  ProjectionProofs pp = derive_pair_projections(f1, f2, PairVariant::PureRo);
  Equation e1 = checked(pp.pi1_proof, sig);
  Equation e2 = checked(pp.pi2_proof, sig);
  CHECK(e1.mode == EqMode::Strong);
  CHECK(e1 == Equation{mk_comp(mk_pi1(u, f2.cod()), mk_pair(f1, f2)), f1, EqMode::Strong});
  CHECK(e2.mode == EqMode::Strong);
  CHECK(e2.rhs == f2);
}

TEST_CASE("left pair projections, pure/modifier variant: weak then strong") {
  auto sig = default_sig();
  ObjType vi = val_ty(sig, "i");
  Term f1 = mk_id(vi);
  Term f2 = mk_update(sig, "i");
  ProjectionProofs pp = derive_pair_projections(f1, f2, PairVariant::PureRw);
  CHECK(checked(pp.pi1_proof, sig).mode == EqMode::Weak);
  CHECK(checked(pp.pi2_proof, sig).mode == EqMode::Strong);
}

TEST_CASE("variant kind requirements are enforced") {
  auto sig = default_sig();
  ObjType vi = val_ty(sig, "i");
  try {
    derive_pair_projections(mk_update(sig, "i"), mk_id(vi), PairVariant::RoPure);
    FAIL("expected SideConditionViolated");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SideConditionViolated);
  }
  try {
    derive_pair_projections(mk_comp(mk_lookup(sig, "i"), mk_update(sig, "i")), mk_id(vi),
                            PairVariant::PureRw);
    FAIL("expected SideConditionViolated");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SideConditionViolated);
  }
}

TEST_CASE("permuted product projections, modifier/pure variant") {
  auto sig = default_sig();
  Term up = mk_update(sig, "i");
  Term idj = mk_id(val_ty(sig, "j"));
  ProjectionProofs pp = derive_perm_prod_projections(up, idj, PairVariant::RwPure);
  Equation e1 = checked(pp.pi1_proof, sig);
  Equation e2 = checked(pp.pi2_proof, sig);

  Term pp_term = perm_prod(up, idj);
  Term pi1t = mk_pi1(unit_ty(), idj.cod());
  CHECK(e1 == Equation{mk_comp(pi1t, pp_term),
                       mk_comp(up, mk_pi1(up.dom(), idj.dom())), EqMode::Strong});
  CHECK(e2.mode == EqMode::Weak);
  CHECK(e2.rhs == mk_comp(idj, mk_pi2(up.dom(), idj.dom())));

  // both conclusions are also true in the model
  CHECK(check_semantic(e1, sig).holds);
  CHECK(check_semantic(e2, sig).holds);
}

TEST_CASE("permuted product projections, all-accessor variant: both strong") {
  auto sig = default_sig();
  Term f = mk_lookup(sig, "i");
  Term g = mk_id(val_ty(sig, "j"));
  ProjectionProofs pp = derive_perm_prod_projections(f, g, PairVariant::RoPure);
  CHECK(checked(pp.pi1_proof, sig).mode == EqMode::Strong);
  CHECK(checked(pp.pi2_proof, sig).mode == EqMode::Strong);

  try {
    derive_perm_prod_projections(mk_update(sig, "i"), g, PairVariant::RoPure);
    FAIL("expected SideConditionViolated");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SideConditionViolated);
  }
}

TEST_CASE("product projections relate to the component along the projection") {
  auto sig = default_sig();
  Term f = mk_id(val_ty(sig, "i"));
  Term lk = mk_lookup(sig, "j");
  ProjectionProofs pp = derive_prod_projections(f, lk, PairVariant::PureRw);
  Equation e1 = checked(pp.pi1_proof, sig);
  CHECK(e1.rhs == mk_comp(f, mk_pi1(f.dom(), lk.dom())));
  Equation e2 = checked(pp.pi2_proof, sig);
  CHECK(e2.rhs == mk_comp(lk, mk_pi2(f.dom(), lk.dom())));
}

TEST_CASE("pi1 is an isomorphism onto the unit-padded product") {
  auto sig = default_sig();
  for (ObjType x : {val_ty(sig, "i"), unit_ty()}) {
    auto [fwd, bwd] = derive_inv_pi1_iso(x);
    Equation e1 = checked(fwd, sig);
    Equation e2 = checked(bwd, sig);
    CHECK(e1 == Equation{mk_comp(mk_pi1(x, unit_ty()), inv_pi1(x)), mk_id(x), EqMode::Strong});
    CHECK(e2 == Equation{mk_comp(inv_pi1(x), mk_pi1(x, unit_ty())),
                         mk_id(prod_ty(x, unit_ty())), EqMode::Strong});
    // exhaustive cross-check in the model
    CHECK(check_semantic(e1, sig).holds);
    CHECK(check_semantic(e2, sig).holds);
  }
}

TEST_CASE("derived term expansion is deterministic") {
  auto sig = default_sig();
  ObjType vi = val_ty(sig, "i");
  CHECK(inv_pi1(vi) == inv_pi1(vi));
  CHECK(perm_prod(mk_update(sig, "i"), mk_id(val_ty(sig, "j"))) ==
        perm_prod(mk_update(sig, "i"), mk_id(val_ty(sig, "j"))));
  CHECK(left_seq_prod(mk_update(sig, "i"), mk_lookup(sig, "j")) ==
        left_seq_prod(mk_update(sig, "i"), mk_lookup(sig, "j")));
}

TEST_CASE("reassociation proofs cover arbitrary regroupings") {
  auto sig = default_sig();
  testgen::Gen gen(sig, 31);
  for (int n = 0; n < 100; ++n) {
    Term t = gen.term(4);
    Term v = t; // regroup the spine a few times, keeping the same factors
    for (int m = 0; m < 3; ++m) {
      if (v.tag() != TermTag::Comp) break;
      Term f = v.first(), g = v.second();
      if (f.tag() == TermTag::Comp)
        v = mk_comp(mk_comp(g, f.second()), f.first());
      else if (g.tag() == TermTag::Comp)
        v = mk_comp(g.second(), mk_comp(g.first(), f));
    }
    Proof p = derive_strong_reassoc(t, v);
    Equation eq = checked(p, sig);
    CHECK(eq.lhs == t);
    CHECK(eq.rhs == v);
  }
}

TEST_CASE("reassociation rejects genuinely different terms") {
  auto sig = default_sig();
  Term a = mk_comp(mk_lookup(sig, "j"), mk_update(sig, "i"));
  Term b = mk_comp(mk_lookup(sig, "i"), mk_update(sig, "i"));
  CHECK_THROWS_AS(derive_strong_reassoc(a, b), Error);
}

TEST_CASE("every derived proof's conclusion also holds in the model") {
  auto sig = default_sig();
  testgen::Gen gen(sig, 47);
  auto confirm = [&](const Proof& p) {
    Verdict v = check_proof(p, sig);
    REQUIRE(v.ok);
    CHECK(check_semantic(*v.conclusion, sig).holds);
  };
  for (int n = 0; n < 40; ++n) {
    confirm(derive_weak_refl(gen.term(3)));

    ObjType x = gen.type(1);
    Term f1 = gen.ro_term_from(x, 2);
    Term f2 = gen.term_between(x, gen.type(1), 2);
    if (has_kind(f1, Kind::Pure)) {
      ProjectionProofs pp = derive_pair_projections(f1, f2, PairVariant::PureRw);
      confirm(pp.pi1_proof);
      confirm(pp.pi2_proof);
    }
    if (has_kind(f2, Kind::Pure)) {
      ProjectionProofs pp = derive_pair_projections(f1, f2, PairVariant::RoPure);
      confirm(pp.pi1_proof);
      confirm(pp.pi2_proof);
    }

    Term h = gen.term_between(unit_ty(), gen.type(1), 2);
    if (has_kind(h, Kind::Ro)) confirm(derive_E_1_4(h));
  }
}

TEST_CASE("sequential products of a write and a read agree in the model") {
  auto sig = default_sig();
  Term up = mk_update(sig, "i");
  Term lk = mk_lookup(sig, "j");
  Term lhs = right_seq_prod(up, lk);
  Term rhs = left_seq_prod(up, lk);
  Equation eq = mk_equation(lhs, rhs, EqMode::Strong);
  SemanticResult res = check_semantic(eq, sig);
  CHECK(res.holds);
  CHECK(res.cases_checked == 2 * 4); // V(i)*unit inputs times stores
}
