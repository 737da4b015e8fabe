#include "decoreq/corpus.hpp"

#include "decoreq/derived.hpp"

namespace decoreq {

using namespace rules;

ProofScript commutation_update_lookup(const MemorySignature& sig, const std::string& i,
                                      const std::string& j) {
  if (i == j)
    fail(ErrorKind::LocationClash, "commutation needs two distinct locations, got '" + i + "'");

  const ObjType vi = val_ty(sig, i);
  const ObjType vj = val_ty(sig, j);
  const ObjType u = unit_ty();

  const Term look = mk_lookup(sig, j);
  const Term upd = mk_update(sig, i);
  const Term lhs = mk_comp(look, upd); // observe j after writing i

  const Term h0 = inv_pi1(vi);                       // Vi -> Vi*unit
  const Term p_read = prod(mk_id(vi), look);         // Vi*unit -> Vi*Vj, reads j first
  const Term p_write = perm_prod(upd, mk_id(vj));    // Vi*Vj -> unit*Vj, then writes i
  const Term pi2_out = mk_pi2(u, vj);
  const Term rhs = mk_comp(mk_comp(mk_comp(pi2_out, p_write), p_read), h0);

  const Term fin = mk_final(vj);
  const Term eff_lhs = mk_comp(fin, lhs);
  const Term eff_rhs = mk_comp(fin, rhs);

  // Step 1: both sides have the same store effect.
  // 1.1  final o pi2 collapses to the first projection of unit*Vj.
  const Term chain_a =
      mk_comp(mk_comp(mk_comp(mk_comp(fin, pi2_out), p_write), p_read), h0);
  Proof step_1_1 =
      strong_subs(h0, strong_subs(p_read, strong_subs(p_write,
          derive_E_0_3(fin, pi2_out, mk_pi1(u, vj)))))
          .with_label("step_1_1");

  // 1.2  the write slides out of the permuted product.
  Proof step_1_2 =
      strong_subs(h0, strong_subs(p_read,
          derive_perm_prod_projections(upd, mk_id(vj), PairVariant::RwPure).pi1_proof))
          .with_label("step_1_2");

  // 1.3  the read-only product disappears under pi1.
  const Term pi1_vivj = mk_pi1(vi, vj);
  const Term pi1_viu = mk_pi1(vi, u);
  Proof read_gone = strong_trans(
      ro_weak_to_strong(derive_prod_projections(mk_id(vi), look, PairVariant::PureRw).pi1_proof),
      id_tgt(pi1_viu)); // pi1 o p_read == pi1
  const Term c_term = mk_comp(mk_comp(mk_comp(upd, pi1_vivj), p_read), h0);
  Proof step_1_3 = strong_trans(
      derive_strong_reassoc(c_term, mk_comp(upd, mk_comp(mk_comp(pi1_vivj, p_read), h0))),
      strong_trans(strong_repl(upd, strong_subs(h0, read_gone)),
                   assoc(h0, pi1_viu, upd)))
                       .with_label("step_1_3");

  // 1.4  pi1 undoes inv_pi1.
  Proof step_1_4 =
      strong_trans(strong_sym(assoc(h0, pi1_viu, upd)),
                   strong_repl(upd, derive_pair_projections(mk_id(vi), mk_final(vi),
                                                            PairVariant::PureRo)
                                        .pi1_proof))
          .with_label("step_1_4");

  // 1.5  forgetting the observed value leaves just the write.
  Proof step_1_5 =
      strong_trans(assoc(upd, look, fin),
                   strong_trans(strong_subs(upd, derive_E_1_4(look)),
                                strong_trans(id_tgt(upd), strong_sym(id_src(upd)))))
          .with_label("step_1_5");

  Proof rhs_chain = strong_trans(
      derive_strong_reassoc(eff_rhs, chain_a),
      strong_trans(step_1_1,
                   strong_trans(step_1_2, strong_trans(step_1_3, step_1_4))));
  Proof step_1 = strong_trans(step_1_5, strong_sym(rhs_chain))
                     .with_stated(Equation{eff_lhs, eff_rhs, EqMode::Strong})
                     .with_label("step_1");

  // Step 2: both sides return the same value.
  // 2.1  writing i does not change what j observes.
  Proof step_2_1 = axiom2(j, i).with_label("step_2_1");

  // 2.2  the forgotten input can be routed through inv_pi1.
  const Term pi2_viu = mk_pi2(vi, u);
  Proof step_2_2 =
      strong_to_weak(strong_sym(strong_repl(
          look,
          derive_pair_projections(mk_id(vi), mk_final(vi), PairVariant::PureRo).pi2_proof)))
          .with_label("step_2_2");

  // 2.3  the write is invisible to the second projection.
  Proof step_2_3 =
      weak_subs(h0, weak_subs(p_read,
          weak_trans(
              derive_perm_prod_projections(upd, mk_id(vj), PairVariant::RwPure).pi2_proof,
              strong_to_weak(id_tgt(mk_pi2(vi, vj))))))
          .with_label("step_2_3");

  // 2.4  projecting the read-only product yields the observation itself.
  Proof step_2_4 =
      strong_to_weak(strong_trans(
          strong_subs(h0,
                      derive_prod_projections(mk_id(vi), look, PairVariant::PureRw).pi2_proof),
          strong_sym(assoc(h0, pi2_viu, look))))
          .with_label("step_2_4");

  Proof step_2 = weak_trans(weak_trans(step_2_1, step_2_2),
                            weak_sym(weak_trans(step_2_3, step_2_4)))
                     .with_stated(Equation{lhs, rhs, EqMode::Weak})
                     .with_label("step_2");

  Equation goal{lhs, rhs, EqMode::Strong};
  Proof body = comp_final_unique(step_1, step_2).with_stated(goal).with_label("main");

  return ProofScript{"commutation_update_lookup", goal, body,
                     {"step_1_1", "step_1_2", "step_1_3", "step_1_4", "step_1_5", "step_1",
                      "step_2_1", "step_2_2", "step_2_3", "step_2_4", "step_2"}};
}

AxiomCorpus axiom_corpus(const MemorySignature& sig) {
  if (sig.locations().size() < 2)
    fail(ErrorKind::UnknownLocation, "axiom corpus needs at least two locations");
  const std::string i = sig.locations()[0];
  const std::string j = sig.locations()[1];
  if (sig.carrier(i).size() < 2)
    fail(ErrorKind::EmptyCarrier,
         "the negative fixtures need at least two values at location '" + i + "'");

  AxiomCorpus corpus;

  {
    Term lk = mk_lookup(sig, i);
    Term up = mk_update(sig, i);
    Equation goal{mk_comp(lk, up), mk_id(val_ty(sig, i)), EqMode::Weak};
    corpus.scripts.push_back(
        ProofScript{"axiom1", goal, axiom1(i).with_stated(goal).with_label("main"), {}});
  }
  {
    Term lk = mk_lookup(sig, i);
    Term up = mk_update(sig, j);
    Equation goal{mk_comp(lk, up), mk_comp(lk, mk_final(val_ty(sig, j))), EqMode::Weak};
    corpus.scripts.push_back(
        ProofScript{"axiom2", goal, axiom2(i, j).with_stated(goal).with_label("main"), {}});
  }

  // The strong reading of axiom 1 is refutable: writing i changes the store
  // whenever the written value differs from what i already holds. First
  // counterexample in enumeration order: input i=<first carrier value>,
  // store with i at its second value and every other location at its first.
  Term lk = mk_lookup(sig, i);
  Term up = mk_update(sig, i);
  Equation strong_claim{mk_comp(lk, up), mk_id(val_ty(sig, i)), EqMode::Weak};
  strong_claim.mode = EqMode::Strong;

  Store witness;
  for (std::size_t k = 0; k < sig.locations().size(); ++k)
    witness.values.push_back(sig.carrier_at(k).front());
  witness.values[sig.index_of(i)] = sig.carrier(i).at(1);

  const SemValue first_value = SemValue::base(i, sig.carrier(i).front());

  corpus.negatives.push_back(NegativeFixture{
      "ax1_strong_direct", strong_claim,
      axiom1(i).with_stated(strong_claim).with_label("main"), first_value, witness});

  corpus.negatives.push_back(NegativeFixture{
      "ax1_strong_upgrade", strong_claim,
      ro_weak_to_strong(axiom1(i)).with_stated(strong_claim).with_label("main"), first_value,
      witness});

  {
    // Routing through the effect comparison does not help either: the
    // effect premise would itself need the refuted strong equation.
    Term eff_l = mk_comp(mk_final(val_ty(sig, i)), strong_claim.lhs);
    Term eff_r = mk_comp(mk_final(val_ty(sig, i)), strong_claim.rhs);
    Proof effect = ro_weak_to_strong(weak_final_unique(eff_l, eff_r));
    corpus.negatives.push_back(NegativeFixture{
        "ax1_strong_cfu", strong_claim,
        comp_final_unique(effect, axiom1(i)).with_stated(strong_claim).with_label("main"),
        first_value, witness});
  }

  return corpus;
}

} // namespace decoreq
