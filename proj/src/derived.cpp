#include "decoreq/derived.hpp"

namespace decoreq {

using namespace rules;

// ----------------------------------------------------------- derived terms

Term inv_pi1(const ObjType& x) { return mk_pair(mk_id(x), mk_final(x)); }

Term permut(const ObjType& x, const ObjType& y) {
  return mk_pair(mk_pi2(x, y), mk_pi1(x, y));
}

Term perm_pair(const Term& f, const Term& g) {
  // pair(g, f) keeps f's effect; permut restores the (f, g) component order.
  return mk_comp(permut(g.cod(), f.cod()), mk_pair(g, f));
}

Term prod(const Term& f, const Term& g) {
  Term p1 = mk_pi1(f.dom(), g.dom());
  Term p2 = mk_pi2(f.dom(), g.dom());
  return mk_pair(mk_comp(f, p1), mk_comp(g, p2));
}

Term perm_prod(const Term& f, const Term& g) {
  Term p1 = mk_pi1(f.dom(), g.dom());
  Term p2 = mk_pi2(f.dom(), g.dom());
  return perm_pair(mk_comp(f, p1), mk_comp(g, p2));
}

Term left_seq_prod(const Term& f1, const Term& f2) {
  return mk_comp(prod(mk_id(f1.cod()), f2), perm_prod(f1, mk_id(f2.dom())));
}

Term right_seq_prod(const Term& f1, const Term& f2) {
  return mk_comp(perm_prod(f1, mk_id(f2.cod())), prod(mk_id(f1.dom()), f2));
}

// ----------------------------------------------------------- derived rules

namespace {

void want_kind(const Term& t, Kind k, const char* role) {
  if (!has_kind(t, k))
    fail(ErrorKind::SideConditionViolated, std::string(role) + " must be " + to_string(k) +
                                               ", but '" + to_string(t) + "' has kind " +
                                               to_string(infer_kind(t)));
}

} // namespace

Proof derive_weak_refl(const Term& f) { return strong_to_weak(strong_refl(f)); }

Proof derive_E_0_3(const Term& f, const Term& g, const Term& h) {
  want_kind(f, Kind::Pure, "the outer term");
  want_kind(g, Kind::Pure, "the inner term");
  want_kind(h, Kind::Pure, "the compared term");
  if (f.cod() != unit_ty() || h.cod() != unit_ty())
    fail(ErrorKind::TypeMismatch, "both sides must land in unit");
  Term fg = mk_comp(f, g);
  if (fg.dom() != h.dom())
    fail(ErrorKind::TypeMismatch, "sides must be parallel: " + to_string(fg.dom()) + " vs " +
                                      to_string(h.dom()));
  // Parallel pure maps into unit: weakly equal because unit has one value,
  // strongly because neither touches the store.
  return ro_weak_to_strong(weak_final_unique(fg, h));
}

Proof derive_E_1_4(const Term& h) {
  if (h.dom() != unit_ty())
    fail(ErrorKind::TypeMismatch, "term must start from unit, got " + to_string(h.dom()));
  want_kind(h, Kind::Ro, "the observed term");
  Term lhs = mk_comp(mk_final(h.cod()), h);
  return ro_weak_to_strong(weak_final_unique(lhs, mk_id(unit_ty())));
}

std::string to_string(PairVariant v) {
  switch (v) {
    case PairVariant::PureRw: return "purerw";
    case PairVariant::PureRo: return "purero";
    case PairVariant::RwPure: return "rwpure";
    case PairVariant::RoPure: return "ropure";
  }
  return "?";
}

namespace {

// pair(f1, f2) with an accessor-or-better first component:
//   pi1 o pair(f1,f2) ~ f1   (strong when f2 is ro too)
//   pi2 o pair(f1,f2) == f2
ProjectionProofs left_pair_projections(const Term& f1, const Term& f2, bool all_ro) {
  Proof p1 = weak_proj_pi1(f1, f2);
  if (all_ro) p1 = ro_weak_to_strong(p1);
  return ProjectionProofs{p1, strong_proj_pi2(f1, f2)};
}

// perm_pair(f1, f2) = permut o pair(f2, f1) with a pure second component:
//   pi1 o perm_pair(f1,f2) == f1
//   pi2 o perm_pair(f1,f2) ~ f2   (strong when f1 is ro)
ProjectionProofs perm_pair_projections(const Term& f1, const Term& f2, bool all_ro) {
  const ObjType a = f1.cod();
  const ObjType b = f2.cod();
  Term q = mk_pair(f2, f1);
  Term pm = permut(b, a);
  Term pi1_ab = mk_pi1(a, b);
  Term pi2_ab = mk_pi2(a, b);

  // pi1 o (pm o q) == (pi1 o pm) o q == pi2[b,a] o q == f1
  Proof head1 = ro_weak_to_strong(weak_proj_pi1(mk_pi2(b, a), mk_pi1(b, a)));
  Proof s2 = strong_subs(q, head1);
  Proof s3 = strong_proj_pi2(f2, f1);
  Proof a1 = assoc(q, pm, pi1_ab);
  Proof proj1 = strong_trans(a1, strong_trans(s2, s3));

  // pi2 o (pm o q) == (pi2 o pm) o q == pi1[b,a] o q ~ f2
  Proof head2 = strong_proj_pi2(mk_pi2(b, a), mk_pi1(b, a));
  Proof t2 = strong_subs(q, head2);
  Proof t3 = assoc(q, pm, pi2_ab);
  Proof t4 = strong_trans(t3, t2);
  Proof t5 = weak_proj_pi1(f2, f1);
  Proof proj2 = weak_trans(strong_to_weak(t4), t5);
  if (all_ro) proj2 = ro_weak_to_strong(proj2);
  return ProjectionProofs{proj1, proj2};
}

} // namespace

ProjectionProofs derive_pair_projections(const Term& f1, const Term& f2, PairVariant v) {
  if (f1.dom() != f2.dom())
    fail(ErrorKind::TypeMismatch, "pair components must share a domain");
  switch (v) {
    case PairVariant::PureRw:
      want_kind(f1, Kind::Pure, "the first component");
      return left_pair_projections(f1, f2, false);
    case PairVariant::PureRo:
      want_kind(f1, Kind::Pure, "the first component");
      want_kind(f2, Kind::Ro, "the second component");
      return left_pair_projections(f1, f2, true);
    case PairVariant::RwPure:
      want_kind(f2, Kind::Pure, "the second component");
      return perm_pair_projections(f1, f2, false);
    case PairVariant::RoPure:
      want_kind(f1, Kind::Ro, "the first component");
      want_kind(f2, Kind::Pure, "the second component");
      return perm_pair_projections(f1, f2, true);
  }
  fail(ErrorKind::SideConditionViolated, "unknown pair variant");
}

ProjectionProofs derive_prod_projections(const Term& f, const Term& g, PairVariant v) {
  Term p1 = mk_pi1(f.dom(), g.dom());
  Term p2 = mk_pi2(f.dom(), g.dom());
  return derive_pair_projections(mk_comp(f, p1), mk_comp(g, p2), v);
}

ProjectionProofs derive_perm_prod_projections(const Term& f, const Term& g, PairVariant v) {
  if (v != PairVariant::RwPure && v != PairVariant::RoPure)
    fail(ErrorKind::SideConditionViolated,
         "perm_prod projections need a pure second component (rwpure or ropure)");
  return derive_prod_projections(f, g, v);
}

std::pair<Proof, Proof> derive_inv_pi1_iso(const ObjType& x) {
  Term h = inv_pi1(x);
  Term p1 = mk_pi1(x, unit_ty());
  Term p2 = mk_pi2(x, unit_ty());
  Term idx = mk_id(x);
  Term fin = mk_final(x);

  ProjectionProofs proj = derive_pair_projections(idx, fin, PairVariant::PureRo);
  Proof forward = proj.pi1_proof; // pi1 o h == id_X

  // h o pi1 == id_{X*unit}, shown projection-wise and upgraded (all pure).
  Proof a2 = strong_subs(p1, forward);
  Proof a3 = assoc(p1, h, p1);
  Proof a4 = id_tgt(p1);
  Proof a5 = strong_sym(id_src(p1));
  Proof branch1 = strong_to_weak(strong_trans(a3, strong_trans(a2, strong_trans(a4, a5))));

  Proof b2 = strong_subs(p1, proj.pi2_proof); // (pi2 o h) o pi1 == final_X o pi1
  Proof b3 = assoc(p1, h, p2);
  Proof b4 = ro_weak_to_strong(weak_final_unique(mk_comp(fin, p1), p2));
  Proof b5 = strong_sym(id_src(p2));
  Proof branch2 = strong_to_weak(strong_trans(b3, strong_trans(b2, strong_trans(b4, b5))));

  Proof backward = ro_weak_to_strong(weak_pair_unicity(branch1, branch2));
  return {forward, backward};
}

namespace {

// Rotates a composition tree into its right-nested normal form, emitting
// the strong-equality proof alongside.
std::pair<Term, Proof> right_nest(const Term& t) {
  if (t.tag() != TermTag::Comp) return {t, strong_refl(t)};
  Term f = t.first();
  Term g = t.second();
  if (g.tag() == TermTag::Comp) {
    // (a o b) o f == a o (b o f)
    Term a = g.second();
    Term b = g.first();
    Proof rot = strong_sym(assoc(f, b, a));
    auto [nf, p] = right_nest(mk_comp(a, mk_comp(b, f)));
    return {nf, strong_trans(rot, p)};
  }
  auto [nf_inner, p_inner] = right_nest(f);
  Term nf = mk_comp(g, nf_inner);
  return {nf, strong_repl(g, p_inner)};
}

} // namespace

Proof derive_strong_reassoc(const Term& from, const Term& to) {
  auto [nf_from, p_from] = right_nest(from);
  auto [nf_to, p_to] = right_nest(to);
  if (nf_from != nf_to)
    fail(ErrorKind::TypeMismatch, "terms are not reassociations of each other: '" +
                                      to_string(from) + "' vs '" + to_string(to) + "'");
  return strong_trans(p_from, strong_sym(p_to));
}

} // namespace decoreq
