#pragma once

#include <utility>

#include "decoreq/kernel.hpp"

namespace decoreq {

// Derived term constructions. Each expands deterministically to a core
// Term; the parser performs the same expansion for the surface forms.

/// pair(id_X, final_X) : X -> X*unit, the inverse of pi1.
Term inv_pi1(const ObjType& x);
/// pair(pi2, pi1) : X*Y -> Y*X.
Term permut(const ObjType& x, const ObjType& y);
/// permut . pair(g, f): the pair that keeps f's store effect.
Term perm_pair(const Term& f, const Term& g);
/// pair(f.pi1, g.pi2) : X1*X2 -> Y1*Y2.
Term prod(const Term& f, const Term& g);
/// perm_pair(f.pi1, g.pi2).
Term perm_prod(const Term& f, const Term& g);
/// Product evaluating f1 first: prod(id, f2) . perm_prod(f1, id).
Term left_seq_prod(const Term& f1, const Term& f2);
/// Product evaluating f2 first: perm_prod(f1, id) . prod(id, f2).
Term right_seq_prod(const Term& f1, const Term& f2);

// Derived rules. Every function below returns a proof built purely from
// kernel rule applications; nothing here is trusted by the checker.

/// f ~ f, from reflexivity of strong equality.
Proof derive_weak_refl(const Term& f);

/// f.g == h for pure f, g, h with cod(f) = cod(h) = unit and
/// dom(g) = dom(h). Throws SideConditionViolated / TypeMismatch.
Proof derive_E_0_3(const Term& f, const Term& g, const Term& h);

/// final.h == id_unit for ro h : unit -> X.
Proof derive_E_1_4(const Term& h);

/// Which decorations the two components of a pair carry. The pure-first
/// variants target the left pair pair(f1, f2); the pure-second variants
/// target perm_pair(f1, f2). Checks use the kind hierarchy, so e.g.
/// PureRo also covers two pure components.
enum class PairVariant { PureRw, PureRo, RwPure, RoPure };

std::string to_string(PairVariant v);

struct ProjectionProofs {
  Proof pi1_proof;
  Proof pi2_proof;
};

/// Projection laws for pair(f1,f2) (PureRw/PureRo) or perm_pair(f1,f2)
/// (RwPure/RoPure). In the all-accessor variants both projections come out
/// strong; otherwise the projection through the effectful component is
/// strong and the other weak.
ProjectionProofs derive_pair_projections(const Term& f1, const Term& f2, PairVariant v);

/// Same laws for prod(f,g): pi1.prod(f,g) ~/== f.pi1 etc.
ProjectionProofs derive_prod_projections(const Term& f, const Term& g, PairVariant v);

/// Same laws for perm_prod(f,g) (RwPure/RoPure variants).
ProjectionProofs derive_perm_prod_projections(const Term& f, const Term& g, PairVariant v);

/// (pi1 . inv_pi1 == id_X, inv_pi1 . pi1 == id_{X*unit}).
std::pair<Proof, Proof> derive_inv_pi1_iso(const ObjType& x);

/// Strong equality between two terms that differ only in the association
/// of composition. Throws TypeMismatch when the composition spines differ.
Proof derive_strong_reassoc(const Term& from, const Term& to);

} // namespace decoreq
