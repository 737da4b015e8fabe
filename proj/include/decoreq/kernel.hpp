#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "decoreq/decorations.hpp"
#include "decoreq/terms.hpp"

namespace decoreq {

enum class EqMode { Strong, Weak };

std::string to_string(EqMode m);

/// A pair of parallel terms related strongly (same result and same store
/// effect) or weakly (same result only).
struct Equation {
  Term lhs;
  Term rhs;
  EqMode mode;

  bool operator==(const Equation&) const = default;
};

/// Throws TypeMismatch unless lhs and rhs are parallel.
Equation mk_equation(const Term& lhs, const Term& rhs, EqMode mode);

std::string to_string(const Equation& eq);

/// The closed rule set. Nothing outside this enumeration is ever accepted.
enum class RuleName {
  // monadic equational logic
  StrongRefl,
  StrongSym,
  StrongTrans,
  Assoc,
  IdSrc,
  IdTgt,
  StrongSubs,
  StrongRepl,
  RoWeakToStrong,
  StrongToWeak,
  WeakSym,
  WeakTrans,
  WeakSubs,
  PureWeakRepl,
  // empty product
  WeakFinalUnique,
  CompFinalUnique,
  // pairs
  WeakProjPi1,
  StrongProjPi2,
  WeakPairUnicity,
  // observational rules for the store
  Axiom1,
  Axiom2,
  LocalToGlobal,
  // sentinel for names the parser could not resolve; always rejected
  Unknown,
};

std::string to_string(RuleName r);
std::optional<RuleName> rule_from_string(const std::string& name);

/// One rule application. `term_args` / `loc_args` bind the rule schema's
/// metavariables explicitly (no unification happens during checking);
/// metavariables determined by premise conclusions are read from those.
/// An optional stated conclusion is cross-checked, never trusted.
class Proof {
public:
  struct Node {
    RuleName rule = RuleName::Unknown;
    std::string unknown_name; // original text when rule == Unknown
    std::map<std::string, Term> term_args;
    std::map<std::string, std::string> loc_args;
    std::vector<Proof> premises;
    std::optional<Equation> stated;
    std::string label; // presentation only (lemma name); ignored by equality
  };

  static Proof make(RuleName rule, std::map<std::string, Term> term_args,
                    std::map<std::string, std::string> loc_args, std::vector<Proof> premises);
  static Proof unknown(std::string name);

  RuleName rule() const { return node_->rule; }
  const std::string& unknown_name() const { return node_->unknown_name; }
  const std::map<std::string, Term>& term_args() const { return node_->term_args; }
  const std::map<std::string, std::string>& loc_args() const { return node_->loc_args; }
  const std::vector<Proof>& premises() const { return node_->premises; }
  const std::optional<Equation>& stated() const { return node_->stated; }
  const std::string& label() const { return node_->label; }

  Proof with_stated(Equation conclusion) const;
  Proof with_label(std::string label) const;

  /// Number of rule applications in the tree.
  std::size_t size() const;

  /// Structural equality on rule, bindings and premises; labels and stated
  /// conclusions are presentation data and do not participate.
  bool operator==(const Proof& other) const;
  bool operator!=(const Proof& other) const { return !(*this == other); }

private:
  explicit Proof(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  std::shared_ptr<const Node> node_;
};

enum class RejectReason {
  UnknownRule,
  SchemaMismatch,
  SideConditionViolated,
  TypeMismatch,
  LocationClash,
  MissingLocationPremise,
};

std::string to_string(RejectReason r);

struct Rejection {
  std::string path; // e.g. "main/premise[1]/step_2_1"
  RejectReason reason;
  std::string message;
};

struct Verdict {
  bool ok;
  std::optional<Equation> conclusion; // set when ok
  std::optional<Rejection> rejection; // set when !ok

  explicit operator bool() const { return ok; }
};

/// Checks every node of `p` against its rule schema over `sig`.
/// Never throws for invalid proofs; the verdict carries the first
/// rejection found (leftmost-innermost).
Verdict check_proof(const Proof& p, const MemorySignature& sig);

/// Conclusion of a valid proof; throws InvalidProof otherwise.
Equation conclude(const Proof& p, const MemorySignature& sig);

/// Convenience constructors for rule applications, one per schema.
namespace rules {

Proof strong_refl(const Term& f);
Proof strong_sym(const Proof& p);
Proof strong_trans(const Proof& p, const Proof& q);
Proof assoc(const Term& f, const Term& g, const Term& h);
Proof id_src(const Term& f);
Proof id_tgt(const Term& f);
Proof strong_subs(const Term& f, const Proof& p);
Proof strong_repl(const Term& g, const Proof& p);
Proof ro_weak_to_strong(const Proof& p);
Proof strong_to_weak(const Proof& p);
Proof weak_sym(const Proof& p);
Proof weak_trans(const Proof& p, const Proof& q);
Proof weak_subs(const Term& f, const Proof& p);
Proof pure_weak_repl(const Term& g, const Proof& p);
Proof weak_final_unique(const Term& f, const Term& g);
Proof comp_final_unique(const Proof& effect, const Proof& result);
Proof weak_proj_pi1(const Term& f1, const Term& f2);
Proof strong_proj_pi2(const Term& f1, const Term& f2);
Proof weak_pair_unicity(const Proof& p1, const Proof& p2);
Proof axiom1(const std::string& i);
Proof axiom2(const std::string& i, const std::string& k);
Proof local_to_global(std::vector<Proof> premises);

} // namespace rules

} // namespace decoreq
