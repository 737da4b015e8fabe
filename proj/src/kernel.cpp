#include "decoreq/kernel.hpp"

#include <sstream>

namespace decoreq {

std::string to_string(EqMode m) { return m == EqMode::Strong ? "strong" : "weak"; }

Equation mk_equation(const Term& lhs, const Term& rhs, EqMode mode) {
  if (lhs.dom() != rhs.dom() || lhs.cod() != rhs.cod())
    fail(ErrorKind::TypeMismatch,
         "equation sides are not parallel: " + to_string(lhs.dom()) + " -> " +
             to_string(lhs.cod()) + " vs " + to_string(rhs.dom()) + " -> " + to_string(rhs.cod()));
  return Equation{lhs, rhs, mode};
}

std::string to_string(const Equation& eq) {
  return to_string(eq.lhs) + (eq.mode == EqMode::Strong ? " == " : " ~ ") + to_string(eq.rhs);
}

std::string to_string(RuleName r) {
  switch (r) {
    case RuleName::StrongRefl: return "strong-refl";
    case RuleName::StrongSym: return "strong-sym";
    case RuleName::StrongTrans: return "strong-trans";
    case RuleName::Assoc: return "assoc";
    case RuleName::IdSrc: return "id-src";
    case RuleName::IdTgt: return "id-tgt";
    case RuleName::StrongSubs: return "strong-subs";
    case RuleName::StrongRepl: return "strong-repl";
    case RuleName::RoWeakToStrong: return "ro-weak-to-strong";
    case RuleName::StrongToWeak: return "strong-to-weak";
    case RuleName::WeakSym: return "weak-sym";
    case RuleName::WeakTrans: return "weak-trans";
    case RuleName::WeakSubs: return "weak-subs";
    case RuleName::PureWeakRepl: return "pure-weak-repl";
    case RuleName::WeakFinalUnique: return "weak-final-unique";
    case RuleName::CompFinalUnique: return "comp-final-unique";
    case RuleName::WeakProjPi1: return "weak-proj-pi1";
    case RuleName::StrongProjPi2: return "strong-proj-pi2";
    case RuleName::WeakPairUnicity: return "weak-pair-unicity";
    case RuleName::Axiom1: return "axiom1";
    case RuleName::Axiom2: return "axiom2";
    case RuleName::LocalToGlobal: return "local-to-global";
    case RuleName::Unknown: return "unknown";
  }
  return "unknown";
}

std::optional<RuleName> rule_from_string(const std::string& name) {
  static const std::map<std::string, RuleName> table = {
      {"strong-refl", RuleName::StrongRefl},
      {"strong-sym", RuleName::StrongSym},
      {"strong-trans", RuleName::StrongTrans},
      {"assoc", RuleName::Assoc},
      {"id-src", RuleName::IdSrc},
      {"id-tgt", RuleName::IdTgt},
      {"strong-subs", RuleName::StrongSubs},
      {"strong-repl", RuleName::StrongRepl},
      {"ro-weak-to-strong", RuleName::RoWeakToStrong},
      {"strong-to-weak", RuleName::StrongToWeak},
      {"weak-sym", RuleName::WeakSym},
      {"weak-trans", RuleName::WeakTrans},
      {"weak-subs", RuleName::WeakSubs},
      {"pure-weak-repl", RuleName::PureWeakRepl},
      {"weak-final-unique", RuleName::WeakFinalUnique},
      {"comp-final-unique", RuleName::CompFinalUnique},
      {"weak-proj-pi1", RuleName::WeakProjPi1},
      {"strong-proj-pi2", RuleName::StrongProjPi2},
      {"weak-pair-unicity", RuleName::WeakPairUnicity},
      {"axiom1", RuleName::Axiom1},
      {"axiom2", RuleName::Axiom2},
      {"local-to-global", RuleName::LocalToGlobal},
  };
  auto it = table.find(name);
  if (it == table.end()) return std::nullopt;
  return it->second;
}

std::string to_string(RejectReason r) {
  switch (r) {
    case RejectReason::UnknownRule: return "UnknownRule";
    case RejectReason::SchemaMismatch: return "SchemaMismatch";
    case RejectReason::SideConditionViolated: return "SideConditionViolated";
    case RejectReason::TypeMismatch: return "TypeMismatch";
    case RejectReason::LocationClash: return "LocationClash";
    case RejectReason::MissingLocationPremise: return "MissingLocationPremise";
  }
  return "?";
}

// ------------------------------------------------------------------ Proof

Proof Proof::make(RuleName rule, std::map<std::string, Term> term_args,
                  std::map<std::string, std::string> loc_args, std::vector<Proof> premises) {
  auto node = std::make_shared<Node>();
  node->rule = rule;
  node->term_args = std::move(term_args);
  node->loc_args = std::move(loc_args);
  node->premises = std::move(premises);
  return Proof(node);
}

Proof Proof::unknown(std::string name) {
  auto node = std::make_shared<Node>();
  node->rule = RuleName::Unknown;
  node->unknown_name = std::move(name);
  return Proof(node);
}

Proof Proof::with_stated(Equation conclusion) const {
  auto node = std::make_shared<Node>(*node_);
  node->stated = std::move(conclusion);
  return Proof(node);
}

Proof Proof::with_label(std::string label) const {
  auto node = std::make_shared<Node>(*node_);
  node->label = std::move(label);
  return Proof(node);
}

std::size_t Proof::size() const {
  std::size_t n = 1;
  for (const auto& p : premises()) n += p.size();
  return n;
}

bool Proof::operator==(const Proof& other) const {
  if (node_ == other.node_) return true;
  if (rule() != other.rule() || unknown_name() != other.unknown_name()) return false;
  if (term_args() != other.term_args() || loc_args() != other.loc_args()) return false;
  if (premises().size() != other.premises().size()) return false;
  for (std::size_t i = 0; i < premises().size(); ++i)
    if (premises()[i] != other.premises()[i]) return false;
  return true;
}

// ---------------------------------------------------------------- checker

namespace {

struct RejectError {
  Rejection rejection;
};

[[noreturn]] void reject(const std::string& path, RejectReason reason, const std::string& msg) {
  throw RejectError{Rejection{path, reason, msg}};
}

class Checker {
public:
  explicit Checker(const MemorySignature& sig) : sig_(sig) {}

  Equation check(const Proof& p, const std::string& path) {
    Equation conclusion = check_node(p, path);
    if (p.stated() && *p.stated() != conclusion)
      reject(path, RejectReason::SchemaMismatch,
             "stated conclusion '" + to_string(*p.stated()) +
                 "' is not the rule instance's conclusion '" + to_string(conclusion) + "'");
    return conclusion;
  }

private:
  const MemorySignature& sig_;

  const Term& term_arg(const Proof& p, const char* name, const std::string& path) {
    auto it = p.term_args().find(name);
    if (it == p.term_args().end())
      reject(path, RejectReason::SchemaMismatch,
             std::string(to_string(p.rule())) + " needs a term binding '" + name + "'");
    return it->second;
  }

  const std::string& loc_arg(const Proof& p, const char* name, const std::string& path) {
    auto it = p.loc_args().find(name);
    if (it == p.loc_args().end())
      reject(path, RejectReason::SchemaMismatch,
             std::string(to_string(p.rule())) + " needs a location binding '" + name + "'");
    return it->second;
  }

  void need_premises(const Proof& p, std::size_t n, const std::string& path) {
    if (p.premises().size() != n)
      reject(path, RejectReason::SchemaMismatch,
             std::string(to_string(p.rule())) + " takes " + std::to_string(n) + " premise(s), got " +
                 std::to_string(p.premises().size()));
  }

  std::string premise_path(const Proof& parent_child, const std::string& path, std::size_t i) {
    if (!parent_child.label().empty()) return path + "/" + parent_child.label();
    return path + "/premise[" + std::to_string(i) + "]";
  }

  Equation premise(const Proof& p, std::size_t i, EqMode mode, const std::string& path) {
    Equation eq = check(p.premises()[i], premise_path(p.premises()[i], path, i));
    if (eq.mode != mode)
      reject(path, RejectReason::SchemaMismatch,
             "premise " + std::to_string(i) + " of " + to_string(p.rule()) + " must be a " +
                 to_string(mode) + " equation, got " + to_string(eq));
    return eq;
  }

  // Term builders that turn typing failures into rejections at `path`.
  Term comp(const Term& g, const Term& f, const std::string& path) {
    try {
      return mk_comp(g, f);
    } catch (const Error& e) {
      reject(path, RejectReason::TypeMismatch, e.what());
    }
  }

  Term pair(const Term& f, const Term& g, const std::string& path) {
    try {
      return mk_pair(f, g);
    } catch (const Error& e) {
      reject(path, RejectReason::TypeMismatch, e.what());
    }
  }

  Equation equation(const Term& l, const Term& r, EqMode m, const std::string& path) {
    try {
      return mk_equation(l, r, m);
    } catch (const Error& e) {
      reject(path, RejectReason::TypeMismatch, e.what());
    }
  }

  void need_kind(const Term& t, Kind k, const char* role, const std::string& path) {
    if (!has_kind(t, k))
      reject(path, RejectReason::SideConditionViolated,
             std::string(role) + " must be " + to_string(k) + ", but '" + to_string(t) +
                 "' has kind " + to_string(infer_kind(t)));
  }

  Equation check_node(const Proof& p, const std::string& path) {
    switch (p.rule()) {
      case RuleName::Unknown:
        reject(path, RejectReason::UnknownRule, "no rule named '" + p.unknown_name() + "'");

      case RuleName::StrongRefl: {
        need_premises(p, 0, path);
        const Term& f = term_arg(p, "f", path);
        return Equation{f, f, EqMode::Strong};
      }

      case RuleName::StrongSym: {
        need_premises(p, 1, path);
        Equation e = premise(p, 0, EqMode::Strong, path);
        return Equation{e.rhs, e.lhs, EqMode::Strong};
      }

      case RuleName::StrongTrans: {
        need_premises(p, 2, path);
        Equation a = premise(p, 0, EqMode::Strong, path);
        Equation b = premise(p, 1, EqMode::Strong, path);
        if (a.rhs != b.lhs)
          reject(path, RejectReason::SchemaMismatch,
                 "transitivity needs matching middle terms: '" + to_string(a.rhs) + "' vs '" +
                     to_string(b.lhs) + "'");
        return Equation{a.lhs, b.rhs, EqMode::Strong};
      }

      case RuleName::Assoc: {
        need_premises(p, 0, path);
        const Term& f = term_arg(p, "f", path);
        const Term& g = term_arg(p, "g", path);
        const Term& h = term_arg(p, "h", path);
        Term lhs = comp(h, comp(g, f, path), path);
        Term rhs = comp(comp(h, g, path), f, path);
        return Equation{lhs, rhs, EqMode::Strong};
      }

      case RuleName::IdSrc: {
        need_premises(p, 0, path);
        const Term& f = term_arg(p, "f", path);
        return Equation{comp(f, mk_id(f.dom()), path), f, EqMode::Strong};
      }

      case RuleName::IdTgt: {
        need_premises(p, 0, path);
        const Term& f = term_arg(p, "f", path);
        return Equation{comp(mk_id(f.cod()), f, path), f, EqMode::Strong};
      }

      case RuleName::StrongSubs:
      case RuleName::WeakSubs: {
        need_premises(p, 1, path);
        EqMode m = p.rule() == RuleName::StrongSubs ? EqMode::Strong : EqMode::Weak;
        const Term& f = term_arg(p, "f", path);
        Equation e = premise(p, 0, m, path);
        return Equation{comp(e.lhs, f, path), comp(e.rhs, f, path), m};
      }

      case RuleName::StrongRepl: {
        need_premises(p, 1, path);
        const Term& g = term_arg(p, "g", path);
        Equation e = premise(p, 0, EqMode::Strong, path);
        return Equation{comp(g, e.lhs, path), comp(g, e.rhs, path), EqMode::Strong};
      }

      case RuleName::PureWeakRepl: {
        need_premises(p, 1, path);
        const Term& g = term_arg(p, "g", path);
        need_kind(g, Kind::Pure, "the replaced context", path);
        Equation e = premise(p, 0, EqMode::Weak, path);
        return Equation{comp(g, e.lhs, path), comp(g, e.rhs, path), EqMode::Weak};
      }

      case RuleName::RoWeakToStrong: {
        need_premises(p, 1, path);
        Equation e = premise(p, 0, EqMode::Weak, path);
        need_kind(e.lhs, Kind::Ro, "the left side", path);
        need_kind(e.rhs, Kind::Ro, "the right side", path);
        return Equation{e.lhs, e.rhs, EqMode::Strong};
      }

      case RuleName::StrongToWeak: {
        need_premises(p, 1, path);
        Equation e = premise(p, 0, EqMode::Strong, path);
        return Equation{e.lhs, e.rhs, EqMode::Weak};
      }

      case RuleName::WeakSym: {
        need_premises(p, 1, path);
        Equation e = premise(p, 0, EqMode::Weak, path);
        return Equation{e.rhs, e.lhs, EqMode::Weak};
      }

      case RuleName::WeakTrans: {
        need_premises(p, 2, path);
        Equation a = premise(p, 0, EqMode::Weak, path);
        Equation b = premise(p, 1, EqMode::Weak, path);
        if (a.rhs != b.lhs)
          reject(path, RejectReason::SchemaMismatch,
                 "transitivity needs matching middle terms: '" + to_string(a.rhs) + "' vs '" +
                     to_string(b.lhs) + "'");
        return Equation{a.lhs, b.rhs, EqMode::Weak};
      }

      case RuleName::WeakFinalUnique: {
        need_premises(p, 0, path);
        const Term& f = term_arg(p, "f", path);
        const Term& g = term_arg(p, "g", path);
        if (f.cod() != unit_ty() || g.cod() != unit_ty())
          reject(path, RejectReason::SchemaMismatch,
                 "both terms must land in unit: " + to_string(f.cod()) + " vs " +
                     to_string(g.cod()));
        return equation(f, g, EqMode::Weak, path);
      }

      case RuleName::CompFinalUnique: {
        need_premises(p, 2, path);
        Equation effect = premise(p, 0, EqMode::Strong, path);
        Equation result = premise(p, 1, EqMode::Weak, path);
        Term want_l = comp(mk_final(result.lhs.cod()), result.lhs, path);
        Term want_r = comp(mk_final(result.rhs.cod()), result.rhs, path);
        if (effect.lhs != want_l || effect.rhs != want_r)
          reject(path, RejectReason::SchemaMismatch,
                 "effect premise must be 'final o lhs == final o rhs' for the result premise; got '" +
                     to_string(effect) + "'");
        return Equation{result.lhs, result.rhs, EqMode::Strong};
      }

      case RuleName::WeakProjPi1:
      case RuleName::StrongProjPi2: {
        need_premises(p, 0, path);
        const Term& f1 = term_arg(p, "f1", path);
        const Term& f2 = term_arg(p, "f2", path);
        need_kind(f1, Kind::Ro, "the first pair component", path);
        Term pr = pair(f1, f2, path);
        if (p.rule() == RuleName::WeakProjPi1) {
          Term proj = mk_pi1(f1.cod(), f2.cod());
          return Equation{comp(proj, pr, path), f1, EqMode::Weak};
        }
        Term proj = mk_pi2(f1.cod(), f2.cod());
        return Equation{comp(proj, pr, path), f2, EqMode::Strong};
      }

      case RuleName::WeakPairUnicity: {
        need_premises(p, 2, path);
        Equation a = premise(p, 0, EqMode::Weak, path);
        Equation b = premise(p, 1, EqMode::Weak, path);
        auto split = [&](const Equation& e, TermTag proj_tag, const char* which) {
          if (e.lhs.tag() != TermTag::Comp || e.rhs.tag() != TermTag::Comp ||
              e.lhs.second().tag() != proj_tag || e.rhs.second() != e.lhs.second())
            reject(path, RejectReason::SchemaMismatch,
                   std::string("premise ") + which + " must relate the same projection of both " +
                       "sides, got '" + to_string(e) + "'");
          return std::make_pair(e.lhs.first(), e.rhs.first());
        };
        auto [f_a, g_a] = split(a, TermTag::Pi1, "0");
        auto [f_b, g_b] = split(b, TermTag::Pi2, "1");
        if (f_a != f_b || g_a != g_b)
          reject(path, RejectReason::SchemaMismatch,
                 "the two projection premises talk about different terms");
        return Equation{f_a, g_a, EqMode::Weak};
      }

      case RuleName::Axiom1: {
        need_premises(p, 0, path);
        const std::string& i = loc_arg(p, "i", path);
        Term lk = lookup(i, path);
        Term up = update(i, path);
        return Equation{comp(lk, up, path), mk_id(up.dom()), EqMode::Weak};
      }

      case RuleName::Axiom2: {
        need_premises(p, 0, path);
        const std::string& i = loc_arg(p, "i", path);
        const std::string& k = loc_arg(p, "k", path);
        if (i == k)
          reject(path, RejectReason::LocationClash,
                 "axiom2 needs two distinct locations, got '" + i + "' twice");
        Term lk = lookup(i, path);
        Term up = update(k, path);
        return Equation{comp(lk, up, path), comp(lk, mk_final(up.dom()), path), EqMode::Weak};
      }

      case RuleName::LocalToGlobal: {
        const auto& locs = sig_.locations();
        if (p.premises().size() != locs.size())
          reject(path, RejectReason::MissingLocationPremise,
                 "needs one premise per declared location (" + std::to_string(locs.size()) +
                     "), got " + std::to_string(p.premises().size()));
        std::optional<Term> f, g;
        for (std::size_t k = 0; k < locs.size(); ++k) {
          Equation e = premise(p, k, EqMode::Weak, path);
          if (e.lhs.tag() != TermTag::Comp || e.rhs.tag() != TermTag::Comp ||
              e.lhs.second().tag() != TermTag::Lookup || e.rhs.second().tag() != TermTag::Lookup)
            reject(path, RejectReason::MissingLocationPremise,
                   "premise " + std::to_string(k) + " must observe one location of both sides");
          if (e.lhs.second().location() != locs[k] || e.rhs.second().location() != locs[k])
            reject(path, RejectReason::MissingLocationPremise,
                   "premise " + std::to_string(k) + " must observe location '" + locs[k] +
                       "' (signature order), got '" + e.lhs.second().location() + "'");
          if (!f) {
            f = e.lhs.first();
            g = e.rhs.first();
            if (f->cod() != unit_ty())
              reject(path, RejectReason::SchemaMismatch,
                     "only effect-only terms (into unit) can be compared location by location");
          } else if (e.lhs.first() != *f || e.rhs.first() != *g) {
            reject(path, RejectReason::MissingLocationPremise,
                   "premise " + std::to_string(k) + " observes different terms than the others");
          }
        }
        if (!f) // no locations declared: nothing can be concluded
          reject(path, RejectReason::MissingLocationPremise,
                 "the signature declares no locations to observe");
        return Equation{*f, *g, EqMode::Strong};
      }
    }
    reject(path, RejectReason::UnknownRule, "unhandled rule");
  }

  Term lookup(const std::string& i, const std::string& path) {
    try {
      return mk_lookup(sig_, i);
    } catch (const Error& e) {
      reject(path, RejectReason::TypeMismatch, e.what());
    }
  }

  Term update(const std::string& i, const std::string& path) {
    try {
      return mk_update(sig_, i);
    } catch (const Error& e) {
      reject(path, RejectReason::TypeMismatch, e.what());
    }
  }
};

} // namespace

Verdict check_proof(const Proof& p, const MemorySignature& sig) {
  Checker checker(sig);
  std::string root = p.label().empty() ? std::string("main") : p.label();
  try {
    Equation eq = checker.check(p, root);
    return Verdict{true, eq, std::nullopt};
  } catch (const RejectError& r) {
    return Verdict{false, std::nullopt, r.rejection};
  }
}

Equation conclude(const Proof& p, const MemorySignature& sig) {
  Verdict v = check_proof(p, sig);
  if (!v.ok)
    fail(ErrorKind::InvalidProof,
         v.rejection->message + " (at " + v.rejection->path + ")");
  return *v.conclusion;
}

// ------------------------------------------------------ rule constructors

namespace rules {

Proof strong_refl(const Term& f) { return Proof::make(RuleName::StrongRefl, {{"f", f}}, {}, {}); }

Proof strong_sym(const Proof& p) { return Proof::make(RuleName::StrongSym, {}, {}, {p}); }

Proof strong_trans(const Proof& p, const Proof& q) {
  return Proof::make(RuleName::StrongTrans, {}, {}, {p, q});
}

Proof assoc(const Term& f, const Term& g, const Term& h) {
  return Proof::make(RuleName::Assoc, {{"f", f}, {"g", g}, {"h", h}}, {}, {});
}

Proof id_src(const Term& f) { return Proof::make(RuleName::IdSrc, {{"f", f}}, {}, {}); }

Proof id_tgt(const Term& f) { return Proof::make(RuleName::IdTgt, {{"f", f}}, {}, {}); }

Proof strong_subs(const Term& f, const Proof& p) {
  return Proof::make(RuleName::StrongSubs, {{"f", f}}, {}, {p});
}

Proof strong_repl(const Term& g, const Proof& p) {
  return Proof::make(RuleName::StrongRepl, {{"g", g}}, {}, {p});
}

Proof ro_weak_to_strong(const Proof& p) {
  return Proof::make(RuleName::RoWeakToStrong, {}, {}, {p});
}

Proof strong_to_weak(const Proof& p) { return Proof::make(RuleName::StrongToWeak, {}, {}, {p}); }

Proof weak_sym(const Proof& p) { return Proof::make(RuleName::WeakSym, {}, {}, {p}); }

Proof weak_trans(const Proof& p, const Proof& q) {
  return Proof::make(RuleName::WeakTrans, {}, {}, {p, q});
}

Proof weak_subs(const Term& f, const Proof& p) {
  return Proof::make(RuleName::WeakSubs, {{"f", f}}, {}, {p});
}

Proof pure_weak_repl(const Term& g, const Proof& p) {
  return Proof::make(RuleName::PureWeakRepl, {{"g", g}}, {}, {p});
}

Proof weak_final_unique(const Term& f, const Term& g) {
  return Proof::make(RuleName::WeakFinalUnique, {{"f", f}, {"g", g}}, {}, {});
}

Proof comp_final_unique(const Proof& effect, const Proof& result) {
  return Proof::make(RuleName::CompFinalUnique, {}, {}, {effect, result});
}

Proof weak_proj_pi1(const Term& f1, const Term& f2) {
  return Proof::make(RuleName::WeakProjPi1, {{"f1", f1}, {"f2", f2}}, {}, {});
}

Proof strong_proj_pi2(const Term& f1, const Term& f2) {
  return Proof::make(RuleName::StrongProjPi2, {{"f1", f1}, {"f2", f2}}, {}, {});
}

Proof weak_pair_unicity(const Proof& p1, const Proof& p2) {
  return Proof::make(RuleName::WeakPairUnicity, {}, {}, {p1, p2});
}

Proof axiom1(const std::string& i) { return Proof::make(RuleName::Axiom1, {}, {{"i", i}}, {}); }

Proof axiom2(const std::string& i, const std::string& k) {
  return Proof::make(RuleName::Axiom2, {}, {{"i", i}, {"k", k}}, {});
}

Proof local_to_global(std::vector<Proof> premises) {
  return Proof::make(RuleName::LocalToGlobal, {}, {}, std::move(premises));
}

} // namespace rules

} // namespace decoreq
