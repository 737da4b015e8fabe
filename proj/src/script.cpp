#include "decoreq/script.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "decoreq/derived.hpp"
#include "decoreq/parser.hpp"

namespace decoreq {

namespace {

// ------------------------------------------------------------- s-expressions

struct Sexp {
  enum Type { Atom, Str, List } type = Atom;
  std::string text;
  std::vector<Sexp> items;
  int line = 1, col = 1;
};

class SexpReader {
public:
  explicit SexpReader(const std::string& text) : text_(text) {}

  std::vector<Sexp> read_all() {
    std::vector<Sexp> out;
    skip_space();
    while (pos_ < text_.size()) {
      out.push_back(read());
      skip_space();
    }
    return out;
  }

private:
  Sexp read() {
    skip_space();
    if (pos_ >= text_.size()) error("unexpected end of input");
    Sexp s;
    s.line = line_;
    s.col = col_;
    char c = text_[pos_];
    if (c == '(') {
      bump();
      s.type = Sexp::List;
      skip_space();
      while (pos_ < text_.size() && text_[pos_] != ')') {
        s.items.push_back(read());
        skip_space();
      }
      if (pos_ >= text_.size()) error("missing ')'");
      bump();
      return s;
    }
    if (c == ')') error("unexpected ')'");
    if (c == '"') {
      bump();
      std::size_t start = pos_;
      while (pos_ < text_.size() && text_[pos_] != '"') bump();
      if (pos_ >= text_.size()) error("unterminated string");
      s.type = Sexp::Str;
      s.text = text_.substr(start, pos_ - start);
      bump();
      return s;
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
           text_[pos_] != '(' && text_[pos_] != ')' && text_[pos_] != '"')
      bump();
    s.type = Sexp::Atom;
    s.text = text_.substr(start, pos_ - start);
    return s;
  }

  void skip_space() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == ';' || c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') bump();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        bump();
      } else {
        break;
      }
    }
  }

  void bump() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  [[noreturn]] void error(const std::string& msg) const {
    fail(ErrorKind::ParseError, msg + " at " + std::to_string(line_) + ":" +
                                    std::to_string(col_));
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;
};

[[noreturn]] void error_at(const Sexp& s, const std::string& msg) {
  fail(ErrorKind::ParseError,
       msg + " at " + std::to_string(s.line) + ":" + std::to_string(s.col));
}

// ------------------------------------------------------------ proof loading

class ScriptLoader {
public:
  ScriptLoader(const MemorySignature& sig, std::string default_name)
      : sig_(sig), name_(std::move(default_name)) {}

  ProofScript load(const std::vector<Sexp>& forms) {
    std::optional<Equation> goal;
    std::optional<Proof> main;
    for (const Sexp& form : forms) {
      if (form.type != Sexp::List || form.items.empty() || form.items[0].type != Sexp::Atom)
        error_at(form, "expected a (script|goal|lemma|main ...) form");
      const std::string& head = form.items[0].text;
      if (head == "script") {
        if (form.items.size() != 2 || form.items[1].type != Sexp::Atom)
          error_at(form, "script form takes one name");
        name_ = form.items[1].text;
      } else if (head == "goal") {
        goal = parse_goal(form);
      } else if (head == "lemma") {
        if (form.items.size() < 3 || form.items[1].type != Sexp::Atom)
          error_at(form, "lemma form is (lemma <name> [(shows ...)] <proof>)");
        const std::string& lemma_name = form.items[1].text;
        if (lemmas_.count(lemma_name)) error_at(form, "lemma '" + lemma_name + "' redefined");
        std::size_t body_index = 2;
        std::optional<Equation> shows;
        if (form.items[2].type == Sexp::List && !form.items[2].items.empty() &&
            form.items[2].items[0].type == Sexp::Atom && form.items[2].items[0].text == "shows") {
          shows = parse_goal(form.items[2]);
          body_index = 3;
        }
        if (form.items.size() != body_index + 1)
          error_at(form, "lemma form is (lemma <name> [(shows ...)] <proof>)");
        Proof p = proof_expr(form.items[body_index]);
        if (shows) p = p.with_stated(*shows);
        p = p.with_label(lemma_name);
        lemmas_.insert({lemma_name, p});
        lemma_order_.push_back(lemma_name);
      } else if (head == "main") {
        if (form.items.size() != 2) error_at(form, "main form takes one proof");
        if (main) error_at(form, "main redefined");
        main = proof_expr(form.items[1]);
      } else {
        error_at(form, "unknown form '" + head + "'");
      }
    }
    if (!goal) fail(ErrorKind::ParseError, "script has no (goal ...) form");
    if (!main) fail(ErrorKind::ParseError, "script has no (main ...) form");
    return ProofScript{name_, *goal, main->with_stated(*goal).with_label("main"), lemma_order_};
  }

private:
  const MemorySignature& sig_;
  std::string name_;
  std::map<std::string, Proof> lemmas_;
  std::vector<std::string> lemma_order_;

  Equation parse_goal(const Sexp& form) {
    if (form.items.size() != 4 || form.items[1].type != Sexp::Atom ||
        form.items[2].type != Sexp::Str || form.items[3].type != Sexp::Str)
      error_at(form, "expected (" + form.items[0].text + " strong|weak \"lhs\" \"rhs\")");
    EqMode mode;
    if (form.items[1].text == "strong")
      mode = EqMode::Strong;
    else if (form.items[1].text == "weak")
      mode = EqMode::Weak;
    else
      error_at(form.items[1], "mode must be 'strong' or 'weak'");
    Term lhs = parse_term(form.items[2].text, sig_);
    Term rhs = parse_term(form.items[3].text, sig_);
    return mk_equation(lhs, rhs, mode);
  }

  struct Args {
    std::map<std::string, Term> terms;
    std::map<std::string, ObjType> types;
    std::map<std::string, std::string> atoms; // locations, variants
    std::vector<Proof> premises;
  };

  // Keys ending in a type-metavariable name (X, Y) take types; i and k take
  // locations; variant takes an atom; everything else is a term.
  Args parse_args(const Sexp& node, std::size_t from) {
    Args args;
    for (std::size_t idx = from; idx < node.items.size(); ++idx) {
      const Sexp& item = node.items[idx];
      if (item.type == Sexp::Atom && !item.text.empty() && item.text[0] == ':') {
        std::string key = item.text.substr(1);
        ++idx;
        if (idx >= node.items.size()) error_at(item, "binding ':" + key + "' has no value");
        const Sexp& value = node.items[idx];
        if (key == "i" || key == "k" || key == "variant") {
          if (value.type != Sexp::Atom) error_at(value, "':" + key + "' takes a bare name");
          args.atoms[key] = value.text;
        } else if (key == "X" || key == "Y") {
          if (value.type != Sexp::Str) error_at(value, "':" + key + "' takes a quoted type");
          args.types.insert({key, parse_type(value.text, sig_)});
        } else {
          if (value.type != Sexp::Str) error_at(value, "':" + key + "' takes a quoted term");
          args.terms.insert({key, parse_term(value.text, sig_)});
        }
      } else {
        args.premises.push_back(proof_expr(item));
      }
    }
    return args;
  }

  Term term_of(const Args& args, const Sexp& node, const char* key) {
    auto it = args.terms.find(key);
    if (it == args.terms.end()) error_at(node, std::string("missing term binding ':") + key + "'");
    return it->second;
  }

  ObjType type_of(const Args& args, const Sexp& node, const char* key) {
    auto it = args.types.find(key);
    if (it == args.types.end()) error_at(node, std::string("missing type binding ':") + key + "'");
    return it->second;
  }

  std::string atom_of(const Args& args, const Sexp& node, const char* key) {
    auto it = args.atoms.find(key);
    if (it == args.atoms.end()) error_at(node, std::string("missing binding ':") + key + "'");
    return it->second;
  }

  PairVariant variant_of(const Args& args, const Sexp& node) {
    std::string v = atom_of(args, node, "variant");
    if (v == "purerw") return PairVariant::PureRw;
    if (v == "purero") return PairVariant::PureRo;
    if (v == "rwpure") return PairVariant::RwPure;
    if (v == "ropure") return PairVariant::RoPure;
    error_at(node, "unknown variant '" + v + "'");
  }

  Proof proof_expr(const Sexp& node) {
    if (node.type == Sexp::Atom) {
      auto it = lemmas_.find(node.text);
      if (it == lemmas_.end()) error_at(node, "reference to unknown lemma '" + node.text + "'");
      return it->second;
    }
    if (node.type != Sexp::List || node.items.empty() || node.items[0].type != Sexp::Atom)
      error_at(node, "expected a rule application");
    const std::string& head = node.items[0].text;

    // Derived-rule forms expand to kernel proofs while loading.
    if (head == "weak-refl") {
      Args a = parse_args(node, 1);
      return derive_weak_refl(term_of(a, node, "f"));
    }
    if (head == "e03") {
      Args a = parse_args(node, 1);
      return derive_E_0_3(term_of(a, node, "f"), term_of(a, node, "g"), term_of(a, node, "h"));
    }
    if (head == "e14") {
      Args a = parse_args(node, 1);
      return derive_E_1_4(term_of(a, node, "h"));
    }
    if (head == "pair-proj1" || head == "pair-proj2") {
      Args a = parse_args(node, 1);
      ProjectionProofs pp = derive_pair_projections(term_of(a, node, "f1"),
                                                    term_of(a, node, "f2"), variant_of(a, node));
      return head == "pair-proj1" ? pp.pi1_proof : pp.pi2_proof;
    }
    if (head == "prod-proj1" || head == "prod-proj2") {
      Args a = parse_args(node, 1);
      ProjectionProofs pp = derive_prod_projections(term_of(a, node, "f"), term_of(a, node, "g"),
                                                    variant_of(a, node));
      return head == "prod-proj1" ? pp.pi1_proof : pp.pi2_proof;
    }
    if (head == "perm-prod-proj1" || head == "perm-prod-proj2") {
      Args a = parse_args(node, 1);
      ProjectionProofs pp = derive_perm_prod_projections(
          term_of(a, node, "f"), term_of(a, node, "g"), variant_of(a, node));
      return head == "perm-prod-proj1" ? pp.pi1_proof : pp.pi2_proof;
    }
    if (head == "inv-pi1-iso1" || head == "inv-pi1-iso2") {
      Args a = parse_args(node, 1);
      auto [fwd, bwd] = derive_inv_pi1_iso(type_of(a, node, "X"));
      return head == "inv-pi1-iso1" ? fwd : bwd;
    }
    if (head == "reassoc") {
      Args a = parse_args(node, 1);
      return derive_strong_reassoc(term_of(a, node, "from"), term_of(a, node, "to"));
    }

    std::optional<RuleName> rule = rule_from_string(head);
    if (!rule) {
      // Keep the node; the checker reports UnknownRule with its path.
      skip_args(node);
      return Proof::unknown(head);
    }
    Args a = parse_args(node, 1);
    std::map<std::string, Term> term_args = std::move(a.terms);
    std::map<std::string, std::string> loc_args = std::move(a.atoms);
    loc_args.erase("variant");
    return Proof::make(*rule, std::move(term_args), std::move(loc_args), std::move(a.premises));
  }

  // Consume the arguments of an unknown rule without interpreting them.
  void skip_args(const Sexp& node) {
    for (std::size_t idx = 1; idx < node.items.size(); ++idx) {
      const Sexp& item = node.items[idx];
      if (item.type == Sexp::Atom && !item.text.empty() && item.text[0] == ':') ++idx;
    }
  }
};

} // namespace

ProofScript parse_proof_script(const std::string& text, const MemorySignature& sig,
                               const std::string& default_name) {
  SexpReader reader(text);
  std::vector<Sexp> forms = reader.read_all();
  ScriptLoader loader(sig, default_name);
  return loader.load(forms);
}

ProofScript load_proof_script(const std::string& path, const MemorySignature& sig) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::ParseError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string name = path;
  if (auto slash = name.find_last_of('/'); slash != std::string::npos) name = name.substr(slash + 1);
  if (auto dot = name.find_last_of('.'); dot != std::string::npos) name = name.substr(0, dot);
  return parse_proof_script(buf.str(), sig, name);
}

} // namespace decoreq
