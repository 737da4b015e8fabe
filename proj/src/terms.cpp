#include "decoreq/terms.hpp"

#include <sstream>

namespace decoreq {

// ---------------------------------------------------------------- ObjType

bool ObjType::operator==(const ObjType& other) const {
  if (node_ == other.node_) return true;
  if (node_->tag != other.node_->tag) return false;
  switch (node_->tag) {
    case TypeTag::Unit: return true;
    case TypeTag::Val: return node_->loc == other.node_->loc;
    case TypeTag::Prod:
      return ObjType(node_->left) == ObjType(other.node_->left) &&
             ObjType(node_->right) == ObjType(other.node_->right);
  }
  return false;
}

ObjType unit_ty() {
  static const ObjType u = [] {
    auto node = std::make_shared<ObjType::Node>();
    node->tag = TypeTag::Unit;
    return ObjType(node);
  }();
  return u;
}

ObjType val_ty(const MemorySignature& sig, const std::string& loc) {
  if (!sig.has_location(loc))
    fail(ErrorKind::UnknownLocation, "location '" + loc + "' is not declared");
  auto node = std::make_shared<ObjType::Node>();
  node->tag = TypeTag::Val;
  node->loc = loc;
  return ObjType(node);
}

ObjType prod_ty(const ObjType& left, const ObjType& right) {
  auto node = std::make_shared<ObjType::Node>();
  node->tag = TypeTag::Prod;
  node->left = left.node_;
  node->right = right.node_;
  return ObjType(node);
}

std::string to_string(const ObjType& ty) {
  switch (ty.tag()) {
    case TypeTag::Unit: return "unit";
    case TypeTag::Val: return "V(" + ty.location() + ")";
    case TypeTag::Prod: {
      std::string l = to_string(ty.left());
      std::string r = to_string(ty.right());
      if (ty.right().tag() == TypeTag::Prod) r = "(" + r + ")"; // * is left associative
      return l + "*" + r;
    }
  }
  return "?";
}

// ------------------------------------------------------------------- Term

namespace {

Term build(TermTag tag, ObjType dom, ObjType cod, std::string loc = {},
           std::shared_ptr<const Term::Node> first = nullptr,
           std::shared_ptr<const Term::Node> second = nullptr) {
  return Term(std::make_shared<const Term::Node>(tag, std::move(dom), std::move(cod),
                                                 std::move(loc), std::move(first),
                                                 std::move(second)));
}

} // namespace

bool Term::operator==(const Term& other) const {
  if (node_ == other.node_) return true;
  if (node_->tag != other.node_->tag) return false;
  switch (node_->tag) {
    case TermTag::Id:
    case TermTag::Final: return dom() == other.dom();
    case TermTag::Pi1:
    case TermTag::Pi2: return dom() == other.dom();
    case TermTag::Lookup:
    case TermTag::Update: return node_->loc == other.node_->loc;
    case TermTag::Comp:
    case TermTag::Pair: return first() == other.first() && second() == other.second();
  }
  return false;
}

Term mk_id(const ObjType& x) { return build(TermTag::Id, x, x); }

Term mk_final(const ObjType& x) { return build(TermTag::Final, x, unit_ty()); }

Term mk_comp(const Term& g, const Term& f) {
  if (f.cod() != g.dom())
    fail(ErrorKind::TypeMismatch, "cannot compose: cod of first leg is " + to_string(f.cod()) +
                                      " but dom of second leg is " + to_string(g.dom()));
  return build(TermTag::Comp, f.dom(), g.cod(), {}, f.node(), g.node());
}

Term mk_pair(const Term& f, const Term& g) {
  if (f.dom() != g.dom())
    fail(ErrorKind::TypeMismatch, "pair components must share a domain: " + to_string(f.dom()) +
                                      " vs " + to_string(g.dom()));
  return build(TermTag::Pair, f.dom(), prod_ty(f.cod(), g.cod()), {}, f.node(), g.node());
}

Term mk_pi1(const ObjType& x, const ObjType& y) { return build(TermTag::Pi1, prod_ty(x, y), x); }

Term mk_pi2(const ObjType& x, const ObjType& y) { return build(TermTag::Pi2, prod_ty(x, y), y); }

Term mk_lookup(const MemorySignature& sig, const std::string& loc) {
  return build(TermTag::Lookup, unit_ty(), val_ty(sig, loc), loc);
}

Term mk_update(const MemorySignature& sig, const std::string& loc) {
  return build(TermTag::Update, val_ty(sig, loc), unit_ty(), loc);
}

bool validate_term(const Term& t) {
  switch (t.tag()) {
    case TermTag::Id: return t.dom() == t.cod();
    case TermTag::Final: return t.cod() == unit_ty();
    case TermTag::Comp:
      return validate_term(t.first()) && validate_term(t.second()) &&
             t.first().cod() == t.second().dom() && t.dom() == t.first().dom() &&
             t.cod() == t.second().cod();
    case TermTag::Pair:
      return validate_term(t.first()) && validate_term(t.second()) &&
             t.first().dom() == t.second().dom() && t.dom() == t.first().dom() &&
             t.cod() == prod_ty(t.first().cod(), t.second().cod());
    case TermTag::Pi1:
      return t.dom().tag() == TypeTag::Prod && t.cod() == t.dom().left();
    case TermTag::Pi2:
      return t.dom().tag() == TypeTag::Prod && t.cod() == t.dom().right();
    case TermTag::Lookup:
      return t.dom() == unit_ty() && t.cod().tag() == TypeTag::Val &&
             t.cod().location() == t.location();
    case TermTag::Update:
      return t.cod() == unit_ty() && t.dom().tag() == TypeTag::Val &&
             t.dom().location() == t.location();
  }
  return false;
}

namespace {

// Composition prints left associated: Comp(Comp(a,b),c) -> "a o b o c",
// Comp(a, Comp(b,c)) -> "a o (b o c)".
void print_term(std::ostream& os, const Term& t, bool parenthesize_comp) {
  switch (t.tag()) {
    case TermTag::Id: os << "id[" << to_string(t.dom()) << "]"; return;
    case TermTag::Final: os << "final[" << to_string(t.dom()) << "]"; return;
    case TermTag::Pi1:
      os << "pi1[" << to_string(t.dom().left()) << "," << to_string(t.dom().right()) << "]";
      return;
    case TermTag::Pi2:
      os << "pi2[" << to_string(t.dom().left()) << "," << to_string(t.dom().right()) << "]";
      return;
    case TermTag::Lookup: os << "lookup " << t.location(); return;
    case TermTag::Update: os << "update " << t.location(); return;
    case TermTag::Pair:
      os << "pair(";
      print_term(os, t.first(), false);
      os << ", ";
      print_term(os, t.second(), false);
      os << ")";
      return;
    case TermTag::Comp: {
      if (parenthesize_comp) os << "(";
      print_term(os, t.second(), false);
      os << " o ";
      print_term(os, t.first(), true);
      if (parenthesize_comp) os << ")";
      return;
    }
  }
}

} // namespace

std::string to_string(const Term& t) {
  std::ostringstream os;
  print_term(os, t, false);
  return os.str();
}

} // namespace decoreq
