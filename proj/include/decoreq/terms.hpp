#pragma once

#include <memory>
#include <string>

#include "decoreq/memory.hpp"

namespace decoreq {

enum class TypeTag { Unit, Val, Prod };

/// Object type of the category: the unit type, a per-location value type,
/// or a binary product. Immutable shared tree with structural equality.
class ObjType {
public:
  TypeTag tag() const { return node_->tag; }
  const std::string& location() const { return node_->loc; } // Val only
  ObjType left() const { return ObjType(node_->left); }      // Prod only
  ObjType right() const { return ObjType(node_->right); }    // Prod only

  bool operator==(const ObjType& other) const;
  bool operator!=(const ObjType& other) const { return !(*this == other); }

  friend ObjType unit_ty();
  friend ObjType val_ty(const MemorySignature&, const std::string&);
  friend ObjType prod_ty(const ObjType&, const ObjType&);

private:
  struct Node {
    TypeTag tag;
    std::string loc;
    std::shared_ptr<const Node> left, right;
  };

  explicit ObjType(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  std::shared_ptr<const Node> node_;
};

ObjType unit_ty();
/// Throws UnknownLocation when `loc` is not declared in `sig`.
ObjType val_ty(const MemorySignature& sig, const std::string& loc);
ObjType prod_ty(const ObjType& left, const ObjType& right);

std::string to_string(const ObjType& ty);

enum class TermTag { Id, Comp, Final, Pair, Pi1, Pi2, Lookup, Update };

/// A closed, well-typed term of the decorated language. Terms can only be
/// built through the smart constructors below, so dom/cod always satisfy
/// the node's typing discipline. Immutable, structural equality.
class Term {
public:
  TermTag tag() const { return node_->tag; }
  const ObjType& dom() const { return node_->dom; }
  const ObjType& cod() const { return node_->cod; }

  /// Comp(g, f): `first` is f (applied first), `second` is g.
  /// Pair(f, g): `first` is f (first component), `second` is g.
  Term first() const { return Term(node_->first); }
  Term second() const { return Term(node_->second); }

  const std::string& location() const { return node_->loc; } // Lookup/Update only

  bool operator==(const Term& other) const;
  bool operator!=(const Term& other) const { return !(*this == other); }

  struct Node {
    TermTag tag;
    ObjType dom, cod;
    std::string loc;
    std::shared_ptr<const Node> first, second;

    Node(TermTag t, ObjType d, ObjType c, std::string l, std::shared_ptr<const Node> fst,
         std::shared_ptr<const Node> snd)
        : tag(t), dom(std::move(d)), cod(std::move(c)), loc(std::move(l)), first(std::move(fst)),
          second(std::move(snd)) {}
  };

  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  const std::shared_ptr<const Node>& node() const { return node_; }

private:
  std::shared_ptr<const Node> node_;
};

Term mk_id(const ObjType& x);
Term mk_final(const ObjType& x);
/// g after f; throws TypeMismatch unless cod(f) = dom(g).
Term mk_comp(const Term& g, const Term& f);
/// The left pair: f's store effect is dropped, g's is kept.
/// Throws TypeMismatch unless dom(f) = dom(g).
Term mk_pair(const Term& f, const Term& g);
Term mk_pi1(const ObjType& x, const ObjType& y);
Term mk_pi2(const ObjType& x, const ObjType& y);
Term mk_lookup(const MemorySignature& sig, const std::string& loc);
Term mk_update(const MemorySignature& sig, const std::string& loc);

/// Recomputes dom/cod from the tree shape and compares with the stored
/// boundaries. Always true for smart-constructed terms; exposed for tests.
bool validate_term(const Term& t);

/// Surface syntax, parseable back by the term parser.
std::string to_string(const Term& t);

} // namespace decoreq
