#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "decoreq/kernel.hpp"
#include "decoreq/memory.hpp"
#include "decoreq/terms.hpp"

namespace decoreq {

enum class SemTag { Unit, Base, Pair };

/// Inhabitant of an object type: the unit value, a carrier value tagged
/// with its location, or a pair.
class SemValue {
public:
  static SemValue unit();
  static SemValue base(std::string loc, std::string value);
  static SemValue pair(SemValue first, SemValue second);

  SemTag tag() const { return node_->tag; }
  const std::string& location() const { return node_->loc; }  // Base only
  const std::string& value() const { return node_->value; }   // Base only
  SemValue first() const { return SemValue(node_->first); }   // Pair only
  SemValue second() const { return SemValue(node_->second); } // Pair only

  bool operator==(const SemValue& other) const;
  bool operator!=(const SemValue& other) const { return !(*this == other); }

private:
  struct Node {
    SemTag tag;
    std::string loc, value;
    std::shared_ptr<const Node> first, second;
  };

  explicit SemValue(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  std::shared_ptr<const Node> node_;
};

std::string to_string(const SemValue& v);

/// All inhabitants of `ty`, in a deterministic order (left component of a
/// product varies slowest, carrier values in declaration order).
std::vector<SemValue> enumerate_values(const ObjType& ty, const MemorySignature& sig);

/// Denotation of `t` as a state-passing function: result plus final store.
/// Throws ShapeMismatch when `x` does not inhabit dom(t).
std::pair<SemValue, Store> eval(const Term& t, const SemValue& x, const Store& s,
                                const MemorySignature& sig);

struct Counterexample {
  SemValue input;
  Store store;
  SemValue lhs_result;
  SemValue rhs_result;
  Store lhs_store;
  Store rhs_store;
};

struct SemanticResult {
  bool holds;
  std::size_t cases_checked;
  std::optional<Counterexample> counterexample; // first in enumeration order

  explicit operator bool() const { return holds; }
};

/// Decides `eq` by exhausting every input of dom(lhs) against every store.
/// Strong equations require equal results and equal final stores; weak
/// equations require equal results only.
SemanticResult check_semantic(const Equation& eq, const MemorySignature& sig);

} // namespace decoreq
