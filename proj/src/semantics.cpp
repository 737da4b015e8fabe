#include "decoreq/semantics.hpp"

#include <sstream>

namespace decoreq {

SemValue SemValue::unit() {
  static const SemValue u = [] {
    auto node = std::make_shared<Node>();
    node->tag = SemTag::Unit;
    return SemValue(node);
  }();
  return u;
}

SemValue SemValue::base(std::string loc, std::string value) {
  auto node = std::make_shared<Node>();
  node->tag = SemTag::Base;
  node->loc = std::move(loc);
  node->value = std::move(value);
  return SemValue(node);
}

SemValue SemValue::pair(SemValue first, SemValue second) {
  auto node = std::make_shared<Node>();
  node->tag = SemTag::Pair;
  node->first = first.node_;
  node->second = second.node_;
  return SemValue(node);
}

bool SemValue::operator==(const SemValue& other) const {
  if (node_ == other.node_) return true;
  if (node_->tag != other.node_->tag) return false;
  switch (node_->tag) {
    case SemTag::Unit: return true;
    case SemTag::Base: return node_->loc == other.node_->loc && node_->value == other.node_->value;
    case SemTag::Pair: return first() == other.first() && second() == other.second();
  }
  return false;
}

std::string to_string(const SemValue& v) {
  switch (v.tag()) {
    case SemTag::Unit: return "()";
    case SemTag::Base: return v.location() + "=" + v.value();
    case SemTag::Pair: return "(" + to_string(v.first()) + ", " + to_string(v.second()) + ")";
  }
  return "?";
}

std::vector<SemValue> enumerate_values(const ObjType& ty, const MemorySignature& sig) {
  switch (ty.tag()) {
    case TypeTag::Unit: return {SemValue::unit()};
    case TypeTag::Val: {
      std::vector<SemValue> out;
      for (const auto& v : sig.carrier(ty.location())) out.push_back(SemValue::base(ty.location(), v));
      return out;
    }
    case TypeTag::Prod: {
      std::vector<SemValue> lefts = enumerate_values(ty.left(), sig);
      std::vector<SemValue> rights = enumerate_values(ty.right(), sig);
      std::vector<SemValue> out;
      out.reserve(lefts.size() * rights.size());
      for (const auto& l : lefts)
        for (const auto& r : rights) out.push_back(SemValue::pair(l, r));
      return out;
    }
  }
  return {};
}

namespace {

bool inhabits(const SemValue& v, const ObjType& ty) {
  switch (ty.tag()) {
    case TypeTag::Unit: return v.tag() == SemTag::Unit;
    case TypeTag::Val: return v.tag() == SemTag::Base && v.location() == ty.location();
    case TypeTag::Prod:
      return v.tag() == SemTag::Pair && inhabits(v.first(), ty.left()) &&
             inhabits(v.second(), ty.right());
  }
  return false;
}

} // namespace

std::pair<SemValue, Store> eval(const Term& t, const SemValue& x, const Store& s,
                                const MemorySignature& sig) {
  if (!inhabits(x, t.dom()))
    fail(ErrorKind::ShapeMismatch,
         "value " + to_string(x) + " does not inhabit " + to_string(t.dom()));
  switch (t.tag()) {
    case TermTag::Id: return {x, s};
    case TermTag::Final: return {SemValue::unit(), s};
    case TermTag::Pi1: return {x.first(), s};
    case TermTag::Pi2: return {x.second(), s};
    case TermTag::Lookup: {
      std::size_t idx = sig.index_of(t.location());
      return {SemValue::base(t.location(), s.values[idx]), s};
    }
    case TermTag::Update: {
      Store next = s;
      next.values[sig.index_of(t.location())] = x.value();
      return {SemValue::unit(), next};
    }
    case TermTag::Comp: {
      auto [y, s1] = eval(t.first(), x, s, sig);
      return eval(t.second(), y, s1, sig);
    }
    case TermTag::Pair: {
      // Left pair: the first component contributes only its result, read
      // against the initial store; the second component's effect is kept.
      SemValue r1 = eval(t.first(), x, s, sig).first;
      auto [r2, s2] = eval(t.second(), x, s, sig);
      return {SemValue::pair(r1, r2), s2};
    }
  }
  fail(ErrorKind::ShapeMismatch, "unreachable term shape");
}

SemanticResult check_semantic(const Equation& eq, const MemorySignature& sig) {
  SemanticResult res{true, 0, std::nullopt};
  const auto inputs = enumerate_values(eq.lhs.dom(), sig);
  const auto all_stores = sig.stores();
  for (const auto& x : inputs) {
    for (const auto& s : all_stores) {
      ++res.cases_checked;
      auto [lv, ls] = eval(eq.lhs, x, s, sig);
      auto [rv, rs] = eval(eq.rhs, x, s, sig);
      bool same = lv == rv && (eq.mode == EqMode::Weak || ls == rs);
      if (!same) {
        res.holds = false;
        res.counterexample = Counterexample{x, s, lv, rv, ls, rs};
        return res;
      }
    }
  }
  return res;
}

} // namespace decoreq
