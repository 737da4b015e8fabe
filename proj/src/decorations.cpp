#include "decoreq/decorations.hpp"

namespace decoreq {

bool kind_leq(Kind a, Kind b) { return static_cast<int>(a) <= static_cast<int>(b); }

Kind kind_join(Kind a, Kind b) { return kind_leq(a, b) ? b : a; }

Kind infer_kind(const Term& t) {
  switch (t.tag()) {
    case TermTag::Id:
    case TermTag::Final:
    case TermTag::Pi1:
    case TermTag::Pi2: return Kind::Pure;
    case TermTag::Lookup: return Kind::Ro;
    case TermTag::Update: return Kind::Rw;
    case TermTag::Comp:
    case TermTag::Pair: return kind_join(infer_kind(t.first()), infer_kind(t.second()));
  }
  return Kind::Rw;
}

bool has_kind(const Term& t, Kind k) { return kind_leq(infer_kind(t), k); }

std::string to_string(Kind k) {
  switch (k) {
    case Kind::Pure: return "pure";
    case Kind::Ro: return "ro";
    case Kind::Rw: return "rw";
  }
  return "?";
}

} // namespace decoreq
