#pragma once

#include <string>

#include "decoreq/terms.hpp"

namespace decoreq {

/// How a term interacts with the store: pure (not at all), ro (reads only),
/// rw (reads and writes). Totally ordered: Pure < Ro < Rw.
enum class Kind { Pure, Ro, Rw };

bool kind_leq(Kind a, Kind b);
Kind kind_join(Kind a, Kind b);

/// Least kind derivable for `t`: Id/Final/Pi1/Pi2 are pure, Lookup is ro,
/// Update is rw, Comp and Pair take the join of their children.
Kind infer_kind(const Term& t);

/// True iff `t` can be used at kind `k`, i.e. infer_kind(t) <= k.
bool has_kind(const Term& t, Kind k);

std::string to_string(Kind k);

} // namespace decoreq
