#pragma once

#include <string>

#include "decoreq/kernel.hpp"
#include "decoreq/memory.hpp"
#include "decoreq/terms.hpp"

namespace decoreq {

// Text surface of the tool. Grammar in docs/format.md. All parse failures
// throw Error{ParseError} with a line:column position in the message.

/// `locations i:{0,1} j:{0,1}` (one or more entries, comments allowed).
MemorySignature parse_signature(const std::string& text);

/// Types: `unit`, `V(i)`, `X*Y` (left associative), parentheses.
ObjType parse_type(const std::string& text, const MemorySignature& sig);

/// Terms: `id[X]`, `final[X]`, `pi1[X,Y]`, `pi2[X,Y]`, `lookup i`,
/// `update i`, `pair(f,g)`, `g o f` (left associative), parentheses, and
/// the derived forms `inv_pi1[X]`, `permut[X,Y]`, `perm_pair(f,g)`,
/// `prod(f,g)`, `perm_prod(f,g)`, `lseq_prod(f,g)`, `rseq_prod(f,g)`
/// (expanded at parse time).
Term parse_term(const std::string& text, const MemorySignature& sig);

/// `lhs == rhs` (strong) or `lhs ~ rhs` (weak).
Equation parse_equation(const std::string& text, const MemorySignature& sig);

} // namespace decoreq
