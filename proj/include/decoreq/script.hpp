#pragma once

#include <string>

#include "decoreq/corpus.hpp"
#include "decoreq/memory.hpp"

namespace decoreq {

/// Parses a proof-script file: one s-expression per rule application,
/// `(lemma name ...)` bindings referenced by name, `(goal ...)` and
/// `(main ...)`. Derived-rule forms (e03, e14, pair-proj1, ...) are
/// expanded into kernel rule applications while loading, so the returned
/// body contains core rules only. A node whose head names no known rule or
/// derived form is kept and later rejected by the checker as UnknownRule.
ProofScript parse_proof_script(const std::string& text, const MemorySignature& sig,
                               const std::string& default_name = "script");

ProofScript load_proof_script(const std::string& path, const MemorySignature& sig);

} // namespace decoreq
