#pragma once

#include <string>
#include <utility>
#include <vector>

#include "decoreq/kernel.hpp"
#include "decoreq/semantics.hpp"

namespace decoreq {

/// A named, replayable proof with its goal; lemma labels are kept for
/// inspection and reporting.
struct ProofScript {
  std::string name;
  Equation goal;
  Proof body;
  std::vector<std::string> lemma_names;
};

/// An equation that must NOT be derivable, one concrete proof attempt the
/// kernel must reject, and the first semantic counterexample to the claim.
struct NegativeFixture {
  std::string name;
  Equation claim;
  Proof attempt;
  SemValue expected_input;
  Store expected_store;
};

/// The update-lookup commutation proof: updating location i and then
/// observing location j is, strongly, the same as observing first and
/// updating afterwards. Throws LocationClash when i = j.
ProofScript commutation_update_lookup(const MemorySignature& sig, const std::string& i,
                                      const std::string& j);

struct AxiomCorpus {
  std::vector<ProofScript> scripts;
  std::vector<NegativeFixture> negatives;
};

/// One-node scripts for the two observational axioms over the first two
/// locations of `sig`, plus the rejected strong readings of axiom 1.
AxiomCorpus axiom_corpus(const MemorySignature& sig);

} // namespace decoreq
