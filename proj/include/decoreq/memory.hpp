#pragma once

#include <string>
#include <vector>

#include "decoreq/errors.hpp"

namespace decoreq {

class MemorySignature;

/// A total assignment of one carrier value per declared location, stored
/// positionally in the signature's location order.
struct Store {
  std::vector<std::string> values;

  bool operator==(const Store&) const = default;
};

/// Declares the location set and the finite value carrier of each location.
/// Immutable after construction; every downstream judgment is relative to
/// one shared signature.
class MemorySignature {
public:
  /// Builds a signature from locations (order preserved) and their carriers.
  /// Throws DuplicateLocation / EmptyCarrier / UnknownLocation.
  static MemorySignature declare(std::vector<std::string> locations,
                                 std::vector<std::vector<std::string>> carriers);

  const std::vector<std::string>& locations() const { return locations_; }

  bool has_location(const std::string& loc) const;

  /// Position of `loc` in declaration order; throws UnknownLocation.
  std::size_t index_of(const std::string& loc) const;

  const std::vector<std::string>& carrier(const std::string& loc) const;
  const std::vector<std::string>& carrier_at(std::size_t idx) const { return carriers_[idx]; }

  /// Every total store, one per combination of carrier values. The first
  /// location varies slowest; the order is stable across runs.
  std::vector<Store> stores() const;

  /// Product of carrier sizes.
  std::size_t store_count() const;

  std::string store_to_string(const Store& s) const;

private:
  MemorySignature() = default;

  std::vector<std::string> locations_;
  std::vector<std::vector<std::string>> carriers_;
};

} // namespace decoreq
