#include "decoreq/memory.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace decoreq {

MemorySignature MemorySignature::declare(std::vector<std::string> locations,
                                         std::vector<std::vector<std::string>> carriers) {
  if (locations.size() != carriers.size())
    fail(ErrorKind::EmptyCarrier, "every location needs a carrier");
  std::set<std::string> seen;
  for (const auto& loc : locations) {
    if (!seen.insert(loc).second)
      fail(ErrorKind::DuplicateLocation, "location '" + loc + "' declared twice");
  }
  for (std::size_t i = 0; i < locations.size(); ++i) {
    if (carriers[i].empty())
      fail(ErrorKind::EmptyCarrier, "location '" + locations[i] + "' has an empty carrier");
  }
  MemorySignature sig;
  sig.locations_ = std::move(locations);
  sig.carriers_ = std::move(carriers);
  return sig;
}

bool MemorySignature::has_location(const std::string& loc) const {
  return std::find(locations_.begin(), locations_.end(), loc) != locations_.end();
}

std::size_t MemorySignature::index_of(const std::string& loc) const {
  auto it = std::find(locations_.begin(), locations_.end(), loc);
  if (it == locations_.end())
    fail(ErrorKind::UnknownLocation, "location '" + loc + "' is not declared");
  return static_cast<std::size_t>(it - locations_.begin());
}

const std::vector<std::string>& MemorySignature::carrier(const std::string& loc) const {
  return carriers_[index_of(loc)];
}

std::size_t MemorySignature::store_count() const {
  std::size_t n = 1;
  for (const auto& c : carriers_) n *= c.size();
  return n;
}

std::vector<Store> MemorySignature::stores() const {
  std::vector<Store> out;
  out.reserve(store_count());
  Store cur;
  cur.values.resize(locations_.size());
  // odometer over carrier indices, first location slowest
  std::vector<std::size_t> idx(locations_.size(), 0);
  while (true) {
    for (std::size_t k = 0; k < locations_.size(); ++k) cur.values[k] = carriers_[k][idx[k]];
    out.push_back(cur);
    std::size_t k = locations_.size();
    while (k > 0) {
      --k;
      if (++idx[k] < carriers_[k].size()) break;
      idx[k] = 0;
      if (k == 0) return out;
    }
    if (locations_.empty()) return out;
  }
}

std::string MemorySignature::store_to_string(const Store& s) const {
  std::ostringstream os;
  os << "{";
  for (std::size_t k = 0; k < locations_.size(); ++k) {
    if (k) os << ", ";
    os << locations_[k] << ":" << s.values[k];
  }
  os << "}";
  return os.str();
}

} // namespace decoreq
