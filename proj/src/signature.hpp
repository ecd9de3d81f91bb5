#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "types.hpp"

namespace grin {

// Generator poset with a distinguished sentence generator. Immutable after load;
// the reflexive-transitive closure of the declared edges is precomputed and must
// be antisymmetric (cycles are rejected).
class Signature {
 public:
  Signature(std::vector<std::string> generators,
            std::vector<std::pair<std::string, std::string>> subtype_edges,
            std::string distinguished);

  bool has_generator(const std::string& g) const { return index_.count(g) != 0; }
  const std::vector<std::string>& generators() const { return generators_; }
  const std::vector<std::pair<std::string, std::string>>& subtype_edges() const { return edges_; }
  const std::string& distinguished() const { return distinguished_; }

  // x <= y in the reflexive-transitive closure.
  bool leq(const std::string& x, const std::string& y) const;
  // some z with x <= z and y <= z exists (self-dual cancellation condition).
  bool common_upper_bound(const std::string& x, const std::string& y) const;

  size_t index_of(const std::string& g) const;
  size_t size() const { return generators_.size(); }
  bool leq_idx(size_t x, size_t y) const { return closure_[x * generators_.size() + y]; }
  bool cub_idx(size_t x, size_t y) const { return cub_[x * generators_.size() + y]; }

  // Generators comparable through chains of edges share a component; cancellation
  // can never cross components, which the solver's pruning relies on.
  size_t component_of_idx(size_t g) const { return component_[g]; }

  void check_type(const Type& t) const;  // UnknownGenerator on foreign names

 private:
  std::vector<std::string> generators_;  // sorted
  std::map<std::string, size_t> index_;
  std::vector<std::pair<std::string, std::string>> edges_;
  std::string distinguished_;
  std::vector<char> closure_;
  std::vector<char> cub_;
  std::vector<size_t> component_;
};

// Signature document: `gen NAME`, `sub X Y` (X <= Y), `sentence NAME`, `#` comments.
Signature load_signature(const std::string& text);
std::string serialize_signature(const Signature& sig);

}  // namespace grin
