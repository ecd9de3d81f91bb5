#pragma once

#include <optional>
#include <vector>

#include "signature.hpp"
#include "types.hpp"

namespace grin {

enum class Target { Unit, Distinguished };

// Certificate for hom(t1 (x) ... (x) tn, target) being non-empty: a pairing of
// occurrence positions (0-based over the concatenated sequence) plus at most one
// leftover position. Ordered systems additionally require the pairs to be
// non-crossing and the leftover to sit outside every arc.
struct Matching {
  std::vector<std::pair<int, int>> pairs;  // sorted, i < j within each pair
  std::optional<int> leftover;

  bool operator==(const Matching&) const = default;
};

// Occurrence resolved against a signature; exp as in Occ.
struct ROcc {
  int gen;
  int exp;
};

std::vector<ROcc> flatten(System system, const Signature& sig, const std::vector<Type>& ts);

// Cancellation rule of the system for positions i < j.
bool can_cancel(System system, const Signature& sig, const ROcc& left, const ROcc& right);
// May `o` be the leftover mapped into the distinguished generator?
bool leftover_ok(System system, const Signature& sig, const ROcc& o);

// Decides hom-set non-emptiness and returns the lexicographically least witness
// (pairs sorted, then leftover). Ordered systems use an O(n^3) interval DP,
// compact closed uses augmenting-path bipartite matching, self-dual compact
// closed uses backtracking with a failed-state memo.
std::optional<Matching> reduces(System system, const Signature& sig, const std::vector<Type>& ts,
                                Target target);
std::optional<Matching> reduces_occs(System system, const Signature& sig,
                                     const std::vector<ROcc>& occs, Target target);

// O(n^2) certificate check; false on any malformed input.
bool verify_matching(System system, const Signature& sig, const std::vector<Type>& ts,
                     Target target, const Matching& m);

std::string format_matching(const Matching& m);  // 1-based, e.g. "pairs=(1,2)(4,5) leftover=3"

}  // namespace grin
