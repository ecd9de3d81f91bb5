#pragma once

#include <memory>
#include <string>

#include "types.hpp"

namespace grin {

// Bi-closed type built from generators with / and \ only; used as the witness
// format for functionality of pivotal words.
struct LambekType {
  enum class Kind { Leaf, Over, Under };
  Kind kind = Kind::Leaf;
  std::string leaf;
  std::shared_ptr<LambekType> left, right;

  static LambekType make_leaf(std::string g);
  static LambekType make_over(LambekType u, LambekType v);   // u / v
  static LambekType make_under(LambekType u, LambekType v);  // u \ v
};

// Pivotal/CC: a single positive generator, or at least one positive and one
// negative occurrence. Self-dual systems: everything but the unit.
bool is_functional(System system, const Type& t);

// Image under the bi-closed -> pivotal functor: F(u/v) = F(u) F(v)^-1,
// F(u\v) = F(u)^-1 F(v).
Type lambek_image(const LambekType& l);

// Inductive witness construction from the characterization proof; the four
// cases are tried in the proof's order, so the result is deterministic.
LambekType lambek_witness(const Type& piv_word);

std::string format_lambek(const LambekType& l);  // fully parenthesized

}  // namespace grin
