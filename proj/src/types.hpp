#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace grin {

enum class ErrorCode {
  UnknownGenerator,
  CycleInSubtyping,
  MissingDistinguished,
  SystemMismatch,
  SyntaxError,
  UnsupportedSystem,
  NotFunctional,
  UnsupportedDirection,
  DegenerateInstance,
  EmptyFormula,
  NotThreeSat,
  MalformedSolution,
  OrderInvalid,
  WitnessRejected,
  AssignmentInvalid,
  KeyAbsent,
  SubtypedGenerator,
  ForcingFailed,
  TooLarge,
  BadArgument,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

const char* error_code_name(ErrorCode code);

enum class System {
  Autonomous,
  Pivotal,
  SelfDualPivotal,
  CompactClosed,
  SelfDualCompactClosed,
};

bool system_is_ordered(System s);   // word vs bag representation
bool system_is_signed(System s);    // carries exponents/signs
const std::string& system_name(System s);
std::optional<System> system_from_name(const std::string& name);

// The five plain arrows of the hierarchy's lower half plus the Piv->SDCC composite.
enum class Functor {
  AutToPiv,
  PivToCC,
  PivToSDP,
  CCToSDCC,
  SDPToSDCC,
  PivToSDCC,
};

System functor_source(Functor f);
System functor_target(Functor f);
const std::string& functor_name(Functor f);

// One occurrence of a generator. The meaning of `exp` depends on the system:
// Autonomous: any integer (iterated adjoints, n^l = -1, n^r = +1);
// Pivotal / CompactClosed: +1 or -1 (starred);
// self-dual systems: always +1.
struct Occ {
  std::string gen;
  int exp = 1;

  bool operator==(const Occ&) const = default;
};

// Canonical object of a free type system. Bags are kept sorted; words keep order.
// No cancellation ever happens at construction: a (x) a* is not the unit.
struct Type {
  System system = System::Pivotal;
  std::vector<Occ> occs;

  bool is_unit() const { return occs.empty(); }
  size_t size() const { return occs.size(); }
  bool operator==(const Type&) const = default;
};

// (gen asc, positive before starred, then ascending exponent) — the order used
// for bag canonicalization and for "canonical (lexicographic)" candidate streams.
bool occ_less(const Occ& a, const Occ& b);
bool type_less(const Type& a, const Type& b);

// Validates occurrences for the system and sorts bag representations.
Type make_type(System system, std::vector<Occ> occs);
Type unit_type(System system);

Type dual(const Type& t);        // Pivotal/SDP/CC/SDCC only
Type dual_left(const Type& t);   // Autonomous
Type dual_right(const Type& t);  // Autonomous
Type tensor(const Type& a, const Type& b);
Type image(Functor f, const Type& t);
bool isomorphic(const Type& a, const Type& b);

// Textual forms used by every file format: ordered systems are `.`-joined
// factors (`a`, `a*`, `a^-2`), commutative systems `{a,b*}`, unit `1`.
// Separators split only at brace depth 0 so generator names like d_{a.b.c} work.
Type parse_type(System system, const std::string& text);
std::string format_type(const Type& t);
std::string format_occ(System system, const Occ& o);

// Generator / word token rules shared by all parsers.
bool valid_generator_name(const std::string& name);
bool valid_word_token(const std::string& word);

}  // namespace grin
