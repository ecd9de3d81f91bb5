#include "types.hpp"

#include <algorithm>
#include <array>
#include <map>

namespace grin {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnknownGenerator: return "UnknownGenerator";
    case ErrorCode::CycleInSubtyping: return "CycleInSubtyping";
    case ErrorCode::MissingDistinguished: return "MissingDistinguished";
    case ErrorCode::SystemMismatch: return "SystemMismatch";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnsupportedSystem: return "UnsupportedSystem";
    case ErrorCode::NotFunctional: return "NotFunctional";
    case ErrorCode::UnsupportedDirection: return "UnsupportedDirection";
    case ErrorCode::DegenerateInstance: return "DegenerateInstance";
    case ErrorCode::EmptyFormula: return "EmptyFormula";
    case ErrorCode::NotThreeSat: return "NotThreeSat";
    case ErrorCode::MalformedSolution: return "MalformedSolution";
    case ErrorCode::OrderInvalid: return "OrderInvalid";
    case ErrorCode::WitnessRejected: return "WitnessRejected";
    case ErrorCode::AssignmentInvalid: return "AssignmentInvalid";
    case ErrorCode::KeyAbsent: return "KeyAbsent";
    case ErrorCode::SubtypedGenerator: return "SubtypedGenerator";
    case ErrorCode::ForcingFailed: return "ForcingFailed";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::BadArgument: return "BadArgument";
  }
  return "UnknownError";
}

bool system_is_ordered(System s) {
  return s == System::Autonomous || s == System::Pivotal || s == System::SelfDualPivotal;
}

bool system_is_signed(System s) {
  return s == System::Autonomous || s == System::Pivotal || s == System::CompactClosed;
}

const std::string& system_name(System s) {
  static const std::array<std::string, 5> names = {
      "autonomous", "pivotal", "self-dual-pivotal", "compact-closed", "self-dual-compact-closed"};
  return names[static_cast<size_t>(s)];
}

std::optional<System> system_from_name(const std::string& name) {
  static const std::map<std::string, System> table = {
      {"autonomous", System::Autonomous},
      {"aut", System::Autonomous},
      {"pivotal", System::Pivotal},
      {"piv", System::Pivotal},
      {"self-dual-pivotal", System::SelfDualPivotal},
      {"sdp", System::SelfDualPivotal},
      {"compact-closed", System::CompactClosed},
      {"cc", System::CompactClosed},
      {"self-dual-compact-closed", System::SelfDualCompactClosed},
      {"sdcc", System::SelfDualCompactClosed},
  };
  auto it = table.find(name);
  if (it == table.end()) return std::nullopt;
  return it->second;
}

System functor_source(Functor f) {
  switch (f) {
    case Functor::AutToPiv: return System::Autonomous;
    case Functor::PivToCC:
    case Functor::PivToSDP:
    case Functor::PivToSDCC: return System::Pivotal;
    case Functor::CCToSDCC: return System::CompactClosed;
    case Functor::SDPToSDCC: return System::SelfDualPivotal;
  }
  throw Error(ErrorCode::BadArgument, "bad functor");
}

System functor_target(Functor f) {
  switch (f) {
    case Functor::AutToPiv: return System::Pivotal;
    case Functor::PivToCC: return System::CompactClosed;
    case Functor::PivToSDP: return System::SelfDualPivotal;
    case Functor::CCToSDCC:
    case Functor::SDPToSDCC:
    case Functor::PivToSDCC: return System::SelfDualCompactClosed;
  }
  throw Error(ErrorCode::BadArgument, "bad functor");
}

const std::string& functor_name(Functor f) {
  static const std::array<std::string, 6> names = {
      "aut->piv", "piv->cc", "piv->sdp", "cc->sdcc", "sdp->sdcc", "piv->sdcc"};
  return names[static_cast<size_t>(f)];
}

bool occ_less(const Occ& a, const Occ& b) {
  if (a.gen != b.gen) return a.gen < b.gen;
  // positive before starred, then by magnitude: 0,1,-1,2,-2,...
  auto rank = [](int e) {
    long long m = e >= 0 ? 2LL * e : -2LL * e - 1;
    return m;
  };
  return rank(a.exp) < rank(b.exp);
}

bool type_less(const Type& a, const Type& b) {
  return std::lexicographical_compare(a.occs.begin(), a.occs.end(), b.occs.begin(), b.occs.end(),
                                      occ_less);
}

static void check_occ(System system, const Occ& o) {
  switch (system) {
    case System::Autonomous:
      break;
    case System::Pivotal:
    case System::CompactClosed:
      if (o.exp != 1 && o.exp != -1)
        throw Error(ErrorCode::SystemMismatch,
                    "sign must be +1 or -1 in " + system_name(system) + ": " + o.gen);
      break;
    case System::SelfDualPivotal:
    case System::SelfDualCompactClosed:
      if (o.exp != 1)
        throw Error(ErrorCode::SystemMismatch,
                    "no duals in " + system_name(system) + ": " + o.gen);
      break;
  }
}

Type make_type(System system, std::vector<Occ> occs) {
  for (const auto& o : occs) check_occ(system, o);
  if (!system_is_ordered(system)) std::sort(occs.begin(), occs.end(), occ_less);
  return Type{system, std::move(occs)};
}

Type unit_type(System system) { return Type{system, {}}; }

Type dual(const Type& t) {
  std::vector<Occ> out;
  out.reserve(t.occs.size());
  switch (t.system) {
    case System::Autonomous:
      throw Error(ErrorCode::UnsupportedSystem,
                  "autonomous duals are one-sided; use dual_left/dual_right");
    case System::Pivotal:
      for (auto it = t.occs.rbegin(); it != t.occs.rend(); ++it) out.push_back({it->gen, -it->exp});
      break;
    case System::SelfDualPivotal:
      for (auto it = t.occs.rbegin(); it != t.occs.rend(); ++it) out.push_back(*it);
      break;
    case System::CompactClosed:
      for (const auto& o : t.occs) out.push_back({o.gen, -o.exp});
      break;
    case System::SelfDualCompactClosed:
      out = t.occs;
      break;
  }
  return make_type(t.system, std::move(out));
}

Type dual_left(const Type& t) {
  if (t.system != System::Autonomous)
    throw Error(ErrorCode::SystemMismatch, "dual_left is autonomous-only");
  std::vector<Occ> out;
  out.reserve(t.occs.size());
  for (auto it = t.occs.rbegin(); it != t.occs.rend(); ++it) out.push_back({it->gen, it->exp - 1});
  return Type{System::Autonomous, std::move(out)};
}

Type dual_right(const Type& t) {
  if (t.system != System::Autonomous)
    throw Error(ErrorCode::SystemMismatch, "dual_right is autonomous-only");
  std::vector<Occ> out;
  out.reserve(t.occs.size());
  for (auto it = t.occs.rbegin(); it != t.occs.rend(); ++it) out.push_back({it->gen, it->exp + 1});
  return Type{System::Autonomous, std::move(out)};
}

Type tensor(const Type& a, const Type& b) {
  if (a.system != b.system)
    throw Error(ErrorCode::SystemMismatch, "tensor of types from different systems");
  std::vector<Occ> occs = a.occs;
  occs.insert(occs.end(), b.occs.begin(), b.occs.end());
  return make_type(a.system, std::move(occs));
}

Type image(Functor f, const Type& t) {
  if (t.system != functor_source(f))
    throw Error(ErrorCode::SystemMismatch,
                "type is not in the source system of " + functor_name(f));
  std::vector<Occ> occs;
  occs.reserve(t.occs.size());
  switch (f) {
    case Functor::AutToPiv:
      // h maps t^e to t^((-1)^e): even exponents positive, odd ones starred.
      for (const auto& o : t.occs) occs.push_back({o.gen, (o.exp % 2 == 0) ? 1 : -1});
      break;
    case Functor::PivToCC:
      occs = t.occs;
      break;
    case Functor::PivToSDP:
    case Functor::CCToSDCC:
    case Functor::PivToSDCC:
    case Functor::SDPToSDCC:
      for (const auto& o : t.occs) occs.push_back({o.gen, 1});
      break;
  }
  return make_type(functor_target(f), std::move(occs));
}

bool isomorphic(const Type& a, const Type& b) {
  if (a.system != b.system)
    throw Error(ErrorCode::SystemMismatch, "isomorphism across systems");
  return a.occs == b.occs;  // canonical forms
}

bool valid_generator_name(const std::string& name) {
  if (name.empty() || name == "1") return false;
  int depth = 0;
  for (char c : name) {
    if (std::isspace(static_cast<unsigned char>(c))) return false;
    if (c == '*' || c == '^' || c == ':' || c == '#') return false;
    if (c == '{') depth++;
    if (c == '}') {
      if (depth == 0) return false;
      depth--;
    }
    if (depth == 0 && (c == '.' || c == ',')) return false;
  }
  return depth == 0;
}

bool valid_word_token(const std::string& word) {
  if (word.empty()) return false;
  for (char c : word) {
    if (std::isspace(static_cast<unsigned char>(c))) return false;
    if (c == ':') return false;
  }
  return true;
}

// Splits on `sep` at brace depth `at_depth` only.
static std::vector<std::string> split_protected(const std::string& text, char sep, int at_depth) {
  std::vector<std::string> parts;
  std::string cur;
  int depth = 0;
  for (char c : text) {
    if (c == '{') depth++;
    if (c == '}') depth--;
    if (c == sep && depth == at_depth) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  return parts;
}

static Occ parse_factor(System system, const std::string& factor) {
  if (factor.empty()) throw Error(ErrorCode::SyntaxError, "empty type factor");
  std::string name = factor;
  int exp = 1;
  if (system == System::Autonomous) {
    auto caret = factor.rfind('^');
    if (caret != std::string::npos) {
      name = factor.substr(0, caret);
      const std::string digits = factor.substr(caret + 1);
      try {
        size_t used = 0;
        exp = std::stoi(digits, &used);
        if (used != digits.size()) throw std::invalid_argument(digits);
      } catch (const std::exception&) {
        throw Error(ErrorCode::SyntaxError, "bad exponent in '" + factor + "'");
      }
    } else {
      exp = 0;
    }
  } else if (system == System::Pivotal || system == System::CompactClosed) {
    if (!name.empty() && name.back() == '*') {
      name.pop_back();
      exp = -1;
    }
  }
  if (!valid_generator_name(name))
    throw Error(ErrorCode::SyntaxError, "bad generator token '" + factor + "'");
  return Occ{name, exp};
}

Type parse_type(System system, const std::string& text) {
  if (text.empty()) throw Error(ErrorCode::SyntaxError, "empty type");
  if (text == "1") return unit_type(system);
  if (!system_is_ordered(system)) {
    if (text.front() != '{' || text.back() != '}')
      throw Error(ErrorCode::SyntaxError,
                  "types in " + system_name(system) + " are written {a,b,...}: '" + text + "'");
    const std::string inner = text.substr(1, text.size() - 2);
    if (inner.empty()) return unit_type(system);
    std::vector<Occ> occs;
    for (const auto& part : split_protected(inner, ',', 1)) occs.push_back(parse_factor(system, part));
    return make_type(system, std::move(occs));
  }
  if (text.front() == '{')
    throw Error(ErrorCode::SyntaxError,
                "bag syntax is not valid in " + system_name(system) + ": '" + text + "'");
  std::vector<Occ> occs;
  for (const auto& part : split_protected(text, '.', 0)) occs.push_back(parse_factor(system, part));
  return make_type(system, std::move(occs));
}

std::string format_occ(System system, const Occ& o) {
  switch (system) {
    case System::Autonomous:
      if (o.exp == 0) return o.gen;
      return o.gen + "^" + std::to_string(o.exp);
    case System::Pivotal:
    case System::CompactClosed:
      return o.exp == 1 ? o.gen : o.gen + "*";
    default:
      return o.gen;
  }
}

std::string format_type(const Type& t) {
  if (t.occs.empty()) return "1";
  std::string out;
  const bool ordered = system_is_ordered(t.system);
  if (!ordered) out += "{";
  for (size_t i = 0; i < t.occs.size(); ++i) {
    if (i) out += ordered ? '.' : ',';
    out += format_occ(t.system, t.occs[i]);
  }
  if (!ordered) out += "}";
  return out;
}

}  // namespace grin
