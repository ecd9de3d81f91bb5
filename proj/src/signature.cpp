#include "signature.hpp"

#include <algorithm>
#include <sstream>

namespace grin {

Signature::Signature(std::vector<std::string> generators,
                     std::vector<std::pair<std::string, std::string>> subtype_edges,
                     std::string distinguished)
    : edges_(std::move(subtype_edges)), distinguished_(std::move(distinguished)) {
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  generators_ = std::move(generators);
  for (const auto& g : generators_) {
    if (!valid_generator_name(g))
      throw Error(ErrorCode::SyntaxError, "invalid generator name '" + g + "'");
    index_[g] = index_.size();
  }
  if (distinguished_.empty() || !has_generator(distinguished_))
    throw Error(ErrorCode::MissingDistinguished,
                "distinguished generator '" + distinguished_ + "' is not declared");

  const size_t n = generators_.size();
  closure_.assign(n * n, 0);
  for (size_t i = 0; i < n; ++i) closure_[i * n + i] = 1;
  for (const auto& [x, y] : edges_) {
    if (!has_generator(x) || !has_generator(y))
      throw Error(ErrorCode::UnknownGenerator, "subtype edge uses unknown generator " + x + " or " + y);
    closure_[index_.at(x) * n + index_.at(y)] = 1;
  }
  for (size_t k = 0; k < n; ++k)
    for (size_t i = 0; i < n; ++i) {
      if (!closure_[i * n + k]) continue;
      for (size_t j = 0; j < n; ++j)
        if (closure_[k * n + j]) closure_[i * n + j] = 1;
    }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (closure_[i * n + j] && closure_[j * n + i])
        throw Error(ErrorCode::CycleInSubtyping,
                    "subtyping cycle through " + generators_[i] + " and " + generators_[j]);

  cub_.assign(n * n, 0);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      for (size_t z = 0; z < n; ++z)
        if (closure_[i * n + z] && closure_[j * n + z]) {
          cub_[i * n + j] = 1;
          break;
        }
    }

  // Union-find over comparability.
  component_.resize(n);
  for (size_t i = 0; i < n; ++i) component_[i] = i;
  std::vector<size_t> parent(n);
  for (size_t i = 0; i < n; ++i) parent[i] = i;
  auto find = [&](size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (i != j && closure_[i * n + j]) parent[find(i)] = find(j);
  for (size_t i = 0; i < n; ++i) component_[i] = find(i);
}

bool Signature::leq(const std::string& x, const std::string& y) const {
  return leq_idx(index_of(x), index_of(y));
}

bool Signature::common_upper_bound(const std::string& x, const std::string& y) const {
  return cub_idx(index_of(x), index_of(y));
}

size_t Signature::index_of(const std::string& g) const {
  auto it = index_.find(g);
  if (it == index_.end()) throw Error(ErrorCode::UnknownGenerator, "unknown generator '" + g + "'");
  return it->second;
}

void Signature::check_type(const Type& t) const {
  for (const auto& o : t.occs)
    if (!has_generator(o.gen))
      throw Error(ErrorCode::UnknownGenerator, "unknown generator '" + o.gen + "' in type");
}

static std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

Signature load_signature(const std::string& text) {
  std::vector<std::string> gens;
  std::vector<std::pair<std::string, std::string>> edges;
  std::string distinguished;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    lineno++;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    const std::string& kw = toks[0];
    auto fail = [&](const std::string& msg) {
      throw Error(ErrorCode::SyntaxError, "line " + std::to_string(lineno) + ": " + msg);
    };
    if (kw == "gen") {
      if (toks.size() != 2) fail("expected 'gen NAME'");
      gens.push_back(toks[1]);
    } else if (kw == "sub") {
      if (toks.size() != 3) fail("expected 'sub X Y'");
      edges.emplace_back(toks[1], toks[2]);
    } else if (kw == "sentence") {
      if (toks.size() != 2) fail("expected 'sentence NAME'");
      distinguished = toks[1];
    } else {
      fail("unknown directive '" + kw + "'");
    }
  }
  return Signature(std::move(gens), std::move(edges), std::move(distinguished));
}

std::string serialize_signature(const Signature& sig) {
  std::string out;
  for (const auto& g : sig.generators()) out += "gen " + g + "\n";
  auto edges = sig.subtype_edges();
  std::sort(edges.begin(), edges.end());
  for (const auto& [x, y] : edges) out += "sub " + x + " " + y + "\n";
  out += "sentence " + sig.distinguished() + "\n";
  return out;
}

}  // namespace grin
