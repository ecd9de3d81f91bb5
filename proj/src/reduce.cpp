#include "reduce.hpp"

#include <algorithm>
#include <unordered_set>

namespace grin {

std::vector<ROcc> flatten(System system, const Signature& sig, const std::vector<Type>& ts) {
  std::vector<ROcc> occs;
  for (const auto& t : ts) {
    if (t.system != system)
      throw Error(ErrorCode::SystemMismatch, "word type is not in the requested system");
    sig.check_type(t);
    for (const auto& o : t.occs) occs.push_back({static_cast<int>(sig.index_of(o.gen)), o.exp});
  }
  return occs;
}

bool can_cancel(System system, const Signature& sig, const ROcc& left, const ROcc& right) {
  switch (system) {
    case System::Pivotal:
    case System::CompactClosed:
      if (left.exp == 1 && right.exp == -1) return sig.leq_idx(left.gen, right.gen);
      if (left.exp == -1 && right.exp == 1) return sig.leq_idx(right.gen, left.gen);
      return false;
    case System::Autonomous: {
      if (right.exp != left.exp + 1) return false;
      const bool even = (left.exp % 2) == 0;
      return even ? sig.leq_idx(left.gen, right.gen) : sig.leq_idx(right.gen, left.gen);
    }
    case System::SelfDualPivotal:
    case System::SelfDualCompactClosed:
      return sig.cub_idx(left.gen, right.gen);
  }
  return false;
}

bool leftover_ok(System system, const Signature& sig, const ROcc& o) {
  const int s = static_cast<int>(sig.index_of(sig.distinguished()));
  switch (system) {
    case System::Autonomous:
      if (o.exp != 0) return false;
      break;
    case System::Pivotal:
    case System::CompactClosed:
      if (o.exp != 1) return false;
      break;
    default:
      break;
  }
  return sig.leq_idx(o.gen, s);
}

namespace {

// Interval tables over half-open ranges; unit[i][j] <=> occs[i..j) cancels away.
struct OrderedTables {
  int n = 0;
  std::vector<char> unit;  // (n+1)*(n+1)
  std::vector<char> to_s;

  char& u(int i, int j) { return unit[i * (n + 1) + j]; }
  char& s(int i, int j) { return to_s[i * (n + 1) + j]; }
};

OrderedTables build_tables(System system, const Signature& sig, const std::vector<ROcc>& occs,
                           bool want_s) {
  OrderedTables t;
  const int n = static_cast<int>(occs.size());
  t.n = n;
  t.unit.assign((n + 1) * (n + 1), 0);
  for (int i = 0; i <= n; ++i) t.u(i, i) = 1;
  for (int len = 2; len <= n; len += 2)
    for (int i = 0; i + len <= n; ++i) {
      const int j = i + len;
      for (int k = i + 1; k < j; k += 2)
        if (can_cancel(system, sig, occs[i], occs[k]) && t.u(i + 1, k) && t.u(k + 1, j)) {
          t.u(i, j) = 1;
          break;
        }
    }
  if (want_s) {
    t.to_s.assign((n + 1) * (n + 1), 0);
    for (int i = 0; i <= n; ++i)
      for (int j = i; j <= n; ++j) {
        if (((j - i) % 2) == 0) continue;
        for (int p = i; p < j; ++p)
          if (leftover_ok(system, sig, occs[p]) && t.u(i, p) && t.u(p + 1, j)) {
            t.s(i, j) = 1;
            break;
          }
      }
  }
  return t;
}

// Lexicographically least witness: position i pairs with the least feasible
// partner; the leftover is placed only where no pairing completes.
void build_unit_witness(System system, const Signature& sig, const std::vector<ROcc>& occs,
                        OrderedTables& t, int i, int j, Matching& out) {
  if (i >= j) return;
  for (int k = i + 1; k < j; k += 2) {
    if (can_cancel(system, sig, occs[i], occs[k]) && t.u(i + 1, k) && t.u(k + 1, j)) {
      out.pairs.emplace_back(i, k);
      build_unit_witness(system, sig, occs, t, i + 1, k, out);
      build_unit_witness(system, sig, occs, t, k + 1, j, out);
      return;
    }
  }
  throw Error(ErrorCode::BadArgument, "internal: unit witness reconstruction failed");
}

void build_s_witness(System system, const Signature& sig, const std::vector<ROcc>& occs,
                     OrderedTables& t, int i, int j, Matching& out) {
  if (i >= j) throw Error(ErrorCode::BadArgument, "internal: S witness reconstruction failed");
  for (int k = i + 1; k < j; k += 2) {
    if (can_cancel(system, sig, occs[i], occs[k]) && t.u(i + 1, k) && t.s(k + 1, j)) {
      out.pairs.emplace_back(i, k);
      build_unit_witness(system, sig, occs, t, i + 1, k, out);
      build_s_witness(system, sig, occs, t, k + 1, j, out);
      return;
    }
  }
  if (leftover_ok(system, sig, occs[i]) && t.u(i + 1, j)) {
    out.leftover = i;
    build_unit_witness(system, sig, occs, t, i + 1, j, out);
    return;
  }
  throw Error(ErrorCode::BadArgument, "internal: S witness reconstruction failed");
}

std::optional<Matching> reduce_ordered(System system, const Signature& sig,
                                       const std::vector<ROcc>& occs, Target target) {
  const int n = static_cast<int>(occs.size());
  auto t = build_tables(system, sig, occs, target == Target::Distinguished);
  Matching m;
  if (target == Target::Unit) {
    if (n % 2 != 0 || !t.u(0, n)) return std::nullopt;
    build_unit_witness(system, sig, occs, t, 0, n, m);
  } else {
    if (n % 2 != 1 || !t.s(0, n)) return std::nullopt;
    build_s_witness(system, sig, occs, t, 0, n, m);
  }
  std::sort(m.pairs.begin(), m.pairs.end());
  return m;
}

// --- compact closed: bipartite matching positives x negatives ------------

struct CcGraph {
  std::vector<int> pos, neg;            // occurrence indices
  std::vector<std::vector<int>> adj;    // pos slot -> neg slots
  std::vector<char> pos_leftover_ok;
};

CcGraph cc_graph(const Signature& sig, const std::vector<ROcc>& occs, bool with_sink) {
  CcGraph g;
  for (int i = 0; i < static_cast<int>(occs.size()); ++i)
    (occs[i].exp == 1 ? g.pos : g.neg).push_back(i);
  g.adj.resize(g.pos.size());
  g.pos_leftover_ok.resize(g.pos.size(), 0);
  for (size_t a = 0; a < g.pos.size(); ++a) {
    for (size_t b = 0; b < g.neg.size(); ++b)
      if (sig.leq_idx(occs[g.pos[a]].gen, occs[g.neg[b]].gen)) g.adj[a].push_back(static_cast<int>(b));
    if (with_sink && leftover_ok(System::CompactClosed, sig, occs[g.pos[a]]))
      g.pos_leftover_ok[a] = 1;
  }
  return g;
}

// Kuhn's augmenting paths. The sink (slot = neg count) absorbs one leftover.
struct CcMatcher {
  const CcGraph& g;
  bool use_sink;
  std::vector<int> match_neg;  // neg slot (incl. sink) -> pos slot
  std::vector<char> visited;

  explicit CcMatcher(const CcGraph& g, bool use_sink)
      : g(g), use_sink(use_sink), match_neg(g.neg.size() + 1, -1) {}

  bool try_augment(int a, const std::vector<char>& banned_pos, const std::vector<char>& banned_neg) {
    for (int b : g.adj[a]) {
      if (banned_neg[b] || visited[b]) continue;
      visited[b] = 1;
      if (match_neg[b] == -1 || try_augment(match_neg[b], banned_pos, banned_neg)) {
        match_neg[b] = a;
        return true;
      }
    }
    if (use_sink && g.pos_leftover_ok[a]) {
      const int sink = static_cast<int>(g.neg.size());
      if (!visited[sink]) {
        visited[sink] = 1;
        if (match_neg[sink] == -1 || try_augment(match_neg[sink], banned_pos, banned_neg)) {
          match_neg[sink] = a;
          return true;
        }
      }
    }
    return false;
  }

  // Can every non-banned positive be matched (covering every non-banned negative)?
  bool saturates(const std::vector<char>& banned_pos, const std::vector<char>& banned_neg) {
    std::fill(match_neg.begin(), match_neg.end(), -1);
    size_t need = 0;
    for (size_t a = 0; a < g.pos.size(); ++a) {
      if (banned_pos[a]) continue;
      need++;
      visited.assign(g.neg.size() + 1, 0);
      if (!try_augment(static_cast<int>(a), banned_pos, banned_neg)) return false;
    }
    (void)need;
    return true;
  }
};

std::optional<Matching> reduce_cc(const Signature& sig, const std::vector<ROcc>& occs,
                                  Target target) {
  const int n = static_cast<int>(occs.size());
  const bool want_s = target == Target::Distinguished;
  CcGraph g = cc_graph(sig, occs, want_s);
  const long long np = static_cast<long long>(g.pos.size());
  const long long nn = static_cast<long long>(g.neg.size());
  if (want_s ? (np != nn + 1) : (np != nn)) return std::nullopt;

  std::vector<char> banned_pos(g.pos.size(), 0), banned_neg(g.neg.size(), 0);
  CcMatcher matcher(g, want_s);
  if (!matcher.saturates(banned_pos, banned_neg)) return std::nullopt;

  // Greedy lex-least assignment over occurrence positions.
  std::vector<int> slot_of(n, -1);  // occurrence -> slot in pos/neg
  std::vector<char> is_pos(n, 0);
  for (size_t a = 0; a < g.pos.size(); ++a) slot_of[g.pos[a]] = static_cast<int>(a), is_pos[g.pos[a]] = 1;
  for (size_t b = 0; b < g.neg.size(); ++b) slot_of[g.neg[b]] = static_cast<int>(b);

  Matching m;
  std::vector<char> done(n, 0);
  bool leftover_used = false;
  auto feasible = [&]() { return matcher.saturates(banned_pos, banned_neg); };
  for (int i = 0; i < n; ++i) {
    if (done[i]) continue;
    bool placed = false;
    for (int j = i + 1; j < n && !placed; ++j) {
      if (done[j]) continue;
      if (is_pos[i] == is_pos[j]) continue;
      const ROcc& p = is_pos[i] ? occs[i] : occs[j];
      const ROcc& q = is_pos[i] ? occs[j] : occs[i];
      if (!sig.leq_idx(p.gen, q.gen)) continue;
      const int pa = slot_of[is_pos[i] ? i : j];
      const int nb = slot_of[is_pos[i] ? j : i];
      banned_pos[pa] = 1;
      banned_neg[nb] = 1;
      if (feasible()) {
        m.pairs.emplace_back(i, j);
        done[i] = done[j] = 1;
        placed = true;
      } else {
        banned_pos[pa] = 0;
        banned_neg[nb] = 0;
      }
    }
    if (!placed) {
      if (want_s && !leftover_used && is_pos[i] && g.pos_leftover_ok[slot_of[i]]) {
        banned_pos[slot_of[i]] = 1;
        matcher.use_sink = false;  // leftover consumed
        if (feasible()) {
          m.leftover = i;
          done[i] = 1;
          leftover_used = true;
          continue;
        }
        banned_pos[slot_of[i]] = 0;
        matcher.use_sink = true;
      }
      throw Error(ErrorCode::BadArgument, "internal: cc witness reconstruction failed");
    }
  }
  std::sort(m.pairs.begin(), m.pairs.end());
  return m;
}

// --- self-dual compact closed: general pairing with failed-state memo ----

struct SdccSolver {
  const Signature& sig;
  const std::vector<ROcc>& occs;
  bool want_s;
  std::unordered_set<uint64_t> failed;

  bool feasible(uint64_t mask, bool leftover_free) {
    if (mask == 0) return true;
    const uint64_t key = mask * 2 + (leftover_free ? 1 : 0);
    if (failed.count(key)) return false;
    const int i = std::countr_zero(mask);
    uint64_t rest = mask & (mask - 1);
    for (uint64_t jm = rest; jm; jm &= jm - 1) {
      const int j = std::countr_zero(jm);
      if (!sig.cub_idx(occs[i].gen, occs[j].gen)) continue;
      if (feasible(rest & ~(uint64_t(1) << j), leftover_free)) return true;
    }
    if (leftover_free && leftover_ok(System::SelfDualCompactClosed, sig, occs[i]) &&
        feasible(rest, false))
      return true;
    failed.insert(key);
    return false;
  }
};

std::optional<Matching> reduce_sdcc(const Signature& sig, const std::vector<ROcc>& occs,
                                    Target target) {
  const int n = static_cast<int>(occs.size());
  if (n > 62)
    throw Error(ErrorCode::TooLarge, "self-dual compact closed sentences are limited to 62 occurrences");
  const bool want_s = target == Target::Distinguished;
  if ((n % 2 == 0) == want_s) return std::nullopt;
  SdccSolver solver{sig, occs, want_s, {}};
  uint64_t all = n == 0 ? 0 : (~uint64_t(0) >> (64 - n));
  if (!solver.feasible(all, want_s)) return std::nullopt;

  Matching m;
  uint64_t mask = all;
  bool leftover_free = want_s;
  while (mask) {
    const int i = std::countr_zero(mask);
    const uint64_t rest = mask & (mask - 1);
    bool placed = false;
    for (uint64_t jm = rest; jm && !placed; jm &= jm - 1) {
      const int j = std::countr_zero(jm);
      if (!sig.cub_idx(occs[i].gen, occs[j].gen)) continue;
      if (solver.feasible(rest & ~(uint64_t(1) << j), leftover_free)) {
        m.pairs.emplace_back(i, j);
        mask = rest & ~(uint64_t(1) << j);
        placed = true;
      }
    }
    if (!placed) {
      if (leftover_free && leftover_ok(System::SelfDualCompactClosed, sig, occs[i]) &&
          solver.feasible(rest, false)) {
        m.leftover = i;
        leftover_free = false;
        mask = rest;
        continue;
      }
      throw Error(ErrorCode::BadArgument, "internal: sdcc witness reconstruction failed");
    }
  }
  std::sort(m.pairs.begin(), m.pairs.end());
  return m;
}

}  // namespace

std::optional<Matching> reduces_occs(System system, const Signature& sig,
                                     const std::vector<ROcc>& occs, Target target) {
  switch (system) {
    case System::Autonomous:
    case System::Pivotal:
    case System::SelfDualPivotal:
      return reduce_ordered(system, sig, occs, target);
    case System::CompactClosed:
      return reduce_cc(sig, occs, target);
    case System::SelfDualCompactClosed:
      return reduce_sdcc(sig, occs, target);
  }
  return std::nullopt;
}

std::optional<Matching> reduces(System system, const Signature& sig, const std::vector<Type>& ts,
                                Target target) {
  return reduces_occs(system, sig, flatten(system, sig, ts), target);
}

bool verify_matching(System system, const Signature& sig, const std::vector<Type>& ts,
                     Target target, const Matching& m) {
  std::vector<ROcc> occs;
  try {
    occs = flatten(system, sig, ts);
  } catch (const Error&) {
    return false;
  }
  const int n = static_cast<int>(occs.size());
  std::vector<char> seen(n, 0);
  for (auto [i, j] : m.pairs) {
    if (i < 0 || j < 0 || i >= n || j >= n || i >= j) return false;
    if (seen[i] || seen[j]) return false;
    seen[i] = seen[j] = 1;
    if (!can_cancel(system, sig, occs[i], occs[j])) return false;
  }
  if (m.leftover) {
    const int p = *m.leftover;
    if (target != Target::Distinguished) return false;
    if (p < 0 || p >= n || seen[p]) return false;
    seen[p] = 1;
    if (!leftover_ok(system, sig, occs[p])) return false;
  } else if (target == Target::Distinguished) {
    return false;
  }
  for (int i = 0; i < n; ++i)
    if (!seen[i]) return false;
  if (system_is_ordered(system)) {
    for (size_t a = 0; a < m.pairs.size(); ++a)
      for (size_t b = a + 1; b < m.pairs.size(); ++b) {
        auto [i, j] = m.pairs[a];
        auto [k, l] = m.pairs[b];
        if (k < i) std::swap(i, k), std::swap(j, l);
        if (i < k && k < j && j < l) return false;  // crossing
      }
    if (m.leftover)
      for (auto [i, j] : m.pairs)
        if (i < *m.leftover && *m.leftover < j) return false;  // enclosed leftover
  }
  return true;
}

std::string format_matching(const Matching& m) {
  std::string out = "pairs=";
  for (auto [i, j] : m.pairs)
    out += "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
  if (m.pairs.empty()) out += "none";
  if (m.leftover) out += " leftover=" + std::to_string(*m.leftover + 1);
  return out;
}

}  // namespace grin
