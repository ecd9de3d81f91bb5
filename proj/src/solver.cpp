#include "solver.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace grin {

System semantic_system(Functor direction) { return functor_target(direction); }
System syntactic_system(Functor direction) { return functor_source(direction); }

void check_supported_direction(Functor direction) {
  if (direction == Functor::AutToPiv)
    throw Error(ErrorCode::UnsupportedDirection,
                "induction into autonomous syntax has infinite preimage sets");
}

namespace {

void emit_orderings(System system, std::vector<Occ> sorted, std::vector<Type>& out) {
  std::sort(sorted.begin(), sorted.end(), occ_less);
  do {
    out.push_back(Type{system, sorted});
  } while (std::next_permutation(sorted.begin(), sorted.end(), occ_less));
}

// All sign assignments of an SDCC bag as canonical signed bags, lex order.
void emit_sign_bags(System target_system, const std::vector<std::pair<std::string, int>>& gens,
                    size_t at, std::vector<Occ>& acc, std::vector<Type>& out) {
  if (at == gens.size()) {
    out.push_back(make_type(target_system, acc));
    return;
  }
  const auto& [gen, count] = gens[at];
  for (int negs = 0; negs <= count; ++negs) {
    const size_t base = acc.size();
    for (int i = 0; i < count - negs; ++i) acc.push_back({gen, 1});
    for (int i = 0; i < negs; ++i) acc.push_back({gen, -1});
    emit_sign_bags(target_system, gens, at + 1, acc, out);
    acc.resize(base);
  }
}

std::vector<std::pair<std::string, int>> gen_counts(const Type& t) {
  std::vector<std::pair<std::string, int>> counts;
  for (const auto& o : t.occs) {
    if (!counts.empty() && counts.back().first == o.gen)
      counts.back().second++;
    else
      counts.emplace_back(o.gen, 1);
  }
  return counts;
}

}  // namespace

std::vector<Type> preimages(Functor direction, const Type& t, bool functional_only) {
  check_supported_direction(direction);
  if (t.system != semantic_system(direction))
    throw Error(ErrorCode::SystemMismatch, "type is not in the semantic system of the direction");
  const System syn = syntactic_system(direction);
  std::vector<Type> out;
  if (t.is_unit()) {
    out.push_back(unit_type(syn));
  } else {
    switch (direction) {
      case Functor::PivToCC:  // orderings of the signed multiset
        emit_orderings(syn, t.occs, out);
        break;
      case Functor::SDPToSDCC:  // orderings of the unsigned multiset
        emit_orderings(syn, t.occs, out);
        break;
      case Functor::CCToSDCC: {  // sign assignments
        std::vector<Occ> acc;
        emit_sign_bags(syn, gen_counts(t), 0, acc, out);
        break;
      }
      case Functor::PivToSDP: {  // sign vectors on the fixed letter order
        const size_t n = t.occs.size();
        std::vector<Occ> word = t.occs;
        for (uint64_t bits = 0; bits < (uint64_t(1) << n); ++bits) {
          for (size_t i = 0; i < n; ++i) word[i].exp = (bits >> (n - 1 - i)) & 1 ? -1 : 1;
          out.push_back(Type{syn, word});
        }
        break;
      }
      case Functor::PivToSDCC: {  // orderings x signs
        std::vector<Type> bags;
        std::vector<Occ> acc;
        emit_sign_bags(System::CompactClosed, gen_counts(t), 0, acc, bags);
        for (const auto& bag : bags) emit_orderings(syn, bag.occs, out);
        std::sort(out.begin(), out.end(), type_less);
        break;
      }
      case Functor::AutToPiv:
        break;  // unreachable
    }
  }
  if (functional_only) {
    out.erase(std::remove_if(out.begin(), out.end(),
                             [&](const Type& c) { return !is_functional(syn, c); }),
              out.end());
  }
  return out;
}

namespace {

struct KeyState {
  Lexicon::Key key;
  std::vector<Type> candidates;
  int assigned = -1;  // candidate index
};

struct TokenRef {
  int key = -1;
};

// Pool item for the relaxed feasibility check: a generator with a fixed sign
// (from an assigned out-of-prefix block) or a free sign (unassigned block).
struct PoolItem {
  int gen;
  int exp;
  bool flex;
};

struct SentenceState {
  std::vector<TokenRef> tokens;
  std::vector<int> keys_sorted;  // unique key ids
  int unassigned_keys = 0;
};

class Search {
 public:
  Search(const InductionProblem& p, const SolveOptions& opts, size_t cap)
      : p_(p), opts_(opts), cap_(cap), sig_(*p.sample.signature),
        syn_(syntactic_system(p.direction)) {
    build();
  }

  EnumerateResult run() {
    if (viable_) dfs(0);
    return std::move(result_);
  }

 private:
  const InductionProblem& p_;
  SolveOptions opts_;
  size_t cap_;
  const Signature& sig_;
  System syn_;
  std::vector<KeyState> keys_;
  std::vector<SentenceState> sentences_;
  std::vector<std::vector<int>> key_sentences_;  // key -> sentence ids
  EnumerateResult result_;
  bool viable_ = true;
  int s_gen_ = -1;

  void build() {
    check_supported_direction(p_.direction);
    if (p_.sample.system != semantic_system(p_.direction))
      throw Error(ErrorCode::SystemMismatch, "sample system does not match the direction");
    {
      auto violations = validate_sample(p_.sample);
      if (!violations.empty())
        throw Error(ErrorCode::BadArgument, "sample is not grammatical: " + violations.front());
    }
    s_gen_ = static_cast<int>(sig_.index_of(sig_.distinguished()));
    std::map<Lexicon::Key, int> key_ids;
    for (const auto& sent : p_.sample.sentences) {
      SentenceState ss;
      for (const auto& wt : sent) {
        Lexicon::Key key{wt.word, wt.type};
        auto it = key_ids.find(key);
        int id;
        if (it == key_ids.end()) {
          id = static_cast<int>(keys_.size());
          key_ids.emplace(key, id);
          KeyState ks;
          ks.key = key;
          ks.candidates = preimages(p_.direction, wt.type, p_.require_functional);
          keys_.push_back(std::move(ks));
          key_sentences_.emplace_back();
        } else {
          id = it->second;
        }
        ss.tokens.push_back({id});
      }
      ss.keys_sorted.assign(ss.tokens.size(), 0);
      for (size_t i = 0; i < ss.tokens.size(); ++i) ss.keys_sorted[i] = ss.tokens[i].key;
      std::sort(ss.keys_sorted.begin(), ss.keys_sorted.end());
      ss.keys_sorted.erase(std::unique(ss.keys_sorted.begin(), ss.keys_sorted.end()),
                           ss.keys_sorted.end());
      ss.unassigned_keys = static_cast<int>(ss.keys_sorted.size());
      const int sid = static_cast<int>(sentences_.size());
      for (int k : ss.keys_sorted) key_sentences_[k].push_back(sid);
      sentences_.push_back(std::move(ss));
    }
    for (auto& ks : keys_)
      if (ks.candidates.empty()) viable_ = false;
    if (opts_.use_pruning && viable_) {
      for (size_t s = 0; s < sentences_.size() && viable_; ++s)
        if (!sentence_feasible(static_cast<int>(s))) viable_ = false;
    }
  }

  const Type& assigned_type(int key) const { return keys_[key].candidates[keys_[key].assigned]; }

  bool sentence_complete(int sid) const { return sentences_[sid].unassigned_keys == 0; }

  bool sentence_grammatical(int sid) {
    std::vector<ROcc> occs;
    for (const auto& tok : sentences_[sid].tokens)
      for (const auto& o : assigned_type(tok.key).occs)
        occs.push_back({static_cast<int>(sig_.index_of(o.gen)), o.exp});
    return reduces_occs(syn_, sig_, occs, Target::Distinguished).has_value();
  }

  // ---- relaxed partial feasibility --------------------------------------

  // Contiguous assigned prefix as concrete occurrences; everything after the
  // first unassigned token is order-relaxed into the pool.
  bool sentence_feasible(int sid) {
    const SentenceState& ss = sentences_[sid];
    std::vector<ROcc> prefix;
    std::vector<PoolItem> pool;
    bool in_prefix = true;
    for (const auto& tok : ss.tokens) {
      const KeyState& ks = keys_[tok.key];
      if (ks.assigned >= 0) {
        const Type& t = ks.candidates[ks.assigned];
        for (const auto& o : t.occs) {
          const int g = static_cast<int>(sig_.index_of(o.gen));
          if (in_prefix)
            prefix.push_back({g, o.exp});
          else
            pool.push_back({g, o.exp, false});
        }
      } else {
        in_prefix = false;
        for (const auto& o : keys_[tok.key].key.sem.occs)
          pool.push_back({static_cast<int>(sig_.index_of(o.gen)), content_exp(o.exp), content_flex()});
      }
    }
    if (pool.empty() && !prefix.empty()) return true;  // full check happens elsewhere
    if (!component_sums_ok(prefix, pool)) return false;
    if (system_is_ordered(syn_)) return prefix_planarity_ok(prefix, pool);
    return true;
  }

  // Unassigned content: for order-only directions the signs are fixed by the
  // semantic type, for sign-choosing directions they are free.
  bool direction_fixes_signs() const {
    return p_.direction == Functor::PivToCC || p_.direction == Functor::SDPToSDCC;
  }
  int content_exp(int sem_exp) const { return direction_fixes_signs() ? sem_exp : 1; }
  bool content_flex() const { return !direction_fixes_signs() && system_is_signed(syn_); }

  // Per comparability component: cancelled pairs never cross components, so the
  // signed net (or the count parity for unsigned systems) must be achievable.
  bool component_sums_ok(const std::vector<ROcc>& prefix, const std::vector<PoolItem>& pool) {
    const size_t n = sig_.size();
    std::vector<long long> fixed(n, 0), flex(n, 0), count(n, 0);
    auto add = [&](int gen, int exp, bool is_flex) {
      const size_t c = sig_.component_of_idx(gen);
      count[c]++;
      if (is_flex)
        flex[c]++;
      else
        fixed[c] += exp;
    };
    for (const auto& o : prefix) add(o.gen, o.exp, false);
    for (const auto& it : pool) add(it.gen, it.exp, it.flex);
    const size_t s_comp = sig_.component_of_idx(s_gen_);
    for (size_t c = 0; c < n; ++c) {
      if (count[c] == 0) continue;
      const long long required = (c == s_comp) ? 1 : 0;
      if (system_is_signed(syn_)) {
        const long long lo = fixed[c] - flex[c], hi = fixed[c] + flex[c];
        if (required < lo || required > hi) return false;
        if (((hi - required) % 2) != 0) return false;
      } else {
        if ((count[c] % 2) != (required % 2)) return false;
      }
    }
    return true;
  }

  bool pool_compatible(const ROcc& d, const PoolItem& it) const {
    if (syn_ == System::SelfDualPivotal) return sig_.cub_idx(d.gen, it.gen);
    // pivotal: a dangler can meet the pool letter in either order
    if (it.flex) {
      if (d.exp == 1) return sig_.leq_idx(d.gen, it.gen);
      return sig_.leq_idx(it.gen, d.gen);
    }
    if (d.exp == 1 && it.exp == -1) return sig_.leq_idx(d.gen, it.gen);
    if (d.exp == -1 && it.exp == 1) return sig_.leq_idx(it.gen, d.gen);
    return false;
  }

  // Planarity relaxation: prefix occurrences either cancel within the prefix
  // (stack discipline) or dangle rightward into the pool; danglers must be
  // injectable into compatible pool letters and the pool remainder must still
  // pass the component check with one leftover overall.
  bool prefix_planarity_ok(const std::vector<ROcc>& prefix, const std::vector<PoolItem>& pool) {
    std::vector<std::vector<ROcc>> stacks;
    stacks.emplace_back();
    constexpr size_t kMaxStacks = 512;
    for (const auto& o : prefix) {
      std::set<std::vector<std::pair<int, int>>> seen;
      std::vector<std::vector<ROcc>> next;
      auto push_state = [&](std::vector<ROcc> st) {
        std::vector<std::pair<int, int>> sig_key;
        sig_key.reserve(st.size());
        for (const auto& x : st) sig_key.emplace_back(x.gen, x.exp);
        if (seen.insert(std::move(sig_key)).second) next.push_back(std::move(st));
      };
      for (const auto& st : stacks) {
        if (!st.empty() && can_cancel(syn_, sig_, st.back(), o)) {
          auto popped = st;
          popped.pop_back();
          push_state(std::move(popped));
        }
        auto pushed = st;
        pushed.push_back(o);
        push_state(std::move(pushed));
      }
      stacks = std::move(next);
      if (stacks.size() > kMaxStacks) return true;  // stay sound, give up pruning
    }
    for (const auto& st : stacks)
      if (danglers_servable(st, pool)) return true;
    return false;
  }

  bool danglers_servable(const std::vector<ROcc>& danglers, const std::vector<PoolItem>& pool) {
    // Try leftover in the pool (or no dangler as leftover), and each eligible
    // dangler as the leftover.
    if (danglers_matchable(danglers, pool, -1)) return true;
    for (size_t i = 0; i < danglers.size(); ++i)
      if (leftover_ok(syn_, sig_, danglers[i]) &&
          danglers_matchable(danglers, pool, static_cast<int>(i)))
        return true;
    return false;
  }

  bool danglers_matchable(const std::vector<ROcc>& danglers, const std::vector<PoolItem>& pool,
                          int leftover_dangler) {
    std::vector<int> match_pool(pool.size(), -1);
    std::vector<char> visited;
    std::vector<int> order;
    for (size_t i = 0; i < danglers.size(); ++i)
      if (static_cast<int>(i) != leftover_dangler) order.push_back(static_cast<int>(i));
    std::function<bool(int)> augment = [&](int d) -> bool {
      for (size_t j = 0; j < pool.size(); ++j) {
        if (visited[j] || !pool_compatible(danglers[d], pool[j])) continue;
        visited[j] = 1;
        if (match_pool[j] == -1 || augment(match_pool[j])) {
          match_pool[j] = d;
          return true;
        }
      }
      return false;
    };
    for (int d : order) {
      visited.assign(pool.size(), 0);
      if (!augment(d)) return false;
    }
    // Remainder of the pool must cancel internally (component counting), with
    // the leftover drawn from it when no dangler was reserved.
    const size_t n = sig_.size();
    std::vector<long long> fixed(n, 0), flex(n, 0), count(n, 0);
    bool pool_has_leftover_candidate = false;
    for (size_t j = 0; j < pool.size(); ++j) {
      if (match_pool[j] != -1) continue;
      const size_t c = sig_.component_of_idx(pool[j].gen);
      count[c]++;
      if (pool[j].flex)
        flex[c]++;
      else
        fixed[c] += pool[j].exp;
      if (pool[j].flex || leftover_ok(syn_, sig_, ROcc{pool[j].gen, pool[j].exp}))
        if (sig_.leq_idx(pool[j].gen, s_gen_)) pool_has_leftover_candidate = true;
    }
    const bool need_pool_leftover = leftover_dangler < 0;
    if (need_pool_leftover && !pool_has_leftover_candidate) return false;
    const size_t s_comp = sig_.component_of_idx(s_gen_);
    for (size_t c = 0; c < n; ++c) {
      if (count[c] == 0 && !(need_pool_leftover && c == s_comp)) continue;
      const long long required = (need_pool_leftover && c == s_comp) ? 1 : 0;
      if (system_is_signed(syn_)) {
        const long long lo = fixed[c] - flex[c], hi = fixed[c] + flex[c];
        if (required < lo || required > hi || ((hi - required) % 2) != 0) return false;
      } else {
        if ((count[c] % 2) != (required % 2)) return false;
      }
    }
    return true;
  }

  // ---- search ------------------------------------------------------------

  bool check_after_assign(int key) {
    for (int sid : key_sentences_[key]) {
      if (sentence_complete(sid)) {
        if (!sentence_grammatical(sid)) return false;
      } else if (opts_.use_pruning) {
        if (!sentence_feasible(sid)) return false;
      }
    }
    return true;
  }

  void dfs(size_t key_at) {
    if (result_.truncated) return;
    if (key_at == keys_.size()) {
      if (result_.solutions.size() >= cap_) {
        result_.truncated = true;
        return;
      }
      InductionSolution sol;
      for (const auto& ks : keys_)
        sol.lexicon.assign(ks.key.word, ks.key.sem, ks.candidates[ks.assigned]);
      result_.solutions.push_back(std::move(sol));
      return;
    }
    KeyState& ks = keys_[key_at];
    for (int sid : key_sentences_[key_at]) sentences_[sid].unassigned_keys--;
    for (int c = 0; c < static_cast<int>(ks.candidates.size()); ++c) {
      ks.assigned = c;
      if (check_after_assign(static_cast<int>(key_at))) {
        dfs(key_at + 1);
        if (result_.truncated) break;
      }
    }
    ks.assigned = -1;
    for (int sid : key_sentences_[key_at]) sentences_[sid].unassigned_keys++;
  }
};

}  // namespace

std::vector<Lexicon::Key> problem_keys(const InductionProblem& p) {
  std::vector<Lexicon::Key> keys;
  std::set<Lexicon::Key> seen;
  for (const auto& sent : p.sample.sentences)
    for (const auto& wt : sent) {
      Lexicon::Key key{wt.word, wt.type};
      if (seen.insert(key).second) keys.push_back(key);
    }
  return keys;
}

std::optional<InductionSolution> solve(const InductionProblem& p, const SolveOptions& opts) {
  auto res = Search(p, opts, 1).run();
  if (res.solutions.empty()) return std::nullopt;
  return std::move(res.solutions.front());
}

EnumerateResult enumerate_solutions(const InductionProblem& p, size_t cap,
                                    const SolveOptions& opts) {
  if (cap < 1) throw Error(ErrorCode::BadArgument, "cap must be at least 1");
  return Search(p, opts, cap).run();
}

bool verify_solution(const InductionProblem& p, const InductionSolution& sol) {
  try {
    check_supported_direction(p.direction);
    const System syn = syntactic_system(p.direction);
    for (const auto& sent : p.sample.sentences) {
      std::vector<Type> syn_types;
      for (const auto& wt : sent) {
        const Type* t = sol.lexicon.lookup(wt.word, wt.type);
        if (!t) return false;
        if (!isomorphic(image(p.direction, *t), wt.type)) return false;
        if (p.require_functional && !is_functional(syn, *t)) return false;
        syn_types.push_back(*t);
      }
      if (!reduces(syn, *p.sample.signature, syn_types, Target::Distinguished)) return false;
    }
    return true;
  } catch (const Error&) {
    return false;
  }
}

}  // namespace grin
