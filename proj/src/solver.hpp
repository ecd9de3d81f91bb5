#pragma once

#include <optional>

#include "functional.hpp"
#include "sample.hpp"

namespace grin {

// direction: source = syntactic system, target = semantic system.
// Supported: piv->cc (learn pivotal from compact closed), cc->sdcc, sdp->sdcc,
// piv->sdp, piv->sdcc. Induction into autonomous syntax is out of scope.
struct InductionProblem {
  Functor direction = Functor::PivToCC;
  TrainingSample sample;
  bool require_functional = true;
};

struct InductionSolution {
  Lexicon lexicon;
  bool operator==(const InductionSolution&) const = default;
};

struct EnumerateResult {
  std::vector<InductionSolution> solutions;
  bool truncated = false;
};

System semantic_system(Functor direction);
System syntactic_system(Functor direction);
void check_supported_direction(Functor direction);

// Exactly the syntactic types whose image is isomorphic to t, canonical
// (lexicographic) order, no duplicates; optionally restricted to functional ones.
std::vector<Type> preimages(Functor direction, const Type& t, bool functional_only);

struct SolveOptions {
  bool use_pruning = true;  // admissible pruning; results identical either way
};

// Deterministic: keys in first-occurrence order, candidates in canonical order;
// the result is the first solution in the induced lexicographic order.
std::optional<InductionSolution> solve(const InductionProblem& p, const SolveOptions& opts = {});
EnumerateResult enumerate_solutions(const InductionProblem& p, size_t cap,
                                    const SolveOptions& opts = {});

// Polynomial-time check of the three solution invariants (image match,
// functionality if required, syntactic grammaticality of every sentence).
bool verify_solution(const InductionProblem& p, const InductionSolution& sol);

// First-occurrence key order of a problem; exposed for extraction and tests.
std::vector<Lexicon::Key> problem_keys(const InductionProblem& p);

}  // namespace grin
