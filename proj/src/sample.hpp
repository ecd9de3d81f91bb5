#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "reduce.hpp"
#include "signature.hpp"
#include "types.hpp"

namespace grin {

struct WordToken {
  std::string word;
  Type type;

  bool operator==(const WordToken&) const = default;
};

using Sentence = std::vector<WordToken>;

// Typed training sample. A sample is well formed when every sentence reduces to
// the distinguished type in its own system; violations are reported, not thrown.
struct TrainingSample {
  std::shared_ptr<const Signature> signature;
  System system = System::CompactClosed;
  std::vector<Sentence> sentences;
};

std::vector<std::string> validate_sample(const TrainingSample& s);

// Appends "#suffix" to every word; types and grammaticality are untouched.
TrainingSample rename_words(const TrainingSample& s, const std::string& suffix);

// Rigid association (word, semantic type up to isomorphism) -> syntactic type.
class Lexicon {
 public:
  struct Key {
    std::string word;
    Type sem;
    bool operator<(const Key& o) const {
      if (word != o.word) return word < o.word;
      if (type_less(sem, o.sem)) return true;
      if (type_less(o.sem, sem)) return false;
      return false;
    }
    bool operator==(const Key& o) const { return word == o.word && sem == o.sem; }
  };

  // Semantic keys are canonicalized by make_type, so {a,b*} written b*,a collides.
  void assign(const std::string& word, const Type& sem, const Type& syn);
  const Type* lookup(const std::string& word, const Type& sem) const;
  const std::map<Key, Type>& entries() const { return map_; }
  bool operator==(const Lexicon&) const = default;

 private:
  std::map<Key, Type> map_;
};

// Sample document: `system NAME`, inline signature directives or
// `signature PATH` (resolved through the loader callback), then one sentence
// per line as space-separated `word:TYPE` tokens. `#` starts a comment.
using IncludeLoader = std::function<std::string(const std::string& path)>;
TrainingSample parse_sample(const std::string& text, const IncludeLoader& loader = nullptr);
std::string serialize_sample(const TrainingSample& s);

}  // namespace grin
