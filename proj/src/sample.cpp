#include "sample.hpp"

#include <sstream>

namespace grin {

std::vector<std::string> validate_sample(const TrainingSample& s) {
  std::vector<std::string> violations;
  for (size_t i = 0; i < s.sentences.size(); ++i) {
    const Sentence& sent = s.sentences[i];
    if (sent.empty()) {
      violations.push_back("sentence " + std::to_string(i + 1) + ": empty");
      continue;
    }
    std::vector<Type> ts;
    ts.reserve(sent.size());
    for (const auto& wt : sent) ts.push_back(wt.type);
    try {
      if (!reduces(s.system, *s.signature, ts, Target::Distinguished))
        violations.push_back("sentence " + std::to_string(i + 1) + ": does not reduce to " +
                             s.signature->distinguished());
    } catch (const Error& e) {
      violations.push_back("sentence " + std::to_string(i + 1) + ": " + e.what());
    }
  }
  return violations;
}

TrainingSample rename_words(const TrainingSample& s, const std::string& suffix) {
  if (suffix.empty()) throw Error(ErrorCode::BadArgument, "rename suffix must be non-empty");
  TrainingSample out = s;
  for (auto& sent : out.sentences)
    for (auto& wt : sent) wt.word += "#" + suffix;
  return out;
}

void Lexicon::assign(const std::string& word, const Type& sem, const Type& syn) {
  map_[Key{word, sem}] = syn;
}

const Type* Lexicon::lookup(const std::string& word, const Type& sem) const {
  auto it = map_.find(Key{word, sem});
  return it == map_.end() ? nullptr : &it->second;
}

TrainingSample parse_sample(const std::string& text, const IncludeLoader& loader) {
  std::string sig_text;
  std::optional<System> system;
  std::vector<std::pair<int, std::string>> sentence_lines;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    lineno++;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    auto fail = [&](const std::string& msg) {
      throw Error(ErrorCode::SyntaxError, "line " + std::to_string(lineno) + ": " + msg);
    };
    if (first == "system") {
      std::string name, extra;
      if (!(ls >> name) || (ls >> extra)) fail("expected 'system NAME'");
      system = system_from_name(name);
      if (!system) fail("unknown system '" + name + "'");
    } else if (first == "gen" || first == "sub" || first == "sentence") {
      sig_text += line + "\n";
    } else if (first == "signature") {
      std::string path, extra;
      if (!(ls >> path) || (ls >> extra)) fail("expected 'signature PATH'");
      if (!loader) fail("no loader available for included signature '" + path + "'");
      sig_text += loader(path);
      sig_text += "\n";
    } else {
      sentence_lines.emplace_back(lineno, line);
    }
  }
  if (!system) throw Error(ErrorCode::SyntaxError, "missing 'system NAME' header");

  TrainingSample out;
  out.system = *system;
  out.signature = std::make_shared<Signature>(load_signature(sig_text));
  for (const auto& [no, sline] : sentence_lines) {
    Sentence sent;
    std::istringstream ls(sline);
    std::string tok;
    while (ls >> tok) {
      auto colon = tok.find(':');
      if (colon == std::string::npos || colon == 0 || colon + 1 == tok.size())
        throw Error(ErrorCode::SyntaxError,
                    "line " + std::to_string(no) + ": expected word:TYPE, got '" + tok + "'");
      const std::string word = tok.substr(0, colon);
      const std::string type_text = tok.substr(colon + 1);
      if (!valid_word_token(word))
        throw Error(ErrorCode::SyntaxError, "line " + std::to_string(no) + ": bad word '" + word + "'");
      Type t;
      try {
        t = parse_type(out.system, type_text);
      } catch (const Error& e) {
        throw Error(e.code(), "line " + std::to_string(no) + ": " + e.what());
      }
      out.signature->check_type(t);
      sent.push_back({word, std::move(t)});
    }
    if (sent.empty())
      throw Error(ErrorCode::SyntaxError, "line " + std::to_string(no) + ": empty sentence");
    out.sentences.push_back(std::move(sent));
  }
  return out;
}

std::string serialize_sample(const TrainingSample& s) {
  std::string out = "system " + system_name(s.system) + "\n";
  out += serialize_signature(*s.signature);
  for (const auto& sent : s.sentences) {
    std::string line;
    for (size_t i = 0; i < sent.size(); ++i) {
      if (i) line += ' ';
      line += sent[i].word + ":" + format_type(sent[i].type);
    }
    out += line + "\n";
  }
  return out;
}

}  // namespace grin
