#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "fat/base.hpp"

namespace fat {

// Tape content as symbol ids. Endmarkers never appear in a Word; the engine
// synthesizes them from head positions.
using Word = std::vector<Symbol>;

// An ordered set of distinct printable tokens. The endmarker tokens '<' and
// '>' are reserved and may not be declared.
class Alphabet {
 public:
  Alphabet() = default;

  explicit Alphabet(std::vector<std::string> tokens) : tokens_(std::move(tokens)) {
    for (Symbol i = 0; i < (Symbol)tokens_.size(); ++i) {
      const std::string& t = tokens_[i];
      if (t.empty()) throw Error("empty alphabet token");
      if (t == std::string(1, kLendToken) || t == std::string(1, kRendToken))
        throw Error("token '" + t + "' is reserved for endmarkers");
      if (!index_.emplace(t, i).second)
        throw Error("duplicate alphabet token '" + t + "'");
    }
  }

  std::size_t size() const { return tokens_.size(); }
  bool empty() const { return tokens_.empty(); }

  const std::vector<std::string>& tokens() const { return tokens_; }

  // Token for a symbol id, including the endmarkers.
  std::string token(Symbol s) const {
    if (s == kLend) return std::string(1, kLendToken);
    if (s == kRend) return std::string(1, kRendToken);
    if (s < 0 || (std::size_t)s >= tokens_.size())
      throw Error("symbol id " + std::to_string(s) + " out of range");
    return tokens_[s];
  }

  std::optional<Symbol> find(std::string_view tok) const {
    auto it = index_.find(std::string(tok));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  bool single_char() const {
    for (const auto& t : tokens_)
      if (t.size() != 1) return false;
    return true;
  }

  // Encodes a character string, one symbol per character. Requires all
  // tokens to be single characters.
  Word encode(std::string_view text) const {
    if (!single_char())
      throw Error("alphabet has multi-character tokens; cannot encode plain text");
    Word w;
    w.reserve(text.size());
    for (char c : text) {
      auto s = find(std::string_view(&c, 1));
      if (!s) throw Error(std::string("symbol '") + c + "' not in alphabet");
      w.push_back(*s);
    }
    return w;
  }

  std::string decode(const Word& w) const {
    std::string out;
    for (Symbol s : w) out += token(s);
    return out;
  }

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.tokens_ == b.tokens_;
  }

 private:
  std::vector<std::string> tokens_;
  std::unordered_map<std::string, Symbol> index_;
};

}  // namespace fat
