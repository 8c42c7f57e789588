#pragma once

// Words in the vertex generators of a right-angled Artin group and their
// canonical forms.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "raagrep/graph.hpp"

namespace raagrep {

struct Letter {
  std::size_t vertex = 0;
  int exponent = 1;  // +1 or -1

  Letter inverse() const { return {vertex, -exponent}; }
  /// Order used for the canonical form: by vertex, then x before x^-1.
  friend bool operator<(const Letter& a, const Letter& b) {
    if (a.vertex != b.vertex) return a.vertex < b.vertex;
    return a.exponent > b.exponent;
  }
  friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

/// The lexicographically least freely reduced representative of a word's
/// group element, under the letter order above.
class NormalForm {
 public:
  NormalForm() = default;
  const Word& word() const { return word_; }
  bool is_identity() const { return word_.empty(); }
  friend bool operator==(const NormalForm&, const NormalForm&) = default;

 private:
  friend NormalForm normalize(const Graph& k, const Word& w);
  explicit NormalForm(Word w) : word_(std::move(w)) {}
  Word word_;
};

NormalForm normalize(const Graph& k, const Word& w);

Word word_mul(const Word& u, const Word& v);
Word word_inv(const Word& u);
bool words_equal(const Graph& k, const Word& u, const Word& v);

/// Whitespace-separated tokens "v", "v^-1", or "v^n" (expanded to |n| letters).
/// Throws std::invalid_argument on unknown vertices or malformed exponents.
Word parse_word(const Graph& k, std::string_view text);
std::string format_word(const Graph& k, const Word& w);

}  // namespace raagrep
