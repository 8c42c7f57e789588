#include "raagrep/words.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

namespace raagrep {

namespace {

bool letters_commute(const Graph& k, std::size_t a, std::size_t b) {
  return a != b && k.adjacent(a, b);
}

// Cancel x^e ... x^-e whenever everything in between commutes with x.
void reduce_in_place(const Graph& k, Word& w) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < w.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < w.size(); ++j) {
        if (w[j].vertex == w[i].vertex) {
          if (w[j].exponent == -w[i].exponent) {
            w.erase(w.begin() + static_cast<std::ptrdiff_t>(j));
            w.erase(w.begin() + static_cast<std::ptrdiff_t>(i));
            changed = true;
          }
          break;
        }
        if (!letters_commute(k, w[i].vertex, w[j].vertex)) break;
      }
    }
  }
}

}  // namespace

NormalForm normalize(const Graph& k, const Word& input) {
  for (const Letter& l : input) {
    if (l.vertex >= k.vertex_count()) throw std::invalid_argument("word letter outside the graph");
    if (l.exponent != 1 && l.exponent != -1) throw std::invalid_argument("letter exponent must be +-1");
  }
  Word rest = input;
  reduce_in_place(k, rest);

  // Greedy: repeatedly emit the least letter that can be shuffled to the front.
  Word out;
  out.reserve(rest.size());
  while (!rest.empty()) {
    std::size_t best = 0;
    for (std::size_t p = 1; p < rest.size(); ++p) {
      bool movable = true;
      for (std::size_t q = 0; q < p && movable; ++q)
        movable = letters_commute(k, rest[q].vertex, rest[p].vertex);
      if (movable && rest[p] < rest[best]) best = p;
    }
    out.push_back(rest[best]);
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return NormalForm(std::move(out));
}

Word word_mul(const Word& u, const Word& v) {
  Word out = u;
  out.insert(out.end(), v.begin(), v.end());
  return out;
}

Word word_inv(const Word& u) {
  Word out;
  out.reserve(u.size());
  for (auto it = u.rbegin(); it != u.rend(); ++it) out.push_back(it->inverse());
  return out;
}

bool words_equal(const Graph& k, const Word& u, const Word& v) {
  return normalize(k, u) == normalize(k, v);
}

Word parse_word(const Graph& k, std::string_view text) {
  Word out;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    const auto caret = token.find('^');
    const std::string name = token.substr(0, caret);
    const auto v = k.find_vertex(name);
    if (!v) throw std::invalid_argument("unknown generator '" + name + "' in word");
    int power = 1;
    if (caret != std::string::npos) {
      std::string_view exp = std::string_view(token).substr(caret + 1);
      if (!exp.empty() && exp.front() == '+') exp.remove_prefix(1);
      auto [ptr, ec] = std::from_chars(exp.data(), exp.data() + exp.size(), power);
      if (ec != std::errc{} || ptr != exp.data() + exp.size() || power == 0)
        throw std::invalid_argument("bad exponent in token '" + token + "'");
    }
    const int sign = power > 0 ? 1 : -1;
    for (int r = 0; r < power * sign; ++r) out.push_back({*v, sign});
  }
  return out;
}

std::string format_word(const Graph& k, const Word& w) {
  std::string out;
  for (const Letter& l : w) {
    if (!out.empty()) out += ' ';
    out += k.name(l.vertex);
    if (l.exponent < 0) out += "^-1";
  }
  return out;
}

}  // namespace raagrep
