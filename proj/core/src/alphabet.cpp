#include "fcover/alphabet.hpp"

#include <algorithm>

namespace fcover {

InvolutiveAlphabet::InvolutiveAlphabet(std::vector<Letter> inverse,
                                       std::vector<std::string> names)
    : inverse_(std::move(inverse)), names_(std::move(names)) {
  for (Letter p = 0; p < inverse_.size(); ++p) {
    if (inverse_[p] >= inverse_.size() || inverse_[inverse_[p]] != p) {
      throw Error("letter inverse map is not an involution at letter " +
                  std::to_string(p));
    }
  }
  if (names_.empty()) {
    for (Letter p = 0; p < inverse_.size(); ++p) {
      names_.push_back("p" + std::to_string(p));
    }
  }
  if (names_.size() != inverse_.size()) {
    throw Error("alphabet names and involution differ in size");
  }
}

InvolutiveAlphabet InvolutiveAlphabet::with_pairs(std::size_t pairs) {
  std::vector<Letter> inverse;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < pairs; ++i) {
    inverse.push_back(static_cast<Letter>(2 * i + 1));
    inverse.push_back(static_cast<Letter>(2 * i));
    names.push_back("p" + std::to_string(i));
    names.push_back("P" + std::to_string(i));
  }
  return InvolutiveAlphabet(std::move(inverse), std::move(names));
}

std::optional<Letter> InvolutiveAlphabet::find(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<Letter>(it - names_.begin());
}

std::vector<Letter> InvolutiveAlphabet::orbit_representatives() const {
  std::vector<Letter> out;
  for (Letter p = 0; p < size(); ++p) {
    if (inverse_[p] >= p) out.push_back(p);
  }
  return out;
}

Word word_inverse(const InvolutiveAlphabet& alphabet, const Word& u) {
  Word out;
  out.reserve(u.size());
  for (auto it = u.rbegin(); it != u.rend(); ++it) {
    out.push_back(alphabet.inverse(*it));
  }
  return out;
}

void check_word(const InvolutiveAlphabet& alphabet, const Word& u) {
  for (Letter p : u) {
    if (p >= alphabet.size()) {
      throw Error("unknown letter " + std::to_string(p) + " (alphabet has " +
                  std::to_string(alphabet.size()) + " letters)");
    }
  }
}

std::string format_word(const InvolutiveAlphabet& alphabet, const Word& u) {
  if (u.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (i > 0) out += ' ';
    out += alphabet.name(u[i]);
  }
  return out;
}

std::vector<Word> all_words(std::size_t alphabet_size,
                            std::size_t max_length) {
  std::vector<Word> out{Word{}};
  std::size_t level_begin = 0;
  for (std::size_t len = 1; len <= max_length && alphabet_size > 0; ++len) {
    std::size_t level_end = out.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (Letter p = 0; p < alphabet_size; ++p) {
        Word w = out[i];
        w.push_back(p);
        out.push_back(std::move(w));
      }
    }
    level_begin = level_end;
  }
  return out;
}

}  // namespace fcover
