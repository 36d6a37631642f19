#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fcover/types.hpp"

namespace fcover {

// A finite set of letters with an involution. Letters may be their own
// inverse.
class InvolutiveAlphabet {
 public:
  InvolutiveAlphabet() = default;
  // `inverse[p]` is the partner of letter p; throws Error unless it is an
  // involution. Names default to p0, p1, ...
  explicit InvolutiveAlphabet(std::vector<Letter> inverse,
                              std::vector<std::string> names = {});

  // Letters 2i, 2i+1 form a pair for each i < pairs.
  static InvolutiveAlphabet with_pairs(std::size_t pairs);

  std::size_t size() const { return inverse_.size(); }
  Letter inverse(Letter p) const { return inverse_.at(p); }
  bool is_self_inverse(Letter p) const { return inverse(p) == p; }
  const std::string& name(Letter p) const { return names_.at(p); }
  std::optional<Letter> find(std::string_view name) const;

  // One representative per {p, p^-1} orbit, in ascending order.
  std::vector<Letter> orbit_representatives() const;

  friend bool operator==(const InvolutiveAlphabet& a,
                         const InvolutiveAlphabet& b) {
    return a.inverse_ == b.inverse_;
  }

 private:
  std::vector<Letter> inverse_;
  std::vector<std::string> names_;
};

// p_1 ... p_n  |->  p_n^-1 ... p_1^-1
Word word_inverse(const InvolutiveAlphabet& alphabet, const Word& u);

// Throws Error if some letter is not in the alphabet.
void check_word(const InvolutiveAlphabet& alphabet, const Word& u);

std::string format_word(const InvolutiveAlphabet& alphabet, const Word& u);

// All words of length <= max_length in shortlex order.
std::vector<Word> all_words(std::size_t alphabet_size, std::size_t max_length);

}  // namespace fcover
