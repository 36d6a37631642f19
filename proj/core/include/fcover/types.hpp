#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace fcover {

// Index of an element inside a finite structure (monoid, group, groupoid).
using Element = std::uint32_t;
// Index of a letter of an involutive alphabet.
using Letter = std::uint32_t;
// A point of a finite carrier 0..n-1.
using Point = std::uint32_t;
using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;

using Word = std::vector<Letter>;

inline constexpr Element kNoElement = static_cast<Element>(-1);

// Raised when an input violates a documented precondition or a structure
// fails validation.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when a certifier contradicts a proven statement. Seeing one of
// these means there is a bug somewhere in the library.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace fcover
