#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fcover/types.hpp"

namespace fcover {

// The finite set 0..size-1 on which partial bijections act.
struct Carrier {
  std::size_t size = 1;

  friend bool operator==(Carrier, Carrier) = default;
};

// A partial injective map on a Carrier. Products are read left to right:
// (f * g)(x) = g(f(x)).
class PartialBijection {
 public:
  static constexpr Point kUndefined = static_cast<Point>(-1);

  // The empty map on `carrier`.
  explicit PartialBijection(Carrier carrier);

  // `images[x]` is the image of x or kUndefined. Throws Error unless the
  // defined images are distinct points of the carrier.
  PartialBijection(Carrier carrier, std::vector<Point> images);

  static PartialBijection identity(Carrier carrier);
  // Partial identity on the listed points.
  static PartialBijection restriction_of_identity(Carrier carrier,
                                                  std::span<const Point> points);
  static PartialBijection from_pairs(
      Carrier carrier, std::span<const std::pair<Point, Point>> pairs);
  static PartialBijection from_pairs(
      Carrier carrier, std::initializer_list<std::pair<Point, Point>> pairs);

  Carrier carrier() const { return Carrier{images_.size()}; }
  std::size_t degree() const { return images_.size(); }

  bool defined_at(Point x) const {
    return x < images_.size() && images_[x] != kUndefined;
  }
  Point operator()(Point x) const { return images_[x]; }
  std::span<const Point> images() const { return images_; }

  std::size_t rank() const;
  std::vector<Point> domain() const;
  std::vector<Point> image() const;

  bool is_idempotent() const;  // a restriction of the identity
  bool is_total() const { return rank() == degree(); }
  // True iff *this is a restriction of `other`.
  bool is_restriction_of(const PartialBijection& other) const;

  friend bool operator==(const PartialBijection&,
                         const PartialBijection&) = default;
  friend auto operator<=>(const PartialBijection&,
                          const PartialBijection&) = default;

  std::string to_string() const;

 private:
  std::vector<Point> images_;
};

// A PartialBijection that is total. Kept distinct so completions are visible
// in signatures.
class Permutation {
 public:
  explicit Permutation(PartialBijection map);
  static Permutation identity(Carrier carrier);

  const PartialBijection& as_partial() const { return map_; }
  Point operator()(Point x) const { return map_(x); }
  std::size_t degree() const { return map_.degree(); }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  PartialBijection map_;
};

// (f * g)(x) = g(f(x)). Throws Error on carrier mismatch.
PartialBijection compose(const PartialBijection& f, const PartialBijection& g);
PartialBijection invert(const PartialBijection& f);
Permutation compose(const Permutation& f, const Permutation& g);
Permutation invert(const Permutation& f);

// Extends f to a bijection. Points outside dom(f), taken in ascending order,
// are sent to the points outside im(f), also in ascending order.
Permutation complete_to_permutation(const PartialBijection& f);

std::ostream& operator<<(std::ostream& os, const PartialBijection& f);

struct PartialBijectionHash {
  std::size_t operator()(const PartialBijection& f) const noexcept;
};

}  // namespace fcover
