#include "fcover/partial_bijection.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace fcover {

PartialBijection::PartialBijection(Carrier carrier)
    : images_(carrier.size, kUndefined) {
  if (carrier.size == 0) throw Error("carrier must have at least one point");
}

PartialBijection::PartialBijection(Carrier carrier, std::vector<Point> images)
    : images_(std::move(images)) {
  if (carrier.size == 0) throw Error("carrier must have at least one point");
  if (images_.size() != carrier.size) {
    throw Error("partial bijection has " + std::to_string(images_.size()) +
                " entries but carrier has " + std::to_string(carrier.size) +
                " points");
  }
  std::vector<bool> hit(carrier.size, false);
  for (Point y : images_) {
    if (y == kUndefined) continue;
    if (y >= carrier.size) {
      throw Error("image point " + std::to_string(y) + " outside carrier");
    }
    if (hit[y]) {
      throw Error("map is not injective: point " + std::to_string(y) +
                  " hit twice");
    }
    hit[y] = true;
  }
}

PartialBijection PartialBijection::identity(Carrier carrier) {
  std::vector<Point> images(carrier.size);
  for (Point x = 0; x < carrier.size; ++x) images[x] = x;
  return PartialBijection(carrier, std::move(images));
}

PartialBijection PartialBijection::restriction_of_identity(
    Carrier carrier, std::span<const Point> points) {
  std::vector<Point> images(carrier.size, kUndefined);
  for (Point x : points) {
    if (x >= carrier.size) throw Error("point outside carrier");
    images[x] = x;
  }
  return PartialBijection(carrier, std::move(images));
}

PartialBijection PartialBijection::from_pairs(
    Carrier carrier, std::span<const std::pair<Point, Point>> pairs) {
  std::vector<Point> images(carrier.size, kUndefined);
  for (auto [x, y] : pairs) {
    if (x >= carrier.size) {
      throw Error("domain point " + std::to_string(x) + " outside carrier");
    }
    if (images[x] != kUndefined) {
      throw Error("point " + std::to_string(x) + " mapped twice");
    }
    images[x] = y;
  }
  return PartialBijection(carrier, std::move(images));
}

PartialBijection PartialBijection::from_pairs(
    Carrier carrier, std::initializer_list<std::pair<Point, Point>> pairs) {
  return from_pairs(carrier, std::span(pairs.begin(), pairs.size()));
}

std::size_t PartialBijection::rank() const {
  return static_cast<std::size_t>(
      std::count_if(images_.begin(), images_.end(),
                    [](Point y) { return y != kUndefined; }));
}

std::vector<Point> PartialBijection::domain() const {
  std::vector<Point> out;
  for (Point x = 0; x < images_.size(); ++x) {
    if (images_[x] != kUndefined) out.push_back(x);
  }
  return out;
}

std::vector<Point> PartialBijection::image() const {
  std::vector<Point> out;
  for (Point y : images_) {
    if (y != kUndefined) out.push_back(y);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool PartialBijection::is_idempotent() const {
  for (Point x = 0; x < images_.size(); ++x) {
    if (images_[x] != kUndefined && images_[x] != x) return false;
  }
  return true;
}

bool PartialBijection::is_restriction_of(const PartialBijection& other) const {
  if (other.degree() != degree()) return false;
  for (Point x = 0; x < images_.size(); ++x) {
    if (images_[x] != kUndefined && images_[x] != other.images_[x]) {
      return false;
    }
  }
  return true;
}

std::string PartialBijection::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const PartialBijection& f) {
  os << '[';
  bool first = true;
  for (Point x = 0; x < f.degree(); ++x) {
    if (!f.defined_at(x)) continue;
    if (!first) os << ", ";
    os << x << "->" << f(x);
    first = false;
  }
  return os << ']';
}

std::size_t PartialBijectionHash::operator()(
    const PartialBijection& f) const noexcept {
  std::size_t h = f.degree();
  for (Point y : f.images()) {
    h ^= static_cast<std::size_t>(y) + 0x9e3779b97f4a7c15ULL + (h << 6) +
         (h >> 2);
  }
  return h;
}

Permutation::Permutation(PartialBijection map) : map_(std::move(map)) {
  if (!map_.is_total()) throw Error("permutation must be total");
}

Permutation Permutation::identity(Carrier carrier) {
  return Permutation(PartialBijection::identity(carrier));
}

PartialBijection compose(const PartialBijection& f,
                         const PartialBijection& g) {
  if (f.carrier() != g.carrier()) {
    throw Error("cannot compose partial bijections on carriers of size " +
                std::to_string(f.degree()) + " and " +
                std::to_string(g.degree()));
  }
  std::vector<Point> images(f.degree(), PartialBijection::kUndefined);
  for (Point x = 0; x < f.degree(); ++x) {
    if (f.defined_at(x)) images[x] = g(f(x));
  }
  return PartialBijection(f.carrier(), std::move(images));
}

PartialBijection invert(const PartialBijection& f) {
  std::vector<Point> images(f.degree(), PartialBijection::kUndefined);
  for (Point x = 0; x < f.degree(); ++x) {
    if (f.defined_at(x)) images[f(x)] = x;
  }
  return PartialBijection(f.carrier(), std::move(images));
}

Permutation compose(const Permutation& f, const Permutation& g) {
  return Permutation(compose(f.as_partial(), g.as_partial()));
}

Permutation invert(const Permutation& f) {
  return Permutation(invert(f.as_partial()));
}

Permutation complete_to_permutation(const PartialBijection& f) {
  std::vector<Point> free_sources;
  std::vector<bool> used(f.degree(), false);
  for (Point x = 0; x < f.degree(); ++x) {
    if (f.defined_at(x)) {
      used[f(x)] = true;
    } else {
      free_sources.push_back(x);
    }
  }
  std::vector<Point> images(f.images().begin(), f.images().end());
  std::size_t next = 0;
  for (Point y = 0; y < f.degree(); ++y) {
    if (!used[y]) images[free_sources[next++]] = y;
  }
  return Permutation(PartialBijection(f.carrier(), std::move(images)));
}

}  // namespace fcover
