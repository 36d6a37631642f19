#include "fcover/inverse_monoid.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace fcover {
namespace {

std::string el(Element x) { return std::to_string(x); }

void check_shape(std::size_t n, const std::vector<Element>& mul,
                 const std::vector<Element>& inv) {
  if (n == 0) throw Error("structure must have at least one element");
  if (mul.size() != n * n) {
    throw Error("multiplication table has " + std::to_string(mul.size()) +
                " entries, expected " + std::to_string(n * n));
  }
  if (inv.size() != n) throw Error("inverse table has wrong size");
  for (Element v : mul) {
    if (v >= n) throw Error("multiplication table entry out of range");
  }
  for (Element v : inv) {
    if (v >= n) throw Error("inverse table entry out of range");
  }
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  Element find(Element x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(Element a, Element b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<Element> parent_;
};

}  // namespace

InverseSemigroup::InverseSemigroup(std::size_t size, std::vector<Element> mul,
                                   std::vector<Element> inv,
                                   std::vector<PartialBijection> realization)
    : size_(size),
      mul_(std::move(mul)),
      inv_(std::move(inv)),
      idempotent_(size, false),
      realization_(std::move(realization)) {
  for (Element x = 0; x < size_; ++x) {
    if (this->mul(x, x) == x) {
      idempotent_[x] = true;
      idempotents_.push_back(x);
    }
  }
  for (Element x = 0; x < realization_.size(); ++x) {
    lookup_.emplace(realization_[x], x);
  }
}

InverseSemigroup InverseSemigroup::from_tables(std::size_t size,
                                               std::vector<Element> mul,
                                               std::vector<Element> inv) {
  check_shape(size, mul, inv);
  InverseSemigroup s(size, std::move(mul), std::move(inv), {});
  s.validate();
  return s;
}

InverseSemigroup InverseSemigroup::from_trusted_tables(
    std::size_t size, std::vector<Element> mul, std::vector<Element> inv) {
  check_shape(size, mul, inv);
  return InverseSemigroup(size, std::move(mul), std::move(inv), {});
}

InverseSemigroup InverseSemigroup::from_mul_table(std::size_t size,
                                                  std::vector<Element> mul) {
  check_shape(size, mul, std::vector<Element>(size, 0));
  auto m = [&](Element x, Element y) { return mul[x * size + y]; };
  std::vector<Element> inv(size, kNoElement);
  for (Element x = 0; x < size; ++x) {
    for (Element y = 0; y < size; ++y) {
      if (m(m(x, y), x) == x && m(m(y, x), y) == y) {
        if (inv[x] != kNoElement) {
          throw Error("element " + el(x) + " has two inverses: " +
                      el(inv[x]) + " and " + el(y));
        }
        inv[x] = y;
      }
    }
    if (inv[x] == kNoElement) {
      throw Error("element " + el(x) + " has no inverse");
    }
  }
  return from_tables(size, std::move(mul), std::move(inv));
}

InverseSemigroup InverseSemigroup::from_realization(
    std::vector<PartialBijection> maps) {
  const std::size_t n = maps.size();
  if (n == 0) throw Error("structure must have at least one element");
  std::unordered_map<PartialBijection, Element, PartialBijectionHash> index;
  for (Element x = 0; x < n; ++x) {
    if (!index.emplace(maps[x], x).second) {
      throw Error("realization lists the map " + maps[x].to_string() +
                  " twice");
    }
  }
  auto lookup = [&](const PartialBijection& f) {
    auto it = index.find(f);
    if (it == index.end()) {
      throw Error("realization not closed: missing " + f.to_string());
    }
    return it->second;
  };
  std::vector<Element> mul(n * n);
  std::vector<Element> inv(n);
  for (Element x = 0; x < n; ++x) {
    inv[x] = lookup(invert(maps[x]));
    for (Element y = 0; y < n; ++y) {
      mul[x * n + y] = lookup(compose(maps[x], maps[y]));
    }
  }
  return InverseSemigroup(n, std::move(mul), std::move(inv), std::move(maps));
}

Element InverseSemigroup::mul_word(std::span<const Element> xs) const {
  if (xs.empty()) throw Error("empty product in a semigroup");
  Element acc = xs[0];
  for (std::size_t i = 1; i < xs.size(); ++i) acc = mul(acc, xs[i]);
  return acc;
}

std::optional<Element> InverseSemigroup::detect_identity() const {
  for (Element f = 0; f < size_; ++f) {
    bool neutral = true;
    for (Element x = 0; x < size_ && neutral; ++x) {
      neutral = mul(f, x) == x && mul(x, f) == x;
    }
    if (neutral) return f;
  }
  return std::nullopt;
}

std::optional<Element> InverseSemigroup::find(const PartialBijection& f) const {
  auto it = lookup_.find(f);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

void InverseSemigroup::validate() const {
  const std::size_t n = size_;
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      const Element xy = mul(x, y);
      for (Element z = 0; z < n; ++z) {
        if (mul(xy, z) != mul(x, mul(y, z))) {
          throw Error("not associative at (" + el(x) + ", " + el(y) + ", " +
                      el(z) + ")");
        }
      }
    }
  }
  for (Element x = 0; x < n; ++x) {
    const Element xi = inv(x);
    if (mul(mul(x, xi), x) != x || mul(mul(xi, x), xi) != xi) {
      throw Error("inverse table wrong at element " + el(x));
    }
    for (Element y = 0; y < n; ++y) {
      if (y != xi && mul(mul(x, y), x) == x && mul(mul(y, x), y) == y) {
        throw Error("element " + el(x) + " has two inverses: " + el(xi) +
                    " and " + el(y));
      }
    }
  }
  for (Element e : idempotents_) {
    for (Element f : idempotents_) {
      if (mul(e, f) != mul(f, e)) {
        throw Error("idempotents " + el(e) + " and " + el(f) +
                    " do not commute");
      }
    }
  }
}

InverseMonoid InverseMonoid::from_tables(std::size_t size,
                                         std::vector<Element> mul,
                                         std::vector<Element> inv,
                                         Element one) {
  InverseSemigroup s =
      InverseSemigroup::from_tables(size, std::move(mul), std::move(inv));
  if (one >= size) throw Error("identity index out of range");
  for (Element x = 0; x < size; ++x) {
    if (s.mul(one, x) != x || s.mul(x, one) != x) {
      throw Error("element " + el(one) + " is not neutral");
    }
  }
  return InverseMonoid(std::move(s), one);
}

InverseMonoid InverseMonoid::from_semigroup(InverseSemigroup s) {
  auto one = s.detect_identity();
  if (!one) throw Error("semigroup has no identity element");
  return InverseMonoid(std::move(s), *one);
}

InverseMonoid InverseMonoid::from_realization(
    std::vector<PartialBijection> maps) {
  return from_semigroup(InverseSemigroup::from_realization(std::move(maps)));
}

InverseMonoid InverseMonoid::from_cayley(
    const CayleyGraph& graph, const InvolutiveAlphabet& alphabet,
    std::vector<PartialBijection> realization) {
  MonoidTables t = tables_from_cayley(graph, alphabet);
  return InverseMonoid(t.size, std::move(t.mul), std::move(t.inv),
                       std::move(realization), 0);
}

InverseMonoid InverseMonoid::trivial() {
  return InverseMonoid(1, {0}, {0}, {}, 0);
}

InverseMonoid close_generators(Carrier carrier,
                               std::span<const PartialBijection> gens,
                               std::size_t limit) {
  std::vector<PartialBijection> letters;
  std::vector<Letter> letter_inverse;
  for (const auto& g : gens) {
    if (g.carrier() != carrier) {
      throw Error("generator " + g.to_string() + " is not on a carrier of " +
                  std::to_string(carrier.size) + " points");
    }
    PartialBijection gi = invert(g);
    const auto p = static_cast<Letter>(letters.size());
    if (gi == g) {
      letters.push_back(g);
      letter_inverse.push_back(p);
    } else {
      letters.push_back(g);
      letters.push_back(std::move(gi));
      letter_inverse.push_back(p + 1);
      letter_inverse.push_back(p);
    }
  }
  auto closure = bfs_closure<PartialBijection, PartialBijectionHash>(
      PartialBijection::identity(carrier), letters,
      [](const PartialBijection& a, const PartialBijection& b) {
        return compose(a, b);
      },
      limit);
  return InverseMonoid::from_cayley(closure.graph,
                                    InvolutiveAlphabet(letter_inverse),
                                    std::move(closure.elements));
}

bool natural_leq(const InverseSemigroup& s, Element x, Element y) {
  return s.leq(x, y);
}

bool sigma_related(const InverseSemigroup& s, Element x, Element y) {
  // z <= x, y means z = e x = e y with e = z z^-1.
  for (Element e : s.idempotents()) {
    if (s.mul(e, x) == s.mul(e, y)) return true;
  }
  return false;
}

std::vector<Element> sigma_classes(const InverseSemigroup& s) {
  const std::size_t n = s.size();
  UnionFind uf(n);
  // Every z <= x satisfies z = e x for an idempotent e; linking x with e x
  // generates the same equivalence as sigma.
  for (Element x = 0; x < n; ++x) {
    for (Element e : s.idempotents()) uf.unite(x, s.mul(e, x));
  }
  std::vector<Element> cls(n, kNoElement);
  std::vector<Element> root_class(n, kNoElement);
  Element next = 0;
  for (Element x = 0; x < n; ++x) {
    Element r = uf.find(x);
    if (root_class[r] == kNoElement) root_class[r] = next++;
    cls[x] = root_class[r];
  }
  return cls;
}

SigmaQuotient sigma_quotient(const MonoidPtr& m) {
  const std::vector<Element> cls = sigma_classes(*m);
  const std::size_t k =
      *std::max_element(cls.begin(), cls.end()) + std::size_t{1};
  std::vector<Element> mul(k * k, kNoElement);
  std::vector<Element> inv(k, kNoElement);
  for (Element x = 0; x < m->size(); ++x) {
    const Element cx = cls[x];
    const Element ci = cls[m->inv(x)];
    if (inv[cx] != kNoElement && inv[cx] != ci) {
      throw InternalError("sigma is not compatible with inversion");
    }
    inv[cx] = ci;
    for (Element y = 0; y < m->size(); ++y) {
      Element& slot = mul[cx * k + cls[y]];
      const Element c = cls[m->mul(x, y)];
      if (slot != kNoElement && slot != c) {
        throw InternalError("sigma is not a congruence");
      }
      slot = c;
    }
  }
  auto group = std::make_shared<InverseMonoid>(InverseMonoid::from_tables(
      k, std::move(mul), std::move(inv), cls[m->one()]));
  if (!group->is_group()) {
    throw InternalError("sigma quotient is not a group");
  }
  return SigmaQuotient{group, Homomorphism{m, group, cls}};
}

bool is_e_unitary(const InverseSemigroup& s) {
  for (Element x = 0; x < s.size(); ++x) {
    if (s.is_idempotent(x)) continue;
    for (Element e : s.idempotents()) {
      if (s.leq(e, x)) return false;
    }
  }
  return true;
}

bool is_f_inverse(const InverseSemigroup& s) {
  if (!s.detect_identity()) {
    throw Error("F-inverse check requires a monoid");
  }
  const std::vector<Element> cls = sigma_classes(s);
  const std::size_t k =
      *std::max_element(cls.begin(), cls.end()) + std::size_t{1};
  std::vector<std::vector<Element>> members(k);
  for (Element x = 0; x < s.size(); ++x) members[cls[x]].push_back(x);
  for (const auto& cl : members) {
    bool has_max = false;
    for (Element top : cl) {
      has_max = std::all_of(cl.begin(), cl.end(),
                            [&](Element x) { return s.leq(x, top); });
      if (has_max) break;
    }
    if (!has_max) return false;
  }
  return true;
}

WagnerPreston wagner_preston(const MonoidPtr& t) {
  const std::size_t n = t->size();
  const Carrier carrier{n};
  std::vector<PartialBijection> maps;
  maps.reserve(n);
  for (Element a = 0; a < n; ++a) {
    const Element aa = t->mul(a, t->inv(a));
    std::vector<Point> images(n, PartialBijection::kUndefined);
    for (Element x = 0; x < n; ++x) {
      if (t->mul(x, aa) == x) images[x] = t->mul(x, a);
    }
    maps.emplace_back(carrier, std::move(images));
  }
  auto image = std::make_shared<InverseMonoid>(
      InverseMonoid::from_realization(std::move(maps)));
  std::vector<Element> map(n);
  std::iota(map.begin(), map.end(), 0);
  return WagnerPreston{image, Homomorphism{t, image, std::move(map)}};
}

}  // namespace fcover
