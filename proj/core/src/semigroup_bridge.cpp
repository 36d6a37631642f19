#include "fcover/semigroup_bridge.hpp"

#include <string>

namespace fcover {

AdjoinedIdentity adjoin_identity(const SemigroupPtr& s) {
  const std::size_t n = s->size();
  const std::size_t m = n + 1;
  const auto one = static_cast<Element>(n);
  std::vector<Element> mul(m * m);
  std::vector<Element> inv(m);
  for (Element x = 0; x < m; ++x) {
    inv[x] = x == one ? one : s->inv(x);
    for (Element y = 0; y < m; ++y) {
      Element v;
      if (x == one) {
        v = y;
      } else if (y == one) {
        v = x;
      } else {
        v = s->mul(x, y);
      }
      mul[x * m + y] = v;
    }
  }
  auto monoid = std::make_shared<InverseMonoid>(
      InverseMonoid::from_tables(m, std::move(mul), std::move(inv), one));
  return AdjoinedIdentity{s, monoid, one};
}

std::optional<Element> detect_identity(const InverseSemigroup& s) {
  return s.detect_identity();
}

InverseSemigroup restrict_to(const InverseSemigroup& s,
                             std::span<const Element> members) {
  const std::size_t k = members.size();
  std::vector<Element> position(s.size(), kNoElement);
  for (Element i = 0; i < k; ++i) position[members[i]] = i;
  std::vector<Element> mul(k * k);
  std::vector<Element> inv(k);
  for (Element i = 0; i < k; ++i) {
    const Element xi = position[s.inv(members[i])];
    if (xi == kNoElement) {
      throw Error("subset not closed under inverses at element " +
                  std::to_string(members[i]));
    }
    inv[i] = xi;
    for (Element j = 0; j < k; ++j) {
      const Element p = position[s.mul(members[i], members[j])];
      if (p == kNoElement) {
        throw Error("subset not closed under products: " +
                    std::to_string(members[i]) + " * " +
                    std::to_string(members[j]));
      }
      mul[i * k + j] = p;
    }
  }
  return InverseSemigroup::from_trusted_tables(k, std::move(mul),
                                               std::move(inv));
}

StrippedCover strip_kernel(const Homomorphism& theta,
                           const AdjoinedIdentity& target) {
  if (theta.target != target.monoid) {
    throw Error("strip_kernel: homomorphism does not map onto the given S^1");
  }
  std::vector<Element> members;
  for (Element x = 0; x < theta.source->size(); ++x) {
    if (theta(x) != target.adjoined) members.push_back(x);
  }
  if (members.empty()) {
    throw Error("strip_kernel: source is entirely the kernel");
  }
  auto sub = std::make_shared<InverseSemigroup>(
      restrict_to(*theta.source, members));
  std::vector<Element> map;
  map.reserve(members.size());
  for (Element x : members) map.push_back(theta(x));
  return StrippedCover{sub, members,
                       Homomorphism{sub, target.base, std::move(map)}};
}

OrderIdealConditions order_ideal_conditions(const InverseSemigroup& t,
                                            std::span<const Element> members) {
  restrict_to(t, members);  // throws unless closed
  std::vector<bool> in(t.size(), false);
  for (Element x : members) in[x] = true;
  OrderIdealConditions out{true, true};
  for (Element e : t.idempotents()) {
    if (!in[e]) continue;
    for (Element f : t.idempotents()) {
      if (!in[f] && t.leq(f, e)) out.order_ideal = false;
    }
  }
  for (Element x = 0; x < t.size(); ++x) {
    if (!in[x] && in[t.mul(t.inv(x), x)] && in[t.mul(x, t.inv(x))]) {
      out.unit_closed = false;
    }
  }
  return out;
}

}  // namespace fcover
