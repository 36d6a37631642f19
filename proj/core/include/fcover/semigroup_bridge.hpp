#pragma once

#include <optional>
#include <span>
#include <vector>

#include "fcover/inverse_monoid.hpp"

namespace fcover {

// S^1: S with a fresh neutral element. Elements of S keep their indices and
// the new identity is `adjoined` == base->size().
struct AdjoinedIdentity {
  SemigroupPtr base;
  MonoidPtr monoid;
  Element adjoined;
};

AdjoinedIdentity adjoin_identity(const SemigroupPtr& s);

std::optional<Element> detect_identity(const InverseSemigroup& s);

// The inverse subsemigroup on `members` (indices into `s`, in the given
// order). Throws Error if `members` is not closed under products and
// inverses.
InverseSemigroup restrict_to(const InverseSemigroup& s,
                             std::span<const Element> members);

struct StrippedCover {
  SemigroupPtr semigroup;        // N \ ker(theta)
  std::vector<Element> members;  // index in N of each element
  Homomorphism cover;            // onto target.base
};

// Removes ker(theta) = theta^-1(1) from the source of theta : N -> S^1 and
// restricts theta to a map onto S. `theta.target` must be `target.monoid`.
StrippedCover strip_kernel(const Homomorphism& theta,
                           const AdjoinedIdentity& target);

struct OrderIdealConditions {
  bool order_ideal = false;  // E(S) is an order ideal of E(T)
  bool unit_closed = false;  // t^-1 t, t t^-1 in S implies t in S

  friend bool operator==(OrderIdealConditions,
                         OrderIdealConditions) = default;
};

// Evaluates both conditions for the subsemigroup on `members` of `t`.
// Throws Error if `members` is not closed.
OrderIdealConditions order_ideal_conditions(const InverseSemigroup& t,
                                            std::span<const Element> members);

}  // namespace fcover
