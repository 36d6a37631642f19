#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "fcover/closure.hpp"
#include "fcover/partial_bijection.hpp"
#include "fcover/types.hpp"

namespace fcover {

// A finite inverse semigroup given by dense multiplication and inverse
// tables, optionally realized by partial bijections (element i acts as
// realization()[i]). Immutable once built; every cache is filled eagerly.
class InverseSemigroup {
 public:
  // Checks associativity, x = x x^-1 x, uniqueness of inverses and that
  // idempotents commute. Throws Error naming the first violation.
  static InverseSemigroup from_tables(std::size_t size,
                                      std::vector<Element> mul,
                                      std::vector<Element> inv);
  // As above, but the inverse of each element is found by search.
  static InverseSemigroup from_mul_table(std::size_t size,
                                         std::vector<Element> mul);
  // Skips validation; the caller guarantees the axioms (e.g. the tables come
  // from a substructure of a validated semigroup).
  static InverseSemigroup from_trusted_tables(std::size_t size,
                                              std::vector<Element> mul,
                                              std::vector<Element> inv);
  // Tables computed by composing the given maps; they must be pairwise
  // distinct and closed under composition and inversion.
  static InverseSemigroup from_realization(std::vector<PartialBijection> maps);

  std::size_t size() const { return size_; }
  Element mul(Element x, Element y) const { return mul_[x * size_ + y]; }
  Element inv(Element x) const { return inv_[x]; }
  Element mul_word(std::span<const Element> xs) const;

  bool is_idempotent(Element x) const { return idempotent_[x]; }
  const std::vector<Element>& idempotents() const { return idempotents_; }
  // Natural partial order. x <= y iff x = e y for an idempotent e, which
  // holds iff x = (x x^-1) y.
  bool leq(Element x, Element y) const { return mul(mul(x, inv(x)), y) == x; }

  // The neutral element, if there is one.
  std::optional<Element> detect_identity() const;

  bool has_realization() const { return !realization_.empty(); }
  const std::vector<PartialBijection>& realization() const {
    return realization_;
  }
  std::optional<Element> find(const PartialBijection& f) const;

  // Re-runs the full axiom check of from_tables. O(n^3).
  void validate() const;

  const std::vector<Element>& mul_table() const { return mul_; }
  const std::vector<Element>& inv_table() const { return inv_; }

 protected:
  InverseSemigroup(std::size_t size, std::vector<Element> mul,
                   std::vector<Element> inv,
                   std::vector<PartialBijection> realization);

 private:
  std::size_t size_;
  std::vector<Element> mul_;
  std::vector<Element> inv_;
  std::vector<bool> idempotent_;
  std::vector<Element> idempotents_;
  std::vector<PartialBijection> realization_;
  std::unordered_map<PartialBijection, Element, PartialBijectionHash> lookup_;
};

// An inverse semigroup with a designated neutral element.
class InverseMonoid : public InverseSemigroup {
 public:
  static InverseMonoid from_tables(std::size_t size, std::vector<Element> mul,
                                   std::vector<Element> inv, Element one);
  // Fails unless `s` has a neutral element.
  static InverseMonoid from_semigroup(InverseSemigroup s);
  static InverseMonoid from_realization(std::vector<PartialBijection> maps);
  // Tables from a Cayley graph whose root (element 0) is the identity.
  static InverseMonoid from_cayley(const CayleyGraph& graph,
                                   const InvolutiveAlphabet& alphabet,
                                   std::vector<PartialBijection> realization);
  static InverseMonoid trivial();

  Element one() const { return one_; }
  bool is_unit(Element x) const { return mul(x, inv(x)) == one_; }
  bool is_group() const { return idempotents().size() == 1; }

 private:
  InverseMonoid(InverseSemigroup s, Element one)
      : InverseSemigroup(std::move(s)), one_(one) {}
  InverseMonoid(std::size_t size, std::vector<Element> mul,
                std::vector<Element> inv,
                std::vector<PartialBijection> realization, Element one)
      : InverseSemigroup(size, std::move(mul), std::move(inv),
                         std::move(realization)),
        one_(one) {}

  Element one_;
};

using SemigroupPtr = std::shared_ptr<const InverseSemigroup>;
using MonoidPtr = std::shared_ptr<const InverseMonoid>;

// A map between element tables. Whether it really is a homomorphism is a
// question for check_cover.
struct Homomorphism {
  SemigroupPtr source;
  SemigroupPtr target;
  std::vector<Element> map;

  Element operator()(Element x) const { return map[x]; }
};

// The inverse submonoid of I(carrier) generated by `gens`, with the identity
// of the carrier as element 0. An empty generator list gives {id}.
InverseMonoid close_generators(Carrier carrier,
                               std::span<const PartialBijection> gens,
                               std::size_t limit = 1u << 16);

bool natural_leq(const InverseSemigroup& s, Element x, Element y);
// Some z lies below both x and y.
bool sigma_related(const InverseSemigroup& s, Element x, Element y);
// Class index of each element under the transitive closure of
// sigma_related; classes are numbered by first occurrence.
std::vector<Element> sigma_classes(const InverseSemigroup& s);

struct SigmaQuotient {
  MonoidPtr group;
  Homomorphism projection;
};

// M / sigma together with the quotient map. Throws InternalError if the
// result is not a congruence with group quotient.
SigmaQuotient sigma_quotient(const MonoidPtr& m);

bool is_e_unitary(const InverseSemigroup& s);
// Every sigma class has a maximum. Throws Error if `s` has no identity.
bool is_f_inverse(const InverseSemigroup& s);

struct WagnerPreston {
  MonoidPtr image;
  Homomorphism embedding;
};

// Right regular representation: element a acts on the carrier |T| by
// x -> x a with domain T a a^-1. Element indices are preserved.
WagnerPreston wagner_preston(const MonoidPtr& t);

}  // namespace fcover
