#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fcover/alphabet.hpp"
#include "fcover/inverse_monoid.hpp"

namespace fcover {

// An inverse monoid together with generators p^M indexed by an involutive
// alphabet P, satisfying (p^M)^-1 = (p^-1)^M. Copies share the monoid.
class PGeneratedMonoid {
 public:
  // Throws Error unless the generators respect the involution and generate
  // the whole monoid.
  PGeneratedMonoid(InvolutiveAlphabet alphabet, MonoidPtr monoid,
                   std::vector<Element> gens);

  // One letter per generator, plus a partner letter for every generator
  // that is not its own inverse. The monoid is the closure.
  static PGeneratedMonoid from_generators(
      Carrier carrier, std::span<const PartialBijection> gens,
      std::vector<std::string> names = {});
  // letter_maps[p] is p^M; the alphabet must already pair the letters.
  static PGeneratedMonoid from_letter_maps(
      InvolutiveAlphabet alphabet, Carrier carrier,
      std::span<const PartialBijection> letter_maps,
      std::size_t limit = 1u << 16);

  const InvolutiveAlphabet& alphabet() const { return alphabet_; }
  const MonoidPtr& monoid() const { return monoid_; }
  std::size_t size() const { return monoid_->size(); }
  Element gen(Letter p) const { return gens_.at(p); }
  const std::vector<Element>& gens() const { return gens_; }

  // Shortlex least word evaluating to x.
  Word witness(Element x) const;

  // Skips the generation check: `cayley` must be the breadth-first closure
  // of the identity under `gens`, with node i being element i.
  static PGeneratedMonoid from_closure(InvolutiveAlphabet alphabet,
                                       MonoidPtr monoid,
                                       std::vector<Element> gens,
                                       const CayleyGraph& cayley);

 private:
  PGeneratedMonoid() = default;
  void check_involution() const;

  InvolutiveAlphabet alphabet_;
  MonoidPtr monoid_;
  std::vector<Element> gens_;
  std::vector<Element> witness_parent_;
  std::vector<Letter> witness_via_;
};

// A P-generated monoid in which every element is a unit.
class PGeneratedGroup : public PGeneratedMonoid {
 public:
  PGeneratedGroup(InvolutiveAlphabet alphabet, MonoidPtr group,
                  std::vector<Element> gens);
  explicit PGeneratedGroup(PGeneratedMonoid m);

  // Permutation group generated by letter_perms[p] = p^G.
  static PGeneratedGroup from_permutations(
      InvolutiveAlphabet alphabet, std::span<const Permutation> letter_perms,
      std::size_t limit = 1u << 16);
  static PGeneratedGroup trivial(InvolutiveAlphabet alphabet);

  Element one() const { return monoid()->one(); }
};

// u^M = p_1^M ... p_n^M; the empty word gives 1.
Element eval_word(const PGeneratedMonoid& m, const Word& u);

// M x_P G: the submonoid of M x G generated by the pairs (p^M, p^G).
struct ProductMonoid {
  PGeneratedMonoid structure;
  PGeneratedMonoid left;
  PGeneratedGroup right;
  std::vector<std::pair<Element, Element>> components;  // (m, g)

  std::size_t size() const { return components.size(); }
  Element m(Element x) const { return components[x].first; }
  Element g(Element x) const { return components[x].second; }
};

// Throws Error if the alphabets differ or the product exceeds `limit`.
// Throws InternalError if the order and idempotent characterizations of the
// product fail.
ProductMonoid p_product(const PGeneratedMonoid& m, const PGeneratedGroup& g,
                        std::size_t limit = 1u << 15);

// (m1,g1) <= (m2,g2) iff m1 <= m2 and g1 = g2, and (m,g) is idempotent iff
// m is idempotent and g = 1, checked for every element pair.
bool product_characterizations_hold(const ProductMonoid& n);

// Projection onto the first component.
Homomorphism projection_cover(const ProductMonoid& n);

struct CoverReport {
  bool surjective = false;
  bool idempotent_separating = false;
  bool homomorphic = false;

  bool ok() const { return surjective && idempotent_separating && homomorphic; }
  friend bool operator==(CoverReport, CoverReport) = default;
};

CoverReport check_cover(const Homomorphism& theta);

// u^G = 1 implies u^M <= 1, decided on the elements of M x_P G.
bool is_compatible(const PGeneratedGroup& g, const PGeneratedMonoid& m);
bool is_compatible(const ProductMonoid& n);

// u^G = w^G implies u^M, w^M <= v^M for some v with v^G = u^G. Decided on
// M x_P G: every fiber {m : (m, g) in M x_P G} has a greatest element.
bool is_strongly_compatible(const PGeneratedGroup& g,
                            const PGeneratedMonoid& m);
bool is_strongly_compatible(const ProductMonoid& n);

// p^G = complete_to_permutation(p^M) on a concrete realization of M (the
// Wagner-Preston one if M has none) and G the generated permutation group.
PGeneratedGroup build_compatible_group(const PGeneratedMonoid& m);

// Reduced form in the free group over P: no factor p p^-1.
struct FreeGroupWord {
  Word letters;
  friend bool operator==(const FreeGroupWord&, const FreeGroupWord&) = default;
};

FreeGroupWord free_reduce(const InvolutiveAlphabet& alphabet, const Word& u);

}  // namespace fcover
