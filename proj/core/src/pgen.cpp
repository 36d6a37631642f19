#include "fcover/pgen.hpp"

#include <algorithm>
#include <cstdint>

namespace fcover {
namespace {

void require_same_alphabet(const PGeneratedMonoid& a,
                           const PGeneratedMonoid& b) {
  if (!(a.alphabet() == b.alphabet())) {
    throw Error("P-generated structures use different alphabets (" +
                std::to_string(a.alphabet().size()) + " vs " +
                std::to_string(b.alphabet().size()) + " letters)");
  }
}

}  // namespace

PGeneratedMonoid::PGeneratedMonoid(InvolutiveAlphabet alphabet,
                                   MonoidPtr monoid, std::vector<Element> gens)
    : alphabet_(std::move(alphabet)),
      monoid_(std::move(monoid)),
      gens_(std::move(gens)) {
  check_involution();
  auto closure = bfs_closure<Element>(
      monoid_->one(), gens_,
      [this](Element x, Element y) { return monoid_->mul(x, y); },
      monoid_->size());
  if (closure.elements.size() != monoid_->size()) {
    throw Error("generators reach only " +
                std::to_string(closure.elements.size()) + " of " +
                std::to_string(monoid_->size()) + " elements");
  }
  const auto& nodes = closure.elements;
  witness_parent_.assign(nodes.size(), kNoElement);
  witness_via_.assign(nodes.size(), 0);
  for (Element i = 1; i < nodes.size(); ++i) {
    witness_parent_[nodes[i]] = nodes[closure.graph.parent[i]];
    witness_via_[nodes[i]] = closure.graph.via[i];
  }
}

PGeneratedMonoid PGeneratedMonoid::from_closure(InvolutiveAlphabet alphabet,
                                                MonoidPtr monoid,
                                                std::vector<Element> gens,
                                                const CayleyGraph& cayley) {
  PGeneratedMonoid out;
  out.alphabet_ = std::move(alphabet);
  out.monoid_ = std::move(monoid);
  out.gens_ = std::move(gens);
  out.check_involution();
  out.witness_parent_ = cayley.parent;
  out.witness_via_ = cayley.via;
  return out;
}

void PGeneratedMonoid::check_involution() const {
  if (gens_.size() != alphabet_.size()) {
    throw Error("expected one generator per letter");
  }
  for (Letter p = 0; p < alphabet_.size(); ++p) {
    if (gens_[p] >= monoid_->size()) throw Error("generator out of range");
    if (monoid_->inv(gens_[p]) != gens_[alphabet_.inverse(p)]) {
      throw Error("generator of letter " + alphabet_.name(p) +
                  " is not inverse to the generator of " +
                  alphabet_.name(alphabet_.inverse(p)));
    }
  }
}

PGeneratedMonoid PGeneratedMonoid::from_generators(
    Carrier carrier, std::span<const PartialBijection> gens,
    std::vector<std::string> names) {
  std::vector<PartialBijection> letter_maps;
  std::vector<Letter> inverse;
  std::vector<std::string> letter_names;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const std::string name =
        i < names.size() ? names[i] : "g" + std::to_string(i);
    const auto p = static_cast<Letter>(letter_maps.size());
    PartialBijection gi = invert(gens[i]);
    letter_maps.push_back(gens[i]);
    letter_names.push_back(name);
    if (gi == gens[i]) {
      inverse.push_back(p);
    } else {
      letter_maps.push_back(std::move(gi));
      letter_names.push_back(name + "^-1");
      inverse.push_back(p + 1);
      inverse.push_back(p);
    }
  }
  return from_letter_maps(
      InvolutiveAlphabet(std::move(inverse), std::move(letter_names)), carrier,
      letter_maps);
}

PGeneratedMonoid PGeneratedMonoid::from_letter_maps(
    InvolutiveAlphabet alphabet, Carrier carrier,
    std::span<const PartialBijection> letter_maps, std::size_t limit) {
  if (letter_maps.size() != alphabet.size()) {
    throw Error("expected one map per letter");
  }
  std::vector<PartialBijection> letters(letter_maps.begin(), letter_maps.end());
  for (Letter p = 0; p < letters.size(); ++p) {
    if (letters[p].carrier() != carrier) {
      throw Error("generator " + alphabet.name(p) + " has the wrong carrier");
    }
    if (invert(letters[p]) != letters[alphabet.inverse(p)]) {
      throw Error("generator " + alphabet.name(p) +
                  " is not inverse to its partner " +
                  alphabet.name(alphabet.inverse(p)));
    }
  }
  auto closure = bfs_closure<PartialBijection, PartialBijectionHash>(
      PartialBijection::identity(carrier), letters,
      [](const PartialBijection& a, const PartialBijection& b) {
        return compose(a, b);
      },
      limit);
  auto monoid = std::make_shared<InverseMonoid>(InverseMonoid::from_cayley(
      closure.graph, alphabet, std::move(closure.elements)));
  std::vector<Element> gens(alphabet.size());
  for (Letter p = 0; p < alphabet.size(); ++p) {
    gens[p] = closure.graph.right[0][p];
  }
  return from_closure(std::move(alphabet), std::move(monoid), std::move(gens),
                      closure.graph);
}

Word PGeneratedMonoid::witness(Element x) const {
  Word w;
  while (witness_parent_[x] != kNoElement) {
    w.push_back(witness_via_[x]);
    x = witness_parent_[x];
  }
  std::reverse(w.begin(), w.end());
  return w;
}

PGeneratedGroup::PGeneratedGroup(InvolutiveAlphabet alphabet, MonoidPtr group,
                                 std::vector<Element> gens)
    : PGeneratedGroup(PGeneratedMonoid(std::move(alphabet), std::move(group),
                                       std::move(gens))) {}

PGeneratedGroup::PGeneratedGroup(PGeneratedMonoid m)
    : PGeneratedMonoid(std::move(m)) {
  if (!monoid()->is_group()) {
    throw Error("P-generated group has non-unit elements");
  }
}

PGeneratedGroup PGeneratedGroup::from_permutations(
    InvolutiveAlphabet alphabet, std::span<const Permutation> letter_perms,
    std::size_t limit) {
  if (letter_perms.empty()) return trivial(std::move(alphabet));
  std::vector<PartialBijection> maps;
  for (const auto& perm : letter_perms) maps.push_back(perm.as_partial());
  const Carrier carrier = maps.front().carrier();
  return PGeneratedGroup(PGeneratedMonoid::from_letter_maps(
      std::move(alphabet), carrier, maps, limit));
}

PGeneratedGroup PGeneratedGroup::trivial(InvolutiveAlphabet alphabet) {
  auto m = std::make_shared<InverseMonoid>(InverseMonoid::trivial());
  std::vector<Element> gens(alphabet.size(), 0);
  return PGeneratedGroup(std::move(alphabet), m, std::move(gens));
}

Element eval_word(const PGeneratedMonoid& m, const Word& u) {
  check_word(m.alphabet(), u);
  Element x = m.monoid()->one();
  for (Letter p : u) x = m.monoid()->mul(x, m.gen(p));
  return x;
}

ProductMonoid p_product(const PGeneratedMonoid& m, const PGeneratedGroup& g,
                        std::size_t limit) {
  require_same_alphabet(m, g);
  const auto& mm = *m.monoid();
  const auto& gg = *g.monoid();
  auto pack = [](Element a, Element b) {
    return (static_cast<std::uint64_t>(a) << 32) | b;
  };
  std::vector<std::uint64_t> letters;
  for (Letter p = 0; p < m.alphabet().size(); ++p) {
    letters.push_back(pack(m.gen(p), g.gen(p)));
  }
  auto closure = bfs_closure<std::uint64_t>(
      pack(mm.one(), gg.one()), letters,
      [&](std::uint64_t x, std::uint64_t y) {
        return pack(mm.mul(static_cast<Element>(x >> 32),
                           static_cast<Element>(y >> 32)),
                    gg.mul(static_cast<Element>(x), static_cast<Element>(y)));
      },
      limit);
  auto monoid = std::make_shared<InverseMonoid>(
      InverseMonoid::from_cayley(closure.graph, m.alphabet(), {}));
  std::vector<Element> gens(letters.size());
  for (Letter p = 0; p < letters.size(); ++p) {
    gens[p] = closure.graph.right[0][p];
  }
  std::vector<std::pair<Element, Element>> components;
  components.reserve(closure.elements.size());
  for (std::uint64_t key : closure.elements) {
    components.emplace_back(static_cast<Element>(key >> 32),
                            static_cast<Element>(key));
  }
  ProductMonoid out{PGeneratedMonoid::from_closure(m.alphabet(), monoid,
                                                   std::move(gens),
                                                   closure.graph),
                    m, g, std::move(components)};
  if (!product_characterizations_hold(out)) {
    throw InternalError("product order/idempotent characterization fails");
  }
  return out;
}

bool product_characterizations_hold(const ProductMonoid& n) {
  const auto& nn = *n.structure.monoid();
  const auto& mm = *n.left.monoid();
  const Element one = n.right.one();
  for (Element x = 0; x < n.size(); ++x) {
    const bool idem = mm.is_idempotent(n.m(x)) && n.g(x) == one;
    if (nn.is_idempotent(x) != idem) return false;
    for (Element y = 0; y < n.size(); ++y) {
      const bool below = mm.leq(n.m(x), n.m(y)) && n.g(x) == n.g(y);
      if (nn.leq(x, y) != below) return false;
    }
  }
  return true;
}

Homomorphism projection_cover(const ProductMonoid& n) {
  std::vector<Element> map;
  map.reserve(n.size());
  for (const auto& c : n.components) map.push_back(c.first);
  return Homomorphism{n.structure.monoid(), n.left.monoid(), std::move(map)};
}

CoverReport check_cover(const Homomorphism& theta) {
  const auto& src = *theta.source;
  const auto& tgt = *theta.target;
  if (theta.map.size() != src.size()) {
    throw Error("homomorphism map has the wrong length");
  }
  CoverReport r;
  std::vector<bool> hit(tgt.size(), false);
  for (Element y : theta.map) {
    if (y >= tgt.size()) throw Error("homomorphism maps outside its target");
    hit[y] = true;
  }
  r.surjective = std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
  std::vector<Element> seen(tgt.size(), kNoElement);
  r.idempotent_separating = true;
  for (Element e : src.idempotents()) {
    Element& slot = seen[theta(e)];
    if (slot != kNoElement) r.idempotent_separating = false;
    slot = e;
  }
  r.homomorphic = true;
  for (Element x = 0; x < src.size() && r.homomorphic; ++x) {
    for (Element y = 0; y < src.size(); ++y) {
      if (theta(src.mul(x, y)) != tgt.mul(theta(x), theta(y))) {
        r.homomorphic = false;
        break;
      }
    }
  }
  return r;
}

bool is_compatible(const ProductMonoid& n) {
  const auto& mm = *n.left.monoid();
  const Element one = n.right.one();
  for (const auto& [m, g] : n.components) {
    if (g == one && !mm.is_idempotent(m)) return false;
  }
  return true;
}

bool is_compatible(const PGeneratedGroup& g, const PGeneratedMonoid& m) {
  return is_compatible(p_product(m, g));
}

bool is_strongly_compatible(const ProductMonoid& n) {
  const auto& mm = *n.left.monoid();
  std::vector<std::vector<Element>> fibers(n.right.size());
  for (const auto& [m, g] : n.components) fibers[g].push_back(m);
  // A finite set in which any two elements have an upper bound inside the
  // set has a greatest element, and conversely.
  for (const auto& fiber : fibers) {
    if (fiber.empty()) continue;
    Element top = fiber.front();
    for (Element x : fiber) {
      if (mm.leq(top, x)) top = x;
    }
    for (Element x : fiber) {
      if (!mm.leq(x, top)) return false;
    }
  }
  return true;
}

bool is_strongly_compatible(const PGeneratedGroup& g,
                            const PGeneratedMonoid& m) {
  return is_strongly_compatible(p_product(m, g));
}

PGeneratedGroup build_compatible_group(const PGeneratedMonoid& m) {
  MonoidPtr concrete = m.monoid();
  if (!concrete->has_realization()) {
    concrete = wagner_preston(concrete).image;
  }
  std::vector<Permutation> perms;
  for (Letter p = 0; p < m.alphabet().size(); ++p) {
    perms.push_back(
        complete_to_permutation(concrete->realization()[m.gen(p)]));
  }
  if (perms.empty()) return PGeneratedGroup::trivial(m.alphabet());
  return PGeneratedGroup::from_permutations(m.alphabet(), perms);
}

FreeGroupWord free_reduce(const InvolutiveAlphabet& alphabet, const Word& u) {
  check_word(alphabet, u);
  Word stack;
  for (Letter p : u) {
    if (!stack.empty() && stack.back() == alphabet.inverse(p)) {
      stack.pop_back();
    } else {
      stack.push_back(p);
    }
  }
  return FreeGroupWord{std::move(stack)};
}

}  // namespace fcover
