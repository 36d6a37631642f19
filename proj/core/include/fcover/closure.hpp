#pragma once

#include <cstddef>
#include <deque>
#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

#include "fcover/alphabet.hpp"
#include "fcover/types.hpp"

namespace fcover {

// Right Cayley graph of a monoid generated by letters, as discovered by a
// breadth-first search from the identity. Element 0 is the identity and
// parent/via describe the BFS tree, so witness(x) is the shortlex least word
// evaluating to x.
struct CayleyGraph {
  std::vector<Element> parent;  // kNoElement at the root
  std::vector<Letter> via;
  std::vector<std::vector<Element>> right;  // right[x][p] = x * p

  std::size_t size() const { return parent.size(); }
  Word witness(Element x) const;
};

// Dense multiplication and inverse tables of an inverse monoid.
struct MonoidTables {
  std::size_t size = 0;
  std::vector<Element> mul;  // row-major, mul[x * size + y] = x * y
  std::vector<Element> inv;
};

// Derives full tables from the Cayley graph in O(n^2): x * (w p) is
// (x * w) * p, processed in BFS order. `alphabet` supplies the letter
// involution used to build inverses.
MonoidTables tables_from_cayley(const CayleyGraph& graph,
                                const InvolutiveAlphabet& alphabet);

template <class Key>
struct ClosureResult {
  std::vector<Key> elements;
  CayleyGraph graph;
};

// Breadth-first closure of {one} under right multiplication by the letter
// values. `mul(a, b)` must be associative with `one` neutral. Throws Error
// once more than `limit` elements are found.
template <class Key, class Hash = std::hash<Key>, class Mul>
ClosureResult<Key> bfs_closure(const Key& one, const std::vector<Key>& letters,
                               Mul&& mul, std::size_t limit) {
  ClosureResult<Key> out;
  std::unordered_map<Key, Element, Hash> index;
  auto add = [&](Key key, Element parent, Letter via) -> Element {
    auto [it, inserted] =
        index.emplace(std::move(key), static_cast<Element>(out.elements.size()));
    if (inserted) {
      if (out.elements.size() >= limit) {
        throw Error("closure exceeded the limit of " + std::to_string(limit) +
                    " elements");
      }
      out.elements.push_back(it->first);
      out.graph.parent.push_back(parent);
      out.graph.via.push_back(via);
      out.graph.right.emplace_back();
    }
    return it->second;
  };
  add(one, kNoElement, 0);
  for (Element x = 0; x < out.elements.size(); ++x) {
    std::vector<Element> row(letters.size());
    for (Letter p = 0; p < letters.size(); ++p) {
      Key y = mul(out.elements[x], letters[p]);
      row[p] = add(std::move(y), x, p);
    }
    out.graph.right[x] = std::move(row);
  }
  return out;
}

}  // namespace fcover
