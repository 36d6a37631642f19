#include "fcover/closure.hpp"

#include <algorithm>

namespace fcover {

Word CayleyGraph::witness(Element x) const {
  Word w;
  while (parent[x] != kNoElement) {
    w.push_back(via[x]);
    x = parent[x];
  }
  std::reverse(w.begin(), w.end());
  return w;
}

MonoidTables tables_from_cayley(const CayleyGraph& graph,
                                const InvolutiveAlphabet& alphabet) {
  const std::size_t n = graph.size();
  MonoidTables t;
  t.size = n;
  t.mul.assign(n * n, kNoElement);
  for (Element x = 0; x < n; ++x) t.mul[x * n] = x;
  // BFS order guarantees parent[y] < y.
  for (Element y = 1; y < n; ++y) {
    const Element py = graph.parent[y];
    const Letter p = graph.via[y];
    for (Element x = 0; x < n; ++x) {
      t.mul[x * n + y] = graph.right[t.mul[x * n + py]][p];
    }
  }
  t.inv.assign(n, kNoElement);
  t.inv[0] = 0;
  for (Element y = 1; y < n; ++y) {
    const Element q = graph.right[0][alphabet.inverse(graph.via[y])];
    t.inv[y] = t.mul[q * n + t.inv[graph.parent[y]]];
  }
  return t;
}

}  // namespace fcover
