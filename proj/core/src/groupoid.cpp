#include "fcover/groupoid.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <string>
#include <unordered_map>

namespace fcover {
namespace {

constexpr unsigned kFieldBits = 21;
constexpr std::uint64_t kFieldMask = (std::uint64_t{1} << kFieldBits) - 1;

std::uint64_t pack(Vertex v, Element k, Vertex w) {
  return (static_cast<std::uint64_t>(v) << (2 * kFieldBits)) |
         (static_cast<std::uint64_t>(k) << kFieldBits) | w;
}

Element unpack_k(std::uint64_t key) {
  return static_cast<Element>((key >> kFieldBits) & kFieldMask);
}

// Inserts `s` into an antichain of minimal sets. Returns false if some
// member is already contained in `s`.
bool insert_minimal(std::vector<EdgeSupport>& antichain, const EdgeSupport& s) {
  for (const auto& a : antichain) {
    if (a.is_subset_of(s)) return false;
  }
  std::erase_if(antichain,
                [&](const EdgeSupport& a) { return s.is_subset_of(a); });
  antichain.push_back(s);
  return true;
}

// Runs the minimal-support fixed point, processing supports by size. With
// `stop_on_branching`, returns early (empty result) once an element is known
// to have two minimal supports.
std::optional<std::vector<std::vector<EdgeSupport>>> support_fixed_point(
    const Groupoid& h, bool stop_on_branching) {
  const auto& g = h.shape();
  const std::size_t pairs = g.num_edge_pairs();
  std::vector<std::vector<EdgeSupport>> antichains(h.size());
  std::vector<std::deque<std::pair<Element, EdgeSupport>>> buckets(pairs + 1);
  for (Vertex v = 0; v < h.num_objects(); ++v) {
    EdgeSupport empty(pairs);
    antichains[h.identity(v)].push_back(empty);
    buckets[0].emplace_back(h.identity(v), std::move(empty));
  }
  for (std::size_t k = 0; k <= pairs; ++k) {
    auto& bucket = buckets[k];
    while (!bucket.empty()) {
      auto [x, s] = std::move(bucket.front());
      bucket.pop_front();
      const auto& current = antichains[x];
      if (std::find(current.begin(), current.end(), s) == current.end()) {
        continue;  // dominated since it was queued
      }
      for (EdgeId e : g.out_edges(h.tgt(x))) {
        const Element y = h.right(x, e);
        EdgeSupport t = s;
        t.set(g.edge_pair()[e]);
        if (insert_minimal(antichains[y], t)) {
          const std::size_t c = t.count();
          buckets[c].emplace_back(y, std::move(t));
        }
      }
    }
    if (stop_on_branching) {
      // All supports of size <= k are final now, so two of them can no
      // longer be dominated by a common smaller one.
      for (const auto& a : antichains) {
        if (a.size() > 1) return std::nullopt;
      }
    }
  }
  return antichains;
}

}  // namespace

void check_labeling(const MultiDigraph& shape, const GroupLabeling& labeling) {
  if (!labeling.group || !labeling.group->is_group()) {
    throw Error("edge labels must come from a group");
  }
  if (labeling.label.size() != shape.num_edges()) {
    throw Error("expected one label per edge");
  }
  const auto& k = *labeling.group;
  for (EdgeId e = 0; e < shape.num_edges(); ++e) {
    if (labeling.label[e] >= k.size()) throw Error("label out of range");
    if (labeling.label[shape.einv(e)] != k.inv(labeling.label[e])) {
      throw Error("label of edge " + std::to_string(shape.einv(e)) +
                  " is not the inverse of the label of edge " +
                  std::to_string(e));
    }
  }
}

Groupoid Groupoid::from_group_labeling(MultiDigraph shape,
                                       GroupLabeling labeling,
                                       std::size_t limit) {
  check_labeling(shape, labeling);
  const auto& k = *labeling.group;
  if (shape.num_vertices() > kFieldMask || k.size() > kFieldMask) {
    throw Error("groupoid too large to index");
  }
  Groupoid h;
  h.shape_ = std::move(shape);
  const MultiDigraph& g = h.shape_;
  h.out_position_.assign(g.num_edges(), 0);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    const auto& out = g.out_edges(v);
    for (std::size_t i = 0; i < out.size(); ++i) h.out_position_[out[i]] = i;
  }

  std::vector<std::uint64_t> keys;
  std::unordered_map<std::uint64_t, Element> index;
  auto add = [&](std::uint64_t key, Vertex s, Vertex t, Element parent,
                 EdgeId via) {
    auto [it, inserted] = index.emplace(key, static_cast<Element>(keys.size()));
    if (inserted) {
      if (keys.size() >= limit) {
        throw Error("groupoid exceeded the limit of " + std::to_string(limit) +
                    " elements");
      }
      keys.push_back(key);
      h.src_.push_back(s);
      h.tgt_.push_back(t);
      h.parent_.push_back(parent);
      h.via_.push_back(via);
      h.component_.push_back(unpack_k(key));
    }
    return it->second;
  };
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    add(pack(v, k.one(), v), v, v, kNoElement, 0);
  }
  for (Element x = 0; x < keys.size(); ++x) {
    const Vertex s = h.src_[x];
    const Element kx = h.component_[x];
    std::vector<Element> row;
    for (EdgeId e : g.out_edges(h.tgt_[x])) {
      const Element ky = k.mul(kx, labeling.label[e]);
      row.push_back(add(pack(s, ky, g.tgt(e)), s, g.tgt(e), x, e));
    }
    h.right_.push_back(std::move(row));
  }

  const std::size_t n = keys.size();
  h.by_src_.assign(g.num_vertices(), {});
  h.pos_in_src_.assign(n, 0);
  std::vector<std::vector<Element>> by_tgt(g.num_vertices());
  for (Element x = 0; x < n; ++x) {
    h.pos_in_src_[x] = h.by_src_[h.src_[x]].size();
    h.by_src_[h.src_[x]].push_back(x);
    by_tgt[h.tgt_[x]].push_back(x);
  }
  h.row_offset_.assign(n, 0);
  std::size_t total = 0;
  for (Element x = 0; x < n; ++x) {
    h.row_offset_[x] = total;
    total += h.by_src_[h.tgt_[x]].size();
  }
  h.table_.assign(total, kNoElement);
  // Parents precede children, so x * parent(y) is known before x * y.
  for (Element y = 0; y < n; ++y) {
    const std::size_t col = h.pos_in_src_[y];
    for (Element x : by_tgt[h.src_[y]]) {
      Element v;
      if (h.parent_[y] == kNoElement) {
        v = x;
      } else {
        const Element xp =
            h.table_[h.row_offset_[x] + h.pos_in_src_[h.parent_[y]]];
        v = h.right(xp, h.via_[y]);
      }
      h.table_[h.row_offset_[x] + col] = v;
    }
  }
  h.inv_.assign(n, kNoElement);
  for (Element y = 0; y < n; ++y) {
    if (h.parent_[y] == kNoElement) {
      h.inv_[y] = y;
    } else {
      const EdgeId e = h.via_[y];
      h.inv_[y] = h.compose(h.edge_element(g.einv(e)), h.inv_[h.parent_[y]]);
    }
  }
  h.labeling_ = std::move(labeling);
  return h;
}

Element Groupoid::edge_element(EdgeId e) const {
  return right(identity(shape_.src(e)), e);
}

Element Groupoid::compose(Element x, Element y) const {
  if (tgt_[x] != src_[y]) {
    throw Error("cannot compose groupoid elements " + std::to_string(x) +
                " and " + std::to_string(y) + ": target and source differ");
  }
  return table_[row_offset_[x] + pos_in_src_[y]];
}

Walk Groupoid::witness(Element x) const {
  Walk w;
  while (parent_[x] != kNoElement) {
    w.edges.push_back(via_[x]);
    x = parent_[x];
  }
  w.start = src_[x];
  std::reverse(w.edges.begin(), w.edges.end());
  return w;
}

Element eval_walk(const Groupoid& h, const Walk& u) {
  check_walk(h.shape(), u);
  Element x = h.identity(u.start);
  for (EdgeId e : u.edges) x = h.right(x, e);
  return x;
}

std::optional<std::vector<Element>> induced_automorphism(
    const Groupoid& h, const GraphSymmetry& phi) {
  const auto& g = h.shape();
  if (!is_graph_symmetry(g, phi)) {
    throw Error("map is not a symmetry of the groupoid's shape");
  }
  std::vector<Element> image(h.size(), kNoElement);
  for (Vertex v = 0; v < h.num_objects(); ++v) {
    image[h.identity(v)] = h.identity(phi.vertex_map[v]);
  }
  // Parents precede children.
  for (Element y = static_cast<Element>(h.num_objects()); y < h.size(); ++y) {
    image[y] = h.right(image[h.parent(y)], phi.edge_map[h.via(y)]);
  }
  for (Element x = 0; x < h.size(); ++x) {
    for (EdgeId e : g.out_edges(h.tgt(x))) {
      if (image[h.right(x, e)] != h.right(image[x], phi.edge_map[e])) {
        return std::nullopt;
      }
    }
  }
  return image;
}

bool is_symmetric(const Groupoid& h,
                  std::span<const GraphSymmetry> symmetries) {
  return std::all_of(symmetries.begin(), symmetries.end(),
                     [&](const GraphSymmetry& phi) {
                       return induced_automorphism(h, phi).has_value();
                     });
}

EdgeSupport support_of(const MultiDigraph& g, const Walk& w) {
  EdgeSupport s(g.num_edge_pairs());
  for (EdgeId e : w.edges) s.set(g.edge_pair()[e]);
  return s;
}

std::vector<EdgeId> support_edges(const MultiDigraph& g,
                                  const EdgeSupport& s) {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (s.test(g.edge_pair()[e])) out.push_back(e);
  }
  return out;
}

std::vector<std::vector<EdgeSupport>> minimal_supports(const Groupoid& h) {
  return *support_fixed_point(h, false);
}

bool is_2_acyclic(const Groupoid& h) {
  return support_fixed_point(h, true).has_value();
}

std::optional<Walk> walk_within(const Groupoid& h, Element target,
                                const EdgeSupport& allowed) {
  const auto& g = h.shape();
  const Vertex start = h.src(target);
  std::vector<Element> parent(h.size(), kNoElement);
  std::vector<EdgeId> via(h.size(), 0);
  std::vector<bool> seen(h.size(), false);
  std::deque<Element> queue{h.identity(start)};
  seen[h.identity(start)] = true;
  while (!queue.empty()) {
    const Element x = queue.front();
    queue.pop_front();
    if (x == target) {
      Walk w{start, {}};
      for (Element y = x; y != h.identity(start); y = parent[y]) {
        w.edges.push_back(via[y]);
      }
      std::reverse(w.edges.begin(), w.edges.end());
      return w;
    }
    for (EdgeId e : g.out_edges(h.tgt(x))) {
      if (!allowed.test(g.edge_pair()[e])) continue;
      const Element y = h.right(x, e);
      if (!seen[y]) {
        seen[y] = true;
        parent[y] = x;
        via[y] = e;
        queue.push_back(y);
      }
    }
  }
  return std::nullopt;
}

PGeneratedGroup group_from_groupoid(const Groupoid& h,
                                    const GaifmanGraph& gaifman,
                                    std::size_t limit) {
  const auto& g = h.shape();
  const auto& shape = gaifman.graph;
  bool same = g.num_vertices() == shape.num_vertices() &&
              g.num_edges() == shape.num_edges();
  for (EdgeId e = 0; same && e < g.num_edges(); ++e) {
    same = g.src(e) == shape.src(e) && g.tgt(e) == shape.tgt(e) &&
           g.einv(e) == shape.einv(e);
  }
  if (!same) throw Error("groupoid is not over the given Gaifman graph");
  std::vector<Permutation> perms;
  for (Letter p = 0; p < gaifman.alphabet.size(); ++p) {
    std::vector<Point> images(h.size());
    for (Element x = 0; x < h.size(); ++x) {
      images[x] = h.right(x, gaifman.edge(h.tgt(x), p));
    }
    perms.emplace_back(PartialBijection(Carrier{h.size()}, std::move(images)));
  }
  return PGeneratedGroup::from_permutations(gaifman.alphabet, perms, limit);
}

}  // namespace fcover
