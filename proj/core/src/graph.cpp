#include "fcover/graph.hpp"

#include <string>

namespace fcover {

MultiDigraph::MultiDigraph(std::size_t vertices, std::vector<Vertex> src,
                           std::vector<Vertex> tgt, std::vector<EdgeId> einv)
    : vertices_(vertices),
      src_(std::move(src)),
      tgt_(std::move(tgt)),
      einv_(std::move(einv)),
      out_(vertices) {
  const std::size_t m = src_.size();
  if (tgt_.size() != m || einv_.size() != m) {
    throw Error("edge arrays differ in length");
  }
  for (EdgeId e = 0; e < m; ++e) {
    const std::string name = "edge " + std::to_string(e);
    if (src_[e] >= vertices_ || tgt_[e] >= vertices_) {
      throw Error(name + " has an endpoint outside the vertex set");
    }
    if (einv_[e] >= m || einv_[einv_[e]] != e) {
      throw Error(name + ": edge inverse is not an involution");
    }
    if (src_[einv_[e]] != tgt_[e] || tgt_[einv_[e]] != src_[e]) {
      throw Error(name + ": inverse edge does not reverse the endpoints");
    }
    out_[src_[e]].push_back(e);
  }
  pair_.assign(m, 0);
  for (EdgeId e = 0; e < m; ++e) {
    if (einv_[e] >= e) {
      pair_[e] = num_pairs_;
      pair_[einv_[e]] = num_pairs_;
      ++num_pairs_;
    }
  }
}

Vertex walk_source(const Walk& w) { return w.start; }

Vertex walk_target(const MultiDigraph& g, const Walk& w) {
  return w.edges.empty() ? w.start : g.tgt(w.edges.back());
}

void check_walk(const MultiDigraph& g, const Walk& w) {
  if (w.start >= g.num_vertices()) throw Error("walk starts outside graph");
  Vertex at = w.start;
  for (std::size_t i = 0; i < w.edges.size(); ++i) {
    const EdgeId e = w.edges[i];
    if (e >= g.num_edges()) throw Error("walk uses an unknown edge");
    if (g.src(e) != at) {
      throw Error("walk breaks at position " + std::to_string(i));
    }
    at = g.tgt(e);
  }
}

Walk walk_inverse(const MultiDigraph& g, const Walk& w) {
  Walk out{walk_target(g, w), {}};
  for (auto it = w.edges.rbegin(); it != w.edges.rend(); ++it) {
    out.edges.push_back(g.einv(*it));
  }
  return out;
}

Walk concat(const MultiDigraph& g, const Walk& a, const Walk& b) {
  if (walk_target(g, a) != b.start) throw Error("walks do not chain");
  Walk out = a;
  out.edges.insert(out.edges.end(), b.edges.begin(), b.edges.end());
  return out;
}

Word LabeledGraph::project(const Walk& w) const {
  Word out;
  out.reserve(w.edges.size());
  for (EdgeId e : w.edges) out.push_back(label[e]);
  return out;
}

Walk LabeledGraph::lift(const Word& a, Vertex start) const {
  check_word(alphabet, a);
  Walk w{start, {}};
  Vertex at = start;
  for (Letter p : a) {
    std::optional<EdgeId> found;
    for (EdgeId e : graph.out_edges(at)) {
      if (label[e] != p) continue;
      if (found) {
        throw Error("vertex " + std::to_string(at) +
                    " has two edges labeled " + alphabet.name(p));
      }
      found = e;
    }
    if (!found) {
      throw Error("vertex " + std::to_string(at) + " has no edge labeled " +
                  alphabet.name(p));
    }
    w.edges.push_back(*found);
    at = graph.tgt(*found);
  }
  return w;
}

Word project_walk(const LabeledGraph& g, const Walk& w) { return g.project(w); }

Walk lift_word(const LabeledGraph& g, const Word& a, Vertex start) {
  return g.lift(a, start);
}

GaifmanGraph gaifman_graph(const PGeneratedGroup& f) {
  const auto& grp = *f.monoid();
  const std::size_t np = f.alphabet().size();
  const std::size_t n = grp.size();
  std::vector<Vertex> src, tgt;
  std::vector<EdgeId> einv;
  std::vector<Letter> label;
  for (Element v = 0; v < n; ++v) {
    for (Letter p = 0; p < np; ++p) {
      const Element w = grp.mul(v, f.gen(p));
      src.push_back(v);
      tgt.push_back(w);
      einv.push_back(static_cast<EdgeId>(w * np + f.alphabet().inverse(p)));
      label.push_back(p);
    }
  }
  GaifmanGraph g{
      LabeledGraph{MultiDigraph(n, std::move(src), std::move(tgt),
                                std::move(einv)),
                   f.alphabet(), std::move(label)},
      f};
  return g;
}

Walk GraphSymmetry::apply(const Walk& w) const {
  Walk out{vertex_map[w.start], {}};
  out.edges.reserve(w.edges.size());
  for (EdgeId e : w.edges) out.edges.push_back(edge_map[e]);
  return out;
}

bool is_graph_symmetry(const MultiDigraph& g, const GraphSymmetry& phi) {
  if (phi.vertex_map.size() != g.num_vertices() ||
      phi.edge_map.size() != g.num_edges()) {
    return false;
  }
  std::vector<bool> vhit(g.num_vertices(), false);
  for (Vertex v : phi.vertex_map) {
    if (v >= g.num_vertices() || vhit[v]) return false;
    vhit[v] = true;
  }
  std::vector<bool> ehit(g.num_edges(), false);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const EdgeId fe = phi.edge_map[e];
    if (fe >= g.num_edges() || ehit[fe]) return false;
    ehit[fe] = true;
    if (g.src(fe) != phi.vertex_map[g.src(e)] ||
        g.tgt(fe) != phi.vertex_map[g.tgt(e)] ||
        phi.edge_map[g.einv(e)] != g.einv(fe)) {
      return false;
    }
  }
  return true;
}

GraphSymmetry identity_symmetry(const MultiDigraph& g) {
  GraphSymmetry id;
  for (Vertex v = 0; v < g.num_vertices(); ++v) id.vertex_map.push_back(v);
  for (EdgeId e = 0; e < g.num_edges(); ++e) id.edge_map.push_back(e);
  return id;
}

GraphSymmetry compose(const GraphSymmetry& a, const GraphSymmetry& b) {
  GraphSymmetry out;
  for (Vertex v : a.vertex_map) out.vertex_map.push_back(b.vertex_map[v]);
  for (EdgeId e : a.edge_map) out.edge_map.push_back(b.edge_map[e]);
  return out;
}

GraphSymmetry translation_symmetry(const GaifmanGraph& g, Element f) {
  const auto& grp = *g.group.monoid();
  const std::size_t np = g.alphabet.size();
  GraphSymmetry phi;
  for (Element v = 0; v < grp.size(); ++v) {
    phi.vertex_map.push_back(grp.mul(f, v));
  }
  for (Element v = 0; v < grp.size(); ++v) {
    for (Letter p = 0; p < np; ++p) {
      phi.edge_map.push_back(g.edge(grp.mul(f, v), p));
    }
  }
  return phi;
}

std::vector<GraphSymmetry> translation_symmetries(const GaifmanGraph& g) {
  std::vector<GraphSymmetry> out;
  for (Element f = 0; f < g.group.size(); ++f) {
    out.push_back(translation_symmetry(g, f));
  }
  return out;
}

}  // namespace fcover
