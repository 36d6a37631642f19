#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "fcover/pgen.hpp"
#include "fcover/types.hpp"

namespace fcover {

// Multidigraph with an involution on edges: src(einv(e)) = tgt(e) and
// tgt(einv(e)) = src(e). An edge may be its own inverse only if it is a
// loop.
class MultiDigraph {
 public:
  MultiDigraph() = default;
  // Throws Error if the involution or endpoints are inconsistent.
  MultiDigraph(std::size_t vertices, std::vector<Vertex> src,
               std::vector<Vertex> tgt, std::vector<EdgeId> einv);

  std::size_t num_vertices() const { return vertices_; }
  std::size_t num_edges() const { return src_.size(); }
  Vertex src(EdgeId e) const { return src_[e]; }
  Vertex tgt(EdgeId e) const { return tgt_[e]; }
  EdgeId einv(EdgeId e) const { return einv_[e]; }
  const std::vector<EdgeId>& out_edges(Vertex v) const { return out_[v]; }

  // Index of the {e, einv(e)} orbit of each edge; orbits are numbered by
  // their least edge.
  const std::vector<std::size_t>& edge_pair() const { return pair_; }
  std::size_t num_edge_pairs() const { return num_pairs_; }

 private:
  std::size_t vertices_ = 0;
  std::vector<Vertex> src_, tgt_;
  std::vector<EdgeId> einv_;
  std::vector<std::vector<EdgeId>> out_;
  std::vector<std::size_t> pair_;
  std::size_t num_pairs_ = 0;
};

// A walk e_1 ... e_n with tgt(e_i) = src(e_{i+1}); `start` fixes the vertex
// of the empty walk.
struct Walk {
  Vertex start = 0;
  std::vector<EdgeId> edges;

  friend bool operator==(const Walk&, const Walk&) = default;
};

Vertex walk_source(const Walk& w);
Vertex walk_target(const MultiDigraph& g, const Walk& w);
// Throws Error unless consecutive edges chain.
void check_walk(const MultiDigraph& g, const Walk& w);
Walk walk_inverse(const MultiDigraph& g, const Walk& w);
Walk concat(const MultiDigraph& g, const Walk& a, const Walk& b);

// A multidigraph whose edges carry letters of an involutive alphabet with
// label(einv(e)) = inverse(label(e)).
struct LabeledGraph {
  MultiDigraph graph;
  InvolutiveAlphabet alphabet;
  std::vector<Letter> label;

  Word project(const Walk& w) const;
  // The unique walk from `start` projecting to `a`. Throws Error if some
  // vertex on the way lacks a unique edge with the needed label.
  Walk lift(const Word& a, Vertex start) const;
};

// Gaifman graph of F: vertices are the elements of F, edge (f, p) runs from
// f to f p^F, and (f, p)^-1 = (f p^F, p^-1). Edge (f, p) has index
// f * |P| + p.
struct GaifmanGraph : LabeledGraph {
  PGeneratedGroup group;

  EdgeId edge(Element f, Letter p) const {
    return static_cast<EdgeId>(f * alphabet.size() + p);
  }
};

GaifmanGraph gaifman_graph(const PGeneratedGroup& f);

Word project_walk(const LabeledGraph& g, const Walk& w);
Walk lift_word(const LabeledGraph& g, const Word& a, Vertex start);

// A two-sorted map of a multidigraph that commutes with endpoints and the
// edge involution.
struct GraphSymmetry {
  std::vector<Vertex> vertex_map;
  std::vector<EdgeId> edge_map;

  Walk apply(const Walk& w) const;
  friend bool operator==(const GraphSymmetry&,
                         const GraphSymmetry&) = default;
};

// True iff `phi` is a bijective symmetry of `g`.
bool is_graph_symmetry(const MultiDigraph& g, const GraphSymmetry& phi);
GraphSymmetry identity_symmetry(const MultiDigraph& g);
// (a then b)(x) = b(a(x)).
GraphSymmetry compose(const GraphSymmetry& a, const GraphSymmetry& b);

// phi_f(f') = f f' and phi_f((f', p)) = (f f', p).
GraphSymmetry translation_symmetry(const GaifmanGraph& g, Element f);
std::vector<GraphSymmetry> translation_symmetries(const GaifmanGraph& g);

}  // namespace fcover
