#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "fcover/graph.hpp"
#include "fcover/inverse_monoid.hpp"

namespace fcover {

// Edges of a groupoid's shape graph labeled by elements of a finite group K
// with label(einv(e)) = label(e)^-1. The generated groupoid has elements
// (v, k, w), one for each walk v -> w whose labels multiply to k, and
// e^H = (src(e), label(e), tgt(e)).
struct GroupLabeling {
  MonoidPtr group;
  std::vector<Element> label;
};

// Throws Error unless `labeling` fits `shape` and respects the involution.
void check_labeling(const MultiDigraph& shape, const GroupLabeling& labeling);

// A finite I-groupoid: every element is a product of edge generators e^H.
// Elements are numbered breadth first from the identities id_0, id_1, ...
// (so id_v has index v) and each element keeps the walk it was first
// reached by. Composition reads left to right: x * y needs tgt(x) = src(y).
class Groupoid {
 public:
  static Groupoid from_group_labeling(MultiDigraph shape,
                                      GroupLabeling labeling,
                                      std::size_t limit = 1u << 16);

  const MultiDigraph& shape() const { return shape_; }
  std::size_t size() const { return src_.size(); }
  std::size_t num_objects() const { return shape_.num_vertices(); }

  Vertex src(Element x) const { return src_[x]; }
  Vertex tgt(Element x) const { return tgt_[x]; }
  Element identity(Vertex v) const { return v; }
  bool is_identity(Element x) const { return x < num_objects(); }
  Element edge_element(EdgeId e) const;
  Element inv(Element x) const { return inv_[x]; }
  // x * e^H; requires tgt(x) = src(e).
  Element right(Element x, EdgeId e) const {
    return right_[x][out_position_[e]];
  }
  // Throws Error if tgt(x) != src(y).
  Element compose(Element x, Element y) const;
  const std::vector<Element>& starting_at(Vertex v) const { return by_src_[v]; }

  // The walk through which x was first reached: witness(x) is the witness
  // of parent(x) followed by via(x). Identities have no parent.
  Walk witness(Element x) const;
  Element parent(Element x) const { return parent_[x]; }
  EdgeId via(Element x) const { return via_[x]; }

  const std::optional<GroupLabeling>& labeling() const { return labeling_; }
  // Group component of x for group-labeled groupoids.
  Element group_component(Element x) const { return component_.at(x); }

 private:
  Groupoid() = default;

  MultiDigraph shape_;
  std::vector<Vertex> src_, tgt_;
  std::vector<Element> parent_;
  std::vector<EdgeId> via_;
  std::vector<std::vector<Element>> right_;
  std::vector<std::size_t> out_position_;
  std::vector<Element> inv_;
  std::vector<std::vector<Element>> by_src_;
  std::vector<std::size_t> pos_in_src_;
  std::vector<std::size_t> row_offset_;
  std::vector<Element> table_;
  std::optional<GroupLabeling> labeling_;
  std::vector<Element> component_;
};

// u^H = e_1^H ... e_n^H; the empty walk at a gives id_a.
Element eval_walk(const Groupoid& h, const Walk& u);

// The map e^H -> phi(e)^H extended to all of H, if it is well defined.
// Well-definedness is checked generator by generator against the witness
// walks: Phi(x * e^H) = Phi(x) * phi(e)^H for every x and every e leaving
// tgt(x).
std::optional<std::vector<Element>> induced_automorphism(
    const Groupoid& h, const GraphSymmetry& phi);

// Every listed symmetry induces an automorphism.
bool is_symmetric(const Groupoid& h, std::span<const GraphSymmetry> symmetries);

// Involution-closed edge set, one bit per edge pair of the shape.
using EdgeSupport = boost::dynamic_bitset<std::uint64_t>;

EdgeSupport support_of(const MultiDigraph& g, const Walk& w);
// Expands a support into the edge ids it contains.
std::vector<EdgeId> support_edges(const MultiDigraph& g, const EdgeSupport& s);

// For each element, the inclusion-minimal supports of walks evaluating to
// it. Computed as a fixed point from the identities (empty support) under
// right multiplication by edges, keeping antichains.
std::vector<std::vector<EdgeSupport>> minimal_supports(const Groupoid& h);

// H(a) n H(b) = H(a n b) for all involution-closed a, b. Equivalently every
// element has exactly one minimal support.
bool is_2_acyclic(const Groupoid& h);

// A shortest walk evaluating to `target` that uses only edges in `allowed`,
// if one exists.
std::optional<Walk> walk_within(const Groupoid& h, Element target,
                                const EdgeSupport& allowed);

// p^G(h) = h * (tgt(h), p)^H, a permutation of the elements of H. Throws
// Error unless H's shape is `gaifman`'s graph, or if G exceeds `limit`.
PGeneratedGroup group_from_groupoid(const Groupoid& h,
                                    const GaifmanGraph& gaifman,
                                    std::size_t limit = 1u << 12);

}  // namespace fcover
