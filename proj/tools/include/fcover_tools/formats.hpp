#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fcover/graph.hpp"
#include "fcover/groupoid.hpp"
#include "fcover/pgen.hpp"

// Line-oriented text formats. Every file starts with `format=1`; `#` starts
// a comment. Parse failures throw ParseError carrying the 1-based line.
namespace fcover::io {

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Monoid spec, concrete form:
//   carrier 3
//   gen a: 0->1, 1->2
//   gen b:
//   inv a b
// or abstract form:
//   table 2
//   mul 0: 0 1
//   mul 1: 1 1
//   gen e = 1
//   inv e e
//   name 1: e          (optional; checked against the table)
// Letters are numbered in order of their `gen` lines and every letter must
// appear in exactly one `inv` line.
PGeneratedMonoid parse_monoid(std::string_view text);

// Abstract form, with elements named by witness words.
std::string dump_monoid(const PGeneratedMonoid& m);

struct CoverDump {
  PGeneratedMonoid source;
  PGeneratedMonoid target;
  Homomorphism theta;
};

// `begin source` ... `end`, `begin target` ... `end`, then
// `theta: y0 y1 ...` giving the image of every source element.
CoverDump parse_cover(std::string_view text);
std::string dump_cover(const PGeneratedMonoid& source,
                       const PGeneratedMonoid& target,
                       const Homomorphism& theta);

// Graph file:
//   vertices 2
//   edge 0: 0 -> 1
//   edge 1: 1 -> 0
//   einv 0 1
//   symmetry: 1 0 | 1 0        (optional; vertex images | edge images)
struct GraphFile {
  MultiDigraph graph;
  std::vector<GraphSymmetry> symmetries;
};

// Groupoid file: a graph file plus
//   group 3                     (degree of the permutation group K)
//   label 0: 1 2 0              (images of the label of edge 0)
// An edge without a label line gets the inverse of its partner's label.
struct GroupoidFile {
  GraphFile graph;
  Groupoid groupoid;
};

GraphFile parse_graph(std::string_view text);
GroupoidFile parse_groupoid(std::string_view text);
std::string dump_graph(const MultiDigraph& g,
                       const std::vector<GraphSymmetry>& symmetries = {});
// Labels are written as permutations, so K must carry a realization.
std::string dump_groupoid(const Groupoid& h,
                          const std::vector<GraphSymmetry>& symmetries = {});

// 64-bit FNV-1a, as 16 hex digits.
std::string fnv1a_hex(std::string_view data);

}  // namespace fcover::io
