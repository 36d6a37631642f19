#pragma once

#include <string>
#include <vector>

#include "fcover/pgen.hpp"

namespace fcover::testing {

struct CorpusEntry {
  std::string name;
  PGeneratedMonoid monoid;
};

// Row-major multiplication tables of small abstract inverse monoids with
// identity, by name.
struct AbstractTable {
  std::string name;
  std::size_t size;
  std::vector<Element> mul;
};
std::vector<AbstractTable> abstract_tables();

// Generated by a greedy generating set of its Wagner-Preston image: scan
// elements in index order and keep each one not yet generated.
PGeneratedMonoid from_abstract(const AbstractTable& t);

// `m` with one letter per element, paired with the letter of its inverse.
// Element indices are kept.
PGeneratedMonoid generated_by_all(const MonoidPtr& m);

// Inverse submonoids of I({0..n-1}) generated by one or two partial
// bijections, n <= max_points, one entry per distinct element set.
std::vector<CorpusEntry> closure_corpus(std::size_t max_points = 3);

// closure_corpus() followed by every abstract table.
std::vector<CorpusEntry> full_corpus();

// The symmetric inverse monoid I({0..n-1}), generated by the
// transposition (0 1), the n-cycle and the restriction to {1..n-1}.
PGeneratedMonoid symmetric_inverse_monoid(std::size_t n);

// {1, e} with p -> e and P = {p, p^-1}.
PGeneratedMonoid two_element_semilattice();

// I({0,1}) generated by the swap t and the partial identity e on {0}.
PGeneratedMonoid i2_te();

}  // namespace fcover::testing
