#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fcover/graph.hpp"
#include "fcover/groupoid.hpp"
#include "fcover/pgen.hpp"
#include "fcover/search.hpp"

namespace fcover {

// Every flag is recomputed on the finished cover by the certifiers.
struct CoverFlags {
  bool e_unitary = false;
  bool f_inverse = false;
  bool surjective = false;
  bool idempotent_separating = false;
  bool homomorphic = false;
  bool compatible = false;
  bool strongly_compatible = false;
};

struct CoverSizes {
  std::size_t m = 0, f = 0, i_vertices = 0, i_edges = 0, h = 0, g = 0, n = 0;
};

struct StageTime {
  std::string stage;
  double seconds = 0;
};

struct CoverResult {
  ProductMonoid product;  // N = M x_P G
  Homomorphism theta;     // N -> M
  CoverFlags flags;
  CoverSizes sizes;
  std::vector<StageTime> timings;
  // Set for covers built through a groupoid.
  std::optional<PGeneratedGroup> f;
  std::optional<GaifmanGraph> gaifman;
  std::optional<Groupoid> h;
  std::string k_name;
  std::optional<SearchStats> search;
};

struct SearchFailure {
  GaifmanGraph gaifman;
  SearchStats stats;
  CoverSizes sizes;
};

// N = M x_P F with F = build_compatible_group(M).
CoverResult build_e_unitary_cover(const PGeneratedMonoid& m);

using FInverseOutcome = std::variant<CoverResult, SearchFailure>;

// Steps: F compatible with M (`f` if given, which must pass is_compatible),
// I the Gaifman graph of F, H found by search_groupoid with the translation
// symmetries, G = group_from_groupoid(H), N = M x_P G. Throws InternalError
// if G is not strongly compatible with M.
FInverseOutcome build_f_inverse_cover(const PGeneratedMonoid& m,
                                      const SearchBudget& budget,
                                      std::optional<PGeneratedGroup> f = {});

struct LemmaCheck {
  std::string name;
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::string counterexample;  // first failure
  bool passed() const { return failures == 0; }
};

struct LemmaReport {
  std::vector<LemmaCheck> checks;
  bool passed() const;
  const LemmaCheck* find(const std::string& name) const;
};

struct LemmaSampling {
  std::size_t walk_pairs = 1000;
  std::size_t max_walk_length = 8;
  // Words up to this length are checked exhaustively.
  std::size_t word_length = 5;
  std::uint64_t seed = 1;
};

// Replays the facts the F-inverse construction rests on:
//   "walk-projection":  pi(w)^F = s(w)^-1 t(w) for walks w;
//   "support-order":    pi(u)^M <= pi(v)^M when u, v share endpoints and
//                       supp(v) is inside supp(u);
//   "lift-evaluation":  a^G(id_1) = lift(a, 1)^H;
//   "translation":      phi_{f,H}(a^G(h)) = a^G(phi_{f,H}(h));
//   "target-shift":     a^G(h') = h' h^-1 a^G(h) when t(h) = t(h');
//   "one-point":        a^G(h) = b^G(h) for one h forces a^G = b^G.
// Random walks come from a generator seeded with `sampling.seed`.
LemmaReport verify_lemmas(const PGeneratedMonoid& m, const PGeneratedGroup& f,
                          const GaifmanGraph& gaifman, const Groupoid& h,
                          const PGeneratedGroup& g,
                          const LemmaSampling& sampling = {});

// For words a, b with a^G = b^G, an upper bound c produced from H: the
// walk lift(a, 1) and lift(b, 1) evaluate equally in H, and c projects a
// walk with the same value using only edges shared by both lifts.
struct UpperBoundWitness {
  Word a, b, c;
};

// Checks the witness for every pair of stored witness words of N with the
// same G component: c^G = a^G and a^M, b^M <= c^M. Returns the number of
// pairs checked; throws InternalError on the first failure.
std::size_t replay_upper_bounds(const CoverResult& cover,
                                std::vector<UpperBoundWitness>* out = nullptr);

}  // namespace fcover
