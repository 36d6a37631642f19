#include "fcover/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <map>
#include <random>
#include <sstream>

namespace fcover {
namespace {

using Clock = std::chrono::steady_clock;

class StageTimer {
 public:
  explicit StageTimer(std::vector<StageTime>& out) : out_(out) {}
  void mark(std::string stage) {
    const auto now = Clock::now();
    out_.push_back({std::move(stage),
                    std::chrono::duration<double>(now - last_).count()});
    last_ = now;
  }

 private:
  std::vector<StageTime>& out_;
  Clock::time_point last_ = Clock::now();
};

CoverFlags certify(const ProductMonoid& n, const Homomorphism& theta) {
  const auto& nn = *n.structure.monoid();
  const auto report = check_cover(theta);
  CoverFlags flags;
  flags.e_unitary = is_e_unitary(nn);
  flags.f_inverse = is_f_inverse(nn);
  flags.surjective = report.surjective;
  flags.idempotent_separating = report.idempotent_separating;
  flags.homomorphic = report.homomorphic;
  flags.compatible = is_compatible(n);
  flags.strongly_compatible = is_strongly_compatible(n);
  return flags;
}

CoverResult finish_cover(const PGeneratedMonoid& m, const PGeneratedGroup& g,
                         std::vector<StageTime> timings) {
  StageTimer timer(timings);
  ProductMonoid n = p_product(m, g);
  timer.mark("product");
  Homomorphism theta = projection_cover(n);
  const CoverFlags flags = certify(n, theta);
  timer.mark("certify");
  CoverSizes sizes;
  sizes.m = m.size();
  sizes.g = g.size();
  sizes.n = n.size();
  return CoverResult{std::move(n), std::move(theta), flags, sizes,
                     std::move(timings)};
}

// Where x goes under the G element `a`.
Element act(const PGeneratedGroup& g, Element a, Element x) {
  const auto& grp = *g.monoid();
  if (!grp.has_realization()) return x;  // trivial group
  return grp.realization()[a](x);
}

std::string format_walk(const Walk& w) {
  std::ostringstream out;
  out << "@" << w.start << ":";
  for (EdgeId e : w.edges) out << " " << e;
  return out.str();
}

void fail(LemmaCheck& check, const std::string& what) {
  if (check.failures++ == 0) check.counterexample = what;
}

Walk random_walk(const MultiDigraph& g, Vertex start, std::size_t length,
                 const EdgeSupport* allowed, std::mt19937_64& rng) {
  Walk w{start, {}};
  Vertex at = start;
  for (std::size_t i = 0; i < length; ++i) {
    std::vector<EdgeId> options;
    for (EdgeId e : g.out_edges(at)) {
      if (!allowed || allowed->test(g.edge_pair()[e])) options.push_back(e);
    }
    if (options.empty()) break;
    const EdgeId e =
        options[std::uniform_int_distribution<std::size_t>(
            0, options.size() - 1)(rng)];
    w.edges.push_back(e);
    at = g.tgt(e);
  }
  return w;
}

// Shortest path from `from` to `to` using only allowed edges.
std::optional<std::vector<EdgeId>> path_within(const MultiDigraph& g,
                                               Vertex from, Vertex to,
                                               const EdgeSupport& allowed) {
  std::vector<EdgeId> via(g.num_vertices(), 0);
  std::vector<bool> seen(g.num_vertices(), false);
  std::deque<Vertex> queue{from};
  seen[from] = true;
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    if (v == to) {
      std::vector<EdgeId> path;
      for (Vertex x = to; x != from; x = g.src(via[x])) path.push_back(via[x]);
      std::reverse(path.begin(), path.end());
      return path;
    }
    for (EdgeId e : g.out_edges(v)) {
      if (!allowed.test(g.edge_pair()[e]) || seen[g.tgt(e)]) continue;
      seen[g.tgt(e)] = true;
      via[g.tgt(e)] = e;
      queue.push_back(g.tgt(e));
    }
  }
  return std::nullopt;
}

}  // namespace

CoverResult build_e_unitary_cover(const PGeneratedMonoid& m) {
  std::vector<StageTime> timings;
  StageTimer timer(timings);
  const PGeneratedGroup f = build_compatible_group(m);
  timer.mark("compatible-group");
  CoverResult out = finish_cover(m, f, std::move(timings));
  out.sizes.f = f.size();
  return out;
}

FInverseOutcome build_f_inverse_cover(const PGeneratedMonoid& m,
                                      const SearchBudget& budget,
                                      std::optional<PGeneratedGroup> f) {
  std::vector<StageTime> timings;
  StageTimer timer(timings);
  if (f) {
    if (!is_compatible(*f, m)) {
      throw Error("supplied group is not compatible with the monoid");
    }
  } else {
    f = build_compatible_group(m);
  }
  timer.mark("compatible-group");
  GaifmanGraph gaifman = gaifman_graph(*f);
  const auto symmetries = translation_symmetries(gaifman);
  timer.mark("gaifman");
  SearchResult found = search_groupoid(gaifman.graph, symmetries, budget);
  timer.mark("search");

  CoverSizes sizes;
  sizes.m = m.size();
  sizes.f = f->size();
  sizes.i_vertices = gaifman.graph.num_vertices();
  sizes.i_edges = gaifman.graph.num_edges();
  if (!found.groupoid) {
    return SearchFailure{std::move(gaifman), found.stats, sizes};
  }
  const Groupoid& h = *found.groupoid;
  const PGeneratedGroup g =
      group_from_groupoid(h, gaifman, budget.groupoid_limit);
  timer.mark("step-4-group");
  if (!is_strongly_compatible(g, m)) {
    throw InternalError(
        "group from a symmetric 2-acyclic groupoid is not strongly "
        "compatible");
  }
  CoverResult out = finish_cover(m, g, std::move(timings));
  sizes.h = h.size();
  sizes.g = out.sizes.g;
  sizes.n = out.sizes.n;
  out.sizes = sizes;
  out.f = std::move(f);
  out.gaifman = std::move(gaifman);
  out.h = std::move(found.groupoid);
  out.k_name = found.group_name;
  out.search = found.stats;
  return out;
}

bool LemmaReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const LemmaCheck& c) { return c.passed(); });
}

const LemmaCheck* LemmaReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

LemmaReport verify_lemmas(const PGeneratedMonoid& m, const PGeneratedGroup& f,
                          const GaifmanGraph& gaifman, const Groupoid& h,
                          const PGeneratedGroup& g,
                          const LemmaSampling& sampling) {
  const auto& graph = gaifman.graph;
  const auto& ff = *f.monoid();
  const auto& mm = *m.monoid();
  std::mt19937_64 rng(sampling.seed);
  std::uniform_int_distribution<Vertex> pick_vertex(
      0, static_cast<Vertex>(graph.num_vertices() - 1));
  std::uniform_int_distribution<std::size_t> pick_length(
      0, sampling.max_walk_length);
  LemmaReport report;

  LemmaCheck projection{"walk-projection"};
  LemmaCheck support{"support-order"};
  for (std::size_t i = 0; i < sampling.walk_pairs; ++i) {
    const Vertex s = pick_vertex(rng);
    const Walk u = random_walk(graph, s, pick_length(rng), nullptr, rng);
    const Vertex t = walk_target(graph, u);
    ++projection.checked;
    if (eval_word(f, gaifman.project(u)) != ff.mul(ff.inv(s), t)) {
      fail(projection, format_walk(u));
    }
    // v wanders inside supp(u), then returns to t(u) inside it.
    const EdgeSupport allowed = support_of(graph, u);
    Walk v = random_walk(graph, s, pick_length(rng), &allowed, rng);
    const auto back = path_within(graph, walk_target(graph, v), t, allowed);
    if (!back) {
      fail(support, "no return path for " + format_walk(u));
      continue;
    }
    v.edges.insert(v.edges.end(), back->begin(), back->end());
    ++support.checked;
    const Element um = eval_word(m, gaifman.project(u));
    const Element vm = eval_word(m, gaifman.project(v));
    if (!mm.leq(um, vm)) {
      fail(support, "u = " + format_walk(u) + ", v = " + format_walk(v));
    }
  }
  report.checks.push_back(std::move(projection));
  report.checks.push_back(std::move(support));

  // a^G only matters through the element of G it names, so the word sweep
  // reduces to the distinct elements it reaches.
  const Vertex base = f.one();
  LemmaCheck lift{"lift-evaluation"};
  std::map<Element, Word> reached;
  for (const Word& a :
       all_words(gaifman.alphabet.size(), sampling.word_length)) {
    const Element ag = eval_word(g, a);
    reached.emplace(ag, a);
    ++lift.checked;
    const Walk u = gaifman.lift(a, base);
    if (act(g, ag, h.identity(base)) != eval_walk(h, u)) {
      fail(lift, "a = " + format_word(gaifman.alphabet, a));
    }
  }
  report.checks.push_back(std::move(lift));

  LemmaCheck translation{"translation"};
  std::vector<std::vector<Element>> automorphisms;
  for (Element x = 0; x < ff.size(); ++x) {
    auto phi = induced_automorphism(h, translation_symmetry(gaifman, x));
    if (!phi) {
      fail(translation, "translation by " + std::to_string(x) +
                            " does not extend to H");
      continue;
    }
    automorphisms.push_back(std::move(*phi));
  }
  for (const auto& [ag, a] : reached) {
    for (const auto& phi : automorphisms) {
      for (Element x = 0; x < h.size(); ++x) {
        ++translation.checked;
        if (phi[act(g, ag, x)] != act(g, ag, phi[x])) {
          fail(translation, "a = " + format_word(gaifman.alphabet, a) +
                                ", h = " + std::to_string(x));
        }
      }
    }
  }
  report.checks.push_back(std::move(translation));

  // Comparing every h' with one reference element per target covers all
  // pairs: the identity is an equivalence between h and h'.
  LemmaCheck shift{"target-shift"};
  std::vector<Element> reference(h.num_objects(), kNoElement);
  for (Element x = 0; x < h.size(); ++x) {
    if (reference[h.tgt(x)] == kNoElement) reference[h.tgt(x)] = x;
  }
  for (const auto& [ag, a] : reached) {
    for (Element x = 0; x < h.size(); ++x) {
      const Element r = reference[h.tgt(x)];
      ++shift.checked;
      const Element rhs = h.compose(h.compose(x, h.inv(r)), act(g, ag, r));
      if (act(g, ag, x) != rhs) {
        fail(shift, "a = " + format_word(gaifman.alphabet, a) +
                        ", h' = " + std::to_string(x) +
                        ", h = " + std::to_string(r));
      }
    }
  }
  report.checks.push_back(std::move(shift));

  LemmaCheck one_point{"one-point"};
  for (Element x = 0; x < h.size(); ++x) {
    std::map<Element, Element> value_to_group;
    for (const auto& [ag, a] : reached) {
      ++one_point.checked;
      auto [it, fresh] = value_to_group.emplace(act(g, ag, x), ag);
      if (!fresh && it->second != ag) {
        fail(one_point, "a = " + format_word(gaifman.alphabet, a) +
                            " agrees with another word at h = " +
                            std::to_string(x));
      }
    }
  }
  report.checks.push_back(std::move(one_point));
  return report;
}

std::size_t replay_upper_bounds(const CoverResult& cover,
                                std::vector<UpperBoundWitness>* out) {
  if (!cover.h || !cover.gaifman || !cover.f) {
    throw Error("cover was not built through a groupoid");
  }
  const auto& n = cover.product;
  const auto& mm = *n.left.monoid();
  const auto& g = n.right;
  const auto& h = *cover.h;
  const auto& gaifman = *cover.gaifman;
  const Vertex base = cover.f->one();

  std::vector<std::vector<Element>> fibers(g.size());
  for (Element x = 0; x < n.size(); ++x) fibers[n.g(x)].push_back(x);
  std::size_t checked = 0;
  for (const auto& fiber : fibers) {
    for (std::size_t i = 0; i < fiber.size(); ++i) {
      for (std::size_t j = i; j < fiber.size(); ++j) {
        const Word a = n.structure.witness(fiber[i]);
        const Word b = n.structure.witness(fiber[j]);
        const Walk u = gaifman.lift(a, base);
        const Walk w = gaifman.lift(b, base);
        const Element target = eval_walk(h, u);
        if (eval_walk(h, w) != target) {
          throw InternalError("lifts of words equal in G differ in H");
        }
        const auto v = walk_within(
            h, target, support_of(h.shape(), u) & support_of(h.shape(), w));
        if (!v) {
          throw InternalError("no walk within the shared support");
        }
        const Word c = gaifman.project(*v);
        const Element cm = eval_word(n.left, c);
        if (eval_word(g, c) != n.g(fiber[i]) || !mm.leq(n.m(fiber[i]), cm) ||
            !mm.leq(n.m(fiber[j]), cm)) {
          throw InternalError("upper bound word fails for " +
                              format_word(gaifman.alphabet, a) + " and " +
                              format_word(gaifman.alphabet, b));
        }
        ++checked;
        if (out) out->push_back({a, b, c});
      }
    }
  }
  return checked;
}

}  // namespace fcover
