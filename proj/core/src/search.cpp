#include "fcover/search.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

namespace fcover {
namespace {

bool is_prime(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::size_t> prime_powers_upto(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t p = 2; p <= n; ++p) {
    if (!is_prime(p)) continue;
    for (std::size_t q = p; q <= n; q *= p) out.push_back(q);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Permutation cycle(std::size_t degree, std::size_t offset, std::size_t len) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  for (std::size_t i = 0; i < len; ++i) {
    images[offset + i] = static_cast<Point>(offset + (i + 1) % len);
  }
  return Permutation(PartialBijection(Carrier{degree}, std::move(images)));
}

MonoidPtr permutation_group(std::size_t degree,
                            const std::vector<Permutation>& gens) {
  std::vector<PartialBijection> maps;
  for (const auto& p : gens) maps.push_back(p.as_partial());
  return std::make_shared<const InverseMonoid>(
      close_generators(Carrier{degree}, maps));
}

struct Entry {
  std::size_t order;
  bool symmetric;
  std::vector<std::size_t> factors;
  LadderGroup group;
};

void abelian_entries(const std::vector<std::size_t>& powers, std::size_t from,
                     std::vector<std::size_t>& factors, std::size_t order,
                     std::size_t max_order, std::vector<Entry>& out) {
  std::string name;
  std::size_t degree = 0;
  for (std::size_t q : factors) {
    name += (name.empty() ? "Z" : " x Z") + std::to_string(q);
    degree += q;
  }
  if (name.empty()) name = "1";
  std::vector<Permutation> gens;
  std::size_t offset = 0;
  for (std::size_t q : factors) {
    gens.push_back(cycle(std::max<std::size_t>(degree, 1), offset, q));
    offset += q;
  }
  out.push_back({order, false, factors,
                 {name, permutation_group(std::max<std::size_t>(degree, 1),
                                          gens)}});
  for (std::size_t i = from; i < powers.size(); ++i) {
    if (order * powers[i] > max_order) break;
    factors.push_back(powers[i]);
    abelian_entries(powers, i, factors, order * powers[i], max_order, out);
    factors.pop_back();
  }
}

}  // namespace

std::vector<LadderGroup> group_ladder(std::size_t max_order) {
  std::vector<Entry> entries;
  std::vector<std::size_t> factors;
  abelian_entries(prime_powers_upto(max_order), 0, factors, 1, max_order,
                  entries);
  std::size_t factorial = 2;
  for (std::size_t n = 3; n <= 5; ++n) {
    factorial *= n;
    if (factorial > max_order) break;
    entries.push_back({factorial, true, {n},
                       {"S" + std::to_string(n),
                        permutation_group(n, {cycle(n, 0, 2), cycle(n, 0, n)})}});
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    return std::tie(a.order, a.symmetric, a.factors) <
           std::tie(b.order, b.symmetric, b.factors);
  });
  std::vector<LadderGroup> out;
  for (auto& e : entries) out.push_back(std::move(e.group));
  return out;
}

std::vector<std::size_t> edge_orbits(
    const MultiDigraph& g, std::span<const GraphSymmetry> symmetries) {
  const std::size_t m = g.num_edges();
  std::vector<std::size_t> root(m);
  std::iota(root.begin(), root.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  for (const auto& phi : symmetries) {
    if (!is_graph_symmetry(g, phi)) throw Error("invalid graph symmetry");
    for (EdgeId e = 0; e < m; ++e) {
      const std::size_t a = find(e), b = find(phi.edge_map[e]);
      // Keep the least edge as root.
      if (a < b) root[b] = a;
      if (b < a) root[a] = b;
    }
  }
  std::vector<std::size_t> index(m, m), orbit(m);
  std::size_t next = 0;
  for (EdgeId e = 0; e < m; ++e) {
    const std::size_t r = find(e);
    if (index[r] == m) index[r] = next++;
    orbit[e] = index[r];
  }
  return orbit;
}

SearchResult search_groupoid(const MultiDigraph& g,
                             std::span<const GraphSymmetry> symmetries,
                             const SearchBudget& budget) {
  using Clock = std::chrono::steady_clock;
  const auto started = Clock::now();
  SearchResult result;
  auto& stats = result.stats;
  auto finish = [&](const char* reason) {
    stats.stop_reason = reason;
    stats.seconds =
        std::chrono::duration<double>(Clock::now() - started).count();
    return std::move(result);
  };

  const auto orbit = edge_orbits(g, symmetries);
  const std::size_t num_orbits =
      orbit.empty() ? 0 : *std::max_element(orbit.begin(), orbit.end()) + 1;
  stats.edge_orbits = num_orbits;
  std::vector<EdgeId> least(num_orbits, 0);
  for (EdgeId e = g.num_edges(); e-- > 0;) least[orbit[e]] = e;
  std::vector<std::size_t> inv_orbit(num_orbits);
  std::vector<std::size_t> slot_of(num_orbits, num_orbits);
  std::vector<std::size_t> slots;  // orbits that carry a free label
  for (std::size_t o = 0; o < num_orbits; ++o) {
    inv_orbit[o] = orbit[g.einv(least[o])];
    if (o <= inv_orbit[o]) {
      slot_of[o] = slots.size();
      slots.push_back(o);
    }
  }

  for (const auto& entry : group_ladder(budget.max_group_order)) {
    const auto& k = *entry.group;
    ++stats.groups_tried;
    std::vector<std::vector<Element>> allowed(slots.size());
    for (std::size_t s = 0; s < slots.size(); ++s) {
      for (Element x = 0; x < k.size(); ++x) {
        if (inv_orbit[slots[s]] != slots[s] || k.mul(x, x) == k.one()) {
          allowed[s].push_back(x);
        }
      }
    }
    std::vector<std::size_t> digit(slots.size(), 0);
    while (true) {
      if (stats.candidates >= budget.max_candidates) {
        return finish("candidates");
      }
      if (budget.time_cap && Clock::now() - started > *budget.time_cap) {
        return finish("time");
      }
      ++stats.candidates;
      GroupLabeling labeling{entry.group, std::vector<Element>(g.num_edges())};
      for (EdgeId e = 0; e < g.num_edges(); ++e) {
        const std::size_t o = orbit[e];
        if (slot_of[o] != num_orbits) {
          labeling.label[e] = allowed[slot_of[o]][digit[slot_of[o]]];
        } else {
          const std::size_t s = slot_of[inv_orbit[o]];
          labeling.label[e] = k.inv(allowed[s][digit[s]]);
        }
      }
      std::optional<Groupoid> h;
      try {
        h = Groupoid::from_group_labeling(g, std::move(labeling),
                                          budget.groupoid_limit);
      } catch (const Error&) {
        ++stats.too_large;
      }
      if (h) {
        if (!is_2_acyclic(*h)) {
          ++stats.not_2_acyclic;
        } else if (!is_symmetric(*h, symmetries)) {
          ++stats.not_symmetric;
        } else {
          result.groupoid = std::move(h);
          result.group_name = entry.name;
          return finish("found");
        }
      }
      // Odometer step; the last slot turns fastest.
      bool advanced = false;
      for (std::size_t s = slots.size(); s-- > 0;) {
        if (++digit[s] < allowed[s].size()) {
          advanced = true;
          break;
        }
        digit[s] = 0;
      }
      if (!advanced) break;
    }
  }
  return finish("exhausted");
}

}  // namespace fcover
