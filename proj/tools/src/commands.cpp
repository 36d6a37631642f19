#include "fcover_tools/commands.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fcover/pipeline.hpp"
#include "fcover_tools/formats.hpp"

namespace fcover::cli {
namespace {

using Json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io::ParseError(0, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << text;
}

Json report_header(const char* command, const std::string& path,
                   const std::string& text) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["tool"] = "fcover";
  j["tool_version"] = kToolVersion;
  j["command"] = command;
  j["input"] = {{"path", path}, {"digest", "fnv1a64:" + io::fnv1a_hex(text)}};
  return j;
}

void emit(const ReportOptions& opts, const Json& j, std::ostream& out) {
  const std::string text = j.dump(2) + "\n";
  if (opts.report_path.empty()) {
    out << text;
  } else {
    write_file(opts.report_path, text);
  }
}

// Shared error handling: parse and usage problems exit 2, certifier
// contradictions exit 4. The report still records what happened.
template <typename Body>
int guarded(const char* command, const std::string& path,
            const ReportOptions& opts, std::ostream& out, std::ostream& err,
            Body body) {
  Json j = report_header(command, path, "");
  try {
    return body(j);
  } catch (const io::ParseError& e) {
    err << "fcover " << command << ": " << path << ": " << e.what() << "\n";
    j["result"] = "parse-error";
    j["error"] = {{"line", e.line()}, {"message", e.what()}};
    emit(opts, j, out);
    return kUsageError;
  } catch (const InternalError& e) {
    err << "fcover " << command << ": internal error: " << e.what() << "\n";
    j["result"] = "internal-error";
    j["error"] = {{"message", e.what()}};
    emit(opts, j, out);
    return kInternalError;
  } catch (const Error& e) {
    err << "fcover " << command << ": " << e.what() << "\n";
    j["result"] = "error";
    j["error"] = {{"message", e.what()}};
    emit(opts, j, out);
    return kUsageError;
  }
}

std::string word(const PGeneratedMonoid& m, Element x) {
  return format_word(m.alphabet(), m.witness(x));
}

// A non-idempotent element above an idempotent, if any.
std::optional<std::pair<Element, Element>> e_unitary_witness(
    const InverseMonoid& m) {
  for (Element e : m.idempotents()) {
    for (Element x = 0; x < m.size(); ++x) {
      if (!m.is_idempotent(x) && m.leq(e, x)) return std::pair{e, x};
    }
  }
  return std::nullopt;
}

// Two distinct maximal elements of one sigma class, if any.
std::optional<std::pair<Element, Element>> f_inverse_witness(
    const InverseMonoid& m) {
  const auto cls = sigma_classes(m);
  std::vector<Element> first_max(m.size(), kNoElement);
  for (Element x = 0; x < m.size(); ++x) {
    bool maximal = true;
    for (Element y = 0; y < m.size() && maximal; ++y) {
      if (y != x && m.leq(x, y)) maximal = false;
    }
    if (!maximal) continue;
    if (first_max[cls[x]] != kNoElement) return std::pair{first_max[cls[x]], x};
    first_max[cls[x]] = x;
  }
  return std::nullopt;
}

Json monoid_sizes(const PGeneratedMonoid& m) {
  return {{"elements", m.size()},
          {"idempotents", m.monoid()->idempotents().size()},
          {"letters", m.alphabet().size()}};
}

Json stats_json(const SearchStats& s, bool timings) {
  Json j = {{"stop_reason", s.stop_reason},
            {"groups_tried", s.groups_tried},
            {"candidates", s.candidates},
            {"edge_orbits", s.edge_orbits},
            {"too_large", s.too_large},
            {"not_2_acyclic", s.not_2_acyclic},
            {"not_symmetric", s.not_symmetric}};
  if (timings) j["seconds"] = s.seconds;
  return j;
}

Json budget_json(const SearchBudget& b) {
  Json j = {{"max_group_order", b.max_group_order},
            {"max_candidates", b.max_candidates},
            {"groupoid_limit", b.groupoid_limit}};
  if (b.time_cap) j["time_ms"] = b.time_cap->count();
  return j;
}

std::string edge_list(const MultiDigraph& g, const EdgeSupport& s) {
  std::string out;
  for (EdgeId e : support_edges(g, s)) {
    if (!out.empty()) out += ' ';
    out += std::to_string(e);
  }
  return out.empty() ? "{}" : "{" + out + "}";
}

std::string walk_text(const Walk& w) {
  std::string out = "@" + std::to_string(w.start);
  for (EdgeId e : w.edges) out += " " + std::to_string(e);
  return out;
}

}  // namespace

int run_check(const CheckOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded("check", opts.path, opts.report, out, err, [&](Json& j) {
    const std::string text = read_file(opts.path);
    j = report_header("check", opts.path, text);
    std::optional<io::CoverDump> cover;
    std::optional<PGeneratedMonoid> parsed;
    if (opts.cover) {
      cover = io::parse_cover(text);
    } else {
      parsed = io::parse_monoid(text);
    }
    const PGeneratedMonoid& m = opts.cover ? cover->source : *parsed;
    const auto& mm = *m.monoid();
    j["sizes"] = monoid_sizes(m);
    Json requested = Json::array();
    Json flags = Json::object();
    Json witnesses = Json::object();
    bool all = true;
    if (opts.e_unitary) {
      requested.push_back("e-unitary");
      const bool v = is_e_unitary(mm);
      flags["e_unitary"] = v;
      all = all && v;
      if (auto w = e_unitary_witness(mm)) {
        witnesses["e_unitary"] = {{"idempotent", word(m, w->first)},
                                  {"above", word(m, w->second)}};
      }
    }
    if (opts.f_inverse) {
      requested.push_back("f-inverse");
      const bool v = is_f_inverse(mm);
      flags["f_inverse"] = v;
      all = all && v;
      if (auto w = f_inverse_witness(mm)) {
        witnesses["f_inverse"] = {
            {"maximal_in_one_class", {word(m, w->first), word(m, w->second)}}};
      }
    }
    if (opts.cover) {
      requested.push_back("cover");
      const auto r = check_cover(cover->theta);
      flags["surjective"] = r.surjective;
      flags["idempotent_separating"] = r.idempotent_separating;
      flags["homomorphic"] = r.homomorphic;
      all = all && r.ok();
      j["sizes"]["target_elements"] = cover->target.size();
    }
    j["requested"] = requested;
    j["flags"] = flags;
    if (!witnesses.empty()) j["witnesses"] = witnesses;
    j["result"] = all ? "ok" : "false";
    emit(opts.report, j, out);
    err << "check " << opts.path << ": " << flags.dump() << " -> "
        << (all ? "ok" : "false") << "\n";
    return all ? kOk : kPredicateFalse;
  });
}

int run_cover(const CoverOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded("cover", opts.path, opts.report, out, err, [&](Json& j) {
    const std::string text = read_file(opts.path);
    j = report_header("cover", opts.path, text);
    const PGeneratedMonoid m = io::parse_monoid(text);
    const bool f_mode = opts.mode == CoverMode::kFInverse;
    j["mode"] = f_mode ? "f-inverse" : "e-unitary";
    if (f_mode) j["budget"] = budget_json(opts.budget);

    std::optional<CoverResult> result;
    if (f_mode) {
      auto outcome = build_f_inverse_cover(m, opts.budget);
      if (auto* failure = std::get_if<SearchFailure>(&outcome)) {
        j["result"] = "search-exhausted";
        j["sizes"] = {{"m", failure->sizes.m},
                      {"f", failure->sizes.f},
                      {"i_vertices", failure->sizes.i_vertices},
                      {"i_edges", failure->sizes.i_edges}};
        j["search"] = stats_json(failure->stats, opts.report.timings);
        emit(opts.report, j, out);
        err << "cover " << opts.path << ": no groupoid found ("
            << failure->stats.stop_reason << " after "
            << failure->stats.candidates << " candidates)\n";
        return kSearchExhausted;
      }
      result = std::move(std::get<CoverResult>(outcome));
    } else {
      result = build_e_unitary_cover(m);
    }
    const auto& r = *result;
    const auto& f = r.flags;
    j["flags"] = {{"e_unitary", f.e_unitary},
                  {"f_inverse", f.f_inverse},
                  {"surjective", f.surjective},
                  {"idempotent_separating", f.idempotent_separating},
                  {"homomorphic", f.homomorphic},
                  {"compatible", f.compatible},
                  {"strongly_compatible", f.strongly_compatible}};
    j["sizes"] = {{"m", r.sizes.m}, {"f", r.sizes.f}, {"g", r.sizes.g},
                  {"n", r.sizes.n}};
    if (r.h) {
      j["sizes"]["i_vertices"] = r.sizes.i_vertices;
      j["sizes"]["i_edges"] = r.sizes.i_edges;
      j["sizes"]["h"] = r.sizes.h;
      j["groupoid_group"] = r.k_name;
      j["search"] = stats_json(*r.search, opts.report.timings);
      const auto lemmas =
          verify_lemmas(m, *r.f, *r.gaifman, *r.h, r.product.right,
                        LemmaSampling{200, 6, 4, 1});
      Json lj = Json::array();
      for (const auto& c : lemmas.checks) {
        Json cj = {{"name", c.name}, {"checked", c.checked},
                   {"failures", c.failures}};
        if (!c.passed()) cj["counterexample"] = c.counterexample;
        lj.push_back(cj);
      }
      j["lemmas"] = lj;
      j["upper_bound_pairs"] = replay_upper_bounds(r);
      if (!lemmas.passed()) {
        throw InternalError("lemma replay failed");
      }
    }
    if (opts.report.timings) {
      Json tj = Json::object();
      for (const auto& t : r.timings) tj[t.stage] = t.seconds;
      j["timings"] = tj;
    }
    Json elements = Json::array();
    const auto& n = r.product;
    for (Element x = 0; x < n.size(); ++x) {
      elements.push_back({{"word", word(n.structure, x)},
                          {"m", n.m(x)},
                          {"g", n.g(x)}});
    }
    j["cover_elements"] = elements;
    const bool target = f_mode ? f.f_inverse : f.e_unitary;
    const bool ok = target && f.surjective && f.idempotent_separating &&
                    f.homomorphic;
    j["result"] = ok ? "ok" : "false";
    if (!opts.emit_cover.empty()) {
      write_file(opts.emit_cover, io::dump_cover(n.structure, m, r.theta));
      j["emitted_cover"] = opts.emit_cover;
    }
    emit(opts.report, j, out);
    err << "cover " << opts.path << ": |M| = " << r.sizes.m
        << ", |G| = " << r.sizes.g << ", |N| = " << r.sizes.n << " -> "
        << (ok ? "ok" : "false") << "\n";
    return ok ? kOk : kPredicateFalse;
  });
}

int run_groupoid(const GroupoidOptions& opts, std::ostream& out,
                 std::ostream& err) {
  return guarded("groupoid", opts.path, opts.report, out, err, [&](Json& j) {
    const std::string text = read_file(opts.path);
    j = report_header("groupoid", opts.path, text);
    if (opts.search) {
      j["mode"] = "search";
      const io::GraphFile file = io::parse_graph(text);
      j["budget"] = budget_json(opts.budget);
      const auto found =
          search_groupoid(file.graph, file.symmetries, opts.budget);
      j["search"] = stats_json(found.stats, opts.report.timings);
      if (!found.groupoid) {
        j["result"] = "search-exhausted";
        emit(opts.report, j, out);
        err << "groupoid " << opts.path << ": search exhausted ("
            << found.stats.stop_reason << ")\n";
        return kSearchExhausted;
      }
      const std::string dump =
          io::dump_groupoid(*found.groupoid, file.symmetries);
      j["result"] = "ok";
      j["witness"] = {{"group", found.group_name},
                      {"elements", found.groupoid->size()},
                      {"dump", dump}};
      if (!opts.emit_groupoid.empty()) write_file(opts.emit_groupoid, dump);
      emit(opts.report, j, out);
      err << "groupoid " << opts.path << ": found over " << found.group_name
          << " with " << found.groupoid->size() << " elements\n";
      return kOk;
    }
    j["mode"] = "certify";
    const io::GroupoidFile file = io::parse_groupoid(text);
    const Groupoid& h = file.groupoid;
    const bool symmetric = is_symmetric(h, file.graph.symmetries);
    const bool acyclic = is_2_acyclic(h);
    j["sizes"] = {{"vertices", h.num_objects()},
                  {"edges", h.shape().num_edges()},
                  {"elements", h.size()},
                  {"symmetries", file.graph.symmetries.size()}};
    j["flags"] = {{"symmetric", symmetric}, {"two_acyclic", acyclic}};
    if (!acyclic) {
      const auto supports = minimal_supports(h);
      for (Element x = 0; x < h.size(); ++x) {
        if (supports[x].size() < 2) continue;
        j["witnesses"]["two_acyclic"] = {
            {"element_walk", walk_text(h.witness(x))},
            {"minimal_supports", {edge_list(h.shape(), supports[x][0]),
                                  edge_list(h.shape(), supports[x][1])}}};
        break;
      }
    }
    if (!symmetric) {
      for (std::size_t i = 0; i < file.graph.symmetries.size(); ++i) {
        if (!induced_automorphism(h, file.graph.symmetries[i])) {
          j["witnesses"]["symmetric"] = {{"symmetry_index", i}};
          break;
        }
      }
    }
    const bool ok = symmetric && acyclic;
    j["result"] = ok ? "ok" : "false";
    emit(opts.report, j, out);
    err << "groupoid " << opts.path << ": symmetric=" << symmetric
        << " 2-acyclic=" << acyclic << "\n";
    return ok ? kOk : kPredicateFalse;
  });
}

SearchBudget parse_budget(const std::string& spec, SearchBudget base) {
  std::istringstream in(spec);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw Error("budget entry `" + item + "`");
    const std::string key = item.substr(0, eq);
    std::size_t value = 0;
    try {
      std::size_t used = 0;
      value = std::stoull(item.substr(eq + 1), &used);
      if (used != item.size() - eq - 1) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw Error("budget value in `" + item + "`");
    }
    if (key == "max_group_order") {
      base.max_group_order = value;
    } else if (key == "max_candidates") {
      base.max_candidates = value;
    } else if (key == "time_ms") {
      base.time_cap = std::chrono::milliseconds(value);
    } else if (key == "groupoid_limit") {
      base.groupoid_limit = value;
    } else {
      throw Error("unknown budget key `" + key + "`");
    }
  }
  return base;
}

SearchBudget default_budget() {
  const char* env = std::getenv("FCOVER_BUDGET");
  return env ? parse_budget(env) : SearchBudget{};
}

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Finite inverse monoids and their E-unitary and F-inverse covers",
               "fcover"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  CheckOptions check;
  auto* c = app.add_subcommand("check", "Decide predicates of a monoid spec");
  c->add_option("path", check.path, "Monoid spec, or cover dump with --cover")
      ->required();
  c->add_flag("--e-unitary", check.e_unitary);
  c->add_flag("--f-inverse", check.f_inverse);
  c->add_flag("--cover", check.cover, "Validate a dump from cover --emit-cover");

  CoverOptions cover;
  std::string mode = "e-unitary";
  std::optional<std::size_t> cover_candidates;
  auto* v = app.add_subcommand("cover", "Build an E-unitary or F-inverse cover");
  v->add_option("path", cover.path)->required();
  v->add_option("--mode", mode)
      ->check(CLI::IsMember({"e-unitary", "f-inverse"}));
  v->add_option("--budget", cover_candidates, "Candidate groupoids to try");
  v->add_option("--emit-cover", cover.emit_cover, "Write the cover here");

  GroupoidOptions groupoid;
  bool certify = false;
  std::optional<std::size_t> groupoid_candidates;
  auto* g = app.add_subcommand("groupoid", "Certify or search for groupoids");
  g->add_option("path", groupoid.path)->required();
  auto* search_flag = g->add_flag("--search", groupoid.search,
                                  "Search over a graph file");
  auto* certify_flag = g->add_flag("--certify", certify,
                                   "Certify a groupoid file");
  search_flag->excludes(certify_flag);
  g->add_option("--budget", groupoid_candidates, "Candidate groupoids to try");
  g->add_option("--emit-groupoid", groupoid.emit_groupoid,
                "Write a found groupoid here");

  ReportOptions report;
  for (auto* sub : {c, v, g}) {
    sub->add_option("--report", report.report_path,
                    "JSON report path (default: stdout)");
    sub->add_flag("--timings", report.timings, "Include wall-clock times");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  SearchBudget budget;
  try {
    budget = default_budget();
  } catch (const Error& e) {
    err << "fcover: FCOVER_BUDGET: " << e.what() << "\n";
    return kUsageError;
  }
  if (c->parsed()) {
    check.report = report;
    if (!check.e_unitary && !check.f_inverse && !check.cover) {
      err << "fcover check: give at least one of --e-unitary, --f-inverse, "
             "--cover\n";
      return kUsageError;
    }
    return run_check(check, out, err);
  }
  if (v->parsed()) {
    cover.report = report;
    cover.mode = mode == "f-inverse" ? CoverMode::kFInverse
                                     : CoverMode::kEUnitary;
    cover.budget = budget;
    if (cover_candidates) cover.budget.max_candidates = *cover_candidates;
    return run_cover(cover, out, err);
  }
  groupoid.report = report;
  if (!groupoid.search && !certify) {
    err << "fcover groupoid: give --search or --certify\n";
    return kUsageError;
  }
  groupoid.budget = budget;
  if (groupoid_candidates) groupoid.budget.max_candidates = *groupoid_candidates;
  return run_groupoid(groupoid, out, err);
}

}  // namespace fcover::cli
