#include "fcover_tools/formats.hpp"

#include <charconv>
#include <cstdint>
#include <cstdio>
#include <map>
#include <optional>
#include <sstream>

namespace fcover::io {
namespace {

struct Line {
  std::size_t no;
  std::string text;
};

using Lines = std::vector<Line>;

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

Lines read_lines(std::string_view text) {
  Lines out;
  std::size_t no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++no;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) {
      raw = raw.substr(0, hash);
    }
    if (auto t = trim(raw); !t.empty()) out.push_back({no, std::move(t)});
    pos = end + 1;
  }
  if (out.empty() || out.front().text != "format=1") {
    throw ParseError(out.empty() ? 1 : out.front().no,
                     "expected `format=1` as the first line");
  }
  out.erase(out.begin());
  return out;
}

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::size_t parse_number(const Line& line, std::string_view tok) {
  std::size_t v = 0;
  const auto* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, v);
  if (ec != std::errc() || ptr != end || tok.empty()) {
    throw ParseError(line.no, "expected a number, got `" + std::string(tok) +
                                  "`");
  }
  return v;
}

std::vector<std::size_t> parse_numbers(const Line& line, std::string_view s) {
  std::vector<std::size_t> out;
  for (const auto& tok : split_ws(s)) out.push_back(parse_number(line, tok));
  return out;
}

// "keyword rest" -> (keyword, rest)
std::pair<std::string, std::string> head(const std::string& text) {
  const auto sp = text.find_first_of(" \t:");
  if (sp == std::string::npos) return {text, {}};
  if (text[sp] == ':') return {text.substr(0, sp), trim(text.substr(sp + 1))};
  return {text.substr(0, sp), trim(text.substr(sp))};
}

// "name: rest" or "name = rest"
std::pair<std::string, std::string> split_at(const Line& line,
                                             const std::string& s, char sep) {
  const auto at = s.find(sep);
  if (at == std::string::npos) {
    throw ParseError(line.no, std::string("expected `") + sep + "`");
  }
  return {trim(s.substr(0, at)), trim(s.substr(at + 1))};
}

void check_name(const Line& line, const std::string& name) {
  if (name.empty() || name.find_first_of(" \t:=,#") != std::string::npos) {
    throw ParseError(line.no, "bad letter name `" + name + "`");
  }
}

Word parse_word(const Line& line, const InvolutiveAlphabet& alphabet,
                const std::string& s) {
  Word w;
  for (const auto& tok : split_ws(s)) {
    if (tok == "1") continue;
    const auto p = alphabet.find(tok);
    if (!p) throw ParseError(line.no, "unknown letter `" + tok + "`");
    w.push_back(*p);
  }
  return w;
}

PGeneratedMonoid parse_monoid_lines(const Lines& lines) {
  enum class Mode { kNone, kConcrete, kAbstract } mode = Mode::kNone;
  Line header{0, {}};
  std::size_t n = 0;
  std::vector<std::string> names;
  std::vector<Line> gen_lines;
  std::vector<std::vector<std::pair<Point, Point>>> pairs;
  std::vector<Element> gen_index;
  std::vector<std::optional<std::vector<std::size_t>>> rows;
  std::vector<std::pair<Line, std::pair<std::string, std::string>>> invs;
  std::vector<std::pair<Line, std::pair<std::size_t, std::string>>> name_lines;

  for (const auto& line : lines) {
    const auto [key, rest] = head(line.text);
    if (key == "carrier" || key == "table") {
      if (mode != Mode::kNone) {
        throw ParseError(line.no, "second `carrier`/`table` header");
      }
      mode = key == "carrier" ? Mode::kConcrete : Mode::kAbstract;
      header = line;
      n = parse_number(line, rest);
      if (mode == Mode::kAbstract) rows.assign(n, std::nullopt);
    } else if (key == "gen") {
      if (mode == Mode::kNone) {
        throw ParseError(line.no, "`gen` before `carrier` or `table`");
      }
      if (mode == Mode::kConcrete) {
        auto [name, maps] = split_at(line, rest, ':');
        check_name(line, name);
        std::vector<std::pair<Point, Point>> ps;
        std::istringstream in(maps);
        std::string item;
        while (std::getline(in, item, ',')) {
          item = trim(item);
          if (item.empty()) continue;
          const auto arrow = item.find("->");
          if (arrow == std::string::npos) {
            throw ParseError(line.no, "expected `i->j`, got `" + item + "`");
          }
          ps.emplace_back(
              static_cast<Point>(parse_number(line, trim(item.substr(0, arrow)))),
              static_cast<Point>(
                  parse_number(line, trim(item.substr(arrow + 2)))));
        }
        names.push_back(name);
        pairs.push_back(std::move(ps));
      } else {
        auto [name, idx] = split_at(line, rest, '=');
        check_name(line, name);
        const std::size_t x = parse_number(line, idx);
        if (x >= n) throw ParseError(line.no, "generator index out of range");
        names.push_back(name);
        gen_index.push_back(static_cast<Element>(x));
      }
      gen_lines.push_back(line);
    } else if (key == "mul") {
      if (mode != Mode::kAbstract) {
        throw ParseError(line.no, "`mul` outside a `table` block");
      }
      auto [row, entries] = split_at(line, rest, ':');
      const std::size_t r = parse_number(line, row);
      if (r >= n) throw ParseError(line.no, "row index out of range");
      if (rows[r]) throw ParseError(line.no, "row given twice");
      auto vals = parse_numbers(line, entries);
      if (vals.size() != n) {
        throw ParseError(line.no, "expected " + std::to_string(n) +
                                      " entries, got " +
                                      std::to_string(vals.size()));
      }
      for (auto v : vals) {
        if (v >= n) throw ParseError(line.no, "entry out of range");
      }
      rows[r] = std::move(vals);
    } else if (key == "inv") {
      const auto toks = split_ws(rest);
      if (toks.size() != 2) throw ParseError(line.no, "expected `inv a b`");
      invs.push_back({line, {toks[0], toks[1]}});
    } else if (key == "name") {
      if (mode != Mode::kAbstract) {
        throw ParseError(line.no, "`name` outside a `table` block");
      }
      auto [idx, word] = split_at(line, rest, ':');
      name_lines.push_back({line, {parse_number(line, idx), word}});
    } else {
      throw ParseError(line.no, "unknown directive `" + key + "`");
    }
  }
  if (mode == Mode::kNone) {
    throw ParseError(lines.empty() ? 1 : lines.back().no,
                     "missing `carrier` or `table`");
  }

  std::map<std::string, Letter> index;
  for (Letter p = 0; p < names.size(); ++p) {
    if (!index.emplace(names[p], p).second) {
      throw ParseError(gen_lines[p].no, "letter `" + names[p] + "` repeated");
    }
  }
  std::vector<Letter> inverse(names.size(), kNoElement);
  for (const auto& [line, ab] : invs) {
    const auto a = index.find(ab.first), b = index.find(ab.second);
    if (a == index.end() || b == index.end()) {
      throw ParseError(line.no, "`inv` names an unknown letter");
    }
    if (inverse[a->second] != kNoElement || inverse[b->second] != kNoElement) {
      throw ParseError(line.no, "letter paired twice");
    }
    inverse[a->second] = b->second;
    inverse[b->second] = a->second;
  }
  for (Letter p = 0; p < names.size(); ++p) {
    if (inverse[p] == kNoElement) {
      throw ParseError(gen_lines[p].no,
                       "letter `" + names[p] + "` has no `inv` line");
    }
  }
  InvolutiveAlphabet alphabet(inverse, names);

  try {
    if (mode == Mode::kConcrete) {
      std::vector<PartialBijection> maps;
      for (Letter p = 0; p < names.size(); ++p) {
        try {
          maps.push_back(PartialBijection::from_pairs(Carrier{n}, pairs[p]));
        } catch (const Error& e) {
          throw ParseError(gen_lines[p].no, e.what());
        }
      }
      return PGeneratedMonoid::from_letter_maps(alphabet, Carrier{n}, maps);
    }
    std::vector<Element> mul;
    mul.reserve(n * n);
    for (std::size_t r = 0; r < n; ++r) {
      if (!rows[r]) {
        throw ParseError(header.no, "missing `mul " + std::to_string(r) + "`");
      }
      for (auto v : *rows[r]) mul.push_back(static_cast<Element>(v));
    }
    auto monoid = std::make_shared<const InverseMonoid>(
        InverseMonoid::from_semigroup(
            InverseSemigroup::from_mul_table(n, std::move(mul))));
    PGeneratedMonoid m(alphabet, monoid, gen_index);
    for (const auto& [line, named] : name_lines) {
      if (named.first >= n) throw ParseError(line.no, "name out of range");
      if (eval_word(m, parse_word(line, alphabet, named.second)) !=
          named.first) {
        throw ParseError(line.no, "word does not evaluate to element " +
                                      std::to_string(named.first));
      }
    }
    return m;
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(header.no, e.what());
  }
}

std::string monoid_body(const PGeneratedMonoid& m) {
  const auto& mm = *m.monoid();
  const auto& a = m.alphabet();
  std::ostringstream out;
  out << "table " << mm.size() << "\n";
  for (Element x = 0; x < mm.size(); ++x) {
    out << "mul " << x << ":";
    for (Element y = 0; y < mm.size(); ++y) out << " " << mm.mul(x, y);
    out << "\n";
  }
  for (Letter p = 0; p < a.size(); ++p) {
    out << "gen " << a.name(p) << " = " << m.gen(p) << "\n";
  }
  for (Letter p : a.orbit_representatives()) {
    out << "inv " << a.name(p) << " " << a.name(a.inverse(p)) << "\n";
  }
  for (Element x = 0; x < mm.size(); ++x) {
    out << "name " << x << ": " << format_word(a, m.witness(x)) << "\n";
  }
  return out.str();
}

struct GraphParts {
  GraphFile file;
  std::optional<Line> group_line;
  std::size_t degree = 0;
  std::map<EdgeId, std::pair<Line, std::vector<std::size_t>>> labels;
};

GraphParts parse_graph_lines(const Lines& lines, bool allow_labels) {
  GraphParts parts;
  std::optional<std::size_t> vertices;
  std::map<EdgeId, std::pair<Line, std::pair<Vertex, Vertex>>> edges;
  std::vector<std::pair<Line, std::pair<EdgeId, EdgeId>>> invs;
  std::vector<std::pair<Line, std::string>> symmetry_lines;
  for (const auto& line : lines) {
    const auto [key, rest] = head(line.text);
    if (key == "vertices") {
      if (vertices) throw ParseError(line.no, "`vertices` given twice");
      vertices = parse_number(line, rest);
    } else if (key == "edge") {
      auto [id, ends] = split_at(line, rest, ':');
      const auto e = static_cast<EdgeId>(parse_number(line, id));
      const auto arrow = ends.find("->");
      if (arrow == std::string::npos) {
        throw ParseError(line.no, "expected `edge id: u -> v`");
      }
      const auto u = parse_number(line, trim(ends.substr(0, arrow)));
      const auto v = parse_number(line, trim(ends.substr(arrow + 2)));
      if (!edges.emplace(e, std::pair{line, std::pair{static_cast<Vertex>(u),
                                                      static_cast<Vertex>(v)}})
               .second) {
        throw ParseError(line.no, "edge " + std::to_string(e) + " repeated");
      }
    } else if (key == "einv") {
      const auto ids = parse_numbers(line, rest);
      if (ids.size() != 2) throw ParseError(line.no, "expected `einv a b`");
      invs.push_back({line, {static_cast<EdgeId>(ids[0]),
                             static_cast<EdgeId>(ids[1])}});
    } else if (key == "symmetry") {
      symmetry_lines.push_back({line, rest});
    } else if (allow_labels && key == "group") {
      if (parts.group_line) throw ParseError(line.no, "`group` given twice");
      parts.group_line = line;
      parts.degree = parse_number(line, rest);
      if (parts.degree == 0) throw ParseError(line.no, "degree must be >= 1");
    } else if (allow_labels && key == "label") {
      auto [id, images] = split_at(line, rest, ':');
      const auto e = static_cast<EdgeId>(parse_number(line, id));
      if (!parts.labels.emplace(e, std::pair{line, parse_numbers(line, images)})
               .second) {
        throw ParseError(line.no, "label of edge repeated");
      }
    } else {
      throw ParseError(line.no, "unknown directive `" + key + "`");
    }
  }
  const std::size_t last = lines.empty() ? 1 : lines.back().no;
  if (!vertices) throw ParseError(last, "missing `vertices`");
  const std::size_t m = edges.size();
  std::vector<Vertex> src(m), tgt(m);
  std::vector<EdgeId> einv(m, kNoElement);
  for (const auto& [e, entry] : edges) {
    if (e >= m) {
      throw ParseError(entry.first.no, "edge ids must be 0.." +
                                           std::to_string(m - 1));
    }
    src[e] = entry.second.first;
    tgt[e] = entry.second.second;
  }
  for (const auto& [line, ab] : invs) {
    const auto [a, b] = ab;
    if (a >= m || b >= m) throw ParseError(line.no, "unknown edge");
    if (einv[a] != kNoElement || einv[b] != kNoElement) {
      throw ParseError(line.no, "edge paired twice");
    }
    einv[a] = b;
    einv[b] = a;
  }
  for (const auto& [e, entry] : edges) {
    if (einv[e] == kNoElement) {
      throw ParseError(entry.first.no, "edge has no `einv` line");
    }
  }
  try {
    parts.file.graph = MultiDigraph(*vertices, src, tgt, einv);
  } catch (const Error& e) {
    throw ParseError(last, e.what());
  }
  for (const auto& [line, text] : symmetry_lines) {
    auto bar = text.find('|');
    if (bar == std::string::npos) {
      throw ParseError(line.no, "expected `symmetry: vertices | edges`");
    }
    GraphSymmetry phi;
    for (auto v : parse_numbers(line, text.substr(0, bar))) {
      phi.vertex_map.push_back(static_cast<Vertex>(v));
    }
    for (auto e : parse_numbers(line, text.substr(bar + 1))) {
      phi.edge_map.push_back(static_cast<EdgeId>(e));
    }
    if (!is_graph_symmetry(parts.file.graph, phi)) {
      throw ParseError(line.no, "not a symmetry of the graph");
    }
    parts.file.symmetries.push_back(std::move(phi));
  }
  return parts;
}

std::string graph_body(const MultiDigraph& g,
                       const std::vector<GraphSymmetry>& symmetries) {
  std::ostringstream out;
  out << "vertices " << g.num_vertices() << "\n";
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    out << "edge " << e << ": " << g.src(e) << " -> " << g.tgt(e) << "\n";
  }
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (g.einv(e) >= e) out << "einv " << e << " " << g.einv(e) << "\n";
  }
  for (const auto& phi : symmetries) {
    out << "symmetry:";
    for (Vertex v : phi.vertex_map) out << " " << v;
    out << " |";
    for (EdgeId e : phi.edge_map) out << " " << e;
    out << "\n";
  }
  return out.str();
}

}  // namespace

PGeneratedMonoid parse_monoid(std::string_view text) {
  return parse_monoid_lines(read_lines(text));
}

std::string dump_monoid(const PGeneratedMonoid& m) {
  return "format=1\n" + monoid_body(m);
}

CoverDump parse_cover(std::string_view text) {
  const Lines lines = read_lines(text);
  std::optional<PGeneratedMonoid> source, target;
  std::optional<std::pair<Line, std::vector<std::size_t>>> theta;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const Line& line = lines[i];
    const auto [key, rest] = head(line.text);
    if (key == "begin") {
      if (rest != "source" && rest != "target") {
        throw ParseError(line.no, "expected `begin source` or `begin target`");
      }
      auto& slot = rest == "source" ? source : target;
      if (slot) throw ParseError(line.no, "section repeated");
      Lines body;
      std::size_t j = i + 1;
      while (j < lines.size() && lines[j].text != "end") body.push_back(lines[j++]);
      if (j == lines.size()) throw ParseError(line.no, "missing `end`");
      slot = parse_monoid_lines(body);
      i = j;
    } else if (key == "theta") {
      theta = std::pair{line, parse_numbers(line, rest)};
    } else {
      throw ParseError(line.no, "unknown directive `" + key + "`");
    }
  }
  const std::size_t last = lines.empty() ? 1 : lines.back().no;
  if (!source || !target || !theta) {
    throw ParseError(last, "a cover needs source, target and theta");
  }
  const auto& [line, images] = *theta;
  if (images.size() != source->size()) {
    throw ParseError(line.no, "theta needs one image per source element");
  }
  std::vector<Element> map;
  for (auto y : images) {
    if (y >= target->size()) throw ParseError(line.no, "image out of range");
    map.push_back(static_cast<Element>(y));
  }
  Homomorphism h{source->monoid(), target->monoid(), std::move(map)};
  return CoverDump{std::move(*source), std::move(*target), std::move(h)};
}

std::string dump_cover(const PGeneratedMonoid& source,
                       const PGeneratedMonoid& target,
                       const Homomorphism& theta) {
  std::ostringstream out;
  out << "format=1\nbegin source\n"
      << monoid_body(source) << "end\nbegin target\n"
      << monoid_body(target) << "end\ntheta:";
  for (Element y : theta.map) out << " " << y;
  out << "\n";
  return out.str();
}

GraphFile parse_graph(std::string_view text) {
  return parse_graph_lines(read_lines(text), false).file;
}

GroupoidFile parse_groupoid(std::string_view text) {
  const Lines lines = read_lines(text);
  GraphParts parts = parse_graph_lines(lines, true);
  const MultiDigraph& g = parts.file.graph;
  const std::size_t last = lines.empty() ? 1 : lines.back().no;
  if (!parts.group_line && !parts.labels.empty()) {
    throw ParseError(parts.labels.begin()->second.first.no,
                     "`label` without `group`");
  }
  const std::size_t degree = parts.group_line ? parts.degree : 1;
  const Carrier carrier{degree};
  std::vector<std::optional<Permutation>> perms(g.num_edges());
  for (const auto& [e, entry] : parts.labels) {
    const auto& [line, images] = entry;
    if (e >= g.num_edges()) throw ParseError(line.no, "label of unknown edge");
    try {
      std::vector<Point> pts(images.begin(), images.end());
      if (pts.size() != degree) {
        throw Error("expected " + std::to_string(degree) + " images");
      }
      perms[e] = Permutation(PartialBijection(carrier, std::move(pts)));
    } catch (const Error& err) {
      throw ParseError(line.no, err.what());
    }
  }
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (perms[e]) continue;
    if (const auto& partner = perms[g.einv(e)]) {
      perms[e] = invert(*partner);
    } else if (!parts.group_line) {
      perms[e] = Permutation::identity(carrier);
    } else {
      throw ParseError(last, "edge " + std::to_string(e) + " has no label");
    }
  }
  std::vector<PartialBijection> maps;
  for (const auto& p : perms) maps.push_back(p->as_partial());
  const std::size_t group_line = parts.group_line ? parts.group_line->no : last;
  try {
    auto k = std::make_shared<const InverseMonoid>(
        close_generators(carrier, maps));
    GroupLabeling labeling{k, {}};
    for (const auto& p : maps) labeling.label.push_back(*k->find(p));
    Groupoid h = Groupoid::from_group_labeling(g, std::move(labeling));
    return GroupoidFile{std::move(parts.file), std::move(h)};
  } catch (const Error& e) {
    throw ParseError(group_line, e.what());
  }
}

std::string dump_graph(const MultiDigraph& g,
                       const std::vector<GraphSymmetry>& symmetries) {
  return "format=1\n" + graph_body(g, symmetries);
}

std::string dump_groupoid(const Groupoid& h,
                          const std::vector<GraphSymmetry>& symmetries) {
  const auto& labeling = *h.labeling();
  const auto& k = *labeling.group;
  const std::size_t degree =
      k.has_realization() ? k.realization().front().degree() : 1;
  std::ostringstream out;
  out << "format=1\n" << graph_body(h.shape(), symmetries);
  out << "group " << degree << "\n";
  for (EdgeId e = 0; e < h.shape().num_edges(); ++e) {
    out << "label " << e << ":";
    for (Point x = 0; x < degree; ++x) {
      out << " " << (k.has_realization() ? k.realization()[labeling.label[e]](x)
                                         : x);
    }
    out << "\n";
  }
  return out.str();
}

std::string fnv1a_hex(std::string_view data) {
  std::uint64_t hash = 0xcbf29ce484222325ull;
  for (unsigned char c : data) {
    hash ^= c;
    hash *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(hash));
  return buf;
}

}  // namespace fcover::io
