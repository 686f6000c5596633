#include "vcb/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "vcb/error.hpp"

namespace vcb {

namespace {

[[noreturn]] void parse_fail(int line, const std::string& what) {
  fail(Errc::ParseError, "line " + std::to_string(line) + ": " + what);
}

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> tokens;
  std::string token;
  while (in >> token) tokens.push_back(token);
  return tokens;
}

}  // namespace

Instance parse_instance(std::istream& in) {
  Instance instance;
  bool have_header = false;
  int want_vertices = 0;
  int want_edges = 0;
  std::vector<std::optional<Rational>> weights;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::tuple<int, int, Rational>> duals;
  std::vector<int> set_line;

  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = tokens_of(line);
    if (tokens.empty() || tokens[0] == "c") continue;
    const std::string& kind = tokens[0];

    if (kind == "p") {
      if (have_header) parse_fail(line_no, "duplicate header");
      if (tokens.size() != 4 || tokens[1] != "vcb")
        parse_fail(line_no, "expected 'p vcb <n> <m>'");
      try {
        want_vertices = std::stoi(tokens[2]);
        want_edges = std::stoi(tokens[3]);
      } catch (const std::exception&) {
        parse_fail(line_no, "bad header counts");
      }
      if (want_vertices < 0 || want_edges < 0)
        parse_fail(line_no, "negative header counts");
      weights.assign(want_vertices, std::nullopt);
      have_header = true;
      continue;
    }
    if (!have_header) parse_fail(line_no, "content before the header");

    const auto vertex_field = [&](const std::string& token) {
      int id = 0;
      try {
        id = std::stoi(token);
      } catch (const std::exception&) {
        parse_fail(line_no, "bad vertex id '" + token + "'");
      }
      if (id < 1 || id > want_vertices)
        parse_fail(line_no, "vertex id out of range");
      return id - 1;
    };

    if (kind == "v") {
      if (tokens.size() != 3) parse_fail(line_no, "expected 'v <id> <weight>'");
      const int id = vertex_field(tokens[1]);
      const auto weight = parse_rational(tokens[2]);
      if (!weight || *weight < 0) parse_fail(line_no, "bad vertex weight");
      if (weights[id]) parse_fail(line_no, "duplicate vertex weight");
      weights[id] = *weight;
    } else if (kind == "e") {
      if (tokens.size() != 3) parse_fail(line_no, "expected 'e <u> <v>'");
      const int u = vertex_field(tokens[1]);
      const int v = vertex_field(tokens[2]);
      if (u == v) parse_fail(line_no, "self-loop");
      edges.emplace_back(u, v);
    } else if (kind == "s") {
      if (!set_line.empty()) parse_fail(line_no, "duplicate set line");
      if (tokens.size() == 1) parse_fail(line_no, "empty set line");
      for (std::size_t i = 1; i < tokens.size(); ++i)
        set_line.push_back(vertex_field(tokens[i]));
      instance.s = std::vector<VertexId>(set_line.begin(), set_line.end());
    } else if (kind == "y") {
      if (tokens.size() != 4) parse_fail(line_no, "expected 'y <u> <v> <value>'");
      const int u = vertex_field(tokens[1]);
      const int v = vertex_field(tokens[2]);
      const auto value = parse_rational(tokens[3]);
      if (!value || *value < 0) parse_fail(line_no, "bad dual value");
      duals.emplace_back(u, v, *value);
    } else {
      parse_fail(line_no, "unknown line kind '" + kind + "'");
    }
  }

  if (!have_header) parse_fail(line_no, "missing header");
  if (static_cast<int>(edges.size()) != want_edges)
    parse_fail(line_no, "edge count does not match header");

  for (int v = 0; v < want_vertices; ++v) {
    instance.graph.add_vertex(weights[v].value_or(Rational(1)));
  }
  for (const auto& [u, v] : edges) instance.graph.add_edge(u, v);

  if (!duals.empty()) {
    // Bind each y line to the next unbound edge with the same endpoints.
    std::map<std::pair<int, int>, std::vector<EdgeId>> edges_by_pair;
    for (EdgeId e = 0; e < instance.graph.edge_count(); ++e) {
      auto [a, b] = instance.graph.ends(e);
      if (a > b) std::swap(a, b);
      edges_by_pair[{a, b}].push_back(e);
    }
    std::map<std::pair<int, int>, std::size_t> used;
    std::vector<Rational> values(instance.graph.edge_count(), 0);
    for (auto& [u, v, value] : duals) {
      auto key = std::make_pair(std::min(u, v), std::max(u, v));
      const auto at = edges_by_pair.find(key);
      std::size_t& index = used[key];
      if (at == edges_by_pair.end() || index >= at->second.size())
        fail(Errc::ParseError, "dual line without a matching edge");
      values[at->second[index++]] = std::move(value);
    }
    instance.dual = make_dual(instance.graph, std::move(values));
  }
  return instance;
}

Instance parse_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::ParseError, "cannot open '" + path + "'");
  return parse_instance(in);
}

Instance parse_instance_text(const std::string& text) {
  std::istringstream in(text);
  return parse_instance(in);
}

void serialize_instance(const Instance& instance, std::ostream& out) {
  const Graph& g = instance.graph;
  out << "p vcb " << g.vertex_count() << " " << g.edge_count() << "\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    out << "v " << v + 1 << " " << g.weight(v) << "\n";
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto [a, b] = g.ends(e);
    out << "e " << a + 1 << " " << b + 1 << "\n";
  }
  if (instance.s) {
    auto sorted = canonical_set(g, *instance.s);
    out << "s";
    for (VertexId v : sorted) out << " " << v + 1;
    out << "\n";
  }
  if (instance.dual) {
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      const auto [a, b] = g.ends(e);
      out << "y " << a + 1 << " " << b + 1 << " " << instance.dual->values[e]
          << "\n";
    }
  }
}

std::string serialize_instance(const Instance& instance) {
  std::ostringstream out;
  serialize_instance(instance, out);
  return out.str();
}

}  // namespace vcb
