#include "hybnet/network_io.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <vector>

#include "hybnet/errors.hpp"
#include "hybnet/newick.hpp"

namespace hybnet {

namespace {

struct Token {
  std::string text;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    out.push_back(Token{std::string(line.substr(start, i - start)), start + 1});
  }
  return out;
}

struct VertexInfo {
  std::string name;
  std::size_t line;
  std::size_t column;
  std::vector<std::size_t> nbrs;
};

}  // namespace

PseudoNetwork parse_network(std::string_view text) {
  std::vector<VertexInfo> verts;
  std::map<std::string, std::size_t> index;
  std::map<std::pair<std::size_t, std::size_t>, int> multiplicity;

  auto vertex = [&](const Token& t, std::size_t line) {
    auto [it, inserted] = index.emplace(t.text, verts.size());
    if (inserted) verts.push_back(VertexInfo{t.text, line, t.column, {}});
    return it->second;
  };

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    if (toks.size() == 1) {
      if (toks[0].text == "--") throw ParseError(Errc::SyntaxError, line_no, toks[0].column, "missing endpoints");
      vertex(toks[0], line_no);
      continue;
    }
    if (toks.size() != 3 || toks[1].text != "--" || toks[0].text == "--" || toks[2].text == "--") {
      std::size_t col = toks.size() >= 2 && toks[1].text != "--" ? toks[1].column : toks.back().column;
      throw ParseError(Errc::SyntaxError, line_no, col, "expected 'u -- v'");
    }
    if (toks[0].text == toks[2].text) throw ParseError(Errc::SyntaxError, line_no, toks[2].column, "loop edge");
    std::size_t a = vertex(toks[0], line_no);
    std::size_t b = vertex(toks[2], line_no);
    auto key = std::make_pair(std::min(a, b), std::max(a, b));
    if (++multiplicity[key] > 2)
      throw ParseError(Errc::TripleEdge, line_no, toks[0].column, "more than two parallel edges");
    verts[a].nbrs.push_back(b);
    verts[b].nbrs.push_back(a);
  }
  if (verts.empty()) throw ParseError(Errc::SyntaxError, line_no, 1, "empty network document");

  Multigraph g;
  for (const auto& v : verts) {
    const std::size_t d = v.nbrs.size();
    if (d == 2 || d > 3 || (d == 0 && verts.size() > 1))
      throw ParseError(Errc::DegreeViolation, v.line, v.column,
                       "vertex '" + v.name + "' has degree " + std::to_string(d));
    if (d <= 1 && !valid_label(v.name))
      throw ParseError(Errc::SyntaxError, v.line, v.column, "'" + v.name + "' is not a valid leaf label");
    g.add_vertex(d <= 1 ? v.name : std::string());
  }
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j : verts[i].nbrs)
      if (i < j) g.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(j));
  auto comps = g.components();
  if (comps.size() > 1) {
    // report the first vertex outside the component of vertex 0
    std::size_t bad = comps[1].front();
    throw ParseError(Errc::Disconnected, verts[bad].line, verts[bad].column,
                     "vertex '" + verts[bad].name + "' is not connected to '" + verts[0].name + "'");
  }
  return PseudoNetwork(std::move(g));
}

std::string serialize_network(const PseudoNetwork& net) {
  const auto& g = net.graph();
  auto labels = net.labels();
  std::set<std::string> taken(labels.begin(), labels.end());
  std::string prefix = "v";
  std::vector<VertexId> internal;
  for (VertexId v : g.vertices())
    if (!g.labeled(v)) internal.push_back(v);
  for (;;) {
    bool clash = false;
    for (std::size_t i = 0; i < internal.size() && !clash; ++i)
      clash = taken.count(prefix + std::to_string(i + 1)) > 0;
    if (!clash) break;
    prefix = "_" + prefix;
  }
  std::vector<std::string> names(g.id_bound());
  for (std::size_t i = 0; i < internal.size(); ++i) names[internal[i]] = prefix + std::to_string(i + 1);
  for (VertexId v : g.vertices())
    if (g.labeled(v)) names[v] = g.label(v);

  if (g.vertex_count() == 1) return names[g.vertices().front()] + "\n";
  std::vector<std::pair<std::string, std::string>> lines;
  for (auto [u, v] : g.edges()) {
    auto a = names[u];
    auto b = names[v];
    if (b < a) std::swap(a, b);
    lines.emplace_back(a, b);
  }
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const auto& [a, b] : lines) out += a + " -- " + b + "\n";
  return out;
}

}  // namespace hybnet
