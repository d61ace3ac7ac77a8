#include "hybnet/newick.hpp"

#include <cctype>
#include <map>
#include <vector>

#include "hybnet/errors.hpp"

namespace hybnet {

namespace {

bool is_label_char(char c) {
  return !std::isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')' && c != ',' && c != ';' &&
         c != ':' && c != '#' && c != '[' && c != ']';
}

struct Position {
  std::size_t line;
  std::size_t column;
};

// Recursive-descent reader for a single Newick line.
class LineParser {
 public:
  LineParser(std::string_view text, std::size_t line, Multigraph& g, std::map<Label, Position>& seen)
      : text_(text), line_(line), g_(g), seen_(seen) {}

  void parse_tree() {
    skip_ws();
    const std::size_t root_col = pos_ + 1;
    std::vector<VertexId> children;
    VertexId root = subtree(&children, true);
    skip_length();
    skip_ws();
    expect(';');
    skip_ws();
    if (pos_ < text_.size()) fail(Errc::SyntaxError, "unexpected text after ';'");
    if (g_.labeled(root)) return;
    if (children.size() == 1) throw ParseError(Errc::NonBinary, line_, root_col, "root has a single child");
    if (children.size() > 3)
      throw ParseError(Errc::NonBinary, line_, root_col,
                       "root has " + std::to_string(children.size()) + " children");
    if (children.size() == 2) g_.suppress(root);
  }

 private:
  [[noreturn]] void fail(Errc code, const std::string& msg) const {
    throw ParseError(code, line_, pos_ + 1, msg);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    if (pos_ >= text_.size()) fail(Errc::SyntaxError, std::string("expected '") + c + "' before end of line");
    if (text_[pos_] != c) fail(Errc::SyntaxError, std::string("expected '") + c + "', found '" + text_[pos_] + "'");
    ++pos_;
  }

  std::string name() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && is_label_char(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip_length() {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == ':') {
      ++pos_;
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.' ||
                                     text_[pos_] == '-' || text_[pos_] == '+' || text_[pos_] == 'e' ||
                                     text_[pos_] == 'E'))
        ++pos_;
      if (start == pos_) fail(Errc::SyntaxError, "expected branch length after ':'");
    }
  }

  VertexId subtree(std::vector<VertexId>* root_children, bool is_root) {
    skip_ws();
    if (pos_ >= text_.size()) fail(Errc::SyntaxError, "unexpected end of line");
    if (text_[pos_] == '(') {
      const std::size_t open_col = pos_ + 1;
      ++pos_;
      VertexId v = g_.add_vertex();
      std::vector<VertexId> kids;
      for (;;) {
        VertexId c = subtree(nullptr, false);
        skip_length();
        g_.add_edge(v, c);
        kids.push_back(c);
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == ',') {
          ++pos_;
          continue;
        }
        expect(')');
        break;
      }
      skip_ws();
      name();  // internal node names are ignored
      if (!is_root && kids.size() != 2)
        throw ParseError(Errc::NonBinary, line_, open_col,
                         "internal node with " + std::to_string(kids.size()) + " children");
      if (root_children) *root_children = kids;
      return v;
    }
    const std::size_t col = pos_ + 1;
    std::string label = name();
    if (label.empty()) {
      if (pos_ < text_.size()) fail(Errc::SyntaxError, std::string("unexpected '") + text_[pos_] + "'");
      fail(Errc::SyntaxError, "expected a label");
    }
    auto [it, inserted] = seen_.emplace(label, Position{line_, col});
    if (!inserted)
      throw ParseError(Errc::DuplicateLabel, line_, col,
                       "label '" + label + "' already used at line " + std::to_string(it->second.line));
    return g_.add_vertex(label);
  }

  std::string_view text_;
  std::size_t line_;
  std::size_t pos_ = 0;
  Multigraph& g_;
  std::map<Label, Position>& seen_;
};

std::string_view strip_comment(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  auto hash = line.find('#');
  if (hash != std::string_view::npos) line = line.substr(0, hash);
  return line;
}

bool blank(std::string_view s) {
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

bool valid_label(std::string_view token) {
  if (token.empty()) return false;
  for (char c : token)
    if (!is_label_char(c)) return false;
  return true;
}

Forest parse_forest(std::string_view text) {
  Multigraph g;
  std::map<Label, Position> seen;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    std::string_view line = strip_comment(text.substr(start, end - start));
    if (!blank(line)) LineParser(line, line_no, g, seen).parse_tree();
    start = end + 1;
  }
  return Forest(std::move(g));
}

PhyloTree parse_tree(std::string_view text) {
  Forest f = parse_forest(text);
  auto comps = f.components();
  if (comps.size() != 1)
    throw ParseError(Errc::SyntaxError, 1, 1, "expected exactly one tree, found " + std::to_string(comps.size()));
  return comps.front();
}

std::string serialize_forest(const Forest& forest) { return canonical_form(forest); }

std::string serialize_tree(const PhyloTree& tree) { return tree.canonical() + "\n"; }

}  // namespace hybnet
