#include "hybnet/trace_io.hpp"

#include <json.hpp>

#include "hybnet/errors.hpp"
#include "hybnet/newick.hpp"

namespace hybnet {

using nlohmann::json;

namespace {

[[noreturn]] void schema(std::size_t i, const std::string& msg) {
  throw Error(Errc::SchemaError, "step " + std::to_string(i) + ": " + msg);
}

std::string label_field(const json& obj, const char* key, std::size_t i) {
  const auto& v = obj.at(key);
  if (!v.is_string()) schema(i, std::string("'") + key + "' must be a string");
  auto s = v.get<std::string>();
  if (!valid_label(s)) schema(i, std::string("'") + key + "' is not a valid label");
  return s;
}

ReductionStep parse_step(const json& obj, std::size_t i) {
  if (!obj.is_object()) schema(i, "expected an object");
  for (const auto& [key, _] : obj.items())
    if (key != "label" && key != "rule" && key != "orientation" && key != "params")
      schema(i, "unknown field '" + key + "'");
  if (!obj.contains("label")) schema(i, "missing 'label'");
  if (!obj.contains("rule")) schema(i, "missing 'rule'");

  ReductionStep s;
  s.label = label_field(obj, "label", i);
  if (!obj["rule"].is_string()) schema(i, "'rule' must be a string");
  auto rule = rule_from_string(obj["rule"].get<std::string>());
  if (!rule) schema(i, "unknown rule '" + obj["rule"].get<std::string>() + "'");
  s.rule = *rule;
  if (obj.contains("orientation")) {
    if (!obj["orientation"].is_string()) schema(i, "'orientation' must be a string");
    auto o = orientation_from_string(obj["orientation"].get<std::string>());
    if (!o) schema(i, "unknown orientation '" + obj["orientation"].get<std::string>() + "'");
    s.orientation = *o;
  }

  json params = obj.contains("params") ? obj["params"] : json::object();
  if (!params.is_object()) schema(i, "'params' must be an object");
  for (const auto& [key, _] : params.items())
    if (key != "partner" && key != "p" && key != "q" && key != "cut") schema(i, "unknown param '" + key + "'");
  if (params.contains("partner")) s.partner = label_field(params, "partner", i);
  if (params.contains("p")) s.p = label_field(params, "p", i);
  if (params.contains("q")) s.q = label_field(params, "q", i);
  if (params.contains("cut")) {
    if (!params["cut"].is_string()) schema(i, "'cut' must be a string");
    auto c = cut_from_string(params["cut"].get<std::string>());
    if (!c) schema(i, "unknown cut selector '" + params["cut"].get<std::string>() + "'");
    s.cut = *c;
  }

  const bool c2 = is_c2(s.rule);
  if (s.rule == Rule::C3) {
    if (s.partner || s.p || s.q || s.cut != Cut::None) schema(i, "C3 takes no params");
    return s;
  }
  if (!s.partner) schema(i, "missing partner for " + std::string(to_string(s.rule)));
  if (!c2) {
    if (s.p || s.q || s.cut != Cut::None) schema(i, "C1 takes only a partner");
    return s;
  }
  if (s.rule == Rule::C2b_ii && s.cut == Cut::None) s.cut = Cut::C2bEdge;
  if (s.cut == Cut::None) schema(i, "missing cut selector");
  const bool wants_p = s.rule == Rule::C2a_ii || s.rule == Rule::C2a_iii;
  const bool wants_q = s.rule == Rule::C2a_iii;
  if (wants_p != s.p.has_value()) schema(i, wants_p ? "missing 'p'" : "unexpected 'p'");
  if (wants_q != s.q.has_value()) schema(i, wants_q ? "missing 'q'" : "unexpected 'q'");
  return s;
}

std::pair<std::size_t, std::size_t> line_col(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t k = 0; k < byte && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace

ReductionTrace parse_trace(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    auto [line, col] = line_col(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError(Errc::SchemaError, line, col, "malformed JSON");
  }
  if (!doc.is_array()) throw Error(Errc::SchemaError, "trace must be a JSON array");
  ReductionTrace tr;
  for (std::size_t i = 0; i < doc.size(); ++i) tr.steps.push_back(parse_step(doc[i], i));
  return tr;
}

std::string serialize_trace(const ReductionTrace& trace) {
  json doc = json::array();
  for (const auto& s : trace.steps) {
    json params = json::object();
    if (s.partner) params["partner"] = *s.partner;
    if (s.p) params["p"] = *s.p;
    if (s.q) params["q"] = *s.q;
    if (s.cut != Cut::None) params["cut"] = std::string(to_string(s.cut));
    json step = {{"label", s.label},
                 {"rule", std::string(to_string(s.rule))},
                 {"orientation", std::string(to_string(s.orientation))}};
    if (!params.empty()) step["params"] = params;
    doc.push_back(step);
  }
  return doc.dump(2) + "\n";
}

}  // namespace hybnet
