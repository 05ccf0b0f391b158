#include "polarweb/input.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace polarweb {

namespace {

struct Field {
  std::string value;
  int line = 0;
  int column = 0;  // 1-based column of the value
};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

MPoly poly_field(const Field& f) {
  try {
    return parse_poly(f.value, f.line);
  } catch (const ParseError& e) {
    throw ParseError(e.message(), f.line, e.column() + f.column - 1);
  }
}

}  // namespace

std::string kind_name(InputKind kind) {
  switch (kind) {
    case InputKind::web:
      return "web";
    case InputKind::foliation:
      return "foliation";
    case InputKind::curve:
      return "curve";
  }
  return "web";
}

InputData parse_input(const std::string& text) {
  std::map<std::string, Field> fields;
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = raw.substr(0, raw.find('#'));
    std::size_t start = 0;
    while (start < line.size() && is_space(line[start])) ++start;
    if (start == line.size()) continue;
    const std::size_t colon = line.find(':', start);
    if (colon == std::string::npos) {
      throw ParseError("expected 'key: value'", line_no, static_cast<int>(start) + 1);
    }
    std::size_t key_end = colon;
    while (key_end > start && is_space(line[key_end - 1])) --key_end;
    const std::string key = line.substr(start, key_end - start);
    if (key != "type" && key != "form" && key != "A" && key != "B" && key != "curve") {
      throw ParseError("unknown key '" + key + "'", line_no, static_cast<int>(start) + 1);
    }
    if (fields.count(key)) throw ParseError("duplicate key '" + key + "'", line_no, static_cast<int>(start) + 1);
    std::size_t vstart = colon + 1;
    while (vstart < line.size() && is_space(line[vstart])) ++vstart;
    std::size_t vend = line.size();
    while (vend > vstart && is_space(line[vend - 1])) --vend;
    if (vstart == vend) throw ParseError("empty value for '" + key + "'", line_no, static_cast<int>(colon) + 2);
    fields[key] = {line.substr(vstart, vend - vstart), line_no, static_cast<int>(vstart) + 1};
  }

  if (!fields.count("type")) throw ParseError("missing 'type:' line", line_no, 1);
  const Field& type = fields["type"];
  InputData out;
  const auto forbid = [&](const std::string& key, const std::string& why) {
    if (fields.count(key)) throw ParseError("'" + key + "' " + why, fields[key].line, 1);
  };
  const auto wrap = [](const Field& f, auto&& build) {
    try {
      return build();
    } catch (const WebError& e) {
      throw ParseError(e.what(), f.line, f.column);
    }
  };

  if (type.value == "web") {
    out.kind = InputKind::web;
    forbid("A", "is only used for foliations");
    forbid("B", "is only used for foliations");
    forbid("curve", "is only used for curves");
    if (!fields.count("form")) throw ParseError("a web needs a 'form:' line", type.line, 1);
    const Field& f = fields["form"];
    const MPoly form = poly_field(f);
    MPoly removed;
    out.web = wrap(f, [&] { return SymWeb::from_form(form, &removed); });
    if (!removed.is_constant()) {
      out.warnings.push_back("line " + std::to_string(f.line) + ": coefficients share the factor " + removed.str() +
                             "; divided out");
    }
  } else if (type.value == "foliation") {
    out.kind = InputKind::foliation;
    forbid("curve", "is only used for curves");
    const bool has_form = fields.count("form") > 0;
    const bool has_field = fields.count("A") > 0 || fields.count("B") > 0;
    if (has_form == has_field) {
      throw ParseError("a foliation needs exactly one of 'form:' or the pair 'A:'/'B:'", type.line, 1);
    }
    Foliation fol;
    int line = 0;
    if (has_form) {
      const Field& f = fields["form"];
      const MPoly form = poly_field(f);
      line = f.line;
      fol = wrap(f, [&] {
        MPoly removed;
        const SymWeb w = SymWeb::from_form(form, &removed);
        if (w.k() != 1) throw WebError("a foliation form must have degree 1 in dx, dy");
        Foliation g = Foliation::from_web(w);
        g.removed = removed;
        return g;
      });
    } else {
      if (!fields.count("A") || !fields.count("B")) {
        throw ParseError("'A:' and 'B:' must both be given", type.line, 1);
      }
      const Field& fa = fields["A"];
      const MPoly A = poly_field(fa);
      const MPoly B = poly_field(fields["B"]);
      line = fa.line;
      fol = wrap(fa, [&] { return Foliation::from_field(A, B); });
    }
    if (!fol.removed.is_constant()) {
      out.warnings.push_back("line " + std::to_string(line) + ": A and B share the factor " + fol.removed.str() +
                             "; saturated to A = " + fol.A.str() + ", B = " + fol.B.str());
    }
    out.web = fol.web;
    out.foliation = fol;
  } else if (type.value == "curve") {
    out.kind = InputKind::curve;
    forbid("form", "is only used for webs and foliations");
    forbid("A", "is only used for foliations");
    forbid("B", "is only used for foliations");
    if (!fields.count("curve")) throw ParseError("a curve needs a 'curve:' line", type.line, 1);
    const Field& f = fields["curve"];
    const MPoly c = poly_field(f);
    wrap(f, [&] { return PlaneCurve::from_poly(c); });
    if (c.is_constant()) throw ParseError("curve polynomial is constant", f.line, f.column);
    out.curve = c.trimmed();
  } else {
    throw ParseError("unknown type '" + type.value + "' (expected web, foliation or curve)", type.line, type.column);
  }
  return out;
}

InputData read_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path, 0, 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_input(buf.str());
}

}  // namespace polarweb
