#include "hcurve/json_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>

#include "hcurve/errors.hpp"

namespace hcurve::io {

namespace {

const json& field(const json& j, const char* name) {
  if (!j.is_object()) throw ParseError("expected a JSON object");
  const auto it = j.find(name);
  if (it == j.end()) throw ParseError(std::string("missing field \"") + name + "\"");
  return *it;
}

double number(const json& j, const char* what) {
  if (!j.is_number()) throw ParseError(std::string(what) + " must be a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw ParseError(std::string(what) + " must be finite");
  return v;
}

ScalarFn expression(const json& j, const char* name) {
  const json& v = field(j, name);
  if (v.is_number()) return ScalarFn::constant(number(v, name));
  if (!v.is_string()) throw ParseError(std::string("field \"") + name + "\" must be an expression string");
  return ScalarFn::parse(v.get<std::string>());
}

Interval range(const json& j) {
  const json& r = field(j, "range");
  if (!r.is_array() || r.size() != 2) throw ParseError("range must be [a, b]");
  const Interval iv{number(r[0], "range start"), number(r[1], "range end")};
  if (!(iv.hi > iv.lo)) throw ParseError("range must satisfy a < b");
  return iv;
}

}  // namespace

H1Point parse_point(const json& j) {
  if (!j.is_array() || j.size() != 3) throw ParseError("a point is an array [x, y, z]");
  return {number(j[0], "x"), number(j[1], "y"), number(j[2], "z")};
}

json to_json(const H1Point& p) { return json::array({p.x, p.y, p.z}); }

CurveSpec parse_curve_spec(const json& j) {
  const json& type = field(j, "type");
  if (!type.is_string()) throw ParseError("\"type\" must be a string");
  const std::string t = type.get<std::string>();
  if (t == "analytic") return AnalyticSpec{expression(j, "x"), expression(j, "y"), expression(j, "z"), range(j)};
  if (t == "samples") {
    const json& data = field(j, "data");
    if (!data.is_array()) throw ParseError("\"data\" must be an array of [u, x, y, z] rows");
    SamplesSpec s;
    for (const auto& row : data) {
      if (!row.is_array() || row.size() != 4) throw ParseError("each sample row must be [u, x, y, z]");
      s.data.push_back({number(row[0], "u"), number(row[1], "x"), number(row[2], "y"), number(row[3], "z")});
    }
    return s;
  }
  if (t == "intrinsic") {
    const Interval iv = range(j);
    if (iv.lo != 0.0) throw ParseError("intrinsic range must start at 0");
    const json& init = field(j, "initial");
    return IntrinsicSpec{{expression(j, "kappa"), expression(j, "tau")},
                         iv.hi,
                         {parse_point(field(init, "point")), number(field(init, "heading"), "heading")}};
  }
  throw ParseError("unknown curve type \"" + t + "\"");
}

json to_json(const CurveSpec& spec) {
  return std::visit(
      [](const auto& s) -> json {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, AnalyticSpec>) {
          return {{"type", "analytic"},
                  {"x", s.x.text()},
                  {"y", s.y.text()},
                  {"z", s.z.text()},
                  {"range", {s.range.lo, s.range.hi}}};
        } else if constexpr (std::is_same_v<T, SamplesSpec>) {
          json rows = json::array();
          for (const auto& r : s.data) rows.push_back({r.u, r.x, r.y, r.z});
          return {{"type", "samples"}, {"data", rows}};
        } else {
          return {{"type", "intrinsic"},
                  {"kappa", s.invariants.kappa.text()},
                  {"tau", s.invariants.tau.text()},
                  {"range", {0.0, s.length}},
                  {"initial", {{"point", to_json(s.initial.point)}, {"heading", s.initial.heading}}}};
        }
      },
      spec);
}

HorizontalCurve realize(const CurveSpec& spec, double step) {
  return std::visit(
      [step](const auto& s) -> HorizontalCurve {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, AnalyticSpec>) {
          return reparam_horizontal(ParamCurve::analytic(s.x, s.y, s.z, s.range), step);
        } else if constexpr (std::is_same_v<T, SamplesSpec>) {
          return reparam_horizontal(ParamCurve::sampled(s.data), step);
        } else {
          return reconstruct(s.invariants, s.initial, s.length, step);
        }
      },
      spec);
}

SurfaceOfRevolution parse_surface(const json& j) {
  return SurfaceOfRevolution::from_expressions(expression(j, "g"), expression(j, "f"), range(j));
}

json to_json(const MembershipReport& r) {
  return {{"member", r.member}, {"max_defect", r.max_defect}, {"worst_s", r.worst_s}};
}

json to_json(const PositionClass& c) {
  json cand = json::array();
  for (auto t : c.candidates) cand.push_back(tag_name(t));
  return {{"tag", tag_name(c.tag)}, {"witness", c.witness}, {"residuals", c.residuals}, {"candidates", cand}};
}

json parse_document(std::istream& in, const std::string& name) {
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(name + ": " + e.what(), e.byte);
  }
}

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return parse_document(in, path);
}

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

void emit(const json& j, std::string& out, int depth) {
  const std::string pad(2 * static_cast<std::size_t>(depth + 1), ' ');
  const std::string close(2 * static_cast<std::size_t>(depth), ' ');
  switch (j.type()) {
    case json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (const auto& [k, v] : j.items()) {
        if (!first) out += ",\n";
        first = false;
        out += pad + json(k).dump() + ": ";
        emit(v, out, depth + 1);
      }
      out += "\n" + close + "}";
      return;
    }
    case json::value_t::array: {
      // Arrays of scalars stay on one line so sample tables read as rows.
      const bool flat = std::none_of(j.begin(), j.end(), [](const json& e) { return e.is_structured(); });
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += flat ? "[" : "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += flat ? ", " : ",\n";
        if (!flat) out += pad;
        emit(j[i], out, depth + 1);
      }
      out += flat ? "]" : "\n" + close + "]";
      return;
    }
    case json::value_t::number_float: {
      const double v = j.get<double>();
      out += std::isfinite(v) ? format_number(v) : "null";
      return;
    }
    default:
      out += j.dump();
  }
}

}  // namespace

std::string dump(const json& j) {
  std::string out;
  emit(j, out, 0);
  out += '\n';
  return out;
}

CsvWriter::CsvWriter(std::ostream& out, const std::vector<std::string>& header) : out_(out), columns_(header.size()) {
  for (std::size_t i = 0; i < header.size(); ++i) out_ << (i ? "," : "") << header[i];
  out_ << '\n';
}

void CsvWriter::row(const std::vector<double>& values) {
  if (values.size() != columns_) throw ParameterError("CSV row width does not match the header");
  for (std::size_t i = 0; i < values.size(); ++i) out_ << (i ? "," : "") << format_number(values[i]);
  out_ << '\n';
}

}  // namespace hcurve::io
