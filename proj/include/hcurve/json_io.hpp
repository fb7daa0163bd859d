#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "hcurve/cesaro.hpp"
#include "hcurve/classify.hpp"
#include "hcurve/frenet.hpp"

namespace hcurve::io {

using nlohmann::json;

struct AnalyticSpec {
  ScalarFn x, y, z;
  Interval range;
};

struct SamplesSpec {
  std::vector<CurveSample> data;
};

struct IntrinsicSpec {
  InvariantPair invariants;
  double length = 0.0;  // range is [0, length]
  InitialPose initial;
};

using CurveSpec = std::variant<AnalyticSpec, SamplesSpec, IntrinsicSpec>;

/// {"type":"analytic","x","y","z","range":[a,b]} | {"type":"samples","data":[[u,x,y,z],...]} |
/// {"type":"intrinsic","kappa","tau","range":[0,S],"initial":{"point":[x,y,z],"heading":phi}}.
/// Throws ParseError on schema violations.
CurveSpec parse_curve_spec(const json& j);
json to_json(const CurveSpec& spec);

/// Horizontal arc-length curve for any variant; `step` is the quadrature or RK4 step.
HorizontalCurve realize(const CurveSpec& spec, double step);

H1Point parse_point(const json& j);
json to_json(const H1Point& p);

/// {"g":"<expr>","f":"<expr>","range":[a,b]}.
SurfaceOfRevolution parse_surface(const json& j);

json to_json(const MembershipReport& r);
json to_json(const PositionClass& c);

/// Throws ParseError when the document is not valid JSON.
json parse_document(std::istream& in, const std::string& name);
json read_file(const std::string& path);

/// %.17g, with "nan"/"inf" spelled as in C.
std::string format_number(double v);

/// JSON text with every float printed at 17 significant digits; non-finite floats become null.
/// Objects nest with two-space indentation.
std::string dump(const json& j);

class CsvWriter {
 public:
  CsvWriter(std::ostream& out, const std::vector<std::string>& header);
  void row(const std::vector<double>& values);

 private:
  std::ostream& out_;
  std::size_t columns_;
};

}  // namespace hcurve::io
