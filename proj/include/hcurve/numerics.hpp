#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <vector>

namespace hcurve {

struct Interval {
  double lo = 0.0;
  double hi = 1.0;

  double length() const { return hi - lo; }
  bool contains(double s) const { return s >= lo && s <= hi; }
};

/// n+1 equally spaced points covering [lo, hi] inclusive.
std::vector<double> uniform_grid(Interval iv, std::size_t n);

/// Composite Simpson over [a, b] with `panels` panels (each panel uses its midpoint).
double simpson(const std::function<double(double)>& f, double a, double b, std::size_t panels);

/// F(s) = integral of f from `lo` to s. Node values come from composite Simpson;
/// values between nodes (or outside [lo, hi]) add a Simpson sub-panel from the
/// nearest node, so F is smooth in s and exact at the nodes.
class CumulativeIntegral {
 public:
  CumulativeIntegral(std::function<double(double)> f, Interval iv, std::size_t panels);

  double operator()(double s) const;
  double total() const { return table_.back(); }
  Interval interval() const { return {lo_, lo_ + step_ * static_cast<double>(table_.size() - 1)}; }
  double step() const { return step_; }
  std::span<const double> table() const { return table_; }
  double integrand(double s) const { return f_(s); }

 private:
  std::function<double(double)> f_;
  double lo_;
  double step_;
  std::vector<double> table_;
};

/// Fornberg's finite-difference weights: w[m][j] is the weight of f(nodes[j])
/// in the m-th derivative at z, for m = 0..max_order.
std::vector<std::vector<double>> fd_weights(double z, std::span<const double> nodes, int max_order);

/// Central differences used as test oracles and for profile derivatives.
double central_diff(const std::function<double(double)>& f, double s, double h);
double central_diff2(const std::function<double(double)>& f, double s, double h);
/// Fourth-order five-point stencils.
double central_diff4(const std::function<double(double)>& f, double s, double h);
double central_diff4_2(const std::function<double(double)>& f, double s, double h);

}  // namespace hcurve
