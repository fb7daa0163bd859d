#include "hcurve/numerics.hpp"

#include <algorithm>
#include <cmath>

#include "hcurve/errors.hpp"

namespace hcurve {

std::vector<double> uniform_grid(Interval iv, std::size_t n) {
  if (n == 0) return {iv.lo};
  std::vector<double> g(n + 1);
  const double h = iv.length() / static_cast<double>(n);
  for (std::size_t i = 0; i <= n; ++i) g[i] = iv.lo + h * static_cast<double>(i);
  g[n] = iv.hi;
  return g;
}

double simpson(const std::function<double(double)>& f, double a, double b, std::size_t panels) {
  if (panels == 0) panels = 1;
  const double h = (b - a) / static_cast<double>(panels);
  double acc = 0.0;
  double left = f(a);
  for (std::size_t k = 0; k < panels; ++k) {
    const double x0 = a + h * static_cast<double>(k);
    const double x1 = (k + 1 == panels) ? b : x0 + h;
    const double right = f(x1);
    acc += (x1 - x0) / 6.0 * (left + 4.0 * f(0.5 * (x0 + x1)) + right);
    left = right;
  }
  return acc;
}

CumulativeIntegral::CumulativeIntegral(std::function<double(double)> f, Interval iv, std::size_t panels)
    : f_(std::move(f)), lo_(iv.lo) {
  if (!(iv.hi > iv.lo)) throw ParameterError("integration interval must be nondegenerate");
  if (panels == 0) panels = 1;
  step_ = iv.length() / static_cast<double>(panels);
  table_.resize(panels + 1);
  table_[0] = 0.0;
  double left = f_(lo_);
  for (std::size_t k = 0; k < panels; ++k) {
    const double x0 = lo_ + step_ * static_cast<double>(k);
    const double x1 = lo_ + step_ * static_cast<double>(k + 1);
    const double right = f_(x1);
    table_[k + 1] = table_[k] + step_ / 6.0 * (left + 4.0 * f_(0.5 * (x0 + x1)) + right);
    left = right;
  }
}

double CumulativeIntegral::operator()(double s) const {
  const auto last = static_cast<std::ptrdiff_t>(table_.size() - 1);
  const double t = (s - lo_) / step_;
  auto k = static_cast<std::ptrdiff_t>(std::floor(t));
  k = std::clamp<std::ptrdiff_t>(k, 0, last);
  const double node = lo_ + step_ * static_cast<double>(k);
  if (s == node) return table_[static_cast<std::size_t>(k)];
  const double span = std::fabs(s - node);
  const auto sub = static_cast<std::size_t>(std::max(1.0, std::ceil(span / step_)));
  return table_[static_cast<std::size_t>(k)] + simpson(f_, node, s, sub);
}

std::vector<std::vector<double>> fd_weights(double z, std::span<const double> x, int m) {
  // Fornberg, "Generation of finite difference formulas on arbitrarily spaced grids".
  const std::size_t n = x.size();
  std::vector<std::vector<double>> c(static_cast<std::size_t>(m) + 1, std::vector<double>(n, 0.0));
  double c1 = 1.0;
  double c4 = x[0] - z;
  c[0][0] = 1.0;
  for (std::size_t i = 1; i < n; ++i) {
    const int mn = std::min<int>(static_cast<int>(i), m);
    double c2 = 1.0;
    const double c5 = c4;
    c4 = x[i] - z;
    for (std::size_t j = 0; j < i; ++j) {
      const double c3 = x[i] - x[j];
      c2 *= c3;
      if (j == i - 1) {
        for (int k = mn; k >= 1; --k)
          c[k][i] = c1 * (k * c[k - 1][i - 1] - c5 * c[k][i - 1]) / c2;
        c[0][i] = -c1 * c5 * c[0][i - 1] / c2;
      }
      for (int k = mn; k >= 1; --k) c[k][j] = (c4 * c[k][j] - k * c[k - 1][j]) / c3;
      c[0][j] = c4 * c[0][j] / c3;
    }
    c1 = c2;
  }
  return c;
}

double central_diff(const std::function<double(double)>& f, double s, double h) {
  return (f(s + h) - f(s - h)) / (2.0 * h);
}

double central_diff2(const std::function<double(double)>& f, double s, double h) {
  return (f(s + h) - 2.0 * f(s) + f(s - h)) / (h * h);
}

double central_diff4(const std::function<double(double)>& f, double s, double h) {
  return (f(s - 2 * h) - 8.0 * f(s - h) + 8.0 * f(s + h) - f(s + 2 * h)) / (12.0 * h);
}

double central_diff4_2(const std::function<double(double)>& f, double s, double h) {
  return (-f(s - 2 * h) + 16.0 * f(s - h) - 30.0 * f(s) + 16.0 * f(s + h) - f(s + 2 * h)) / (12.0 * h * h);
}

}  // namespace hcurve
