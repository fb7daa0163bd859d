#include "hcurve/kernels.hpp"

#include <cmath>
#include <exception>

namespace hcurve::kernels {

namespace {

template <class T, class F>
std::vector<T> parallel_map(std::span<const double> grid, F fn) {
  const auto n = static_cast<std::ptrdiff_t>(grid.size());
  std::vector<T> out(grid.size());
  std::vector<std::exception_ptr> errors(grid.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = fn(grid[static_cast<std::size_t>(i)]);
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

template <class T, class F>
std::vector<T> serial_map(std::span<const double> grid, F fn) {
  std::vector<T> out;
  out.reserve(grid.size());
  for (double s : grid) out.push_back(fn(s));
  return out;
}

double cesaro_point(const HorizontalCurve& h, double s, double h_fd) {
  const double g[1] = {s};
  return verify_cesaro(h, std::span<const double>(g, 1), h_fd);
}

GeneratorFoot foot_at(const HorizontalCurve& h, const SurfaceOfRevolution& surf, const GeneratorTable& table,
                      double s) {
  const H1Point p = h.point(s);
  return nearest_on_generator(surf, table, std::hypot(p.x, p.y), p.z);
}

}  // namespace

std::vector<InvariantValues> sample_invariants(const HorizontalCurve& h, std::span<const double> grid) {
  return parallel_map<InvariantValues>(grid, [&](double s) { return kappa_tau(h, s); });
}

std::vector<std::array<double, 3>> sample_frame_coefficients(const HorizontalCurve& h, std::span<const double> grid) {
  return parallel_map<std::array<double, 3>>(grid, [&](double s) { return frame_coefficients(h, s); });
}

std::vector<GeneratorFoot> membership_defects(const HorizontalCurve& h, const SurfaceOfRevolution& surf,
                                              const GeneratorTable& table, std::span<const double> grid) {
  return parallel_map<GeneratorFoot>(grid, [&](double s) { return foot_at(h, surf, table, s); });
}

std::vector<double> cesaro_residuals(const HorizontalCurve& h, std::span<const double> grid, double h_fd) {
  return parallel_map<double>(grid, [&](double s) { return cesaro_point(h, s, h_fd); });
}

namespace reference {

std::vector<InvariantValues> sample_invariants(const HorizontalCurve& h, std::span<const double> grid) {
  return serial_map<InvariantValues>(grid, [&](double s) { return kappa_tau(h, s); });
}

std::vector<std::array<double, 3>> sample_frame_coefficients(const HorizontalCurve& h, std::span<const double> grid) {
  return serial_map<std::array<double, 3>>(grid, [&](double s) { return frame_coefficients(h, s); });
}

std::vector<GeneratorFoot> membership_defects(const HorizontalCurve& h, const SurfaceOfRevolution& surf,
                                              const GeneratorTable& table, std::span<const double> grid) {
  return serial_map<GeneratorFoot>(grid, [&](double s) { return foot_at(h, surf, table, s); });
}

std::vector<double> cesaro_residuals(const HorizontalCurve& h, std::span<const double> grid, double h_fd) {
  return serial_map<double>(grid, [&](double s) { return cesaro_point(h, s, h_fd); });
}

}  // namespace reference

}  // namespace hcurve::kernels
