#pragma once

#include <array>
#include <span>
#include <vector>

#include "hcurve/cesaro.hpp"
#include "hcurve/curve.hpp"

/// Data-parallel grid loops. The top-level functions run under OpenMP; the
/// `reference` namespace holds plain serial loops with identical results.
/// If any grid point throws, the exception of the lowest index is rethrown.
namespace hcurve::kernels {

std::vector<InvariantValues> sample_invariants(const HorizontalCurve& h, std::span<const double> grid);
std::vector<std::array<double, 3>> sample_frame_coefficients(const HorizontalCurve& h, std::span<const double> grid);
std::vector<GeneratorFoot> membership_defects(const HorizontalCurve& h, const SurfaceOfRevolution& surf,
                                              const GeneratorTable& table, std::span<const double> grid);
/// Per-point Cesaro residual (see verify_cesaro).
std::vector<double> cesaro_residuals(const HorizontalCurve& h, std::span<const double> grid, double h_fd);

namespace reference {
std::vector<InvariantValues> sample_invariants(const HorizontalCurve& h, std::span<const double> grid);
std::vector<std::array<double, 3>> sample_frame_coefficients(const HorizontalCurve& h, std::span<const double> grid);
std::vector<GeneratorFoot> membership_defects(const HorizontalCurve& h, const SurfaceOfRevolution& surf,
                                              const GeneratorTable& table, std::span<const double> grid);
std::vector<double> cesaro_residuals(const HorizontalCurve& h, std::span<const double> grid, double h_fd);
}  // namespace reference

}  // namespace hcurve::kernels
