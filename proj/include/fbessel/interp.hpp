#pragma once

#include <array>
#include <functional>
#include <vector>

namespace fbessel {

/// Adaptive piecewise-Chebyshev interpolant (degree 16 per panel, no splines,
/// no global solve).  Used for the intermediate sampled representation when
/// operators are composed, so the outer quadrature reads a cheap function.
class SampledFunction {
public:
    static constexpr int kNodes = 17; // Chebyshev-Lobatto, degree 16

    /// Samples fn on [lo,hi], splitting panels until the interpolant matches
    /// fn at off-node probes within max(abs_tol, rel_tol*scale), where scale
    /// is the max |fn| seen on a coarse prescan.
    static SampledFunction build(const std::function<double(double)>& fn,
                                 double lo, double hi,
                                 double rel_tol, double abs_tol,
                                 int max_depth = 14);

    double operator()(double x) const;

    double lo() const { return lo_; }
    double hi() const { return hi_; }
    std::size_t panel_count() const { return panels_.size(); }
    /// Largest |interpolant - fn| observed at the validation probes.
    double max_interp_error() const { return max_err_; }

private:
    struct Panel {
        double lo, hi;
        std::array<double, kNodes> values; // at Lobatto nodes, descending x
    };
    std::vector<Panel> panels_; // sorted by lo
    double lo_ = 0, hi_ = 0;
    double max_err_ = 0;
};

} // namespace fbessel
