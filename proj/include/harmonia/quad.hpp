#pragma once

#include <functional>
#include <optional>

namespace harmonia {

/// Request for an adaptive integration over (0,1).
struct QuadSpec {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    int max_panels = 4096;

    /// Half-period hint nu: initial panel walls are placed at u = j/nu, the
    /// zero pattern of sin/cos(pi*nu*u). Unset or < 2 means a single panel.
    std::optional<double> osc_frequency;

    /// Endpoint annotations. The panel rule is open (no evaluation at u = 0
    /// or 1), so a removable cot/tan-type singularity needs no special rule;
    /// the flags document the caller's intent.
    enum class Endpoint { Regular, RemovableSingularity };
    Endpoint left_endpoint = Endpoint::Regular;
    Endpoint right_endpoint = Endpoint::Regular;
};

struct QuadResult {
    double value = 0.0;
    double err_estimate = 0.0;
    long long evals = 0;
    /// When true, err_estimate <= max(abs_tol, rel_tol * |value|).
    bool converged = false;
};

/// Adaptive Gauss-Kronrod 7/15 on (0,1) with largest-error-first bisection.
/// Per-panel error is |K15 - G7|; the total is their sum. Abscissae within
/// 1e-13 of an endpoint are clamped inward before f is called. A non-finite
/// value from f raises std::domain_error naming the abscissa; exhausting
/// max_panels returns the best estimate with converged = false.
QuadResult integrate(const std::function<double(double)>& f, const QuadSpec& spec);

}  // namespace harmonia
