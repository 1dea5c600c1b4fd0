#pragma once

#include <harmonia/exactq.hpp>

#include <string>
#include <vector>

namespace harmonia::verify {

/// One verification row: pass iff |got - expected| <= tol * tol_scale.
/// Exact checks encode pass/fail as got 1/0 against expected 1 with tol 0.
/// Non-gating rows are informative and do not affect a suite's verdict.
struct CheckRow {
    std::string id;
    double expected = 0.0;
    double got = 0.0;
    double tol = 0.0;
    bool pass = false;
    bool gating = true;
};

/// Kernel polynomial reconstructed by truncated power-series division of the
/// generating functions, kept independent of the closed double-sum route in
/// kernel_poly so the two can be compared coefficient by coefficient.
PolyQ genfun_series_kernel(KernelFamily family, unsigned k);

const std::vector<std::string>& suite_names();  // exact, harmonic, fourier, zeta, limits

std::vector<CheckRow> run_suite(const std::string& name, double tol_scale);

/// True when every gating row passes.
bool all_pass(const std::vector<CheckRow>& rows);

}  // namespace harmonia::verify
