#include <harmonia/quad.hpp>

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

namespace harmonia {

namespace {

// 15-point Kronrod extension of the 7-point Gauss rule on [-1,1].
// xgk[1], xgk[3], ... are the Gauss abscissae.
const double xgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

const double wgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

const double wg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Panel {
    double a, b, value, err;
};

struct ByError {
    bool operator()(const Panel& x, const Panel& y) const { return x.err < y.err; }
};

class Evaluator {
public:
    Evaluator(const std::function<double(double)>& f) : f_(f) {}

    double operator()(double x) {
        x = std::clamp(x, 1e-13, 1.0 - 1e-13);
        const double v = f_(x);
        ++count_;
        if (!std::isfinite(v))
            throw std::domain_error("integrate: integrand returned a non-finite value at u=" +
                                    std::to_string(x));
        return v;
    }

    long long count() const { return count_; }

private:
    const std::function<double(double)>& f_;
    long long count_ = 0;
};

Panel gk15(Evaluator& eval, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double fc = eval(c);
    double k15 = wgk[7] * fc;
    double g7 = wg[3] * fc;
    for (int i = 0; i < 7; ++i) {
        const double dx = h * xgk[i];
        const double pair = eval(c - dx) + eval(c + dx);
        k15 += wgk[i] * pair;
        if (i % 2 == 1) g7 += wg[i / 2] * pair;
    }
    return {a, b, k15 * h, std::fabs(k15 - g7) * h};
}

void validate(const QuadSpec& spec) {
    if (!(spec.rel_tol > 0.0) || !(spec.abs_tol > 0.0))
        throw std::invalid_argument("integrate: tolerances must be positive");
    if (spec.max_panels < 1) throw std::invalid_argument("integrate: max_panels must be >= 1");
    if (spec.osc_frequency && !(*spec.osc_frequency >= 0.0))
        throw std::invalid_argument("integrate: osc_frequency must be >= 0");
}

}  // namespace

QuadResult integrate(const std::function<double(double)>& f, const QuadSpec& spec) {
    validate(spec);
    Evaluator eval(f);

    int initial = 1;
    if (spec.osc_frequency && *spec.osc_frequency > 1.0)
        initial = std::min(static_cast<int>(std::ceil(*spec.osc_frequency)), spec.max_panels);

    std::priority_queue<Panel, std::vector<Panel>, ByError> open;
    std::vector<Panel> closed;  // panels too narrow to split further
    double total = 0.0, total_err = 0.0;
    for (int i = 0; i < initial; ++i) {
        Panel p = gk15(eval, static_cast<double>(i) / initial, static_cast<double>(i + 1) / initial);
        total += p.value;
        total_err += p.err;
        open.push(p);
    }

    int panels = initial;
    const auto tolerance = [&](double v) { return std::max(spec.abs_tol, spec.rel_tol * std::fabs(v)); };

    while (total_err > tolerance(total) && panels < spec.max_panels && !open.empty()) {
        const Panel worst = open.top();
        if (worst.b - worst.a < 1e-15) break;  // subdivision limit; nothing left to gain
        open.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        const Panel left = gk15(eval, worst.a, mid);
        const Panel right = gk15(eval, mid, worst.b);
        total += left.value + right.value - worst.value;
        total_err += left.err + right.err - worst.err;
        open.push(left);
        open.push(right);
        ++panels;
    }

    // Re-sum from the panel list to drop the drift accumulated by the
    // incremental updates.
    while (!open.empty()) {
        closed.push_back(open.top());
        open.pop();
    }
    double value = 0.0, comp = 0.0, err = 0.0;
    std::sort(closed.begin(), closed.end(), [](const Panel& x, const Panel& y) { return x.a < y.a; });
    for (const Panel& p : closed) {
        const double t = value + p.value;
        comp += (std::fabs(value) >= std::fabs(p.value)) ? (value - t) + p.value : (p.value - t) + value;
        value = t;
        err += p.err;
    }
    value += comp;

    QuadResult out;
    out.value = value;
    out.err_estimate = err;
    out.evals = eval.count();
    out.converged = err <= tolerance(value);
    return out;
}

}  // namespace harmonia
