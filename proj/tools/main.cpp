// harmonia command line: compute single values, run verification suites, and
// emit CSV/JSON tables for the harmonic-number and Fourier-sum formulas.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <harmonia/exactq.hpp>
#include <harmonia/fourier.hpp>
#include <harmonia/harmonic.hpp>
#include <harmonia/oracle.hpp>
#include <harmonia/verify.hpp>
#include <harmonia/zeta.hpp>

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace harmonia;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string json_str(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

QuadSpec base_quad(double tol) {
    QuadSpec qs;
    if (tol > 0.0) {
        qs.rel_tol = tol;
        qs.abs_tol = tol * 1e-2;
    }
    if (const char* env = std::getenv("HARMONIA_MAX_PANELS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) qs.max_panels = static_cast<int>(v);
    }
    return qs;
}

struct ComputeOptions {
    std::string kind;
    unsigned k = 1;
    std::string n = "1";
    double m = 1.0;
    unsigned r = 1;
    std::string variant = "sin-pi-k";
    std::string rep = "tan";
    std::string parity = "odd";
    double x = 0.0;
    double tol = 0.0;
};

Variant parse_variant(const std::string& s) {
    if (s == "sin-pi-k") return Variant::SinPiK;
    if (s == "sin-2pi-k") return Variant::Sin2PiK;
    if (s == "cos-2pi-k") return Variant::Cos2PiK;
    throw CLI::ValidationError("--variant", "expected sin-pi-k|sin-2pi-k|cos-2pi-k");
}

ZetaRep parse_rep(const std::string& s) {
    if (s == "tan") return ZetaRep::Tan;
    if (s == "cot") return ZetaRep::Cot;
    if (s == "bernoulli-cot") return ZetaRep::BernoulliCot;
    throw CLI::ValidationError("--rep", "expected tan|cot|bernoulli-cot");
}

struct Computed {
    double value = 0.0;
    double err_estimate = 0.0;
    std::optional<double> oracle;
    std::vector<std::pair<std::string, std::string>> params;
};

bool is_integer_string(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

Computed run_compute(const ComputeOptions& opt) {
    const QuadSpec qs = base_quad(opt.tol);
    QuadSpec tight = qs;
    tight.rel_tol = qs.rel_tol * 1e-2;
    tight.abs_tol = qs.abs_tol * 1e-2;
    tight.max_panels = qs.max_panels * 4;

    Computed out;
    std::function<double(const QuadSpec&)> eval;
    if (opt.kind == "h") {
        const double n = std::stod(opt.n);
        if (!std::isfinite(n)) throw CLI::ValidationError("--n", "must be a finite real");
        const Variant v = parse_variant(opt.variant);
        eval = [&, n, v](const QuadSpec& q) { return h_integral(opt.k, n, v, q).value; };
        if (is_integer_string(opt.n) && opt.k <= 12 && n <= 5000)
            out.oracle = to_double(oracle::direct_harmonic(opt.k, std::stoull(opt.n)));
        out.params = {{"k", std::to_string(opt.k)}, {"n", opt.n}, {"variant", opt.variant}};
    } else if (opt.kind == "c" || opt.kind == "s") {
        const Trig trig = opt.kind == "c" ? Trig::Cos : Trig::Sin;
        if (opt.n == "inf") {
            eval = [&, trig](const QuadSpec& q) { return limit_closed_form({opt.m, opt.k, trig, {}}, q); };
        } else {
            const long long n = std::stoll(opt.n);
            eval = [&, trig, n](const QuadSpec& q) { return partial_sum({opt.m, opt.k, trig, n}, q); };
            out.oracle = oracle::direct_trig_sum(opt.m, opt.k, n, trig);
        }
        out.params = {{"k", std::to_string(opt.k)}, {"m", fmt(opt.m)}, {"n", opt.n}};
    } else if (opt.kind == "zeta-odd") {
        const ZetaRep rep = parse_rep(opt.rep);
        eval = [&, rep](const QuadSpec& q) { return zeta_odd(opt.k, rep, q); };
        out.oracle = oracle::zeta_series(2.0 * opt.k + 1.0).value;
        out.params = {{"k", std::to_string(opt.k)}, {"rep", opt.rep}};
    } else if (opt.kind == "euler-sum") {
        if (opt.parity == "odd") {
            eval = [&](const QuadSpec& q) { return euler_sum_odd_orders(opt.k, opt.r, q); };
            out.oracle = oracle::euler_sum_direct_odd(opt.k, opt.r).value;
        } else if (opt.parity == "even") {
            eval = [&](const QuadSpec& q) { return euler_sum_even_orders(opt.k, opt.r, q); };
            out.oracle = oracle::euler_sum_direct_even(opt.k, opt.r).value;
        } else {
            throw CLI::ValidationError("--parity", "expected odd|even");
        }
        out.params = {{"k", std::to_string(opt.k)}, {"r", std::to_string(opt.r)}, {"parity", opt.parity}};
    } else if (opt.kind == "genfun-even" || opt.kind == "genfun-odd") {
        const double n = std::stod(opt.n);
        if (!std::isfinite(n)) throw CLI::ValidationError("--n", "must be a finite real");
        const bool even = opt.kind == "genfun-even";
        eval = [&, n, even](const QuadSpec& q) {
            return even ? genfun_even(n, opt.x, q) : genfun_odd(n, opt.x, q);
        };
        out.params = {{"n", opt.n}, {"x", fmt(opt.x)}};
    } else {
        throw CLI::ValidationError("--kind", "expected h|c|s|zeta-odd|euler-sum|genfun-even|genfun-odd");
    }
    // a-posteriori estimate: difference against a run at 100x tighter tolerance
    out.value = eval(qs);
    out.err_estimate = std::fabs(out.value - eval(tight)) + tight.abs_tol;
    return out;
}

void print_compute_json(const std::string& kind, const Computed& c) {
    std::string s = "{\"schema\":\"harmonia/1\",\"kind\":" + json_str(kind) + ",\"params\":{";
    for (std::size_t i = 0; i < c.params.size(); ++i) {
        if (i) s += ",";
        s += json_str(c.params[i].first) + ":" + json_str(c.params[i].second);
    }
    s += "},\"value\":" + fmt(c.value) + ",\"err_estimate\":" + fmt(c.err_estimate);
    if (c.oracle) {
        s += ",\"oracle\":" + fmt(*c.oracle);
        s += ",\"discrepancy\":" + fmt(std::fabs(c.value - *c.oracle));
    }
    s += "}";
    std::cout << s << "\n";
}

// --- grid parsing: "k=1..4;n=1,2,5;m=2.5" (';' or space separated) ---------

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep))
        if (!item.empty()) out.push_back(item);
    return out;
}

std::map<std::string, std::vector<double>> parse_grid(const std::string& grid) {
    std::map<std::string, std::vector<double>> out;
    std::string norm = grid;
    for (char& c : norm)
        if (c == ' ') c = ';';
    for (const std::string& part : split(norm, ';')) {
        const auto eq = part.find('=');
        if (eq == std::string::npos) throw CLI::ValidationError("--grid", "expected var=list");
        const std::string var = part.substr(0, eq);
        std::vector<double> values;
        for (const std::string& item : split(part.substr(eq + 1), ',')) {
            const auto dots = item.find("..");
            if (dots != std::string::npos) {
                const long a = std::stol(item.substr(0, dots));
                const long b = std::stol(item.substr(dots + 2));
                for (long v = a; v <= b; ++v) values.push_back(static_cast<double>(v));
            } else {
                values.push_back(std::stod(item));
            }
        }
        std::sort(values.begin(), values.end());
        out[var] = values;
    }
    return out;
}

struct TableRow {
    std::vector<std::pair<std::string, double>> cells;
};

int run_table(const std::string& kind, const std::string& grid_spec, const std::string& format,
              const std::string& out_path, double tol) {
    const QuadSpec qs = base_quad(tol);
    auto grid = parse_grid(grid_spec);
    const auto take = [&](const std::string& var, double fallback,
                          bool required = false) -> std::vector<double> {
        auto it = grid.find(var);
        if (it != grid.end()) return it->second;
        if (required) throw CLI::ValidationError("--grid", "missing variable " + var);
        return {fallback};
    };

    // canonical parameter order per kind keeps the row order lexicographic
    std::vector<std::string> param_names;
    std::vector<std::vector<double>> param_values;
    const auto add_param = [&](const std::string& var, double fallback, bool required = false) {
        param_names.push_back(var);
        param_values.push_back(take(var, fallback, required));
    };

    std::function<double(const std::map<std::string, double>&)> value_fn;
    if (kind == "h") {
        add_param("k", 1, true);
        add_param("n", 1, true);
        value_fn = [&](const std::map<std::string, double>& p) {
            return h_integral(static_cast<unsigned>(p.at("k")), p.at("n"), Variant::SinPiK, qs).value;
        };
    } else if (kind == "c" || kind == "s") {
        const Trig trig = kind == "c" ? Trig::Cos : Trig::Sin;
        add_param("k", 1, true);
        add_param("m", 1);
        add_param("n", 1, true);
        value_fn = [&, trig](const std::map<std::string, double>& p) {
            return partial_sum(
                {p.at("m"), static_cast<unsigned>(p.at("k")), trig, static_cast<long long>(p.at("n"))},
                qs);
        };
    } else if (kind == "zeta-odd") {
        add_param("k", 1, true);
        value_fn = [&](const std::map<std::string, double>& p) {
            return zeta_odd(static_cast<unsigned>(p.at("k")), ZetaRep::Tan, qs);
        };
    } else if (kind == "genfun-even" || kind == "genfun-odd") {
        const bool even = kind == "genfun-even";
        add_param("n", 2);
        add_param("x", 0.1, true);
        value_fn = [&, even](const std::map<std::string, double>& p) {
            return even ? genfun_even(p.at("n"), p.at("x"), qs) : genfun_odd(p.at("n"), p.at("x"), qs);
        };
    } else if (kind == "theorem1") {
        add_param("k", 0);
        add_param("m", 1);
        add_param("n", 100, true);
        value_fn = [&](const std::map<std::string, double>& p) {
            return theorem1_integral(static_cast<unsigned>(p.at("k")), p.at("m"), p.at("n"), qs);
        };
    } else if (kind == "theorem2") {
        add_param("k", 0);
        add_param("m", 2);
        add_param("n", 100, true);
        value_fn = [&](const std::map<std::string, double>& p) {
            return theorem2_integral(static_cast<unsigned>(p.at("k")), p.at("m"), p.at("n"), qs);
        };
    } else if (kind == "theorem3") {
        add_param("k", 0);
        add_param("n", 100, true);
        value_fn = [&](const std::map<std::string, double>& p) {
            return theorem3_integral(static_cast<unsigned>(p.at("k")), p.at("n"), qs);
        };
    } else if (kind == "theorem4") {
        add_param("power", 0);
        add_param("n", 100, true);
        value_fn = [&](const std::map<std::string, double>& p) {
            return theorem4_integral(static_cast<unsigned>(p.at("power")), p.at("n"), qs);
        };
    } else if (kind == "corollary1") {
        add_param("k", 0);
        add_param("n", 100, true);
        value_fn = [&](const std::map<std::string, double>& p) {
            return corollary1_integral(static_cast<unsigned>(p.at("k")), p.at("n"), qs);
        };
    } else {
        throw CLI::ValidationError("--kind", "unsupported table kind " + kind);
    }

    std::vector<TableRow> rows;
    std::vector<std::size_t> idx(param_names.size(), 0);
    while (true) {
        std::map<std::string, double> point;
        TableRow row;
        for (std::size_t i = 0; i < param_names.size(); ++i) {
            point[param_names[i]] = param_values[i][idx[i]];
            row.cells.emplace_back(param_names[i], param_values[i][idx[i]]);
        }
        row.cells.emplace_back("value", value_fn(point));
        rows.push_back(std::move(row));
        std::size_t i = param_names.size();
        while (i > 0) {
            --i;
            if (++idx[i] < param_values[i].size()) break;
            idx[i] = 0;
            if (i == 0) goto done;
        }
    }
done:

    std::ostringstream body;
    if (format == "csv") {
        for (std::size_t i = 0; i < rows[0].cells.size(); ++i)
            body << (i ? "," : "") << csv_field(rows[0].cells[i].first);
        body << "\n";
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < row.cells.size(); ++i)
                body << (i ? "," : "") << csv_field(fmt(row.cells[i].second));
            body << "\n";
        }
    } else if (format == "json") {
        body << "[";
        for (std::size_t r = 0; r < rows.size(); ++r) {
            body << (r ? ",\n " : "\n ") << "{";
            for (std::size_t i = 0; i < rows[r].cells.size(); ++i)
                body << (i ? "," : "") << json_str(rows[r].cells[i].first) << ":"
                     << fmt(rows[r].cells[i].second);
            body << "}";
        }
        body << "\n]\n";
    } else {
        throw CLI::ValidationError("--format", "expected csv|json");
    }

    if (out_path.empty() || out_path == "-") {
        std::cout << body.str();
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            std::cerr << "harmonia: cannot open output path: " << out_path << "\n";
            return 2;
        }
        out << body.str();
        if (!out.good()) {
            std::cerr << "harmonia: write failed: " << out_path << "\n";
            return 2;
        }
    }
    return 0;
}

int run_verify(const std::string& suite, double tol_scale) {
    std::vector<std::string> names;
    if (suite == "all")
        names = verify::suite_names();
    else
        names = {suite};
    bool ok = true;
    std::printf("%-40s %22s %22s %12s %s\n", "check", "expected", "got", "tol", "pass");
    for (const std::string& name : names) {
        const auto rows = verify::run_suite(name, tol_scale);
        for (const auto& r : rows) {
            std::printf("%-40s %22s %22s %12s %s%s\n", r.id.c_str(), fmt(r.expected).c_str(),
                        fmt(r.got).c_str(), fmt(r.tol).c_str(), r.pass ? "yes" : "NO",
                        r.gating ? "" : " (info)");
            if (r.gating && !r.pass) ok = false;
        }
    }
    std::printf("%s\n", ok ? "all checks passed" : "FAILURES present");
    return ok ? 0 : 1;
}

int run_limits(const std::string& theorem, unsigned k, double m, unsigned power,
               const std::string& n_list, bool check, double tol) {
    const QuadSpec qs = base_quad(tol);
    std::vector<double> ns;
    for (const std::string& s : split(n_list, ',')) ns.push_back(std::stod(s));
    if (ns.empty()) throw CLI::ValidationError("--n-list", "empty");

    std::function<double(double)> eval;
    double limit;
    if (theorem == "1") {
        eval = [&](double n) { return theorem1_integral(k, m, n, qs); };
        limit = (k == 0 && m == 1.0) ? 1.0 : m / 2.0;
    } else if (theorem == "2") {
        eval = [&](double n) { return theorem2_integral(k, m, n, qs); };
        limit = m * std::log(m) / std::numbers::pi;
    } else if (theorem == "3") {
        eval = [&](double n) { return theorem3_integral(k, n, qs); };
        limit = 1.0;
    } else if (theorem == "4") {
        eval = [&](double n) { return theorem4_integral(power, n, qs); };
        limit = power == 0 ? -1.0 : -0.5;
    } else if (theorem == "corollary1") {
        eval = [&](double n) { return corollary1_integral(k, n, qs); };
        limit = 0.0;
    } else {
        throw CLI::ValidationError("--theorem", "expected 1|2|3|4|corollary1");
    }

    std::printf("%12s %22s %22s %22s\n", "n", "value", "limit", "abs_err");
    double first_err = 0.0, last_err = 0.0;
    for (std::size_t i = 0; i < ns.size(); ++i) {
        const double v = eval(ns[i]);
        const double err = std::fabs(v - limit);
        if (i == 0) first_err = err;
        last_err = err;
        std::printf("%12s %22s %22s %22s\n", fmt(ns[i]).c_str(), fmt(v).c_str(), fmt(limit).c_str(),
                    fmt(err).c_str());
    }
    const bool shrinking = last_err <= std::max(first_err, 1e-9);
    std::printf("trend: %s\n", shrinking ? "error shrinking" : "error NOT shrinking");
    if (check && !shrinking) return 1;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"harmonia: generalized harmonic numbers, Fourier partial sums and zeta integrals"};
    app.require_subcommand(1);

    ComputeOptions copt;
    CLI::App* compute = app.add_subcommand("compute", "compute one value, print a JSON object");
    compute->add_option("--kind", copt.kind, "h|c|s|zeta-odd|euler-sum|genfun-even|genfun-odd")
        ->required();
    compute->add_option("--k", copt.k, "order index");
    compute->add_option("--n", copt.n, "argument n (integer, real, or 'inf')");
    compute->add_option("--m", copt.m, "Fourier modulus m >= 1");
    compute->add_option("--r", copt.r, "Euler-sum exponent index");
    compute->add_option("--variant", copt.variant, "sin-pi-k|sin-2pi-k|cos-2pi-k");
    compute->add_option("--rep", copt.rep, "tan|cot|bernoulli-cot");
    compute->add_option("--parity", copt.parity, "euler-sum family: odd|even");
    compute->add_option("--x", copt.x, "generating-function argument");
    compute->add_option("--tol", copt.tol, "quadrature relative tolerance");

    std::string suite = "all";
    double tol_scale = 1.0;
    CLI::App* verify_cmd = app.add_subcommand("verify", "run verification suites");
    verify_cmd->add_option("--suite", suite, "all|exact|harmonic|fourier|zeta|limits");
    verify_cmd->add_option("--tol-scale", tol_scale, "multiplies every suite tolerance");

    std::string tkind, grid, format = "csv", out_path;
    double ttol = 0.0;
    CLI::App* table = app.add_subcommand("table", "evaluate a grid, write CSV or JSON");
    table->add_option("--kind", tkind, "h|c|s|zeta-odd|genfun-even|genfun-odd|theorem1..4|corollary1")
        ->required();
    table->add_option("--grid", grid, "e.g. \"k=1..4;n=1..10\"")->required();
    table->add_option("--format", format, "csv|json");
    table->add_option("--out", out_path, "output path ('-' for stdout)");
    table->add_option("--tol", ttol, "quadrature relative tolerance");

    std::string theorem;
    unsigned lk = 0, lpower = 0;
    double lm = 1.0, ltol = 0.0;
    std::string n_list = "25,50,100,200";
    bool lcheck = false;
    CLI::App* limits = app.add_subcommand("limits", "tabulate a limit theorem over n");
    limits->add_option("--theorem", theorem, "1|2|3|4|corollary1")->required();
    limits->add_option("--k", lk, "polynomial degree k");
    limits->add_option("--m", lm, "modulus m >= 1");
    limits->add_option("--power", lpower, "u exponent for theorem 4");
    limits->add_option("--n-list", n_list, "comma list of n values");
    limits->add_flag("--check", lcheck, "exit 1 when the error is not shrinking");
    limits->add_option("--tol", ltol, "quadrature relative tolerance");

    try {
        app.parse(argc, argv);
        if (compute->parsed()) {
            const Computed c = run_compute(copt);
            print_compute_json(copt.kind, c);
            return 0;
        }
        if (verify_cmd->parsed()) {
            if (suite != "all") {
                const auto& names = verify::suite_names();
                if (std::find(names.begin(), names.end(), suite) == names.end()) {
                    std::cerr << "harmonia: unknown suite: " << suite << "\n";
                    return 2;
                }
            }
            return run_verify(suite, tol_scale);
        }
        if (table->parsed()) return run_table(tkind, grid, format, out_path, ttol);
        if (limits->parsed()) return run_limits(theorem, lk, lm, lpower, n_list, lcheck, ltol);
    } catch (const CLI::ParseError& e) {
        app.exit(e);  // prints the message
        return 2;
    } catch (const CLI::Error& e) {
        std::cerr << "harmonia: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "harmonia: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
