#pragma once

#include <harmonia/rational.hpp>

#include <initializer_list>
#include <span>
#include <vector>

namespace harmonia {

/// Univariate polynomial in u with Rational coefficients; coeffs()[i] multiplies u^i.
/// Trailing zero coefficients are trimmed, so degree() is canonical and equality
/// is structural.
class PolyQ {
public:
    PolyQ() = default;
    PolyQ(std::initializer_list<Rational> c) : coeffs_(c) { trim(); }
    explicit PolyQ(std::vector<Rational> c) : coeffs_(std::move(c)) { trim(); }

    static PolyQ monomial(Rational c, unsigned degree) {
        std::vector<Rational> v(degree + 1);
        v[degree] = std::move(c);
        return PolyQ(std::move(v));
    }

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational coeff(unsigned i) const {
        return i < coeffs_.size() ? coeffs_[i] : Rational(0);
    }

    /// Exact Horner evaluation.
    Rational eval(const Rational& u) const {
        Rational acc;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * u + *it;
        return acc;
    }

    /// p(c*u) as a polynomial in u.
    PolyQ with_scaled_arg(const Rational& c) const {
        std::vector<Rational> out(coeffs_.size());
        Rational p = 1;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            out[i] = coeffs_[i] * p;
            p *= c;
        }
        return PolyQ(std::move(out));
    }

    std::vector<double> coeffs_as_double() const {
        std::vector<double> out(coeffs_.size());
        for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = to_double(coeffs_[i]);
        return out;
    }

    PolyQ& operator+=(const PolyQ& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }
    PolyQ& operator-=(const PolyQ& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }
    PolyQ& operator*=(const Rational& c) {
        for (auto& x : coeffs_) x *= c;
        trim();
        return *this;
    }

    friend PolyQ operator+(PolyQ a, const PolyQ& b) { return a += b; }
    friend PolyQ operator-(PolyQ a, const PolyQ& b) { return a -= b; }
    friend PolyQ operator*(PolyQ a, const Rational& c) { return a *= c; }
    friend PolyQ operator*(const Rational& c, PolyQ a) { return a *= c; }
    friend PolyQ operator-(PolyQ a) {
        for (auto& x : a.coeffs_) x = -x;
        return a;
    }

    friend PolyQ operator*(const PolyQ& a, const PolyQ& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return PolyQ(std::move(out));
    }

    friend bool operator==(const PolyQ& a, const PolyQ& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const PolyQ& a, const PolyQ& b) { return !(a == b); }

    std::string str() const {
        if (coeffs_.empty()) return "0";
        std::string s;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i].is_zero()) continue;
            if (!s.empty()) s += " + ";
            s += coeffs_[i].str();
            if (i > 0) s += "*u^" + std::to_string(i);
        }
        return s.empty() ? "0" : s;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

/// Horner evaluation of a double-coefficient polynomial, coeffs[i] * u^i.
inline double horner(std::span<const double> coeffs, double u) {
    double acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * u + *it;
    return acc;
}

}  // namespace harmonia
