#pragma once

// Small numerical utilities shared across the library: uniform-grid
// quadrature, a clamped cubic spline, tridiagonal solves, finite
// differences, a content hash and deterministic float formatting.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

namespace kfl {

inline constexpr double kPi = 3.14159265358979323846;

// ---------------------------------------------------------------------------
// Uniform-grid quadrature
// ---------------------------------------------------------------------------

/// Composite trapezoid rule on a uniform grid.
inline double trapezoid(const std::vector<double>& f, double h) {
    if (f.size() < 2) return 0.0;
    double s = 0.5 * (f.front() + f.back());
    for (std::size_t i = 1; i + 1 < f.size(); ++i) s += f[i];
    return s * h;
}

/// Composite Simpson rule on a uniform grid.  Falls back to a 3/8 block on
/// the last three cells when the cell count is odd.
inline double simpson(const std::vector<double>& f, double h) {
    const std::size_t n = f.size();
    if (n < 2) return 0.0;
    if (n == 2) return 0.5 * h * (f[0] + f[1]);
    std::size_t cells = n - 1;
    double total = 0.0;
    std::size_t even_end = cells;     // number of cells handled by plain Simpson
    if (cells % 2 != 0) {
        if (cells < 3) return trapezoid(f, h);
        even_end = cells - 3;
        const std::size_t i = even_end;
        total += 3.0 * h / 8.0 * (f[i] + 3.0 * f[i + 1] + 3.0 * f[i + 2] + f[i + 3]);
    }
    for (std::size_t i = 0; i + 2 <= even_end; i += 2)
        total += h / 3.0 * (f[i] + 4.0 * f[i + 1] + f[i + 2]);
    return total;
}

/// Cumulative trapezoid integral; out[0] = 0.
inline std::vector<double> cumulative_trapezoid(const std::vector<double>& f, double h) {
    std::vector<double> out(f.size(), 0.0);
    for (std::size_t i = 1; i < f.size(); ++i)
        out[i] = out[i - 1] + 0.5 * h * (f[i - 1] + f[i]);
    return out;
}

// ---------------------------------------------------------------------------
// Tridiagonal (Thomas) solve:  a = sub, b = diag, c = super.
// ---------------------------------------------------------------------------

inline std::vector<double> solve_tridiagonal(std::vector<double> a,
                                             std::vector<double> b,
                                             std::vector<double> c,
                                             std::vector<double> d) {
    const std::size_t n = b.size();
    if (n == 0) return {};
    for (std::size_t i = 1; i < n; ++i) {
        const double w = a[i] / b[i - 1];
        b[i] -= w * c[i - 1];
        d[i] -= w * d[i - 1];
    }
    std::vector<double> x(n);
    x[n - 1] = d[n - 1] / b[n - 1];
    for (std::size_t i = n - 1; i-- > 0;)
        x[i] = (d[i] - c[i] * x[i + 1]) / b[i];
    return x;
}

// ---------------------------------------------------------------------------
// Clamped cubic spline on a uniform grid.
// ---------------------------------------------------------------------------

/// C2 cubic interpolant with prescribed end slopes.  Reproduces cubics
/// exactly, which keeps the Fubini-Study profile x(1-x) free of
/// interpolation error.
class CubicSpline {
public:
    CubicSpline() = default;

    CubicSpline(double x0, double h, std::vector<double> y,
                double slope_left, double slope_right)
        : x0_(x0), h_(h), y_(std::move(y)) {
        const std::size_t n = y_.size();
        if (n < 3) throw std::invalid_argument("CubicSpline: need at least 3 points");
        std::vector<double> a(n, 0.0), b(n, 0.0), c(n, 0.0), d(n, 0.0);
        b[0] = 2.0 * h_; c[0] = h_;
        d[0] = 6.0 * ((y_[1] - y_[0]) / h_ - slope_left);
        for (std::size_t i = 1; i + 1 < n; ++i) {
            a[i] = h_; b[i] = 4.0 * h_; c[i] = h_;
            d[i] = 6.0 * (y_[i + 1] - 2.0 * y_[i] + y_[i - 1]) / h_;
        }
        a[n - 1] = h_; b[n - 1] = 2.0 * h_;
        d[n - 1] = 6.0 * (slope_right - (y_[n - 1] - y_[n - 2]) / h_);
        m_ = solve_tridiagonal(a, b, c, d);
    }

    double xmin() const { return x0_; }
    double xmax() const { return x0_ + h_ * double(y_.size() - 1); }
    std::size_t size() const { return y_.size(); }

    double eval(double x) const {
        const auto [i, t] = locate(x);
        const double A = 1.0 - t, B = t;
        return A * y_[i] + B * y_[i + 1] +
               h_ * h_ / 6.0 * ((A * A * A - A) * m_[i] + (B * B * B - B) * m_[i + 1]);
    }

    double deriv(double x) const {
        const auto [i, t] = locate(x);
        const double A = 1.0 - t, B = t;
        return (y_[i + 1] - y_[i]) / h_ +
               h_ / 6.0 * ((3.0 * B * B - 1.0) * m_[i + 1] - (3.0 * A * A - 1.0) * m_[i]);
    }

    double deriv2(double x) const {
        const auto [i, t] = locate(x);
        return (1.0 - t) * m_[i] + t * m_[i + 1];
    }

    /// Exact integral of the spline over [xmin, x].
    double integral_to(double x) const {
        ensure_cumulative();
        const auto [i, t] = locate(x);
        const double xa = x0_ + h_ * double(i);
        return cum_[i] + segment_integral(i, xa, x);
    }

private:
    std::pair<std::size_t, double> locate(double x) const {
        const double u = (x - x0_) / h_;
        std::size_t i = (u <= 0.0) ? 0 : std::min<std::size_t>(std::size_t(u), y_.size() - 2);
        return {i, u - double(i)};
    }

    double segment_integral(std::size_t i, double xa, double xb) const {
        // integral of the cubic piece from the left node xa to xb
        auto anti = [&](double x) {
            const double t = (x - (x0_ + h_ * double(i))) / h_;
            const double A = 1.0 - t, B = t;
            double v = h_ * (y_[i] * (t - 0.5 * t * t) + y_[i + 1] * 0.5 * t * t);
            v += h_ * h_ * h_ / 6.0 *
                 (m_[i] * (-std::pow(A, 4) / 4.0 + A * A / 2.0) +
                  m_[i + 1] * (std::pow(B, 4) / 4.0 - B * B / 2.0));
            return v;
        };
        return anti(xb) - anti(xa);
    }

    void ensure_cumulative() const {
        if (!cum_.empty()) return;
        cum_.resize(y_.size(), 0.0);
        for (std::size_t i = 0; i + 1 < y_.size(); ++i) {
            const double cell = h_ * 0.5 * (y_[i] + y_[i + 1]) -
                                h_ * h_ * h_ / 24.0 * (m_[i] + m_[i + 1]);
            cum_[i + 1] = cum_[i] + cell;
        }
    }

    double x0_ = 0.0, h_ = 1.0;
    std::vector<double> y_;
    std::vector<double> m_;             // second derivatives at nodes
    mutable std::vector<double> cum_;   // cumulative integrals at nodes
};

// ---------------------------------------------------------------------------
// Finite differences on uniform grids
// ---------------------------------------------------------------------------

/// Second-order first derivative (central interior, one-sided ends).
inline std::vector<double> fd_derivative(const std::vector<double>& f, double h) {
    const std::size_t n = f.size();
    std::vector<double> out(n, 0.0);
    if (n < 3) return out;
    out[0] = (-3.0 * f[0] + 4.0 * f[1] - f[2]) / (2.0 * h);
    for (std::size_t i = 1; i + 1 < n; ++i) out[i] = (f[i + 1] - f[i - 1]) / (2.0 * h);
    out[n - 1] = (3.0 * f[n - 1] - 4.0 * f[n - 2] + f[n - 3]) / (2.0 * h);
    return out;
}

/// Second-order second derivative (central interior, one-sided ends).
inline std::vector<double> fd_second_derivative(const std::vector<double>& f, double h) {
    const std::size_t n = f.size();
    std::vector<double> out(n, 0.0);
    if (n < 4) return out;
    for (std::size_t i = 1; i + 1 < n; ++i)
        out[i] = (f[i + 1] - 2.0 * f[i] + f[i - 1]) / (h * h);
    out[0] = (2.0 * f[0] - 5.0 * f[1] + 4.0 * f[2] - f[3]) / (h * h);
    out[n - 1] = (2.0 * f[n - 1] - 5.0 * f[n - 2] + 4.0 * f[n - 3] - f[n - 4]) / (h * h);
    return out;
}

// ---------------------------------------------------------------------------
// Misc
// ---------------------------------------------------------------------------

/// FNV-1a 64-bit content hash, used to fingerprint input files in run
/// manifests.
inline std::uint64_t fnv1a64(const void* data, std::size_t len) {
    const auto* p = static_cast<const unsigned char*>(data);
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (std::size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline std::string fnv1a64_hex(const std::string& s) {
    char buf[24];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(fnv1a64(s.data(), s.size())));
    return buf;
}

/// Shortest round-trip decimal form; output is locale-independent and
/// deterministic, which the CSV byte-identity contract relies on.
inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    // trim to the shortest representation that round-trips
    for (int prec = 1; prec <= 17; ++prec) {
        char t[40];
        std::snprintf(t, sizeof(t), "%.*g", prec, v);
        if (std::strtod(t, nullptr) == v) return t;
    }
    return buf;
}

inline double sup_abs(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

}  // namespace kfl
