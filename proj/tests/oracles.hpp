#pragma once

// Floating-point reference computations used to cross-check the exact code.

#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <vector>

namespace oracle {

struct Rule {
    std::vector<double> x, w; // nodes and weights on [0, 1]
};

// Gauss-Legendre rule with n nodes, by Newton iteration on P_n.
inline Rule gauss_legendre(int n)
{
    Rule r;
    const double pi = std::acos(-1.0);
    for (int i = 1; i <= n; ++i) {
        double z = std::cos(pi * (i - 0.25) / (n + 0.5));
        double dp = 0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1, p1 = z;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1) * z * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (z * p1 - p0) / (z * z - 1);
            double dz = p1 / dp;
            z -= dz;
            if (std::fabs(dz) < 1e-16)
                break;
        }
        r.x.push_back((1 - z) / 2);
        r.w.push_back(1 / ((1 - z * z) * dp * dp));
    }
    return r;
}

using Point = std::vector<double>;

// Integral of f(z) dz_i ^ dz_j over the oriented triangle (p0, p1, p2), via
// the collapsed square (s, t) -> p0 + s (p1 - p0) + s t (p2 - p1).
inline double triangle_form_integral(const std::array<Point, 3>& p, int i, int j,
                                     const std::function<double(const Point&)>& f, int n = 12)
{
    Rule g = gauss_legendre(n);
    Point a(p[0].size()), b(p[0].size());
    for (std::size_t k = 0; k < a.size(); ++k) {
        a[k] = p[1][k] - p[0][k];
        b[k] = p[2][k] - p[0][k];
    }
    double jac = a[i] * b[j] - a[j] * b[i];
    double sum = 0;
    Point z(a.size());
    for (std::size_t u = 0; u < g.x.size(); ++u)
        for (std::size_t v = 0; v < g.x.size(); ++v) {
            double s = g.x[u], t = g.x[v];
            for (std::size_t k = 0; k < z.size(); ++k)
                z[k] = p[0][k] + s * (1 - t) * a[k] + s * t * b[k];
            sum += g.w[u] * g.w[v] * s * f(z);
        }
    return jac * sum;
}

// Dense truncated tensor: level blocks of size dim^k, word index in base dim
// with the first letter most significant.
struct DenseTensor {
    std::size_t dim, level;
    std::vector<std::vector<double>> block;

    DenseTensor(std::size_t d, std::size_t n) : dim(d), level(n), block(n + 1)
    {
        std::size_t s = 1;
        for (std::size_t k = 0; k <= n; ++k, s *= d)
            block[k].assign(s, 0.0);
        block[0][0] = 1;
    }
};

// Right-hand side S (x) v of the signature ODE, truncated.
inline DenseTensor times_vector(const DenseTensor& s, const std::vector<double>& v)
{
    DenseTensor out(s.dim, s.level);
    out.block[0][0] = 0;
    for (std::size_t k = 1; k <= s.level; ++k)
        for (std::size_t w = 0; w < s.block[k - 1].size(); ++w)
            for (std::size_t i = 0; i < s.dim; ++i)
                out.block[k][w * s.dim + i] = s.block[k - 1][w] * v[i];
    return out;
}

inline void axpy(DenseTensor& y, double a, const DenseTensor& x)
{
    for (std::size_t k = 0; k <= y.level; ++k)
        for (std::size_t w = 0; w < y.block[k].size(); ++w)
            y.block[k][w] += a * x.block[k][w];
}

// RK4 on dS/dt = S (x) x'(t) along a PL path with unit-time segments.
inline DenseTensor rk4_signature(const std::vector<std::vector<double>>& letters, std::size_t dim, std::size_t level,
                                 double h)
{
    DenseTensor s(dim, level);
    std::size_t steps = static_cast<std::size_t>(std::llround(1.0 / h));
    for (const auto& v : letters)
        for (std::size_t n = 0; n < steps; ++n) {
            DenseTensor k1 = times_vector(s, v);
            DenseTensor t = s;
            axpy(t, h / 2, k1);
            DenseTensor k2 = times_vector(t, v);
            t = s;
            axpy(t, h / 2, k2);
            DenseTensor k3 = times_vector(t, v);
            t = s;
            axpy(t, h, k3);
            DenseTensor k4 = times_vector(t, v);
            axpy(s, h / 6, k1);
            axpy(s, h / 3, k2);
            axpy(s, h / 3, k3);
            axpy(s, h / 6, k4);
        }
    return s;
}

} // namespace oracle
