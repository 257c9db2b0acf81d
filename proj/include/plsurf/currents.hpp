#pragma once

#include "plsurf/core.hpp"
#include "plsurf/parallel.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace plsurf {

// Exponent vector alpha (length dim).
using MultiIndex = std::vector<int>;

// Basis monomial e^alpha (x) e_I of S(V) (x) Lambda^m(V), or z^alpha dz_I for
// forms. `wedge` is strictly increasing and 0-based.
struct MonomialKey {
    MultiIndex alpha;
    std::vector<int> wedge;

    int weight() const;
    friend bool operator<(const MonomialKey& a, const MonomialKey& b)
    {
        if (a.alpha != b.alpha)
            return a.alpha < b.alpha;
        return a.wedge < b.wedge;
    }
    friend bool operator==(const MonomialKey& a, const MonomialKey& b)
    {
        return a.alpha == b.alpha && a.wedge == b.wedge;
    }
};

// "α=(1,0,0);(2,3)" with 1-based wedge indices.
std::string format_key(const MonomialKey& k);
MonomialKey parse_key(const std::string& s, std::size_t dim);

// Polynomial current of grade m, truncated above max_weight.
struct PolyCurrent {
    std::size_t dim = 0;
    int grade = 2;
    int max_weight = 6;
    std::map<MonomialKey, Rational> terms;

    PolyCurrent() = default;
    PolyCurrent(std::size_t d, int m, int w) : dim(d), grade(m), max_weight(w) {}

    void add_term(const MonomialKey& k, const Rational& c);
    Rational coeff(const MonomialKey& k) const;
    PolyCurrent weight_part(int r) const;
    bool is_zero() const { return terms.empty(); }

    PolyCurrent& operator+=(const PolyCurrent& o);
    PolyCurrent& operator-=(const PolyCurrent& o);
    PolyCurrent& operator*=(const Rational& s);

    friend bool operator==(const PolyCurrent& a, const PolyCurrent& b)
    {
        return a.dim == b.dim && a.grade == b.grade && a.terms == b.terms;
    }
};

PolyCurrent operator+(PolyCurrent a, const PolyCurrent& b);
PolyCurrent operator-(PolyCurrent a, const PolyCurrent& b);
PolyCurrent operator*(const Rational& s, PolyCurrent a);

struct PolyForm {
    std::size_t dim = 0;
    int grade = 0;
    std::map<MonomialKey, Rational> terms;

    PolyForm() = default;
    PolyForm(std::size_t d, int m) : dim(d), grade(m) {}

    void add_term(const MonomialKey& k, const Rational& c);
    Rational coeff(const MonomialKey& k) const;
    bool is_zero() const { return terms.empty(); }

    PolyForm& operator+=(const PolyForm& o);
    PolyForm& operator*=(const Rational& s);

    friend bool operator==(const PolyForm& a, const PolyForm& b)
    {
        return a.dim == b.dim && a.grade == b.grade && a.terms == b.terms;
    }
};

// Sorts `idx` in place and returns the sign of the sorting permutation, or 0
// if an index repeats.
int sort_wedge(std::vector<int>& idx);

Integer factorial(long n);
Integer multi_factorial(const MultiIndex& alpha); // alpha!

// All alpha with |alpha| = n, in lexicographically decreasing order.
std::vector<MultiIndex> multi_indices(std::size_t dim, int n);

Rational pairing(const PolyCurrent& c, const PolyForm& f);
PolyForm exterior_d(const PolyForm& f);
PolyCurrent codifferential(const PolyCurrent& c);
PolyCurrent e_op(const PolyCurrent& c);
PolyCurrent ell(const PolyCurrent& c);
PolyCurrent project_closed(const PolyCurrent& c);
PolyCurrent project_ker_e(const PolyCurrent& c);
bool is_closed(const PolyCurrent& c);

// Multiplication by v in the symmetric leg (the map pi(x) on currents).
PolyCurrent multiply_vector(const RatVector& v, const PolyCurrent& c);

// Closed pairing of a closed grade-m current with a closed (m+1)-form:
// <d beta, w>_cl = <beta, w>_{m+1} with beta = ell^-1 e(c).
Rational closed_pairing(const PolyCurrent& c, const PolyForm& f);

struct SignedTriangle {
    Triangle triangle;
    int sign = 1;
};
using SignedTriangleSoup = std::vector<SignedTriangle>;

Rational triangle_integral(const Triangle& t, const MultiIndex& alpha, int i, int j);
PolyCurrent soup_current(const SignedTriangleSoup& soup, std::size_t dim, int max_weight, const Exec& exec = {});
PolyCurrent translate_current(const PolyCurrent& c, const RatVector& a);

// Index data (q, i, j, k) with q nonincreasing, q_last >= i < j < k; 0-based.
struct HookIndex {
    std::vector<int> q;
    int i = 0, j = 0, k = 0;
    int weight() const { return static_cast<int>(q.size()) + 3; }
    friend bool operator==(const HookIndex& a, const HookIndex& b)
    {
        return a.q == b.q && a.i == b.i && a.j == b.j && a.k == b.k;
    }
};

std::vector<HookIndex> hook_indices(std::size_t dim, int weight);
PolyCurrent basis_gamma(std::size_t dim, const HookIndex& h, int max_weight);
PolyForm basis_omega(std::size_t dim, const HookIndex& h);

} // namespace plsurf
