#pragma once

#include "plsurf/core.hpp"
#include "plsurf/currents.hpp"
#include "plsurf/tensor.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace plsurf {

// Element of the truncated k1 = (T(V) (x) Lambda^2 V) / Pf. coords[w] holds the
// coordinates of the weight-w part in the quotient basis of that weight
// (empty for w < 2).
struct K1Elt {
    std::size_t dim = 0;
    std::size_t level = 0;
    std::vector<RatVector> coords;

    bool is_zero() const;
    K1Elt& operator+=(const K1Elt& o);
    K1Elt& operator-=(const K1Elt& o);
    K1Elt& operator*=(const Rational& s);
    friend bool operator==(const K1Elt& a, const K1Elt& b)
    {
        return a.dim == b.dim && a.level == b.level && a.coords == b.coords;
    }
};

K1Elt operator+(K1Elt a, const K1Elt& b);
K1Elt operator-(K1Elt a, const K1Elt& b);
K1Elt operator*(const Rational& s, K1Elt a);

// The weight-w slice of the quotient. Monomials (x1...xk) (x) (u ^ v), k = w-2,
// are numbered word * npairs + pair with the word read as a base-dim number.
struct QuotientWeight {
    int weight = 0;
    std::size_t monomials = 0;
    Matrix peiffer;                 // reduced echelon basis of Pf in weight w
    std::vector<std::size_t> peiffer_pivots;
    std::vector<std::size_t> basis; // non-pivot monomials = quotient basis
    std::vector<long> coord_of;     // monomial -> quotient coordinate, or -1
    Matrix delta;                   // dim^w rows
    std::vector<Matrix> act;        // act[i]: weight w -> w+1 for generator e_i
    std::vector<MonomialKey> rho_keys;
    Matrix rho;                     // rows indexed by rho_keys
};

struct CurvatureComponent {
    int weight = 0;
    std::vector<HookIndex> basis; // closed 3-form basis d(omega_p) of this weight
    Matrix matrix;                // <gamma_p', F_p>; identity when the theorem holds
    bool reproduces_forms = false; // F_p == d(omega_p) for every p
};

class QuotientContext {
public:
    QuotientContext(std::size_t dim, std::size_t level);

    std::size_t dim() const { return dim_; }
    std::size_t level() const { return level_; }
    const QuotientWeight& slice(int w) const { return weights_.at(static_cast<std::size_t>(w)); }
    std::size_t quotient_dim(int w) const;
    std::size_t ker_delta_dim(int w) const;

    K1Elt zero() const;
    // Class of (x1...xk) (x) (e_u ^ e_v); u > v gives the negative.
    K1Elt monomial(const Word& x, int u, int v) const;
    K1Elt from_ambient(int w, const RatVector& ambient) const;

    TruncatedTensor delta(const K1Elt& a) const;
    K1Elt act(const TruncatedTensor& x, const K1Elt& a) const;
    K1Elt act_generator(int i, const K1Elt& a) const;
    K1Elt act_vector(const RatVector& v, const K1Elt& a) const;
    K1Elt bracket(const K1Elt& a, const K1Elt& b) const;
    PolyCurrent rho(const K1Elt& a) const;

    K1Elt B_basis(const HookIndex& h) const;

    K1Elt cone_c(const TruncatedTensor& y) const;
    std::pair<PolyCurrent, TruncatedTensor> Psi(const K1Elt& a) const;
    K1Elt Psi_inv(const PolyCurrent& gamma, const TruncatedTensor& y) const;

    // ell^-1 del e (v * rho(c(y))); weights up to level + 1.
    PolyCurrent suspension_s(const RatVector& v, const TruncatedTensor& y) const;
    // rho(v |> c(y) - c([v, y])), the same map computed through the action.
    PolyCurrent suspension_via_action(const RatVector& v, const TruncatedTensor& y) const;
    // Gamma part of exp(v |>) applied to (0, y), truncated at max_weight.
    PolyCurrent suspension_exponential(const RatVector& v, const TruncatedTensor& y, int max_weight) const;

    CurvatureComponent abelianized_curvature_component(int r) const;

private:
    void check(const K1Elt& a) const;
    void check_lcs2(const TruncatedTensor& y) const;
    RatVector tensor_slice(const TruncatedTensor& t, int w) const;

    std::size_t dim_, level_;
    std::vector<std::pair<int, int>> pairs_;
    std::vector<QuotientWeight> weights_; // index = weight, slots 0 and 1 unused
};

} // namespace plsurf
