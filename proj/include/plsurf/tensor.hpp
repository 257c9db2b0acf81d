#pragma once

#include "plsurf/core.hpp"
#include "plsurf/plpath.hpp"

#include <cstddef>
#include <map>
#include <vector>

namespace plsurf {

// Index word i1...ik with 0-based letters; the empty word is the unit.
using Word = std::vector<int>;

// Sparse element of the tensor algebra truncated above degree `level`.
// Zero coefficients are never stored.
struct TruncatedTensor {
    std::size_t dim = 0;
    std::size_t level = 0;
    std::map<Word, Rational> terms;

    TruncatedTensor() = default;
    TruncatedTensor(std::size_t d, std::size_t n) : dim(d), level(n) {}

    static TruncatedTensor one(std::size_t d, std::size_t n);
    static TruncatedTensor from_vector(const RatVector& v, std::size_t n);
    static TruncatedTensor word(std::size_t d, std::size_t n, const Word& w, const Rational& c = 1);

    Rational coeff(const Word& w) const;
    void add_term(const Word& w, const Rational& c);
    TruncatedTensor degree_part(std::size_t k) const;
    std::size_t max_degree() const;
    bool is_zero() const { return terms.empty(); }

    TruncatedTensor& operator+=(const TruncatedTensor& o);
    TruncatedTensor& operator-=(const TruncatedTensor& o);
    TruncatedTensor& operator*=(const Rational& s);

    friend bool operator==(const TruncatedTensor& a, const TruncatedTensor& b)
    {
        return a.dim == b.dim && a.level == b.level && a.terms == b.terms;
    }
};

TruncatedTensor operator+(TruncatedTensor a, const TruncatedTensor& b);
TruncatedTensor operator-(TruncatedTensor a, const TruncatedTensor& b);
TruncatedTensor operator*(const Rational& s, TruncatedTensor a);

TruncatedTensor mul(const TruncatedTensor& a, const TruncatedTensor& b);
TruncatedTensor commutator(const TruncatedTensor& a, const TruncatedTensor& b);
TruncatedTensor tensor_inverse(const TruncatedTensor& g);
TruncatedTensor tensor_exp(const TruncatedTensor& x);
TruncatedTensor log(const TruncatedTensor& g);

TruncatedTensor exp_segment(const RatVector& v, std::size_t level);
TruncatedTensor path_signature(const PLWord& w, std::size_t level);

// Right-nested bracketing [w1,[w2,...,[w(k-1),wk]...]] extended linearly.
TruncatedTensor dynkin_map(const TruncatedTensor& x);
bool is_lie(const TruncatedTensor& x);

} // namespace plsurf
