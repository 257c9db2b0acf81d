#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace plsurf {

// Exact rationals. GMP keeps mpq values canonical (lowest terms, positive
// denominator) after every arithmetic operation; constructors that take a
// numerator/denominator pair go through make_rational so the invariant holds.
using Rational = mpq_class;
using Integer = mpz_class;

// Bad user input (malformed documents, mismatched dimensions, violated
// preconditions that a caller could have checked).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Broken internal invariant. Never expected on valid input.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

Rational make_rational(long num, long den = 1);
Rational parse_rational(std::string_view text);
std::string format_rational(const Rational& r);
int sign(const Rational& r);

class RatVector {
public:
    RatVector() = default;
    explicit RatVector(std::size_t dim) : e_(dim) {}
    RatVector(std::initializer_list<Rational> init) : e_(init) {}
    explicit RatVector(std::vector<Rational> entries) : e_(std::move(entries)) {}

    std::size_t dim() const { return e_.size(); }
    Rational& operator[](std::size_t i) { return e_[i]; }
    const Rational& operator[](std::size_t i) const { return e_[i]; }
    const std::vector<Rational>& entries() const { return e_; }
    auto begin() const { return e_.begin(); }
    auto end() const { return e_.end(); }

    bool is_zero() const;

    RatVector& operator+=(const RatVector& o);
    RatVector& operator-=(const RatVector& o);
    RatVector& operator*=(const Rational& s);

    friend bool operator==(const RatVector& a, const RatVector& b) { return a.e_ == b.e_; }
    friend bool operator!=(const RatVector& a, const RatVector& b) { return !(a == b); }
    // Lexicographic on coordinates; this is the global vertex order.
    friend bool operator<(const RatVector& a, const RatVector& b);

private:
    std::vector<Rational> e_;
};

RatVector operator+(RatVector a, const RatVector& b);
RatVector operator-(RatVector a, const RatVector& b);
RatVector operator-(RatVector a);
RatVector operator*(const Rational& s, RatVector a);
Rational dot(const RatVector& a, const RatVector& b);
RatVector unit_vector(std::size_t dim, std::size_t i);
std::string to_string(const RatVector& v);

// Dense row-major rational matrix.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), d_(rows * cols) {}
    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<RatVector>& rows, std::size_t cols);
    static Matrix from_columns(const std::vector<RatVector>& cols, std::size_t rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& at(std::size_t r, std::size_t c) { return d_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return d_[r * cols_ + c]; }
    RatVector row(std::size_t r) const;
    RatVector column(std::size_t c) const;
    Matrix transpose() const;

    // Stack `below` under this matrix (equal column counts).
    Matrix stacked(const Matrix& below) const;

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.d_ == b.d_;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> d_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
RatVector operator*(const Matrix& a, const RatVector& x);

struct RowEchelon {
    Matrix reduced;                  // reduced row echelon form, zero rows dropped
    std::vector<std::size_t> pivots; // pivot column of each row, increasing
};

RowEchelon rref(const Matrix& a);
std::size_t rank(const Matrix& a);
std::size_t span_dim(const std::vector<RatVector>& vs);

// Pivot solution (free variables set to zero), or nullopt if inconsistent.
std::optional<RatVector> solve_linear(const Matrix& a, const RatVector& b);

// One vector per free column, in column order; vector k has a 1 in its free
// column and zeros in the other free columns.
std::vector<RatVector> kernel_basis(const Matrix& a);

bool linearly_dependent(const RatVector& a, const RatVector& b);

// Linear subspace with its basis in reduced row echelon form.
struct Subspace {
    std::size_t ambient = 0;
    std::vector<RatVector> basis;
    std::vector<std::size_t> pivots;

    std::size_t dim() const { return basis.size(); }
    bool contains(const RatVector& v) const;
    friend bool operator==(const Subspace& a, const Subspace& b)
    {
        return a.ambient == b.ambient && a.basis == b.basis;
    }
};

Subspace span_of(const std::vector<RatVector>& vs, std::size_t ambient);

struct Triangle {
    RatVector p0, p1, p2;

    std::size_t dim() const { return p0.dim(); }
    bool nondegenerate() const;
    Triangle translated(const RatVector& a) const { return {p0 + a, p1 + a, p2 + a}; }
    Triangle reversed() const { return {p0, p2, p1}; }
};

// Affine plane in canonical form: dir1, dir2 are the rows of the reduced
// echelon basis of the direction space, and base has zeros in both pivot
// coordinates. In this form the plane coordinates of a point p are simply
// (p - base)[pivot1], (p - base)[pivot2].
struct AffinePlane {
    RatVector base, dir1, dir2;
    int orientation = 1;
    std::size_t pivot1 = 0, pivot2 = 0;

    bool contains(const RatVector& p) const;
    std::pair<Rational, Rational> coords(const RatVector& p) const;
    RatVector point(const Rational& s, const Rational& t) const;

    friend bool operator==(const AffinePlane& a, const AffinePlane& b)
    {
        return a.base == b.base && a.dir1 == b.dir1 && a.dir2 == b.dir2;
    }
    friend bool operator<(const AffinePlane& a, const AffinePlane& b);
};

AffinePlane canonical_plane(const RatVector& point, const RatVector& d1, const RatVector& d2);
AffinePlane canonicalize(const AffinePlane& h);

// Affine line with dir scaled so its first nonzero entry is 1 and base zero
// in that coordinate. Points on the line are base + t*dir with t = p[pivot].
struct AffineLine {
    RatVector base, dir;
    std::size_t pivot = 0;

    bool contains(const RatVector& p) const;
    Rational param(const RatVector& p) const { return p[pivot] - base[pivot]; }
    RatVector point(const Rational& t) const { return base + t * dir; }

    friend bool operator==(const AffineLine& a, const AffineLine& b)
    {
        return a.base == b.base && a.dir == b.dir;
    }
    friend bool operator<(const AffineLine& a, const AffineLine& b);
};

AffineLine canonical_line(const RatVector& point, const RatVector& dir);
AffineLine canonicalize(const AffineLine& l);

AffinePlane plane_of_triangle(const Triangle& t);
int canonical_orientation_sign(const Triangle& t, const AffinePlane& h);

} // namespace plsurf
