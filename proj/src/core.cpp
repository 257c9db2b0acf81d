#include "plsurf/core.hpp"

#include <algorithm>
#include <cctype>

namespace plsurf {

Rational make_rational(long num, long den)
{
    if (den == 0)
        throw InputError("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

namespace {

bool parse_integer(std::string_view s, Integer& out)
{
    if (s.empty())
        return false;
    std::size_t i = 0;
    if (s[0] == '-' || s[0] == '+')
        i = 1;
    if (i == s.size())
        return false;
    for (std::size_t k = i; k < s.size(); ++k)
        if (!std::isdigit(static_cast<unsigned char>(s[k])))
            return false;
    std::string digits(s.substr(s[0] == '+' ? 1 : 0));
    return out.set_str(digits, 10) == 0;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    auto slash = text.find('/');
    Integer num, den = 1;
    bool ok = slash == std::string_view::npos
        ? parse_integer(text, num)
        : parse_integer(text.substr(0, slash), num) && parse_integer(text.substr(slash + 1), den);
    if (!ok)
        throw InputError("malformed rational \"" + std::string(text) + "\"");
    if (den == 0)
        throw InputError("zero denominator in \"" + std::string(text) + "\"");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string format_rational(const Rational& r)
{
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

int sign(const Rational& r) { return sgn(r); }

bool RatVector::is_zero() const
{
    return std::all_of(e_.begin(), e_.end(), [](const Rational& x) { return sgn(x) == 0; });
}

RatVector& RatVector::operator+=(const RatVector& o)
{
    if (o.dim() != dim())
        throw InputError("vector dimension mismatch");
    for (std::size_t i = 0; i < e_.size(); ++i)
        e_[i] += o.e_[i];
    return *this;
}

RatVector& RatVector::operator-=(const RatVector& o)
{
    if (o.dim() != dim())
        throw InputError("vector dimension mismatch");
    for (std::size_t i = 0; i < e_.size(); ++i)
        e_[i] -= o.e_[i];
    return *this;
}

RatVector& RatVector::operator*=(const Rational& s)
{
    for (auto& x : e_)
        x *= s;
    return *this;
}

bool operator<(const RatVector& a, const RatVector& b)
{
    return std::lexicographical_compare(a.e_.begin(), a.e_.end(), b.e_.begin(), b.e_.end(),
        [](const Rational& x, const Rational& y) { return cmp(x, y) < 0; });
}

RatVector operator+(RatVector a, const RatVector& b) { return a += b; }
RatVector operator-(RatVector a, const RatVector& b) { return a -= b; }
RatVector operator-(RatVector a) { return a *= Rational(-1); }
RatVector operator*(const Rational& s, RatVector a) { return a *= s; }

Rational dot(const RatVector& a, const RatVector& b)
{
    if (a.dim() != b.dim())
        throw InputError("vector dimension mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < a.dim(); ++i)
        s += a[i] * b[i];
    return s;
}

RatVector unit_vector(std::size_t dim, std::size_t i)
{
    RatVector v(dim);
    v[i] = 1;
    return v;
}

std::string to_string(const RatVector& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.dim(); ++i) {
        if (i)
            s += ",";
        s += v[i].get_str();
    }
    return s + ")";
}

Matrix Matrix::identity(std::size_t n)
{
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<RatVector>& rows, std::size_t cols)
{
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].dim() != cols)
            throw InputError("row length mismatch");
        for (std::size_t c = 0; c < cols; ++c)
            m.at(r, c) = rows[r][c];
    }
    return m;
}

Matrix Matrix::from_columns(const std::vector<RatVector>& cols, std::size_t rows)
{
    return from_rows(cols, rows).transpose();
}

RatVector Matrix::row(std::size_t r) const
{
    return RatVector(std::vector<Rational>(d_.begin() + r * cols_, d_.begin() + (r + 1) * cols_));
}

RatVector Matrix::column(std::size_t c) const
{
    RatVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        v[r] = at(r, c);
    return v;
}

Matrix Matrix::transpose() const
{
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t.at(c, r) = at(r, c);
    return t;
}

Matrix Matrix::stacked(const Matrix& below) const
{
    if (below.cols_ != cols_ && below.rows_ != 0 && rows_ != 0)
        throw InputError("stacking matrices with different column counts");
    Matrix m(rows_ + below.rows_, std::max(cols_, below.cols_));
    std::copy(d_.begin(), d_.end(), m.d_.begin());
    std::copy(below.d_.begin(), below.d_.end(), m.d_.begin() + d_.size());
    return m;
}

Matrix operator*(const Matrix& a, const Matrix& b)
{
    if (a.cols() != b.rows())
        throw InputError("matrix shape mismatch");
    Matrix m(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (sgn(a.at(i, k)) == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                m.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return m;
}

RatVector operator*(const Matrix& a, const RatVector& x)
{
    if (a.cols() != x.dim())
        throw InputError("matrix/vector shape mismatch");
    RatVector y(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k)
            if (sgn(a.at(i, k)) != 0 && sgn(x[k]) != 0)
                y[i] += a.at(i, k) * x[k];
    return y;
}

RowEchelon rref(const Matrix& a)
{
    Matrix m = a;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && sgn(m.at(p, c)) == 0)
            ++p;
        if (p == m.rows())
            continue;
        if (p != r)
            for (std::size_t k = 0; k < m.cols(); ++k)
                std::swap(m.at(p, k), m.at(r, k));
        Rational inv = 1 / m.at(r, c);
        for (std::size_t k = c; k < m.cols(); ++k)
            m.at(r, k) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || sgn(m.at(i, c)) == 0)
                continue;
            Rational f = m.at(i, c);
            for (std::size_t k = c; k < m.cols(); ++k)
                if (sgn(m.at(r, k)) != 0)
                    m.at(i, k) -= f * m.at(r, k);
        }
        pivots.push_back(c);
        ++r;
    }
    Matrix reduced(r, m.cols());
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t k = 0; k < m.cols(); ++k)
            reduced.at(i, k) = m.at(i, k);
    return {std::move(reduced), std::move(pivots)};
}

std::size_t rank(const Matrix& a) { return rref(a).pivots.size(); }

std::size_t span_dim(const std::vector<RatVector>& vs)
{
    if (vs.empty())
        return 0;
    for (const auto& v : vs)
        if (v.dim() != vs[0].dim())
            throw InputError("span_dim: vectors of different dimensions");
    return rank(Matrix::from_rows(vs, vs[0].dim()));
}

std::optional<RatVector> solve_linear(const Matrix& a, const RatVector& b)
{
    if (b.dim() != a.rows())
        throw InputError("solve_linear: shape mismatch");
    Matrix aug(a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c)
            aug.at(r, c) = a.at(r, c);
        aug.at(r, a.cols()) = b[r];
    }
    RowEchelon e = rref(aug);
    RatVector x(a.cols());
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
        if (e.pivots[i] == a.cols())
            return std::nullopt;
        x[e.pivots[i]] = e.reduced.at(i, a.cols());
    }
    return x;
}

std::vector<RatVector> kernel_basis(const Matrix& a)
{
    RowEchelon e = rref(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto p : e.pivots)
        is_pivot[p] = true;
    std::vector<RatVector> basis;
    for (std::size_t f = 0; f < a.cols(); ++f) {
        if (is_pivot[f])
            continue;
        RatVector v(a.cols());
        v[f] = 1;
        for (std::size_t i = 0; i < e.pivots.size(); ++i)
            v[e.pivots[i]] = -e.reduced.at(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

bool linearly_dependent(const RatVector& a, const RatVector& b)
{
    if (a.dim() != b.dim())
        throw InputError("vector dimension mismatch");
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = i + 1; j < a.dim(); ++j)
            if (a[i] * b[j] != a[j] * b[i])
                return false;
    return true;
}

bool Subspace::contains(const RatVector& v) const
{
    RatVector r = v;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (sgn(r[pivots[i]]) != 0)
            r -= r[pivots[i]] * basis[i];
    return r.is_zero();
}

Subspace span_of(const std::vector<RatVector>& vs, std::size_t ambient)
{
    Subspace s;
    s.ambient = ambient;
    if (vs.empty())
        return s;
    RowEchelon e = rref(Matrix::from_rows(vs, ambient));
    for (std::size_t i = 0; i < e.pivots.size(); ++i)
        s.basis.push_back(e.reduced.row(i));
    s.pivots = e.pivots;
    return s;
}

bool Triangle::nondegenerate() const { return !linearly_dependent(p1 - p0, p2 - p0); }

bool AffinePlane::contains(const RatVector& p) const
{
    auto [s, t] = coords(p);
    return point(s, t) == p;
}

std::pair<Rational, Rational> AffinePlane::coords(const RatVector& p) const
{
    return {p[pivot1] - base[pivot1], p[pivot2] - base[pivot2]};
}

RatVector AffinePlane::point(const Rational& s, const Rational& t) const
{
    return base + s * dir1 + t * dir2;
}

bool operator<(const AffinePlane& a, const AffinePlane& b)
{
    if (a.dir1 != b.dir1)
        return a.dir1 < b.dir1;
    if (a.dir2 != b.dir2)
        return a.dir2 < b.dir2;
    return a.base < b.base;
}

AffinePlane canonical_plane(const RatVector& point, const RatVector& d1, const RatVector& d2)
{
    Subspace s = span_of({d1, d2}, point.dim());
    if (s.dim() != 2)
        throw InputError("plane directions are linearly dependent");
    AffinePlane h;
    h.dir1 = s.basis[0];
    h.dir2 = s.basis[1];
    h.pivot1 = s.pivots[0];
    h.pivot2 = s.pivots[1];
    RatVector b = point;
    b -= b[h.pivot1] * h.dir1;
    b -= b[h.pivot2] * h.dir2;
    h.base = std::move(b);
    return h;
}

AffinePlane canonicalize(const AffinePlane& h) { return canonical_plane(h.base, h.dir1, h.dir2); }

bool AffineLine::contains(const RatVector& p) const { return point(param(p)) == p; }

bool operator<(const AffineLine& a, const AffineLine& b)
{
    if (a.dir != b.dir)
        return a.dir < b.dir;
    return a.base < b.base;
}

AffineLine canonical_line(const RatVector& point, const RatVector& dir)
{
    if (dir.is_zero())
        throw InputError("line direction is zero");
    AffineLine l;
    std::size_t p = 0;
    while (sgn(dir[p]) == 0)
        ++p;
    l.pivot = p;
    l.dir = Rational(1 / dir[p]) * dir;
    l.base = point - point[p] * l.dir;
    return l;
}

AffineLine canonicalize(const AffineLine& l) { return canonical_line(l.base, l.dir); }

AffinePlane plane_of_triangle(const Triangle& t)
{
    if (!t.nondegenerate())
        throw InputError("degenerate triangle has no plane");
    return canonical_plane(t.p0, t.p1 - t.p0, t.p2 - t.p0);
}

int canonical_orientation_sign(const Triangle& t, const AffinePlane& h)
{
    if (!t.nondegenerate())
        throw InputError("degenerate triangle has no orientation");
    if (!h.contains(t.p0) || !h.contains(t.p1) || !h.contains(t.p2))
        throw InputError("triangle does not lie in the plane");
    RatVector a = t.p1 - t.p0, b = t.p2 - t.p0;
    Rational det = a[h.pivot1] * b[h.pivot2] - a[h.pivot2] * b[h.pivot1];
    return h.orientation * sgn(det);
}

} // namespace plsurf
