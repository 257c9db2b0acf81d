#include "plsurf/tensor.hpp"

namespace plsurf {

TruncatedTensor TruncatedTensor::one(std::size_t d, std::size_t n)
{
    TruncatedTensor t(d, n);
    t.terms[{}] = 1;
    return t;
}

TruncatedTensor TruncatedTensor::from_vector(const RatVector& v, std::size_t n)
{
    TruncatedTensor t(v.dim(), n);
    if (n >= 1)
        for (std::size_t i = 0; i < v.dim(); ++i)
            t.add_term({static_cast<int>(i)}, v[i]);
    return t;
}

TruncatedTensor TruncatedTensor::word(std::size_t d, std::size_t n, const Word& w, const Rational& c)
{
    TruncatedTensor t(d, n);
    t.add_term(w, c);
    return t;
}

Rational TruncatedTensor::coeff(const Word& w) const
{
    auto it = terms.find(w);
    return it == terms.end() ? Rational(0) : it->second;
}

void TruncatedTensor::add_term(const Word& w, const Rational& c)
{
    if (w.size() > level || sgn(c) == 0)
        return;
    auto [it, inserted] = terms.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0)
            terms.erase(it);
    }
}

TruncatedTensor TruncatedTensor::degree_part(std::size_t k) const
{
    TruncatedTensor t(dim, level);
    for (const auto& [w, c] : terms)
        if (w.size() == k)
            t.terms.emplace(w, c);
    return t;
}

std::size_t TruncatedTensor::max_degree() const
{
    std::size_t m = 0;
    for (const auto& [w, c] : terms)
        m = std::max(m, w.size());
    return m;
}

namespace {

void check_compatible(const TruncatedTensor& a, const TruncatedTensor& b)
{
    if (a.dim != b.dim || a.level != b.level)
        throw InputError("tensor dim/level mismatch");
}

} // namespace

TruncatedTensor& TruncatedTensor::operator+=(const TruncatedTensor& o)
{
    check_compatible(*this, o);
    for (const auto& [w, c] : o.terms)
        add_term(w, c);
    return *this;
}

TruncatedTensor& TruncatedTensor::operator-=(const TruncatedTensor& o)
{
    check_compatible(*this, o);
    for (const auto& [w, c] : o.terms)
        add_term(w, -c);
    return *this;
}

TruncatedTensor& TruncatedTensor::operator*=(const Rational& s)
{
    if (sgn(s) == 0) {
        terms.clear();
        return *this;
    }
    for (auto& [w, c] : terms)
        c *= s;
    return *this;
}

TruncatedTensor operator+(TruncatedTensor a, const TruncatedTensor& b) { return a += b; }
TruncatedTensor operator-(TruncatedTensor a, const TruncatedTensor& b) { return a -= b; }
TruncatedTensor operator*(const Rational& s, TruncatedTensor a) { return a *= s; }

TruncatedTensor mul(const TruncatedTensor& a, const TruncatedTensor& b)
{
    check_compatible(a, b);
    TruncatedTensor r(a.dim, a.level);
    for (const auto& [u, x] : a.terms)
        for (const auto& [v, y] : b.terms) {
            if (u.size() + v.size() > a.level)
                continue;
            Word w = u;
            w.insert(w.end(), v.begin(), v.end());
            r.add_term(w, x * y);
        }
    return r;
}

TruncatedTensor commutator(const TruncatedTensor& a, const TruncatedTensor& b)
{
    return mul(a, b) - mul(b, a);
}

TruncatedTensor tensor_inverse(const TruncatedTensor& g)
{
    Rational g0 = g.coeff({});
    if (sgn(g0) == 0)
        throw InputError("tensor_inverse: zero constant term");
    // g = g0 (1 + x), so g^-1 = g0^-1 * sum (-x)^n.
    TruncatedTensor x = Rational(1 / g0) * g;
    x.add_term({}, -1);
    TruncatedTensor minus_x = Rational(-1) * x;
    TruncatedTensor sum = TruncatedTensor::one(g.dim, g.level), power = sum;
    for (std::size_t n = 1; n <= g.level; ++n) {
        power = mul(power, minus_x);
        sum += power;
    }
    return Rational(1 / g0) * sum;
}

TruncatedTensor tensor_exp(const TruncatedTensor& x)
{
    if (sgn(x.coeff({})) != 0)
        throw InputError("tensor_exp: argument must have zero constant term");
    TruncatedTensor sum = TruncatedTensor::one(x.dim, x.level), power = sum;
    for (std::size_t n = 1; n <= x.level; ++n) {
        power = make_rational(1, static_cast<long>(n)) * mul(power, x);
        sum += power;
    }
    return sum;
}

TruncatedTensor log(const TruncatedTensor& g)
{
    if (g.coeff({}) != 1)
        throw InputError("log: constant term must be 1");
    TruncatedTensor x = g;
    x.add_term({}, -1);
    TruncatedTensor sum(g.dim, g.level), power = TruncatedTensor::one(g.dim, g.level);
    for (std::size_t n = 1; n <= g.level; ++n) {
        power = mul(power, x);
        sum += make_rational(n % 2 ? 1 : -1, static_cast<long>(n)) * power;
    }
    return sum;
}

TruncatedTensor exp_segment(const RatVector& v, std::size_t level)
{
    TruncatedTensor sum = TruncatedTensor::one(v.dim(), level), power = sum;
    TruncatedTensor x = TruncatedTensor::from_vector(v, level);
    for (std::size_t k = 1; k <= level; ++k) {
        power = make_rational(1, static_cast<long>(k)) * mul(power, x);
        sum += power;
    }
    return sum;
}

TruncatedTensor path_signature(const PLWord& w, std::size_t level)
{
    TruncatedTensor s = TruncatedTensor::one(w.dim, level);
    for (const auto& v : reduce(w).letters)
        s = mul(s, exp_segment(v, level));
    return s;
}

namespace {

TruncatedTensor right_nested(const Word& w, std::size_t dim, std::size_t level)
{
    TruncatedTensor r = TruncatedTensor::word(dim, level, {w.back()});
    for (std::size_t i = w.size() - 1; i-- > 0;)
        r = commutator(TruncatedTensor::word(dim, level, {w[i]}), r);
    return r;
}

} // namespace

TruncatedTensor dynkin_map(const TruncatedTensor& x)
{
    TruncatedTensor out(x.dim, x.level);
    for (const auto& [w, c] : x.terms) {
        if (w.empty())
            continue;
        out += c * right_nested(w, x.dim, x.level);
    }
    return out;
}

bool is_lie(const TruncatedTensor& x)
{
    if (sgn(x.coeff({})) != 0)
        throw InputError("is_lie: constant term must be zero");
    for (std::size_t k = 1; k <= x.level; ++k) {
        TruncatedTensor xk = x.degree_part(k);
        if (dynkin_map(xk) != Rational(k) * xk)
            return false;
    }
    return true;
}

} // namespace plsurf
