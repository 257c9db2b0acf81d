#include "plsurf/currents.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace plsurf {

namespace {

const std::string kAlphaPrefix = "\xCE\xB1=("; // "α=("

int alpha_norm(const MultiIndex& a) { return std::accumulate(a.begin(), a.end(), 0); }

void add_to(std::map<MonomialKey, Rational>& terms, const MonomialKey& k, const Rational& c)
{
    if (sgn(c) == 0)
        return;
    auto [it, inserted] = terms.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0)
            terms.erase(it);
    }
}

int grade_sign(int m) { return (m * (m - 1) / 2) % 2 ? -1 : 1; }

} // namespace

int MonomialKey::weight() const { return alpha_norm(alpha) + static_cast<int>(wedge.size()); }

std::string format_key(const MonomialKey& k)
{
    std::string s = kAlphaPrefix;
    for (std::size_t i = 0; i < k.alpha.size(); ++i)
        s += (i ? "," : "") + std::to_string(k.alpha[i]);
    s += ");(";
    for (std::size_t i = 0; i < k.wedge.size(); ++i)
        s += (i ? "," : "") + std::to_string(k.wedge[i] + 1);
    return s + ")";
}

MonomialKey parse_key(const std::string& s, std::size_t dim)
{
    auto fail = [&] { return InputError("malformed current key \"" + s + "\""); };
    if (s.compare(0, kAlphaPrefix.size(), kAlphaPrefix) != 0)
        throw fail();
    auto close1 = s.find(')', kAlphaPrefix.size());
    if (close1 == std::string::npos || s.compare(close1, 3, ");(") != 0 || s.back() != ')')
        throw fail();
    auto parse_list = [&](const std::string& body) {
        std::vector<int> out;
        if (body.empty())
            return out;
        std::stringstream ss(body);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty() || !std::all_of(item.begin(), item.end(), ::isdigit) || item.size() > 6)
                throw fail();
            out.push_back(std::stoi(item));
        }
        return out;
    };
    MonomialKey k;
    k.alpha = parse_list(s.substr(kAlphaPrefix.size(), close1 - kAlphaPrefix.size()));
    auto w = parse_list(s.substr(close1 + 3, s.size() - close1 - 4));
    if (k.alpha.size() != dim)
        throw fail();
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] < 1 || static_cast<std::size_t>(w[i]) > dim || (i && w[i] <= w[i - 1]))
            throw fail();
        k.wedge.push_back(w[i] - 1);
    }
    return k;
}

void PolyCurrent::add_term(const MonomialKey& k, const Rational& c)
{
    if (k.weight() > max_weight)
        return;
    add_to(terms, k, c);
}

Rational PolyCurrent::coeff(const MonomialKey& k) const
{
    auto it = terms.find(k);
    return it == terms.end() ? Rational(0) : it->second;
}

PolyCurrent PolyCurrent::weight_part(int r) const
{
    PolyCurrent out(dim, grade, max_weight);
    for (const auto& [k, c] : terms)
        if (k.weight() == r)
            out.terms.emplace(k, c);
    return out;
}

PolyCurrent& PolyCurrent::operator+=(const PolyCurrent& o)
{
    if (o.dim != dim || o.grade != grade)
        throw InputError("current dim/grade mismatch");
    for (const auto& [k, c] : o.terms)
        add_term(k, c);
    return *this;
}

PolyCurrent& PolyCurrent::operator-=(const PolyCurrent& o)
{
    if (o.dim != dim || o.grade != grade)
        throw InputError("current dim/grade mismatch");
    for (const auto& [k, c] : o.terms)
        add_term(k, -c);
    return *this;
}

PolyCurrent& PolyCurrent::operator*=(const Rational& s)
{
    if (sgn(s) == 0)
        terms.clear();
    for (auto& [k, c] : terms)
        c *= s;
    return *this;
}

PolyCurrent operator+(PolyCurrent a, const PolyCurrent& b) { return a += b; }
PolyCurrent operator-(PolyCurrent a, const PolyCurrent& b) { return a -= b; }
PolyCurrent operator*(const Rational& s, PolyCurrent a) { return a *= s; }

void PolyForm::add_term(const MonomialKey& k, const Rational& c) { add_to(terms, k, c); }

Rational PolyForm::coeff(const MonomialKey& k) const
{
    auto it = terms.find(k);
    return it == terms.end() ? Rational(0) : it->second;
}

PolyForm& PolyForm::operator+=(const PolyForm& o)
{
    if (o.dim != dim || o.grade != grade)
        throw InputError("form dim/grade mismatch");
    for (const auto& [k, c] : o.terms)
        add_term(k, c);
    return *this;
}

PolyForm& PolyForm::operator*=(const Rational& s)
{
    if (sgn(s) == 0)
        terms.clear();
    for (auto& [k, c] : terms)
        c *= s;
    return *this;
}

int sort_wedge(std::vector<int>& idx)
{
    int s = 1;
    for (std::size_t i = 1; i < idx.size(); ++i)
        for (std::size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
            if (idx[j - 1] == idx[j])
                return 0;
            std::swap(idx[j - 1], idx[j]);
            s = -s;
        }
    return s;
}

Integer factorial(long n)
{
    Integer f = 1;
    for (long k = 2; k <= n; ++k)
        f *= k;
    return f;
}

Integer multi_factorial(const MultiIndex& alpha)
{
    Integer f = 1;
    for (int a : alpha)
        f *= factorial(a);
    return f;
}

std::vector<MultiIndex> multi_indices(std::size_t dim, int n)
{
    std::vector<MultiIndex> out;
    if (dim == 0)
        return out;
    MultiIndex cur(dim, 0);
    auto rec = [&](auto&& self, std::size_t pos, int left) -> void {
        if (pos + 1 == dim) {
            cur[pos] = left;
            out.push_back(cur);
            return;
        }
        for (int a = left; a >= 0; --a) {
            cur[pos] = a;
            self(self, pos + 1, left - a);
        }
    };
    rec(rec, 0, n);
    return out;
}

Rational pairing(const PolyCurrent& c, const PolyForm& f)
{
    if (c.dim != f.dim)
        throw InputError("pairing: dimension mismatch");
    if (c.grade != f.grade)
        throw InputError("pairing: grade mismatch");
    Rational s = 0;
    for (const auto& [k, x] : c.terms) {
        auto it = f.terms.find(k);
        if (it != f.terms.end())
            s += x * it->second * Rational(multi_factorial(k.alpha));
    }
    return grade_sign(c.grade) * s;
}

PolyForm exterior_d(const PolyForm& f)
{
    PolyForm out(f.dim, f.grade + 1);
    for (const auto& [k, c] : f.terms)
        for (std::size_t l = 0; l < f.dim; ++l) {
            if (k.alpha[l] == 0)
                continue;
            MonomialKey n{k.alpha, {static_cast<int>(l)}};
            n.alpha[l] -= 1;
            n.wedge.insert(n.wedge.end(), k.wedge.begin(), k.wedge.end());
            int s = sort_wedge(n.wedge);
            if (s)
                out.add_term(n, Rational(s * k.alpha[l]) * c);
        }
    return out;
}

// codifferential: e^a (x) e_I ->  - sum_p (-1)^p e^{a + e_{I_p}} (x) e_{I \ I_p}
PolyCurrent codifferential(const PolyCurrent& c)
{
    if (c.grade < 1)
        throw InputError("codifferential of a grade-0 current");
    PolyCurrent out(c.dim, c.grade - 1, c.max_weight);
    for (const auto& [k, x] : c.terms)
        for (std::size_t p = 0; p < k.wedge.size(); ++p) {
            MonomialKey n{k.alpha, {}};
            n.alpha[static_cast<std::size_t>(k.wedge[p])] += 1;
            for (std::size_t q = 0; q < k.wedge.size(); ++q)
                if (q != p)
                    n.wedge.push_back(k.wedge[q]);
            out.add_term(n, p % 2 ? Rational(x) : Rational(-x));
        }
    return out;
}

PolyCurrent e_op(const PolyCurrent& c)
{
    PolyCurrent out(c.dim, c.grade + 1, c.max_weight);
    for (const auto& [k, x] : c.terms)
        for (std::size_t l = 0; l < c.dim; ++l) {
            if (k.alpha[l] == 0)
                continue;
            MonomialKey n{k.alpha, {static_cast<int>(l)}};
            n.alpha[l] -= 1;
            n.wedge.insert(n.wedge.end(), k.wedge.begin(), k.wedge.end());
            int s = sort_wedge(n.wedge);
            if (s)
                out.add_term(n, Rational(s * k.alpha[l]) * x);
        }
    return out;
}

PolyCurrent ell(const PolyCurrent& c)
{
    PolyCurrent out = e_op(codifferential(c));
    out += codifferential(e_op(c));
    return out;
}

namespace {

PolyCurrent divide_by_minus_weight(PolyCurrent c)
{
    for (auto& [k, x] : c.terms) {
        int w = k.weight();
        if (w == 0)
            throw InputError("projection undefined on weight-0 components");
        x /= -w;
    }
    return c;
}

} // namespace

PolyCurrent project_closed(const PolyCurrent& c) { return divide_by_minus_weight(codifferential(e_op(c))); }

PolyCurrent project_ker_e(const PolyCurrent& c)
{
    if (c.grade == 0)
        return divide_by_minus_weight(PolyCurrent(c.dim, 0, c.max_weight));
    return divide_by_minus_weight(e_op(codifferential(c)));
}

bool is_closed(const PolyCurrent& c) { return c.grade == 0 || codifferential(c).is_zero(); }

PolyCurrent multiply_vector(const RatVector& v, const PolyCurrent& c)
{
    if (v.dim() != c.dim)
        throw InputError("multiply_vector: dimension mismatch");
    PolyCurrent out(c.dim, c.grade, c.max_weight);
    for (const auto& [k, x] : c.terms)
        for (std::size_t l = 0; l < c.dim; ++l) {
            if (sgn(v[l]) == 0)
                continue;
            MonomialKey n = k;
            n.alpha[l] += 1;
            out.add_term(n, v[l] * x);
        }
    return out;
}

Rational closed_pairing(const PolyCurrent& c, const PolyForm& f)
{
    if (f.grade != c.grade + 1)
        throw InputError("closed_pairing: form grade must be current grade + 1");
    PolyCurrent beta = divide_by_minus_weight(e_op(c));
    return pairing(beta, f);
}

namespace {

// Dense polynomial in (s, t): coefficient of s^a t^b at index [a][b].
using Poly2 = std::vector<std::vector<Rational>>;

Poly2 poly_mul_linear(const Poly2& p, const Rational& c0, const Rational& cs, const Rational& ct)
{
    std::size_t n = p.size();
    Poly2 r(n + 1, std::vector<Rational>(n + 1));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; a + b < n; ++b) {
            const Rational& x = p[a][b];
            if (sgn(x) == 0)
                continue;
            r[a][b] += c0 * x;
            r[a + 1][b] += cs * x;
            r[a][b + 1] += ct * x;
        }
    return r;
}

// int over {s,t >= 0, s+t <= 1} of s^a t^b = a! b! / (a+b+2)!
Rational simplex_moment(int a, int b)
{
    Rational m(factorial(a) * factorial(b), factorial(a + b + 2));
    m.canonicalize();
    return m;
}

// Integrals of z^alpha ds dt over the standard simplex after the affine
// pullback z = p0 + s(p1-p0) + t(p2-p0), for every alpha with |alpha| <= n.
std::map<MultiIndex, Rational> pulled_back_moments(const Triangle& t, int n)
{
    std::size_t dim = t.dim();
    RatVector a = t.p1 - t.p0, b = t.p2 - t.p0;
    std::map<MultiIndex, Poly2> polys;
    std::map<MultiIndex, Rational> out;
    polys[MultiIndex(dim, 0)] = Poly2{{Rational(1)}};
    for (int deg = 0; deg <= n; ++deg)
        for (const auto& alpha : multi_indices(dim, deg)) {
            if (deg > 0) {
                std::size_t l = 0;
                while (alpha[l] == 0)
                    ++l;
                MultiIndex prev = alpha;
                prev[l] -= 1;
                polys[alpha] = poly_mul_linear(polys.at(prev), t.p0[l], a[l], b[l]);
            }
            const Poly2& p = polys.at(alpha);
            Rational m = 0;
            for (std::size_t i = 0; i < p.size(); ++i)
                for (std::size_t j = 0; i + j < p.size(); ++j)
                    if (sgn(p[i][j]) != 0)
                        m += p[i][j] * simplex_moment(static_cast<int>(i), static_cast<int>(j));
            out[alpha] = m;
        }
    return out;
}

} // namespace

Rational triangle_integral(const Triangle& t, const MultiIndex& alpha, int i, int j)
{
    if (!t.nondegenerate())
        return 0;
    RatVector a = t.p1 - t.p0, b = t.p2 - t.p0;
    Rational jac = a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)]
        - a[static_cast<std::size_t>(j)] * b[static_cast<std::size_t>(i)];
    if (sgn(jac) == 0)
        return 0;
    auto moments = pulled_back_moments(t, alpha_norm(alpha));
    return jac * moments.at(alpha);
}

PolyCurrent soup_current(const SignedTriangleSoup& soup, std::size_t dim, int max_weight, const Exec& exec)
{
    std::vector<PolyCurrent> parts(soup.size(), PolyCurrent(dim, 2, max_weight));
    parallel_for(soup.size(), exec, [&](std::size_t idx) {
        const auto& [tri, sg] = soup[idx];
        if (tri.dim() != dim)
            throw InputError("soup_current: triangle dimension mismatch");
        if (!tri.nondegenerate() || max_weight < 2)
            return;
        RatVector a = tri.p1 - tri.p0, b = tri.p2 - tri.p0;
        auto moments = pulled_back_moments(tri, max_weight - 2);
        PolyCurrent& out = parts[idx];
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = i + 1; j < dim; ++j) {
                Rational jac = a[i] * b[j] - a[j] * b[i];
                if (sgn(jac) == 0)
                    continue;
                jac *= sg;
                for (const auto& [alpha, m] : moments) {
                    Rational c = jac * m / Rational(multi_factorial(alpha));
                    out.add_term({alpha, {static_cast<int>(i), static_cast<int>(j)}}, c);
                }
            }
    });
    PolyCurrent total(dim, 2, max_weight);
    for (const auto& p : parts)
        total += p;
    return total;
}

// Coefficients of translated soups: c'_{b+g} = sum_g a^g / g! * c_b.
PolyCurrent translate_current(const PolyCurrent& c, const RatVector& a)
{
    if (a.dim() != c.dim)
        throw InputError("translate_current: dimension mismatch");
    PolyCurrent out(c.dim, c.grade, c.max_weight);
    for (const auto& [k, x] : c.terms) {
        int room = c.max_weight - k.weight();
        for (int n = 0; n <= room; ++n)
            for (const auto& g : multi_indices(c.dim, n)) {
                Rational f = x;
                for (std::size_t l = 0; l < c.dim && sgn(f) != 0; ++l)
                    for (int e = 0; e < g[l]; ++e)
                        f *= a[l];
                if (sgn(f) == 0)
                    continue;
                f /= Rational(multi_factorial(g));
                MonomialKey n2 = k;
                for (std::size_t l = 0; l < c.dim; ++l)
                    n2.alpha[l] += g[l];
                out.add_term(n2, f);
            }
    }
    return out;
}

std::vector<HookIndex> hook_indices(std::size_t dim, int weight)
{
    std::vector<HookIndex> out;
    int r = weight - 3;
    if (r < 0)
        return out;
    int d = static_cast<int>(dim);
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j)
            for (int k = j + 1; k < d; ++k) {
                std::vector<int> q;
                auto rec = [&](auto&& self, int hi) -> void {
                    if (static_cast<int>(q.size()) == r) {
                        out.push_back({q, i, j, k});
                        return;
                    }
                    for (int v = hi; v >= i; --v) {
                        q.push_back(v);
                        self(self, v);
                        q.pop_back();
                    }
                };
                rec(rec, d - 1);
            }
    return out;
}

namespace {

void check_hook(std::size_t dim, const HookIndex& h)
{
    int d = static_cast<int>(dim);
    bool ok = 0 <= h.i && h.i < h.j && h.j < h.k && h.k < d;
    for (std::size_t s = 0; s < h.q.size(); ++s) {
        ok = ok && h.q[s] < d && h.q[s] >= h.i;
        if (s > 0)
            ok = ok && h.q[s - 1] >= h.q[s];
    }
    if (!ok)
        throw InputError("hook index data violates q1 >= ... >= qr >= i < j < k");
}

} // namespace

PolyCurrent basis_gamma(std::size_t dim, const HookIndex& h, int max_weight)
{
    check_hook(dim, h);
    MonomialKey k{MultiIndex(dim, 0), {h.i, h.j, h.k}};
    for (int q : h.q)
        k.alpha[static_cast<std::size_t>(q)] += 1;
    PolyCurrent g(dim, 3, max_weight);
    g.add_term(k, -1);
    return g;
}

PolyForm basis_omega(std::size_t dim, const HookIndex& h)
{
    check_hook(dim, h);
    MonomialKey k{MultiIndex(dim, 0), {h.j, h.k}};
    for (int q : h.q)
        k.alpha[static_cast<std::size_t>(q)] += 1;
    k.alpha[static_cast<std::size_t>(h.i)] += 1;
    PolyForm f(dim, 2);
    f.add_term(k, Rational(1) / Rational(multi_factorial(k.alpha)));
    return f;
}

} // namespace plsurf
