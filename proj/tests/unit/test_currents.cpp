#include "plsurf/currents.hpp"

#include "helpers.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace plsurf;
using testing::r;
using testing::vec;

namespace {

oracle::Point to_point(const RatVector& v)
{
    oracle::Point p;
    for (const auto& x : v)
        p.push_back(x.get_d());
    return p;
}

// All weight-w monomial keys of grade m in dimension d.
std::vector<MonomialKey> all_keys(std::size_t d, int m, int w)
{
    std::vector<std::vector<int>> wedges;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == m) {
            wedges.push_back(cur);
            return;
        }
        for (int i = start; i < static_cast<int>(d); ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    std::vector<MonomialKey> keys;
    if (w < m)
        return keys;
    for (const auto& a : multi_indices(d, w - m))
        for (const auto& wd : wedges)
            keys.push_back({a, wd});
    return keys;
}

std::size_t closed_dim(std::size_t d, int w)
{
    auto keys = all_keys(d, 2, w);
    std::vector<RatVector> images;
    auto targets = all_keys(d, 1, w);
    for (const auto& k : keys) {
        PolyCurrent c(d, 2, w);
        c.add_term(k, 1);
        PolyCurrent img = codifferential(c);
        RatVector v(targets.size());
        for (std::size_t t = 0; t < targets.size(); ++t)
            v[t] = img.coeff(targets[t]);
        images.push_back(v);
    }
    return keys.size() - span_dim(images);
}

} // namespace

TEST_CASE("monomial keys round-trip")
{
    MonomialKey k{{1, 0, 0}, {1, 2}};
    CHECK(format_key(k) == "α=(1,0,0);(2,3)");
    CHECK(parse_key("α=(1,0,0);(2,3)", 3) == k);
    CHECK_THROWS_AS(parse_key("α=(1,0);(2,3)", 3), InputError);
}

TEST_CASE("triangle integrals agree with quadrature")
{
    std::mt19937_64 rng(2);
    for (int n = 0; n < 20; ++n) {
        Triangle t{testing::random_vec(rng, 3), testing::random_vec(rng, 3), testing::random_vec(rng, 3)};
        MultiIndex alpha{n % 3, (n / 3) % 2, n % 2};
        double exact = triangle_integral(t, alpha, 0, 2).get_d();
        double quad = oracle::triangle_form_integral({to_point(t.p0), to_point(t.p1), to_point(t.p2)}, 0, 2,
                                                     [&](const oracle::Point& z) {
                                                         return std::pow(z[0], alpha[0]) * std::pow(z[1], alpha[1])
                                                             * std::pow(z[2], alpha[2]);
                                                     });
        CHECK(std::fabs(exact - quad) <= 1e-9 * (1 + std::fabs(exact)));
    }
}

TEST_CASE("codifferential squares to zero and closed surfaces give closed currents")
{
    RatVector o = vec({0, 0, 0}), a = vec({1, 0, 0}), b = vec({0, 1, 0}), c = vec({0, 0, 1});
    SignedTriangleSoup tet{{{o, b, a}, 1}, {{o, a, c}, 1}, {{o, c, b}, 1}, {{a, b, c}, 1}};
    PolyCurrent g = soup_current(tet, 3, 5);
    CHECK(is_closed(g));
    CHECK(codifferential(codifferential(g)).is_zero());

    SignedTriangleSoup open{{{o, a, b}, 1}};
    CHECK_FALSE(is_closed(soup_current(open, 3, 4)));
}

TEST_CASE("translation of currents matches translated soups")
{
    RatVector o = vec({0, 0, 0}), a = vec({1, 0, 0}), b = vec({0, 1, 0}), c = vec({0, 0, 1});
    SignedTriangleSoup tet{{{o, b, a}, 1}, {{o, a, c}, 1}, {{o, c, b}, 1}, {{a, b, c}, 1}};
    RatVector shift = vec({2, -1, 3});
    SignedTriangleSoup moved;
    for (const auto& t : tet)
        moved.push_back({t.triangle.translated(shift), t.sign});
    CHECK(translate_current(soup_current(tet, 3, 5), shift) == soup_current(moved, 3, 5));
}

TEST_CASE("hook index count matches the closed-current dimension")
{
    for (std::size_t d = 2; d <= 4; ++d)
        for (int w = 3; w <= 5; ++w)
            CHECK(hook_indices(d, w).size() == closed_dim(d, w));
}

TEST_CASE("dual bases pair to the identity")
{
    for (int w = 3; w <= 5; ++w) {
        auto hooks = hook_indices(3, w);
        for (std::size_t p = 0; p < hooks.size(); ++p) {
            PolyForm f = exterior_d(basis_omega(3, hooks[p]));
            for (std::size_t q = 0; q < hooks.size(); ++q)
                CHECK(closed_pairing(codifferential(basis_gamma(3, hooks[q], w)), f) == (p == q ? 1 : 0));
        }
    }
}

TEST_CASE("ell acts on homogeneous currents by minus the weight")
{
    PolyCurrent c(3, 2, 5);
    c.add_term({{1, 0, 2}, {0, 1}}, r(3, 2));
    c.add_term({{0, 1, 2}, {1, 2}}, -1);
    CHECK(ell(c) == r(-5) * c);
}

namespace {

PolyCurrent random_current(std::mt19937_64& rng, std::size_t d, int m, int w)
{
    std::uniform_int_distribution<int> c(-3, 3);
    PolyCurrent out(d, m, w);
    for (const auto& k : all_keys(d, m, w))
        if (int x = c(rng); x != 0 && c(rng) > 0)
            out.add_term(k, r(x));
    return out;
}

PolyForm random_form(std::mt19937_64& rng, std::size_t d, int m, int w)
{
    std::uniform_int_distribution<int> c(-3, 3);
    PolyForm out(d, m);
    for (const auto& k : all_keys(d, m, w))
        if (int x = c(rng); x != 0)
            out.add_term(k, r(x));
    return out;
}

} // namespace

TEST_CASE("operator identities on random inputs")
{
    std::mt19937_64 rng(6);
    for (int w = 3; w <= 6; ++w) {
        PolyCurrent c2 = random_current(rng, 3, 2, w), c1 = random_current(rng, 3, 1, w);
        CHECK(codifferential(codifferential(c2)).is_zero());
        CHECK(e_op(e_op(c1)).is_zero());
        PolyForm f1 = random_form(rng, 3, 1, w - 1);
        CHECK(exterior_d(exterior_d(f1)).is_zero());

        // <del c, f> = (-1)^m <c, d f> for grade-m currents
        PolyForm f = random_form(rng, 3, 1, w - 1);
        CHECK(pairing(codifferential(c2), f) == pairing(c2, exterior_d(f)));
        PolyForm g = random_form(rng, 3, 0, w - 1);
        CHECK(pairing(codifferential(c1), g) == r(-1) * pairing(c1, exterior_d(g)));

        CHECK(codifferential(project_closed(c2)).is_zero());
        CHECK(e_op(project_ker_e(c2)).is_zero());
        CHECK(project_closed(c2) + project_ker_e(c2) == c2);
    }
    PolyCurrent closed = codifferential(basis_gamma(3, hook_indices(3, 4)[0], 4));
    CHECK(project_closed(closed) == closed);
}
