// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include "plsurf/commands.hpp"
#include "plsurf/decide.hpp"
#include "plsurf/kapranov.hpp"

#include "oracles.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

using namespace plsurf;

namespace {

struct Outcome {
    bool passed = true;
    std::string detail;
};

Outcome fail(std::string why) { return {false, std::move(why)}; }

RatVector random_vec(std::mt19937_64& rng, std::size_t dim, int range)
{
    std::uniform_int_distribution<int> d(-range, range);
    RatVector v(dim);
    for (std::size_t i = 0; i < dim; ++i)
        v[i] = d(rng);
    return v;
}

// Words with zero letters and parallel neighbours so that all rewrites occur.
PLWord random_word(std::mt19937_64& rng, std::size_t dim, std::size_t max_len)
{
    std::uniform_int_distribution<std::size_t> len(0, max_len);
    std::uniform_int_distribution<int> kind(0, 5), scale(-2, 2);
    PLWord w(dim);
    for (std::size_t n = len(rng); n > 0; --n) {
        int k = kind(rng);
        if (k == 0)
            w.letters.push_back(RatVector(dim));
        else if (k == 1 && !w.empty())
            w.letters.push_back(make_rational(scale(rng), 2) * w.letters.back());
        else
            w.letters.push_back(random_vec(rng, dim, 2));
    }
    return w;
}

oracle::Point to_point(const RatVector& v)
{
    oracle::Point p;
    for (const auto& x : v)
        p.push_back(x.get_d());
    return p;
}

std::size_t word_index(const Word& w, std::size_t dim)
{
    std::size_t i = 0;
    for (int l : w)
        i = i * dim + static_cast<std::size_t>(l);
    return i;
}

// Dimension of the closed grade-2 currents of weight w, from the rank of the
// codifferential on all monomials.
std::size_t closed_current_dim(std::size_t dim, int w)
{
    std::vector<std::vector<int>> pairs, singles;
    for (int i = 0; i < static_cast<int>(dim); ++i) {
        singles.push_back({i});
        for (int j = i + 1; j < static_cast<int>(dim); ++j)
            pairs.push_back({i, j});
    }
    if (w < 2)
        return 0;
    std::vector<MonomialKey> targets;
    for (const auto& a : multi_indices(dim, w - 1))
        for (const auto& s : singles)
            targets.push_back({a, s});
    std::vector<RatVector> images;
    for (const auto& a : multi_indices(dim, w - 2))
        for (const auto& p : pairs) {
            PolyCurrent c(dim, 2, w);
            c.add_term({a, p}, 1);
            PolyCurrent img = codifferential(c);
            RatVector v(targets.size());
            for (std::size_t t = 0; t < targets.size(); ++t)
                v[t] = img.coeff(targets[t]);
            images.push_back(std::move(v));
        }
    return images.size() - span_dim(images);
}

Outcome minimal_word_confluence()
{
    std::mt19937_64 rng(101);
    for (int n = 0; n < 1000; ++n) {
        PLWord w = random_word(rng, 1 + n % 4, 12);
        PLWord ref = reduce(w);
        if (!is_minimal(ref))
            return fail("non-minimal result on word " + std::to_string(n));
        for (int s = 0; s < 5; ++s) {
            std::mt19937_64 pick(n * 7 + s);
            PLWord alt = reduce_scheduled(w, [&](std::size_t k) {
                return std::uniform_int_distribution<std::size_t>(0, k - 1)(pick);
            });
            if (!(alt == ref))
                return fail("schedules disagree on word " + std::to_string(n));
        }
    }
    return {true, "1000 words x 5 schedules"};
}

Outcome chen_identity()
{
    std::mt19937_64 rng(202);
    for (int n = 0; n < 300; ++n) {
        std::size_t dim = 2 + n % 3;
        PLWord a = random_word(rng, dim, 6), b = random_word(rng, dim, 6);
        TruncatedTensor sa = path_signature(a, 4);
        if (!(path_signature(concat_raw(a, b), 4) == mul(sa, path_signature(b, 4))))
            return fail("Chen identity fails on pair " + std::to_string(n));
        if (!(path_signature(inverse(a), 4) == tensor_inverse(sa)))
            return fail("inverse fails on pair " + std::to_string(n));
    }
    return {true, "300 pairs at level 4"};
}

Outcome ode_oracle()
{
    std::mt19937_64 rng(303);
    double worst = 0;
    for (int n = 0; n < 50; ++n) {
        std::uniform_int_distribution<int> len(1, 6);
        PLWord w(3);
        for (int k = len(rng); k > 0; --k)
            w.letters.push_back(make_rational(1, 2) * random_vec(rng, 3, 2));
        TruncatedTensor exact = path_signature(w, 3);
        std::vector<std::vector<double>> letters;
        for (const auto& l : w.letters)
            letters.push_back(to_point(l));
        oracle::DenseTensor approx = oracle::rk4_signature(letters, 3, 3, 1e-3);
        for (std::size_t k = 0; k <= 3; ++k)
            for (std::size_t i = 0; i < approx.block[k].size(); ++i) {
                Word word(k);
                std::size_t rest = i;
                for (std::size_t p = k; p-- > 0;) {
                    word[p] = static_cast<int>(rest % 3);
                    rest /= 3;
                }
                double dev = std::fabs(exact.coeff(word).get_d() - approx.block[k][word_index(word, 3)]);
                worst = std::max(worst, dev);
            }
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "max deviation %.3e", worst);
    return {worst <= 1e-8, buf};
}

Outcome dual_bases()
{
    SuiteResult r = check_dual_basis(3, 6, Exec{4});
    return {r.passed, r.detail};
}

Outcome crossed_module_axioms()
{
    SuiteResult r = check_peiffer_axioms(3, 5, 200, 404);
    return {r.passed, r.detail};
}

Outcome kernel_dimension()
{
    std::string detail;
    for (std::size_t dim = 1; dim <= 3; ++dim) {
        QuotientContext ctx(dim, 5);
        for (int w = 2; w <= 5; ++w) {
            std::size_t k = ctx.ker_delta_dim(w), c = closed_current_dim(dim, w);
            if (k != c)
                return fail("dim " + std::to_string(dim) + " weight " + std::to_string(w) + ": ker " +
                            std::to_string(k) + " vs closed " + std::to_string(c));
            if (dim == 3)
                detail += (detail.empty() ? "dim 3 kernels:" : ",") + std::string(" ") + std::to_string(k);
        }
    }
    return {true, detail};
}

Outcome abelianized_curvature()
{
    SuiteResult r = check_curvature_identity(3, 5);
    return {r.passed, r.detail};
}

Outcome surface_signature_structure()
{
    std::mt19937_64 rng(808);
    std::uniform_int_distribution<std::size_t> count(1, 3);
    for (int n = 0; n < 100; ++n) {
        KiteWord x = random_kite_word(rng, 3, count(rng)), y = random_kite_word(rng, 3, count(rng));
        SurfaceSignature sx = surface_signature(x, 3, 5), sy = surface_signature(y, 3, 5);
        SurfaceSignature sxy = surface_signature(mul(x, y), 3, 5);
        if (!(sxy.boundary == mul(sx.boundary, sy.boundary)) || !(sxy.gamma == sx.gamma + sy.gamma))
            return fail("homomorphism fails on pair " + std::to_string(n));
        SurfaceSignature si = surface_signature(inv(x), 3, 5);
        if (!(si.boundary == tensor_inverse(sx.boundary)) || !(si.gamma == make_rational(-1) * sx.gamma))
            return fail("inverse fails on pair " + std::to_string(n));
        SurfaceSignature sl = surface_signature(act(boundary_delta(x), y), 3, 5);
        SurfaceSignature sr = surface_signature(mul(mul(x, y), inv(x)), 3, 5);
        if (!(sl.boundary == sr.boundary) || !(sl.gamma == sr.gamma))
            return fail("Peiffer invariance fails on pair " + std::to_string(n));
    }
    return {true, "100 pairs, level 3, weight 5"};
}

// Sign relating the algebraic suspension to the geometric suspension soup.
constexpr int kSuspensionSign = 1;

Outcome action_identity()
{
    std::mt19937_64 rng(909);
    for (int n = 0; n < 100; ++n) {
        KiteWord x = random_kite_word(rng, 3, 1 + n % 2);
        PLWord p(3);
        for (int k = 1 + n % 3; k > 0; --k)
            p.letters.push_back(random_vec(rng, 3, 2));
        RatVector a = endpoint(p);
        PolyCurrent lhs = surface_signature(act(p, x), 1, 5).gamma;
        PolyCurrent rhs = translate_current(surface_signature(x, 1, 5).gamma, a) +
                          soup_current(suspension_soup(a, boundary_delta(x)), 3, 5);
        if (!(lhs == rhs))
            return fail("action identity fails on instance " + std::to_string(n));
    }

    // Algebraic cross-check on the unit square in the e1e2 plane moved along e3.
    QuotientContext ctx(3, 5);
    PLWord square(3, {unit_vector(3, 0), unit_vector(3, 1), -unit_vector(3, 0), -unit_vector(3, 1)});
    TruncatedTensor y = log(path_signature(square, 5));
    RatVector v = unit_vector(3, 2);
    PolyCurrent geometric = soup_current(suspension_soup(v, square), 3, 5);
    PolyCurrent algebraic = ctx.suspension_exponential(v, y, 5);
    if (geometric.is_zero())
        return fail("geometric suspension vanishes; the cross-check would be vacuous");
    if (!(geometric == make_rational(kSuspensionSign) * algebraic))
        return fail("algebraic suspension differs from the geometric one beyond the recorded sign");
    if (!(ctx.suspension_s(v, y).weight_part(3) == make_rational(kSuspensionSign) * geometric.weight_part(3)))
        return fail("first-order suspension differs at weight 3");
    return {true, "100 instances; algebraic cross-check with sign " + std::to_string(kSuspensionSign)};
}

Outcome tetrahedron_current()
{
    KiteWord x = gen_example("tetrahedron");
    if (!boundary_delta(x).empty())
        return fail("boundary is not trivial");
    PolyCurrent g = surface_signature(x, 2, 3).gamma;
    Rational c = g.coeff({{1, 0, 0}, {1, 2}});
    double quad = 0;
    for (const auto& t : closed_soup(x))
        quad += t.sign * oracle::triangle_form_integral({to_point(t.triangle.p0), to_point(t.triangle.p1),
                                                          to_point(t.triangle.p2)},
                                                         1, 2, [](const oracle::Point& z) { return z[0]; });
    // Outward orientation: the flux of z1 dz2^dz3 is the volume 1/6.
    Rational divergence = make_rational(1, 6);
    char buf[96];
    std::snprintf(buf, sizeof buf, "coefficient %s, quadrature %.15f", format_rational(c).c_str(), quad);
    if (std::fabs(c.get_d() - quad) > 1e-10)
        return fail(std::string("quadrature mismatch: ") + buf);
    if (c != divergence)
        return fail(std::string("divergence mismatch: ") + buf);
    return {true, buf};
}

Outcome triangulation_postconditions()
{
    std::mt19937_64 rng(1111);
    std::uniform_int_distribution<int> count(0, 6);
    for (int n = 0; n < 200; ++n) {
        std::vector<Triangle> polys;
        std::vector<Segment> edges;
        int np = count(rng), ne = count(rng);
        while (static_cast<int>(polys.size()) < np) {
            Triangle t{random_vec(rng, 3, 2), random_vec(rng, 3, 2), random_vec(rng, 3, 2)};
            if (t.nondegenerate())
                polys.push_back(std::move(t));
        }
        while (static_cast<int>(edges.size()) < ne) {
            Segment s{random_vec(rng, 3, 2), random_vec(rng, 3, 2)};
            if (s.a != s.b)
                edges.push_back(std::move(s));
        }
        PLSC c = compatible_triangulation(edges, polys, Exec{4});
        std::string why = check_triangulation(edges, polys, c, Exec{4});
        if (!why.empty())
            return fail("instance " + std::to_string(n) + ": " + why);
    }
    return {true, "200 instances"};
}

Outcome decision_soundness()
{
    std::mt19937_64 rng(1212);
    std::uniform_int_distribution<std::size_t> count(1, 3), moves(1, 6);
    for (int n = 0; n < 200; ++n) {
        KiteWord x = random_kite_word(rng, 3, count(rng));
        KiteWord y = scramble(x, rng, moves(rng));
        DecideOptions opt;
        opt.with_signature = false;
        if (thin_equiv(x, y, opt).verdict != Verdict::equal)
            return fail("scrambled pair " + std::to_string(n) + " not decided equal");
    }
    std::uniform_int_distribution<std::size_t> small(1, 2);
    int tested = 0;
    while (tested < 200) {
        KiteWord x = random_kite_word(rng, 3, small(rng)), y = random_kite_word(rng, 3, small(rng));
        SurfaceSignature sx = surface_signature(x, 3, 4), sy = surface_signature(y, 3, 4);
        if (sx.boundary == sy.boundary && sx.gamma == sy.gamma)
            continue; // the signature cannot certify these as distinct
        ++tested;
        DecideOptions opt;
        opt.with_signature = false;
        DecisionReport r = thin_equiv(x, y, opt);
        if (r.verdict != Verdict::not_equal || !r.witness)
            return fail("distinct pair " + std::to_string(tested) + " not decided not_equal with a witness");
    }
    return {true, "200 equal + 200 distinct pairs"};
}

Outcome nonlocal_cancellation()
{
    KiteWord x = gen_example("antipodal");
    if (x.size() != 20)
        return fail("expected 20 kites, got " + std::to_string(x.size()));
    if (!boundary_delta(x).empty())
        return fail("boundary is not trivial");
    SimplifyStats st;
    KiteWord s = local_simplify(x, 10000, &st);
    if (s.size() == 0)
        return fail("greedy simplification reached the identity");
    DecideOptions opt;
    opt.exec = Exec{4};
    if (is_null(x, opt).verdict != Verdict::equal)
        return fail("is_null does not return equal");
    if (!surface_signature(x, 2, 8, Exec{4}).gamma.is_zero())
        return fail("gamma does not vanish up to weight 8");
    return {true, "greedy stops at " + std::to_string(s.size()) + " kites after " + std::to_string(st.moves) +
                      " moves; chain empty; gamma = 0 to weight 8"};
}

Outcome determinism()
{
    for (const auto& name : {"fold", "peiffer", "tetrahedron", "antipodal", "random_null(1)", "random_nonnull(1)"}) {
        std::string doc = cmd_gen_example(name).out;
        CommandResult a = cmd_thin_equiv(doc, std::nullopt, 2, 3, Exec{1});
        CommandResult b = cmd_thin_equiv(doc, std::nullopt, 2, 3, Exec{8});
        if (a.out != b.out || a.exit_code != b.exit_code)
            return fail(std::string("thin-equiv output differs on ") + name);
        CommandResult c = cmd_surface_sig(doc, 3, 5, Exec{1});
        CommandResult d = cmd_surface_sig(doc, 3, 5, Exec{8});
        if (c.out != d.out || c.exit_code != 0)
            return fail(std::string("surface-sig output differs on ") + name);
    }
    return {true, "6 fixtures, 1 vs 8 threads"};
}

} // namespace

int main()
{
    struct Criterion {
        const char* name;
        std::function<Outcome()> run;
    };
    const Criterion criteria[] = {
        {"minimal-word confluence", minimal_word_confluence},
        {"Chen identity and inversion", chen_identity},
        {"signature ODE oracle", ode_oracle},
        {"pairing and dual bases", dual_bases},
        {"crossed-module axioms", crossed_module_axioms},
        {"ker delta dimension", kernel_dimension},
        {"abelianized curvature", abelianized_curvature},
        {"surface-signature structure", surface_signature_structure},
        {"geometric action identity", action_identity},
        {"tetrahedron current", tetrahedron_current},
        {"compatible triangulation", triangulation_postconditions},
        {"decision soundness", decision_soundness},
        {"nonlocal cancellation", nonlocal_cancellation},
        {"determinism", determinism},
    };
    int failures = 0, index = 0;
    for (const auto& c : criteria) {
        ++index;
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = fail(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s %2d %s: %s (%.1fs)\n", o.passed ? "PASS" : "FAIL", index, c.name, o.detail.c_str(), secs);
        std::fflush(stdout);
        failures += o.passed ? 0 : 1;
    }
    return failures == 0 ? 0 : 1;
}
