#include "plsurf/decide.hpp"

#include <cmath>
#include <regex>

namespace plsurf {

DecisionReport thin_equiv(const KiteWord& x, const KiteWord& y, const DecideOptions& opt)
{
    if (x.dim != y.dim)
        throw InputError("thin_equiv: dimension mismatch");
    DecisionReport r;
    r.boundary_x = boundary_delta(x);
    r.boundary_y = boundary_delta(y);
    r.boundary_equal = r.boundary_x == r.boundary_y;
    KiteWord z = mul(x, inv(y));
    if (opt.with_signature) {
        r.signature = surface_signature(z, opt.level, opt.max_weight, opt.exec);
        r.level = opt.level;
        r.max_weight = opt.max_weight;
    }
    if (!r.boundary_equal) {
        r.verdict = Verdict::not_equal;
        r.witness = Witness{};
        return r;
    }
    // Z is closed; it is trivial in PL_1 exactly when its chain vanishes.
    CompatibleRepresentative rep = compatible_representative(z, opt.exec);
    r.chain = chain(rep.mapping);
    r.complex = std::move(rep.complex);
    if (r.chain.empty()) {
        r.verdict = Verdict::equal;
        return r;
    }
    r.verdict = Verdict::not_equal;
    auto [face, mult] = *r.chain.begin();
    const auto& f = r.complex.faces[face];
    r.witness = Witness{Witness::Kind::face,
                        {r.complex.vertices[f[0]], r.complex.vertices[f[1]], r.complex.vertices[f[2]]},
                        mult};
    return r;
}

DecisionReport is_null(const KiteWord& x, const DecideOptions& opt) { return thin_equiv(x, KiteWord(x.dim), opt); }

// ---------------------------------------------------------------------------
// Random words and moves

RatVector random_vector(std::mt19937_64& rng, std::size_t dim, int range)
{
    std::uniform_int_distribution<int> coord(-range, range);
    std::uniform_int_distribution<int> den(1, 4);
    for (;;) {
        RatVector v(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            int d = den(rng) == 4 ? 2 : 1;
            v[i] = make_rational(coord(rng), d);
        }
        if (!v.is_zero())
            return v;
    }
}

Kite random_kite(std::mt19937_64& rng, std::size_t dim, std::size_t max_tail)
{
    std::uniform_int_distribution<std::size_t> tail_len(0, max_tail);
    Kite k;
    k.tail = PLWord(dim);
    for (std::size_t i = tail_len(rng); i > 0; --i)
        k.tail.letters.push_back(random_vector(rng, dim));
    RatVector v, u;
    do {
        v = random_vector(rng, dim);
        u = random_vector(rng, dim);
    } while (linearly_dependent(v, u));
    if (std::uniform_int_distribution<int>(0, 3)(rng) == 0)
        k.loop = PLWord(dim, {v, u, -v, -u});
    else
        k.loop = triangle_loop(v, u);
    k.sign = std::uniform_int_distribution<int>(0, 1)(rng) ? 1 : -1;
    return k;
}

KiteWord random_kite_word(std::mt19937_64& rng, std::size_t dim, std::size_t kites, std::size_t max_tail)
{
    KiteWord x(dim);
    for (std::size_t i = 0; i < kites; ++i)
        x.kites.push_back(random_kite(rng, dim, max_tail));
    return x;
}

namespace {

std::size_t pick(std::mt19937_64& rng, std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }

PLWord letter(const RatVector& v) { return PLWord(v.dim(), {v}); }

} // namespace

bool apply_move(KiteWord& x, Move m, std::mt19937_64& rng)
{
    auto& ks = x.kites;
    switch (m) {
    case Move::fold: {
        Kite k = random_kite(rng, x.dim);
        auto at = ks.begin() + static_cast<long>(pick(rng, ks.size() + 1));
        at = ks.insert(at, inverse_kite(k));
        ks.insert(at, k);
        return true;
    }
    case Move::peiffer: {
        if (ks.size() < 2)
            return false;
        std::size_t i = pick(rng, ks.size() - 1);
        Kite a = ks[i], b = ks[i + 1];
        if (pick(rng, 2) == 0) {
            // a b = (delta(a) |> b) a
            ks[i] = {concat_raw(kite_delta(a), b.tail), b.loop, b.sign};
            ks[i + 1] = a;
        } else {
            // a b = b (delta(b)^-1 |> a)
            ks[i] = b;
            ks[i + 1] = {concat_raw(inverse(kite_delta(b)), a.tail), a.loop, a.sign};
        }
        return true;
    }
    case Move::rebase: {
        if (ks.empty())
            return false;
        Kite& k = ks[pick(rng, ks.size())];
        PLWord b = reduce(k.loop);
        if (b.size() < 2)
            return false;
        std::uniform_int_distribution<int> c(-2, 2);
        RatVector v = make_rational(c(rng), 2) * b.letters[0] + make_rational(c(rng), 1) * b.letters[1];
        if (v.is_zero())
            return false;
        k.tail = concat_raw(k.tail, letter(v));
        k.loop = reduce(concat_raw(concat_raw(letter(-v), b), letter(v)));
        return true;
    }
    case Move::split: {
        if (ks.empty())
            return false;
        std::size_t i = pick(rng, ks.size());
        Kite k = ks[i];
        PLWord b = reduce(k.loop);
        if (b.size() != 3)
            return false;
        auto ps = partial_sums(b);
        static const long num[3] = {1, 1, 2}, den[3] = {3, 2, 3};
        std::size_t t = pick(rng, 3);
        RatVector mid = ps[1] + make_rational(num[t], den[t]) * (ps[2] - ps[1]);
        Kite first{k.tail, triangle_loop(ps[1], mid), k.sign};
        Kite second{k.tail, triangle_loop(mid, ps[2]), k.sign};
        if (k.sign < 0)
            std::swap(first, second);
        ks[i] = second;
        ks.insert(ks.begin() + static_cast<long>(i), first);
        return true;
    }
    case Move::retrace: {
        if (ks.empty())
            return false;
        Kite& k = ks[pick(rng, ks.size())];
        RatVector y = random_vector(rng, x.dim);
        k.tail = concat_raw(concat_raw(k.tail, letter(y)), letter(-y));
        return true;
    }
    }
    return false;
}

KiteWord scramble(const KiteWord& x, std::mt19937_64& rng, std::size_t moves)
{
    static const Move all[] = {Move::fold, Move::peiffer, Move::rebase, Move::split, Move::retrace};
    KiteWord out = x;
    for (std::size_t done = 0; done < moves;)
        if (apply_move(out, all[pick(rng, 5)], rng))
            ++done;
    return out;
}

// ---------------------------------------------------------------------------
// Fixtures

Icosahedron icosahedron()
{
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    Icosahedron ico;
    for (double a : {-1.0, 1.0})
        for (double b : {-phi, phi}) {
            ico.vertices.push_back({0.0, a, b});
            ico.vertices.push_back({a, b, 0.0});
            ico.vertices.push_back({b, 0.0, a});
        }
    const std::size_t n = ico.vertices.size();
    auto dist2 = [&](std::size_t i, std::size_t j) {
        double s = 0;
        for (int k = 0; k < 3; ++k)
            s += std::pow(ico.vertices[i][k] - ico.vertices[j][k], 2);
        return s;
    };
    auto adjacent = [&](std::size_t i, std::size_t j) { return std::abs(dist2(i, j) - 4.0) < 1e-9; };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k)
                if (adjacent(i, j) && adjacent(j, k) && adjacent(i, k)) {
                    const auto &a = ico.vertices[i], &b = ico.vertices[j], &c = ico.vertices[k];
                    double det = a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
                                 a[2] * (b[0] * c[1] - b[1] * c[0]);
                    ico.faces.push_back(det > 0 ? std::array{i, j, k} : std::array{i, k, j});
                }
    ico.antipode.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (std::abs(ico.vertices[i][0] + ico.vertices[j][0]) + std::abs(ico.vertices[i][1] + ico.vertices[j][1]) +
                    std::abs(ico.vertices[i][2] + ico.vertices[j][2]) <
                1e-9)
                ico.antipode[i] = j;
    if (ico.faces.size() != 20)
        throw InternalError("icosahedron: expected 20 faces");
    return ico;
}

namespace {

RatVector q(long a, long b, long c, long den = 1)
{
    return {make_rational(a, den), make_rational(b, den), make_rational(c, den)};
}

KiteWord closed_surface(const std::vector<RatVector>& positions, const std::vector<std::array<std::size_t, 3>>& faces)
{
    const RatVector& base = positions[faces[0][0]];
    PLWord prefix(base.dim());
    if (!base.is_zero())
        prefix.letters.push_back(base);
    KiteWord x(base.dim());
    for (const auto& s : shell_sphere(faces))
        x.kites.push_back(shell_step_kite(positions, s, prefix));
    if (!boundary_delta(x).empty())
        throw InternalError("closed surface word has nontrivial boundary");
    return x;
}

KiteWord tetrahedron()
{
    std::vector<RatVector> pos{q(0, 0, 0), q(1, 0, 0), q(0, 1, 0), q(0, 0, 1)};
    return closed_surface(pos, {{0, 2, 1}, {0, 1, 3}, {0, 3, 2}, {1, 2, 3}});
}

KiteWord antipodal()
{
    Icosahedron ico = icosahedron();
    // Images of the six antipodal vertex pairs: no three collinear, no four coplanar.
    const std::vector<RatVector> images{q(3, 2, 0, 2), q(0, 2, 3), q(1, -1, 2), q(4, 6, 1, 2), q(-1, 2, 1), q(1, -4, -2, 2)};
    std::vector<long> cls(ico.vertices.size(), -1);
    long next = 0;
    for (std::size_t i = 0; i < cls.size(); ++i)
        if (cls[i] < 0)
            cls[i] = cls[ico.antipode[i]] = next++;
    std::vector<RatVector> pos;
    for (auto c : cls)
        pos.push_back(images[static_cast<std::size_t>(c)]);
    return closed_surface(pos, ico.faces);
}

KiteWord fold()
{
    Kite k{PLWord(3, {q(1, 0, 0), q(0, 1, 1)}), PLWord(3, {q(1, 0, 0), q(0, 2, 0), q(-1, 0, 0), q(0, -2, 0)}), 1};
    KiteWord x(3);
    x.kites = {k, inverse_kite(k)};
    return x;
}

KiteWord peiffer()
{
    Kite e1{PLWord(3, {q(1, 0, 0)}), triangle_loop(q(1, 1, 0), q(0, 1, 2)), 1};
    Kite e2{PLWord(3, {q(0, 2, 1)}), triangle_loop(q(2, 0, 1), q(0, 1, 0)), 1};
    Kite e3{PLWord(3, {q(-1, 0, 1), q(0, 1, 0)}), triangle_loop(q(1, 0, 0), q(0, 0, 1)), 1};
    PLWord d = kite_delta(e1);
    Kite c2{concat_raw(d, e2.tail), e2.loop, -1};
    Kite c3{concat_raw(d, e3.tail), e3.loop, -1};
    KiteWord x(3);
    // e1 e2 e3 e1^-1 = (d |> e2)(d |> e3), followed by the inverse of the right side.
    x.kites = {e1, e2, e3, inverse_kite(e1), c3, c2};
    return x;
}

KiteWord random_null(std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    KiteWord x(3);
    for (std::size_t i = 1 + pick(rng, 2); i > 0; --i)
        apply_move(x, Move::fold, rng);
    return scramble(x, rng, 4 + pick(rng, 5));
}

KiteWord random_nonnull(std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    return random_kite_word(rng, 3, 1 + pick(rng, 2));
}

} // namespace

std::vector<std::string> example_names()
{
    return {"fold", "peiffer", "tetrahedron", "antipodal", "random_null(SEED)", "random_nonnull(SEED)"};
}

KiteWord gen_example(const std::string& name)
{
    if (name == "fold")
        return fold();
    if (name == "peiffer")
        return peiffer();
    if (name == "tetrahedron")
        return tetrahedron();
    if (name == "antipodal")
        return antipodal();
    static const std::regex seeded(R"((random_null|random_nonnull)(?:\((\d+)\)|:(\d+)))");
    std::smatch m;
    if (std::regex_match(name, m, seeded)) {
        std::string digits = m[2].matched ? m[2].str() : m[3].str();
        if (digits.size() > 19)
            throw InputError("seed out of range: " + digits);
        std::uint64_t seed = std::stoull(digits);
        return m[1] == "random_null" ? random_null(seed) : random_nonnull(seed);
    }
    throw InputError("unknown example: " + name);
}

} // namespace plsurf
