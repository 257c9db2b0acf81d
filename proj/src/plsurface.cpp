#include "plsurf/plsurface.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

namespace plsurf {

Kite triangle_kite(const PLWord& tail, const RatVector& v, const RatVector& u, int sign)
{
    return {tail, triangle_loop(v, u), sign};
}

namespace {

void check_kite(const Kite& k, std::size_t dim)
{
    if (k.tail.dim != dim || k.loop.dim != dim)
        throw InputError("kite dimension mismatch");
    if (k.sign != 1 && k.sign != -1)
        throw InputError("kite sign must be +1 or -1");
    if (!is_planar_loop(k.loop))
        throw InputError("kite loop is not a planar loop");
}

PLWord signed_loop(const Kite& k) { return k.sign > 0 ? k.loop : inverse(k.loop); }

} // namespace

PLWord kite_delta(const Kite& k)
{
    return reduce(concat_raw(concat_raw(k.tail, signed_loop(k)), inverse(k.tail)));
}

PLWord boundary_delta(const KiteWord& x)
{
    PLWord out(x.dim);
    for (const auto& k : x.kites) {
        check_kite(k, x.dim);
        out = concat(out, kite_delta(k));
    }
    return out;
}

std::vector<SignedTriangle> triangulate_kite(const Kite& k)
{
    if (!is_planar_loop(k.loop))
        throw InputError("triangulate_kite: loop is not planar");
    RatVector base = endpoint(k.tail);
    std::vector<SignedTriangle> out;
    for (const auto& t : triangle_fan(k.loop))
        out.push_back({t.translated(base), k.sign});
    return out;
}

KiteWord fan_split(const KiteWord& x)
{
    KiteWord out(x.dim);
    for (const auto& k : x.kites) {
        check_kite(k, x.dim);
        auto fan = triangle_fan(k.loop);
        // Fan loops multiply back to the loop in fan order; the inverse
        // kite needs them in reverse order.
        std::vector<Kite> parts;
        for (const auto& t : fan)
            parts.push_back(triangle_kite(k.tail, t.p1, t.p2, k.sign));
        if (k.sign < 0)
            std::reverse(parts.begin(), parts.end());
        out.kites.insert(out.kites.end(), parts.begin(), parts.end());
    }
    return out;
}

namespace {

// Rotation of the vertex cycle starting at the least vertex; orientation kept.
Triangle rotate_canonical(const Triangle& t)
{
    if (t.p1 < t.p0 && t.p1 < t.p2)
        return {t.p1, t.p2, t.p0};
    if (t.p2 < t.p0 && t.p2 < t.p1)
        return {t.p2, t.p0, t.p1};
    return t;
}

struct TriangleLess {
    bool operator()(const Triangle& a, const Triangle& b) const
    {
        if (a.p0 != b.p0)
            return a.p0 < b.p0;
        if (a.p1 != b.p1)
            return a.p1 < b.p1;
        return a.p2 < b.p2;
    }
};

} // namespace

SignedTriangleSoup normalize_soup(const SignedTriangleSoup& s)
{
    std::map<Triangle, long, TriangleLess> mult;
    std::vector<Triangle> order;
    for (const auto& [t, sg] : s) {
        if (!t.nondegenerate())
            continue;
        Triangle c = rotate_canonical(t);
        Triangle r = rotate_canonical(c.reversed());
        long delta = sg;
        // Store each unoriented triangle under one orientation.
        if (r.p0 == c.p0 && TriangleLess{}(r, c)) {
            c = r;
            delta = -delta;
        }
        auto [it, inserted] = mult.try_emplace(c, 0);
        if (inserted)
            order.push_back(c);
        it->second += delta;
    }
    SignedTriangleSoup out;
    for (const auto& t : order) {
        long n = mult.at(t);
        for (long i = 0; i < std::labs(n); ++i)
            out.push_back({t, n > 0 ? 1 : -1});
    }
    return out;
}

SignedTriangleSoup closed_soup(const KiteWord& x)
{
    SignedTriangleSoup s;
    for (const auto& k : x.kites) {
        check_kite(k, x.dim);
        auto tris = triangulate_kite(k);
        s.insert(s.end(), tris.begin(), tris.end());
    }
    for (const auto& t : triangle_fan(boundary_delta(x)))
        s.push_back({t, -1});
    return normalize_soup(s);
}

SurfaceSignature surface_signature(const KiteWord& x, std::size_t level, int max_weight, const Exec& exec)
{
    return {path_signature(boundary_delta(x), level), soup_current(closed_soup(x), x.dim, max_weight, exec)};
}

KiteWord mul(const KiteWord& x, const KiteWord& y)
{
    if (x.dim != y.dim)
        throw InputError("kite word dimension mismatch");
    KiteWord out = x;
    out.kites.insert(out.kites.end(), y.kites.begin(), y.kites.end());
    return out;
}

Kite inverse_kite(const Kite& k) { return {k.tail, k.loop, -k.sign}; }

KiteWord inv(const KiteWord& x)
{
    KiteWord out(x.dim);
    for (auto it = x.kites.rbegin(); it != x.kites.rend(); ++it)
        out.kites.push_back(inverse_kite(*it));
    return out;
}

KiteWord act(const PLWord& x, const KiteWord& w)
{
    if (x.dim != w.dim)
        throw InputError("act: dimension mismatch");
    KiteWord out(w.dim);
    for (const auto& k : w.kites)
        out.kites.push_back({concat(x, k.tail), k.loop, k.sign});
    return out;
}

SignedTriangleSoup suspension_soup(const RatVector& a, const PLWord& b)
{
    if (!is_loop(b))
        throw InputError("suspension_soup: b is not a loop");
    SignedTriangleSoup s;
    for (const auto& t : triangle_fan(b))
        s.push_back({t.translated(a), 1});
    PLWord seg(b.dim, {a});
    for (const auto& t : triangle_fan(concat(concat(seg, b), inverse(seg))))
        s.push_back({t, -1});
    return normalize_soup(s);
}

bool kites_cancel(const Kite& a, const Kite& b)
{
    if (!equivalent(a.tail, b.tail))
        return false;
    PLWord la = signed_loop(a), lb = signed_loop(b);
    return reduce(concat_raw(la, lb)).empty();
}

namespace {

bool trivial_kite(const Kite& k) { return reduce(k.loop).empty(); }

// PL1.3 in the direction that shortens the loop: (w, x b x^-1) -> (w x, b)
// where x is the common part of the first letter and the inverted last one.
bool try_rebase(Kite& k)
{
    PLWord l = reduce(k.loop);
    if (l.size() < 3)
        return false;
    const RatVector& first = l.letters.front();
    const RatVector& last = l.letters.back();
    if (!linearly_dependent(first, last) || dot(first, last) >= 0)
        return false;
    // last = -c * first with c > 0; peel x = min(1, c) * first.
    std::size_t p = 0;
    while (sign(first[p]) == 0)
        ++p;
    Rational c = -last[p] / first[p];
    RatVector x = c < 1 ? Rational(c) * first : first;
    PLWord xw(l.dim, {x});
    k.loop = reduce(concat_raw(concat_raw(inverse(xw), l), xw));
    k.tail = concat(k.tail, xw);
    return true;
}

} // namespace

KiteWord local_simplify(const KiteWord& x, std::size_t budget, SimplifyStats* stats)
{
    KiteWord w = x;
    for (auto& k : w.kites)
        check_kite(k, w.dim);
    std::size_t moves = 0;
    bool changed = true;
    while (changed && moves < budget) {
        changed = false;
        auto& ks = w.kites;
        // PL1.2: identity kites.
        for (std::size_t i = 0; i < ks.size() && !changed; ++i)
            if (trivial_kite(ks[i])) {
                ks.erase(ks.begin() + static_cast<long>(i));
                changed = true;
            }
        // Fold: adjacent inverse kites.
        for (std::size_t i = 0; i + 1 < ks.size() && !changed; ++i)
            if (kites_cancel(ks[i], ks[i + 1])) {
                ks.erase(ks.begin() + static_cast<long>(i), ks.begin() + static_cast<long>(i + 2));
                changed = true;
            }
        // Peiffer: E1 E2 E1^-1 -> delta(E1) |> E2.
        for (std::size_t i = 0; i + 2 < ks.size() && !changed; ++i)
            if (kites_cancel(ks[i], ks[i + 2])) {
                Kite moved{concat(kite_delta(ks[i]), ks[i + 1].tail), ks[i + 1].loop, ks[i + 1].sign};
                ks.erase(ks.begin() + static_cast<long>(i), ks.begin() + static_cast<long>(i + 3));
                ks.insert(ks.begin() + static_cast<long>(i), moved);
                changed = true;
            }
        // PL1.1: merge adjacent kites whose combined loop stays planar.
        for (std::size_t i = 0; i + 1 < ks.size() && !changed; ++i) {
            PLWord u = concat(inverse(ks[i].tail), ks[i + 1].tail);
            PLWord merged = reduce(concat_raw(concat_raw(concat_raw(signed_loop(ks[i]), u), signed_loop(ks[i + 1])), inverse(u)));
            if (span_dim(merged) <= 2) {
                Kite k{ks[i].tail, merged, 1};
                ks.erase(ks.begin() + static_cast<long>(i), ks.begin() + static_cast<long>(i + 2));
                ks.insert(ks.begin() + static_cast<long>(i), k);
                changed = true;
            }
        }
        // PL1.3: peel conjugating letters off loops.
        for (std::size_t i = 0; i < ks.size() && !changed; ++i)
            changed = try_rebase(ks[i]);
        if (changed)
            ++moves;
    }
    if (stats) {
        stats->moves = moves;
        stats->budget_exhausted = changed && moves >= budget;
    }
    return w;
}

std::vector<Violation> validate(const KiteWord& x)
{
    std::vector<Violation> out;
    for (std::size_t i = 0; i < x.kites.size(); ++i) {
        const Kite& k = x.kites[i];
        if (k.tail.dim != x.dim || k.loop.dim != x.dim) {
            out.push_back({i, "dim", "kite dimension differs from word dimension"});
            continue;
        }
        bool bad_letter = false;
        for (const auto* w : {&k.tail, &k.loop})
            for (const auto& l : w->letters)
                bad_letter = bad_letter || l.dim() != x.dim;
        if (bad_letter) {
            out.push_back({i, "dim", "letter dimension differs from word dimension"});
            continue;
        }
        if (k.sign != 1 && k.sign != -1)
            out.push_back({i, "sign", "sign must be +1 or -1"});
        if (!is_loop(k.loop))
            out.push_back({i, "not_loop", "loop does not return to its basepoint"});
        else if (span_dim(k.loop) > 2)
            out.push_back({i, "non_planar", "loop spans " + std::to_string(span_dim(k.loop)) + " dimensions"});
    }
    return out;
}

} // namespace plsurf
