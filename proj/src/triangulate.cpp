#include "plsurf/triangulate.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace plsurf {

// ---------------------------------------------------------------------------
// PLSC

std::optional<std::size_t> PLSC::find_vertex(const RatVector& p) const
{
    auto it = std::lower_bound(vertices.begin(), vertices.end(), p);
    if (it == vertices.end() || *it != p)
        return std::nullopt;
    return static_cast<std::size_t>(it - vertices.begin());
}

std::optional<std::size_t> PLSC::find_edge(std::size_t a, std::size_t b) const
{
    std::array<std::size_t, 2> key{std::min(a, b), std::max(a, b)};
    auto it = std::lower_bound(edges.begin(), edges.end(), key);
    if (it == edges.end() || *it != key)
        return std::nullopt;
    return static_cast<std::size_t>(it - edges.begin());
}

std::optional<std::size_t> PLSC::find_face(std::size_t a, std::size_t b, std::size_t c) const
{
    std::array<std::size_t, 3> key{a, b, c};
    std::sort(key.begin(), key.end());
    auto it = std::lower_bound(faces.begin(), faces.end(), key);
    if (it == faces.end() || *it != key)
        return std::nullopt;
    return static_cast<std::size_t>(it - faces.begin());
}

Triangle PLSC::face_triangle(std::size_t f) const
{
    const auto& t = faces.at(f);
    return {vertices[t[0]], vertices[t[1]], vertices[t[2]]};
}

PLSC make_plsc(std::size_t dim, const std::vector<std::array<RatVector, 2>>& edges, const std::vector<Triangle>& faces)
{
    std::set<RatVector> pts;
    for (const auto& e : edges)
        pts.insert(e.begin(), e.end());
    for (const auto& t : faces) {
        if (!t.nondegenerate())
            throw InputError("degenerate face");
        pts.insert({t.p0, t.p1, t.p2});
    }
    PLSC c;
    c.dim = dim;
    c.vertices.assign(pts.begin(), pts.end());
    std::set<std::array<std::size_t, 2>> es;
    std::set<std::array<std::size_t, 3>> fs;
    auto id = [&](const RatVector& p) { return *c.find_vertex(p); };
    auto add_edge = [&](std::size_t a, std::size_t b) {
        if (a != b)
            es.insert({std::min(a, b), std::max(a, b)});
    };
    for (const auto& e : edges)
        add_edge(id(e[0]), id(e[1]));
    for (const auto& t : faces) {
        std::array<std::size_t, 3> f{id(t.p0), id(t.p1), id(t.p2)};
        std::sort(f.begin(), f.end());
        fs.insert(f);
        add_edge(f[0], f[1]);
        add_edge(f[1], f[2]);
        add_edge(f[0], f[2]);
    }
    c.edges.assign(es.begin(), es.end());
    c.faces.assign(fs.begin(), fs.end());
    return c;
}

// ---------------------------------------------------------------------------
// Exact incidence predicates

std::vector<BarycentricPair> simplex_intersection(const std::vector<RatVector>& a, const std::vector<RatVector>& b)
{
    const std::size_t d = a.at(0).dim(), na = a.size(), nb = b.size(), n = na + nb;
    Matrix m(d + 2, n);
    RatVector rhs(d + 2);
    for (std::size_t i = 0; i < na; ++i) {
        for (std::size_t r = 0; r < d; ++r)
            m.at(r, i) = a[i][r];
        m.at(d, i) = 1;
    }
    for (std::size_t j = 0; j < nb; ++j) {
        for (std::size_t r = 0; r < d; ++r)
            m.at(r, na + j) = -b[j][r];
        m.at(d + 1, na + j) = 1;
    }
    rhs[d] = 1;
    rhs[d + 1] = 1;
    const std::size_t rk = rank(m);
    const unsigned amask = (1u << na) - 1;
    std::set<std::vector<Rational>> seen;
    std::vector<BarycentricPair> out;
    // Vertices of {m z = rhs, z >= 0} are its basic feasible solutions.
    for (unsigned s = 1; s < (1u << n); ++s) {
        if (static_cast<std::size_t>(std::popcount(s)) > rk || !(s & amask) || !(s >> na))
            continue;
        std::vector<std::size_t> cols;
        for (std::size_t k = 0; k < n; ++k)
            if (s >> k & 1u)
                cols.push_back(k);
        std::vector<RatVector> cs;
        for (auto k : cols)
            cs.push_back(m.column(k));
        Matrix sub = Matrix::from_columns(cs, d + 2);
        if (rank(sub) != cols.size())
            continue;
        auto z = solve_linear(sub, rhs);
        if (!z || std::any_of(z->begin(), z->end(), [](const Rational& x) { return sign(x) < 0; }))
            continue;
        std::vector<Rational> full(n);
        for (std::size_t k = 0; k < cols.size(); ++k)
            full[cols[k]] = (*z)[k];
        if (!seen.insert(full).second)
            continue;
        out.push_back({{full.begin(), full.begin() + static_cast<long>(na)},
                       {full.begin() + static_cast<long>(na), full.end()}});
    }
    return out;
}

bool point_in_segment(const RatVector& p, const Segment& s)
{
    RatVector d = s.b - s.a;
    std::size_t k = 0;
    while (k < d.dim() && sign(d[k]) == 0)
        ++k;
    if (k == d.dim())
        return p == s.a;
    Rational t = (p[k] - s.a[k]) / d[k];
    return sign(t) >= 0 && t <= 1 && s.a + t * d == p;
}

namespace {

using Point2 = std::array<Rational, 2>;

Rational cross2(const Point2& o, const Point2& a, const Point2& b)
{
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

Point2 to2(const AffinePlane& h, const RatVector& p)
{
    auto [s, t] = h.coords(p);
    return {s, t};
}

bool in_triangle2(const Point2& p, const std::array<Point2, 3>& t)
{
    int s0 = sign(cross2(t[0], t[1], p)), s1 = sign(cross2(t[1], t[2], p)), s2 = sign(cross2(t[2], t[0], p));
    bool neg = s0 < 0 || s1 < 0 || s2 < 0, pos = s0 > 0 || s1 > 0 || s2 > 0;
    return !(neg && pos);
}

bool on_segment2(const Point2& p, const Point2& a, const Point2& b)
{
    if (sign(cross2(a, b, p)) != 0)
        return false;
    Rational dt = (p[0] - a[0]) * (p[0] - b[0]) + (p[1] - a[1]) * (p[1] - b[1]);
    return sign(dt) <= 0;
}

// Triangle with its plane and plane coordinates cached.
struct PlacedTriangle {
    Triangle t;
    AffinePlane h;
    std::array<Point2, 3> p2;

    explicit PlacedTriangle(const Triangle& tri) : t(tri), h(plane_of_triangle(tri))
    {
        p2 = {to2(h, t.p0), to2(h, t.p1), to2(h, t.p2)};
    }
    bool contains(const RatVector& p) const { return h.contains(p) && in_triangle2(to2(h, p), p2); }
};

Rational abs_area2(const std::array<Point2, 3>& t)
{
    Rational a = cross2(t[0], t[1], t[2]);
    return sign(a) < 0 ? Rational(-a) : a;
}

// Length along the segment measured in its first non-constant coordinate.
Rational param_length(const RatVector& a, const RatVector& b, std::size_t k)
{
    Rational l = b[k] - a[k];
    return sign(l) < 0 ? Rational(-l) : l;
}

std::size_t segment_axis(const Segment& s)
{
    RatVector d = s.b - s.a;
    std::size_t k = 0;
    while (sign(d[k]) == 0)
        ++k;
    return k;
}

} // namespace

bool point_in_triangle(const RatVector& p, const Triangle& t) { return PlacedTriangle(t).contains(p); }

// ---------------------------------------------------------------------------
// Compatibility

namespace {

struct SimplexRef {
    std::vector<std::size_t> ids;
    RatVector lo, hi;
    std::vector<RatVector> normals; // triangles: functionals vanishing on the direction space
};

// Sufficient condition for the triangle `a` and the simplex `b` to meet
// exactly in their common face: some hyperplane through a, or some edge line
// of a inside a common plane, has the other vertices of b strictly on the far
// side and only common vertices on it.
// Exact test for two segments that share no vertex or one vertex: they must
// meet in nothing or in exactly that vertex.
bool segments_compatible(const RatVector& p, const RatVector& q, const RatVector& r, const RatVector& s,
                         const std::optional<RatVector>& shared)
{
    Matrix a = Matrix::from_columns({q - p, r - s}, p.dim());
    if (rank(a) == 2) {
        auto tu = solve_linear(a, r - p);
        if (!tu || (p + (*tu)[0] * (q - p)) != (r + (*tu)[1] * (s - r)))
            return true;
        const Rational &t = (*tu)[0], &u = (*tu)[1];
        if (sign(t) < 0 || t > 1 || sign(u) < 0 || u > 1)
            return true;
        return shared && *shared == p + t * (q - p);
    }
    // parallel: only collinear overlaps matter
    Segment pq{p, q}, rs{r, s};
    std::vector<RatVector> inside;
    for (const auto* v : {&p, &q})
        if (point_in_segment(*v, rs))
            inside.push_back(*v);
    for (const auto* v : {&r, &s})
        if (point_in_segment(*v, pq))
            inside.push_back(*v);
    for (const auto& v : inside)
        if (!shared || v != *shared)
            return false;
    return true;
}

bool separated_by(const PLSC& c, const SimplexRef& a, const SimplexRef& b, const std::vector<std::size_t>& common)
{
    const RatVector& o = c.vertices[a.ids[0]];
    auto is_common = [&](std::size_t v) { return std::binary_search(common.begin(), common.end(), v); };
    bool coplanar = true;
    for (const auto& n : a.normals) {
        int side = 0;
        bool ok = true;
        for (auto v : b.ids) {
            int sg = sign(dot(n, c.vertices[v] - o));
            if (sg != 0)
                coplanar = false;
            if (is_common(v))
                continue;
            if (sg == 0 || (side != 0 && sg != side)) {
                ok = false;
                continue;
            }
            side = sg;
        }
        if (ok)
            return true;
    }
    if (!coplanar)
        return false;
    Triangle t{c.vertices[a.ids[0]], c.vertices[a.ids[1]], c.vertices[a.ids[2]]};
    AffinePlane h = plane_of_triangle(t);
    std::array<Point2, 3> p{to2(h, t.p0), to2(h, t.p1), to2(h, t.p2)};
    for (int e = 0; e < 3; ++e) {
        const Point2 &u = p[e], &w = p[(e + 1) % 3], &r = p[(e + 2) % 3];
        int inside = sign(cross2(u, w, r));
        bool ok = true;
        for (auto v : b.ids) {
            int sg = sign(cross2(u, w, to2(h, c.vertices[v])));
            if (sg == inside || (sg == 0 && !(is_common(v) && (v == a.ids[e] || v == a.ids[(e + 1) % 3])))) {
                ok = false;
                break;
            }
        }
        if (ok)
            return true;
    }
    return false;
}

bool boxes_meet(const SimplexRef& a, const SimplexRef& b)
{
    for (std::size_t k = 0; k < a.lo.dim(); ++k)
        if (a.hi[k] < b.lo[k] || b.hi[k] < a.lo[k])
            return false;
    return true;
}

bool subset_of(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b)
{
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<RatVector> points_of(const PLSC& c, const std::vector<std::size_t>& ids)
{
    std::vector<RatVector> out;
    for (auto i : ids)
        out.push_back(c.vertices[i]);
    return out;
}

} // namespace

bool is_compatible(const PLSC& c, const Exec& exec)
{
    for (std::size_t i = 1; i < c.vertices.size(); ++i)
        if (c.vertices[i] == c.vertices[i - 1])
            return false;
    std::vector<SimplexRef> simplices;
    auto add = [&](std::vector<std::size_t> ids) {
        SimplexRef s{ids, c.vertices[ids[0]], c.vertices[ids[0]]};
        for (auto i : ids)
            for (std::size_t k = 0; k < c.dim; ++k) {
                if (c.vertices[i][k] < s.lo[k])
                    s.lo[k] = c.vertices[i][k];
                if (s.hi[k] < c.vertices[i][k])
                    s.hi[k] = c.vertices[i][k];
            }
        simplices.push_back(std::move(s));
    };
    for (std::size_t i = 0; i < c.vertices.size(); ++i)
        add({i});
    for (const auto& e : c.edges)
        add({e[0], e[1]});
    for (std::size_t f = 0; f < c.faces.size(); ++f) {
        if (!c.face_triangle(f).nondegenerate())
            return false;
        add({c.faces[f][0], c.faces[f][1], c.faces[f][2]});
        Triangle t = c.face_triangle(f);
        simplices.back().normals = kernel_basis(Matrix::from_rows({t.p1 - t.p0, t.p2 - t.p0}, c.dim));
    }
    std::vector<char> ok(simplices.size(), 1);
    parallel_for(simplices.size(), exec, [&](std::size_t i) {
        const auto& a = simplices[i];
        for (std::size_t j = i + 1; j < simplices.size() && ok[i]; ++j) {
            const auto& b = simplices[j];
            if (a.ids.size() == 1 && b.ids.size() == 1)
                continue;
            if (subset_of(a.ids, b.ids) || subset_of(b.ids, a.ids) || !boxes_meet(a, b))
                continue;
            std::vector<std::size_t> common;
            std::set_intersection(a.ids.begin(), a.ids.end(), b.ids.begin(), b.ids.end(), std::back_inserter(common));
            if ((a.ids.size() == 3 && separated_by(c, a, b, common)) || (b.ids.size() == 3 && separated_by(c, b, a, common)))
                continue;
            if (a.ids.size() == 1 || b.ids.size() == 1) {
                const SimplexRef& v = a.ids.size() == 1 ? a : b;
                const SimplexRef& o = a.ids.size() == 1 ? b : a;
                const RatVector& x = c.vertices[v.ids[0]];
                bool hit = o.ids.size() == 2
                    ? point_in_segment(x, {c.vertices[o.ids[0]], c.vertices[o.ids[1]]})
                    : point_in_triangle(x, {c.vertices[o.ids[0]], c.vertices[o.ids[1]], c.vertices[o.ids[2]]});
                if (hit)
                    ok[i] = 0;
                continue;
            }
            if (a.ids.size() == 2 && b.ids.size() == 2) {
                std::optional<RatVector> shared;
                if (!common.empty())
                    shared = c.vertices[common[0]];
                if (!segments_compatible(c.vertices[a.ids[0]], c.vertices[a.ids[1]], c.vertices[b.ids[0]],
                                         c.vertices[b.ids[1]], shared))
                    ok[i] = 0;
                continue;
            }
            for (const auto& v : simplex_intersection(points_of(c, a.ids), points_of(c, b.ids))) {
                for (std::size_t k = 0; k < a.ids.size(); ++k)
                    if (sign(v.lambda[k]) != 0 && !std::binary_search(common.begin(), common.end(), a.ids[k]))
                        ok[i] = 0;
                for (std::size_t k = 0; k < b.ids.size(); ++k)
                    if (sign(v.mu[k]) != 0 && !std::binary_search(common.begin(), common.end(), b.ids[k]))
                        ok[i] = 0;
            }
        }
    });
    return std::all_of(ok.begin(), ok.end(), [](char x) { return x != 0; });
}

// ---------------------------------------------------------------------------
// Compatible triangulation

namespace {

std::optional<RatVector> intersect_lines(const AffineLine& l, const AffineLine& m)
{
    Matrix a = Matrix::from_columns({l.dir, -m.dir}, l.dir.dim());
    if (rank(a) < 2)
        return std::nullopt;
    auto st = solve_linear(a, m.base - l.base);
    if (!st)
        return std::nullopt;
    return l.point((*st)[0]);
}

std::optional<RatVector> intersect_line_plane(const AffineLine& l, const AffinePlane& h)
{
    Matrix a = Matrix::from_columns({l.dir, -h.dir1, -h.dir2}, l.dir.dim());
    if (rank(a) < 3)
        return std::nullopt;
    auto st = solve_linear(a, h.base - l.base);
    if (!st)
        return std::nullopt;
    return l.point((*st)[0]);
}

struct PlanePlane {
    std::optional<RatVector> point;
    std::optional<AffineLine> line;
};

PlanePlane intersect_planes(const AffinePlane& g, const AffinePlane& h)
{
    PlanePlane out;
    Matrix a = Matrix::from_columns({g.dir1, g.dir2, -h.dir1, -h.dir2}, g.base.dim());
    auto z = solve_linear(a, h.base - g.base);
    if (!z)
        return out;
    RatVector p = g.base + (*z)[0] * g.dir1 + (*z)[1] * g.dir2;
    std::vector<RatVector> dirs;
    for (const auto& k : kernel_basis(a)) {
        RatVector d = k[0] * g.dir1 + k[1] * g.dir2;
        if (!d.is_zero())
            dirs.push_back(d);
    }
    std::size_t sd = span_dim(dirs);
    if (sd == 0)
        out.point = p;
    else if (sd == 1)
        out.line = canonical_line(p, dirs[0]);
    return out;
}

bool plane_contains_line(const AffinePlane& h, const AffineLine& l)
{
    return h.contains(l.base) && h.contains(l.base + l.dir);
}

// a*s + b*t = c in plane coordinates.
struct Line2 {
    Rational a, b, c;

    static Line2 through(const Point2& p, const Point2& q)
    {
        Line2 l{q[1] - p[1], p[0] - q[0], 0};
        l.c = l.a * p[0] + l.b * p[1];
        return l;
    }
    Rational value(const Point2& p) const { return a * p[0] + b * p[1] - c; }
};

std::optional<Point2> intersect2(const Line2& l, const Line2& m)
{
    Rational det = l.a * m.b - m.a * l.b;
    if (sign(det) == 0)
        return std::nullopt;
    return Point2{(l.c * m.b - m.c * l.b) / det, (l.a * m.c - m.a * l.c) / det};
}

using Poly2 = std::vector<Point2>;

// Splits a convex polygon by a line; returns the pieces (one if it does not cross).
std::vector<Poly2> split_polygon(const Poly2& poly, const Line2& l)
{
    std::vector<int> sg;
    bool pos = false, neg = false;
    for (const auto& p : poly) {
        sg.push_back(sign(l.value(p)));
        pos = pos || sg.back() > 0;
        neg = neg || sg.back() < 0;
    }
    if (!pos || !neg)
        return {poly};
    Poly2 left, right;
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j = (i + 1) % n;
        if (sg[i] >= 0)
            left.push_back(poly[i]);
        if (sg[i] <= 0)
            right.push_back(poly[i]);
        if (sg[i] * sg[j] < 0) {
            Rational vi = l.value(poly[i]), vj = l.value(poly[j]);
            Rational t = vi / (vi - vj);
            Point2 x{poly[i][0] + t * (poly[j][0] - poly[i][0]), poly[i][1] + t * (poly[j][1] - poly[i][1])};
            left.push_back(x);
            right.push_back(x);
        }
    }
    return {left, right};
}

// Drops repeated and collinear-middle vertices.
Poly2 clean_polygon(Poly2 poly)
{
    bool changed = true;
    while (changed && poly.size() > 2) {
        changed = false;
        const std::size_t n = poly.size();
        for (std::size_t i = 0; i < n; ++i) {
            const auto& prev = poly[(i + n - 1) % n];
            const auto& next = poly[(i + 1) % n];
            if (poly[i] == prev || sign(cross2(prev, poly[i], next)) == 0) {
                poly.erase(poly.begin() + static_cast<long>(i));
                changed = true;
                break;
            }
        }
    }
    return poly;
}

struct PlaneWork {
    AffinePlane h;
    std::vector<std::array<Point2, 3>> triangles;
    std::vector<Line2> lines;
    std::vector<Line2> extra_lines;
    std::vector<RatVector> new_points;
    std::vector<Triangle> faces;

    bool in_region(const Point2& p) const
    {
        return std::any_of(triangles.begin(), triangles.end(), [&](const auto& t) { return in_triangle2(p, t); });
    }
};

const std::array<Point2, 10>& stray_directions()
{
    static const std::array<Point2, 10> dirs = [] {
        const int raw[10][2] = {{1, 0}, {0, 1}, {1, 1}, {1, -1}, {1, 2}, {2, 1}, {1, -2}, {2, -1}, {1, 3}, {3, 1}};
        std::array<Point2, 10> d;
        for (int i = 0; i < 10; ++i)
            d[static_cast<std::size_t>(i)] = {make_rational(raw[i][0]), make_rational(raw[i][1])};
        return d;
    }();
    return dirs;
}

// Lines through C0 points of the plane that no arrangement line passes
// through, and the new vertices they create.
void add_stray_lines(PlaneWork& w, const std::set<RatVector>& c0)
{
    std::vector<Point2> pts;
    for (const auto& p : c0)
        if (w.h.contains(p)) {
            Point2 q = to2(w.h, p);
            if (w.in_region(q))
                pts.push_back(q);
        }
    for (const auto& p : pts) {
        auto on_some = [&](const std::vector<Line2>& ls) {
            return std::any_of(ls.begin(), ls.end(), [&](const Line2& l) { return sign(l.value(p)) == 0; });
        };
        if (on_some(w.lines) || on_some(w.extra_lines))
            continue;
        std::optional<Line2> chosen;
        for (const auto& d : stray_directions()) {
            Line2 l = Line2::through(p, {p[0] + d[0], p[1] + d[1]});
            bool clear = std::none_of(pts.begin(), pts.end(),
                                      [&](const Point2& q) { return q != p && sign(l.value(q)) == 0; });
            if (clear) {
                chosen = l;
                break;
            }
        }
        if (!chosen)
            chosen = Line2::through(p, {p[0] + 1, p[1]});
        w.extra_lines.push_back(*chosen);
    }
    for (std::size_t i = 0; i < w.extra_lines.size(); ++i) {
        auto record = [&](const Line2& other) {
            if (auto x = intersect2(w.extra_lines[i], other); x && w.in_region(*x))
                w.new_points.push_back(w.h.point((*x)[0], (*x)[1]));
        };
        for (const auto& l : w.lines)
            record(l);
        for (std::size_t j = 0; j < i; ++j)
            record(w.extra_lines[j]);
    }
}

void triangulate_plane(PlaneWork& w, const std::set<RatVector>& c0)
{
    struct Vertex2 {
        Point2 p;
        RatVector x;
    };
    std::vector<Vertex2> pts;
    for (const auto& p : c0)
        if (w.h.contains(p)) {
            Point2 q = to2(w.h, p);
            if (w.in_region(q))
                pts.push_back({q, p});
        }
    std::vector<Line2> all = w.lines;
    all.insert(all.end(), w.extra_lines.begin(), w.extra_lines.end());

    std::set<std::vector<Point2>> seen;
    std::vector<Poly2> cells;
    for (const auto& t : w.triangles) {
        std::vector<Poly2> cur{Poly2(t.begin(), t.end())};
        for (const auto& l : all) {
            std::vector<Poly2> next;
            for (const auto& c : cur)
                for (auto& piece : split_polygon(c, l))
                    next.push_back(std::move(piece));
            cur = std::move(next);
        }
        for (auto& c : cur) {
            c = clean_polygon(std::move(c));
            if (c.size() < 3)
                continue;
            std::vector<Point2> key = c;
            std::sort(key.begin(), key.end());
            if (seen.insert(key).second)
                cells.push_back(std::move(c));
        }
    }
    for (const auto& cell : cells) {
        // Boundary cycle through every C0 point on the cell's sides.
        std::vector<Vertex2> cycle;
        const std::size_t n = cell.size();
        for (std::size_t i = 0; i < n; ++i) {
            const Point2& a = cell[i];
            const Point2& b = cell[(i + 1) % n];
            cycle.push_back({a, w.h.point(a[0], a[1])});
            std::vector<std::pair<Rational, const Vertex2*>> inner;
            for (const auto& v : pts)
                if (v.p != a && v.p != b && on_segment2(v.p, a, b)) {
                    Rational t = (v.p[0] - a[0]) * (b[0] - a[0]) + (v.p[1] - a[1]) * (b[1] - a[1]);
                    inner.emplace_back(t, &v);
                }
            std::sort(inner.begin(), inner.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
            for (const auto& in : inner)
                cycle.push_back(*in.second);
        }
        auto start = std::min_element(cycle.begin(), cycle.end(),
                                      [](const Vertex2& x, const Vertex2& y) { return x.x < y.x; }) -
                     cycle.begin();
        std::rotate(cycle.begin(), cycle.begin() + start, cycle.end());
        // Ear clipping from the least vertex: this is the fan from cycle[0]
        // whenever that fan is valid, and otherwise never lets a chord run
        // along a side through another boundary vertex.
        while (cycle.size() > 3) {
            const std::size_t m = cycle.size();
            bool clipped = false;
            for (std::size_t k = 1; k <= m && !clipped; ++k) {
                const std::size_t i = k % m, u = (i + m - 1) % m, v = (i + 1) % m;
                if (sign(cross2(cycle[u].p, cycle[i].p, cycle[v].p)) == 0)
                    continue;
                bool blocked = false;
                for (std::size_t j = 0; j < m && !blocked; ++j)
                    blocked = j != u && j != i && j != v && on_segment2(cycle[j].p, cycle[u].p, cycle[v].p);
                if (blocked)
                    continue;
                w.faces.push_back({cycle[u].x, cycle[i].x, cycle[v].x});
                cycle.erase(cycle.begin() + static_cast<long>(i));
                clipped = true;
            }
            if (!clipped)
                throw InternalError("triangulate_plane: no ear in convex cell");
        }
        Triangle last{cycle[0].x, cycle[1].x, cycle[2].x};
        if (last.nondegenerate())
            w.faces.push_back(last);
    }
}

} // namespace

PLSC compatible_triangulation(const std::vector<Segment>& edges_in, const std::vector<Triangle>& polygons,
                              const Exec& exec)
{
    std::size_t dim = 0;
    std::vector<Segment> edges;
    {
        std::set<std::pair<RatVector, RatVector>> seen;
        for (const auto& e : edges_in) {
            if (e.a == e.b)
                continue;
            dim = e.a.dim();
            auto key = e.a < e.b ? std::make_pair(e.a, e.b) : std::make_pair(e.b, e.a);
            if (seen.insert(key).second)
                edges.push_back({key.first, key.second});
        }
    }
    std::vector<PlacedTriangle> tris;
    {
        std::set<std::array<RatVector, 3>> seen;
        for (const auto& t : polygons) {
            if (!t.nondegenerate())
                throw InputError("compatible_triangulation: degenerate polygon");
            dim = t.dim();
            std::array<RatVector, 3> key{t.p0, t.p1, t.p2};
            std::sort(key.begin(), key.end());
            if (seen.insert(key).second)
                tris.emplace_back(t);
        }
    }
    if (edges.empty() && tris.empty())
        return PLSC{dim, {}, {}, {}};

    // Supporting planes, with their triangles in plane coordinates.
    std::map<AffinePlane, std::size_t> plane_index;
    std::vector<PlaneWork> planes;
    for (const auto& t : tris) {
        auto [it, inserted] = plane_index.try_emplace(t.h, planes.size());
        if (inserted)
            planes.push_back(PlaneWork{t.h, {}, {}, {}, {}, {}});
        PlaneWork& w = planes[it->second];
        w.triangles.push_back({to2(w.h, t.t.p0), to2(w.h, t.t.p1), to2(w.h, t.t.p2)});
    }

    // Lines: polygon sides, edges, plane-plane intersections.
    std::set<AffineLine> lines;
    std::set<RatVector> c0;
    for (const auto& t : tris) {
        lines.insert(canonical_line(t.t.p0, t.t.p1 - t.t.p0));
        lines.insert(canonical_line(t.t.p1, t.t.p2 - t.t.p1));
        lines.insert(canonical_line(t.t.p2, t.t.p0 - t.t.p2));
        c0.insert({t.t.p0, t.t.p1, t.t.p2});
    }
    for (const auto& e : edges) {
        lines.insert(canonical_line(e.a, e.b - e.a));
        c0.insert({e.a, e.b});
    }
    std::vector<RatVector> candidates;
    for (std::size_t i = 0; i < planes.size(); ++i)
        for (std::size_t j = i + 1; j < planes.size(); ++j) {
            PlanePlane pp = intersect_planes(planes[i].h, planes[j].h);
            if (pp.line)
                lines.insert(*pp.line);
            if (pp.point)
                candidates.push_back(*pp.point);
        }
    std::vector<AffineLine> line_list(lines.begin(), lines.end());

    // Candidate vertices, kept only where they touch the input.
    std::vector<std::vector<RatVector>> found(line_list.size());
    parallel_for(line_list.size(), exec, [&](std::size_t i) {
        for (std::size_t j = i + 1; j < line_list.size(); ++j)
            if (auto p = intersect_lines(line_list[i], line_list[j]))
                found[i].push_back(*p);
        for (const auto& w : planes)
            if (auto p = intersect_line_plane(line_list[i], w.h))
                found[i].push_back(*p);
    });
    for (auto& f : found)
        candidates.insert(candidates.end(), f.begin(), f.end());
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    std::vector<char> keep(candidates.size(), 0);
    parallel_for(candidates.size(), exec, [&](std::size_t i) {
        const auto& p = candidates[i];
        keep[i] = std::any_of(tris.begin(), tris.end(), [&](const auto& t) { return t.contains(p); }) ||
                  std::any_of(edges.begin(), edges.end(), [&](const auto& e) { return point_in_segment(p, e); });
    });
    for (std::size_t i = 0; i < candidates.size(); ++i)
        if (keep[i])
            c0.insert(candidates[i]);

    for (auto& w : planes)
        for (const auto& l : line_list)
            if (plane_contains_line(w.h, l))
                w.lines.push_back(Line2::through(to2(w.h, l.base), to2(w.h, l.base + l.dir)));

    parallel_for(planes.size(), exec, [&](std::size_t i) { add_stray_lines(planes[i], c0); });
    for (const auto& w : planes)
        c0.insert(w.new_points.begin(), w.new_points.end());
    parallel_for(planes.size(), exec, [&](std::size_t i) { triangulate_plane(planes[i], c0); });

    std::vector<Triangle> faces;
    for (const auto& w : planes)
        faces.insert(faces.end(), w.faces.begin(), w.faces.end());
    std::vector<std::array<RatVector, 2>> out_edges;
    for (const auto& e : edges) {
        std::size_t k = segment_axis(e);
        std::vector<RatVector> on;
        for (const auto& p : c0)
            if (point_in_segment(p, e))
                on.push_back(p);
        std::sort(on.begin(), on.end(), [&](const RatVector& x, const RatVector& y) { return x[k] < y[k]; });
        for (std::size_t i = 0; i + 1 < on.size(); ++i)
            out_edges.push_back({on[i], on[i + 1]});
    }
    return make_plsc(dim, out_edges, faces);
}

namespace {

bool box_overlap(const RatVector& a, const RatVector& b, const RatVector& c, const RatVector& d)
{
    for (std::size_t k = 0; k < a.dim(); ++k) {
        const Rational& lo1 = a[k] < b[k] ? a[k] : b[k];
        const Rational& hi1 = a[k] < b[k] ? b[k] : a[k];
        const Rational& lo2 = c[k] < d[k] ? c[k] : d[k];
        const Rational& hi2 = c[k] < d[k] ? d[k] : c[k];
        if (hi1 < lo2 || hi2 < lo1)
            return false;
    }
    return true;
}

// True when a closed half-space (or, inside a common plane, a closed
// half-plane) bounded through the triangle `a` contains `b` while missing the
// relative interior of `a`; then the relative interiors cannot meet.
bool weakly_separated(const Triangle& a, const std::vector<RatVector>& b)
{
    auto one_side = [](const std::vector<int>& sg) {
        bool pos = false, neg = false;
        for (int x : sg) {
            pos = pos || x > 0;
            neg = neg || x < 0;
        }
        return !(pos && neg) && (pos || neg);
    };
    bool coplanar = true;
    for (const auto& n : kernel_basis(Matrix::from_rows({a.p1 - a.p0, a.p2 - a.p0}, a.dim()))) {
        std::vector<int> sg;
        for (const auto& v : b)
            sg.push_back(sign(dot(n, v - a.p0)));
        if (one_side(sg))
            return true;
        coplanar = coplanar && std::all_of(sg.begin(), sg.end(), [](int x) { return x == 0; });
    }
    if (!coplanar)
        return false;
    AffinePlane h = plane_of_triangle(a);
    std::array<Point2, 3> p{to2(h, a.p0), to2(h, a.p1), to2(h, a.p2)};
    for (int e = 0; e < 3; ++e) {
        int inside = sign(cross2(p[e], p[(e + 1) % 3], p[(e + 2) % 3]));
        bool ok = true;
        for (const auto& v : b)
            ok = ok && sign(cross2(p[e], p[(e + 1) % 3], to2(h, v))) != inside;
        if (ok)
            return true;
    }
    return false;
}

} // namespace

std::string check_triangulation(const std::vector<Segment>& edges, const std::vector<Triangle>& polygons,
                                const PLSC& c, const Exec& exec)
{
    if (!is_compatible(c, exec))
        return "complex is not compatible";
    std::vector<Segment> segs;
    for (const auto& e : edges)
        if (e.a != e.b)
            segs.push_back(e);
    std::vector<PlacedTriangle> tris;
    for (const auto& t : polygons)
        tris.emplace_back(t);

    auto interiors_meet = [](const std::vector<RatVector>& a, const std::vector<RatVector>& b) {
        auto vs = simplex_intersection(a, b);
        if (vs.empty())
            return false;
        // The mean of the vertices lies in the relative interior of the polytope.
        for (std::size_t k = 0; k < a.size(); ++k) {
            Rational s = 0;
            for (const auto& v : vs)
                s += v.lambda[k];
            if (sign(s) == 0)
                return false;
        }
        for (std::size_t k = 0; k < b.size(); ++k) {
            Rational s = 0;
            for (const auto& v : vs)
                s += v.mu[k];
            if (sign(s) == 0)
                return false;
        }
        return true;
    };

    for (std::size_t f = 0; f < c.faces.size(); ++f) {
        Triangle t = c.face_triangle(f);
        bool inside_some = false;
        for (const auto& p : tris) {
            bool inside = p.contains(t.p0) && p.contains(t.p1) && p.contains(t.p2);
            inside_some = inside_some || inside;
            if (!inside && !weakly_separated(t, {p.t.p0, p.t.p1, p.t.p2}) &&
                !weakly_separated(p.t, {t.p0, t.p1, t.p2}) &&
                interiors_meet({t.p0, t.p1, t.p2}, {p.t.p0, p.t.p1, p.t.p2}))
                return "face " + std::to_string(f) + " meets a polygon interior without lying inside it";
        }
        if (!inside_some)
            return "face " + std::to_string(f) + " lies outside every polygon";
    }
    for (std::size_t i = 0; i < c.edges.size(); ++i) {
        const RatVector& a = c.vertices[c.edges[i][0]];
        const RatVector& b = c.vertices[c.edges[i][1]];
        bool inside_some = false;
        for (const auto& e : segs) {
            bool inside = point_in_segment(a, e) && point_in_segment(b, e);
            inside_some = inside_some || inside;
            if (!inside && box_overlap(a, b, e.a, e.b) && interiors_meet({a, b}, {e.a, e.b}))
                return "edge " + std::to_string(i) + " meets an input edge interior without lying inside it";
        }
        for (const auto& p : tris)
            inside_some = inside_some || (p.contains(a) && p.contains(b));
        if (!inside_some)
            return "edge " + std::to_string(i) + " lies outside the input";
    }
    for (std::size_t i = 0; i < c.vertices.size(); ++i) {
        const auto& v = c.vertices[i];
        bool inside = std::any_of(tris.begin(), tris.end(), [&](const auto& p) { return p.contains(v); }) ||
                      std::any_of(segs.begin(), segs.end(), [&](const auto& e) { return point_in_segment(v, e); });
        if (!inside)
            return "vertex " + std::to_string(i) + " lies outside the input";
    }
    for (std::size_t i = 0; i < tris.size(); ++i) {
        const auto& p = tris[i];
        Rational area = 0;
        for (std::size_t f = 0; f < c.faces.size(); ++f) {
            Triangle t = c.face_triangle(f);
            if (p.contains(t.p0) && p.contains(t.p1) && p.contains(t.p2))
                area += abs_area2({to2(p.h, t.p0), to2(p.h, t.p1), to2(p.h, t.p2)});
        }
        if (area != abs_area2(p.p2))
            return "area of polygon " + std::to_string(i) + " is not conserved";
    }
    std::vector<Segment> sides = segs;
    for (const auto& p : tris) {
        sides.push_back({p.t.p0, p.t.p1});
        sides.push_back({p.t.p1, p.t.p2});
        sides.push_back({p.t.p2, p.t.p0});
    }
    for (std::size_t i = 0; i < sides.size(); ++i) {
        const auto& s = sides[i];
        std::size_t k = segment_axis(s);
        Rational len = 0;
        for (const auto& e : c.edges) {
            const RatVector& a = c.vertices[e[0]];
            const RatVector& b = c.vertices[e[1]];
            if (point_in_segment(a, s) && point_in_segment(b, s))
                len += param_length(a, b, k);
        }
        if (len != param_length(s.a, s.b, k))
            return (i < segs.size() ? "edge " : "polygon side ") + std::to_string(i) + " is not covered by 1-simplices";
    }
    return {};
}

// ---------------------------------------------------------------------------
// Kite complexes and shelling

Triangle kite_triangle(const Kite& k)
{
    PLWord l = reduce(k.loop);
    if (l.size() != 3 || !is_loop(l))
        throw InputError("kite is not triangular");
    RatVector base = endpoint(k.tail);
    auto ps = partial_sums(l);
    return {base, base + ps[1], base + ps[2]};
}

namespace {

std::vector<Segment> tail_segments(const PLWord& tail)
{
    std::vector<Segment> out;
    auto ps = partial_sums(tail);
    for (std::size_t i = 0; i + 1 < ps.size(); ++i)
        if (ps[i] != ps[i + 1])
            out.push_back({ps[i], ps[i + 1]});
    return out;
}

} // namespace

KiteComplex build_plsc(const KiteWord& x)
{
    KiteWord src = fan_split(x);
    std::vector<std::array<RatVector, 2>> edges;
    std::vector<Triangle> faces;
    for (const auto& k : src.kites) {
        for (const auto& s : tail_segments(k.tail))
            edges.push_back({s.a, s.b});
        faces.push_back(kite_triangle(k));
    }
    KiteComplex out;
    out.complex = make_plsc(x.dim, edges, faces);
    const PLSC& c = out.complex;
    out.face_kites.resize(c.faces.size());
    for (std::size_t i = 0; i < src.kites.size(); ++i) {
        Triangle t = faces[i];
        std::size_t f = *c.find_face(*c.find_vertex(t.p0), *c.find_vertex(t.p1), *c.find_vertex(t.p2));
        out.kite_face.push_back(f);
        out.face_kites[f].push_back(i);
        std::vector<std::size_t> es;
        for (const auto& s : tail_segments(src.kites[i].tail))
            es.push_back(*c.find_edge(*c.find_vertex(s.a), *c.find_vertex(s.b)));
        out.kite_edges.push_back(std::move(es));
    }
    return out;
}

std::vector<ShellStep> shell_disk(std::vector<std::array<std::size_t, 3>> faces, std::vector<std::size_t> boundary,
                                  std::vector<std::size_t> base_path)
{
    if (base_path.empty() || base_path.back() != boundary.at(0))
        throw InternalError("shell_disk: base path must end at the boundary basepoint");
    std::vector<ShellStep> out;
    while (!faces.empty()) {
        const std::size_t n = boundary.size();
        std::map<std::size_t, std::size_t> pos;
        for (std::size_t i = 0; i < n; ++i)
            pos[boundary[i]] = i;
        auto consecutive = [&](std::size_t a, std::size_t b) {
            auto ia = pos.find(a), ib = pos.find(b);
            return ia != pos.end() && ib != pos.end() && (ia->second + 1) % n == ib->second;
        };
        if (faces.size() == 1) {
            std::array<std::size_t, 3> f = faces[0], b{};
            if (n != 3)
                throw InternalError("shell_disk: last face does not match the boundary");
            std::copy(boundary.begin(), boundary.end(), b.begin());
            std::sort(f.begin(), f.end());
            std::array<std::size_t, 3> bs = b;
            std::sort(bs.begin(), bs.end());
            if (f != bs)
                throw InternalError("shell_disk: last face does not match the boundary");
            out.push_back({base_path, b});
            break;
        }
        bool removed = false;
        for (std::size_t fi = 0; fi < faces.size() && !removed; ++fi) {
            const auto& f = faces[fi];
            std::vector<std::pair<std::size_t, std::size_t>> bedges;
            for (int a = 0; a < 3; ++a)
                for (int b = 0; b < 3; ++b)
                    if (a != b && consecutive(f[static_cast<std::size_t>(a)], f[static_cast<std::size_t>(b)]))
                        bedges.emplace_back(f[static_cast<std::size_t>(a)], f[static_cast<std::size_t>(b)]);
            std::size_t first = 0, len = 0;
            std::vector<std::size_t> other;
            std::array<std::size_t, 3> loop{};
            if (bedges.size() == 1) {
                auto [x, y] = bedges[0];
                std::size_t v = f[0] + f[1] + f[2] - x - y;
                if (pos.count(v))
                    continue;
                first = pos[x];
                len = 1;
                other = {x, v, y};
                loop = {x, y, v};
            } else if (bedges.size() == 2) {
                auto e1 = bedges[0], e2 = bedges[1];
                if (e1.first == e2.second)
                    std::swap(e1, e2);
                if (e1.second != e2.first)
                    continue;
                std::size_t x = e1.first, m = e1.second, y = e2.second;
                if (m == boundary[0]) {
                    // Move the basepoint back one step so the removed vertex is not it.
                    base_path.push_back(boundary[n - 1]);
                    std::rotate(boundary.rbegin(), boundary.rbegin() + 1, boundary.rend());
                    pos.clear();
                    for (std::size_t i = 0; i < n; ++i)
                        pos[boundary[i]] = i;
                }
                first = pos[x];
                len = 2;
                other = {x, y};
                loop = {x, m, y};
            } else {
                continue;
            }
            std::vector<std::size_t> closed = boundary;
            closed.push_back(boundary[0]);
            ShellStep step{base_path, loop};
            step.tail.insert(step.tail.end(), closed.begin() + 1, closed.begin() + static_cast<long>(first) + 1);
            out.push_back(std::move(step));
            std::vector<std::size_t> next(closed.begin(), closed.begin() + static_cast<long>(first));
            next.insert(next.end(), other.begin(), other.end());
            next.insert(next.end(), closed.begin() + static_cast<long>(first + len) + 1, closed.end());
            next.pop_back();
            boundary = std::move(next);
            faces.erase(faces.begin() + static_cast<long>(fi));
            removed = true;
        }
        if (!removed)
            throw InternalError("shell_disk: no removable face");
    }
    return out;
}

std::vector<ShellStep> shell_sphere(const std::vector<std::array<std::size_t, 3>>& faces)
{
    if (faces.size() < 2)
        throw InternalError("shell_sphere: need at least two faces");
    const auto& f0 = faces[0];
    std::vector<std::array<std::size_t, 3>> rest(faces.begin() + 1, faces.end());
    auto steps = shell_disk(rest, {f0[0], f0[2], f0[1]}, {f0[0]});
    steps.push_back({{f0[0]}, f0});
    return steps;
}

PLWord vertex_path_word(const std::vector<RatVector>& positions, const std::vector<std::size_t>& path)
{
    PLWord w(positions.at(0).dim());
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
        w.letters.push_back(positions[path[i + 1]] - positions[path[i]]);
    return w;
}

Kite shell_step_kite(const std::vector<RatVector>& positions, const ShellStep& s, const PLWord& prefix)
{
    const auto& l = s.loop;
    return {concat_raw(prefix, vertex_path_word(positions, s.tail)),
            vertex_path_word(positions, {l[0], l[1], l[2], l[0]}), 1};
}

// ---------------------------------------------------------------------------
// Compatible representative and chains

Chain2 chain(const SimplexMapping& m)
{
    Chain2 c;
    for (const auto& e : m.entries)
        c[e.face] += e.sign;
    std::erase_if(c, [](const auto& kv) { return kv.second == 0; });
    return c;
}

namespace {

int relative_orientation(const Triangle& t, const Triangle& face)
{
    AffinePlane h = plane_of_triangle(face);
    return canonical_orientation_sign(t, h) * canonical_orientation_sign(face, h);
}

std::vector<std::size_t> vertices_on_segment(const PLSC& c, const RatVector& a, const RatVector& b)
{
    Segment s{a, b};
    std::size_t k = segment_axis(s);
    std::vector<std::size_t> on;
    for (std::size_t i = 0; i < c.vertices.size(); ++i)
        if (point_in_segment(c.vertices[i], s))
            on.push_back(i);
    bool up = a[k] < b[k];
    std::sort(on.begin(), on.end(), [&](std::size_t x, std::size_t y) {
        return up ? c.vertices[x][k] < c.vertices[y][k] : c.vertices[y][k] < c.vertices[x][k];
    });
    return on;
}

} // namespace

Chain2 kite_chain(const KiteWord& x, const PLSC& c)
{
    Chain2 out;
    for (const auto& k : x.kites) {
        Triangle t = kite_triangle(k);
        auto a = c.find_vertex(t.p0), b = c.find_vertex(t.p1), d = c.find_vertex(t.p2);
        std::optional<std::size_t> f;
        if (a && b && d)
            f = c.find_face(*a, *b, *d);
        if (!f)
            throw InputError("kite triangle is not a face of the complex");
        out[*f] += relative_orientation(t, c.face_triangle(*f)) * k.sign;
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

CompatibleRepresentative compatible_representative(const KiteWord& x, const Exec& exec)
{
    CompatibleRepresentative out;
    out.source = fan_split(x);
    const KiteWord& src = out.source;
    std::vector<Segment> segs;
    std::vector<Triangle> tris;
    for (const auto& k : src.kites) {
        auto ts = tail_segments(k.tail);
        segs.insert(segs.end(), ts.begin(), ts.end());
        tris.push_back(kite_triangle(k));
    }
    out.complex = compatible_triangulation(segs, tris, exec);
    const PLSC& c = out.complex;
    out.word = KiteWord(x.dim);

    // Each kite is refined independently; results are assembled in order.
    std::vector<std::vector<Kite>> refined(src.kites.size());
    std::vector<std::vector<SimplexMapping::Entry>> entries(src.kites.size());
    parallel_for(src.kites.size(), exec, [&](std::size_t j) {
        const Kite& k = src.kites[j];
        const Triangle& t = tris[j];
        PlacedTriangle pt(t);

        std::vector<std::size_t> tail_path;
        auto ps = partial_sums(k.tail);
        tail_path.push_back(*c.find_vertex(ps[0]));
        for (std::size_t i = 0; i + 1 < ps.size(); ++i) {
            if (ps[i] == ps[i + 1])
                continue;
            auto on = vertices_on_segment(c, ps[i], ps[i + 1]);
            tail_path.insert(tail_path.end(), on.begin() + 1, on.end());
        }
        PLWord tail = vertex_path_word(c.vertices, tail_path);

        std::vector<std::array<std::size_t, 3>> inside;
        for (const auto& f : c.faces)
            if (pt.contains(c.vertices[f[0]]) && pt.contains(c.vertices[f[1]]) && pt.contains(c.vertices[f[2]]))
                inside.push_back(f);
        std::vector<std::size_t> boundary;
        for (const auto& [a, b] : {std::pair{t.p0, t.p1}, std::pair{t.p1, t.p2}, std::pair{t.p2, t.p0}}) {
            auto on = vertices_on_segment(c, a, b);
            boundary.insert(boundary.end(), on.begin(), on.end() - 1);
        }
        auto steps = shell_disk(std::move(inside), boundary, {boundary[0]});
        for (const auto& s : steps) {
            Kite piece = shell_step_kite(c.vertices, s, tail);
            Triangle pt3{c.vertices[s.loop[0]], c.vertices[s.loop[1]], c.vertices[s.loop[2]]};
            std::size_t f = *c.find_face(s.loop[0], s.loop[1], s.loop[2]);
            entries[j].push_back({j, f, relative_orientation(pt3, c.face_triangle(f)) * k.sign});
            refined[j].push_back(std::move(piece));
        }
        if (k.sign < 0) {
            std::reverse(refined[j].begin(), refined[j].end());
            for (auto& piece : refined[j])
                piece.sign = -1;
        }
    });
    for (std::size_t j = 0; j < src.kites.size(); ++j) {
        out.word.kites.insert(out.word.kites.end(), refined[j].begin(), refined[j].end());
        out.mapping.entries.insert(out.mapping.entries.end(), entries[j].begin(), entries[j].end());
    }

    if (!reduce(concat_raw(boundary_delta(out.word), inverse(boundary_delta(x)))).empty())
        throw InternalError("compatible_representative: boundary check failed");
    if (kite_chain(out.word, c) != chain(out.mapping))
        throw InternalError("compatible_representative: refined soup mismatch");
    return out;
}

} // namespace plsurf
