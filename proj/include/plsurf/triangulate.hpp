#pragma once

#include "plsurf/core.hpp"
#include "plsurf/parallel.hpp"
#include "plsurf/plsurface.hpp"

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace plsurf {

// Ordered simplicial complex with vertices in V. Vertices are sorted
// lexicographically; edges (i < j) and faces (i < j < k) are sorted too.
struct PLSC {
    std::size_t dim = 0;
    std::vector<RatVector> vertices;
    std::vector<std::array<std::size_t, 2>> edges;
    std::vector<std::array<std::size_t, 3>> faces;

    std::optional<std::size_t> find_vertex(const RatVector& p) const;
    std::optional<std::size_t> find_edge(std::size_t a, std::size_t b) const;
    std::optional<std::size_t> find_face(std::size_t a, std::size_t b, std::size_t c) const;
    Triangle face_triangle(std::size_t f) const;
};

// Assembles a complex from raw simplices: vertices are collected, sorted and
// deduplicated, and faces contribute their edges.
PLSC make_plsc(std::size_t dim, const std::vector<std::array<RatVector, 2>>& edges,
               const std::vector<Triangle>& faces);

struct Segment {
    RatVector a, b;
};

// Vertices (lambda, mu) of the polytope of barycentric pairs with
// sum lambda_i a_i = sum mu_j b_j; their images span conv(a) and conv(b)'s
// intersection. Both point sets must be affinely independent.
struct BarycentricPair {
    std::vector<Rational> lambda, mu;
};
std::vector<BarycentricPair> simplex_intersection(const std::vector<RatVector>& a, const std::vector<RatVector>& b);

bool point_in_segment(const RatVector& p, const Segment& s);
bool point_in_triangle(const RatVector& p, const Triangle& t);

bool is_compatible(const PLSC& c, const Exec& exec = {});

PLSC compatible_triangulation(const std::vector<Segment>& edges, const std::vector<Triangle>& polygons,
                              const Exec& exec = {});

// Checks the compatible-triangulation conditions for (edges, polygons):
// compatibility, simplex containment, exact area and length conservation and
// covering of input edges and polygon sides. Returns an empty string when all
// hold, otherwise a description of the first failure.
std::string check_triangulation(const std::vector<Segment>& edges, const std::vector<Triangle>& polygons,
                                const PLSC& c, const Exec& exec = {});

// Complex spanned by a word of triangular kites, with provenance.
struct KiteComplex {
    PLSC complex;
    std::vector<std::size_t> kite_face;                // face of each kite
    std::vector<std::vector<std::size_t>> kite_edges;  // tail edges of each kite
    std::vector<std::vector<std::size_t>> face_kites;  // kites mapped to each face
};

// Triangle spanned by a kite whose reduced loop has three letters.
Triangle kite_triangle(const Kite& k);
KiteComplex build_plsc(const KiteWord& x);

// Peeling of a triangulated disk. `boundary` is the boundary cycle (vertex
// ids, not repeated at the end) oriented like the disk, `base_path` a vertex
// path ending at boundary[0]. Each step is a kite: tail = vertex path from the
// start of base_path, loop = the face traversed in the disk orientation. The
// product of the step kites is base_path * boundary * base_path^-1.
struct ShellStep {
    std::vector<std::size_t> tail;
    std::array<std::size_t, 3> loop;
};
std::vector<ShellStep> shell_disk(std::vector<std::array<std::size_t, 3>> faces, std::vector<std::size_t> boundary,
                                  std::vector<std::size_t> base_path);

// Same for a closed oriented surface (faces listed with outward orientation):
// face 0 is removed, the rest shelled, and face 0 appended last.
std::vector<ShellStep> shell_sphere(const std::vector<std::array<std::size_t, 3>>& faces);

PLWord vertex_path_word(const std::vector<RatVector>& positions, const std::vector<std::size_t>& path);
Kite shell_step_kite(const std::vector<RatVector>& positions, const ShellStep& s, const PLWord& prefix);

struct SimplexMapping {
    struct Entry {
        std::size_t source = 0; // kite triangle index in the fan-split word
        std::size_t face = 0;
        int sign = 1;
    };
    std::vector<Entry> entries;
};

using Chain2 = std::map<std::size_t, long>;

Chain2 chain(const SimplexMapping& m);

struct CompatibleRepresentative {
    KiteWord word;
    PLSC complex;
    SimplexMapping mapping;
    KiteWord source; // fan-split input the mapping refers to
};

CompatibleRepresentative compatible_representative(const KiteWord& x, const Exec& exec = {});

// Chain of a word all of whose kites are faces of `c`.
Chain2 kite_chain(const KiteWord& x, const PLSC& c);

} // namespace plsurf
