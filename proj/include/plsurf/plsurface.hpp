#pragma once

#include "plsurf/currents.hpp"
#include "plsurf/parallel.hpp"
#include "plsurf/plpath.hpp"
#include "plsurf/tensor.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace plsurf {

// A kite (tail, loop) raised to the power `sign`. The tail is kept as given
// (it may be a marked, unreduced word); the loop must be planar.
struct Kite {
    PLWord tail;
    PLWord loop;
    int sign = 1;
};

// Element of PL_1(V) as a word in kites, composed left to right.
struct KiteWord {
    std::size_t dim = 0;
    std::vector<Kite> kites;

    KiteWord() = default;
    explicit KiteWord(std::size_t d) : dim(d) {}
    std::size_t size() const { return kites.size(); }
};

struct SurfaceSignature {
    TruncatedTensor boundary;
    PolyCurrent gamma;
};

// Kite with tail `tail` whose loop runs around the triangle
// [end(tail), end(tail) + v, end(tail) + u].
Kite triangle_kite(const PLWord& tail, const RatVector& v, const RatVector& u, int sign = 1);

PLWord boundary_delta(const KiteWord& x);
PLWord kite_delta(const Kite& k);

std::vector<SignedTriangle> triangulate_kite(const Kite& k);
// Splits every kite into triangular kites sharing its tail (fan of the loop).
KiteWord fan_split(const KiteWord& x);

// Cancels oppositely signed copies of the same oriented triangle (up to cyclic
// rotation) and drops degenerate triangles; order of first appearance is kept.
SignedTriangleSoup normalize_soup(const SignedTriangleSoup& s);

SignedTriangleSoup closed_soup(const KiteWord& x);
SurfaceSignature surface_signature(const KiteWord& x, std::size_t level, int max_weight, const Exec& exec = {});

KiteWord mul(const KiteWord& x, const KiteWord& y);
KiteWord inv(const KiteWord& x);
KiteWord act(const PLWord& x, const KiteWord& w);
Kite inverse_kite(const Kite& k);

SignedTriangleSoup suspension_soup(const RatVector& a, const PLWord& b);

// Kites are inverse to each other in PL_1 by the fold relation (same tail
// class, inverse loop powers).
bool kites_cancel(const Kite& a, const Kite& b);

struct SimplifyStats {
    std::size_t moves = 0;
    bool budget_exhausted = false;
};

KiteWord local_simplify(const KiteWord& x, std::size_t budget, SimplifyStats* stats = nullptr);

struct Violation {
    std::size_t kite = 0; // index of the offending kite (0 for word-level issues)
    std::string code;     // "dim", "not_loop", "non_planar", "sign"
    std::string message;
};

std::vector<Violation> validate(const KiteWord& x);

} // namespace plsurf
