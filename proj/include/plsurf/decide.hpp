#pragma once

#include "plsurf/plsurface.hpp"
#include "plsurf/triangulate.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace plsurf {

enum class Verdict { equal, not_equal };

struct Witness {
    enum class Kind { boundary, face } kind = Kind::boundary;
    std::array<RatVector, 3> face; // vertices of the witness face (Kind::face)
    long multiplicity = 0;
};

struct DecisionReport {
    Verdict verdict = Verdict::equal;
    PLWord boundary_x, boundary_y; // minimal words of the two boundaries
    bool boundary_equal = true;
    Chain2 chain;                  // chain of X * Y^-1 (only when boundaries agree)
    PLSC complex;                  // complex the chain lives on
    std::optional<Witness> witness;
    std::optional<SurfaceSignature> signature; // of X * Y^-1
    std::size_t level = 0;
    int max_weight = 0;
};

struct DecideOptions {
    Exec exec;
    bool with_signature = true;
    std::size_t level = 4;
    int max_weight = 6;
};

DecisionReport thin_equiv(const KiteWord& x, const KiteWord& y, const DecideOptions& opt = {});
DecisionReport is_null(const KiteWord& x, const DecideOptions& opt = {});

// Fixture words. Names: fold, peiffer, tetrahedron, antipodal,
// random_null(SEED), random_nonnull(SEED); "random_null:SEED" is also accepted.
KiteWord gen_example(const std::string& name);
std::vector<std::string> example_names();

// Icosahedron (12 vertices, 20 outward faces) and its antipodal involution.
struct Icosahedron {
    std::vector<std::array<double, 3>> vertices;
    std::vector<std::array<std::size_t, 3>> faces;
    std::vector<std::size_t> antipode;
};
Icosahedron icosahedron();

// Random building blocks shared by the generators and the test suites. All
// coordinates are small rationals; `dim` >= 2.
RatVector random_vector(std::mt19937_64& rng, std::size_t dim, int range = 3);
Kite random_kite(std::mt19937_64& rng, std::size_t dim, std::size_t max_tail = 2);
KiteWord random_kite_word(std::mt19937_64& rng, std::size_t dim, std::size_t kites, std::size_t max_tail = 2);

// Class-preserving rewrites: fold insertion, Peiffer swap, PL1.3 rebasing,
// PL1.1 splitting of a triangular kite and tail retracing.
enum class Move { fold, peiffer, rebase, split, retrace };
bool apply_move(KiteWord& x, Move m, std::mt19937_64& rng);
KiteWord scramble(const KiteWord& x, std::mt19937_64& rng, std::size_t moves);

} // namespace plsurf
