#pragma once

#include "plsurf/core.hpp"

#include <cstddef>
#include <functional>
#include <vector>

namespace plsurf {

// A word in the free monoid on V. Words are kept exactly as given; use
// reduce() for the minimal representative and equivalent() for equality in
// PL_0(V).
struct PLWord {
    std::size_t dim = 0;
    std::vector<RatVector> letters;

    PLWord() = default;
    explicit PLWord(std::size_t d) : dim(d) {}
    PLWord(std::size_t d, std::vector<RatVector> ls);

    bool empty() const { return letters.empty(); }
    std::size_t size() const { return letters.size(); }
    friend bool operator==(const PLWord& a, const PLWord& b)
    {
        return a.dim == b.dim && a.letters == b.letters;
    }
};

bool is_minimal(const PLWord& w);
PLWord reduce(const PLWord& w);

// Rewriting with a caller-chosen schedule: among the currently applicable
// rewrite sites (zero letter, or dependent adjacent pair) `pick(n)` selects one
// of n. Used to exercise confluence.
PLWord reduce_scheduled(const PLWord& w, const std::function<std::size_t(std::size_t)>& pick);

bool equivalent(const PLWord& a, const PLWord& b);

PLWord concat(const PLWord& a, const PLWord& b);     // reduced
PLWord concat_raw(const PLWord& a, const PLWord& b); // letters appended, unreduced
PLWord inverse(const PLWord& a);
RatVector endpoint(const PLWord& a);
Subspace span(const PLWord& a);
std::size_t span_dim(const PLWord& a);

// Vertices 0, v1, v1+v2, ... of the word as given.
std::vector<RatVector> partial_sums(const PLWord& a);

bool is_loop(const PLWord& a);
bool is_planar_loop(const PLWord& a);

// Fan of the minimal form of a loop from its basepoint; degenerate triangles
// are dropped.
std::vector<Triangle> triangle_fan(const PLWord& b);

// The loop (v, u - v, -u) around the triangle [0, v, u].
PLWord triangle_loop(const RatVector& v, const RatVector& u);

PLWord apply_linear_map(const Matrix& m, const PLWord& a);

// Letters of a free-group word are +k / -k for generator k (1-based).
PLWord free_group_embed(const std::vector<RatVector>& images, const std::vector<int>& word);

} // namespace plsurf
