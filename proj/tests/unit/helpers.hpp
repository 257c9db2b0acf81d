#pragma once

#include "plsurf/plpath.hpp"

#include <random>

namespace testing {

inline plsurf::Rational r(long p, long q = 1) { return plsurf::make_rational(p, q); }

inline plsurf::RatVector vec(std::initializer_list<long> xs)
{
    plsurf::RatVector v(xs.size());
    std::size_t i = 0;
    for (long x : xs)
        v[i++] = r(x);
    return v;
}

inline plsurf::RatVector random_vec(std::mt19937_64& rng, std::size_t dim, int range = 3)
{
    std::uniform_int_distribution<int> d(-range, range);
    plsurf::RatVector v(dim);
    for (std::size_t i = 0; i < dim; ++i)
        v[i] = d(rng);
    return v;
}

// Random word mixing fresh letters with zero letters and rescaled copies of
// the previous letter, so that every rewrite rule fires.
inline plsurf::PLWord random_word(std::mt19937_64& rng, std::size_t dim, std::size_t max_len)
{
    std::uniform_int_distribution<std::size_t> len(0, max_len);
    std::uniform_int_distribution<int> kind(0, 5);
    std::uniform_int_distribution<int> scale(-2, 2);
    plsurf::PLWord w(dim);
    std::size_t n = len(rng);
    for (std::size_t i = 0; i < n; ++i) {
        int k = kind(rng);
        if (k == 0)
            w.letters.push_back(plsurf::RatVector(dim));
        else if (k == 1 && !w.letters.empty())
            w.letters.push_back(r(scale(rng), 2) * w.letters.back());
        else
            w.letters.push_back(random_vec(rng, dim, 2));
    }
    return w;
}

} // namespace testing
