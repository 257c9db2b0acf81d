#include "plsurf/plpath.hpp"

#include <cstdlib>

namespace plsurf {

PLWord::PLWord(std::size_t d, std::vector<RatVector> ls) : dim(d), letters(std::move(ls))
{
    for (const auto& l : letters)
        if (l.dim() != dim)
            throw InputError("PLWord letter has wrong dimension");
}

bool is_minimal(const PLWord& w)
{
    for (std::size_t i = 0; i < w.letters.size(); ++i) {
        if (w.letters[i].is_zero())
            return false;
        if (i + 1 < w.letters.size() && linearly_dependent(w.letters[i], w.letters[i + 1]))
            return false;
    }
    return true;
}

// Leftmost rewriting realized with a stack: the stack always holds a minimal
// word, and each incoming letter is merged into the top while dependent.
PLWord reduce(const PLWord& w)
{
    PLWord out(w.dim);
    auto& st = out.letters;
    for (const auto& l : w.letters) {
        if (l.dim() != w.dim)
            throw InputError("PLWord letter has wrong dimension");
        RatVector x = l;
        while (!x.is_zero() && !st.empty() && linearly_dependent(st.back(), x)) {
            x += st.back();
            st.pop_back();
        }
        if (!x.is_zero())
            st.push_back(std::move(x));
    }
    return out;
}

PLWord reduce_scheduled(const PLWord& w, const std::function<std::size_t(std::size_t)>& pick)
{
    std::vector<RatVector> ls = w.letters;
    for (;;) {
        // Sites: 2*i for "delete zero letter i", 2*i+1 for "merge i and i+1".
        std::vector<std::size_t> sites;
        for (std::size_t i = 0; i < ls.size(); ++i) {
            if (ls[i].is_zero())
                sites.push_back(2 * i);
            else if (i + 1 < ls.size() && !ls[i + 1].is_zero() && linearly_dependent(ls[i], ls[i + 1]))
                sites.push_back(2 * i + 1);
        }
        if (sites.empty())
            break;
        std::size_t s = sites[pick(sites.size()) % sites.size()];
        std::size_t i = s / 2;
        if (s % 2 == 0) {
            ls.erase(ls.begin() + static_cast<long>(i));
        } else {
            ls[i] += ls[i + 1];
            ls.erase(ls.begin() + static_cast<long>(i + 1));
        }
    }
    return PLWord(w.dim, std::move(ls));
}

bool equivalent(const PLWord& a, const PLWord& b) { return reduce(a) == reduce(b); }

namespace {

void check_dims(const PLWord& a, const PLWord& b)
{
    if (a.dim != b.dim)
        throw InputError("PLWord dimension mismatch");
}

} // namespace

PLWord concat_raw(const PLWord& a, const PLWord& b)
{
    check_dims(a, b);
    PLWord out = a;
    out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
    return out;
}

PLWord concat(const PLWord& a, const PLWord& b) { return reduce(concat_raw(a, b)); }

PLWord inverse(const PLWord& a)
{
    PLWord out(a.dim);
    for (auto it = a.letters.rbegin(); it != a.letters.rend(); ++it)
        out.letters.push_back(-*it);
    return out;
}

RatVector endpoint(const PLWord& a)
{
    RatVector s(a.dim);
    for (const auto& l : a.letters)
        s += l;
    return s;
}

Subspace span(const PLWord& a) { return span_of(reduce(a).letters, a.dim); }

std::size_t span_dim(const PLWord& a) { return span(a).dim(); }

std::vector<RatVector> partial_sums(const PLWord& a)
{
    std::vector<RatVector> p{RatVector(a.dim)};
    for (const auto& l : a.letters)
        p.push_back(p.back() + l);
    return p;
}

bool is_loop(const PLWord& a) { return endpoint(a).is_zero(); }

bool is_planar_loop(const PLWord& a) { return is_loop(a) && span_dim(a) <= 2; }

std::vector<Triangle> triangle_fan(const PLWord& b)
{
    if (!is_loop(b))
        throw InputError("triangle_fan: word is not a loop");
    auto p = partial_sums(reduce(b));
    std::vector<Triangle> out;
    const RatVector origin(b.dim);
    for (std::size_t i = 1; i + 2 < p.size(); ++i) {
        Triangle t{origin, p[i], p[i + 1]};
        if (t.nondegenerate())
            out.push_back(std::move(t));
    }
    return out;
}

PLWord triangle_loop(const RatVector& v, const RatVector& u)
{
    return PLWord(v.dim(), {v, u - v, -u});
}

PLWord apply_linear_map(const Matrix& m, const PLWord& a)
{
    if (m.cols() != a.dim)
        throw InputError("apply_linear_map: shape mismatch");
    PLWord out(m.rows());
    for (const auto& l : a.letters)
        out.letters.push_back(m * l);
    return reduce(out);
}

PLWord free_group_embed(const std::vector<RatVector>& images, const std::vector<int>& word)
{
    if (images.empty())
        throw InputError("free_group_embed: empty alphabet");
    std::size_t dim = images[0].dim();
    for (std::size_t i = 0; i < images.size(); ++i) {
        if (images[i].dim() != dim || images[i].is_zero())
            throw InputError("free_group_embed: images must be nonzero and of equal dimension");
        for (std::size_t j = i + 1; j < images.size(); ++j)
            if (linearly_dependent(images[i], images[j]))
                throw InputError("free_group_embed: images must be pairwise independent");
    }
    std::vector<int> red;
    for (int g : word) {
        if (g == 0 || static_cast<std::size_t>(std::abs(g)) > images.size())
            throw InputError("free_group_embed: letter out of range");
        if (!red.empty() && red.back() == -g)
            red.pop_back();
        else
            red.push_back(g);
    }
    PLWord out(dim);
    for (std::size_t i = 0; i < red.size();) {
        int gen = std::abs(red[i]);
        long n = 0;
        std::size_t j = i;
        for (; j < red.size() && std::abs(red[j]) == gen; ++j)
            n += red[j] > 0 ? 1 : -1;
        out.letters.push_back(Rational(n) * images[static_cast<std::size_t>(gen - 1)]);
        i = j;
    }
    return reduce(out);
}

} // namespace plsurf
