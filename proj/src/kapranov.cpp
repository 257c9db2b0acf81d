#include "plsurf/kapranov.hpp"

#include <map>

namespace plsurf {

namespace {

std::size_t ipow(std::size_t b, std::size_t e)
{
    std::size_t r = 1;
    while (e--)
        r *= b;
    return r;
}

Word word_of_index(std::size_t idx, std::size_t len, std::size_t d)
{
    Word w(len);
    for (std::size_t p = len; p-- > 0;) {
        w[p] = static_cast<int>(idx % d);
        idx /= d;
    }
    return w;
}

std::size_t index_of_word(const Word& w, std::size_t d)
{
    std::size_t idx = 0;
    for (int x : w)
        idx = idx * d + static_cast<std::size_t>(x);
    return idx;
}

MultiIndex counts(const Word& w, std::size_t d)
{
    MultiIndex a(d, 0);
    for (int x : w)
        a[static_cast<std::size_t>(x)] += 1;
    return a;
}

} // namespace

bool K1Elt::is_zero() const
{
    for (const auto& v : coords)
        if (!v.is_zero())
            return false;
    return true;
}

K1Elt& K1Elt::operator+=(const K1Elt& o)
{
    if (o.dim != dim || o.level != level)
        throw InputError("K1 element context mismatch");
    for (std::size_t w = 0; w < coords.size(); ++w)
        coords[w] += o.coords[w];
    return *this;
}

K1Elt& K1Elt::operator-=(const K1Elt& o)
{
    if (o.dim != dim || o.level != level)
        throw InputError("K1 element context mismatch");
    for (std::size_t w = 0; w < coords.size(); ++w)
        coords[w] -= o.coords[w];
    return *this;
}

K1Elt& K1Elt::operator*=(const Rational& s)
{
    for (auto& v : coords)
        v *= s;
    return *this;
}

K1Elt operator+(K1Elt a, const K1Elt& b) { return a += b; }
K1Elt operator-(K1Elt a, const K1Elt& b) { return a -= b; }
K1Elt operator*(const Rational& s, K1Elt a) { return a *= s; }

QuotientContext::QuotientContext(std::size_t dim, std::size_t level) : dim_(dim), level_(level)
{
    if (dim < 1 || level < 2)
        throw InputError("build_context requires dim >= 1 and level >= 2");
    for (int u = 0; u < static_cast<int>(dim); ++u)
        for (int v = u + 1; v < static_cast<int>(dim); ++v)
            pairs_.emplace_back(u, v);
    const std::size_t np = pairs_.size();
    weights_.resize(level + 1);

    // delta of every monomial, as a tensor of degree w (kept for the Peiffer
    // generators of higher weights).
    std::vector<std::vector<TruncatedTensor>> mono_delta(level + 1);

    for (std::size_t w = 2; w <= level; ++w) {
        QuotientWeight& q = weights_[w];
        q.weight = static_cast<int>(w);
        const std::size_t nwords = ipow(dim, w - 2);
        q.monomials = nwords * np;

        mono_delta[w].reserve(q.monomials);
        for (std::size_t m = 0; m < q.monomials; ++m) {
            Word x = word_of_index(m / np, w - 2, dim);
            auto [u, v] = pairs_[m % np];
            TruncatedTensor t = commutator(TruncatedTensor::word(dim, w, {u}), TruncatedTensor::word(dim, w, {v}));
            for (std::size_t i = x.size(); i-- > 0;)
                t = commutator(TruncatedTensor::word(dim, w, {x[i]}), t);
            mono_delta[w].push_back(std::move(t));
        }

        // Peiffer generators delta(X) |> Y + delta(Y) |> X.
        auto add_action = [&](RatVector& out, const TruncatedTensor& dx, std::size_t y, std::size_t wy) {
            Word yw = word_of_index(y / np, wy - 2, dim);
            for (const auto& [u, c] : dx.terms) {
                Word full = u;
                full.insert(full.end(), yw.begin(), yw.end());
                out[index_of_word(full, dim) * np + y % np] += c;
            }
        };
        std::vector<RatVector> rows;
        for (std::size_t a = 2; a + 2 <= w; ++a) {
            std::size_t b = w - a;
            if (a > b)
                break;
            for (std::size_t x = 0; x < weights_[a].monomials; ++x)
                for (std::size_t y = 0; y < weights_[b].monomials; ++y) {
                    RatVector vec(q.monomials);
                    add_action(vec, mono_delta[a][x], y, b);
                    add_action(vec, mono_delta[b][y], x, a);
                    if (!vec.is_zero())
                        rows.push_back(std::move(vec));
                }
        }
        if (!rows.empty()) {
            RowEchelon e = rref(Matrix::from_rows(rows, q.monomials));
            q.peiffer = std::move(e.reduced);
            q.peiffer_pivots = std::move(e.pivots);
        } else {
            q.peiffer = Matrix(0, q.monomials);
        }
        q.coord_of.assign(q.monomials, -1);
        std::size_t pi = 0;
        for (std::size_t m = 0; m < q.monomials; ++m) {
            if (pi < q.peiffer_pivots.size() && q.peiffer_pivots[pi] == m) {
                ++pi;
                continue;
            }
            q.coord_of[m] = static_cast<long>(q.basis.size());
            q.basis.push_back(m);
        }

        const std::size_t tdim = ipow(dim, w);
        q.delta = Matrix(tdim, q.basis.size());
        for (std::size_t c = 0; c < q.basis.size(); ++c)
            for (const auto& [u, x] : mono_delta[w][q.basis[c]].terms)
                q.delta.at(index_of_word(u, dim), c) = x;

        std::map<MonomialKey, std::size_t> key_row;
        for (std::size_t m = 0; m < q.monomials; ++m) {
            auto [u, v] = pairs_[m % np];
            key_row.emplace(MonomialKey{counts(word_of_index(m / np, w - 2, dim), dim), {u, v}}, 0);
        }
        std::size_t r = 0;
        for (auto& [k, row] : key_row) {
            row = r++;
            q.rho_keys.push_back(k);
        }
        q.rho = Matrix(q.rho_keys.size(), q.basis.size());
        for (std::size_t c = 0; c < q.basis.size(); ++c) {
            std::size_t m = q.basis[c];
            auto [u, v] = pairs_[m % np];
            MonomialKey k{counts(word_of_index(m / np, w - 2, dim), dim), {u, v}};
            q.rho.at(key_row.at(k), c) = 1;
        }
    }

    for (std::size_t w = 2; w < level; ++w) {
        QuotientWeight& q = weights_[w];
        for (std::size_t i = 0; i < dim; ++i) {
            Matrix act(weights_[w + 1].basis.size(), q.basis.size());
            for (std::size_t c = 0; c < q.basis.size(); ++c) {
                std::size_t m = q.basis[c];
                std::size_t target = (i * ipow(dim, w - 2) + m / np) * np + m % np;
                RatVector amb(weights_[w + 1].monomials);
                amb[target] = 1;
                RatVector img = from_ambient(static_cast<int>(w + 1), amb).coords[w + 1];
                for (std::size_t r = 0; r < img.dim(); ++r)
                    act.at(r, c) = img[r];
            }
            q.act.push_back(std::move(act));
        }
    }
}

std::size_t QuotientContext::quotient_dim(int w) const { return slice(w).basis.size(); }

std::size_t QuotientContext::ker_delta_dim(int w) const
{
    const auto& q = slice(w);
    return q.basis.size() - rank(q.delta);
}

K1Elt QuotientContext::zero() const
{
    K1Elt a;
    a.dim = dim_;
    a.level = level_;
    a.coords.resize(level_ + 1);
    for (std::size_t w = 2; w <= level_; ++w)
        a.coords[w] = RatVector(weights_[w].basis.size());
    return a;
}

void QuotientContext::check(const K1Elt& a) const
{
    if (a.dim != dim_ || a.level != level_ || a.coords.size() != level_ + 1)
        throw InputError("K1 element belongs to a different context");
}

K1Elt QuotientContext::from_ambient(int w, const RatVector& ambient) const
{
    const auto& q = slice(w);
    RatVector v = ambient;
    for (std::size_t r = 0; r < q.peiffer_pivots.size(); ++r) {
        std::size_t p = q.peiffer_pivots[r];
        if (sgn(v[p]) == 0)
            continue;
        Rational f = v[p];
        for (std::size_t c = p; c < q.monomials; ++c)
            if (sgn(q.peiffer.at(r, c)) != 0)
                v[c] -= f * q.peiffer.at(r, c);
    }
    K1Elt a = zero();
    for (std::size_t c = 0; c < q.basis.size(); ++c)
        a.coords[static_cast<std::size_t>(w)][c] = v[q.basis[c]];
    return a;
}

K1Elt QuotientContext::monomial(const Word& x, int u, int v) const
{
    std::size_t w = x.size() + 2;
    if (u == v || w > level_)
        return zero();
    Rational s = 1;
    if (u > v) {
        std::swap(u, v);
        s = -1;
    }
    std::size_t p = 0;
    while (pairs_[p] != std::make_pair(u, v))
        ++p;
    RatVector amb(weights_[w].monomials);
    amb[index_of_word(x, dim_) * pairs_.size() + p] = s;
    return from_ambient(static_cast<int>(w), amb);
}

TruncatedTensor QuotientContext::delta(const K1Elt& a) const
{
    check(a);
    TruncatedTensor t(dim_, level_);
    for (std::size_t w = 2; w <= level_; ++w) {
        RatVector img = weights_[w].delta * a.coords[w];
        for (std::size_t i = 0; i < img.dim(); ++i)
            if (sgn(img[i]) != 0)
                t.add_term(word_of_index(i, w, dim_), img[i]);
    }
    return t;
}

K1Elt QuotientContext::act_generator(int i, const K1Elt& a) const
{
    check(a);
    K1Elt out = zero();
    for (std::size_t w = 2; w < level_; ++w)
        out.coords[w + 1] = weights_[w].act[static_cast<std::size_t>(i)] * a.coords[w];
    return out;
}

K1Elt QuotientContext::act_vector(const RatVector& v, const K1Elt& a) const
{
    K1Elt out = zero();
    for (std::size_t i = 0; i < dim_; ++i)
        if (sgn(v[i]) != 0)
            out += v[i] * act_generator(static_cast<int>(i), a);
    return out;
}

K1Elt QuotientContext::act(const TruncatedTensor& x, const K1Elt& a) const
{
    check(a);
    if (x.dim != dim_)
        throw InputError("act: dimension mismatch");
    K1Elt out = zero();
    for (const auto& [u, c] : x.terms) {
        K1Elt t = a;
        for (std::size_t i = u.size(); i-- > 0 && !t.is_zero();)
            t = act_generator(u[i], t);
        out += c * t;
    }
    return out;
}

K1Elt QuotientContext::bracket(const K1Elt& a, const K1Elt& b) const { return act(delta(a), b); }

PolyCurrent QuotientContext::rho(const K1Elt& a) const
{
    check(a);
    PolyCurrent c(dim_, 2, static_cast<int>(level_));
    for (std::size_t w = 2; w <= level_; ++w) {
        RatVector img = weights_[w].rho * a.coords[w];
        for (std::size_t r = 0; r < img.dim(); ++r)
            if (sgn(img[r]) != 0)
                c.add_term(weights_[w].rho_keys[r], img[r]);
    }
    return c;
}

K1Elt QuotientContext::B_basis(const HookIndex& h) const
{
    basis_gamma(dim_, h, static_cast<int>(level_) + 1); // validates the index data
    K1Elt b = act_generator(h.i, monomial({}, h.j, h.k));
    b -= act_generator(h.j, monomial({}, h.i, h.k));
    b += act_generator(h.k, monomial({}, h.i, h.j));
    for (std::size_t s = h.q.size(); s-- > 0;)
        b = act_generator(h.q[s], b);
    return b;
}

RatVector QuotientContext::tensor_slice(const TruncatedTensor& t, int w) const
{
    RatVector v(ipow(dim_, static_cast<std::size_t>(w)));
    for (const auto& [u, c] : t.terms)
        if (u.size() == static_cast<std::size_t>(w))
            v[index_of_word(u, dim_)] = c;
    return v;
}

void QuotientContext::check_lcs2(const TruncatedTensor& y) const
{
    if (y.dim != dim_)
        throw InputError("Lie element dimension mismatch");
    if (sgn(y.coeff({})) != 0 || !y.degree_part(1).is_zero() || !is_lie(y))
        throw InputError("element is not in LCS2 (needs zero degrees 0 and 1 and Lie)");
}

K1Elt QuotientContext::cone_c(const TruncatedTensor& y) const
{
    check_lcs2(y);
    K1Elt out = zero();
    for (std::size_t w = 2; w <= level_; ++w) {
        RatVector rhs = tensor_slice(y, static_cast<int>(w));
        if (rhs.is_zero())
            continue;
        const auto& q = weights_[w];
        // e(rho(A)) = 0 as extra equations, one row per grade-3 key.
        std::map<MonomialKey, std::size_t> rows;
        std::vector<PolyCurrent> cols;
        for (std::size_t c = 0; c < q.basis.size(); ++c) {
            K1Elt unit = zero();
            unit.coords[w][c] = 1;
            cols.push_back(e_op(rho(unit)));
            for (const auto& [k, x] : cols.back().terms)
                rows.emplace(k, 0);
        }
        std::size_t r = 0;
        for (auto& [k, idx] : rows)
            idx = r++;
        Matrix ker_e(rows.size(), q.basis.size());
        for (std::size_t c = 0; c < cols.size(); ++c)
            for (const auto& [k, x] : cols[c].terms)
                ker_e.at(rows.at(k), c) = x;
        Matrix m = q.delta.stacked(ker_e);
        RatVector b(m.rows());
        for (std::size_t i = 0; i < rhs.dim(); ++i)
            b[i] = rhs[i];
        auto sol = solve_linear(m, b);
        if (!sol)
            throw InputError("cone_c: element is not in the image of delta");
        if (rank(m) != q.basis.size())
            throw InternalError("cone_c: solution not unique");
        out.coords[w] = *sol;
    }
    return out;
}

std::pair<PolyCurrent, TruncatedTensor> QuotientContext::Psi(const K1Elt& a) const
{
    TruncatedTensor y = delta(a);
    return {rho(a - cone_c(y)), y};
}

K1Elt QuotientContext::Psi_inv(const PolyCurrent& gamma, const TruncatedTensor& y) const
{
    if (gamma.dim != dim_ || gamma.grade != 2)
        throw InputError("Psi_inv: expected a grade-2 current of matching dimension");
    K1Elt out = cone_c(y);
    for (std::size_t w = 2; w <= level_; ++w) {
        const auto& q = weights_[w];
        Matrix m = q.delta.stacked(q.rho);
        RatVector b(m.rows());
        for (std::size_t r = 0; r < q.rho_keys.size(); ++r)
            b[q.delta.rows() + r] = gamma.coeff(q.rho_keys[r]);
        auto sol = solve_linear(m, b);
        if (!sol)
            throw InputError("Psi_inv: gamma is not a closed current in the image of rho");
        out.coords[w] += *sol;
    }
    for (const auto& [k, c] : gamma.terms)
        if (k.weight() < 2 || static_cast<std::size_t>(k.weight()) > level_)
            throw InputError("Psi_inv: gamma has weights outside the context");
    return out;
}

PolyCurrent QuotientContext::suspension_s(const RatVector& v, const TruncatedTensor& y) const
{
    if (v.dim() != dim_)
        throw InputError("suspension_s: dimension mismatch");
    PolyCurrent base = rho(cone_c(y));
    base.max_weight = static_cast<int>(level_) + 1;
    return project_closed(multiply_vector(v, base));
}

PolyCurrent QuotientContext::suspension_via_action(const RatVector& v, const TruncatedTensor& y) const
{
    TruncatedTensor vt = TruncatedTensor::from_vector(v, level_);
    return rho(act_vector(v, cone_c(y)) - cone_c(commutator(vt, y)));
}

PolyCurrent QuotientContext::suspension_exponential(const RatVector& v, const TruncatedTensor& y, int max_weight) const
{
    if (max_weight > static_cast<int>(level_) + 1)
        throw InputError("suspension_exponential: max_weight exceeds level + 1");
    TruncatedTensor vt = TruncatedTensor::from_vector(v, level_);
    PolyCurrent total(dim_, 2, max_weight), gamma_n(dim_, 2, max_weight);
    TruncatedTensor y_n = y;
    Rational fact = 1;
    for (int n = 1; n <= max_weight; ++n) {
        PolyCurrent next = multiply_vector(v, gamma_n);
        PolyCurrent s = suspension_s(v, y_n);
        for (const auto& [k, c] : s.terms)
            next.add_term(k, c);
        gamma_n = std::move(next);
        y_n = commutator(vt, y_n);
        fact *= n;
        total += Rational(1 / fact) * gamma_n;
    }
    return total;
}

CurvatureComponent QuotientContext::abelianized_curvature_component(int r) const
{
    if (r < 3 || static_cast<std::size_t>(r) > level_)
        throw InputError("curvature component weight must lie in [3, level]");
    CurvatureComponent out;
    out.weight = r;
    out.basis = hook_indices(dim_, r);
    out.matrix = Matrix(out.basis.size(), out.basis.size());
    if (out.basis.empty()) {
        out.reproduces_forms = true;
        return out;
    }
    const std::size_t m = static_cast<std::size_t>(r - 3);
    const Rational inv_mfact = Rational(1) / Rational(factorial(static_cast<long>(m)));

    // Terms (1/m!) rho(e_{s1} |> ... |> e_{sm} |> B_ijk) (x) z_{s1}...z_{sm} dz_ijk.
    std::vector<std::pair<PolyCurrent, PolyForm>> terms;
    int d = static_cast<int>(dim_);
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j)
            for (int k = j + 1; k < d; ++k) {
                K1Elt b = B_basis({{}, i, j, k});
                for (std::size_t s = 0; s < ipow(dim_, m); ++s) {
                    Word seq = word_of_index(s, m, dim_);
                    K1Elt a = b;
                    for (std::size_t t = seq.size(); t-- > 0;)
                        a = act_generator(seq[t], a);
                    PolyForm f(dim_, 3);
                    f.add_term({counts(seq, dim_), {i, j, k}}, inv_mfact);
                    terms.emplace_back(rho(a), std::move(f));
                }
            }

    out.reproduces_forms = true;
    for (std::size_t p = 0; p < out.basis.size(); ++p) {
        PolyForm dw = exterior_d(basis_omega(dim_, out.basis[p]));
        PolyForm fp(dim_, 3);
        for (const auto& [cur, form] : terms) {
            Rational c = closed_pairing(cur, dw);
            if (sgn(c) == 0)
                continue;
            PolyForm scaled = form;
            scaled *= c;
            fp += scaled;
        }
        for (std::size_t p2 = 0; p2 < out.basis.size(); ++p2)
            out.matrix.at(p, p2) = pairing(basis_gamma(dim_, out.basis[p2], r), fp);
        if (!(fp == dw))
            out.reproduces_forms = false;
    }
    return out;
}

} // namespace plsurf
