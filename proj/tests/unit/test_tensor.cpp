#include "plsurf/tensor.hpp"

#include "helpers.hpp"

#include <doctest.h>

using namespace plsurf;
using testing::r;
using testing::vec;

namespace {

// v^{(x)k}/k! computed coordinate by coordinate.
Rational segment_coeff(const RatVector& v, const Word& w)
{
    Rational c = 1;
    for (std::size_t i = 0; i < w.size(); ++i)
        c *= v[static_cast<std::size_t>(w[i])] / Rational(static_cast<long>(i + 1));
    return c;
}

} // namespace

TEST_CASE("segment exponential matches v^k/k!")
{
    RatVector v = vec({2, -1, 3});
    TruncatedTensor e = exp_segment(v, 4);
    CHECK(e.coeff({}) == 1);
    for (Word w : {Word{0}, Word{1, 2}, Word{2, 2, 0}, Word{0, 1, 2, 1}})
        CHECK(e.coeff(w) == segment_coeff(v, w));
    CHECK(e.max_degree() == 4);
}

TEST_CASE("unit segment signature at level 2")
{
    PLWord w(2, {vec({1, 0})});
    TruncatedTensor s = path_signature(w, 2);
    CHECK(s.terms.size() == 3);
    CHECK(s.coeff({0}) == 1);
    CHECK(s.coeff({0, 0}) == r(1, 2));
    CHECK(path_signature(PLWord(2), 3) == TruncatedTensor::one(2, 3));
}

TEST_CASE("square loop: antisymmetric part is twice the signed area")
{
    PLWord sq(2, {vec({1, 0}), vec({0, 1}), vec({-1, 0}), vec({0, -1})});
    TruncatedTensor s = path_signature(sq, 2);
    CHECK(s.coeff({0}) == 0);
    CHECK(s.coeff({0, 1}) + s.coeff({1, 0}) == 0);
    CHECK(s.coeff({0, 1}) - s.coeff({1, 0}) == 2);
}

TEST_CASE("Chen identity, inverses and thin invariance")
{
    std::mt19937_64 rng(11);
    for (int n = 0; n < 30; ++n) {
        PLWord a = testing::random_word(rng, 3, 5);
        PLWord b = testing::random_word(rng, 3, 5);
        TruncatedTensor sa = path_signature(a, 4), sb = path_signature(b, 4);
        CHECK(path_signature(concat_raw(a, b), 4) == mul(sa, sb));
        CHECK(path_signature(inverse(a), 4) == tensor_inverse(sa));
        CHECK(path_signature(reduce(a), 4) == sa);
    }
}

TEST_CASE("log of a signature is Lie and exp inverts it")
{
    std::mt19937_64 rng(5);
    for (int n = 0; n < 10; ++n) {
        PLWord a = testing::random_word(rng, 3, 4);
        TruncatedTensor s = path_signature(a, 4);
        TruncatedTensor l = log(s);
        CHECK(is_lie(l));
        CHECK(tensor_exp(l) == s);
    }
    TruncatedTensor x = TruncatedTensor::word(2, 3, {0, 1});
    CHECK_FALSE(is_lie(x));
}

TEST_CASE("Dynkin map scales homogeneous Lie elements by their degree")
{
    auto e = [](int i) { return TruncatedTensor::word(3, 4, {i}); };
    TruncatedTensor y = commutator(e(0), commutator(e(1), e(2)));
    CHECK(dynkin_map(y) == r(3) * y);
    TruncatedTensor z = commutator(commutator(e(0), e(1)), commutator(e(0), e(2)));
    CHECK(dynkin_map(z) == r(4) * z);
}
