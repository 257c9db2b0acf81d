#include "plsurf/documents.hpp"

#include "helpers.hpp"

#include <doctest.h>

using namespace plsurf;
using testing::r;
using testing::vec;

TEST_CASE("word keys")
{
    CHECK(word_key({0, 1, 1}, 3) == "122");
    CHECK(word_key({}, 3) == "");
    CHECK(word_key({9, 0}, 12) == "10,1");
    CHECK(parse_word_key("10,1", 12) == Word{9, 0});
    CHECK_THROWS_AS(parse_word_key("4", 3), InputError);
}

TEST_CASE("headers are checked")
{
    CHECK_NOTHROW(parse_path_document(parse_json_text(R"({"dim":2,"word":[]})")));
    CHECK_THROWS_AS(parse_path_document(parse_json_text(R"({"dim":2,"format":"plsc","word":[]})")), InputError);
    CHECK_THROWS_AS(parse_path_document(parse_json_text(R"({"dim":2,"version":7,"word":[]})")), InputError);
    CHECK_THROWS_AS(parse_path_document(parse_json_text(R"({"word":[]})")), InputError);
    CHECK_THROWS_AS(parse_path_document(parse_json_text(R"({"dim":2,"word":[["1/0","0"]]})")), InputError);
    CHECK_THROWS_AS(parse_json_text("{"), InputError);
}

TEST_CASE("documents round-trip on random canonical data")
{
    std::mt19937_64 rng(31);
    for (int n = 0; n < 25; ++n) {
        PLWord w = testing::random_word(rng, 3, 6);
        Json pd = path_document(w);
        CHECK(path_document(parse_path_document(pd)) == pd);
        CHECK(parse_json_text(dump_document(pd)) == pd);

        KiteWord x = random_kite_word(rng, 3, 3);
        Json kd = kite_word_document(x);
        CHECK(kite_word_document(parse_kite_word_document(kd)) == kd);

        SurfaceSignature s = surface_signature(x, 3, 4);
        Json sd = surface_signature_document(s);
        CHECK(surface_signature_document(parse_surface_signature_document(sd)) == sd);

        Json gd = signature_document(s.boundary);
        CHECK(signature_document(parse_signature_document(gd)) == gd);
    }
    PLSC c = make_plsc(2, {}, {Triangle{vec({0, 0}), vec({1, 0}), vec({0, 1})}});
    Json cd = plsc_document(c, true);
    CHECK(plsc_document(parse_plsc_document(cd), true) == cd);
}

TEST_CASE("serialization is compact and key-sorted")
{
    PLWord w(2, {vec({1, 0})});
    CHECK(dump_document(path_document(w)) == "{\"dim\":2,\"format\":\"path\",\"version\":1,\"word\":[[\"1/1\",\"0/1\"]]}\n");
}
