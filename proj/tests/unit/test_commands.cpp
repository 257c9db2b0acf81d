#include "plsurf/commands.hpp"

#include "plsurf/documents.hpp"

#include <doctest.h>

using namespace plsurf;

TEST_CASE("path-reduce")
{
    CommandResult r = cmd_path_reduce(R"({"dim":2,"word":[["1/1","0/1"],["-1/1","0/1"]]})");
    CHECK(r.exit_code == 0);
    Json out = parse_json_text(r.out);
    CHECK(out["dim"] == 2);
    CHECK(out["word"] == Json::array());
    CHECK(cmd_path_reduce(r.out).out == r.out);

    CommandResult bad = cmd_path_reduce(R"({"dim":2,"word":[["1/0","0/1"]]})");
    CHECK(bad.exit_code == kExitInput);
    CHECK(bad.out.empty());
    CHECK(bad.err.find("error:") == 0);
    CHECK(cmd_path_reduce("not json").exit_code == kExitInput);
}

TEST_CASE("path-sig")
{
    Json empty = parse_json_text(cmd_path_sig(R"({"dim":2,"word":[]})", 3).out);
    CHECK(empty["signature"] == Json{{"", "1/1"}});
    Json seg = parse_json_text(cmd_path_sig(R"({"dim":2,"word":[["1","0"]]})", 2).out);
    CHECK(seg["signature"] == Json{{"", "1/1"}, {"1", "1/1"}, {"11", "1/2"}});
    CHECK(seg["level"] == 2);
    CHECK(cmd_path_sig(R"({"dim":2,"word":[]})", 0).exit_code == kExitInput);
}

TEST_CASE("surface-sig of the tetrahedron")
{
    std::string tet = cmd_gen_example("tetrahedron").out;
    CommandResult r = cmd_surface_sig(tet, 3, 3, {});
    REQUIRE(r.exit_code == 0);
    Json out = parse_json_text(r.out);
    std::string v = out["gamma"]["α=(1,0,0);(2,3)"];
    CHECK((v == "1/6" || v == "-1/6"));
    CHECK(out["boundary"] == Json{{"", "1/1"}});
}

TEST_CASE("thin-equiv exit codes")
{
    CHECK(cmd_thin_equiv(cmd_gen_example("fold").out, std::nullopt, 2, 3, {}).exit_code == kExitOk);
    CHECK(cmd_thin_equiv(cmd_gen_example("antipodal").out, std::nullopt, 2, 3, {}).exit_code == kExitOk);
    CommandResult t = cmd_thin_equiv(cmd_gen_example("tetrahedron").out, std::nullopt, 2, 3, {});
    CHECK(t.exit_code == kExitNotEqual);
    Json rep = parse_json_text(t.out);
    CHECK(rep["verdict"] == "not_equal");
    CHECK(rep["witness"]["kind"] == "face");

    std::string fold = cmd_gen_example("fold").out;
    std::string peiffer = cmd_gen_example("peiffer").out;
    CHECK(cmd_thin_equiv(fold, peiffer, 2, 3, {}).exit_code == kExitOk);
    CHECK(cmd_thin_equiv(fold, R"({"dim":2,"kites":[]})", 2, 3, {}).exit_code == kExitInput);
    CHECK(cmd_thin_equiv("[]", std::nullopt, 2, 3, {}).exit_code == kExitInput);
}

TEST_CASE("triangulate accepts both input kinds")
{
    CommandResult a = cmd_triangulate(
        R"({"dim":2,"edges":[[["0","0"],["2","2"]]],"polygons":[[["0","2"],["2","0"],["2","2"]]]})", {});
    REQUIRE(a.exit_code == 0);
    Json ca = parse_json_text(a.out);
    CHECK(ca["format"] == "plsc");
    CHECK(ca["compatible"] == true);

    CommandResult b = cmd_triangulate(cmd_gen_example("peiffer").out, {});
    REQUIRE(b.exit_code == 0);
    CHECK(parse_json_text(b.out)["compatible"] == true);
}

TEST_CASE("gen-example")
{
    for (const auto& name : {"fold", "peiffer", "tetrahedron", "antipodal", "random_null(1)", "random_nonnull(1)"}) {
        CommandResult r = cmd_gen_example(name);
        CHECK(r.exit_code == 0);
        CHECK(parse_json_text(r.out)["format"] == "kite-word");
    }
    CHECK(cmd_gen_example("nope").exit_code == kExitInput);
}

TEST_CASE("selfcheck suites at reduced size")
{
    CHECK(check_dual_basis(3, 4, {}).passed);
    CHECK(check_curvature_identity(3, 4).passed);
    CHECK(check_peiffer_axioms(3, 4, 5, 1).passed);
    SelfcheckOptions opt;
    opt.dual_weight = 4;
    opt.level = 4;
    opt.samples = 3;
    CommandResult r = cmd_selfcheck(opt, {});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
}
