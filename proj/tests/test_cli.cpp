#include "liealg/algebra_file.hpp"
#include "liealg/cli.hpp"
#include "liealg/hat_family.hpp"
#include "liealg/selfdual.hpp"

#include <catch2/catch_amalgamated.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <sstream>

using namespace liealg;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

nlohmann::json porcelain(std::vector<std::string> args, int expected_code = 0)
{
    args.insert(args.begin(), "--porcelain");
    Result r = run(args);
    INFO(r.err);
    CHECK(r.code == expected_code);
    return nlohmann::json::parse(r.out);
}

std::string golden(const std::string& name) { return std::string(LIEALG_GOLDEN_DIR) + "/" + name; }

fs::path scratch()
{
    fs::path p = fs::temp_directory_path() / "liealg_cli_test";
    fs::create_directories(p);
    return p;
}

const std::vector<std::string> kAlgebraFiles{"a3.json",      "a3_bad_grading.json", "a4_bad_metric.json",
                                             "a6.json",      "a6_perturbed.json",   "abelian1.json",
                                             "abelian3.json", "base2.json",         "base2_identity.json",
                                             "base3.json",   "nonabelian2.json",    "sl2.json",
                                             "so21.json"};

} // namespace

TEST_CASE("golden algebra files round-trip bit-exactly")
{
    for (const auto& name : kAlgebraFiles) {
        INFO(name);
        const std::string text = read_text_file(golden(name));
        const AlgebraFile f = parse_algebra_file(text);
        CHECK(serialize_algebra_file(f) == text);
        CHECK(parse_algebra_file(serialize_algebra_file(f)) == f);
    }
    for (const auto& name : {"action_oscillator.json", "action_zero.json", "action_a6.json"}) {
        const std::string text = read_text_file(golden(name));
        CHECK(serialize_action_file(parse_action_file(text)) == text);
    }
    const std::string form = read_text_file(golden("form_one.json"));
    CHECK(serialize_form_file(parse_form_file(form)) == form);
}

TEST_CASE("constructed algebras round-trip")
{
    for (std::size_t n = 0; n <= 12; ++n) {
        for (const auto& hat : {HatSpec::mod3_balanced(), HatSpec::identity()}) {
            AlgebraFile f{build_An(n, hat), std::nullopt};
            if (n % 3 == 0 && hat == HatSpec::mod3_balanced()) f.metric = canonical_metric(n, Scalar(FieldDesc{}, -7, 3));
            CHECK(parse_algebra_file(serialize_algebra_file(f)) == f);
        }
        AlgebraFile p{build_An(AnSpec(n, HatSpec::zmod(7))), std::nullopt};
        CHECK(parse_algebra_file(serialize_algebra_file(p)) == p);
    }
}

TEST_CASE("malformed files are rejected")
{
    for (const auto& name :
         {"bad_noncanonical.json", "bad_order.json", "bad_syntax.json", "bad_format.json", "bad_field.json"}) {
        INFO(name);
        CHECK_THROWS_AS(parse_algebra_file(read_text_file(golden(name))), MalformedInput);
        CHECK(run({"check", "jacobi", golden(name)}).code == cli::kMalformedInput);
        CHECK(run({"analyze", golden(name)}).code == cli::kMalformedInput);
    }
    const std::string base = R"({"format": "liealg-v1", "field": "Q", "dim": 2, "brackets": [)";
    for (const char* body : {R"({"i": 0, "j": 1, "terms": [{"k": 2, "c": "1"}]}]})",
                             R"({"i": 0, "j": 1, "terms": [{"k": 1, "c": "1"}]}, {"i": 0, "j": 1, "terms": []}]})",
                             R"({"i": 0, "j": 1, "terms": [{"k": 1, "c": 1}]}]})",
                             R"({"i": 0, "j": 1, "terms": [{"k": 1, "c": "1"}, {"k": 0, "c": "1"}]}]})",
                             R"({"i": -1, "j": 1, "terms": []}]})",
                             R"(], "extra": 1})",
                             R"(], "metric": [["0", "1"], ["2", "0"]]})",
                             R"(], "grading": [0]})"})
        CHECK_THROWS_AS(parse_algebra_file(base + body), MalformedInput);
    CHECK(parse_algebra_file(base + "]}").algebra.is_abelian());
    CHECK(run({"analyze", golden("missing.json")}).code == cli::kMalformedInput);
}

TEST_CASE("usage errors exit with 2")
{
    CHECK(run({}).code == cli::kUsage);
    CHECK(run({"frobnicate"}).code == cli::kUsage);
    CHECK(run({"gen", "--n", "3"}).code == cli::kUsage);
    CHECK(run({"gen", "--family", "bn", "--n", "3"}).code == cli::kUsage);
    CHECK(run({"gen", "--family", "an", "--n", "x"}).code == cli::kUsage);
    CHECK(run({"gen", "--family", "an", "--n", "3", "--hat", "mod4"}).code == cli::kUsage);
    CHECK(run({"gen", "--family", "an", "--n", "3", "--field", "F4"}).code == cli::kUsage);
    CHECK(run({"gen", "--family", "an", "--n", "3", "--hat", "zmod:5", "--field", "Q"}).code == cli::kUsage);
    CHECK(run({"gen", "--family", "an", "--n", "3", "--metric", "0"}).code == cli::kUsage);
    CHECK(run({"gen", "--family", "an", "--n", "3", "--metric", "b=2/4"}).code == cli::kUsage);
    CHECK(run({"check", "symmetry", golden("a3.json")}).code == cli::kUsage);
    CHECK(run({"classify"}).code == cli::kUsage);
    CHECK(run({"wigner", "--algebra", golden("so21.json"), "--subalgebra", "7", "-o", "x.json"}).code == cli::kUsage);
    CHECK(run({"--help"}).code == cli::kOk);
}

TEST_CASE("gen")
{
    const fs::path dir = scratch();
    const std::string a6 = (dir / "a6.json").string();
    auto doc = porcelain({"gen", "--family", "an", "--n", "6", "--hat", "mod3", "--metric", "b=0", "-o", a6});
    CHECK(doc["records"] == 9);
    CHECK(read_text_file(a6) == read_text_file(golden("a6.json")));
    const AlgebraFile f = parse_algebra_file(read_text_file(a6));
    CHECK(f.metric == canonical_metric(6));

    Result r0 = run({"gen", "--family", "an", "--n", "0"});
    CHECK(r0.code == 0);
    const AlgebraFile f0 = parse_algebra_file(r0.out);
    CHECK(f0.algebra.dim() == 1);
    CHECK(f0.algebra.is_abelian());

    Result r4 = run({"gen", "--family", "an", "--n", "4", "--metric", "b=0"});
    CHECK(r4.code == cli::kPropertyFails);
    CHECK(r4.out.find("exists iff n mod 3 = 0") != std::string::npos);

    Result z = run({"gen", "--family", "an", "--n", "5", "--hat", "zmod:7"});
    CHECK(z.code == 0);
    CHECK(parse_algebra_file(z.out).algebra.field() == FieldDesc::prime(7));
    CHECK(run({"gen", "--family", "an", "--n", "5", "--hat", "identity", "--field", "F11"}).code == cli::kUsage);
    CHECK(run({"gen", "--family", "an", "--n", "5", "--hat", "identity", "--field", "Q"}).code == 0);
    CHECK(run({"gen", "--family", "an", "--n", "3", "--metric", "b=-7/3"}).code == 0);
}

TEST_CASE("check")
{
    CHECK(porcelain({"check", "jacobi", golden("a6.json")})["jacobi"] == true);
    CHECK(porcelain({"check", "invariance", golden("a6.json")})["invariant"] == true);
    CHECK(porcelain({"check", "grading", golden("a6.json")})["graded"] == true);

    auto bad = porcelain({"check", "jacobi", golden("a6_perturbed.json")}, cli::kPropertyFails);
    CHECK(bad["witness"]["i"] == 0);
    CHECK(bad["witness"]["j"] == 1);
    CHECK(bad["witness"]["k"] == 2);
    CHECK(bad["witness"]["defect"] == nlohmann::json({"0", "0", "0", "-2", "0", "0", "0"}));
    Result human = run({"check", "jacobi", golden("a6_perturbed.json")});
    CHECK(human.out.find("(0, 1, 2)") != std::string::npos);
    CHECK(human.out.find("-2*T3") != std::string::npos);

    CHECK(porcelain({"check", "invariance", golden("a4_bad_metric.json")}, cli::kPropertyFails)["invariant"] == false);
    auto g = porcelain({"check", "grading", golden("a3_bad_grading.json")}, cli::kPropertyFails);
    CHECK(g["witness"] == nlohmann::json({{"i", 1}, {"j", 2}, {"k", 3}}));
    CHECK(run({"check", "invariance", golden("abelian3.json")}).code == cli::kMalformedInput);
    CHECK(run({"check", "grading", golden("so21.json")}).code == cli::kMalformedInput);
}

TEST_CASE("ideals")
{
    CHECK(porcelain({"ideals", golden("a6.json")})["count"] == 10);
    CHECK(porcelain({"ideals", golden("a3.json")})["count"] == 6);
    CHECK(porcelain({"ideals", golden("abelian3.json")})["count"] == 8);
    auto c = porcelain({"ideals", golden("a6.json"), "--classify-an"});
    CHECK(c["classification"]["skip"] == nlohmann::json({3, 6}));
    CHECK(c["classification"]["cross_checked"] == true);
    CHECK(c["ideals"][2] == nlohmann::json({4, 6}));
    CHECK(run({"ideals", golden("so21.json"), "--classify-an"}).code == cli::kPropertyFails);
}

TEST_CASE("brute-force cap from the environment")
{
    ::setenv("LIEALG_BRUTE_CAP", "64", 1);
    Result capped = run({"ideals", golden("a6.json")});
    auto skipped = porcelain({"ideals", golden("a6.json"), "--classify-an"});
    Result junk = (::setenv("LIEALG_BRUTE_CAP", "lots", 1), run({"ideals", golden("a6.json")}));
    ::unsetenv("LIEALG_BRUTE_CAP");
    CHECK(capped.code == cli::kPropertyFails);
    CHECK(skipped["count"].is_null());
    CHECK(skipped["classification"]["cross_checked"] == false);
    CHECK(junk.code == cli::kUsage);
}

TEST_CASE("analyze")
{
    auto a6 = porcelain({"analyze", golden("a6.json")});
    CHECK(a6["solvable"] == true);
    CHECK(a6["nilpotent"] == false);
    CHECK(a6["center_dim"] == 1);
    CHECK(a6["killing"][0][0] == "4");
    std::size_t nonzero = 0;
    for (const auto& row : a6["killing"])
        for (const auto& e : row) nonzero += e != "0";
    CHECK(nonzero == 1);
    CHECK(a6["self_dual"]["status"] == "yes");

    auto ab = porcelain({"analyze", golden("abelian3.json")});
    CHECK(ab["solvable"] == true);
    CHECK(ab["nilpotent"] == true);
    for (const auto& row : ab["killing"])
        for (const auto& e : row) CHECK(e == "0");

    auto r = porcelain({"analyze", golden("nonabelian2.json")});
    CHECK(r["self_dual"]["status"] == "no");
    CHECK(r["self_dual"].contains("certificate"));

    CHECK(run({"analyze", golden("a6_perturbed.json")}).code == cli::kPropertyFails);
}

TEST_CASE("classify")
{
    auto c3 = porcelain({"classify", "--family", "an", "--n", "3"});
    CHECK(c3["verdict"] == "WignerObtainable");
    CHECK(c3["candidates"] == nlohmann::json({1, 2}));
    CHECK(c3["decomposable"] == false);
    auto c6 = porcelain({"classify", "--family", "an", "--n", "6"});
    CHECK(c6["verdict"] == "AbelianDoubleExtensionOnly");
    CHECK(c6["candidates"] == nlohmann::json({2}));
    auto c9 = porcelain({"classify", "--family", "an", "--n", "9"});
    CHECK(c9["verdict"] == "Deeper");
    CHECK(c9["candidates"] == nlohmann::json::array());
    CHECK(porcelain({"classify", golden("a6.json")})["verdict"] == "AbelianDoubleExtensionOnly");
    CHECK(porcelain({"classify", "--family", "an", "--n", "0"})["verdict"].is_null());
    CHECK(run({"classify", "--family", "an", "--n", "4"}).code == cli::kPropertyFails);
    CHECK(run({"classify", golden("nonabelian2.json")}).code == cli::kPropertyFails);
    CHECK(porcelain({"classify", golden("so21.json")})["decomposable"] == false);
    CHECK(run({"classify", golden("a3.json"), "--n", "3"}).code == cli::kUsage);
}

TEST_CASE("dext")
{
    const fs::path dir = scratch();
    const std::string out = (dir / "d.json").string();
    auto d = porcelain({"dext", "--base", golden("base2.json"), "--by", golden("abelian1.json"), "--action",
                        golden("action_oscillator.json"), "-o", out});
    CHECK(d["dim"] == 4);
    CHECK(d["decomposable"] == false);
    const AlgebraFile f = parse_algebra_file(read_text_file(out));
    REQUIRE(f.metric);
    CHECK(is_invariant(f.algebra, *f.metric));
    CHECK(invariant_profile(f.algebra) == invariant_profile(build_An(3)));

    auto z = porcelain({"dext", "--base", golden("base2_identity.json"), "--by", golden("abelian1.json"), "--action",
                        golden("action_zero.json"), "-o", out});
    CHECK(z["decomposable"] == true);

    auto six = porcelain({"dext", "--base", golden("base3.json"), "--by", golden("nonabelian2.json"), "--action",
                          golden("action_a6.json"), "-o", out});
    CHECK(six["dim"] == 7);
    CHECK(invariant_profile(parse_algebra_file(read_text_file(out)).algebra) == invariant_profile(build_An(6)));

    CHECK(porcelain({"dext", "--base", golden("base2.json"), "--by", golden("abelian1.json"), "--action",
                     golden("action_oscillator.json"), "--F", golden("form_one.json"), "-o", out})["dim"] == 4);

    CHECK(run({"dext", "--base", golden("base2.json"), "--by", golden("abelian1.json"), "--action",
               golden("action_not_skew.json"), "-o", out})
              .code == cli::kPropertyFails);
    CHECK(run({"dext", "--base", golden("a3.json"), "--by", golden("abelian1.json"), "--action",
               golden("action_oscillator.json"), "-o", out})
              .code == cli::kPropertyFails);
    CHECK(run({"dext", "--base", golden("base3.json"), "--by", golden("abelian1.json"), "--action",
               golden("action_oscillator.json"), "-o", out})
              .code == cli::kMalformedInput);
    CHECK(run({"dext", "--base", golden("abelian3.json"), "--by", golden("abelian1.json"), "--action",
               golden("action_oscillator.json"), "-o", out})
              .code == cli::kMalformedInput);
}

TEST_CASE("wigner")
{
    const fs::path dir = scratch();
    const std::string out = (dir / "w.json").string();
    auto w = porcelain({"wigner", "--algebra", golden("so21.json"), "--subalgebra", "0", "-o", out});
    CHECK(w["dim"] == 4);
    auto a3 = porcelain({"analyze", golden("a3.json")});
    auto wa = porcelain({"analyze", out});
    for (const char* key : {"dim", "derived_dims", "lower_central_dims", "center_dim", "solvable", "nilpotent"})
        CHECK(wa[key] == a3[key]);
    CHECK(wa["self_dual"]["status"] == a3["self_dual"]["status"]);

    Result deg = run({"wigner", "--algebra", golden("sl2.json"), "--subalgebra", "1", "-o", out});
    CHECK(deg.code == cli::kPropertyFails);
    CHECK(deg.err.find("restriction of the metric") != std::string::npos);
    CHECK(deg.err.find("non-degenerate") != std::string::npos);
    CHECK(run({"wigner", "--algebra", golden("sl2.json"), "--subalgebra", "1,2", "-o", out}).code ==
          cli::kPropertyFails);
    CHECK(run({"wigner", "--algebra", golden("a3.json"), "--subalgebra", "0", "-o", out}).code ==
          cli::kPropertyFails);
    CHECK(run({"wigner", "--algebra", golden("abelian3.json"), "--subalgebra", "0", "-o", out}).code ==
          cli::kMalformedInput);
}

TEST_CASE("json report file matches porcelain output")
{
    const fs::path dir = scratch();
    const std::string report = (dir / "report.json").string();
    Result human = run({"analyze", golden("a3.json"), "--json", report});
    CHECK(human.code == 0);
    CHECK(human.out.find("derived series dims: 4 3 1 0") != std::string::npos);
    Result machine = run({"--porcelain", "analyze", golden("a3.json")});
    CHECK(read_text_file(report) == machine.out);
    // no timestamps or other run-dependent content
    CHECK(run({"--porcelain", "analyze", golden("a3.json")}).out == machine.out);
}

TEST_CASE("exit-code contract on every golden algebra file")
{
    for (const auto& name : kAlgebraFiles) {
        INFO(name);
        const std::string path = golden(name);
        const AlgebraFile f = parse_algebra_file(read_text_file(path));
        const bool jacobi = !check_jacobi(f.algebra).has_value();
        CHECK(run({"check", "jacobi", path}).code == (jacobi ? 0 : 1));
        if (f.metric) {
            const bool ok = is_invariant(f.algebra, *f.metric) && f.metric->is_nondegenerate();
            CHECK(run({"check", "invariance", path}).code == (ok ? 0 : 1));
        } else {
            CHECK(run({"check", "invariance", path}).code == 3);
        }
        if (f.algebra.grading())
            CHECK(run({"check", "grading", path}).code == (check_grading(f.algebra, *f.algebra.grading()) ? 0 : 1));
        else
            CHECK(run({"check", "grading", path}).code == 3);
        CHECK(run({"ideals", path}).code == 0);
        CHECK(run({"analyze", path}).code == (jacobi ? 0 : 1));
    }
}
