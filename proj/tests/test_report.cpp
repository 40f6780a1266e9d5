#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "helpers.hpp"

using namespace qpftest;
using ojson = nlohmann::ordered_json;

namespace {

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Report analyze_file(const std::filesystem::path& p) {
    std::string text = slurp(p);
    return analyze(parse_document(text), text);
}

std::filesystem::path corpus(const char* name) {
    return std::filesystem::path(QPF_CORPUS_DIR) / name;
}

}  // namespace

TEST_SUITE("report") {

TEST_CASE("reports are byte-identical across runs") {
    for (const char* name : {"exterior.alg", "cyclic_3_2.alg", "two_cycle_z2.alg",
                             "kronecker.alg", "exterior_gf2.alg"}) {
        Report r1 = analyze_file(corpus(name));
        Report r2 = analyze_file(corpus(name));
        CHECK(r1.json == r2.json);
        CHECK(r1.text == r2.text);
    }
}

TEST_CASE("exterior report carries the expected verdicts") {
    Report r = analyze_file(corpus("exterior.alg"));
    ojson j = ojson::parse(r.json);
    CHECK(j["algebra"]["dimension"] == 4);
    CHECK(j["radical"]["dimension"] == 3);
    CHECK(j["radical"]["criterion_agrees"] == true);
    CHECK(j["classification"]["split"] == true);
    CHECK(j["pf"]["is_pf"] == true);
    CHECK(j["pf"]["nu"]["e"] == "e");
    CHECK(j["nakayama_automorphism"]["arrow_images"]["y"] == "-1*y");
    CHECK(j["nakayama_automorphism"]["arrow_images"]["z"] == "-1*z");
    CHECK(j["constant_degree"]["passed"] == true);
    CHECK(j["constant_degree"]["value"] == 2);
    std::string digest = j["form"]["digest"].get<std::string>();
    CHECK(digest.size() == 16);
}

TEST_CASE("kronecker report is not PF and skips the form") {
    Report r = analyze_file(corpus("kronecker.alg"));
    ojson j = ojson::parse(r.json);
    CHECK(j["pf"]["is_pf"] == false);
    REQUIRE(j["pf"]["witnesses"].size() >= 1);
    CHECK(j["form"].contains("skipped"));
}

TEST_CASE("transfer section on the covering corpus") {
    Report r = analyze_file(corpus("cyclic_6_2_z3.alg"));
    ojson j = ojson::parse(r.json);
    CHECK(j["covering"]["group_order"] == 3);
    CHECK(j["covering"]["skew_dimension"] == 36);
    CHECK(j["covering"]["skew_radical_is_JG"] == true);
    CHECK(j["covering"]["covering_ok"] == true);
    CHECK(j["covering"]["pf_flags_agree"] == true);
    CHECK(j["covering"]["eta_commutes_with_action"] == true);
    CHECK(j["covering"]["eta_descends"] == true);

    Report neg = analyze_file(corpus("kronecker_double_z2.alg"));
    ojson jn = ojson::parse(neg.json);
    CHECK(jn["covering"]["a_is_pf"] == false);
    CHECK(jn["covering"]["orbit_is_pf"] == false);
    CHECK(jn["covering"]["pf_flags_agree"] == true);
}

TEST_CASE("form digest is reproducible from a re-analysis") {
    std::string text = slurp(corpus("cyclic_3_2.alg"));
    Report r1 = analyze(parse_document(text), text);
    ojson j1 = ojson::parse(r1.json);
    std::string input_back = j1["input"].get<std::string>();
    Report r2 = analyze(parse_document(input_back), input_back);
    ojson j2 = ojson::parse(r2.json);
    CHECK(j1["form"]["digest"] == j2["form"]["digest"]);
}

TEST_CASE("the whole corpus analyzes without errors") {
    int count = 0;
    for (const auto& e : std::filesystem::directory_iterator(QPF_CORPUS_DIR)) {
        if (e.path().extension() != ".alg") continue;
        ++count;
        CHECK_NOTHROW(analyze_file(e.path()));
    }
    CHECK(count == 14);
}

TEST_CASE("pf stage is reported as skipped when not weakly basic") {
    std::string text =
        "field Q\ngrading 0\nvertex 1\narrow x : 1 -> 1\nrelation x.x.x - x.x\n";
    Report r = analyze(parse_document(text), text);
    ojson j = ojson::parse(r.json);
    CHECK(j["pf"].contains("skipped"));
    CHECK(j["classification"]["weakly_basic"] == false);
}

}  // TEST_SUITE
