#include "helpers.hpp"

#include <json.hpp>

using namespace decarg;
using testing::error_of;

namespace {

std::string message_of(const std::string& text) {
    try {
        parse_problem_text(text);
    } catch (const Error& e) {
        return e.what();
    }
    FAIL("expected a parse error");
    return {};
}

}  // namespace

TEST_SUITE("io") {
    TEST_CASE("fixtures survive a serialize and parse round trip") {
        for (const char* name : {"london_adf.json", "two_decision_adf.json", "clean_adf.json", "quiet_pdf.json",
                                 "d1d2_pdf.json", "investment_dg.json", "investment_strict_dg.json",
                                 "investment_pdg.json", "anode_dg.json", "anode3_dg.json", "anode3_pdg.json"}) {
            CAPTURE(name);
            auto p = testing::fixture(name);
            auto text = serialize_problem(p);
            auto again = parse_problem_text(text);
            CHECK(again == p);
            CHECK(serialize_problem(again) == text);
        }
    }

    TEST_CASE("kinds") {
        CHECK(std::string(problem_kind(testing::fixture("london_adf.json"))) == "adf");
        CHECK(std::string(problem_kind(testing::fixture("quiet_pdf.json"))) == "pdf");
        CHECK(std::string(problem_kind(testing::fixture("investment_dg.json"))) == "dg");
        auto pdg = testing::fixture_as<Pdg>("investment_pdg.json");
        CHECK(std::string(problem_kind(Problem{pdg})) == "pdg");
        CHECK(pdg.preference().stated().size() == 1);
    }

    TEST_CASE("schema errors") {
        CHECK(error_of([] { parse_problem_text(R"({"kind": "tree"})"); }) == ErrorCode::SchemaError);
        CHECK(error_of([] { parse_problem_text("{"); }) == ErrorCode::SchemaError);
        CHECK(error_of([] { parse_problem_text("[]"); }) == ErrorCode::SchemaError);
        auto msg = message_of("{\n  \"kind\": \"adf\",\n  \"decisions\": [\"d\"],\n  \"goals\": [\"g\"],\n"
                              "  \"gamma\": {\"d\": []},\n  \"colour\": 1\n}");
        CHECK(msg.find("colour") != std::string::npos);
        CHECK(msg.find("line 6") != std::string::npos);
        CHECK(error_of([] {
                  parse_problem_text(R"({"kind":"adf","decisions":["d"],"goals":["g"],"gamma":{"d":["h"]}})");
              }) == ErrorCode::UnknownGoalInGamma);
        CHECK(error_of([] { parse_problem("/nonexistent/problem.json"); }) == ErrorCode::IoError);
    }

    TEST_CASE("flat explanations as JSON") {
        auto adf = testing::fixture_as<Adf>("london_adf.json");
        auto j = nlohmann::json::parse(flat_to_json(flat_explain(adf, "jh", Criterion::StronglyDominant)));
        CHECK(j["kind"] == "SDNeg");
        CHECK(j["positive"] == false);
        CHECK(j["goals"] == nlohmann::json::array({"cheap"}));
        auto d = nlohmann::json::parse(flat_to_json(
            flat_explain(testing::fixture_as<Adf>("two_decision_adf.json"), "ritz", Criterion::Dominant)));
        CHECK(d["pairs"][0]["decision"] == "jh");
        CHECK(d["pairs"][0]["goal"] == "near");
    }

    TEST_CASE("dispatch") {
        auto london = testing::fixture("london_adf.json");
        CHECK(decide(london, Criterion::StronglyDominant) == std::vector<Id>{"ic"});
        CHECK(error_of([&] { decide(london, Criterion::PreferredSet); }) == ErrorCode::CriterionMismatch);
        CHECK(decide(testing::fixture("investment_dg.json"), Criterion::WeaklyDominant) ==
              std::vector<Id>{"ic", "ritz"});
        CHECK(decide(testing::fixture("investment_pdg.json"), Criterion::PreferredSet) == std::vector<Id>{"ritz"});
        CHECK(error_of([&] { flat_explain(london, "nobody", Criterion::Dominant); }) == ErrorCode::UnknownDecision);
        CHECK(problem_decisions(testing::fixture("quiet_pdf.json")).size() == 2);
    }
}
