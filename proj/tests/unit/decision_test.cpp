#include "helpers.hpp"

#include "decarg/decision.hpp"

using namespace decarg;
using testing::error_of;

namespace {

const auto SD = Criterion::StronglyDominant;
const auto D = Criterion::Dominant;
const auto WD = Criterion::WeaklyDominant;

Adf london() { return testing::fixture_as<Adf>("london_adf.json"); }

}  // namespace

TEST_SUITE("decision-core") {
    TEST_CASE("validation rejects malformed frameworks") {
        CHECK_NOTHROW(london());
        CHECK(error_of([] { Adf::validate({}, {"g"}, {}); }) == ErrorCode::EmptyDecisions);
        CHECK(error_of([] { Adf::validate({"d"}, {}, {}); }) == ErrorCode::EmptyGoals);
        CHECK(error_of([] { Adf::validate({"d"}, {"g"}, {{"d", {"h"}}}); }) == ErrorCode::UnknownGoalInGamma);
        CHECK(error_of([] { Adf::validate({"d", "d"}, {"g"}, {}); }) == ErrorCode::DuplicateId);
        CHECK(error_of([] { Adf::validate({"x"}, {"x"}, {}); }) == ErrorCode::DuplicateId);
        CHECK(error_of([] { Adf::validate({"d(1)"}, {"g"}, {}); }) == ErrorCode::InvalidIdentifier);
        CHECK(error_of([] { Adf::validate({"d"}, {"g"}, {{"e", {}}}); }) == ErrorCode::UnknownDecision);
    }

    TEST_CASE("criteria on the worked examples") {
        CHECK(evaluate(london(), SD) == std::vector<Id>{"ic"});
        CHECK(evaluate(testing::fixture_as<Adf>("two_decision_adf.json"), D) == std::vector<Id>{"jh"});
        CHECK(evaluate(testing::fixture_as<Adf>("clean_adf.json"), WD) == std::vector<Id>{"jh", "ic"});
        CHECK(evaluate(testing::fixture_as<Adf>("clean_adf.json"), D).empty());
    }

    TEST_CASE("results follow declaration order") {
        auto adf = Adf::validate({"z", "a", "m"}, {"g"}, {{"z", {"g"}}, {"a", {"g"}}, {"m", {"g"}}});
        CHECK(evaluate(adf, SD) == std::vector<Id>{"z", "a", "m"});
    }

    TEST_CASE("goal set names") {
        CHECK(goal_set_name({}) == "[]");
        CHECK(goal_set_name({"near", "cheap"}) == "[cheap+near]");
    }

    TEST_CASE("preference validation and closure") {
        GoalSet u{"a", "b", "c"};
        auto p = GoalSetPreference::from_pairs({{{"a"}, {"b"}}, {{"b"}, {"c"}}}, u);
        CHECK(p.strictly_preferred({"a"}, {"c"}));
        CHECK_FALSE(p.strictly_preferred({"c"}, {"a"}));
        CHECK(p.at_least_as_preferred({"b"}, {"b"}));
        CHECK(error_of([&] { GoalSetPreference::from_pairs({{{"a"}, {"a"}}}, u); }) == ErrorCode::InvalidPreference);
        CHECK(error_of([&] { GoalSetPreference::from_pairs({{{"a"}, {"b"}}, {{"b"}, {"a"}}}, u); }) ==
              ErrorCode::InvalidPreference);
        CHECK(error_of([&] { GoalSetPreference::from_pairs({{{"z"}, {"b"}}}, u); }) == ErrorCode::InvalidPreference);
    }

    TEST_CASE("comparable goal set") {
        GoalSet u{"g1", "g2", "g3", "g4", "g5"};
        auto chain = GoalSetPreference::from_pairs({{{"g4"}, {"g5"}},
                                                    {{"g3"}, {"g4"}},
                                                    {{"g4", "g5"}, {"g3"}},
                                                    {{"g2"}, {"g4", "g5"}},
                                                    {{"g1"}, {"g2"}}},
                                                   u);
        CHECK(comparable_goal_set(chain) == std::set<GoalSet>{{"g1"}, {"g2"}, {"g3"}, {"g4"}, {"g5"}, {"g4", "g5"}});
        CHECK(comparable_goal_set(GoalSetPreference{}).empty());
        CHECK(comparable_goal_set(GoalSetPreference::from_pairs({{{"a"}, {"b"}}}, {"a", "b"})) ==
              std::set<GoalSet>{{"a"}, {"b"}});
    }

    TEST_CASE("preferred-set decisions on the worked examples") {
        CHECK(preferred_set_decisions(testing::fixture_as<Pdf>("d1d2_pdf.json")) == std::vector<Id>{"d1"});
        CHECK(preferred_set_decisions(testing::fixture_as<Pdf>("quiet_pdf.json")) == std::vector<Id>{"jh"});
    }

    TEST_CASE("a unique strongly dominant decision is the only preferred-set decision") {
        std::mt19937 rng(5);
        for (std::uint32_t bits = 0; bits < 512; ++bits) {
            auto adf = gen::adf_from_bits(3, 3, bits);
            auto sd = evaluate(adf, SD);
            if (sd.size() != 1) continue;
            auto pdf = Pdf::validate(adf, GoalSetPreference::from_pairs(gen::random_chain(adf.goals(), 4, rng),
                                                                         adf.goal_set()));
            CHECK(preferred_set_decisions(pdf) == sd);
        }
    }

    TEST_CASE("criteria agree with the definitions on every small table") {
        for (int nd = 1; nd <= 3; ++nd)
            for (int ng = 1; ng <= 3; ++ng)
                for (const auto& adf : gen::all_adfs(nd, ng)) {
                    auto t = oracle::table_of(adf);
                    for (const auto& d : adf.decisions()) {
                        CHECK(satisfies(adf, d, SD) == oracle::strongly_dominant(t, d));
                        CHECK(satisfies(adf, d, D) == oracle::dominant(t, d));
                        CHECK(satisfies(adf, d, WD) == oracle::weakly_dominant(t, d));
                    }
                    auto sd = evaluate(adf, SD), dd = evaluate(adf, D), wd = evaluate(adf, WD);
                    for (const auto& x : sd) CHECK(std::count(dd.begin(), dd.end(), x) == 1);
                    for (const auto& x : dd) CHECK(std::count(wd.begin(), wd.end(), x) == 1);
                    CHECK_FALSE(wd.empty());
                }
    }

    TEST_CASE("preferred-set decisions are weakly dominant and match the definition") {
        std::mt19937 rng(11);
        for (int i = 0; i < 300; ++i) {
            auto pdf = gen::random_pdf(rng);
            auto t = oracle::table_of(pdf.adf());
            auto pref = gen::oracle_preference(pdf.preference());
            auto wd = evaluate(pdf.adf(), WD);
            for (const auto& d : pdf.adf().decisions()) {
                bool ps = is_preferred_set(pdf, d);
                CHECK(ps == oracle::preferred_set(t, pref, d));
                if (ps) CHECK(std::count(wd.begin(), wd.end(), d) == 1);
            }
        }
    }
}
