#include "decarg/mapping.hpp"

#include "decarg/error.hpp"

namespace decarg {

namespace atoms {
Sentence met(const Id& d, const Id& g) { return {"met", {d, g}}; }
Sentence not_met(const Id& d, const Id& g) { return {"notMet", {d, g}}; }
Sentence query_for(Criterion c, const Id& d) {
    switch (c) {
        case Criterion::StronglyDominant: return {"sDom", {d}};
        case Criterion::Dominant: return {"dom", {d}};
        case Criterion::WeaklyDominant: return {"wDom", {d}};
        case Criterion::PreferredSet: return {"pS", {d}};
    }
    return {};
}
}  // namespace atoms

using atoms::met;
using atoms::not_met;

Argument MappedFramework::query_argument(const Id& d) const {
    auto it = query.find(d);
    if (it == query.end()) throw Error(ErrorCode::UnknownDecision, d);
    return Argument{it->second, {it->second}, std::make_shared<Derivation>(Derivation{it->second, true, {}})};
}

AbaFramework core_adf_aba(const Adf& adf) {
    std::vector<Rule> rules;
    std::set<Sentence> asms;
    std::map<Sentence, std::set<Sentence>> con;
    for (const auto& d : adf.decisions())
        for (const auto& g : adf.goals()) {
            if (adf.meets(d, g)) rules.push_back({met(d, g), {}});
            asms.insert(not_met(d, g));
            con[not_met(d, g)] = {met(d, g)};
        }
    return AbaFramework::validate(std::move(rules), std::move(asms), std::move(con));
}

AbaFramework strongly_dominant_component(const std::vector<Id>& decisions, const std::vector<Id>& goals) {
    std::vector<Rule> rules;
    std::set<Sentence> asms;
    std::map<Sentence, std::set<Sentence>> con;
    for (const auto& d : decisions) {
        Sentence q{"sDom", {d}};
        for (const auto& g : goals) rules.push_back({{"notSDom", {d}}, {not_met(d, g)}});
        asms.insert(q);
        con[q] = {{"notSDom", {d}}};
    }
    return AbaFramework::validate(std::move(rules), std::move(asms), std::move(con));
}

AbaFramework dominant_component(const std::vector<Id>& decisions, const std::vector<Id>& goals) {
    std::vector<Rule> rules;
    std::set<Sentence> asms;
    std::map<Sentence, std::set<Sentence>> con;
    for (const auto& d : decisions) {
        Sentence q{"dom", {d}};
        asms.insert(q);
        con[q] = {{"notDom", {d}}};
        for (const auto& g : goals) {
            rules.push_back({{"notDom", {d}}, {not_met(d, g)}});
            Sentence no{"noOthers", {d, g}};
            asms.insert(no);
            auto& c = con[no];
            for (const auto& other : decisions)
                if (other != d) c.insert(met(other, g));
            asms.insert(not_met(d, g));
            con[not_met(d, g)] = {no};
        }
    }
    return AbaFramework::validate(std::move(rules), std::move(asms), std::move(con));
}

namespace {

// notX(d) <- met(d',g), notMet(d,g), notMore(d,d') together with the more rules.
void add_superset_test(const std::string& head, const std::vector<Id>& decisions, const std::vector<Id>& goals,
                       std::vector<Rule>& rules, std::set<Sentence>& asms,
                       std::map<Sentence, std::set<Sentence>>& con) {
    for (const auto& d : decisions)
        for (const auto& other : decisions) {
            if (d == other) continue;
            Sentence not_more{"notMore", {d, other}};
            asms.insert(not_more);
            con[not_more] = {{"more", {d, other}}};
            for (const auto& g : goals) {
                rules.push_back({{head, {d}}, {met(other, g), not_met(d, g), not_more}});
                rules.push_back({{"more", {d, other}}, {met(d, g), not_met(other, g)}});
            }
        }
}

}  // namespace

AbaFramework weakly_dominant_component(const std::vector<Id>& decisions, const std::vector<Id>& goals) {
    std::vector<Rule> rules;
    std::set<Sentence> asms;
    std::map<Sentence, std::set<Sentence>> con;
    for (const auto& d : decisions) {
        Sentence q{"wDom", {d}};
        asms.insert(q);
        con[q] = {{"notWDom", {d}}};
    }
    add_superset_test("notWDom", decisions, goals, rules, asms, con);
    return AbaFramework::validate(std::move(rules), std::move(asms), std::move(con));
}

AbaFramework preferred_set_component(const std::vector<Id>& decisions, const std::vector<Id>& goals,
                                     const GoalSetPreference& preference, PsEncoding encoding) {
    std::vector<Rule> rules;
    std::set<Sentence> asms;
    std::map<Sentence, std::set<Sentence>> con;
    auto cg = comparable_goal_set(preference);
    for (const auto& [top, below] : preference.closure())
        rules.push_back({{"pfr", {goal_set_name(top), goal_set_name(below)}}, {}});
    for (const auto& d : decisions) {
        Sentence q{"pS", {d}};
        asms.insert(q);
        con[q] = {{"notPS", {d}}};
        for (const auto& s : cg) {
            auto sn = goal_set_name(s);
            for (const auto& g : s) rules.push_back({{"notMetSet", {d, sn}}, {not_met(d, g)}});
            Sentence met_set{"metSet", {d, sn}};
            asms.insert(met_set);
            con[met_set] = {{"notMetSet", {d, sn}}};
        }
        for (const auto& other : decisions) {
            if (other == d) continue;
            for (const auto& s : cg) {
                auto sn = goal_set_name(s);
                Sentence not_better{"notBetter", {d, other, sn}};
                asms.insert(not_better);
                con[not_better] = {{"better", {d, other, sn}}};
                rules.push_back({{"notPS", {d}}, {{"metSet", {other, sn}}, {"notMetSet", {d, sn}}, not_better}});
                for (const auto& s2 : cg) {
                    if (s2 == s) continue;
                    auto s2n = goal_set_name(s2);
                    rules.push_back({{"better", {d, other, sn}},
                                     {{"metSet", {d, s2n}}, {"notMetSet", {other, s2n}}, {"pfr", {s2n, sn}}}});
                }
            }
        }
    }
    if (encoding == PsEncoding::Guarded) add_superset_test("notPS", decisions, goals, rules, asms, con);
    return AbaFramework::validate(std::move(rules), std::move(asms), std::move(con));
}

AbaFramework criterion_component(Criterion c, const std::vector<Id>& decisions, const std::vector<Id>& goals,
                                 const GoalSetPreference* preference, PsEncoding encoding) {
    switch (c) {
        case Criterion::StronglyDominant: return strongly_dominant_component(decisions, goals);
        case Criterion::Dominant: return dominant_component(decisions, goals);
        case Criterion::WeaklyDominant: return weakly_dominant_component(decisions, goals);
        case Criterion::PreferredSet:
            if (!preference) throw Error(ErrorCode::CriterionMismatch, "preferred-set needs a preference");
            return preferred_set_component(decisions, goals, *preference, encoding);
    }
    throw Error(ErrorCode::CriterionMismatch, "unknown criterion");
}

namespace {

MappedFramework assemble(const Adf& adf, Criterion c, const GoalSetPreference* p, PsEncoding encoding) {
    MappedFramework m{core_adf_aba(adf).merged(criterion_component(c, adf.decisions(), adf.goals(), p, encoding)),
                      c,
                      {}};
    for (const auto& d : adf.decisions()) m.query[d] = atoms::query_for(c, d);
    return m;
}

}  // namespace

MappedFramework strongly_dominant_aba(const Adf& adf) {
    return assemble(adf, Criterion::StronglyDominant, nullptr, PsEncoding::Guarded);
}
MappedFramework dominant_aba(const Adf& adf) { return assemble(adf, Criterion::Dominant, nullptr, PsEncoding::Guarded); }
MappedFramework weakly_dominant_aba(const Adf& adf) {
    return assemble(adf, Criterion::WeaklyDominant, nullptr, PsEncoding::Guarded);
}
MappedFramework preferred_set_aba(const Pdf& pdf, PsEncoding encoding) {
    return assemble(pdf.adf(), Criterion::PreferredSet, &pdf.preference(), encoding);
}

MappedFramework criterion_aba(const Adf& adf, Criterion c) {
    if (c == Criterion::PreferredSet) throw Error(ErrorCode::CriterionMismatch, "preferred-set needs a preference");
    return assemble(adf, c, nullptr, PsEncoding::Guarded);
}

MappedFramework criterion_aba(const Pdf& pdf, Criterion c, PsEncoding encoding) {
    return assemble(pdf.adf(), c, &pdf.preference(), encoding);
}

const std::set<std::string>& mapping_vocabulary() {
    static const std::set<std::string> v = {"met",  "notMet", "sDom",     "notSDom",   "dom",    "notDom",
                                            "noOthers", "wDom", "notWDom", "more",   "notMore", "pS",
                                            "notPS", "metSet", "notMetSet", "better", "notBetter", "pfr"};
    return v;
}

}  // namespace decarg
