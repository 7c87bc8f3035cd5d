#include "decarg/decision.hpp"

#include <algorithm>

#include "decarg/error.hpp"

namespace decarg {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::EmptyDecisions: return "EmptyDecisions";
        case ErrorCode::EmptyGoals: return "EmptyGoals";
        case ErrorCode::DuplicateId: return "DuplicateId";
        case ErrorCode::InvalidIdentifier: return "InvalidIdentifier";
        case ErrorCode::UnknownGoalInGamma: return "UnknownGoalInGamma";
        case ErrorCode::UnknownDecision: return "UnknownDecision";
        case ErrorCode::UnknownNode: return "UnknownNode";
        case ErrorCode::InvalidPreference: return "InvalidPreference";
        case ErrorCode::InvalidGraph: return "InvalidGraph";
        case ErrorCode::CyclicGraph: return "CyclicGraph";
        case ErrorCode::NonFlatFramework: return "NonFlatFramework";
        case ErrorCode::CyclicRuleDependency: return "CyclicRuleDependency";
        case ErrorCode::NotAdmissible: return "NotAdmissible";
        case ErrorCode::IsAdmissible: return "IsAdmissible";
        case ErrorCode::ExplosionBudgetExceeded: return "ExplosionBudgetExceeded";
        case ErrorCode::CriterionMismatch: return "CriterionMismatch";
        case ErrorCode::SchemaError: return "SchemaError";
        case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

std::string_view criterion_name(Criterion c) {
    switch (c) {
        case Criterion::StronglyDominant: return "sd";
        case Criterion::Dominant: return "d";
        case Criterion::WeaklyDominant: return "wd";
        case Criterion::PreferredSet: return "ps";
    }
    return "?";
}

std::optional<Criterion> parse_criterion(std::string_view text) {
    if (text == "sd") return Criterion::StronglyDominant;
    if (text == "d") return Criterion::Dominant;
    if (text == "wd") return Criterion::WeaklyDominant;
    if (text == "ps") return Criterion::PreferredSet;
    return std::nullopt;
}

bool is_valid_identifier(std::string_view id) {
    if (id.empty()) return false;
    for (unsigned char c : id) {
        if (c <= ' ' || c == ',' || c == '(' || c == ')' || c == '[' || c == ']' || c == '+')
            return false;
    }
    return true;
}

std::string goal_set_name(const GoalSet& s) {
    std::string out = "[";
    bool first = true;
    for (const auto& g : s) {
        if (!first) out += '+';
        out += g;
        first = false;
    }
    return out + "]";
}

bool is_subset(const GoalSet& a, const GoalSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool is_strict_subset(const GoalSet& a, const GoalSet& b) {
    return a.size() < b.size() && is_subset(a, b);
}

namespace {

void check_ids(const std::vector<Id>& ids, std::set<Id>& seen) {
    for (const auto& id : ids) {
        if (!is_valid_identifier(id))
            throw Error(ErrorCode::InvalidIdentifier, "'" + id + "'");
        if (!seen.insert(id).second) throw Error(ErrorCode::DuplicateId, id);
    }
}

}  // namespace

Adf Adf::validate(std::vector<Id> decisions, std::vector<Id> goals, std::map<Id, GoalSet> gamma) {
    if (decisions.empty()) throw Error(ErrorCode::EmptyDecisions, "no decisions");
    if (goals.empty()) throw Error(ErrorCode::EmptyGoals, "no goals");
    std::set<Id> seen;
    check_ids(decisions, seen);
    check_ids(goals, seen);
    std::set<Id> goal_ids(goals.begin(), goals.end());
    for (const auto& [d, gs] : gamma) {
        if (std::find(decisions.begin(), decisions.end(), d) == decisions.end())
            throw Error(ErrorCode::UnknownDecision, d);
        for (const auto& g : gs)
            if (!goal_ids.count(g))
                throw Error(ErrorCode::UnknownGoalInGamma, "goal '" + g + "' of decision '" + d + "'");
    }
    Adf adf;
    for (const auto& d : decisions) adf.gamma_[d];
    for (auto& [d, gs] : gamma) adf.gamma_[d] = std::move(gs);
    adf.decisions_ = std::move(decisions);
    adf.goals_ = std::move(goals);
    return adf;
}

bool Adf::has_goal(const Id& g) const {
    return std::find(goals_.begin(), goals_.end(), g) != goals_.end();
}

const GoalSet& Adf::gamma(const Id& d) const {
    auto it = gamma_.find(d);
    if (it == gamma_.end()) throw Error(ErrorCode::UnknownDecision, d);
    return it->second;
}

GoalSetPreference GoalSetPreference::from_pairs(const std::vector<Pair>& strict,
                                                const GoalSet& universe) {
    GoalSetPreference p;
    std::set<GoalSet> nodes;
    for (const auto& [a, b] : strict) {
        if (!is_subset(a, universe) || !is_subset(b, universe))
            throw Error(ErrorCode::InvalidPreference,
                        "goal set outside the declared goals in " + goal_set_name(a) + " > " +
                            goal_set_name(b));
        if (a == b)
            throw Error(ErrorCode::InvalidPreference, "reflexive pair on " + goal_set_name(a));
        p.stated_.insert({a, b});
        nodes.insert(a);
        nodes.insert(b);
    }
    p.closure_ = p.stated_;
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<Pair> add;
        for (const auto& [a, b] : p.closure_)
            for (auto it = p.closure_.lower_bound({b, GoalSet{}});
                 it != p.closure_.end() && it->first == b; ++it)
                if (!p.closure_.count({a, it->second})) add.push_back({a, it->second});
        for (auto& x : add) changed |= p.closure_.insert(std::move(x)).second;
    }
    for (const auto& n : nodes)
        if (p.closure_.count({n, n}))
            throw Error(ErrorCode::InvalidPreference, "cycle through " + goal_set_name(n));
    return p;
}

Pdf Pdf::validate(Adf adf, GoalSetPreference preference) {
    GoalSet universe = adf.goal_set();
    for (const auto& [a, b] : preference.stated())
        if (!is_subset(a, universe) || !is_subset(b, universe))
            throw Error(ErrorCode::InvalidPreference, "goal set outside the declared goals");
    return Pdf(std::move(adf), std::move(preference));
}

bool satisfies(const Adf& adf, const Id& d, Criterion c) {
    const GoalSet& mine = adf.gamma(d);
    switch (c) {
        case Criterion::StronglyDominant:
            return mine.size() == adf.goals().size();
        case Criterion::Dominant:
            for (const auto& g : adf.goals()) {
                if (mine.count(g)) continue;
                for (const auto& other : adf.decisions())
                    if (other != d && adf.meets(other, g)) return false;
            }
            return true;
        case Criterion::WeaklyDominant:
            for (const auto& other : adf.decisions())
                if (other != d && is_strict_subset(mine, adf.gamma(other))) return false;
            return true;
        case Criterion::PreferredSet:
            throw Error(ErrorCode::CriterionMismatch, "preferred-set needs a preference");
    }
    return false;
}

std::vector<Id> evaluate(const Adf& adf, Criterion c) {
    std::vector<Id> out;
    for (const auto& d : adf.decisions())
        if (satisfies(adf, d, c)) out.push_back(d);
    return out;
}

std::set<GoalSet> comparable_goal_set(const GoalSetPreference& p) {
    std::set<GoalSet> out;
    for (const auto& [a, b] : p.stated()) {
        out.insert(a);
        out.insert(b);
    }
    return out;
}

std::set<GoalSet> comparable_goal_set(const Pdf& pdf) {
    return comparable_goal_set(pdf.preference());
}

bool preference_beats(const Pdf& pdf, const Id& rival, const Id& d) {
    const Adf& adf = pdf.adf();
    const GoalSet& mine = adf.gamma(d);
    const GoalSet& theirs = adf.gamma(rival);
    auto cg = comparable_goal_set(pdf);
    for (const auto& s : cg) {
        if (is_subset(s, mine) || !is_subset(s, theirs)) continue;
        bool answered = false;
        for (const auto& t : cg) {
            if (pdf.preference().at_least_as_preferred(t, s) && is_subset(t, mine) &&
                !is_subset(t, theirs)) {
                answered = true;
                break;
            }
        }
        if (!answered) return true;
    }
    return false;
}

bool is_preferred_set(const Pdf& pdf, const Id& d) {
    const Adf& adf = pdf.adf();
    if (!satisfies(adf, d, Criterion::WeaklyDominant)) return false;
    for (const auto& other : adf.decisions()) {
        if (other == d || !satisfies(adf, other, Criterion::WeaklyDominant)) continue;
        if (preference_beats(pdf, other, d)) return false;
    }
    return true;
}

std::vector<Id> preferred_set_decisions(const Pdf& pdf) {
    std::vector<Id> out;
    for (const auto& d : pdf.adf().decisions())
        if (is_preferred_set(pdf, d)) out.push_back(d);
    return out;
}

}  // namespace decarg
