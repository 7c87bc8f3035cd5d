#pragma once

#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

#include "decarg/decision.hpp"

namespace decarg {

struct SdPos {
    GoalSet goals;
    bool operator==(const SdPos&) const = default;
};
struct SdNeg {
    GoalSet goals;
    bool operator==(const SdNeg&) const = default;
};
struct DPos {
    GoalSet met;
    GoalSet unmet;
    bool operator==(const DPos&) const = default;
};
struct DNeg {
    std::set<std::pair<Id, Id>> pairs;  // (decision, goal)
    bool operator==(const DNeg&) const = default;
};
struct WdPos {
    GoalSet core;
    std::set<std::pair<Id, Id>> witnesses;  // (goal, decision)
    bool operator==(const WdPos&) const = default;
};
struct WdNeg {
    std::set<Id> decisions;
    bool operator==(const WdNeg&) const = default;
};
struct PsPos {
    GoalSet core;
    std::set<std::pair<GoalSet, Id>> witnesses;  // (goal set, decision)
    bool operator==(const PsPos&) const = default;
};
struct PsNeg {
    std::set<Id> decisions;
    bool operator==(const PsNeg&) const = default;
};

using FlatExplanation = std::variant<SdPos, SdNeg, DPos, DNeg, WdPos, WdNeg, PsPos, PsNeg>;

// "SDPos", "DNeg", ...
std::string_view flat_kind(const FlatExplanation& e);
bool is_positive(const FlatExplanation& e);
Criterion flat_criterion(const FlatExplanation& e);
std::string to_string(const FlatExplanation& e);

FlatExplanation flat_explain(const Adf& adf, const Id& d, Criterion c);
FlatExplanation flat_explain_preferred(const Pdf& pdf, const Id& d);

// Rivals that defeat d under the preferred-set test: strict goal supersets of
// d plus decisions that beat d on a comparable set d cannot answer.
std::set<Id> preferred_set_defeaters(const Pdf& pdf, const Id& d);

bool check_flat_explanation(const Adf& adf, const Id& d, const FlatExplanation& e);
bool check_flat_explanation(const Pdf& pdf, const Id& d, const FlatExplanation& e);

}  // namespace decarg
