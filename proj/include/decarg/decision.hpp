#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace decarg {

using Id = std::string;
using GoalSet = std::set<Id>;

enum class Criterion { StronglyDominant, Dominant, WeaklyDominant, PreferredSet };

// Short command-line names: sd, d, wd, ps.
std::string_view criterion_name(Criterion c);
std::optional<Criterion> parse_criterion(std::string_view text);

// Identifiers end up as ground terms, so they must not contain term syntax.
bool is_valid_identifier(std::string_view id);

// Canonical term name of a goal set, e.g. [cheap+near]; the empty set is [].
std::string goal_set_name(const GoalSet& s);

bool is_subset(const GoalSet& a, const GoalSet& b);
bool is_strict_subset(const GoalSet& a, const GoalSet& b);

class Adf {
public:
    static Adf validate(std::vector<Id> decisions, std::vector<Id> goals,
                        std::map<Id, GoalSet> gamma);

    const std::vector<Id>& decisions() const { return decisions_; }
    const std::vector<Id>& goals() const { return goals_; }
    GoalSet goal_set() const { return GoalSet(goals_.begin(), goals_.end()); }
    bool has_decision(const Id& d) const { return gamma_.count(d) != 0; }
    bool has_goal(const Id& g) const;
    const GoalSet& gamma(const Id& d) const;
    bool meets(const Id& d, const Id& g) const { return gamma(d).count(g) != 0; }

    bool operator==(const Adf&) const = default;

private:
    std::vector<Id> decisions_;
    std::vector<Id> goals_;
    std::map<Id, GoalSet> gamma_;
};

// Strict preference over goal sets. A pair (a, b) means a is strictly
// preferred to b. The stated pairs are closed transitively on construction.
class GoalSetPreference {
public:
    using Pair = std::pair<GoalSet, GoalSet>;

    GoalSetPreference() = default;
    static GoalSetPreference from_pairs(const std::vector<Pair>& strict, const GoalSet& universe);

    bool strictly_preferred(const GoalSet& a, const GoalSet& b) const {
        return closure_.count({a, b}) != 0;
    }
    bool at_least_as_preferred(const GoalSet& a, const GoalSet& b) const {
        return a == b || strictly_preferred(a, b);
    }
    const std::set<Pair>& stated() const { return stated_; }
    const std::set<Pair>& closure() const { return closure_; }
    bool empty() const { return stated_.empty(); }

    bool operator==(const GoalSetPreference& o) const { return closure_ == o.closure_; }

private:
    std::set<Pair> stated_;
    std::set<Pair> closure_;
};

class Pdf {
public:
    static Pdf validate(Adf adf, GoalSetPreference preference);

    const Adf& adf() const { return adf_; }
    const GoalSetPreference& preference() const { return preference_; }

    bool operator==(const Pdf&) const = default;

private:
    Pdf(Adf adf, GoalSetPreference p) : adf_(std::move(adf)), preference_(std::move(p)) {}
    Adf adf_;
    GoalSetPreference preference_;
};

bool satisfies(const Adf& adf, const Id& d, Criterion c);
std::vector<Id> evaluate(const Adf& adf, Criterion c);

std::set<GoalSet> comparable_goal_set(const GoalSetPreference& p);
std::set<GoalSet> comparable_goal_set(const Pdf& pdf);

// True when `rival` meets some comparable set that `d` misses and `d` has no
// comparable set at least as preferred that `rival` misses.
bool preference_beats(const Pdf& pdf, const Id& rival, const Id& d);

bool is_preferred_set(const Pdf& pdf, const Id& d);
std::vector<Id> preferred_set_decisions(const Pdf& pdf);

}  // namespace decarg
