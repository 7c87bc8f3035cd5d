#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "decarg/decision.hpp"

namespace decarg {

// Alternatives described by attributes, each tested against one matching
// requirement by `passes`.
struct ConjunctiveFramework {
    std::vector<Id> alternatives;
    std::map<Id, std::vector<Id>> attributes_of;
    std::vector<Id> requirements;
    std::map<Id, Id> matching;  // attribute -> requirement
    std::function<bool(const Id& attribute, const Id& requirement)> passes;

    // Every attribute has a matching requirement and each alternative's
    // attributes match its requirements one-to-one. Throws SchemaError.
    void validate() const;
};

struct ParetoFramework {
    std::vector<Id> decision_space;
    std::vector<Id> objective_space;
    std::map<Id, GoalSet> objective;  // ordered by strict superset
};

struct LexFramework {
    std::vector<Id> alternatives;
    std::vector<Id> attributes;  // most important first
    std::map<Id, std::set<Id>> has;
};

std::set<Id> conjunctive_select(const ConjunctiveFramework& cf);
std::set<Id> pareto_efficient(const ParetoFramework& pf);
std::set<Id> lexicographic_select(const LexFramework& lf);

Adf adf_from_conjunctive(const ConjunctiveFramework& cf);
ConjunctiveFramework conjunctive_from_adf(const Adf& adf);
ParetoFramework pareto_from_adf(const Adf& adf);
Adf adf_from_pareto(const ParetoFramework& pf);
// {x} is preferred over {y} whenever x is more important than y.
Pdf pdf_from_lex(const LexFramework& lf);
// Needs a total order over the singleton goal sets; throws InvalidPreference.
LexFramework lex_from_pdf(const Pdf& pdf);

// A decision table: header row of attribute names, one row per alternative,
// and optionally a row whose first cell is "Minimum" holding thresholds.
// Without thresholds a cell counts as held when it is nonzero.
struct DecisionTable {
    std::vector<Id> alternatives;
    std::vector<Id> columns;
    std::vector<std::vector<double>> values;
    std::optional<std::vector<double>> minimum;

    bool holds(std::size_t row, std::size_t col) const;
    std::string requirement_name(std::size_t col) const;  // "GPA>=3" or the column name
};

DecisionTable parse_decision_table(std::string_view csv);
ConjunctiveFramework conjunctive_from_table(const DecisionTable& t);
LexFramework lex_from_table(const DecisionTable& t);

}  // namespace decarg
