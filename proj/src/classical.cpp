#include "decarg/classical.hpp"

#include <algorithm>
#include <cctype>
#include <memory>
#include <sstream>

#include "decarg/error.hpp"

namespace decarg {

void ConjunctiveFramework::validate() const {
    std::set<Id> reqs(requirements.begin(), requirements.end());
    for (const auto& l : alternatives) {
        auto it = attributes_of.find(l);
        std::set<Id> used;
        if (it != attributes_of.end())
            for (const auto& t : it->second) {
                auto m = matching.find(t);
                if (m == matching.end()) throw Error(ErrorCode::SchemaError, "attribute " + t + " has no requirement");
                if (!reqs.count(m->second)) throw Error(ErrorCode::SchemaError, "unknown requirement " + m->second);
                if (!used.insert(m->second).second)
                    throw Error(ErrorCode::SchemaError, l + " tests requirement " + m->second + " twice");
            }
        if (used.size() != reqs.size()) throw Error(ErrorCode::SchemaError, l + " does not cover every requirement");
    }
    if (!passes) throw Error(ErrorCode::SchemaError, "no requirement function");
}

std::set<Id> conjunctive_select(const ConjunctiveFramework& cf) {
    std::set<Id> out;
    for (const auto& l : cf.alternatives) {
        bool ok = true;
        auto it = cf.attributes_of.find(l);
        if (it != cf.attributes_of.end())
            for (const auto& t : it->second) ok = ok && cf.passes(t, cf.matching.at(t));
        if (ok) out.insert(l);
    }
    return out;
}

std::set<Id> pareto_efficient(const ParetoFramework& pf) {
    std::set<Id> out;
    for (const auto& d : pf.decision_space) {
        const GoalSet& fd = pf.objective.at(d);
        bool dominated = std::any_of(pf.decision_space.begin(), pf.decision_space.end(),
                                     [&](const Id& o) { return is_strict_subset(fd, pf.objective.at(o)); });
        if (!dominated) out.insert(d);
    }
    return out;
}

std::set<Id> lexicographic_select(const LexFramework& lf) {
    std::vector<Id> survivors = lf.alternatives;
    for (const auto& x : lf.attributes) {
        if (survivors.size() <= 1) break;
        std::vector<Id> holders;
        for (const auto& a : survivors) {
            auto it = lf.has.find(a);
            if (it != lf.has.end() && it->second.count(x)) holders.push_back(a);
        }
        if (!holders.empty()) survivors = std::move(holders);
    }
    return {survivors.begin(), survivors.end()};
}

Adf adf_from_conjunctive(const ConjunctiveFramework& cf) {
    cf.validate();
    std::map<Id, GoalSet> gamma;
    for (const auto& l : cf.alternatives) {
        auto& g = gamma[l];
        auto it = cf.attributes_of.find(l);
        if (it == cf.attributes_of.end()) continue;
        for (const auto& t : it->second) {
            const Id& r = cf.matching.at(t);
            if (cf.passes(t, r)) g.insert(r);
        }
    }
    return Adf::validate(cf.alternatives, cf.requirements, std::move(gamma));
}

ConjunctiveFramework conjunctive_from_adf(const Adf& adf) {
    ConjunctiveFramework cf;
    cf.alternatives = adf.decisions();
    cf.requirements = adf.goals();
    auto met = std::make_shared<std::set<std::pair<Id, Id>>>();
    for (const auto& l : adf.decisions())
        for (const auto& r : adf.goals()) {
            Id t = l + "." + r;
            cf.attributes_of[l].push_back(t);
            cf.matching[t] = r;
            if (adf.meets(l, r)) met->insert({t, r});
        }
    cf.passes = [met](const Id& t, const Id& r) { return met->count({t, r}) != 0; };
    return cf;
}

ParetoFramework pareto_from_adf(const Adf& adf) {
    ParetoFramework pf{adf.decisions(), adf.goals(), {}};
    for (const auto& d : adf.decisions()) pf.objective[d] = adf.gamma(d);
    return pf;
}

Adf adf_from_pareto(const ParetoFramework& pf) {
    return Adf::validate(pf.decision_space, pf.objective_space, pf.objective);
}

Pdf pdf_from_lex(const LexFramework& lf) {
    std::map<Id, GoalSet> gamma;
    for (const auto& a : lf.alternatives) {
        auto it = lf.has.find(a);
        gamma[a] = it == lf.has.end() ? GoalSet{} : GoalSet(it->second.begin(), it->second.end());
    }
    Adf adf = Adf::validate(lf.alternatives, lf.attributes, std::move(gamma));
    std::vector<std::pair<GoalSet, GoalSet>> pairs;
    for (std::size_t i = 0; i + 1 < lf.attributes.size(); ++i)
        pairs.push_back({{lf.attributes[i]}, {lf.attributes[i + 1]}});
    GoalSet universe(lf.attributes.begin(), lf.attributes.end());
    return Pdf::validate(std::move(adf), GoalSetPreference::from_pairs(std::move(pairs), universe));
}

LexFramework lex_from_pdf(const Pdf& pdf) {
    const auto& adf = pdf.adf();
    const auto& pref = pdf.preference();
    std::vector<Id> order = adf.goals();
    for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t j = i + 1; j < order.size(); ++j)
            if (!pref.strictly_preferred({order[i]}, {order[j]}) && !pref.strictly_preferred({order[j]}, {order[i]}))
                throw Error(ErrorCode::InvalidPreference, "singleton goal sets are not totally ordered");
    std::sort(order.begin(), order.end(),
              [&](const Id& a, const Id& b) { return pref.strictly_preferred({a}, {b}); });
    LexFramework lf{adf.decisions(), order, {}};
    for (const auto& d : adf.decisions()) lf.has[d] = adf.gamma(d);
    return lf;
}

bool DecisionTable::holds(std::size_t row, std::size_t col) const {
    double v = values[row][col];
    return minimum ? v >= (*minimum)[col] : v != 0.0;
}

std::string DecisionTable::requirement_name(std::size_t col) const {
    if (!minimum) return columns[col];
    std::ostringstream os;
    os << columns[col] << ">=" << (*minimum)[col];
    return os.str();
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream is(line);
    while (std::getline(is, cell, ',')) {
        auto b = cell.find_first_not_of(" \t\r");
        auto e = cell.find_last_not_of(" \t\r");
        cells.push_back(b == std::string::npos ? "" : cell.substr(b, e - b + 1));
    }
    return cells;
}

double parse_cell(const std::string& s, std::size_t line) {
    try {
        std::size_t used = 0;
        double v = std::stod(s, &used);
        if (used == s.size()) return v;
    } catch (const std::exception&) {
    }
    throw Error(ErrorCode::SchemaError, "line " + std::to_string(line) + ": not a number: '" + s + "'");
}

}  // namespace

DecisionTable parse_decision_table(std::string_view csv) {
    DecisionTable t;
    std::istringstream is{std::string(csv)};
    std::string line;
    std::size_t n = 0;
    bool header = true;
    while (std::getline(is, line)) {
        ++n;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto cells = split_csv_line(line);
        if (header) {
            if (cells.size() < 2) throw Error(ErrorCode::SchemaError, "line " + std::to_string(n) + ": no attributes");
            t.columns.assign(cells.begin() + 1, cells.end());
            header = false;
            continue;
        }
        if (cells.size() != t.columns.size() + 1)
            throw Error(ErrorCode::SchemaError, "line " + std::to_string(n) + ": expected " +
                                                    std::to_string(t.columns.size() + 1) + " cells");
        std::vector<double> row;
        for (std::size_t i = 1; i < cells.size(); ++i) row.push_back(parse_cell(cells[i], n));
        std::string first = cells[0];
        std::transform(first.begin(), first.end(), first.begin(), [](unsigned char c) { return std::tolower(c); });
        if (first == "minimum" || first == "min") {
            if (t.minimum) throw Error(ErrorCode::SchemaError, "line " + std::to_string(n) + ": second minimum row");
            t.minimum = std::move(row);
        } else {
            t.alternatives.push_back(cells[0]);
            t.values.push_back(std::move(row));
        }
    }
    if (header) throw Error(ErrorCode::SchemaError, "empty table");
    return t;
}

ConjunctiveFramework conjunctive_from_table(const DecisionTable& t) {
    ConjunctiveFramework cf;
    cf.alternatives = t.alternatives;
    auto passing = std::make_shared<std::set<Id>>();
    for (std::size_t c = 0; c < t.columns.size(); ++c) cf.requirements.push_back(t.requirement_name(c));
    for (std::size_t r = 0; r < t.alternatives.size(); ++r)
        for (std::size_t c = 0; c < t.columns.size(); ++c) {
            std::ostringstream os;
            os << t.alternatives[r] << "." << t.columns[c] << "=" << t.values[r][c];
            Id attr = os.str();
            cf.attributes_of[t.alternatives[r]].push_back(attr);
            cf.matching[attr] = cf.requirements[c];
            if (t.holds(r, c)) passing->insert(attr);
        }
    cf.passes = [passing](const Id& attr, const Id&) { return passing->count(attr) != 0; };
    return cf;
}

LexFramework lex_from_table(const DecisionTable& t) {
    LexFramework lf{t.alternatives, t.columns, {}};
    for (std::size_t r = 0; r < t.alternatives.size(); ++r) {
        auto& h = lf.has[t.alternatives[r]];
        for (std::size_t c = 0; c < t.columns.size(); ++c)
            if (t.holds(r, c)) h.insert(t.columns[c]);
    }
    return lf;
}

}  // namespace decarg
