#include "decarg/flat.hpp"

#include <sstream>

#include "decarg/error.hpp"

namespace decarg {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string set_text(const GoalSet& s) {
    std::string out = "{";
    bool first = true;
    for (const auto& x : s) {
        if (!first) out += ", ";
        out += x;
        first = false;
    }
    return out + "}";
}

void require_decision(const Adf& adf, const Id& d) {
    if (!adf.has_decision(d)) throw Error(ErrorCode::UnknownDecision, d);
}

}  // namespace

std::string_view flat_kind(const FlatExplanation& e) {
    static constexpr std::string_view names[] = {"SDPos", "SDNeg", "DPos",  "DNeg",
                                                 "WDPos", "WDNeg", "PSPos", "PSNeg"};
    return names[e.index()];
}

bool is_positive(const FlatExplanation& e) { return e.index() % 2 == 0; }

Criterion flat_criterion(const FlatExplanation& e) {
    static constexpr Criterion cs[] = {Criterion::StronglyDominant, Criterion::Dominant,
                                       Criterion::WeaklyDominant, Criterion::PreferredSet};
    return cs[e.index() / 2];
}

std::string to_string(const FlatExplanation& e) {
    std::ostringstream os;
    os << flat_kind(e) << ' ';
    std::visit(overloaded{
                   [&](const SdPos& x) { os << set_text(x.goals); },
                   [&](const SdNeg& x) { os << set_text(x.goals); },
                   [&](const DPos& x) { os << '<' << set_text(x.met) << ", " << set_text(x.unmet) << '>'; },
                   [&](const DNeg& x) {
                       os << '{';
                       bool first = true;
                       for (const auto& [d, g] : x.pairs) {
                           os << (first ? "" : ", ") << '(' << d << ',' << g << ')';
                           first = false;
                       }
                       os << '}';
                   },
                   [&](const WdPos& x) {
                       os << '<' << set_text(x.core) << ", {";
                       bool first = true;
                       for (const auto& [g, d] : x.witnesses) {
                           os << (first ? "" : ", ") << '(' << g << ',' << d << ')';
                           first = false;
                       }
                       os << "}>";
                   },
                   [&](const WdNeg& x) { os << set_text(x.decisions); },
                   [&](const PsPos& x) {
                       os << '<' << set_text(x.core) << ", {";
                       bool first = true;
                       for (const auto& [s, d] : x.witnesses) {
                           os << (first ? "" : ", ") << '(' << set_text(s) << ',' << d << ')';
                           first = false;
                       }
                       os << "}>";
                   },
                   [&](const PsNeg& x) { os << set_text(x.decisions); },
               },
               e);
    return os.str();
}

FlatExplanation flat_explain(const Adf& adf, const Id& d, Criterion c) {
    require_decision(adf, d);
    const GoalSet& mine = adf.gamma(d);
    switch (c) {
        case Criterion::StronglyDominant: {
            if (satisfies(adf, d, c)) return SdPos{mine};
            SdNeg out;
            for (const auto& g : adf.goals())
                if (!mine.count(g)) out.goals.insert(g);
            return out;
        }
        case Criterion::Dominant: {
            if (satisfies(adf, d, c)) {
                DPos out{mine, {}};
                for (const auto& g : adf.goals())
                    if (!mine.count(g)) out.unmet.insert(g);
                return out;
            }
            DNeg out;
            for (const auto& other : adf.decisions())
                for (const auto& g : adf.gamma(other))
                    if (!mine.count(g)) out.pairs.insert({other, g});
            return out;
        }
        case Criterion::WeaklyDominant: {
            if (!satisfies(adf, d, c)) {
                WdNeg out;
                for (const auto& other : adf.decisions())
                    if (is_strict_subset(mine, adf.gamma(other))) out.decisions.insert(other);
                return out;
            }
            WdPos out{mine, {}};
            for (const auto& other : adf.decisions()) {
                if (other == d || is_subset(adf.gamma(other), mine)) continue;
                for (const auto& g : mine)
                    if (!adf.meets(other, g)) {
                        out.witnesses.insert({g, other});
                        break;
                    }
            }
            return out;
        }
        case Criterion::PreferredSet:
            throw Error(ErrorCode::CriterionMismatch, "preferred-set needs a preference");
    }
    throw Error(ErrorCode::CriterionMismatch, "unknown criterion");
}

std::set<Id> preferred_set_defeaters(const Pdf& pdf, const Id& d) {
    const Adf& adf = pdf.adf();
    require_decision(adf, d);
    std::set<Id> out;
    for (const auto& other : adf.decisions()) {
        if (other == d) continue;
        if (is_strict_subset(adf.gamma(d), adf.gamma(other)) || preference_beats(pdf, other, d))
            out.insert(other);
    }
    return out;
}

FlatExplanation flat_explain_preferred(const Pdf& pdf, const Id& d) {
    const Adf& adf = pdf.adf();
    require_decision(adf, d);
    if (!is_preferred_set(pdf, d)) return PsNeg{preferred_set_defeaters(pdf, d)};
    const GoalSet& mine = adf.gamma(d);
    auto cg = comparable_goal_set(pdf);
    PsPos out{mine, {}};
    for (const auto& other : adf.decisions()) {
        const GoalSet& theirs = adf.gamma(other);
        if (other == d || is_subset(theirs, mine)) continue;
        bool threat = false;
        for (const auto& s : cg) {
            if (!is_subset(s, theirs) || is_subset(s, mine)) continue;
            threat = true;
            for (const auto& t : cg)
                if (pdf.preference().strictly_preferred(t, s) && is_subset(t, mine) &&
                    !is_subset(t, theirs)) {
                    out.witnesses.insert({t, other});
                    break;
                }
        }
        if (!threat) {
            for (const auto& g : mine)
                if (!theirs.count(g)) {
                    out.witnesses.insert({GoalSet{g}, other});
                    break;
                }
        }
    }
    return out;
}

bool check_flat_explanation(const Adf& adf, const Id& d, const FlatExplanation& e) {
    if (!adf.has_decision(d)) return false;
    Criterion c = flat_criterion(e);
    if (c == Criterion::PreferredSet) return false;
    if (satisfies(adf, d, c) != is_positive(e)) return false;
    const GoalSet& mine = adf.gamma(d);
    if (const auto* w = std::get_if<WdPos>(&e)) {
        if (!is_subset(w->core, mine)) return false;
        std::set<Id> listed;
        for (const auto& [g, other] : w->witnesses) {
            if (!adf.has_decision(other) || other == d) return false;
            if (!mine.count(g) || adf.meets(other, g)) return false;
            listed.insert(other);
        }
        for (const auto& other : adf.decisions()) {
            if (other == d) continue;
            if (!is_subset(adf.gamma(other), w->core) && !listed.count(other)) return false;
        }
        return true;
    }
    return e == flat_explain(adf, d, c);
}

bool check_flat_explanation(const Pdf& pdf, const Id& d, const FlatExplanation& e) {
    const Adf& adf = pdf.adf();
    if (flat_criterion(e) != Criterion::PreferredSet) return check_flat_explanation(adf, d, e);
    if (!adf.has_decision(d)) return false;
    if (is_preferred_set(pdf, d) != is_positive(e)) return false;
    const auto* p = std::get_if<PsPos>(&e);
    if (!p) return e == flat_explain_preferred(pdf, d);
    const GoalSet& mine = adf.gamma(d);
    if (!is_subset(p->core, mine)) return false;
    std::map<Id, std::vector<GoalSet>> by_rival;
    for (const auto& [s, other] : p->witnesses) {
        if (!adf.has_decision(other) || other == d) return false;
        if (!is_subset(s, mine) || is_subset(s, adf.gamma(other))) return false;
        by_rival[other].push_back(s);
    }
    for (const auto& other : adf.decisions()) {
        if (other == d) continue;
        if (!is_subset(adf.gamma(other), p->core) && !by_rival.count(other)) return false;
    }
    auto cg = comparable_goal_set(pdf);
    for (const auto& [other, sets] : by_rival) {
        for (const auto& threat : cg) {
            if (!is_subset(threat, adf.gamma(other)) || is_subset(threat, mine)) continue;
            bool answered = false;
            for (const auto& s : sets)
                if (pdf.preference().strictly_preferred(s, threat)) answered = true;
            if (!answered) return false;
        }
    }
    return true;
}

}  // namespace decarg
