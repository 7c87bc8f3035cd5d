#include "decarg/dialogue.hpp"

#include <functional>

#include <json.hpp>

#include "decarg/error.hpp"
#include "decarg/mapping.hpp"

namespace decarg {

const char* verdict_name(Verdict v) { return v == Verdict::Satisfies ? "satisfies" : "violates"; }

const char* source_kind_name(SourceKind k) {
    switch (k) {
        case SourceKind::Adf: return "adf";
        case SourceKind::Pdf: return "pdf";
        case SourceKind::Dg: return "dg";
        case SourceKind::Pdg: return "pdg";
    }
    return "?";
}

namespace {

DialogicalExplanation explain_mapped(const MappedFramework& m, const Id& d, SourceKind source) {
    auto q = m.query.find(d);
    if (q == m.query.end()) throw Error(ErrorCode::UnknownDecision, d);
    auto r = std::make_shared<const Reasoner>(m.framework);
    auto idx = r->find(q->second, {q->second});
    if (!idx) throw Error(ErrorCode::UnknownDecision, "no query argument for " + d);
    if (r->admissible_superset(*idx))
        return {d, m.criterion, Verdict::Satisfies, least_assumption_tree(r, *idx), source};
    if (source == SourceKind::Adf || source == SourceKind::Pdf)
        return {d, m.criterion, Verdict::Violates, best_effort_tree(r, *idx), source};
    // A blocked edge can end a failing branch just as minimally as a rival
    // meeting the goal; the latter is what the flat reading needs, so trees
    // without blocking leaves are tried first.
    auto blocking = [&](std::size_t a) {
        const auto& c = r->argument(a).claim;
        return c.negated && c.functor == "dEdge";
    };
    return {d, m.criterion, Verdict::Violates, best_effort_tree(r, *idx, blocking), source};
}

}  // namespace

DialogicalExplanation dialogical_explain(const Adf& adf, Criterion c, const Id& d) {
    if (!adf.has_decision(d)) throw Error(ErrorCode::UnknownDecision, d);
    return explain_mapped(criterion_aba(adf, c), d, SourceKind::Adf);
}

DialogicalExplanation dialogical_explain(const Pdf& pdf, Criterion c, const Id& d) {
    if (!pdf.adf().has_decision(d)) throw Error(ErrorCode::UnknownDecision, d);
    return explain_mapped(criterion_aba(pdf, c), d, SourceKind::Pdf);
}

DialogicalExplanation dialogical_explain(const Dg& dg, Criterion c, const Id& d) {
    if (dg.kind_of(d) != NodeKind::Decision) throw Error(ErrorCode::UnknownDecision, d);
    return explain_mapped(criterion_aba_dg(dg, c), d, SourceKind::Dg);
}

DialogicalExplanation dialogical_explain(const Pdg& pdg, Criterion c, const Id& d) {
    if (pdg.dg().kind_of(d) != NodeKind::Decision) throw Error(ErrorCode::UnknownDecision, d);
    auto m = c == Criterion::PreferredSet ? preferred_set_aba_pdg(pdg) : criterion_aba_dg(pdg.dg(), c);
    return explain_mapped(m, d, SourceKind::Pdg);
}

namespace {

GoalSet parse_goal_set_name(const std::string& name) {
    GoalSet out;
    if (name.size() < 2) return out;
    std::string body = name.substr(1, name.size() - 2);
    std::size_t start = 0;
    while (start < body.size()) {
        auto plus = body.find('+', start);
        if (plus == std::string::npos) plus = body.size();
        out.insert(body.substr(start, plus - start));
        start = plus + 1;
    }
    return out;
}

bool is(const Sentence& s, const char* functor, std::size_t arity) {
    return !s.negated && s.functor == functor && s.args.size() == arity;
}

// Support members with the given functor whose first argument is `first`.
std::vector<const Sentence*> support_atoms(const AssumptionSet& support, const char* functor, const Id& first) {
    std::vector<const Sentence*> out;
    for (const auto& a : support)
        if (!a.negated && a.functor == functor && !a.args.empty() && a.args[0] == first) out.push_back(&a);
    return out;
}

struct Scan {
    const DisputeTree& t;
    bool dg;
    std::vector<char> fail;

    Scan(const DisputeTree& tree, bool graph) : t(tree), dg(graph), fail(tree.size(), 0) {
        if (dg)
            for (std::size_t i = 0; i < t.size(); ++i) fail[i] = t.fails(static_cast<int>(i));
    }

    bool proponent(std::size_t i) const { return t.node(static_cast<int>(i)).player == Player::Proponent; }
    bool leaf(std::size_t i) const { return t.is_leaf(static_cast<int>(i)); }
    const Argument& arg(std::size_t i) const { return t.argument_of(static_cast<int>(i)); }

    // Proponent node counted by a positive rule: a leaf for ADF sources, a
    // node outside every failing branch for DG sources.
    bool pos_leaf(std::size_t i) const { return proponent(i) && (dg ? !fail[i] : leaf(i)); }
    bool pos_node(std::size_t i) const { return proponent(i) && (dg ? !fail[i] : true); }
    // Opponent node counted by a negative rule.
    bool neg(std::size_t i) const { return !proponent(i) && (dg ? fail[i] != 0 : leaf(i)); }
};

}  // namespace

FlatExplanation flat_from_tree(const DialogicalExplanation& e) {
    const Id& d = e.decision;
    bool dg = e.source == SourceKind::Dg || e.source == SourceKind::Pdg;
    Scan s(e.tree, dg);
    const std::size_t n = e.tree.size();
    bool yes = e.verdict == Verdict::Satisfies;

    switch (e.criterion) {
        case Criterion::StronglyDominant: {
            GoalSet g;
            for (std::size_t i = 0; i < n; ++i) {
                const auto& a = s.arg(i);
                if (yes && s.pos_leaf(i) && is(a.claim, "met", 2) && a.claim.args[0] == d) g.insert(a.claim.args[1]);
                if (!yes && s.neg(i) && is(a.claim, "notSDom", 1) && a.claim.args[0] == d)
                    for (auto* m : support_atoms(a.support, "notMet", d)) g.insert(m->args[1]);
            }
            if (yes) return SdPos{g};
            return SdNeg{g};
        }
        case Criterion::Dominant: {
            if (yes) {
                DPos out;
                for (std::size_t i = 0; i < n; ++i) {
                    if (!s.pos_leaf(i)) continue;
                    const auto& c = s.arg(i).claim;
                    if (is(c, "met", 2) && c.args[0] == d) out.met.insert(c.args[1]);
                    if (is(c, "noOthers", 2) && c.args[0] == d) out.unmet.insert(c.args[1]);
                }
                return out;
            }
            DNeg out;
            for (std::size_t i = 0; i < n; ++i) {
                const auto& c = s.arg(i).claim;
                if (s.neg(i) && is(c, "met", 2)) out.pairs.insert({c.args[0], c.args[1]});
            }
            return out;
        }
        case Criterion::WeaklyDominant: {
            if (yes) {
                WdPos out;
                for (std::size_t i = 0; i < n; ++i) {
                    if (!s.pos_node(i)) continue;
                    const auto& a = s.arg(i);
                    if (is(a.claim, "met", 2) && a.claim.args[0] == d) out.core.insert(a.claim.args[1]);
                    if (is(a.claim, "more", 2) && a.claim.args[0] == d) {
                        const Id& rival = a.claim.args[1];
                        for (auto* m : support_atoms(a.support, "notMet", rival)) {
                            out.core.insert(m->args[1]);
                            if (s.pos_leaf(i)) out.witnesses.insert({m->args[1], rival});
                        }
                    }
                }
                return out;
            }
            WdNeg out;
            for (std::size_t i = 0; i < n; ++i) {
                if (!s.neg(i)) continue;
                const auto& a = s.arg(i);
                if (!dg && is(a.claim, "met", 2) && a.claim.args[0] != d) out.decisions.insert(a.claim.args[0]);
                if (is(a.claim, "notWDom", 1) && a.claim.args[0] == d)
                    for (auto* m : support_atoms(a.support, "notMore", d)) out.decisions.insert(m->args[1]);
            }
            return out;
        }
        case Criterion::PreferredSet: {
            if (yes) {
                PsPos out;
                for (std::size_t i = 0; i < n; ++i) {
                    const auto& a = s.arg(i);
                    if (s.pos_leaf(i) && is(a.claim, "met", 2) && a.claim.args[0] == d) out.core.insert(a.claim.args[1]);
                    if (!s.pos_node(i)) continue;
                    if (is(a.claim, "better", 3) && a.claim.args[0] == d)
                        for (auto* m : support_atoms(a.support, "metSet", d))
                            out.witnesses.insert({parse_goal_set_name(m->args[1]), a.claim.args[1]});
                    // Nodes of the weakly dominant guard.
                    if (is(a.claim, "more", 2) && a.claim.args[0] == d)
                        for (auto* m : support_atoms(a.support, "notMet", a.claim.args[1]))
                            out.witnesses.insert({GoalSet{m->args[1]}, a.claim.args[1]});
                }
                return out;
            }
            PsNeg out;
            for (std::size_t i = 0; i < n; ++i) {
                const auto& a = s.arg(i);
                bool counted = s.neg(i);
                // Opponent arguments on a failing branch; for leaf-scan sources
                // this supplements the literal rule below.
                bool failing = !dg && !s.proponent(i) && e.tree.fails(static_cast<int>(i));
                if (counted && !dg && is(a.claim, "met", 2) && a.claim.args[0] != d)
                    out.decisions.insert(a.claim.args[0]);
                if ((counted || failing) && is(a.claim, "notPS", 1) && a.claim.args[0] == d) {
                    for (auto* m : support_atoms(a.support, "notBetter", d)) out.decisions.insert(m->args[1]);
                    for (auto* m : support_atoms(a.support, "notMore", d)) out.decisions.insert(m->args[1]);
                }
            }
            return out;
        }
    }
    throw Error(ErrorCode::CriterionMismatch, "unknown criterion");
}

std::string describe(const Sentence& c) {
    const auto& a = c.args;
    auto arg = [&](std::size_t i) { return i < a.size() ? a[i] : std::string("?"); };
    if (c.negated) {
        if (c.functor == "reach") return arg(1) + " is not reachable from " + arg(0);
        if (c.functor == "dEdge") return "the edge " + arg(0) + " -> " + arg(1) + " is blocked";
        if (c.functor == "unreachableSib")
            return "every tag-" + arg(2) + " partner of " + arg(0) + " into " + arg(1) + " is reachable from " + arg(3);
        return c.str();
    }
    const std::string& f = c.functor;
    if (f == "sDom") return arg(0) + " is strongly dominant";
    if (f == "notSDom") return arg(0) + " is not strongly dominant";
    if (f == "dom") return arg(0) + " is dominant";
    if (f == "notDom") return arg(0) + " is not dominant";
    if (f == "wDom") return arg(0) + " is weakly dominant";
    if (f == "notWDom") return arg(0) + " is not weakly dominant";
    if (f == "pS") return arg(0) + " is a preferred-set decision";
    if (f == "notPS") return arg(0) + " is not a preferred-set decision";
    if (f == "met") return arg(0) + " meets " + arg(1);
    if (f == "notMet") return arg(0) + " does not meet " + arg(1);
    if (f == "noOthers") return "no decision other than " + arg(0) + " meets " + arg(1);
    if (f == "more") return arg(0) + " meets a goal that " + arg(1) + " does not";
    if (f == "notMore") return arg(0) + " meets no goal that " + arg(1) + " misses";
    if (f == "metSet") return arg(0) + " meets every goal in " + arg(1);
    if (f == "notMetSet") return arg(0) + " misses a goal in " + arg(1);
    if (f == "better") return arg(0) + " answers " + arg(1) + " on " + arg(2) + " with a more preferred goal set";
    if (f == "notBetter") return arg(0) + " has no answer to " + arg(1) + " on " + arg(2);
    if (f == "pfr") return arg(0) + " is preferred over " + arg(1);
    if (f == "reach") return arg(1) + " is reachable from " + arg(0);
    if (f == "edge") return "there is an edge " + arg(0) + " -> " + arg(1) + " tagged " + arg(2);
    if (f == "dEdge") return "the edge " + arg(0) + " -> " + arg(1) + " applies";
    if (f == "unreachableSib")
        return "a tag-" + arg(2) + " partner of " + arg(0) + " into " + arg(1) + " is unreachable from " + arg(3);
    return c.str();
}

std::string render_dialogue(const DialogicalExplanation& e) {
    const auto& t = e.tree;
    std::string out;
    std::function<void(int, int)> walk = [&](int i, int depth) {
        const auto& node = t.node(i);
        const auto& a = t.argument_of(i);
        out += std::string(static_cast<std::size_t>(depth) * 2, ' ');
        out += node.player == Player::Proponent ? "P: " : "O: ";
        out += describe(a.claim);
        out += " \u2014 ";
        if (a.support.empty()) {
            out += "given";
        } else {
            out += "assume ";
            bool first = true;
            for (const auto& s : a.support) {
                if (!first) out += ", ";
                out += s.str();
                first = false;
            }
        }
        if (node.fold_ref >= 0) out += " (repeats)";
        out += '\n';
        for (int c : node.children) walk(c, depth + 1);
    };
    walk(0, 0);
    return out;
}

namespace {

std::string dot_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

}  // namespace

std::string render_dot(const DialogicalExplanation& e) {
    const auto& t = e.tree;
    std::string out = "digraph dispute {\n  rankdir=BT;\n";
    for (std::size_t i = 0; i < t.size(); ++i) {
        const auto& node = t.node(static_cast<int>(i));
        std::string label = (node.player == Player::Proponent ? "P: " : "O: ") + t.argument_of(static_cast<int>(i)).str();
        if (node.fold_ref >= 0) label += " (repeats)";
        out += "  n" + std::to_string(i) + " [shape=" + (node.player == Player::Proponent ? "box" : "ellipse") +
               ", label=" + dot_quote(label) + "];\n";
    }
    for (std::size_t i = 0; i < t.size(); ++i)
        for (int c : t.node(static_cast<int>(i)).children)
            out += "  n" + std::to_string(c) + " -> n" + std::to_string(i) + ";\n";
    return out + "}\n";
}

std::string render_dot(const Dg& dg) {
    std::string out = "digraph dg {\n";
    auto nodes = [&](const std::vector<Id>& ids, const char* shape) {
        for (const auto& n : ids) out += "  " + dot_quote(n) + " [shape=" + shape + "];\n";
    };
    nodes(dg.decisions(), "box");
    nodes(dg.intermediates(), "ellipse");
    nodes(dg.goals(), "doublecircle");
    for (const auto& e : dg.edges()) {
        out += "  " + dot_quote(e.from) + " -> " + dot_quote(e.to) + " [label=" + dot_quote(std::to_string(e.tag));
        if (e.kind == EdgeKind::Defeasible) out += ", style=dashed";
        out += "];\n";
    }
    return out + "}\n";
}

std::string render_tree_json(const DialogicalExplanation& e) {
    const auto& t = e.tree;
    nlohmann::ordered_json j;
    j["decision"] = e.decision;
    j["criterion"] = criterion_name(e.criterion);
    j["verdict"] = verdict_name(e.verdict);
    j["source"] = source_kind_name(e.source);
    j["kind"] = t.kind() == TreeKind::Admissible ? "admissible" : t.kind() == TreeKind::Maximal ? "maximal" : "other";
    auto nodes = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < t.size(); ++i) {
        const auto& node = t.node(static_cast<int>(i));
        const auto& a = t.argument_of(static_cast<int>(i));
        nlohmann::ordered_json jn;
        jn["id"] = i;
        jn["label"] = node.player == Player::Proponent ? "P" : "O";
        jn["claim"] = a.claim.str();
        auto sup = nlohmann::ordered_json::array();
        for (const auto& s : a.support) sup.push_back(s.str());
        jn["support"] = sup;
        jn["children"] = node.children;
        if (node.fold_ref >= 0) jn["repeats"] = node.fold_ref;
        if (node.culprit) jn["culprit"] = node.culprit->str();
        nodes.push_back(jn);
    }
    j["nodes"] = nodes;
    return j.dump(2) + "\n";
}

}  // namespace decarg
