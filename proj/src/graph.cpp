#include "decarg/graph.hpp"

#include <algorithm>
#include <functional>

#include "decarg/error.hpp"

namespace decarg {

namespace {

const std::set<std::string>& reserved_functors() {
    static const std::set<std::string> r = [] {
        std::set<std::string> s = mapping_vocabulary();
        s.insert({"edge", "reach", "unreachableSib", "dEdge"});
        return s;
    }();
    return r;
}

bool is_blocking_shape(const Sentence& s) { return s.negated && s.functor == "dEdge" && s.args.size() == 3; }

Sentence edge_atom(const Edge& e) { return {"edge", {e.from, e.to, std::to_string(e.tag)}}; }
Sentence dedge_atom(const Edge& e) { return {"dEdge", {e.from, e.to, std::to_string(e.tag)}}; }
Sentence reach_atom(const Id& a, const Id& b, bool neg = false) { return {"reach", {a, b}, neg}; }
Sentence unreachable_sib(const Id& n3, const Id& n2, int t, const Id& n1, bool neg) {
    return {"unreachableSib", {n3, n2, std::to_string(t), n1}, neg};
}

}  // namespace

Sentence blocking_atom(const Edge& e) { return {"dEdge", {e.from, e.to, std::to_string(e.tag)}, true}; }

Dg Dg::validate(std::vector<Id> decisions, std::vector<Id> intermediates, std::vector<Id> goals,
                std::vector<Edge> edges, BeliefBase belief_base) {
    if (decisions.empty()) throw Error(ErrorCode::EmptyDecisions, "no decision nodes");
    if (goals.empty()) throw Error(ErrorCode::EmptyGoals, "no goal nodes");
    Dg g;
    auto add = [&](const std::vector<Id>& ids, NodeKind k) {
        for (const auto& id : ids) {
            if (!is_valid_identifier(id)) throw Error(ErrorCode::InvalidIdentifier, "'" + id + "'");
            if (!g.kinds_.emplace(id, k).second) throw Error(ErrorCode::DuplicateId, id);
        }
    };
    add(decisions, NodeKind::Decision);
    add(intermediates, NodeKind::Intermediate);
    add(goals, NodeKind::Goal);

    std::set<std::pair<Id, Id>> seen;
    std::map<Id, std::vector<Id>> succ;
    for (const auto& e : edges) {
        auto from = g.kinds_.find(e.from);
        auto to = g.kinds_.find(e.to);
        if (from == g.kinds_.end()) throw Error(ErrorCode::UnknownNode, e.from);
        if (to == g.kinds_.end()) throw Error(ErrorCode::UnknownNode, e.to);
        if (from->second == NodeKind::Goal || to->second == NodeKind::Decision)
            throw Error(ErrorCode::InvalidGraph, "edge " + e.from + " -> " + e.to + " has the wrong node kinds");
        if (e.tag < 1) throw Error(ErrorCode::InvalidGraph, "edge " + e.from + " -> " + e.to + " has tag < 1");
        if (!seen.insert({e.from, e.to}).second)
            throw Error(ErrorCode::InvalidGraph, "duplicate edge " + e.from + " -> " + e.to);
        succ[e.from].push_back(e.to);
    }
    std::map<Id, int> color;
    std::function<void(const Id&)> visit = [&](const Id& n) {
        color[n] = 1;
        for (const auto& m : succ[n]) {
            if (color[m] == 1) throw Error(ErrorCode::CyclicGraph, "cycle through " + m);
            if (color[m] == 0) visit(m);
        }
        color[n] = 2;
    };
    for (const auto& [n, k] : g.kinds_)
        if (color[n] == 0) visit(n);

    auto check_atom = [](const Sentence& s) {
        if (is_blocking_shape(s)) return;
        if (reserved_functors().count(s.functor))
            throw Error(ErrorCode::InvalidGraph, "belief-base atom " + s.str() + " uses a reserved predicate");
    };
    std::map<Sentence, std::vector<Sentence>> deps;
    for (const auto& imp : belief_base.implications) {
        check_atom(imp.head);
        for (const auto& b : imp.body) {
            check_atom(b);
            deps[imp.head].push_back(b);
        }
    }
    // Implications become ABA rules, so their dependency graph must be acyclic.
    std::map<Sentence, int> bcolor;
    std::function<void(const Sentence&)> bvisit = [&](const Sentence& s) {
        bcolor[s] = 1;
        for (const auto& b : deps[s]) {
            if (bcolor[b] == 1) throw Error(ErrorCode::InvalidGraph, "cyclic belief base through " + b.str());
            if (bcolor[b] == 0) bvisit(b);
        }
        bcolor[s] = 2;
    };
    for (const auto& imp : belief_base.implications)
        if (bcolor[imp.head] == 0) bvisit(imp.head);

    g.decisions_ = std::move(decisions);
    g.intermediates_ = std::move(intermediates);
    g.goals_ = std::move(goals);
    g.edges_ = std::move(edges);
    g.belief_base_ = std::move(belief_base);
    return g;
}

std::optional<NodeKind> Dg::kind_of(const Id& n) const {
    auto it = kinds_.find(n);
    if (it == kinds_.end()) return std::nullopt;
    return it->second;
}

const Edge* Dg::find_edge(const Id& from, const Id& to) const {
    for (const auto& e : edges_)
        if (e.from == from && e.to == to) return &e;
    return nullptr;
}

Pdg Pdg::validate(Dg dg, GoalSetPreference preference) {
    GoalSet universe(dg.goals().begin(), dg.goals().end());
    for (const auto& [a, b] : preference.stated())
        if (!is_subset(a, universe) || !is_subset(b, universe))
            throw Error(ErrorCode::InvalidPreference, "preference over non-goal nodes");
    return Pdg(std::move(dg), std::move(preference));
}

std::set<Sentence> mp_closure(const BeliefBase& bb) {
    std::set<Sentence> known;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& imp : bb.implications) {
            if (known.count(imp.head)) continue;
            bool fire = std::all_of(imp.body.begin(), imp.body.end(), [&](const Sentence& b) { return known.count(b) != 0; });
            if (fire) {
                known.insert(imp.head);
                changed = true;
            }
        }
    }
    return known;
}

bool mp_entails(const BeliefBase& bb, const Sentence& atom) { return mp_closure(bb).count(atom) != 0; }

std::vector<Edge> blocked_edges(const Dg& dg) {
    auto closure = mp_closure(dg.belief_base());
    std::vector<Edge> out;
    for (const auto& e : dg.edges())
        if (e.kind == EdgeKind::Defeasible && closure.count(blocking_atom(e))) out.push_back(e);
    return out;
}

std::set<Id> reachable_set(const Dg& dg, const std::set<Id>& from) {
    auto blocked = blocked_edges(dg);
    auto is_blocked = [&](const Edge& e) { return std::find(blocked.begin(), blocked.end(), e) != blocked.end(); };
    // groups[n][k] = unblocked tag-k sources of n
    std::map<Id, std::map<int, std::set<Id>>> groups;
    for (const auto& e : dg.edges())
        if (!is_blocked(e)) groups[e.to][e.tag].insert(e.from);

    bool single_decision = from.size() == 1 && dg.kind_of(*from.begin()) == NodeKind::Decision;
    std::set<Id> reached;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& [n, by_tag] : groups) {
            if (reached.count(n)) continue;
            bool hit = false;
            if (single_decision) {
                const Id& d = *from.begin();
                const Edge* direct = dg.find_edge(d, n);
                if (direct) {
                    hit = !is_blocked(*direct);
                } else {
                    for (const auto& [k, srcs] : by_tag)
                        hit = hit || std::includes(reached.begin(), reached.end(), srcs.begin(), srcs.end());
                }
            } else {
                for (const auto& [k, srcs] : by_tag)
                    hit = hit || srcs == from || std::includes(reached.begin(), reached.end(), srcs.begin(), srcs.end());
            }
            if (hit) {
                reached.insert(n);
                changed = true;
            }
        }
    }
    return reached;
}

bool reachable(const Dg& dg, const std::set<Id>& from, const Id& n) {
    for (const auto& f : from)
        if (!dg.kind_of(f)) throw Error(ErrorCode::UnknownNode, f);
    if (!dg.kind_of(n)) throw Error(ErrorCode::UnknownNode, n);
    return reachable_set(dg, from).count(n) != 0;
}

bool meets_dg(const Dg& dg, const Id& d, const Id& g) {
    if (dg.kind_of(d) != NodeKind::Decision) throw Error(ErrorCode::UnknownNode, d + " is not a decision node");
    if (dg.kind_of(g) != NodeKind::Goal) throw Error(ErrorCode::UnknownNode, g + " is not a goal node");
    return reachable(dg, {d}, g);
}

Adf dg_to_adf(const Dg& dg) {
    std::map<Id, GoalSet> gamma;
    for (const auto& d : dg.decisions()) {
        auto r = reachable_set(dg, {d});
        auto& gs = gamma[d];
        for (const auto& g : dg.goals())
            if (r.count(g)) gs.insert(g);
    }
    return Adf::validate(dg.decisions(), dg.goals(), std::move(gamma));
}

Pdf pdg_to_pdf(const Pdg& pdg) { return Pdf::validate(dg_to_adf(pdg.dg()), pdg.preference()); }

Dg adf_to_dg(const Adf& adf) {
    std::vector<Edge> edges;
    for (const auto& d : adf.decisions())
        for (const auto& g : adf.goals())
            if (adf.meets(d, g)) edges.push_back({d, g, 1, EdgeKind::Strict});
    return Dg::validate(adf.decisions(), {}, adf.goals(), std::move(edges));
}

AbaFramework core_dg_aba(const Dg& dg) {
    std::vector<Rule> rules;
    std::set<Sentence> asms;
    std::map<Sentence, std::set<Sentence>> con;

    for (const auto& e : dg.edges()) {
        if (e.kind == EdgeKind::Strict) {
            rules.push_back({edge_atom(e), {}});
        } else {
            asms.insert(dedge_atom(e));
            con[dedge_atom(e)] = {blocking_atom(e)};
            rules.push_back({edge_atom(e), {dedge_atom(e)}});
        }
        rules.push_back({reach_atom(e.from, e.to), {edge_atom(e)}});
    }
    for (const auto& imp : dg.belief_base().implications) rules.push_back({imp.head, imp.body});

    std::map<Id, std::vector<Id>> succ;
    for (const auto& e : dg.edges()) succ[e.from].push_back(e.to);
    auto is_decision = [&](const Id& n) { return dg.kind_of(n) == NodeKind::Decision; };

    for (const auto& d : dg.decisions()) {
        // Nodes graph-reachable from d over any edges; other intermediates can
        // never be reached from d, so their recursive reach rules are omitted.
        std::set<Id> downstream;
        std::vector<Id> stack{d};
        while (!stack.empty()) {
            Id n = stack.back();
            stack.pop_back();
            for (const auto& m : succ[n])
                if (downstream.insert(m).second) stack.push_back(m);
        }
        for (const auto& e : dg.edges()) {
            const Id& n3 = e.from;
            const Id& n2 = e.to;
            if (is_decision(n3) || n3 == d || n2 == d || dg.find_edge(d, n2) || !downstream.count(n3)) continue;
            Sentence guard = unreachable_sib(n3, n2, e.tag, d, true);
            rules.push_back({reach_atom(d, n2), {reach_atom(d, n3), edge_atom(e), guard}});
            asms.insert(guard);
            con[guard] = {unreachable_sib(n3, n2, e.tag, d, false)};
            for (const auto& sib : dg.edges()) {
                if (sib.to != n2 || sib.tag != e.tag || sib.from == n3) continue;
                Sentence not_reach = reach_atom(d, sib.from, true);
                rules.push_back({unreachable_sib(n3, n2, e.tag, d, false), {edge_atom(sib), not_reach}});
                asms.insert(not_reach);
                con[not_reach] = {reach_atom(d, sib.from)};
            }
        }
        for (const auto& g : dg.goals()) {
            rules.push_back({atoms::met(d, g), {reach_atom(d, g)}});
            asms.insert(atoms::not_met(d, g));
            con[atoms::not_met(d, g)] = {atoms::met(d, g)};
        }
    }
    return AbaFramework::validate(std::move(rules), std::move(asms), std::move(con));
}

MappedFramework criterion_aba_dg(const Dg& dg, Criterion c) {
    if (c == Criterion::PreferredSet) throw Error(ErrorCode::CriterionMismatch, "preferred-set needs a PDG");
    MappedFramework m{core_dg_aba(dg).merged(criterion_component(c, dg.decisions(), dg.goals())), c, {}};
    for (const auto& d : dg.decisions()) m.query[d] = atoms::query_for(c, d);
    return m;
}

MappedFramework preferred_set_aba_pdg(const Pdg& pdg, PsEncoding encoding) {
    const Dg& dg = pdg.dg();
    MappedFramework m{core_dg_aba(dg).merged(preferred_set_component(dg.decisions(), dg.goals(), pdg.preference(), encoding)),
                      Criterion::PreferredSet,
                      {}};
    for (const auto& d : dg.decisions()) m.query[d] = atoms::query_for(Criterion::PreferredSet, d);
    return m;
}

}  // namespace decarg
