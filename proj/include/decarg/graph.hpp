#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "decarg/aba.hpp"
#include "decarg/decision.hpp"
#include "decarg/mapping.hpp"

namespace decarg {

enum class NodeKind { Decision, Intermediate, Goal };
enum class EdgeKind { Strict, Defeasible };

struct Edge {
    Id from;
    Id to;
    int tag = 1;
    EdgeKind kind = EdgeKind::Strict;

    bool operator==(const Edge&) const = default;
    auto operator<=>(const Edge&) const = default;
};

// Horn implication body -> head over belief-base atoms.
struct Implication {
    std::vector<Sentence> body;
    Sentence head;

    bool operator==(const Implication&) const = default;
};

struct BeliefBase {
    std::vector<Implication> implications;

    bool operator==(const BeliefBase&) const = default;
};

// The atom ¬dEdge(from,to,tag) whose entailment blocks a defeasible edge.
Sentence blocking_atom(const Edge& e);

class Dg {
public:
    static Dg validate(std::vector<Id> decisions, std::vector<Id> intermediates, std::vector<Id> goals,
                       std::vector<Edge> edges, BeliefBase belief_base = {});

    const std::vector<Id>& decisions() const { return decisions_; }
    const std::vector<Id>& intermediates() const { return intermediates_; }
    const std::vector<Id>& goals() const { return goals_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const BeliefBase& belief_base() const { return belief_base_; }
    std::optional<NodeKind> kind_of(const Id& n) const;
    const Edge* find_edge(const Id& from, const Id& to) const;

    bool operator==(const Dg&) const = default;

private:
    std::vector<Id> decisions_, intermediates_, goals_;
    std::vector<Edge> edges_;  // declaration order
    BeliefBase belief_base_;
    std::map<Id, NodeKind> kinds_;
};

class Pdg {
public:
    static Pdg validate(Dg dg, GoalSetPreference preference);

    const Dg& dg() const { return dg_; }
    const GoalSetPreference& preference() const { return preference_; }

    bool operator==(const Pdg&) const = default;

private:
    Pdg(Dg dg, GoalSetPreference p) : dg_(std::move(dg)), preference_(std::move(p)) {}
    Dg dg_;
    GoalSetPreference preference_;
};

std::set<Sentence> mp_closure(const BeliefBase& bb);
bool mp_entails(const BeliefBase& bb, const Sentence& atom);

std::vector<Edge> blocked_edges(const Dg& dg);

// Nodes reachable from a node set. A singleton decision set follows the
// core ABA encoding: a direct unblocked edge reaches its target on its own.
std::set<Id> reachable_set(const Dg& dg, const std::set<Id>& from);
bool reachable(const Dg& dg, const std::set<Id>& from, const Id& n);
bool meets_dg(const Dg& dg, const Id& d, const Id& g);

Adf dg_to_adf(const Dg& dg);
Pdf pdg_to_pdf(const Pdg& pdg);
Dg adf_to_dg(const Adf& adf);

AbaFramework core_dg_aba(const Dg& dg);
MappedFramework criterion_aba_dg(const Dg& dg, Criterion c);
MappedFramework preferred_set_aba_pdg(const Pdg& pdg, PsEncoding encoding = PsEncoding::Guarded);

}  // namespace decarg
