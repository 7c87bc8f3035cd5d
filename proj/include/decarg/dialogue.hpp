#pragma once

#include <string>

#include "decarg/decision.hpp"
#include "decarg/dispute.hpp"
#include "decarg/flat.hpp"
#include "decarg/graph.hpp"

namespace decarg {

enum class Verdict { Satisfies, Violates };
enum class SourceKind { Adf, Pdf, Dg, Pdg };

const char* verdict_name(Verdict v);  // "satisfies" / "violates"
const char* source_kind_name(SourceKind k);

// A least-assumption tree when the decision meets the criterion, otherwise a
// best-effort tree, for the query argument {q(d)} |- q(d).
struct DialogicalExplanation {
    Id decision;
    Criterion criterion;
    Verdict verdict;
    DisputeTree tree;
    SourceKind source;
};

DialogicalExplanation dialogical_explain(const Adf& adf, Criterion c, const Id& d);
DialogicalExplanation dialogical_explain(const Pdf& pdf, Criterion c, const Id& d);
DialogicalExplanation dialogical_explain(const Dg& dg, Criterion c, const Id& d);
DialogicalExplanation dialogical_explain(const Pdg& pdg, Criterion c, const Id& d);

// Reads a flat explanation off the tree. ADF/PDF sources scan leaves;
// DG/PDG sources ask whether a node is an opponent leaf or one's ancestor.
FlatExplanation flat_from_tree(const DialogicalExplanation& e);

// Plain-language reading of one argument claim.
std::string describe(const Sentence& claim);

std::string render_dialogue(const DialogicalExplanation& e);
std::string render_dot(const DialogicalExplanation& e);
std::string render_dot(const Dg& dg);
std::string render_tree_json(const DialogicalExplanation& e);

}  // namespace decarg
