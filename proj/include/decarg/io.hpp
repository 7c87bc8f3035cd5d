#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "decarg/decision.hpp"
#include "decarg/dialogue.hpp"
#include "decarg/flat.hpp"
#include "decarg/graph.hpp"
#include "decarg/mapping.hpp"

namespace decarg {

using Problem = std::variant<Adf, Pdf, Dg, Pdg>;

const char* problem_kind(const Problem& p);  // "adf", "pdf", "dg", "pdg"

// Schema errors carry "line L, column C" of the offending member when it
// can be located in the text.
Problem parse_problem_text(std::string_view text);
Problem parse_problem(const std::string& path);  // IoError when unreadable

std::string serialize_problem(const Problem& p);

std::string flat_to_json(const FlatExplanation& e);

std::string read_file(const std::string& path);

// Dispatch over the problem kind. Graphs are read through dg_to_adf and
// pdg_to_pdf; the preferred-set criterion needs a pdf or pdg and raises
// CriterionMismatch otherwise.
std::vector<Id> problem_decisions(const Problem& p);
std::vector<Id> decide(const Problem& p, Criterion c);
FlatExplanation flat_explain(const Problem& p, const Id& d, Criterion c);
bool check_flat_explanation(const Problem& p, const Id& d, const FlatExplanation& e);
MappedFramework mapped_framework(const Problem& p, Criterion c, PsEncoding encoding = PsEncoding::Guarded);
DialogicalExplanation dialogical_explain(const Problem& p, Criterion c, const Id& d);

}  // namespace decarg
