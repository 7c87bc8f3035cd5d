#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "decarg/aba.hpp"
#include "decarg/decision.hpp"

namespace decarg {

// How the preferred-set component is built. Literal follows the printed
// schema only; Guarded adds the weakly dominant test as further notPS rules,
// without which a decision that is not weakly dominant can be accepted when
// no comparable set separates it from its rivals.
enum class PsEncoding { Guarded, Literal };

struct MappedFramework {
    AbaFramework framework;
    Criterion criterion;
    std::map<Id, Sentence> query;  // decision -> assumption such as sDom(d)

    Argument query_argument(const Id& d) const;
};

namespace atoms {
Sentence met(const Id& d, const Id& g);
Sentence not_met(const Id& d, const Id& g);
Sentence query_for(Criterion c, const Id& d);  // sDom(d), dom(d), wDom(d), pS(d)
}  // namespace atoms

AbaFramework core_adf_aba(const Adf& adf);

// Criterion components over plain decision and goal lists, shared by the
// ADF/PDF and the decision-graph constructions.
AbaFramework strongly_dominant_component(const std::vector<Id>& decisions, const std::vector<Id>& goals);
AbaFramework dominant_component(const std::vector<Id>& decisions, const std::vector<Id>& goals);
AbaFramework weakly_dominant_component(const std::vector<Id>& decisions, const std::vector<Id>& goals);
AbaFramework preferred_set_component(const std::vector<Id>& decisions, const std::vector<Id>& goals,
                                     const GoalSetPreference& preference,
                                     PsEncoding encoding = PsEncoding::Guarded);
AbaFramework criterion_component(Criterion c, const std::vector<Id>& decisions, const std::vector<Id>& goals,
                                 const GoalSetPreference* preference = nullptr,
                                 PsEncoding encoding = PsEncoding::Guarded);

MappedFramework strongly_dominant_aba(const Adf& adf);
MappedFramework dominant_aba(const Adf& adf);
MappedFramework weakly_dominant_aba(const Adf& adf);
MappedFramework preferred_set_aba(const Pdf& pdf, PsEncoding encoding = PsEncoding::Guarded);
MappedFramework criterion_aba(const Adf& adf, Criterion c);
MappedFramework criterion_aba(const Pdf& pdf, Criterion c, PsEncoding encoding = PsEncoding::Guarded);

// Predicate symbols a mapped framework may use.
const std::set<std::string>& mapping_vocabulary();

}  // namespace decarg
