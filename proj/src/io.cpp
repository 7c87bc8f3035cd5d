#include "decarg/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "decarg/error.hpp"

namespace decarg {

using nlohmann::json;
using ojson = nlohmann::ordered_json;

const char* problem_kind(const Problem& p) {
    static const char* names[] = {"adf", "pdf", "dg", "pdg"};
    return names[p.index()];
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::IoError, "cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

namespace {

std::string line_col(std::string_view text, std::size_t offset) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

// Walks the problem document and reports schema errors at the member being
// read. Members are located by scanning for their keys in document order.
class Reader {
public:
    explicit Reader(std::string_view text) : text_(text) {}

    [[noreturn]] void fail(const std::vector<std::string>& path, const std::string& msg) const {
        std::size_t pos = 0;
        bool found = !path.empty();
        for (const auto& key : path) {
            auto p = text_.find("\"" + key + "\"", pos);
            if (p == std::string_view::npos) {
                found = false;
                break;
            }
            pos = p;
        }
        std::string where = found ? line_col(text_, pos) + ": " : "";
        std::string dotted;
        for (const auto& k : path) dotted += (dotted.empty() ? "" : ".") + k;
        throw Error(ErrorCode::SchemaError, where + (dotted.empty() ? "" : dotted + ": ") + msg);
    }

    const json& member(const json& obj, const std::vector<std::string>& path) const {
        const std::string& key = path.back();
        auto it = obj.find(key);
        if (it == obj.end()) {
            std::vector<std::string> parent(path.begin(), path.end() - 1);
            fail(parent, "missing member \"" + key + "\"");
        }
        return *it;
    }

    std::string string(const json& v, const std::vector<std::string>& path) const {
        if (!v.is_string()) fail(path, "expected a string");
        return v.get<std::string>();
    }

    std::vector<std::string> strings(const json& v, const std::vector<std::string>& path) const {
        if (!v.is_array()) fail(path, "expected an array of strings");
        std::vector<std::string> out;
        for (const auto& x : v) out.push_back(string(x, path));
        return out;
    }

    GoalSet goal_set(const json& v, const std::vector<std::string>& path) const {
        auto xs = strings(v, path);
        return {xs.begin(), xs.end()};
    }

    void allow_only(const json& obj, std::initializer_list<const char*> keys, const std::vector<std::string>& path) const {
        for (auto it = obj.begin(); it != obj.end(); ++it) {
            bool ok = false;
            for (const char* k : keys) ok = ok || it.key() == k;
            if (!ok) {
                auto p = path;
                p.push_back(it.key());
                fail(p, "unknown member");
            }
        }
    }

private:
    std::string_view text_;
};

GoalSetPreference read_preference(const Reader& r, const json& doc, const GoalSet& universe) {
    const json& arr = r.member(doc, {"preference"});
    if (!arr.is_array()) r.fail({"preference"}, "expected an array");
    std::vector<std::pair<GoalSet, GoalSet>> pairs;
    for (const auto& p : arr) {
        if (!p.is_object()) r.fail({"preference"}, "expected {prefer, over} objects");
        r.allow_only(p, {"prefer", "over"}, {"preference"});
        pairs.push_back({r.goal_set(r.member(p, {"preference", "prefer"}), {"preference", "prefer"}),
                         r.goal_set(r.member(p, {"preference", "over"}), {"preference", "over"})});
    }
    return GoalSetPreference::from_pairs(pairs, universe);
}

Adf read_adf(const Reader& r, const json& doc) {
    auto decisions = r.strings(r.member(doc, {"decisions"}), {"decisions"});
    auto goals = r.strings(r.member(doc, {"goals"}), {"goals"});
    const json& g = r.member(doc, {"gamma"});
    if (!g.is_object()) r.fail({"gamma"}, "expected an object");
    std::map<Id, GoalSet> gamma;
    for (auto it = g.begin(); it != g.end(); ++it) gamma[it.key()] = r.goal_set(it.value(), {"gamma", it.key()});
    return Adf::validate(std::move(decisions), std::move(goals), std::move(gamma));
}

Dg read_dg(const Reader& r, const json& doc) {
    auto decisions = r.strings(r.member(doc, {"decisions"}), {"decisions"});
    std::vector<Id> intermediates;
    if (doc.contains("intermediates")) intermediates = r.strings(doc["intermediates"], {"intermediates"});
    auto goals = r.strings(r.member(doc, {"goals"}), {"goals"});
    const json& es = r.member(doc, {"edges"});
    if (!es.is_array()) r.fail({"edges"}, "expected an array");
    std::vector<Edge> edges;
    for (const auto& e : es) {
        if (!e.is_object()) r.fail({"edges"}, "expected edge objects");
        r.allow_only(e, {"from", "to", "tag", "defeasible"}, {"edges"});
        Edge edge;
        edge.from = r.string(r.member(e, {"edges", "from"}), {"edges", "from"});
        edge.to = r.string(r.member(e, {"edges", "to"}), {"edges", "to"});
        if (e.contains("tag")) {
            if (!e["tag"].is_number_integer()) r.fail({"edges", "tag"}, "expected an integer");
            edge.tag = e["tag"].get<int>();
        }
        if (e.contains("defeasible")) {
            if (!e["defeasible"].is_boolean()) r.fail({"edges", "defeasible"}, "expected a boolean");
            edge.kind = e["defeasible"].get<bool>() ? EdgeKind::Defeasible : EdgeKind::Strict;
        }
        edges.push_back(std::move(edge));
    }
    BeliefBase bb;
    if (doc.contains("beliefBase")) {
        const json& imps = doc["beliefBase"];
        if (!imps.is_array()) r.fail({"beliefBase"}, "expected an array");
        for (const auto& imp : imps) {
            if (!imp.is_object()) r.fail({"beliefBase"}, "expected {body, head} objects");
            r.allow_only(imp, {"body", "head"}, {"beliefBase"});
            Implication out;
            try {
                if (imp.contains("body"))
                    for (const auto& b : r.strings(imp["body"], {"beliefBase", "body"})) out.body.push_back(Sentence::parse(b));
                out.head = Sentence::parse(r.string(r.member(imp, {"beliefBase", "head"}), {"beliefBase", "head"}));
            } catch (const Error& e) {
                if (e.code() == ErrorCode::SchemaError) throw;
                r.fail({"beliefBase"}, e.what());
            }
            bb.implications.push_back(std::move(out));
        }
    }
    return Dg::validate(std::move(decisions), std::move(intermediates), std::move(goals), std::move(edges),
                        std::move(bb));
}

}  // namespace

Problem parse_problem_text(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        std::size_t at = e.byte > 0 ? e.byte - 1 : 0;
        throw Error(ErrorCode::SchemaError, line_col(text, at) + ": invalid JSON");
    }
    Reader r(text);
    if (!doc.is_object()) r.fail({}, "top level must be an object");
    std::string kind = r.string(r.member(doc, {"kind"}), {"kind"});
    if (kind == "adf") {
        r.allow_only(doc, {"kind", "decisions", "goals", "gamma"}, {});
        return read_adf(r, doc);
    }
    if (kind == "pdf") {
        r.allow_only(doc, {"kind", "decisions", "goals", "gamma", "preference"}, {});
        Adf adf = read_adf(r, doc);
        auto pref = read_preference(r, doc, adf.goal_set());
        return Pdf::validate(std::move(adf), std::move(pref));
    }
    if (kind == "dg") {
        r.allow_only(doc, {"kind", "decisions", "intermediates", "goals", "edges", "beliefBase"}, {});
        return read_dg(r, doc);
    }
    if (kind == "pdg") {
        r.allow_only(doc, {"kind", "decisions", "intermediates", "goals", "edges", "beliefBase", "preference"}, {});
        Dg dg = read_dg(r, doc);
        auto pref = read_preference(r, doc, GoalSet(dg.goals().begin(), dg.goals().end()));
        return Pdg::validate(std::move(dg), std::move(pref));
    }
    r.fail({"kind"}, "unknown kind \"" + kind + "\"");
}

Problem parse_problem(const std::string& path) { return parse_problem_text(read_file(path)); }

namespace {

ojson set_json(const GoalSet& s) { return ojson(std::vector<std::string>(s.begin(), s.end())); }

void write_adf(ojson& j, const Adf& adf) {
    j["decisions"] = adf.decisions();
    j["goals"] = adf.goals();
    ojson gamma = ojson::object();
    for (const auto& d : adf.decisions()) gamma[d] = set_json(adf.gamma(d));
    j["gamma"] = gamma;
}

void write_preference(ojson& j, const GoalSetPreference& p) {
    ojson arr = ojson::array();
    for (const auto& [a, b] : p.stated()) arr.push_back({{"prefer", set_json(a)}, {"over", set_json(b)}});
    j["preference"] = arr;
}

void write_dg(ojson& j, const Dg& dg) {
    j["decisions"] = dg.decisions();
    j["intermediates"] = dg.intermediates();
    j["goals"] = dg.goals();
    ojson edges = ojson::array();
    for (const auto& e : dg.edges())
        edges.push_back({{"from", e.from}, {"to", e.to}, {"tag", e.tag}, {"defeasible", e.kind == EdgeKind::Defeasible}});
    j["edges"] = edges;
    ojson bb = ojson::array();
    for (const auto& imp : dg.belief_base().implications) {
        std::vector<std::string> body;
        for (const auto& b : imp.body) body.push_back(b.str());
        bb.push_back({{"body", body}, {"head", imp.head.str()}});
    }
    j["beliefBase"] = bb;
}

}  // namespace

std::string serialize_problem(const Problem& p) {
    ojson j;
    j["kind"] = problem_kind(p);
    if (auto* a = std::get_if<Adf>(&p)) write_adf(j, *a);
    if (auto* a = std::get_if<Pdf>(&p)) {
        write_adf(j, a->adf());
        write_preference(j, a->preference());
    }
    if (auto* g = std::get_if<Dg>(&p)) write_dg(j, *g);
    if (auto* g = std::get_if<Pdg>(&p)) {
        write_dg(j, g->dg());
        write_preference(j, g->preference());
    }
    return j.dump(2) + "\n";
}

std::string flat_to_json(const FlatExplanation& e) {
    ojson j;
    j["kind"] = std::string(flat_kind(e));
    j["criterion"] = criterion_name(flat_criterion(e));
    j["positive"] = is_positive(e);
    std::visit(
        [&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, SdPos> || std::is_same_v<T, SdNeg>) {
                j["goals"] = set_json(x.goals);
            } else if constexpr (std::is_same_v<T, DPos>) {
                j["met"] = set_json(x.met);
                j["unmet"] = set_json(x.unmet);
            } else if constexpr (std::is_same_v<T, DNeg>) {
                ojson pairs = ojson::array();
                for (const auto& [d, g] : x.pairs) pairs.push_back({{"decision", d}, {"goal", g}});
                j["pairs"] = pairs;
            } else if constexpr (std::is_same_v<T, WdPos>) {
                j["core"] = set_json(x.core);
                ojson w = ojson::array();
                for (const auto& [g, d] : x.witnesses) w.push_back({{"goal", g}, {"decision", d}});
                j["witnesses"] = w;
            } else if constexpr (std::is_same_v<T, PsPos>) {
                j["core"] = set_json(x.core);
                ojson w = ojson::array();
                for (const auto& [s, d] : x.witnesses) w.push_back({{"goals", set_json(s)}, {"decision", d}});
                j["witnesses"] = w;
            } else {
                j["decisions"] = std::vector<std::string>(x.decisions.begin(), x.decisions.end());
            }
        },
        e);
    return j.dump(2) + "\n";
}

namespace {

Adf as_adf(const Problem& p) {
    switch (p.index()) {
        case 0: return std::get<Adf>(p);
        case 1: return std::get<Pdf>(p).adf();
        case 2: return dg_to_adf(std::get<Dg>(p));
        default: return dg_to_adf(std::get<Pdg>(p).dg());
    }
}

Pdf as_pdf(const Problem& p) {
    if (auto* x = std::get_if<Pdf>(&p)) return *x;
    if (auto* x = std::get_if<Pdg>(&p)) return pdg_to_pdf(*x);
    throw Error(ErrorCode::CriterionMismatch, std::string("ps needs a pdf or pdg, not ") + problem_kind(p));
}

}  // namespace

std::vector<Id> problem_decisions(const Problem& p) {
    if (auto* x = std::get_if<Adf>(&p)) return x->decisions();
    if (auto* x = std::get_if<Pdf>(&p)) return x->adf().decisions();
    if (auto* x = std::get_if<Dg>(&p)) return x->decisions();
    return std::get<Pdg>(p).dg().decisions();
}

std::vector<Id> decide(const Problem& p, Criterion c) {
    if (c == Criterion::PreferredSet) return preferred_set_decisions(as_pdf(p));
    return evaluate(as_adf(p), c);
}

FlatExplanation flat_explain(const Problem& p, const Id& d, Criterion c) {
    auto ds = problem_decisions(p);
    if (std::find(ds.begin(), ds.end(), d) == ds.end()) throw Error(ErrorCode::UnknownDecision, d);
    if (c == Criterion::PreferredSet) return flat_explain_preferred(as_pdf(p), d);
    return flat_explain(as_adf(p), d, c);
}

bool check_flat_explanation(const Problem& p, const Id& d, const FlatExplanation& e) {
    if (flat_criterion(e) == Criterion::PreferredSet) return check_flat_explanation(as_pdf(p), d, e);
    return check_flat_explanation(as_adf(p), d, e);
}

MappedFramework mapped_framework(const Problem& p, Criterion c, PsEncoding encoding) {
    if (auto* x = std::get_if<Adf>(&p)) return criterion_aba(*x, c);
    if (auto* x = std::get_if<Pdf>(&p)) return criterion_aba(*x, c, encoding);
    if (auto* x = std::get_if<Dg>(&p)) return criterion_aba_dg(*x, c);
    const auto& pdg = std::get<Pdg>(p);
    return c == Criterion::PreferredSet ? preferred_set_aba_pdg(pdg, encoding) : criterion_aba_dg(pdg.dg(), c);
}

DialogicalExplanation dialogical_explain(const Problem& p, Criterion c, const Id& d) {
    return std::visit([&](const auto& x) { return dialogical_explain(x, c, d); }, p);
}

}  // namespace decarg
