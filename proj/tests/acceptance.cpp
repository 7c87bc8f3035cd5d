// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero when any criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "decarg/classical.hpp"
#include "decarg/dialogue.hpp"
#include "decarg/dispute.hpp"
#include "decarg/error.hpp"
#include "decarg/flat.hpp"
#include "decarg/graph.hpp"
#include "decarg/io.hpp"
#include "decarg/mapping.hpp"
#include "support/gen.hpp"
#include "support/oracle.hpp"

using namespace decarg;

namespace {

constexpr Criterion kSD = Criterion::StronglyDominant;
constexpr Criterion kD = Criterion::Dominant;
constexpr Criterion kWD = Criterion::WeaklyDominant;
constexpr Criterion kPS = Criterion::PreferredSet;
const std::vector<Criterion> kBasic{kSD, kD, kWD};

// Collects failures for one criterion; only the first few are reported.
struct Check {
    int failures = 0;
    long checks = 0;
    std::ostringstream first;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (ok) return;
        if (failures++ < 3) first << (failures > 1 ? "; " : "") << what;
    }
};

std::string join(const std::vector<Id>& ids) {
    std::string s = "{";
    for (std::size_t i = 0; i < ids.size(); ++i) s += (i ? "," : "") + ids[i];
    return s + "}";
}

std::string join(const std::set<Id>& ids) { return join(std::vector<Id>(ids.begin(), ids.end())); }

Problem load(const std::string& name) { return parse_problem(gen::fixture(name)); }

const std::vector<std::string> kProblemFixtures{
    "london_adf.json",      "two_decision_adf.json", "clean_adf.json",    "d1d2_pdf.json",
    "quiet_pdf.json",       "investment_dg.json",    "investment_strict_dg.json",
    "investment_pdg.json",  "anode_dg.json",         "anode3_dg.json",    "anode3_pdg.json"};

bool has_preference(const Problem& p) { return std::holds_alternative<Pdf>(p) || std::holds_alternative<Pdg>(p); }

std::vector<Criterion> criteria_for(const Problem& p) {
    auto cs = kBasic;
    if (has_preference(p)) cs.push_back(kPS);
    return cs;
}

// ---------------------------------------------------------------------------

void worked_examples(Check& c) {
    auto london = load("london_adf.json");
    c.expect(decide(london, kSD) == std::vector<Id>{"ic"}, "London SD");
    c.expect(flat_explain(london, "ic", kSD) == FlatExplanation{SdPos{{"cheap", "near"}}}, "SDPos ic");
    c.expect(flat_explain(london, "jh", kSD) == FlatExplanation{SdNeg{{"cheap"}}}, "SDNeg jh");
    c.expect(flat_explain(london, "ritz", kSD) == FlatExplanation{SdNeg{{"cheap", "near"}}}, "SDNeg ritz");

    auto two = load("two_decision_adf.json");
    c.expect(decide(two, kD) == std::vector<Id>{"jh"}, "two-decision D");
    c.expect(flat_explain(two, "jh", kD) == FlatExplanation{DPos{{"near"}, {"cheap"}}}, "DPos jh");
    c.expect(flat_explain(two, "ritz", kD) == FlatExplanation{DNeg{{{"jh", "near"}}}}, "DNeg ritz");

    auto clean = load("clean_adf.json");
    c.expect(decide(clean, kWD) == std::vector<Id>{"jh", "ic"}, "clean WD");
    c.expect(check_flat_explanation(clean, "jh", WdPos{{"clean"}, {{"near", "ic"}}}), "WDPos jh validates");
    c.expect(flat_explain(clean, "ritz", kWD) == FlatExplanation{WdNeg{{"jh", "ic"}}}, "WDNeg ritz");

    auto d1d2 = load("d1d2_pdf.json");
    c.expect(decide(d1d2, kPS) == std::vector<Id>{"d1"}, "d1/d2 PS");
    c.expect(flat_explain(d1d2, "d2", kPS) == FlatExplanation{PsNeg{{"d1"}}}, "PSNeg d2");

    auto quiet = load("quiet_pdf.json");
    c.expect(decide(quiet, kPS) == std::vector<Id>{"jh"}, "quiet PS");
    c.expect(flat_explain(quiet, "ic", kPS) == FlatExplanation{PsNeg{{"jh"}}}, "PSNeg ic");

    auto inv = std::get<Dg>(load("investment_dg.json"));
    auto blocked = blocked_edges(inv);
    c.expect(blocked.size() == 1 && blocked[0].from == "ic" && blocked[0].to == "50", "blocked edges");
    auto adf = dg_to_adf(inv);
    c.expect(adf.gamma("ic") == GoalSet{"convenient"}, "meets ic");
    c.expect(adf.gamma("ritz") == GoalSet{"cheap"}, "meets ritz");
    c.expect(decide(Problem{inv}, kWD) == std::vector<Id>{"ic", "ritz"}, "investment WD");
    c.expect(gen::aba_select(criterion_aba_dg(inv, kWD), inv.decisions()) == std::vector<Id>{"ic", "ritz"},
             "investment WD via ABA");

    auto pdg = std::get<Pdg>(load("investment_pdg.json"));
    c.expect(decide(Problem{pdg}, kPS) == std::vector<Id>{"ritz"}, "investment PDG PS");
    c.expect(gen::aba_select(preferred_set_aba_pdg(pdg), pdg.dg().decisions()) == std::vector<Id>{"ritz"},
             "investment PDG PS via ABA");

    auto admissions = parse_decision_table(gen::slurp(gen::fixture("admissions.csv")));
    auto conj = conjunctive_select(conjunctive_from_table(admissions));
    c.expect(conj == std::set<Id>{"A2", "A4", "A5"}, "admissions conjunctive " + join(conj));
    auto lex = lexicographic_select(lex_from_table(parse_decision_table(gen::slurp(gen::fixture("lex.csv")))));
    c.expect(lex == std::set<Id>{"d2"}, "lexicographic " + join(lex));
}

// Criterion membership against an independent oracle and against
// admissibility of the query argument.
void basic_theorems(Check& c) {
    for (const auto& adf : gen::all_adfs(3, 3)) {
        auto table = oracle::table_of(adf);
        for (auto crit : kBasic) {
            auto via_aba = gen::aba_select(criterion_aba(adf, crit), adf.decisions());
            auto direct = evaluate(adf, crit);
            auto expected = gen::filter(adf.decisions(), [&](const Id& d) {
                return crit == kSD ? oracle::strongly_dominant(table, d)
                       : crit == kD ? oracle::dominant(table, d)
                                    : oracle::weakly_dominant(table, d);
            });
            c.expect(direct == expected, std::string(criterion_name(crit)) + " core vs oracle");
            c.expect(via_aba == expected, std::string(criterion_name(crit)) + " aba vs oracle " + join(via_aba) +
                                              " != " + join(expected));
        }
    }
}

std::vector<Pdf> random_pdfs() {
    std::mt19937 rng(20240601);
    std::vector<Pdf> out;
    while (out.size() < 200) out.push_back(gen::random_pdf(rng));
    return out;
}

void preferred_set_theorem(Check& c) {
    for (const auto& pdf : random_pdfs()) {
        auto table = oracle::table_of(pdf.adf());
        auto pref = gen::oracle_preference(pdf.preference());
        auto expected = gen::filter(pdf.adf().decisions(),
                                    [&](const Id& d) { return oracle::preferred_set(table, pref, d); });
        auto direct = preferred_set_decisions(pdf);
        auto via_aba = gen::aba_select(preferred_set_aba(pdf), pdf.adf().decisions());
        c.expect(direct == expected, "core " + join(direct) + " vs oracle " + join(expected));
        c.expect(via_aba == expected, "aba " + join(via_aba) + " vs oracle " + join(expected));
    }
}

bool includes(const std::vector<Id>& big, const std::vector<Id>& small) {
    return std::all_of(small.begin(), small.end(),
                       [&](const Id& x) { return std::find(big.begin(), big.end(), x) != big.end(); });
}

void lattice(Check& c) {
    for (const auto& adf : gen::all_adfs(3, 3)) {
        auto sd = evaluate(adf, kSD), d = evaluate(adf, kD), wd = evaluate(adf, kWD);
        c.expect(includes(d, sd) && includes(wd, d), "SD <= D <= WD");
        if (!sd.empty()) c.expect(sd == d && d == wd, "SD nonempty collapses");
        if (!d.empty()) c.expect(d == wd, "D nonempty gives D = WD");
        for (const auto& x : d)
            for (const auto& y : d) c.expect(adf.gamma(x) == adf.gamma(y), "dominant decisions share goals");
        if (d.empty() && !wd.empty()) {
            bool differ = false;
            for (const auto& x : wd)
                for (const auto& y : wd) differ = differ || adf.gamma(x) != adf.gamma(y);
            c.expect(differ, "no dominant decision needs two different WD decisions");
        }
    }
}

void classical_correspondences(Check& c) {
    for (const auto& adf : gen::all_adfs(3, 3)) {
        auto table = oracle::table_of(adf);
        std::set<Id> sd, wd;
        for (const auto& d : adf.decisions()) {
            if (oracle::strongly_dominant(table, d)) sd.insert(d);
            if (oracle::weakly_dominant(table, d)) wd.insert(d);
        }
        // ADF to classical
        c.expect(conjunctive_select(conjunctive_from_adf(adf)) == sd, "conjunctive from ADF");
        c.expect(pareto_efficient(pareto_from_adf(adf)) == wd, "Pareto from ADF");

        // classical to ADF, from frameworks built here
        ConjunctiveFramework cf;
        cf.alternatives = adf.decisions();
        cf.requirements = adf.goals();
        std::set<std::string> held;
        for (const auto& d : adf.decisions())
            for (const auto& g : adf.goals()) {
                Id attr = d + "_" + g;
                cf.attributes_of[d].push_back(attr);
                cf.matching[attr] = g;
                if (table.gamma[d].count(g)) held.insert(attr);
            }
        cf.passes = [held](const Id& attr, const Id&) { return held.count(attr) != 0; };
        auto cf_sel = conjunctive_select(cf);
        c.expect(cf_sel == sd, "conjunctive direct");
        auto back = evaluate(adf_from_conjunctive(cf), kSD);
        c.expect(std::set<Id>(back.begin(), back.end()) == cf_sel, "SD of ADF from conjunctive");

        ParetoFramework pf{adf.decisions(), adf.goals(), table.gamma};
        auto pf_sel = pareto_efficient(pf);
        c.expect(pf_sel == wd, "Pareto direct");
        auto back_wd = evaluate(adf_from_pareto(pf), kWD);
        c.expect(std::set<Id>(back_wd.begin(), back_wd.end()) == pf_sel, "WD of ADF from Pareto");
    }

    std::mt19937 rng(77);
    for (int i = 0; i < 200; ++i) {
        LexFramework lf;
        int na = 1 + rng() % 4, nx = 1 + rng() % 4;
        lf.alternatives = gen::names("d", na);
        lf.attributes = gen::names("x", nx);
        std::shuffle(lf.attributes.begin(), lf.attributes.end(), rng);
        for (const auto& a : lf.alternatives) lf.has[a] = gen::random_subset(lf.attributes, rng);

        // Independent lexicographic maximum over importance-ordered bit vectors.
        std::map<Id, std::vector<int>> key;
        for (const auto& a : lf.alternatives)
            for (const auto& x : lf.attributes) key[a].push_back(lf.has[a].count(x) ? 1 : 0);
        std::vector<int> best;
        for (const auto& [a, k] : key) best = std::max(best, k);
        std::set<Id> expected;
        for (const auto& [a, k] : key)
            if (k == best) expected.insert(a);

        auto sel = lexicographic_select(lf);
        c.expect(sel == expected, "lexicographic vs oracle " + join(sel));
        auto pdf = pdf_from_lex(lf);
        auto ps = preferred_set_decisions(pdf);
        c.expect(std::set<Id>(ps.begin(), ps.end()) == sel, "PS of PDF from lexicographic");
        auto lf2 = lex_from_pdf(pdf);
        c.expect(lexicographic_select(lf2) == std::set<Id>(ps.begin(), ps.end()), "lexicographic of PDF");
    }
}

struct TreeStats {
    int checked = 0;
};

// Minimality of the returned tree among all trees for the query argument,
// when few enough arguments can take part.
void check_minimality(Check& c, const std::shared_ptr<const Reasoner>& r, std::size_t root, bool admissible,
                      const std::string& where, TreeStats& stats) {
    oracle::TreeEnumerator en(*r);
    if (en.relevant(root).size() > 12) return;
    ++stats.checked;
    auto all = en.trees(root);
    if (admissible) {
        auto t = least_assumption_tree(r, root);
        c.expect(t.kind() == TreeKind::Admissible, where + ": least-assumption tree not admissible");
        auto la = t.la();
        bool found = false;
        for (const auto& s : all) {
            if (!s.admissible()) continue;
            found = found || s.la == la;
            bool smaller = std::includes(la.begin(), la.end(), s.la.begin(), s.la.end()) && s.la != la;
            c.expect(!smaller, where + ": admissible tree with smaller LA exists");
        }
        c.expect(found, where + ": LA not among enumerated admissible trees");
    } else {
        auto t = best_effort_tree(r, root);
        c.expect(t.kind() == TreeKind::Maximal, where + ": best-effort tree not maximal");
        auto lo = t.lo_arguments();
        for (const auto& s : all) {
            c.expect(!s.admissible(), where + ": enumerator found an admissible tree");
            bool smaller = std::includes(lo.begin(), lo.end(), s.lo.begin(), s.lo.end()) && s.lo != lo;
            c.expect(!smaller, where + ": maximal tree with smaller LO exists");
        }
    }
}

void tree_contracts_for(Check& c, const MappedFramework& m, const std::vector<Id>& decisions,
                        const std::string& where, TreeStats& stats) {
    auto r = std::make_shared<const Reasoner>(m.framework);
    for (const auto& d : decisions) {
        const auto& q = m.query.at(d);
        auto root = *r->find(q, {q});
        bool admissible = r->admissible_superset(root).has_value();
        auto tree = admissible_dispute_tree(r, root);
        c.expect(tree.has_value() == admissible, where + " " + d + ": tree returned iff admissible");
        if (tree) {
            c.expect(tree->kind() == TreeKind::Admissible, where + " " + d + ": tree kind");
            c.expect(oracle::admissible_by_arguments(*r, tree->defence_set()), where + " " + d + ": defence set");
        }
        check_minimality(c, r, root, admissible, where + " " + d, stats);
    }
}

void tree_contracts(Check& c, std::string& note) {
    TreeStats stats;
    for (const auto& adf : gen::all_adfs(3, 3))
        for (auto crit : kBasic) tree_contracts_for(c, criterion_aba(adf, crit), adf.decisions(), "adf", stats);
    for (const auto& pdf : random_pdfs())
        tree_contracts_for(c, preferred_set_aba(pdf), pdf.adf().decisions(), "pdf", stats);
    for (const auto& name : kProblemFixtures) {
        auto p = load(name);
        for (auto crit : criteria_for(p))
            tree_contracts_for(c, mapped_framework(p, crit), problem_decisions(p), name, stats);
    }
    note = std::to_string(stats.checked) + " queries enumerated";
}

bool unique_kind(const FlatExplanation& e) {
    return std::holds_alternative<SdPos>(e) || std::holds_alternative<SdNeg>(e) || std::holds_alternative<DNeg>(e) ||
           std::holds_alternative<WdNeg>(e) || std::holds_alternative<PsNeg>(e);
}

void extraction_for(Check& c, const Problem& p, Criterion crit, const std::string& where) {
    bool graph = std::holds_alternative<Dg>(p) || std::holds_alternative<Pdg>(p);
    for (const auto& d : problem_decisions(p)) {
        auto e = dialogical_explain(p, crit, d);
        auto flat = flat_from_tree(e);
        std::string tag = where + " " + std::string(criterion_name(crit)) + " " + d;
        c.expect(check_flat_explanation(p, d, flat), tag + ": rejected " + to_string(flat));
        if (!graph && unique_kind(flat)) {
            auto direct = flat_explain(p, d, crit);
            c.expect(flat == direct, tag + ": " + to_string(flat) + " != " + to_string(direct));
        }
    }
}

void extraction(Check& c) {
    for (const auto& name : kProblemFixtures) {
        auto p = load(name);
        for (auto crit : criteria_for(p)) extraction_for(c, p, crit, name);
    }
    for (const auto& adf : gen::all_adfs(3, 3))
        for (auto crit : kBasic) extraction_for(c, Problem{adf}, crit, "adf");
    for (const auto& pdf : random_pdfs()) extraction_for(c, Problem{pdf}, kPS, "pdf");
}

void dg_pipeline(Check& c) {
    std::mt19937 rng(4242);
    int built = 0;
    while (built < 100) {
        auto dg = gen::random_dg(rng);
        auto pref = gen::random_chain(dg.goals(), 4, rng);
        auto pdg = Pdg::validate(dg, GoalSetPreference::from_pairs(pref, GoalSet(dg.goals().begin(), dg.goals().end())));
        ++built;
        auto adf = dg_to_adf(dg);
        auto table = oracle::dg_table(dg);
        for (const auto& d : dg.decisions())
            c.expect(adf.gamma(d) == table.gamma[d], "dg_to_adf vs reach oracle for " + d);
        for (auto crit : kBasic) {
            auto via = gen::aba_select(criterion_aba_dg(dg, crit), dg.decisions());
            c.expect(via == evaluate(adf, crit), std::string(criterion_name(crit)) + " DG-ABA " + join(via) +
                                                     " vs " + join(evaluate(adf, crit)));
        }
        auto via_ps = gen::aba_select(preferred_set_aba_pdg(pdg), dg.decisions());
        auto direct_ps = preferred_set_decisions(pdg_to_pdf(pdg));
        c.expect(via_ps == direct_ps, "ps DG-ABA " + join(via_ps) + " vs " + join(direct_ps));
    }
}

void golden_listings(Check& c) {
    struct Case {
        const char* problem;
        const char* listing;
    };
    for (auto [problem, listing] : {Case{"investment_strict_dg.json", "investment_strict.aba"},
                                    Case{"investment_dg.json", "investment_defeasible.aba"}}) {
        auto dg = std::get<Dg>(load(problem));
        auto golden = AbaFramework::parse_text(gen::slurp(gen::fixture(listing)));
        auto built = core_dg_aba(dg);
        c.expect(built == golden, std::string(listing) + ": frameworks differ");
        c.expect(built.to_text() == golden.to_text(), std::string(listing) + ": canonical text differs");
    }
}

}  // namespace

int main() {
    struct Criterion_ {
        int number;
        const char* name;
        std::function<void(Check&, std::string&)> run;
    };
    std::vector<Criterion_> all{
        {1, "worked-example goldens", [](Check& c, std::string&) { worked_examples(c); }},
        {2, "SD/D/WD admissibility theorems on 512 ADFs", [](Check& c, std::string&) { basic_theorems(c); }},
        {3, "preferred-set theorem on 200 random PDFs", [](Check& c, std::string&) { preferred_set_theorem(c); }},
        {4, "criterion lattice on 512 ADFs", [](Check& c, std::string&) { lattice(c); }},
        {5, "classical method correspondences", [](Check& c, std::string&) { classical_correspondences(c); }},
        {6, "dispute-tree contracts", [](Check& c, std::string& note) { tree_contracts(c, note); }},
        {7, "flat extraction from trees", [](Check& c, std::string&) { extraction(c); }},
        {8, "DG pipeline equivalence on 100 random DGs", [](Check& c, std::string&) { dg_pipeline(c); }},
        {9, "investment DG listings", [](Check& c, std::string&) { golden_listings(c); }},
    };
    int failed = 0;
    for (auto& cr : all) {
        Check c;
        std::string note;
        auto start = std::chrono::steady_clock::now();
        try {
            cr.run(c, note);
        } catch (const std::exception& e) {
            c.expect(false, std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool ok = c.failures == 0;
        failed += !ok;
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << cr.number << ": " << cr.name << " (" << c.checks
                  << " checks";
        if (!note.empty()) std::cout << ", " << note;
        if (!ok) std::cout << ", " << c.failures << " failed: " << c.first.str();
        std::cout << ", " << static_cast<int>(secs * 1000) << " ms)" << std::endl;
    }
    return failed == 0 ? 0 : 1;
}
