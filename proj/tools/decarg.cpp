// decarg: evaluate decision criteria and explain them from the command line.
//
//   decarg decide FILE --criterion sd|d|wd|ps [--via core|aba]
//   decarg explain FILE --criterion C --decision D [--format flat-json|dialogue|dot|tree-json]
//   decarg export-aba FILE --criterion C [--encoding guarded|literal]
//   decarg graph FILE
//   decarg classical TABLE.csv --method conjunctive|lexicographic
//
// Exit status: 0 on success, 1 on an internal error, 2 on a user error.

#include <iostream>

#include <CLI11.hpp>

#include "decarg/classical.hpp"
#include "decarg/error.hpp"
#include "decarg/io.hpp"

using namespace decarg;

namespace {

std::vector<Id> decide_via_aba(const Problem& p, Criterion c) {
    auto m = mapped_framework(p, c);
    Reasoner r(m.framework);
    std::vector<Id> out;
    for (const auto& d : problem_decisions(p)) {
        const Sentence& q = m.query.at(d);
        if (r.admissible_superset(*r.find(q, {q}))) out.push_back(d);
    }
    return out;
}

void print_lines(const std::vector<Id>& ids) {
    for (const auto& id : ids) std::cout << id << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Decision criteria, ABA compilation and explanations"};
    app.require_subcommand(1);

    std::string file, criterion_text, decision, format = "flat-json", via = "core", encoding = "guarded", method;
    auto criterion_option = [&](CLI::App* sub) {
        sub->add_option("--criterion,-c", criterion_text, "sd, d, wd or ps")
            ->required()
            ->check(CLI::IsMember({"sd", "d", "wd", "ps"}));
    };

    auto* decide_cmd = app.add_subcommand("decide", "List the decisions meeting a criterion");
    decide_cmd->add_option("file", file, "Problem file (JSON)")->required();
    criterion_option(decide_cmd);
    decide_cmd->add_option("--via", via, "core (direct) or aba (admissibility)")->check(CLI::IsMember({"core", "aba"}));

    auto* explain_cmd = app.add_subcommand("explain", "Explain why a decision does or does not meet a criterion");
    explain_cmd->add_option("file", file, "Problem file (JSON)")->required();
    criterion_option(explain_cmd);
    explain_cmd->add_option("--decision,-d", decision, "Decision to explain")->required();
    explain_cmd->add_option("--format,-f", format, "Output format")
        ->check(CLI::IsMember({"flat-json", "dialogue", "dot", "tree-json"}));

    auto* export_cmd = app.add_subcommand("export-aba", "Print the ABA framework for a criterion");
    export_cmd->add_option("file", file, "Problem file (JSON)")->required();
    criterion_option(export_cmd);
    export_cmd->add_option("--encoding", encoding, "Preferred-set component: guarded or literal")
        ->check(CLI::IsMember({"guarded", "literal"}));

    auto* graph_cmd = app.add_subcommand("graph", "Render a dg or pdg problem as DOT");
    graph_cmd->add_option("file", file, "Problem file (JSON)")->required();

    auto* classical_cmd = app.add_subcommand("classical", "Run a classical selection method on a CSV decision table");
    classical_cmd->add_option("file", file, "Decision table (CSV)")->required();
    classical_cmd->add_option("--method,-m", method, "conjunctive or lexicographic")
        ->required()
        ->check(CLI::IsMember({"conjunctive", "lexicographic"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*classical_cmd) {
            auto table = parse_decision_table(read_file(file));
            std::set<Id> chosen = method == "conjunctive" ? conjunctive_select(conjunctive_from_table(table))
                                                          : lexicographic_select(lex_from_table(table));
            for (const auto& a : table.alternatives)
                if (chosen.count(a)) std::cout << a << '\n';
            return 0;
        }

        Problem problem = parse_problem(file);
        if (*graph_cmd) {
            if (auto* g = std::get_if<Dg>(&problem)) std::cout << render_dot(*g);
            else if (auto* pg = std::get_if<Pdg>(&problem)) std::cout << render_dot(pg->dg());
            else throw Error(ErrorCode::SchemaError, std::string("graph needs a dg or pdg, not ") + problem_kind(problem));
            return 0;
        }

        Criterion c = *parse_criterion(criterion_text);
        if (*decide_cmd) {
            print_lines(via == "aba" ? decide_via_aba(problem, c) : decide(problem, c));
        } else if (*explain_cmd) {
            if (format == "flat-json") {
                std::cout << flat_to_json(flat_explain(problem, decision, c));
            } else {
                auto e = dialogical_explain(problem, c, decision);
                if (format == "dialogue") std::cout << render_dialogue(e);
                else if (format == "dot") std::cout << render_dot(e);
                else std::cout << render_tree_json(e);
            }
        } else if (*export_cmd) {
            auto enc = encoding == "literal" ? PsEncoding::Literal : PsEncoding::Guarded;
            std::cout << mapped_framework(problem, c, enc).framework.to_text();
        }
        return 0;
    } catch (const Error& e) {
        std::cerr << "decarg: " << e.what() << '\n';
        return e.code() == ErrorCode::ExplosionBudgetExceeded ? 1 : 2;
    } catch (const std::exception& e) {
        std::cerr << "decarg: internal error: " << e.what() << '\n';
        return 1;
    }
}
