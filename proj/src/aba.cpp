#include "decarg/aba.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <unordered_set>

#include "decarg/error.hpp"

namespace decarg {

namespace {

constexpr std::string_view kNeg = "\xC2\xAC";  // ¬

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split_top(std::string_view s) {
    std::vector<std::string_view> out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(') ++depth;
        else if (s[i] == ')') --depth;
        else if (s[i] == ',' && depth == 0) {
            out.push_back(trim(s.substr(start, i - start)));
            start = i + 1;
        }
    }
    out.push_back(trim(s.substr(start)));
    return out;
}

bool plain_token(std::string_view t) {
    if (t.empty()) return false;
    for (char c : t)
        if (c == ' ' || c == '\t' || c == '(' || c == ')' || c == ',') return false;
    return true;
}

}  // namespace

Sentence Sentence::parse(std::string_view text) {
    std::string_view s = trim(text);
    Sentence out;
    if (s.substr(0, kNeg.size()) == kNeg) {
        out.negated = true;
        s.remove_prefix(kNeg.size());
    } else if (!s.empty() && (s.front() == '~' || s.front() == '-')) {
        out.negated = true;
        s.remove_prefix(1);
    }
    auto open = s.find('(');
    if (open == std::string_view::npos) {
        if (!plain_token(s)) throw Error(ErrorCode::SchemaError, "bad sentence '" + std::string(text) + "'");
        out.functor = std::string(s);
        return out;
    }
    if (s.back() != ')') throw Error(ErrorCode::SchemaError, "bad sentence '" + std::string(text) + "'");
    out.functor = std::string(trim(s.substr(0, open)));
    if (!plain_token(out.functor))
        throw Error(ErrorCode::SchemaError, "bad sentence '" + std::string(text) + "'");
    auto inner = s.substr(open + 1, s.size() - open - 2);
    for (auto a : split_top(inner)) {
        if (!plain_token(a)) throw Error(ErrorCode::SchemaError, "bad argument in '" + std::string(text) + "'");
        out.args.emplace_back(a);
    }
    return out;
}

std::string Sentence::str() const {
    std::string out = negated ? std::string(kNeg) : std::string();
    out += functor;
    if (!args.empty()) {
        out += '(';
        for (std::size_t i = 0; i < args.size(); ++i) {
            if (i) out += ',';
            out += args[i];
        }
        out += ')';
    }
    return out;
}

std::string Rule::str() const {
    std::string out = head.str() + " <-";
    for (std::size_t i = 0; i < body.size(); ++i) out += (i ? ", " : " ") + body[i].str();
    return out;
}

std::string to_string(const AssumptionSet& s) {
    std::string out = "{";
    bool first = true;
    for (const auto& a : s) {
        if (!first) out += ", ";
        out += a.str();
        first = false;
    }
    return out + "}";
}

AbaFramework AbaFramework::validate(std::vector<Rule> rules, std::set<Sentence> assumptions,
                                    std::map<Sentence, std::set<Sentence>> contraries) {
    std::sort(rules.begin(), rules.end());
    rules.erase(std::unique(rules.begin(), rules.end()), rules.end());
    for (const auto& r : rules)
        if (assumptions.count(r.head))
            throw Error(ErrorCode::NonFlatFramework, "assumption " + r.head.str() + " heads a rule");
    for (const auto& [a, cs] : contraries)
        if (!assumptions.count(a))
            throw Error(ErrorCode::SchemaError, "contrary given for non-assumption " + a.str());
    for (const auto& a : assumptions) contraries[a];
    AbaFramework af;
    af.rules_ = std::move(rules);
    af.assumptions_ = std::move(assumptions);
    af.contraries_ = std::move(contraries);
    return af;
}

const std::set<Sentence>& AbaFramework::contrary(const Sentence& a) const {
    auto it = contraries_.find(a);
    if (it == contraries_.end()) throw Error(ErrorCode::SchemaError, a.str() + " is not an assumption");
    return it->second;
}

bool AbaFramework::has_rule(const Rule& r) const {
    return std::binary_search(rules_.begin(), rules_.end(), r);
}

AbaFramework AbaFramework::merged(const AbaFramework& other) const {
    std::vector<Rule> rules = rules_;
    rules.insert(rules.end(), other.rules_.begin(), other.rules_.end());
    std::set<Sentence> assumptions = assumptions_;
    assumptions.insert(other.assumptions_.begin(), other.assumptions_.end());
    auto contraries = contraries_;
    for (const auto& [a, cs] : other.contraries_) contraries[a].insert(cs.begin(), cs.end());
    return validate(std::move(rules), std::move(assumptions), std::move(contraries));
}

std::string AbaFramework::to_text() const {
    std::vector<std::string> rules, asms, cons;
    for (const auto& r : rules_) rules.push_back(r.str());
    for (const auto& a : assumptions_) asms.push_back("assumption: " + a.str());
    for (const auto& [a, cs] : contraries_)
        for (const auto& c : cs) cons.push_back("contrary: " + a.str() + " -> " + c.str());
    std::string out;
    for (auto* section : {&rules, &asms, &cons}) {
        std::sort(section->begin(), section->end());
        for (const auto& line : *section) out += line + "\n";
    }
    return out;
}

AbaFramework AbaFramework::parse_text(std::string_view text) {
    std::vector<Rule> rules;
    std::set<Sentence> assumptions;
    std::map<Sentence, std::set<Sentence>> contraries;
    std::size_t line_no = 0;
    while (!text.empty()) {
        auto nl = text.find('\n');
        std::string_view line = trim(text.substr(0, nl));
        text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
        ++line_no;
        if (line.empty() || line.front() == '#') continue;
        try {
            if (line.rfind("assumption:", 0) == 0) {
                assumptions.insert(Sentence::parse(line.substr(11)));
            } else if (line.rfind("contrary:", 0) == 0) {
                auto rest = line.substr(9);
                auto arrow = rest.find("->");
                if (arrow == std::string_view::npos) throw Error(ErrorCode::SchemaError, "missing '->'");
                contraries[Sentence::parse(rest.substr(0, arrow))].insert(
                    Sentence::parse(rest.substr(arrow + 2)));
            } else {
                auto arrow = line.find("<-");
                std::size_t arrow_len = 2;
                if (arrow == std::string_view::npos) {
                    arrow = line.find("\xE2\x86\x90");  // ←
                    arrow_len = 3;
                }
                if (arrow == std::string_view::npos) throw Error(ErrorCode::SchemaError, "missing '<-'");
                Rule r;
                r.head = Sentence::parse(line.substr(0, arrow));
                auto body = trim(line.substr(arrow + arrow_len));
                if (!body.empty())
                    for (auto b : split_top(body)) r.body.push_back(Sentence::parse(b));
                rules.push_back(std::move(r));
            }
        } catch (const Error& e) {
            if (e.code() != ErrorCode::SchemaError) throw;
            throw Error(ErrorCode::SchemaError, "line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    for (const auto& [a, cs] : contraries) assumptions.insert(a);
    return validate(std::move(rules), std::move(assumptions), std::move(contraries));
}

std::string Argument::str() const { return to_string(support) + " |- " + claim.str(); }

std::size_t Bits::count() const {
    std::size_t n = 0;
    for (auto w : w_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

std::vector<int> Bits::members() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < w_.size(); ++i) {
        auto w = w_[i];
        while (w) {
            int b = std::countr_zero(w);
            out.push_back(static_cast<int>(i * 64 + b));
            w &= w - 1;
        }
    }
    return out;
}

std::size_t Bits::hash() const {
    std::size_t h = 1469598103934665603ull;
    for (auto w : w_) h = (h ^ std::hash<std::uint64_t>{}(w)) * 1099511628211ull;
    return h;
}

Reasoner::Reasoner(AbaFramework af, std::size_t max_arguments) : af_(std::move(af)) {
    auto intern = [&](const Sentence& s) {
        auto [it, fresh] = sentence_ids_.try_emplace(s, static_cast<int>(sentences_.size()));
        if (fresh) sentences_.push_back(s);
        return it->second;
    };
    for (const auto& a : af_.assumptions()) intern(a);
    for (const auto& r : af_.rules()) {
        IRule ir{intern(r.head), {}};
        for (const auto& b : r.body) ir.body.push_back(intern(b));
        irules_.push_back(std::move(ir));
    }
    for (const auto& [a, cs] : af_.contraries())
        for (const auto& c : cs) intern(c);

    const std::size_t n = sentences_.size();
    asm_of_sentence_.assign(n, -1);
    for (const auto& a : af_.assumptions()) {
        asm_of_sentence_[sentence_ids_.at(a)] = static_cast<int>(asm_.size());
        asm_.push_back(a);
    }
    contrary_ids_.resize(asm_.size());
    for (std::size_t i = 0; i < asm_.size(); ++i)
        for (const auto& c : af_.contrary(asm_[i])) contrary_ids_[i].push_back(sentence_ids_.at(c));

    uses_.resize(n);
    for (std::size_t r = 0; r < irules_.size(); ++r)
        for (int b : irules_[r].body) uses_[b].push_back(static_cast<int>(r));
    std::vector<std::vector<int>> rules_for(n);
    for (std::size_t r = 0; r < irules_.size(); ++r) rules_for[irules_[r].head].push_back(static_cast<int>(r));

    // Topological order over head -> body dependencies, rejecting cycles.
    std::vector<int> order;
    std::vector<char> color(n, 0);
    for (std::size_t root = 0; root < n; ++root) {
        if (color[root]) continue;
        std::vector<std::pair<int, std::size_t>> stack{{static_cast<int>(root), 0}};
        color[root] = 1;
        while (!stack.empty()) {
            auto& [v, next] = stack.back();
            std::vector<int> succ;
            for (int r : rules_for[v]) succ.insert(succ.end(), irules_[r].body.begin(), irules_[r].body.end());
            if (next < succ.size()) {
                int w = succ[next++];
                if (color[w] == 1)
                    throw Error(ErrorCode::CyclicRuleDependency, "cycle through " + sentences_[w].str());
                if (color[w] == 0) {
                    color[w] = 1;
                    stack.push_back({w, 0});
                }
            } else {
                color[v] = 2;
                order.push_back(v);
                stack.pop_back();
            }
        }
    }

    struct Partial {
        Bits support;
        std::shared_ptr<const Derivation> derivation;
    };
    std::vector<std::vector<Partial>> partial(n);
    std::size_t total = 0;
    for (int s : order) {
        auto& mine = partial[s];
        std::unordered_set<Bits, BitsHash> seen;
        int ai = asm_of_sentence_[s];
        if (ai >= 0) {
            Bits b(asm_.size());
            b.set(static_cast<std::size_t>(ai));
            seen.insert(b);
            mine.push_back({b, std::make_shared<Derivation>(Derivation{sentences_[s], true, {}})});
        }
        for (int r : rules_for[s]) {
            const auto& body = irules_[r].body;
            bool empty_choice = false;
            for (int b : body) empty_choice |= partial[b].empty();
            if (empty_choice) continue;
            std::vector<std::size_t> idx(body.size(), 0);
            while (true) {
                Bits sup(asm_.size());
                for (std::size_t k = 0; k < body.size(); ++k) sup |= partial[body[k]][idx[k]].support;
                if (seen.insert(sup).second) {
                    Derivation d{sentences_[s], false, {}};
                    for (std::size_t k = 0; k < body.size(); ++k)
                        d.children.push_back(*partial[body[k]][idx[k]].derivation);
                    mine.push_back({sup, std::make_shared<Derivation>(std::move(d))});
                    if (++total > max_arguments)
                        throw Error(ErrorCode::ExplosionBudgetExceeded, "too many arguments");
                }
                std::size_t k = 0;
                while (k < body.size() && ++idx[k] == partial[body[k]].size()) idx[k++] = 0;
                if (k == body.size()) break;
            }
        }
    }

    struct Entry {
        std::string claim;
        std::vector<std::string> support;
        int sentence;
        std::size_t local;
    };
    std::vector<Entry> entries;
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t k = 0; k < partial[s].size(); ++k) {
            Entry e{sentences_[s].str(), {}, static_cast<int>(s), k};
            for (int a : partial[s][k].support.members()) e.support.push_back(asm_[a].str());
            std::sort(e.support.begin(), e.support.end());
            entries.push_back(std::move(e));
        }
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        return std::tie(a.claim, a.support) < std::tie(b.claim, b.support);
    });
    for (const auto& e : entries) {
        const auto& p = partial[e.sentence][e.local];
        Argument arg{sentences_[e.sentence], from_bits(p.support), p.derivation};
        by_claim_[arg.claim].push_back(args_.size());
        args_.push_back(std::move(arg));
        claim_.push_back(e.sentence);
        sup_.push_back(p.support);
    }

    attackers_.resize(asm_.size());
    for (std::size_t a = 0; a < asm_.size(); ++a)
        for (std::size_t i = 0; i < args_.size(); ++i)
            for (int c : contrary_ids_[a])
                if (claim_[i] == c) {
                    attackers_[a].push_back(i);
                    break;
                }
}

int Reasoner::sentence_id(const Sentence& s) const {
    auto it = sentence_ids_.find(s);
    return it == sentence_ids_.end() ? -1 : it->second;
}

std::optional<std::size_t> Reasoner::find(const Sentence& claim, const AssumptionSet& support) const {
    auto it = by_claim_.find(claim);
    if (it == by_claim_.end()) return std::nullopt;
    for (auto i : it->second)
        if (args_[i].support == support) return i;
    return std::nullopt;
}

std::vector<std::size_t> Reasoner::arguments_for(const Sentence& claim) const {
    auto it = by_claim_.find(claim);
    return it == by_claim_.end() ? std::vector<std::size_t>{} : it->second;
}

bool Reasoner::attacks(std::size_t a, std::size_t b) const {
    for (int beta : sup_[b].members())
        for (int c : contrary_ids_[beta])
            if (claim_[a] == c) return true;
    return false;
}

std::vector<int> Reasoner::attacked_in(std::size_t a, std::size_t b) const {
    std::vector<int> out;
    for (int beta : sup_[b].members())
        for (int c : contrary_ids_[beta])
            if (claim_[a] == c) {
                out.push_back(beta);
                break;
            }
    return out;
}

std::vector<std::size_t> Reasoner::attackers_of(std::size_t b) const {
    std::vector<std::size_t> out;
    for (int beta : sup_[b].members()) out.insert(out.end(), attackers_[beta].begin(), attackers_[beta].end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

const std::vector<std::size_t>& Reasoner::attackers_of_assumption(const Sentence& a) const {
    int s = sentence_id(a);
    if (s < 0 || asm_of_sentence_[s] < 0) throw Error(ErrorCode::SchemaError, a.str() + " is not an assumption");
    return attackers_[asm_of_sentence_[s]];
}

Bits Reasoner::to_bits(const AssumptionSet& s) const {
    Bits b(asm_.size());
    for (const auto& a : s) {
        int id = sentence_id(a);
        if (id < 0 || asm_of_sentence_[id] < 0) throw Error(ErrorCode::SchemaError, a.str() + " is not an assumption");
        b.set(static_cast<std::size_t>(asm_of_sentence_[id]));
    }
    return b;
}

AssumptionSet Reasoner::from_bits(const Bits& b) const {
    AssumptionSet out;
    for (int a : b.members()) out.insert(asm_[a]);
    return out;
}

Bits Reasoner::closure_bits(const Bits& s) const {
    const std::size_t n = sentences_.size();
    Bits known(n);
    std::vector<int> queue;
    for (int a : s.members()) queue.push_back(sentence_ids_.at(asm_[a]));
    std::vector<std::size_t> missing(irules_.size());
    for (std::size_t r = 0; r < irules_.size(); ++r) {
        missing[r] = irules_[r].body.size();
        if (missing[r] == 0) queue.push_back(irules_[r].head);
    }
    while (!queue.empty()) {
        int x = queue.back();
        queue.pop_back();
        if (known.test(x)) continue;
        known.set(x);
        for (int r : uses_[x])
            if (--missing[r] == 0) queue.push_back(irules_[r].head);
    }
    return known;
}

bool Reasoner::closure_attacks(const Bits& cl, const Bits& target) const {
    for (int a : target.members())
        for (int c : contrary_ids_[a])
            if (cl.test(c)) return true;
    return false;
}

std::set<Sentence> Reasoner::closure(const AssumptionSet& s) const {
    std::set<Sentence> out;
    for (int id : closure_bits(to_bits(s)).members()) out.insert(sentences_[id]);
    return out;
}

bool Reasoner::set_attacks(const AssumptionSet& s1, const AssumptionSet& s2) const {
    return closure_attacks(closure_bits(to_bits(s1)), to_bits(s2));
}

bool Reasoner::is_admissible(const AssumptionSet& s) const {
    Bits b = to_bits(s);
    Bits cl = closure_bits(b);
    if (closure_attacks(cl, b)) return false;
    for (int a : b.members())
        for (auto att : attackers_[a])
            if (!closure_attacks(cl, sup_[att])) return false;
    return true;
}

std::optional<AssumptionSet> Reasoner::admissible_superset(std::size_t arg) const {
    std::unordered_set<Bits, BitsHash> failed;
    std::size_t steps = 0;
    constexpr std::size_t kBudget = 1000000;
    std::function<std::optional<Bits>(const Bits&)> grow = [&](const Bits& s) -> std::optional<Bits> {
        if (failed.count(s)) return std::nullopt;
        if (++steps > kBudget) throw Error(ErrorCode::ExplosionBudgetExceeded, "admissibility search");
        Bits cl = closure_bits(s);
        if (closure_attacks(cl, s)) {
            failed.insert(s);
            return std::nullopt;
        }
        // Pick the undefended attacker with the fewest counter-arguments.
        std::vector<std::size_t> best;
        bool found = false;
        for (int a : s.members()) {
            for (auto att : attackers_[a]) {
                if (closure_attacks(cl, sup_[att])) continue;
                std::vector<std::size_t> options;
                for (int beta : sup_[att].members())
                    options.insert(options.end(), attackers_[beta].begin(), attackers_[beta].end());
                std::sort(options.begin(), options.end());
                options.erase(std::unique(options.begin(), options.end()), options.end());
                if (!found || options.size() < best.size()) {
                    best = std::move(options);
                    found = true;
                }
                if (best.empty()) break;
            }
            if (found && best.empty()) break;
        }
        if (!found) return s;
        std::unordered_set<Bits, BitsHash> tried;
        for (auto opt : best) {
            Bits next = s;
            next |= sup_[opt];
            if (!tried.insert(next).second) continue;
            if (auto r = grow(next)) return r;
        }
        failed.insert(s);
        return std::nullopt;
    };
    auto r = grow(sup_[arg]);
    if (!r) return std::nullopt;
    return from_bits(*r);
}

std::vector<Argument> all_arguments(const AbaFramework& af) { return Reasoner(af).arguments(); }

bool attacks(const AbaFramework& af, const Argument& a, const Argument& b) {
    for (const auto& beta : b.support)
        if (af.contrary(beta).count(a.claim)) return true;
    return false;
}

bool set_attacks(const AbaFramework& af, const AssumptionSet& s1, const AssumptionSet& s2) {
    return Reasoner(af).set_attacks(s1, s2);
}

bool is_admissible_assumption_set(const AbaFramework& af, const AssumptionSet& s) {
    return Reasoner(af).is_admissible(s);
}

std::optional<AssumptionSet> is_admissible_argument(const AbaFramework& af, const Argument& arg) {
    Reasoner r(af);
    auto i = r.find(arg.claim, arg.support);
    if (!i) return std::nullopt;
    return r.admissible_superset(*i);
}

}  // namespace decarg
