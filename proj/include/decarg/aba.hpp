#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace decarg {

struct Sentence {
    std::string functor;
    std::vector<std::string> args;
    bool negated = false;

    Sentence() = default;
    Sentence(std::string f, std::vector<std::string> a = {}, bool neg = false)
        : functor(std::move(f)), args(std::move(a)), negated(neg) {}

    // Accepts "f", "f(a,b)" and a leading negation marker (¬, ~ or -).
    static Sentence parse(std::string_view text);
    std::string str() const;

    bool operator==(const Sentence&) const = default;
    auto operator<=>(const Sentence&) const = default;
};

struct Rule {
    Sentence head;
    std::vector<Sentence> body;

    std::string str() const;
    bool operator==(const Rule&) const = default;
    auto operator<=>(const Rule&) const = default;
};

using AssumptionSet = std::set<Sentence>;

std::string to_string(const AssumptionSet& s);

// A flat ABA framework. Contrary images may be empty, which makes the
// assumption unattackable.
class AbaFramework {
public:
    AbaFramework() = default;
    static AbaFramework validate(std::vector<Rule> rules, std::set<Sentence> assumptions,
                                 std::map<Sentence, std::set<Sentence>> contraries);

    const std::vector<Rule>& rules() const { return rules_; }
    const std::set<Sentence>& assumptions() const { return assumptions_; }
    const std::map<Sentence, std::set<Sentence>>& contraries() const { return contraries_; }
    const std::set<Sentence>& contrary(const Sentence& a) const;
    bool is_assumption(const Sentence& s) const { return assumptions_.count(s) != 0; }
    bool has_rule(const Rule& r) const;

    // Union of two frameworks; contrary images are merged per assumption.
    AbaFramework merged(const AbaFramework& other) const;

    // One item per line, each section sorted bytewise: rules, assumptions, contraries.
    std::string to_text() const;
    static AbaFramework parse_text(std::string_view text);

    bool operator==(const AbaFramework&) const = default;

private:
    std::vector<Rule> rules_;  // sorted, unique
    std::set<Sentence> assumptions_;
    std::map<Sentence, std::set<Sentence>> contraries_;
};

// Deduction tree. A rule node with no children stands for a fact (tau leaf).
struct Derivation {
    Sentence sentence;
    bool assumption = false;
    std::vector<Derivation> children;
};

struct Argument {
    Sentence claim;
    AssumptionSet support;
    std::shared_ptr<const Derivation> derivation;

    std::string str() const;  // "{a, b} |- p"
    bool same(const Argument& o) const { return claim == o.claim && support == o.support; }
};

class Bits {
public:
    Bits() = default;
    explicit Bits(std::size_t n) : w_((n + 63) / 64, 0) {}
    void set(std::size_t i) { w_[i / 64] |= std::uint64_t{1} << (i % 64); }
    void reset(std::size_t i) { w_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
    bool test(std::size_t i) const { return (w_[i / 64] >> (i % 64)) & 1; }
    Bits& operator|=(const Bits& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    bool subset_of(const Bits& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }
    bool intersects(const Bits& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }
    std::size_t count() const;
    std::vector<int> members() const;
    std::size_t hash() const;
    bool operator==(const Bits&) const = default;
    auto operator<=>(const Bits&) const = default;

private:
    std::vector<std::uint64_t> w_;
};

struct BitsHash {
    std::size_t operator()(const Bits& b) const { return b.hash(); }
};

// Precomputes every argument of a framework and answers attack and
// admissibility queries. Immutable after construction.
class Reasoner {
public:
    explicit Reasoner(AbaFramework af, std::size_t max_arguments = 200000);

    const AbaFramework& framework() const { return af_; }
    const std::vector<Argument>& arguments() const { return args_; }
    const Argument& argument(std::size_t i) const { return args_[i]; }
    std::optional<std::size_t> find(const Sentence& claim, const AssumptionSet& support) const;
    std::vector<std::size_t> arguments_for(const Sentence& claim) const;

    bool attacks(std::size_t a, std::size_t b) const;
    // Assumption indices in the support of b that a attacks.
    std::vector<int> attacked_in(std::size_t a, std::size_t b) const;
    // Attackers of argument b, in canonical argument order.
    std::vector<std::size_t> attackers_of(std::size_t b) const;
    // Arguments whose claim is a contrary of assumption a.
    const std::vector<std::size_t>& attackers_of_assumption(const Sentence& a) const;

    std::set<Sentence> closure(const AssumptionSet& s) const;
    bool set_attacks(const AssumptionSet& s1, const AssumptionSet& s2) const;
    bool is_admissible(const AssumptionSet& s) const;
    std::optional<AssumptionSet> admissible_superset(std::size_t arg) const;

    std::size_t assumption_count() const { return asm_.size(); }
    const Bits& support_bits(std::size_t arg) const { return sup_[arg]; }
    Bits to_bits(const AssumptionSet& s) const;
    AssumptionSet from_bits(const Bits& b) const;
    // Sentence ids of the forward-chaining closure of an assumption set.
    Bits closure_bits(const Bits& s) const;
    // True when closure `cl` contains a contrary of some assumption in `target`.
    bool closure_attacks(const Bits& cl, const Bits& target) const;

private:
    int sentence_id(const Sentence& s) const;

    AbaFramework af_;
    std::vector<Sentence> sentences_;
    std::map<Sentence, int> sentence_ids_;
    std::vector<Sentence> asm_;                 // assumption index -> sentence
    std::vector<int> asm_of_sentence_;          // sentence id -> assumption index or -1
    std::vector<std::vector<int>> contrary_ids_;  // assumption index -> sentence ids
    std::vector<std::vector<std::size_t>> attackers_;  // assumption index -> argument ids
    std::vector<Argument> args_;
    std::vector<int> claim_;
    std::vector<Bits> sup_;
    std::map<Sentence, std::vector<std::size_t>> by_claim_;
    struct IRule {
        int head;
        std::vector<int> body;
    };
    std::vector<IRule> irules_;
    std::vector<std::vector<int>> uses_;  // sentence id -> rules with it in the body
};

std::vector<Argument> all_arguments(const AbaFramework& af);
bool attacks(const AbaFramework& af, const Argument& a, const Argument& b);
bool set_attacks(const AbaFramework& af, const AssumptionSet& s1, const AssumptionSet& s2);
bool is_admissible_assumption_set(const AbaFramework& af, const AssumptionSet& s);
std::optional<AssumptionSet> is_admissible_argument(const AbaFramework& af, const Argument& arg);

}  // namespace decarg
