#include "decarg/dispute.hpp"

#include <algorithm>
#include <functional>

#include "decarg/error.hpp"

namespace decarg {

namespace {

constexpr std::size_t kSearchBudget = 1000000;

}  // namespace

DisputeTree::DisputeTree(std::shared_ptr<const Reasoner> reasoner, std::vector<DisputeNode> nodes)
    : reasoner_(std::move(reasoner)), nodes_(std::move(nodes)) {
    AssumptionSet d = defence_set();
    for (auto& n : nodes_) {
        n.culprit.reset();
        if (n.player != Player::Opponent || n.children.empty()) continue;
        const auto& child = nodes_[n.children.front()];
        const auto& claim = reasoner_->argument(child.argument).claim;
        const auto& af = reasoner_->framework();
        for (const auto& a : reasoner_->argument(n.argument).support) {
            if (!af.contrary(a).count(claim)) continue;
            if (!n.culprit || (d.count(*n.culprit) && !d.count(a))) n.culprit = a;
        }
    }
    kind_ = classify();
}

bool DisputeTree::is_ancestor(int n1, int n2) const {
    for (int p = nodes_[n2].parent; p >= 0; p = nodes_[p].parent)
        if (p == n1) return true;
    return false;
}

bool DisputeTree::fails(int i) const {
    std::vector<char> fail(nodes_.size(), 0);
    for (std::size_t k = 0; k < nodes_.size(); ++k)
        if (nodes_[k].player == Player::Opponent && is_leaf(static_cast<int>(k))) fail[k] = 1;
    bool changed = true;
    while (changed) {
        changed = false;
        // Children follow parents in preorder, so a reverse pass propagates upward.
        for (std::size_t k = nodes_.size(); k-- > 0;) {
            if (fail[k]) continue;
            bool f = nodes_[k].fold_ref >= 0 && fail[nodes_[k].fold_ref];
            for (int c : nodes_[k].children) f = f || fail[c];
            if (f) {
                fail[k] = 1;
                changed = true;
            }
        }
    }
    return fail[i];
}

AssumptionSet DisputeTree::defence_set() const {
    AssumptionSet out;
    for (const auto& n : nodes_)
        if (n.player == Player::Proponent) {
            const auto& s = reasoner_->argument(n.argument).support;
            out.insert(s.begin(), s.end());
        }
    return out;
}

AssumptionSet DisputeTree::la() const {
    AssumptionSet out;
    for (std::size_t k = 0; k < nodes_.size(); ++k)
        if (is_leaf(static_cast<int>(k))) {
            const auto& s = reasoner_->argument(nodes_[k].argument).support;
            out.insert(s.begin(), s.end());
        }
    return out;
}

std::vector<int> DisputeTree::lo() const {
    std::vector<int> out;
    for (std::size_t k = 0; k < nodes_.size(); ++k)
        if (nodes_[k].player == Player::Opponent && is_leaf(static_cast<int>(k)))
            out.push_back(static_cast<int>(k));
    return out;
}

std::set<std::size_t> DisputeTree::lo_arguments() const {
    std::set<std::size_t> out;
    for (int k : lo()) out.insert(nodes_[k].argument);
    return out;
}

std::string DisputeTree::canonical() const {
    std::string out;
    std::function<void(int, int)> walk = [&](int i, int depth) {
        const auto& n = nodes_[i];
        out += std::string(static_cast<std::size_t>(depth) * 2, ' ');
        out += n.player == Player::Proponent ? "P: " : "O: ";
        out += argument_of(i).str();
        if (n.fold_ref >= 0) out += " (repeats)";
        out += '\n';
        for (int c : n.children) walk(c, depth + 1);
    };
    walk(0, 0);
    return out;
}

TreeKind DisputeTree::classify() const {
    AssumptionSet d = defence_set();
    bool admissible = true;
    bool maximal = true;
    for (const auto& n : nodes_) {
        if (n.player != Player::Opponent) continue;
        if (n.children.size() != 1 || !n.culprit || d.count(*n.culprit)) admissible = false;
        if (n.children.empty() && !reasoner_->attackers_of(n.argument).empty()) maximal = false;
    }
    if (admissible) return TreeKind::Admissible;
    return maximal ? TreeKind::Maximal : TreeKind::Other;
}

DisputeTree tree_from_responses(std::shared_ptr<const Reasoner> r, std::size_t root,
                                const std::vector<int>& response) {
    std::vector<DisputeNode> nodes;
    std::function<void(std::size_t, int)> build_p = [&](std::size_t arg, int parent) {
        if (nodes.size() >= kTreeBudget) throw Error(ErrorCode::ExplosionBudgetExceeded, "dispute tree size");
        int me = static_cast<int>(nodes.size());
        nodes.push_back({Player::Proponent, arg, parent, {}, -1, std::nullopt});
        for (int p = parent; p >= 0; p = nodes[p].parent)
            if (nodes[p].player == Player::Proponent && nodes[p].argument == arg) {
                nodes[me].fold_ref = p;
                return;
            }
        for (auto o : r->attackers_of(arg)) {
            if (nodes.size() >= kTreeBudget) throw Error(ErrorCode::ExplosionBudgetExceeded, "dispute tree size");
            int on = static_cast<int>(nodes.size());
            nodes[me].children.push_back(on);
            nodes.push_back({Player::Opponent, o, me, {}, -1, std::nullopt});
            if (response[o] >= 0) {
                nodes[on].children.push_back(static_cast<int>(nodes.size()));
                build_p(static_cast<std::size_t>(response[o]), on);
            }
        }
    };
    build_p(root, -1);
    return DisputeTree(std::move(r), std::move(nodes));
}

namespace {

// Search for a uniform admissible strategy whose unattacked proponent
// arguments draw assumptions only from `allowed`.
class AdmissibleSearch {
public:
    AdmissibleSearch(const Reasoner& r, const Bits& allowed) : r_(r), n_(r.arguments().size()) {
        attackers_.resize(n_);
        for (std::size_t a = 0; a < n_; ++a) attackers_[a] = r.attackers_of(a);
        good_.assign(n_, 0);
        for (std::size_t a = 0; a < n_; ++a)
            good_[a] = !attackers_[a].empty() || r.support_bits(a).subset_of(allowed);
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t a = 0; a < n_; ++a) {
                if (!good_[a]) continue;
                for (auto o : attackers_[a]) {
                    bool answered = false;
                    for (auto resp : attackers_[o]) answered = answered || good_[resp];
                    if (!answered) {
                        good_[a] = 0;
                        changed = true;
                        break;
                    }
                }
            }
        }
    }

    std::optional<std::vector<int>> solve(std::size_t root) {
        if (!good_[root]) return std::nullopt;
        sigma_.assign(n_, -1);
        in_pi_.assign(n_, 0);
        pi_.clear();
        assigned_.clear();
        d_ = Bits(r_.assumption_count());
        add(root);
        steps_ = 0;
        if (!search()) return std::nullopt;
        return sigma_;
    }

private:
    bool viable(std::size_t o, std::size_t resp, const Bits& d) const {
        for (int a : r_.attacked_in(resp, o))
            if (!d.test(static_cast<std::size_t>(a))) return true;
        return false;
    }

    void add(std::size_t p) {
        in_pi_[p] = 1;
        pi_.push_back(p);
        d_ |= r_.support_bits(p);
    }

    bool search() {
        if (++steps_ > kSearchBudget) throw Error(ErrorCode::ExplosionBudgetExceeded, "least-assumption search");
        std::size_t best_o = 0;
        std::vector<std::size_t> best;
        bool found = false;
        for (auto p : pi_) {
            for (auto o : attackers_[p]) {
                if (sigma_[o] >= 0) continue;
                std::vector<std::size_t> opts;
                for (auto resp : attackers_[o]) {
                    if (!good_[resp]) continue;
                    Bits d = d_;
                    if (!in_pi_[resp]) d |= r_.support_bits(resp);
                    if (viable(o, resp, d)) opts.push_back(resp);
                }
                std::stable_partition(opts.begin(), opts.end(), [&](std::size_t x) { return in_pi_[x] != 0; });
                if (!found || opts.size() < best.size()) {
                    best = std::move(opts);
                    best_o = o;
                    found = true;
                }
                if (best.empty()) return false;
            }
        }
        if (!found) return true;
        for (auto resp : best) {
            std::size_t pi_size = pi_.size();
            Bits saved = d_;
            sigma_[best_o] = static_cast<int>(resp);
            assigned_.push_back(best_o);
            bool ok = true;
            if (!in_pi_[resp]) {
                add(resp);
                for (auto o : assigned_)
                    if (!viable(o, static_cast<std::size_t>(sigma_[o]), d_)) {
                        ok = false;
                        break;
                    }
            }
            if (ok && search()) return true;
            assigned_.pop_back();
            sigma_[best_o] = -1;
            while (pi_.size() > pi_size) {
                in_pi_[pi_.back()] = 0;
                pi_.pop_back();
            }
            d_ = saved;
        }
        return false;
    }

    const Reasoner& r_;
    std::size_t n_;
    std::vector<std::vector<std::size_t>> attackers_;
    std::vector<char> good_;
    std::vector<int> sigma_;
    std::vector<char> in_pi_;
    std::vector<std::size_t> pi_;
    std::vector<std::size_t> assigned_;
    Bits d_;
    std::size_t steps_ = 0;
};

std::optional<DisputeTree> la_tree(const std::shared_ptr<const Reasoner>& r, std::size_t arg,
                                   const Bits& allowed) {
    AdmissibleSearch s(*r, allowed);
    auto sigma = s.solve(arg);
    if (!sigma) return std::nullopt;
    return tree_from_responses(r, arg, *sigma);
}

// Proponent arguments that can be defended forever while every unattacked
// opponent argument met along the way lies in `allowed_leaves`.
std::vector<char> safe_arguments(const Reasoner& r, const std::vector<char>& allowed_leaves,
                                 const std::vector<std::vector<std::size_t>>& attackers) {
    std::size_t n = r.arguments().size();
    std::vector<char> good(n, 1);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t a = 0; a < n; ++a) {
            if (!good[a]) continue;
            for (auto o : attackers[a]) {
                bool ok;
                if (attackers[o].empty()) {
                    ok = allowed_leaves[o];
                } else {
                    ok = false;
                    for (auto resp : attackers[o]) ok = ok || good[resp];
                }
                if (!ok) {
                    good[a] = 0;
                    changed = true;
                    break;
                }
            }
        }
    }
    return good;
}

}  // namespace

std::optional<DisputeTree> admissible_dispute_tree(std::shared_ptr<const Reasoner> r, std::size_t arg) {
    if (!r->admissible_superset(arg)) return std::nullopt;
    return least_assumption_tree(std::move(r), arg);
}

DisputeTree least_assumption_tree(std::shared_ptr<const Reasoner> r, std::size_t arg) {
    Bits all(r->assumption_count());
    for (std::size_t i = 0; i < r->assumption_count(); ++i) all.set(i);
    auto tree = la_tree(r, arg, all);
    if (!tree) throw Error(ErrorCode::NotAdmissible, r->argument(arg).str());
    bool shrunk = true;
    while (shrunk) {
        shrunk = false;
        Bits current = r->to_bits(tree->la());
        for (int a : current.members()) {
            Bits smaller = current;
            smaller.reset(static_cast<std::size_t>(a));
            if (auto t = la_tree(r, arg, smaller)) {
                tree = std::move(t);
                shrunk = true;
                break;
            }
        }
    }
    return *tree;
}

DisputeTree best_effort_tree(std::shared_ptr<const Reasoner> r, std::size_t arg) {
    return best_effort_tree(std::move(r), arg, nullptr);
}

DisputeTree best_effort_tree(std::shared_ptr<const Reasoner> r, std::size_t arg,
                             const std::function<bool(std::size_t)>& avoid_leaf) {
    if (r->admissible_superset(arg)) throw Error(ErrorCode::IsAdmissible, r->argument(arg).str());
    std::size_t n = r->arguments().size();
    std::vector<std::vector<std::size_t>> attackers(n);
    for (std::size_t a = 0; a < n; ++a) attackers[a] = r->attackers_of(a);
    auto defended = safe_arguments(*r, std::vector<char>(n, 0), attackers);

    auto build = [&](const std::vector<char>& allowed) -> std::optional<DisputeTree> {
        auto good = safe_arguments(*r, allowed, attackers);
        if (!good[arg]) return std::nullopt;
        std::vector<int> sigma(n, -1);
        for (std::size_t o = 0; o < n; ++o) {
            int pick = -1;
            for (auto resp : attackers[o])
                if (defended[resp]) {
                    pick = static_cast<int>(resp);
                    break;
                }
            if (pick < 0)
                for (auto resp : attackers[o])
                    if (good[resp]) {
                        pick = static_cast<int>(resp);
                        break;
                    }
            sigma[o] = pick;
        }
        return tree_from_responses(r, arg, sigma);
    };

    std::vector<char> allowed(n, 0);
    for (std::size_t a = 0; a < n; ++a) allowed[a] = attackers[a].empty();
    std::optional<DisputeTree> tree;
    if (avoid_leaf) {
        auto preferred = allowed;
        for (std::size_t a = 0; a < n; ++a)
            if (preferred[a] && avoid_leaf(a)) preferred[a] = 0;
        tree = build(preferred);
    }
    if (!tree) tree = build(allowed);
    if (!tree) throw Error(ErrorCode::ExplosionBudgetExceeded, "no maximal tree found");
    bool shrunk = true;
    while (shrunk) {
        shrunk = false;
        auto current = tree->lo_arguments();
        std::vector<char> base(n, 0);
        for (auto a : current) base[a] = 1;
        for (auto a : current) {
            auto smaller = base;
            smaller[a] = 0;
            if (auto t = build(smaller)) {
                tree = std::move(t);
                shrunk = true;
                break;
            }
        }
    }
    return *tree;
}

std::vector<DisputeTree> maximal_dispute_trees(std::shared_ptr<const Reasoner> r, std::size_t arg,
                                               std::size_t max_trees) {
    std::vector<DisputeTree> out;
    std::vector<std::size_t> choice;
    while (true) {
        std::vector<std::size_t> counts;
        std::size_t occurrence = 0;
        std::vector<DisputeNode> nodes;
        std::function<void(std::size_t, int)> build_p = [&](std::size_t a, int parent) {
            if (nodes.size() >= kTreeBudget) throw Error(ErrorCode::ExplosionBudgetExceeded, "dispute tree size");
            int me = static_cast<int>(nodes.size());
            nodes.push_back({Player::Proponent, a, parent, {}, -1, std::nullopt});
            for (int p = parent; p >= 0; p = nodes[p].parent)
                if (nodes[p].player == Player::Proponent && nodes[p].argument == a) {
                    nodes[me].fold_ref = p;
                    return;
                }
            for (auto o : r->attackers_of(a)) {
                int on = static_cast<int>(nodes.size());
                nodes[me].children.push_back(on);
                nodes.push_back({Player::Opponent, o, me, {}, -1, std::nullopt});
                auto responses = r->attackers_of(o);
                if (responses.empty()) continue;
                std::size_t k = occurrence++;
                if (k >= choice.size()) choice.push_back(0);
                counts.push_back(responses.size());
                nodes[on].children.push_back(static_cast<int>(nodes.size()));
                build_p(responses[choice[k]], on);
            }
        };
        build_p(arg, -1);
        out.emplace_back(r, std::move(nodes));
        if (out.size() > max_trees) throw Error(ErrorCode::ExplosionBudgetExceeded, "too many maximal trees");
        choice.resize(counts.size());
        std::size_t k = counts.size();
        while (k > 0 && choice[k - 1] + 1 >= counts[k - 1]) --k;
        if (k == 0) break;
        choice.resize(k);
        ++choice[k - 1];
    }
    return out;
}

namespace {

std::pair<std::shared_ptr<const Reasoner>, std::size_t> locate(const AbaFramework& af, const Argument& arg) {
    auto r = std::make_shared<const Reasoner>(af);
    auto i = r->find(arg.claim, arg.support);
    if (!i) throw Error(ErrorCode::SchemaError, "not an argument of the framework: " + arg.str());
    return {r, *i};
}

}  // namespace

std::optional<DisputeTree> admissible_dispute_tree(const AbaFramework& af, const Argument& arg) {
    auto [r, i] = locate(af, arg);
    return admissible_dispute_tree(r, i);
}

std::vector<DisputeTree> maximal_dispute_trees(const AbaFramework& af, const Argument& arg) {
    auto [r, i] = locate(af, arg);
    return maximal_dispute_trees(r, i);
}

DisputeTree least_assumption_tree(const AbaFramework& af, const Argument& arg) {
    auto [r, i] = locate(af, arg);
    return least_assumption_tree(r, i);
}

DisputeTree best_effort_tree(const AbaFramework& af, const Argument& arg) {
    auto [r, i] = locate(af, arg);
    return best_effort_tree(r, i);
}

}  // namespace decarg
