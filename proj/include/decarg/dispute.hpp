#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "decarg/aba.hpp"

namespace decarg {

enum class Player { Proponent, Opponent };
enum class TreeKind { Admissible, Maximal, Other };

inline constexpr std::size_t kTreeBudget = 100000;

struct DisputeNode {
    Player player;
    std::size_t argument;  // index into the reasoner's arguments
    int parent = -1;
    std::vector<int> children;
    int fold_ref = -1;  // P ancestor holding the same argument
    std::optional<Sentence> culprit;
};

// Finite dispute tree. A proponent node that repeats the argument of a
// proponent ancestor is a fold-back: it stands for the (infinite) repetition
// of that ancestor's subtree and is not a leaf.
class DisputeTree {
public:
    DisputeTree(std::shared_ptr<const Reasoner> reasoner, std::vector<DisputeNode> nodes);

    const Reasoner& reasoner() const { return *reasoner_; }
    std::shared_ptr<const Reasoner> reasoner_ptr() const { return reasoner_; }
    const std::vector<DisputeNode>& nodes() const { return nodes_; }
    const DisputeNode& node(int i) const { return nodes_[i]; }
    const Argument& argument_of(int i) const { return reasoner_->argument(nodes_[i].argument); }
    std::size_t size() const { return nodes_.size(); }
    TreeKind kind() const { return kind_; }

    bool is_leaf(int i) const { return nodes_[i].children.empty() && nodes_[i].fold_ref < 0; }
    bool is_ancestor(int n1, int n2) const;
    // O leaf or ancestor of an O leaf.
    bool fails(int i) const;

    AssumptionSet defence_set() const;
    AssumptionSet la() const;
    std::vector<int> lo() const;
    std::set<std::size_t> lo_arguments() const;

    // Indented preorder listing, one node per line.
    std::string canonical() const;

private:
    TreeKind classify() const;

    std::shared_ptr<const Reasoner> reasoner_;
    std::vector<DisputeNode> nodes_;
    TreeKind kind_;
};

std::optional<DisputeTree> admissible_dispute_tree(std::shared_ptr<const Reasoner> r, std::size_t arg);
std::vector<DisputeTree> maximal_dispute_trees(std::shared_ptr<const Reasoner> r, std::size_t arg,
                                               std::size_t max_trees = 10000);
DisputeTree least_assumption_tree(std::shared_ptr<const Reasoner> r, std::size_t arg);
DisputeTree best_effort_tree(std::shared_ptr<const Reasoner> r, std::size_t arg);
// Same, but first looks for a tree none of whose opponent leaves satisfy
// `avoid_leaf`; the result is LO-minimal either way.
DisputeTree best_effort_tree(std::shared_ptr<const Reasoner> r, std::size_t arg,
                             const std::function<bool(std::size_t)>& avoid_leaf);

// Convenience overloads that build a reasoner for the framework.
std::optional<DisputeTree> admissible_dispute_tree(const AbaFramework& af, const Argument& arg);
std::vector<DisputeTree> maximal_dispute_trees(const AbaFramework& af, const Argument& arg);
DisputeTree least_assumption_tree(const AbaFramework& af, const Argument& arg);
DisputeTree best_effort_tree(const AbaFramework& af, const Argument& arg);

// Builds the tree induced by a response map (O argument -> P argument, -1
// for none), unfolding from the root until arguments repeat.
DisputeTree tree_from_responses(std::shared_ptr<const Reasoner> r, std::size_t root,
                                const std::vector<int>& response);

}  // namespace decarg
