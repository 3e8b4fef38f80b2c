#pragma once

// Derivation trees of an argument and the path-based syntactic comparison.

#include "dspec/arguments.hpp"

#include <set>
#include <string>
#include <vector>

namespace dspec {

/// A node is labelled with a literal and the rule used to derive it; the
/// children derive the rule's body literals in order.
struct DerivationTree {
    Literal label;
    Rule rule;
    std::vector<DerivationTree> children;

    bool operator==(const DerivationTree&) const = default;
};

/// All derivation trees for the argument's conclusion built from the strict
/// rules and the argument's support, without a literal repeated along any
/// root-to-leaf path. Throws ResourceError past Limits::max_trees.
std::vector<DerivationTree> derivation_trees(const Program& program, const Argument& arg);

using Path = std::set<Literal>;

/// For each leaf, its label together with the labels of its ancestors, the
/// root excluded. A tree consisting of the root alone has the single empty path.
std::set<Path> paths_of(const DerivationTree& tree);

/// Every path of t2 includes some path of t1.
bool tree_leq(const DerivationTree& t1, const DerivationTree& t2);

/// Every tree of a1 is tree_leq some tree of a2.
bool syntactic_leq(const Program& program, const Argument& a1, const Argument& a2);

/// One line per node, two spaces of indentation per level.
std::string render_tree_text(const DerivationTree& tree);

/// Graphviz digraph; edges introduced by strict rules are drawn doubled.
std::string render_tree_dot(const DerivationTree& tree, const std::string& name = "tree");

} // namespace dspec
