#include "dspec/syntactic.hpp"

#include "dspec/error.hpp"

#include <algorithm>
#include <sstream>

namespace dspec {

namespace {

class TreeBuilder {
public:
    TreeBuilder(const Program& p, const Argument& arg)
        : p_(p)
        , by_head_(p.literals().size()) {
        const DeltaSet support = p.delta_set(arg.support);
        for (RuleId id : p.strict_rules()) by_head_[p.rules().rule(id).head].push_back(id);
        for (auto i = support.find_first(); i != DeltaSet::npos; i = support.find_next(i)) {
            const RuleId id = p.defeasible_rules()[i];
            by_head_[p.rules().rule(id).head].push_back(id);
        }
    }

    std::vector<DerivationTree> build(LitId goal) {
        LitSet on_path = p_.literals().empty_set();
        return build(goal, on_path);
    }

private:
    void check_cap(std::size_t n) const {
        if (n > p_.limits().max_trees)
            throw ResourceError("more than " + std::to_string(p_.limits().max_trees) + " derivation trees");
    }

    std::vector<DerivationTree> build(LitId goal, LitSet& on_path) {
        std::vector<DerivationTree> out;
        on_path.set(goal);
        for (RuleId id : by_head_[goal]) {
            const InternedRule& r = p_.rules().rule(id);
            if (std::any_of(r.body.begin(), r.body.end(), [&](LitId b) { return on_path.test(b); })) continue;

            // Cartesian product of the alternatives for each body literal.
            std::vector<std::vector<DerivationTree>> partial{{}};
            for (LitId b : r.body) {
                auto options = build(b, on_path);
                std::vector<std::vector<DerivationTree>> next;
                for (const auto& prefix : partial)
                    for (const auto& option : options) {
                        next.push_back(prefix);
                        next.back().push_back(option);
                        check_cap(next.size());
                    }
                partial = std::move(next);
                if (partial.empty()) break;
            }
            for (auto& children : partial) {
                out.push_back({p_.literals().at(goal), p_.rules().rules()[id], std::move(children)});
                check_cap(out.size());
            }
        }
        on_path.reset(goal);
        return out;
    }

    const Program& p_;
    std::vector<std::vector<RuleId>> by_head_;
};

void collect_paths(const DerivationTree& node, Path& prefix, bool is_root, std::set<Path>& out) {
    if (!is_root) prefix.insert(node.label);
    if (node.children.empty()) {
        out.insert(prefix);
    } else {
        for (const auto& c : node.children) collect_paths(c, prefix, false, out);
    }
    if (!is_root) prefix.erase(node.label);
}

void render_text(const DerivationTree& node, int depth, std::ostringstream& out) {
    out << std::string(static_cast<std::size_t>(depth) * 2, ' ') << to_string(node.rule) << '\n';
    for (const auto& c : node.children) render_text(c, depth + 1, out);
}

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

int render_dot(const DerivationTree& node, int& next_id, std::ostringstream& out) {
    const int id = next_id++;
    out << "  n" << id << " [label=\"" << dot_escape(to_string(node.label)) << "\"];\n";
    for (const auto& c : node.children) {
        const int child = render_dot(c, next_id, out);
        out << "  n" << id << " -> n" << child;
        if (node.rule.is_strict()) out << " [color=\"black:black\"]";
        out << ";\n";
    }
    return id;
}

} // namespace

std::vector<DerivationTree> derivation_trees(const Program& program, const Argument& arg) {
    const auto goal = program.literals().find(arg.conclusion);
    if (!goal) return {};
    return TreeBuilder(program, arg).build(*goal);
}

std::set<Path> paths_of(const DerivationTree& tree) {
    std::set<Path> out;
    Path prefix;
    collect_paths(tree, prefix, true, out);
    return out;
}

bool tree_leq(const DerivationTree& t1, const DerivationTree& t2) {
    const auto p1 = paths_of(t1);
    const auto p2 = paths_of(t2);
    return std::all_of(p2.begin(), p2.end(), [&](const Path& b) {
        return std::any_of(p1.begin(), p1.end(),
                           [&](const Path& a) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); });
    });
}

bool syntactic_leq(const Program& program, const Argument& a1, const Argument& a2) {
    const auto trees1 = derivation_trees(program, a1);
    const auto trees2 = derivation_trees(program, a2);
    return std::all_of(trees1.begin(), trees1.end(), [&](const DerivationTree& t1) {
        return std::any_of(trees2.begin(), trees2.end(), [&](const DerivationTree& t2) { return tree_leq(t1, t2); });
    });
}

std::string render_tree_text(const DerivationTree& tree) {
    std::ostringstream out;
    render_text(tree, 0, out);
    return out.str();
}

std::string render_tree_dot(const DerivationTree& tree, const std::string& name) {
    std::ostringstream out;
    out << "digraph \"" << dot_escape(name) << "\" {\n";
    int next_id = 0;
    render_dot(tree, next_id, out);
    out << "}\n";
    return out.str();
}

} // namespace dspec
