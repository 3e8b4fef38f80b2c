// dspec: command-line front end for specificity comparisons.
//
// Exit codes: 0 success, 1 corpus mismatch or violated verification,
// 2 usage/file/parse error, 3 not an argument, 4 resource cap exceeded.

#include "dspec/activation.hpp"
#include "dspec/corpus.hpp"
#include "dspec/error.hpp"
#include "dspec/specificity.hpp"
#include "dspec/syntactic.hpp"
#include "dspec/textio.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <unistd.h>

namespace {

using namespace dspec;

constexpr int exit_ok = 0;
constexpr int exit_mismatch = 1;
constexpr int exit_input = 2;
constexpr int exit_not_argument = 3;
constexpr int exit_resource = 4;

struct Options {
    std::string spec;
    std::string manifest;
    std::string relation = "all";
    std::string property;
    std::string domain = "strict";
    std::string format = "text";
    std::string literal;
    std::vector<std::string> args;
    bool no_minimal = false;
    bool simplified = false;
    std::uint64_t seed = 0;
    std::size_t max_args = 64;
    std::size_t max_domain = Limits{}.max_domain;
};

bool use_color() {
    const char* env = std::getenv("DSPEC_COLOR");
    if (env && std::string(env) == "0") return false;
    return ::isatty(STDOUT_FILENO) != 0;
}

std::string paint(const std::string& s, const char* code) {
    return use_color() ? std::string("\033[") + code + "m" + s + "\033[0m" : s;
}

std::string render_set(const std::vector<Literal>& ls) {
    std::string out = "{";
    for (std::size_t i = 0; i < ls.size(); ++i) out += (i ? ", " : "") + to_string(ls[i]);
    return out + "}";
}

std::string render_paths(const std::set<Path>& paths) {
    std::string out = "{";
    bool first = true;
    for (const auto& p : paths) {
        out += (first ? "" : ", ") + render_set({p.begin(), p.end()});
        first = false;
    }
    return out + "}";
}

Limits limits_of(const Options& o) {
    Limits l;
    l.max_domain = o.max_domain;
    l.max_args = o.max_args;
    return l;
}

std::vector<Relation> relations_of(const std::string& name) {
    if (name == "all") return {all_relations.begin(), all_relations.end()};
    if (auto r = parse_relation(name)) return {*r};
    throw CLI::ValidationError("--relation", "expected p1, p2, p3, cp or all");
}

std::vector<Argument> population(const Program& program, const Options& o) {
    if (o.args.empty()) return check_population(program, o.max_args);
    std::vector<Argument> out;
    for (const auto& text : o.args) out.push_back(parse_argument(text, program));
    return out;
}

int cmd_closure(const Options& o) {
    const Program program(load_spec(o.spec), limits_of(o));
    const auto& table = program.literals();
    std::cout << "T_Pi = " << render_set(table.to_literals(program.strict_theory())) << '\n';
    std::cout << "T_Pi+Delta = " << render_set(table.to_literals(program.full_theory())) << '\n';
    auto witness = [&](const LitSet& s) {
        auto w = contradiction_witness(table, s);
        return w ? to_string(*w) : std::string("none");
    };
    std::cout << "contradiction in T_Pi: " << witness(program.strict_theory()) << '\n';
    std::cout << "contradiction in T_Pi+Delta: " << witness(program.full_theory()) << '\n';
    return exit_ok;
}

int cmd_compare(const Options& o) {
    const Program program(load_spec(o.spec), limits_of(o));
    if (o.args.size() != 2) throw CLI::ValidationError("compare", "expected exactly two arguments");
    const Argument a1 = parse_argument(o.args[0], program);
    const Argument a2 = parse_argument(o.args[1], program);
    const LeqOptions opts{!o.no_minimal};
    for (Relation r : relations_of(o.relation)) {
        const Outcome out = compare(program, r, a1, a2, opts);
        std::cout << relation_name(r) << ": " << render_outcome(out) << " (" << outcome_word(out) << ")\n";
    }
    return exit_ok;
}

int cmd_corpus(const Options& o) {
    const auto judgments = load_manifest(o.manifest);
    const auto report = run_corpus(judgments, limits_of(o), LeqOptions{!o.no_minimal});
    for (const auto& c : report.cases) {
        for (const auto& r : c.judgments) {
            const auto& j = r.judgment;
            std::ostringstream line;
            line << j.spec.filename().string() << ':' << j.line << ' ' << j.relation << " expected " << j.expected;
            if (r.passed) {
                std::cout << paint("PASS", "32") << ' ' << line.str() << "  [" << j.anchor << "]\n";
            } else {
                std::cout << paint("FAIL", "31") << ' ' << line.str() << ", computed "
                          << (r.error.empty() ? r.computed : "error: " + r.error) << "  [" << j.anchor << "]\n"
                          << "  - " << j.arg1 << '\n'
                          << "  - " << j.arg2 << '\n';
            }
        }
    }
    std::cout << report.passed() << " passed, " << report.failed() << " failed, " << report.cases.size()
              << " spec files\n";
    return report.ok() ? exit_ok : exit_mismatch;
}

int cmd_check(const Options& o) {
    const Program program(load_spec(o.spec), limits_of(o));
    const auto args = population(program, o);
    const LeqOptions opts{!o.no_minimal};
    auto show = [&](std::size_t i) { return render_argument(args[i]); };
    std::cout << args.size() << " arguments\n";
    bool ok = true;

    if (o.property == "transitivity") {
        for (Relation r : relations_of(o.relation)) {
            const auto t = find_transitivity_counterexample(LeqMatrix(program, r, args, opts));
            if (!t) {
                std::cout << relation_name(r) << ": no counterexample\n";
                continue;
            }
            std::cout << relation_name(r) << ": counterexample\n"
                      << "  a = " << show(t->first) << "\n  b = " << show(t->second) << "\n  c = " << show(t->third)
                      << "\n  a <= b, b <= c, not a <= c\n";
        }
    } else if (o.property == "subset-chain") {
        if (auto w = verify_subset_chain(program, args, opts)) {
            ok = false;
            std::cout << "subset chain: violated, " << relation_name(w->stronger) << " holds but "
                      << relation_name(w->weaker) << " does not\n  a = " << show(w->first) << "\n  b = "
                      << show(w->second) << '\n';
        } else {
            std::cout << "subset chain: pass\n";
        }
    } else if (o.property == "cp-quasi-order") {
        const auto report = check_quasi_order(LeqMatrix(program, Relation::CP, args, opts), o.seed);
        ok = report.ok();
        std::cout << "reflexive: " << (report.irreflexive ? "no, " + show(*report.irreflexive) : "yes") << '\n';
        std::cout << "transitive: ";
        if (report.intransitive)
            std::cout << "no\n  a = " << show(report.intransitive->first) << "\n  b = "
                      << show(report.intransitive->second) << "\n  c = " << show(report.intransitive->third) << '\n';
        else
            std::cout << "yes (" << report.triples_checked << " triples)\n";
        std::cout << "strict part acyclic: " << (report.strict_cycle ? "no" : "yes") << '\n';
        if (report.strict_cycle)
            for (auto i : *report.strict_cycle) std::cout << "  " << show(i) << '\n';
    } else if (o.property == "theorem-conditions") {
        bool any = false;
        for (int n = 1; n <= 4; ++n) {
            const auto c = check_theorem_condition(program, n);
            any = any || c == ConditionResult::Holds;
            std::cout << "condition " << n << ": " << condition_result_name(c) << '\n';
        }
        if (any) {
            if (auto w = verify_p3_within_cp(program, args, opts)) {
                ok = false;
                std::cout << "P3 within CP: violated\n  a = " << show(w->first) << "\n  b = " << show(w->second)
                          << '\n';
            } else {
                std::cout << "P3 within CP: pass\n";
            }
        } else {
            std::cout << "P3 within CP: not implied by any condition\n";
        }
    } else if (o.property == "minimality-equivalence") {
        for (Relation r : relations_of(o.relation)) {
            if (auto w = verify_minimality_equivalence(program, r, args)) {
                ok = false;
                std::cout << relation_name(r) << ": differs\n  a = " << show(w->first) << "\n  b = " << show(w->second)
                          << '\n';
            } else {
                std::cout << relation_name(r) << ": identical\n";
            }
        }
    }
    return ok ? exit_ok : exit_mismatch;
}

int cmd_trees(const Options& o) {
    const Program program(load_spec(o.spec), limits_of(o));
    if (o.args.size() != 1) throw CLI::ValidationError("trees", "expected exactly one argument");
    const Argument a = parse_argument(o.args[0], program);
    const auto trees = derivation_trees(program, a);
    if (o.format == "dot") std::cout << "// ";
    std::cout << trees.size() << (trees.size() == 1 ? " tree\n" : " trees\n");
    for (std::size_t i = 0; i < trees.size(); ++i) {
        if (o.format == "dot") {
            std::cout << render_tree_dot(trees[i], "T" + std::to_string(i + 1));
            continue;
        }
        std::cout << "tree " << i + 1 << ":\n";
        std::istringstream text(render_tree_text(trees[i]));
        for (std::string line; std::getline(text, line);) std::cout << "  " << line << '\n';
        std::cout << "  paths: " << render_paths(paths_of(trees[i])) << '\n';
    }
    return exit_ok;
}

int cmd_arguments(const Options& o) {
    const Program program(load_spec(o.spec), limits_of(o));
    std::vector<Argument> args;
    if (o.literal.empty()) {
        args = collect_arguments(program, !o.no_minimal, o.max_args);
    } else {
        args = enumerate_arguments(program, parse_literal(o.literal), !o.no_minimal);
        if (args.size() > o.max_args)
            throw ResourceError("more than " + std::to_string(o.max_args) + " arguments (raise --max-args)");
    }
    for (const auto& a : args) std::cout << render_argument(a) << '\n';
    return exit_ok;
}

int cmd_activation_sets(const Options& o) {
    const Program program(load_spec(o.spec), limits_of(o));
    if (o.args.size() != 1) throw CLI::ValidationError("activation-sets", "expected exactly one argument");
    ActivationQuery q;
    q.argument = parse_argument(o.args[0], program);
    q.domain = o.domain == "full" ? Domain::DefeasibleClosure : Domain::Strict;
    q.simplified = o.simplified;
    q.minimal = !o.no_minimal;
    for (const auto& h : minimal_activation_sets(program, q)) std::cout << render_set(h) << '\n';
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Specificity comparisons between defeasible arguments"};
    app.require_subcommand(1);
    Options o;

    auto add_limits = [&](CLI::App* cmd) {
        cmd->add_option("--max-args", o.max_args, "Cap on enumerated arguments")->capture_default_str();
        cmd->add_option("--max-domain", o.max_domain, "Cap on activation-set domain size")->capture_default_str();
    };
    auto add_minimal = [&](CLI::App* cmd) {
        cmd->add_flag("--no-minimal", o.no_minimal, "Quantify over all activation sets, not only minimal ones");
    };
    auto add_relation = [&](CLI::App* cmd) {
        cmd->add_option("--relation", o.relation, "p1, p2, p3, cp or all")
            ->check(CLI::IsMember({"p1", "p2", "p3", "cp", "all"}, CLI::ignore_case))
            ->capture_default_str();
    };

    auto* closure = app.add_subcommand("closure", "Print T_Pi, T_Pi+Delta and contradiction witnesses");
    closure->add_option("spec", o.spec, "Specification file")->required();
    add_limits(closure);

    auto* compare_cmd = app.add_subcommand("compare", "Compare two arguments");
    compare_cmd->add_option("spec", o.spec, "Specification file")->required();
    compare_cmd->add_option("arguments", o.args, "Two arguments, e.g. '<{b <~ a}, b>'")->required()->expected(2);
    add_relation(compare_cmd);
    add_minimal(compare_cmd);
    add_limits(compare_cmd);

    auto* corpus = app.add_subcommand("corpus", "Run a regression manifest");
    corpus->add_option("manifest", o.manifest, "Manifest file")->required();
    add_minimal(corpus);
    add_limits(corpus);

    auto* check = app.add_subcommand("check", "Verify a property over the arguments of a specification");
    check->add_option("spec", o.spec, "Specification file")->required();
    check->add_option("property", o.property, "Property to verify")
        ->required()
        ->check(CLI::IsMember(
            {"transitivity", "subset-chain", "cp-quasi-order", "theorem-conditions", "minimality-equivalence"}));
    check->add_option("--arg", o.args, "Argument to include (repeatable); default: enumerate");
    check->add_option("--seed", o.seed, "Seed for sampled checks")->capture_default_str();
    add_relation(check);
    add_minimal(check);
    add_limits(check);

    auto* trees = app.add_subcommand("trees", "Print the derivation trees of an argument and their paths");
    trees->add_option("spec", o.spec, "Specification file")->required();
    trees->add_option("argument", o.args, "Argument")->required()->expected(1);
    trees->add_option("--format", o.format, "text or dot")
        ->check(CLI::IsMember({"text", "dot"}))
        ->capture_default_str();
    add_limits(trees);

    auto* arguments = app.add_subcommand("arguments", "List the arguments of a specification");
    arguments->add_option("spec", o.spec, "Specification file")->required();
    arguments->add_option("literal", o.literal, "Restrict to this conclusion");
    add_minimal(arguments);
    add_limits(arguments);

    auto* activation = app.add_subcommand("activation-sets", "List the activation sets of an argument");
    activation->add_option("spec", o.spec, "Specification file")->required();
    activation->add_option("argument", o.args, "Argument")->required()->expected(1);
    activation->add_option("--domain", o.domain, "strict (subsets of T_Pi) or full (subsets of T_Pi+Delta)")
        ->check(CLI::IsMember({"strict", "full"}))
        ->capture_default_str();
    activation->add_flag("--simplified", o.simplified, "Simplified activation sets");
    add_minimal(activation);
    add_limits(activation);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_input;
    }
    for (auto& c : o.relation) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));

    try {
        if (*closure) return cmd_closure(o);
        if (*compare_cmd) return cmd_compare(o);
        if (*corpus) return cmd_corpus(o);
        if (*check) return cmd_check(o);
        if (*trees) return cmd_trees(o);
        if (*arguments) return cmd_arguments(o);
        if (*activation) return cmd_activation_sets(o);
    } catch (const NotAnArgumentError& e) {
        std::cerr << "dspec: not an argument: " << e.what() << '\n';
        return exit_not_argument;
    } catch (const ResourceError& e) {
        std::cerr << "dspec: resource cap: " << e.what() << '\n';
        return exit_resource;
    } catch (const CLI::Error& e) {
        std::cerr << "dspec: " << e.what() << '\n';
        return exit_input;
    } catch (const std::exception& e) {
        std::cerr << "dspec: " << e.what() << '\n';
        return exit_input;
    }
    return exit_input;
}
