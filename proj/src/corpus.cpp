#include "dspec/corpus.hpp"

#include "dspec/error.hpp"
#include "dspec/syntactic.hpp"
#include "dspec/textio.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <map>
#include <memory>
#include <sstream>

namespace dspec {

namespace {

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

// Splits on ';' at brace depth 0 and outside double quotes.
std::vector<std::string> split_fields(std::string_view line) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    bool quoted = false;
    for (char c : line) {
        if (c == '"') quoted = !quoted;
        else if (!quoted && c == '{') ++depth;
        else if (!quoted && c == '}') depth = std::max(0, depth - 1);
        if (c == ';' && depth == 0 && !quoted) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(trim(cur));
    return out;
}

bool known_relation(const std::string& r) {
    static const char* names[] = {"p1",     "p2",     "p3",      "cp",   "p1-leq", "p2-leq",
                                  "p3-leq", "cp-leq", "syn-leq", "trees"};
    return std::find(std::begin(names), std::end(names), r) != std::end(names);
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

std::vector<Judgment> parse_manifest(std::string_view text, const std::filesystem::path& base_dir) {
    std::vector<Judgment> out;
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string line = trim(raw);
        if (line.empty() || line[0] == '#') continue;
        auto f = split_fields(line);
        if (f.size() != 6)
            throw ParseError("expected 6 ';'-separated fields, found " + std::to_string(f.size()), line_no, 1);
        Judgment j;
        j.line = line_no;
        j.spec = base_dir / f[0];
        j.relation = f[1];
        j.arg1 = f[2];
        j.arg2 = f[3];
        j.expected = f[4];
        std::string anchor = f[5];
        if (anchor.size() < 2 || anchor.front() != '"' || anchor.back() != '"')
            throw ParseError("the anchor must be a double-quoted string", line_no, 1);
        j.anchor = anchor.substr(1, anchor.size() - 2);
        if (!known_relation(j.relation)) throw ParseError("unknown relation '" + j.relation + "'", line_no, 1);
        out.push_back(std::move(j));
    }
    return out;
}

std::vector<Judgment> load_manifest(const std::filesystem::path& path) {
    return parse_manifest(read_file(path), path.parent_path());
}

Specification load_spec(const std::filesystem::path& path) {
    const std::string text = read_file(path);
    try {
        return parse_spec(text);
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ":" + e.what());
    }
}

std::size_t CorpusReport::passed() const {
    std::size_t n = 0;
    for (const auto& c : cases)
        for (const auto& j : c.judgments) n += j.passed ? 1 : 0;
    return n;
}

std::size_t CorpusReport::failed() const {
    std::size_t n = 0;
    for (const auto& c : cases)
        for (const auto& j : c.judgments) n += j.passed ? 0 : 1;
    return n;
}

JudgmentResult evaluate(const Program& program, const Judgment& j, const LeqOptions& opts) {
    JudgmentResult r{j, false, {}, {}};
    try {
        const Argument a1 = parse_argument(j.arg1, program);
        if (j.relation == "trees") {
            r.computed = std::to_string(derivation_trees(program, a1).size());
        } else {
            const Argument a2 = parse_argument(j.arg2, program);
            if (j.relation == "syn-leq") {
                r.computed = syntactic_leq(program, a1, a2) ? "true" : "false";
            } else if (j.relation.size() > 4 && j.relation.ends_with("-leq")) {
                const auto kind = parse_relation(j.relation.substr(0, j.relation.size() - 4));
                r.computed = leq(program, *kind, a1, a2, opts) ? "true" : "false";
            } else {
                const auto kind = parse_relation(j.relation);
                r.computed = std::string(render_outcome(compare(program, *kind, a1, a2, opts)));
            }
        }
        r.passed = r.computed == j.expected;
    } catch (const std::exception& e) {
        r.error = e.what();
    }
    return r;
}

CorpusReport run_corpus(const std::vector<Judgment>& judgments, const Limits& limits, const LeqOptions& opts) {
    std::vector<std::filesystem::path> order;
    std::map<std::filesystem::path, std::vector<const Judgment*>> groups;
    for (const auto& j : judgments) {
        auto [it, inserted] = groups.try_emplace(j.spec);
        if (inserted) order.push_back(j.spec);
        it->second.push_back(&j);
    }

    auto run_case = [&](const std::filesystem::path& spec) {
        CaseResult c{spec, {}, {}};
        const auto start = std::chrono::steady_clock::now();
        std::unique_ptr<Program> program;
        std::string load_error;
        try {
            program = std::make_unique<Program>(load_spec(spec), limits);
        } catch (const std::exception& e) {
            load_error = e.what();
        }
        for (const Judgment* j : groups.at(spec)) {
            if (program) c.judgments.push_back(evaluate(*program, *j, opts));
            else c.judgments.push_back({*j, false, {}, load_error});
        }
        c.elapsed = std::chrono::steady_clock::now() - start;
        return c;
    };

    std::vector<std::future<CaseResult>> jobs;
    for (const auto& spec : order) jobs.push_back(std::async(std::launch::async, run_case, spec));
    CorpusReport report;
    for (auto& job : jobs) report.cases.push_back(job.get());
    return report;
}

} // namespace dspec
