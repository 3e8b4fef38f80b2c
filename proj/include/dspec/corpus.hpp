#pragma once

// Regression manifests: one expected judgment per line,
//
//   <spec> ; <relation> ; <arg1> ; <arg2> ; <expected> ; "<anchor>"
//
// relation  p1 | p2 | p3 | cp          expected  < | > | ~= | ##
//           p1-leq | ... | cp-leq      expected  true | false   (arg1 <= arg2)
//           syn-leq                    expected  true | false   (syntactic)
//           trees                      expected  tree count of arg1; arg2 is "-"
//
// Spec paths are relative to the manifest's directory. Blank lines and lines
// starting with '#' are ignored. ';' inside braces or quotes does not split.

#include "dspec/program.hpp"
#include "dspec/specificity.hpp"

#include <chrono>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace dspec {

struct Judgment {
    std::size_t line = 0;
    std::filesystem::path spec;
    std::string relation;
    std::string arg1;
    std::string arg2;
    std::string expected;
    std::string anchor;
};

/// Throws ParseError for a malformed line.
std::vector<Judgment> parse_manifest(std::string_view text, const std::filesystem::path& base_dir);
std::vector<Judgment> load_manifest(const std::filesystem::path& path);

struct JudgmentResult {
    Judgment judgment;
    bool passed = false;
    std::string computed;  // empty when evaluation failed
    std::string error;
};

/// All judgments on one spec file; the unit of concurrency.
struct CaseResult {
    std::filesystem::path spec;
    std::vector<JudgmentResult> judgments;
    std::chrono::duration<double> elapsed{};
};

struct CorpusReport {
    std::vector<CaseResult> cases;  // ordered by first appearance in the manifest

    std::size_t passed() const;
    std::size_t failed() const;
    std::size_t total() const { return passed() + failed(); }
    bool ok() const { return failed() == 0; }
};

/// Evaluates one judgment against a loaded program.
JudgmentResult evaluate(const Program& program, const Judgment& j, const LeqOptions& opts = {});

/// Runs every case concurrently; results keep manifest order.
CorpusReport run_corpus(const std::vector<Judgment>& judgments, const Limits& limits = {},
                        const LeqOptions& opts = {});

/// Reads and parses a ".dspec" file. Throws Error (file or parse problems).
Specification load_spec(const std::filesystem::path& path);

} // namespace dspec
