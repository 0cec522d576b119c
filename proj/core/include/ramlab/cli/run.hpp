#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ramlab/cli/problem.hpp"
#include "ramlab/identity/identity.hpp"

namespace ramlab {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerdict = 2;
inline constexpr int kExitComputation = 3;
inline constexpr int kExitInput = 4;

struct SplitSummary {
    long degree = 0;
    long lhs = 0;
    std::vector<RamifiedPrime> primes;
    std::vector<std::string> order_basis;
    std::string index;
    bool dedekind_maximal = false;
};

/// Result of one problem: a report, or the error that stopped it.
struct ProblemOutcome {
    std::string name;
    std::optional<ProblemSpec> spec;
    std::optional<IdentityReport> report;
    std::optional<SplitSummary> split;
    std::string error_kind;
    std::string error_message;
    int exit_code = kExitOk;
};

ProblemOutcome run(const ProblemSpec& spec);
/// Parses then runs; parse and validation failures become outcomes with
/// exit code 4. A positive precision overrides the file's.
ProblemOutcome run_text(std::string_view text, std::string name = {}, long precision = 0);

std::string render_text(const ProblemOutcome& outcome);
std::string render_json(const ProblemOutcome& outcome);

struct CorpusResult {
    /// One per *.problem file, ordered by file name.
    std::vector<ProblemOutcome> outcomes;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t errors = 0;
    double seconds = 0;

    int exit_code() const;
};

/// Runs every *.problem file in dir on up to `threads` workers (0: hardware
/// concurrency); a positive precision replaces the one in each file.
/// ValidationError if dir is not a directory.
CorpusResult run_corpus(const std::filesystem::path& dir, unsigned threads = 0, long precision = 0);

std::string render_text(const CorpusResult& result);
std::string render_json(const CorpusResult& result);

}  // namespace ramlab
