#ifndef MULT_CLI_HPP
#define MULT_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace mult {

// Embedded copy of data/regression_corpus.txt (generated at build time).
const char* regression_corpus_text();

namespace cli {

// Exit codes: 0 success, 1 usage or parse error, 2 a verified statement
// failed or an oracle disagreed, 3 inconclusive truncation.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct CorpusEntry {
    std::string command_line;
    std::vector<std::string> argv;
    std::string expected_output;
    int expected_exit = 0;
};

std::vector<CorpusEntry> parse_corpus(const std::string& text);

struct CorpusResult {
    unsigned total = 0;
    unsigned mismatched = 0;
    std::string diagnostics;
};

// Re-runs every corpus entry in-process and compares output and exit codes.
CorpusResult replay_corpus();

unsigned worker_threads();  // MULTCTL_THREADS, default 1

}  // namespace cli
}  // namespace mult

#endif
