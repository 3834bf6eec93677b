#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>

#include "qcount/big_count.hpp"
#include "qcount/numtheory.hpp"

namespace qcount::cli {

enum class ExitStatus : int {
    success = 0,
    mismatch = 1,
    usage = 2,
};

enum class GraphFormat { dot, summary };

// Each command writes data to `out` and one-line diagnostics to `err`.
ExitStatus cmd_count(Int n, std::ostream& out, std::ostream& err);
ExitStatus cmd_table(Int n_max, std::ostream& out, std::ostream& err);
ExitStatus cmd_matrix(Int n, std::ostream& out, std::ostream& err);
ExitStatus cmd_graph(Int n, GraphFormat format, std::ostream& out, std::ostream& err);
ExitStatus cmd_verify(Int n, std::optional<std::uint64_t> seed, int max_n, std::ostream& out,
                      std::ostream& err);

struct OracleObservation {
    std::string label;
    BigCount value;
};

// Prints one "closed-form: X / <label>: Y" line per observation; success iff all agree.
ExitStatus report_verification(const BigCount& closed_form,
                               std::span<const OracleObservation> observations,
                               std::ostream& out, std::ostream& err);

// Full command line (argv[0] is the program name). Never throws.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qcount::cli
