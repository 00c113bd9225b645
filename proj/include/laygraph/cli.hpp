#ifndef LAYGRAPH_CLI_HPP
#define LAYGRAPH_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "laygraph/series.hpp"

namespace laygraph::cli {

enum ExitCode : int {
    kOk = 0,
    kFailure = 1,
    kUsage = 2,
    kDisagreement = 3,
};

/// Runs one command line. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct NamedCoefficients {
    std::string name;
    std::vector<Int> coeffs;
};

/// True when every column holds the same coefficient vector.
bool all_agree(const std::vector<NamedCoefficients>& columns);

/// One row per degree, one column per method; rows that disagree are
/// marked with '*'.
std::string agreement_table(const std::vector<NamedCoefficients>& columns);

}  // namespace laygraph::cli

#endif  // LAYGRAPH_CLI_HPP
