#pragma once

#include "plsurf/parallel.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace plsurf {

// In-process implementation of the command-line tool. Every command returns
// its standard output, standard error and exit code; the executable only
// parses flags and reads files.
struct CommandResult {
    int exit_code = 0;
    std::string out;
    std::string err;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitNotEqual = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitInternal = 3;

CommandResult cmd_path_reduce(const std::string& input);
CommandResult cmd_path_sig(const std::string& input, std::size_t level);
CommandResult cmd_surface_sig(const std::string& input, std::size_t level, int weight, const Exec& exec);
// A missing Y means the identity word of X's dimension.
CommandResult cmd_thin_equiv(const std::string& x, const std::optional<std::string>& y, std::size_t level, int weight,
                             const Exec& exec);
CommandResult cmd_triangulate(const std::string& input, const Exec& exec);
CommandResult cmd_gen_example(const std::string& name);

struct SelfcheckOptions {
    int dual_weight = 6;        // dual-basis suite: weights 3..dual_weight in dim 3
    std::size_t level = 5;      // Peiffer quotient level (dim 3); curvature weights 3..level
    std::size_t samples = 50;   // random instances per Peiffer axiom
    std::uint64_t seed = 1;
};

struct SuiteResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

SuiteResult check_dual_basis(std::size_t dim, int max_weight, const Exec& exec);
SuiteResult check_curvature_identity(std::size_t dim, std::size_t level);
SuiteResult check_peiffer_axioms(std::size_t dim, std::size_t level, std::size_t samples, std::uint64_t seed);

CommandResult cmd_selfcheck(const SelfcheckOptions& opt, const Exec& exec);

} // namespace plsurf
