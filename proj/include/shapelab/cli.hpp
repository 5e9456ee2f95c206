#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "shapelab/domains.hpp"

namespace shapelab {

enum class Command { eval, diagram, verify, thin, relaxed, sweep };
enum class OutFormat { csv, json, svg };

/// Parsed command line.
struct RunConfig {
    Command command = Command::eval;
    std::optional<DomainSpec> domain;
    std::optional<double> q;
    int dim = 2;
    int grid_n = 256;
    std::uint64_t seed = 1;
    OutFormat out_format = OutFormat::json;
    std::string out_path;   // empty: standard output
    std::string suite;      // verify only; empty runs every suite
    int jobs = 1;
    int samples = 0;        // 0: command default
    bool richardson = false;
    bool overlay_grid = false;
    std::optional<double> target;
    std::string family = "unions";

    /// Throws ValidationError when command-specific fields are missing or
    /// out of range.
    void validate() const;
};

/// Entry point of the shapelab executable. Returns 0 on success, 2 on usage
/// or validation errors and 3 on numerical failures.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace shapelab
