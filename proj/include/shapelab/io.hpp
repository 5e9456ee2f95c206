#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "shapelab/closed_form.hpp"
#include "shapelab/domains.hpp"
#include "shapelab/fd_solver.hpp"
#include "shapelab/functional.hpp"

namespace shapelab {

inline constexpr int kSchemaVersion = 1;

/// Domain from its JSON description. Grid domains are either run-length
/// encoded ({"rows", "cols", "spacing", "rle"}, runs alternate starting with
/// empty cells) or a named shape rasterised at `per_unit` cells per unit
/// length ({"shape": "disk", "radius": 0.5}).
DomainSpec domain_from_json(const nlohmann::json& j, int per_unit = 256);
nlohmann::json domain_to_json(const DomainSpec& spec);

/// `arg` is inline JSON (starts with '{'), a .json file or a .pbm file.
DomainSpec load_domain(const std::string& arg, int per_unit = 256);

nlohmann::json result_to_json(const SpectralResult& r);

/// Fixed-precision formatting shared by every text output.
std::string fmt(double v);

/// CSV with the "# schema=1" comment line followed by the header.
class CsvWriter {
public:
    CsvWriter(std::ostream& out, std::vector<std::string> columns);
    void row(const std::vector<std::string>& cells);

private:
    std::ostream& out_;
    std::size_t width_;
};

/// Reads a CSV written by CsvWriter; returns the data rows as strings.
/// Throws ValidationError on a missing or unknown schema line.
std::vector<std::vector<std::string>> read_csv(std::istream& in, std::vector<std::string>* header = nullptr);

/// Rows (i, j, value) for every interior cell.
void write_field_csv(std::ostream& out, const GridField& field);

/// Rows (x, h) in base dimension 1, (x, y, h) in dimension 2.
void write_profile_csv(std::ostream& out, const ConcaveProfile& profile);

/// Inverse of write_profile_csv for a profile sampled on `base` with `n`
/// cells per axis: every sample is matched to its cell.
ConcaveProfile read_profile_csv(std::istream& in, const ConvexBase& base, int n);

}  // namespace shapelab
