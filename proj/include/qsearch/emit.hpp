#pragma once

#include <string>
#include <vector>

#include "qsearch/analysis.hpp"

namespace qsearch {

inline constexpr const char* kArtifactVersion = "0.1.0";

enum class OutputFormat { Csv, Json, Svg };

OutputFormat parse_format(const std::string& s);

/// Provenance block written into every emitted file.
struct EmitMetadata {
    int n;
    int M;
    double theta;
    double theta_approx;
    int k_opt;
    std::string algorithm;  // "grover" or "pi3"
};

/// Shortest round-trip decimal representation of a double.
std::string format_double(double x);

std::string render_csv(const std::vector<EntanglementPoint>& rows, const EmitMetadata& meta);
std::string render_json(const std::vector<EntanglementPoint>& rows, const EmitMetadata& meta);
std::string render_svg(const std::vector<EntanglementPoint>& rows, const EmitMetadata& meta);

std::string render_table(const std::vector<EntanglementPoint>& rows, const EmitMetadata& meta,
                         OutputFormat format);

/// Renders and writes; throws std::runtime_error on I/O failure.
void emit_table(const std::vector<EntanglementPoint>& rows, const EmitMetadata& meta,
                OutputFormat format, const std::string& path);

/// Parses rows back out of render_csv output (metadata lines skipped).
std::vector<EntanglementPoint> parse_csv(const std::string& text);

}  // namespace qsearch
