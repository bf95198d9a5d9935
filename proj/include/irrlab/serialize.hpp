#pragma once

#include <string>
#include <string_view>

#include "irrlab/indices.hpp"
#include "irrlab/verify.hpp"

namespace irrlab {

enum class Format { Text, Csv, Json };

/// "text" | "csv" | "json"; throws PreconditionError otherwise.
Format parse_format(std::string_view name);

inline constexpr std::string_view kToolName = "irrlab";
inline constexpr std::string_view kToolVersion = "1.0.0";

/// Reals are printed with 12 significant digits everywhere.
std::string format_real(double value);

std::string serialize(const IndexBundle& bundle, Format format);
std::string serialize(const verify::Table1& table, Format format);
std::string serialize(const verify::Report& report, Format format);

enum class ExtremalIndex { Irr, Sigma, Both };
std::string serialize(const verify::ExtremalTrees& ext, ExtremalIndex index, Format format);

}  // namespace irrlab
