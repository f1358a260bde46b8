#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "trinb/outranking.hpp"
#include "trinb/partition.hpp"

namespace trinb {

/// {"dims":[m1,...,mn], "A":["2220", ...]}. U is the complement.
TwofoldPartition parse_partition_json(std::string_view text);
/// Canonical form: dims first, A in lexicographic order, one key per line,
/// trailing newline. Equal partitions give byte-identical output.
std::string partition_to_json(const TwofoldPartition& p);

/// {"dims":[...], "semiorders":[[t(0),...],... | "identity"],
///  "vetoes":[[v(0),...],... | "none"], "coalitions":[[1,3],[2,3]],
///  "profiles":["111"]}. Coalitions are 1-based and need not be minimal.
/// Omitted semiorders/vetoes/coalitions default to identity/none/{N}.
/// Parses only; call validate_spec for the model constraints.
OutrankingSpec parse_spec_json(std::string_view text);
/// With `rule`, adds a "rule" field that cmd_assign falls back to.
std::string spec_to_json(const OutrankingSpec& spec, std::optional<Rule> rule = std::nullopt);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace trinb
