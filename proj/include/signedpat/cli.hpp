#pragma once

#include "signedpat/registry.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace signedpat::cli {

enum class Format { Text, Json, Csv };

enum ExitCode : int {
    kOk = 0,
    kMismatch = 1,
    kUsage = 2,
    kCapacity = 3,
};

/// Environment variable consulted for the node budget when --max-nodes is absent.
inline constexpr const char* kCapacityEnv = "SIGNEDPAT_MAX_NODES";

struct RunConfig {
    std::string subcommand;
    std::optional<int> n;
    std::optional<int> nmax;
    int r = 1;
    int l = 1;
    int order = kDefaultSeriesOrder;
    std::string patterns;
    std::string series_name = "d";
    Method method = Method::Brute;
    Format format = Format::Text;
    std::optional<std::uint64_t> max_nodes;
    unsigned workers = 1;
};

Format parse_format(std::string_view name);

/// Executes one subcommand. Data goes to `out`, diagnostics to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv into a RunConfig and runs it.
int main(int argc, char** argv);

} // namespace signedpat::cli
