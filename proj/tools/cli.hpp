#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace opn::cli {

enum class OutputFormat { Text, Records };

struct RunConfig {
    std::uint64_t trial_bound = 1'000'000;
    std::uint64_t rho_iterations = 1ULL << 22;
    std::size_t ln2_precision_cap = 4096;
    std::optional<std::string> cache_path;
    OutputFormat output_format = OutputFormat::Text;
    unsigned parallelism = 1;
};

/// Environment variable naming the default factor-cache file.
inline constexpr const char* kCacheEnv = "OPN_FACTOR_CACHE";

/// Exit codes: 0 success, 1 domain error, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace opn::cli
