#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace hyperoct {

enum class OutputFormat { Json, Csv, Latex, Text };

struct RunConfig {
  int n = 2;
  int truncation = 0;  // 0 selects 2n^2
  int cap = 7;
  OutputFormat format = OutputFormat::Text;
  std::uint64_t seed = 0;
  bool self_check = false;

  int effective_truncation() const { return truncation > 0 ? truncation : 2 * n * n; }
  // throws CapExceeded / InvalidArgument when n > cap or truncation < n^2
  void validate() const;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitIdentityFailure = 1;
inline constexpr int kExitUsage = 2;

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace hyperoct
