#ifndef WEYLGPD_CLI_HPP
#define WEYLGPD_CLI_HPP

#include <cstddef>
#include <iosfwd>
#include <string>

#include "weylgpd/groupoid.hpp"

namespace weylgpd {

enum class Mode { Auto, Nichols, Super, Groupoid, Pbw, Verify };
enum class Format { Text, Json };

struct JobSpec {
  Mode mode = Mode::Auto;
  /// Path of the input file; "-" reads standard input.
  std::string input = "-";
  Format format = Format::Text;
  std::size_t object_cap = kDefaultObjectCap;
  std::size_t morphism_cap = kDefaultMorphismCap;
  bool with_pbw = false;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitInfinite = 2;

/// Runs one job on already-read input text. Results go to `out`, diagnostics to `err`.
/// Returns 0 for Finite / passed, 2 for Infinite / failed verification, 1 for input errors.
int run_text(const JobSpec& job, const std::string& text, std::ostream& out, std::ostream& err);

/// Reads job.input and calls run_text.
int run(const JobSpec& job, std::ostream& out, std::ostream& err);

}  // namespace weylgpd

#endif  // WEYLGPD_CLI_HPP
