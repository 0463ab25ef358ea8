#ifndef WEYLGPD_ERRORS_HPP
#define WEYLGPD_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace weylgpd {

/// Malformed textual input. Line and column are 1-based; 0 means unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line = 0, std::size_t column = 0);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& detail() const noexcept { return detail_; }

  /// Copy of this error located at `line`, with `column_offset` added to the column.
  ParseError at(std::size_t line, std::size_t column_offset) const;

 private:
  std::string detail_;
  std::size_t line_;
  std::size_t column_;
};

/// The set defining a Cartan entry c_ij is empty (or its value is not an integer <= 0).
/// Vertices are 0-based; what() renders them 1-based.
class NotAdmissible : public std::runtime_error {
 public:
  NotAdmissible(std::size_t i, std::size_t j, const std::string& reason);

  std::size_t i() const noexcept { return i_; }
  std::size_t j() const noexcept { return j_; }

 private:
  std::size_t i_;
  std::size_t j_;
};

/// A non-simple root of a root list admits no decomposition into two listed roots.
class MalformedDelta : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace weylgpd

#endif  // WEYLGPD_ERRORS_HPP
