#include "weylgpd/errors.hpp"

namespace weylgpd {

namespace {

std::string located(const std::string& message, std::size_t line, std::size_t column) {
  if (line == 0 && column == 0) return message;
  std::string where;
  if (line != 0) where = "line " + std::to_string(line);
  if (column != 0) where += (where.empty() ? "column " : ", column ") + std::to_string(column);
  return where + ": " + message;
}

}  // namespace

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : std::runtime_error(located(message, line, column)),
      detail_(message),
      line_(line),
      column_(column) {}

ParseError ParseError::at(std::size_t line, std::size_t column_offset) const {
  return ParseError(detail_, line, column_ + column_offset);
}

NotAdmissible::NotAdmissible(std::size_t i, std::size_t j, const std::string& reason)
    : std::runtime_error("not admissible at (" + std::to_string(i + 1) + ", " +
                         std::to_string(j + 1) + "): " + reason),
      i_(i),
      j_(j) {}

}  // namespace weylgpd
