#include "weylgpd/root.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "weylgpd/errors.hpp"

namespace weylgpd {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("root coordinate overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("root coordinate overflow");
  return r;
}

}  // namespace

Root Root::simple(std::size_t rank, Vertex i) {
  Root r = zero(rank);
  r.coords.at(i) = 1;
  return r;
}

bool Root::is_zero() const noexcept {
  return std::all_of(coords.begin(), coords.end(), [](auto v) { return v == 0; });
}

bool Root::is_nonnegative() const noexcept {
  return std::all_of(coords.begin(), coords.end(), [](auto v) { return v >= 0; });
}

bool Root::is_negative() const noexcept { return (-*this).is_positive(); }

std::int64_t Root::height() const noexcept {
  std::int64_t h = 0;
  for (auto v : coords) h += v;
  return h;
}

Root Root::operator-() const {
  Root r = *this;
  for (auto& v : r.coords) v = checked_mul(v, -1);
  return r;
}

Root operator+(const Root& a, const Root& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("Root rank mismatch");
  Root r = a;
  for (std::size_t i = 0; i < r.rank(); ++i) r.coords[i] = checked_add(r.coords[i], b.coords[i]);
  return r;
}

Root operator-(const Root& a, const Root& b) { return a + (-b); }

Root operator*(std::int64_t k, const Root& a) {
  Root r = a;
  for (auto& v : r.coords) v = checked_mul(v, k);
  return r;
}

std::string Root::str() const {
  if (is_zero()) return "0";
  if (!is_nonnegative()) {
    if (is_negative()) return "-" + (-*this).str();
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < coords.size(); ++i) out << (i ? "," : "") << coords[i];
    out << ')';
    return out.str();
  }
  std::string out;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] == 0) continue;
    const std::string index = std::to_string(i + 1);
    out += index.size() == 1 ? index : "(" + index + ")";
    if (coords[i] >= 10)
      out += "^(" + std::to_string(coords[i]) + ")";
    else if (coords[i] >= 2)
      out += "^" + std::to_string(coords[i]);
  }
  return out;
}

Root Root::parse(std::string_view text, std::size_t rank) {
  Root r = zero(rank);
  std::size_t pos = 0;
  auto fail = [&](const std::string& msg) -> void {
    throw ParseError(msg + " in root '" + std::string(text) + "'", 0, pos + 1);
  };
  auto read_int = [&]() {
    const std::size_t start = pos;
    std::int64_t v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      if (v > 1'000'000'000) fail("integer too large");
      v = v * 10 + (text[pos] - '0');
      ++pos;
    }
    if (pos == start) fail("expected a digit");
    return v;
  };
  if (text.empty()) fail("empty root");
  while (pos < text.size()) {
    std::int64_t index = 0;
    if (text[pos] == '(') {
      ++pos;
      index = read_int();
      if (pos >= text.size() || text[pos] != ')') fail("expected ')'");
      ++pos;
    } else if (std::isdigit(static_cast<unsigned char>(text[pos]))) {
      index = text[pos] - '0';
      ++pos;
    } else {
      fail("unexpected character");
    }
    if (index < 1 || static_cast<std::size_t>(index) > rank) fail("simple root index out of range");
    std::int64_t mult = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      if (pos < text.size() && text[pos] == '(') {
        ++pos;
        mult = read_int();
        if (pos >= text.size() || text[pos] != ')') fail("expected ')'");
        ++pos;
      } else {
        // Bare exponents are one digit: 1^22^3 is 1^2 2^3.
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) fail("expected a digit");
        mult = text[pos] - '0';
        ++pos;
      }
      if (mult < 1) fail("exponent must be positive");
    }
    r.coords[static_cast<std::size_t>(index - 1)] += mult;
  }
  return r;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Root IntMatrix::column(std::size_t c) const {
  Root r = Root::zero(n_);
  for (std::size_t i = 0; i < n_; ++i) r.coords[i] = (*this)(i, c);
  return r;
}

std::vector<std::int64_t> IntMatrix::row(std::size_t r) const {
  return {a_.begin() + static_cast<std::ptrdiff_t>(r * n_),
          a_.begin() + static_cast<std::ptrdiff_t>((r + 1) * n_)};
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("IntMatrix size mismatch");
  IntMatrix m(a.n_);
  for (std::size_t i = 0; i < a.n_; ++i)
    for (std::size_t k = 0; k < a.n_; ++k) {
      const std::int64_t aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < a.n_; ++j) m(i, j) = checked_add(m(i, j), checked_mul(aik, b(k, j)));
    }
  return m;
}

Root IntMatrix::apply(const Root& v) const {
  if (v.rank() != n_) throw std::invalid_argument("IntMatrix/Root size mismatch");
  Root r = Root::zero(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) r.coords[i] = checked_add(r.coords[i], checked_mul((*this)(i, j), v.coords[j]));
  return r;
}

std::string IntMatrix::str() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) out << (j ? " " : "") << (*this)(i, j);
    out << '\n';
  }
  return out.str();
}

bool is_gcm(const IntMatrix& c) {
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c(i, i) != 2) return false;
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (i == j) continue;
      if (c(i, j) > 0) return false;
      if ((c(i, j) == 0) != (c(j, i) == 0)) return false;
    }
  }
  return true;
}

IntMatrix simple_reflection(const Gcm& cartan, Vertex i) {
  IntMatrix s = IntMatrix::identity(cartan.size());
  for (std::size_t j = 0; j < cartan.size(); ++j) s(i, j) -= cartan(i, j);
  return s;
}

}  // namespace weylgpd
