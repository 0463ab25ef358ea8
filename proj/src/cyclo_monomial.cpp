#include "weylgpd/cyclo_monomial.hpp"

#include <cctype>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "weylgpd/errors.hpp"

namespace weylgpd {

namespace {

std::int64_t floor_mod(__int128 a, std::int64_t m) {
  __int128 r = a % m;
  if (r < 0) r += m;
  return static_cast<std::int64_t>(r);
}

std::int64_t checked(__int128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw std::overflow_error("CycloMonomial exponent overflow");
  return static_cast<std::int64_t>(v);
}

class LiteralReader {
 public:
  LiteralReader(std::string_view text, std::optional<std::size_t> max_parameters)
      : text_(text), max_parameters_(max_parameters) {}

  CycloMonomial read() {
    if (text_.empty()) fail("empty scalar literal");
    CycloMonomial value = factor();
    while (pos_ < text_.size()) {
      if (text_[pos_] != '*') fail("expected '*' between factors");
      ++pos_;
      value *= factor();
    }
    return value;
  }

 private:
  CycloMonomial factor() {
    if (pos_ >= text_.size()) fail("expected a factor");
    const char c = text_[pos_];
    if (c == '1') {
      ++pos_;
      if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        fail("only the integer literals 1 and -1 are scalars");
      return {};
    }
    if (c == '-') {
      ++pos_;
      if (pos_ >= text_.size() || text_[pos_] != '1') fail("expected '-1'");
      ++pos_;
      if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        fail("only the integer literals 1 and -1 are scalars");
      return CycloMonomial::minus_one();
    }
    if (c == 'z') {
      ++pos_;
      const std::size_t start = pos_;
      const std::int64_t n = unsigned_int();
      if (n == 0) fail("root of unity order must be positive", start);
      return CycloMonomial::root_of_unity(optional_power(), n);
    }
    if (c == 't') {
      ++pos_;
      std::size_t index = 1;
      if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        const std::size_t start = pos_;
        const std::int64_t v = unsigned_int();
        if (v == 0) fail("parameter indices start at 1", start);
        index = static_cast<std::size_t>(v);
      }
      if (max_parameters_ && index > *max_parameters_)
        fail("parameter t" + std::to_string(index) + " exceeds declared count " +
             std::to_string(*max_parameters_));
      return CycloMonomial::parameter(index - 1, optional_power());
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::int64_t optional_power() {
    if (pos_ >= text_.size() || text_[pos_] != '^') return 1;
    ++pos_;
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
    }
    const std::int64_t v = unsigned_int();
    return negative ? -v : v;
  }

  std::int64_t unsigned_int() {
    const std::size_t start = pos_;
    std::int64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (v > (std::numeric_limits<std::int64_t>::max() - 9) / 10) fail("integer too large", start);
      v = v * 10 + (text_[pos_] - '0');
      ++pos_;
    }
    if (pos_ == start) fail("expected an integer");
    return v;
  }

  [[noreturn]] void fail(const std::string& message) { fail(message, pos_); }
  [[noreturn]] void fail(const std::string& message, std::size_t at) {
    throw ParseError(message + " in scalar '" + std::string(text_) + "'", 0, at + 1);
  }

  std::string_view text_;
  std::optional<std::size_t> max_parameters_;
  std::size_t pos_ = 0;
};

}  // namespace

CycloMonomial CycloMonomial::root_of_unity(std::int64_t num, std::int64_t den) {
  if (den <= 0) throw std::invalid_argument("root_of_unity: denominator must be positive");
  CycloMonomial v;
  v.num_ = floor_mod(num, den);
  v.den_ = den;
  v.normalize();
  return v;
}

CycloMonomial CycloMonomial::parameter(std::size_t index, std::int64_t power) {
  CycloMonomial v;
  v.exps_.assign(index + 1, 0);
  v.exps_[index] = power;
  v.normalize();
  return v;
}

std::int64_t CycloMonomial::exponent(std::size_t index) const noexcept {
  return index < exps_.size() ? exps_[index] : 0;
}

void CycloMonomial::normalize() {
  const std::int64_t g = std::gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
  if (num_ == 0) den_ = 1;
  while (!exps_.empty() && exps_.back() == 0) exps_.pop_back();
}

CycloMonomial CycloMonomial::inverse() const { return pow(-1); }

CycloMonomial CycloMonomial::pow(std::int64_t k) const {
  CycloMonomial v;
  v.den_ = den_;
  v.num_ = floor_mod(static_cast<__int128>(num_) * k, den_);
  v.exps_.resize(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i)
    v.exps_[i] = checked(static_cast<__int128>(exps_[i]) * k);
  v.normalize();
  return v;
}

Order CycloMonomial::multiplicative_order() const noexcept {
  if (!exps_.empty()) return std::nullopt;
  return den_;
}

CycloMonomial operator*(const CycloMonomial& a, const CycloMonomial& b) {
  CycloMonomial v;
  const std::int64_t g = std::gcd(a.den_, b.den_);
  const __int128 den = static_cast<__int128>(a.den_ / g) * b.den_;
  v.den_ = checked(den);
  v.num_ = floor_mod(static_cast<__int128>(a.num_) * (b.den_ / g) +
                         static_cast<__int128>(b.num_) * (a.den_ / g),
                     v.den_);
  v.exps_.resize(std::max(a.exps_.size(), b.exps_.size()));
  for (std::size_t i = 0; i < v.exps_.size(); ++i)
    v.exps_[i] = checked(static_cast<__int128>(a.exponent(i)) + b.exponent(i));
  v.normalize();
  return v;
}

std::strong_ordering operator<=>(const CycloMonomial& a, const CycloMonomial& b) {
  // Compare phases as fractions, then exponent vectors.
  const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
  const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
  if (lhs != rhs) return lhs < rhs ? std::strong_ordering::less : std::strong_ordering::greater;
  if (a.den_ != b.den_) return a.den_ <=> b.den_;
  return a.exps_ <=> b.exps_;
}

std::string CycloMonomial::str() const {
  std::string out;
  auto append = [&out](const std::string& f) {
    if (!out.empty()) out += '*';
    out += f;
  };
  if (num_ != 0) {
    if (den_ == 2) {
      append("-1");
    } else {
      std::string f = "z" + std::to_string(den_);
      if (num_ != 1) f += "^" + std::to_string(num_);
      append(f);
    }
  }
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    std::string f = "t";
    if (i > 0) f += std::to_string(i + 1);
    if (exps_[i] != 1) f += "^" + std::to_string(exps_[i]);
    append(f);
  }
  return out.empty() ? "1" : out;
}

CycloMonomial CycloMonomial::parse(std::string_view text, std::optional<std::size_t> max_parameters) {
  return LiteralReader(text, max_parameters).read();
}

bool qnum_is_zero(const CycloMonomial& q, std::int64_t n) {
  if (q.is_one() || !q.is_root_of_unity()) return false;
  return (n + 1) % q.phase_denominator() == 0;
}

}  // namespace weylgpd
