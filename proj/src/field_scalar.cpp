#include "weylgpd/field_scalar.hpp"

#include <cctype>
#include <stdexcept>
#include <utility>

#include "weylgpd/errors.hpp"

namespace weylgpd {

namespace {

using Poly = FieldScalar::Poly;

mpz_class mod_inverse(const mpz_class& a, unsigned p) {
  mpz_class r;
  const mpz_class m = p;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    throw std::domain_error("division by zero in F_" + std::to_string(p));
  return r;
}

// Maps a rational to its canonical representative in the prime field.
mpq_class reduce(const mpq_class& c, unsigned p) {
  if (p == 0) return c;
  mpz_class n = c.get_num() % p;
  if (n < 0) n += p;
  if (c.get_den() != 1) {
    n = (n * mod_inverse(c.get_den(), p)) % p;
  }
  return mpq_class(n);
}

mpq_class coeff_inverse(const mpq_class& c, unsigned p) {
  if (c == 0) throw std::domain_error("division by zero");
  if (p == 0) return 1 / c;
  return mpq_class(mod_inverse(c.get_num(), p));
}

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_add(const Poly& a, const Poly& b, unsigned p) {
  Poly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    mpq_class s = 0;
    if (i < a.size()) s += a[i];
    if (i < b.size()) s += b[i];
    r[i] = reduce(s, p);
  }
  trim(r);
  return r;
}

Poly poly_neg(const Poly& a, unsigned p) {
  Poly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = reduce(-a[i], p);
  return r;
}

Poly poly_mul(const Poly& a, const Poly& b, unsigned p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, mpq_class(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  for (auto& c : r) c = reduce(c, p);
  trim(r);
  return r;
}

Poly poly_scale(const Poly& a, const mpq_class& k, unsigned p) {
  Poly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = reduce(a[i] * k, p);
  trim(r);
  return r;
}

// Long division; b must be nonzero.
std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b, unsigned p) {
  const mpq_class lead_inv = coeff_inverse(b.back(), p);
  if (a.size() < b.size()) return {{}, std::move(a)};
  Poly q(a.size() - b.size() + 1, mpq_class(0));
  while (!a.empty() && a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const mpq_class f = reduce(a.back() * lead_inv, p);
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = reduce(a[shift + i] - f * b[i], p);
    trim(a);
  }
  trim(q);
  return {std::move(q), std::move(a)};
}

Poly poly_monic(const Poly& a, unsigned p) {
  if (a.empty()) return a;
  return poly_scale(a, coeff_inverse(a.back(), p), p);
}

Poly poly_gcd(Poly a, Poly b, unsigned p) {
  while (!b.empty()) {
    Poly r = poly_divmod(a, b, p).second;
    a = std::move(b);
    b = std::move(r);
  }
  return poly_monic(a, p);
}

void require_same(const FieldScalar& a, const FieldScalar& b) {
  if (a.characteristic() != b.characteristic())
    throw std::invalid_argument("FieldScalar characteristic mismatch");
}

std::string coeff_str(const mpq_class& c) { return c.get_str(); }

std::string poly_str(const Poly& a) {
  if (a.empty()) return "0";
  std::string out;
  for (std::size_t k = a.size(); k-- > 0;) {
    const mpq_class& c = a[k];
    if (c == 0) continue;
    mpq_class mag = abs(c);
    const bool negative = c < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? "-" : "+";
    }
    if (k == 0) {
      out += coeff_str(mag);
      continue;
    }
    if (mag != 1) {
      // Wrap non-integral coefficients so the output re-parses unambiguously.
      out += mag.get_den() == 1 ? coeff_str(mag) : "(" + coeff_str(mag) + ")";
      out += "*";
    }
    out += "t";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

std::size_t term_count(const Poly& a) {
  std::size_t n = 0;
  for (const auto& c : a)
    if (c != 0) ++n;
  return n;
}

// Recursive-descent reader for rational expressions in t.
class ExprReader {
 public:
  ExprReader(std::string_view text, unsigned p) : text_(text), p_(p) {}

  FieldScalar read() {
    skip();
    if (pos_ >= text_.size()) fail("empty field literal");
    FieldScalar v = sum();
    skip();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return v;
  }

 private:
  FieldScalar sum() {
    FieldScalar v = product();
    for (;;) {
      skip();
      if (peek('+')) {
        ++pos_;
        v += product();
      } else if (peek('-')) {
        ++pos_;
        v -= product();
      } else {
        return v;
      }
    }
  }

  FieldScalar product() {
    FieldScalar v = unary();
    for (;;) {
      skip();
      if (peek('*')) {
        ++pos_;
        v *= unary();
      } else if (peek('/')) {
        ++pos_;
        const std::size_t at = pos_;
        FieldScalar d = unary();
        if (d.is_zero()) fail("division by zero", at);
        v /= d;
      } else {
        return v;
      }
    }
  }

  FieldScalar unary() {
    skip();
    if (peek('-')) {
      ++pos_;
      return -unary();
    }
    if (peek('+')) {
      ++pos_;
      return unary();
    }
    return power();
  }

  FieldScalar power() {
    FieldScalar base = atom();
    skip();
    if (!peek('^')) return base;
    ++pos_;
    skip();
    const mpz_class e = integer();
    if (e > 4096) fail("exponent too large");
    FieldScalar r = FieldScalar::integer(1, p_);
    for (long k = 0; k < e.get_si(); ++k) r *= base;
    return r;
  }

  FieldScalar atom() {
    skip();
    if (pos_ >= text_.size()) fail("expected a term");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      FieldScalar v = sum();
      skip();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return v;
    }
    if (c == 't') {
      ++pos_;
      return FieldScalar::variable(p_);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t at = pos_;
      try {
        return FieldScalar::rational(mpq_class(integer()), p_);
      } catch (const std::domain_error&) {
        fail("value not defined in this characteristic", at);
      }
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  mpz_class integer() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected an integer");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  bool peek(char c) const { return pos_ < text_.size() && text_[pos_] == c; }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& message) { fail(message, pos_); }
  [[noreturn]] void fail(const std::string& message, std::size_t at) {
    throw ParseError(message + " in field literal '" + std::string(text_) + "'", 0, at + 1);
  }

  std::string_view text_;
  unsigned p_;
  std::size_t pos_ = 0;
};

}  // namespace

FieldScalar::FieldScalar(unsigned characteristic)
    : characteristic_(characteristic), den_{mpq_class(1)} {}

FieldScalar::FieldScalar(unsigned characteristic, Poly num, Poly den)
    : characteristic_(characteristic), num_(std::move(num)), den_(std::move(den)) {
  canonicalize();
}

FieldScalar FieldScalar::integer(long value, unsigned characteristic) {
  return rational(mpq_class(value), characteristic);
}

FieldScalar FieldScalar::rational(const mpq_class& value, unsigned characteristic) {
  return FieldScalar(characteristic, Poly{reduce(value, characteristic)}, Poly{mpq_class(1)});
}

FieldScalar FieldScalar::variable(unsigned characteristic) {
  return FieldScalar(characteristic, Poly{mpq_class(0), mpq_class(1)}, Poly{mpq_class(1)});
}

void FieldScalar::canonicalize() {
  const unsigned p = characteristic_;
  for (auto& c : num_) c = reduce(c, p);
  for (auto& c : den_) c = reduce(c, p);
  trim(num_);
  trim(den_);
  if (den_.empty()) throw std::domain_error("zero denominator");
  if (num_.empty()) {
    den_ = Poly{mpq_class(1)};
    return;
  }
  const Poly g = poly_gcd(num_, den_, p);
  if (g.size() > 1) {
    num_ = poly_divmod(num_, g, p).first;
    den_ = poly_divmod(den_, g, p).first;
  }
  const mpq_class lead_inv = coeff_inverse(den_.back(), p);
  num_ = poly_scale(num_, lead_inv, p);
  den_ = poly_scale(den_, lead_inv, p);
}

bool FieldScalar::is_one() const noexcept {
  return num_.size() == 1 && num_[0] == 1 && den_.size() == 1;
}

std::optional<mpq_class> FieldScalar::constant() const {
  if (!in_prime_field()) return std::nullopt;
  return num_.empty() ? mpq_class(0) : num_[0];
}

FieldScalar FieldScalar::operator-() const {
  return FieldScalar(characteristic_, poly_neg(num_, characteristic_), den_);
}

FieldScalar FieldScalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  return FieldScalar(characteristic_, den_, num_);
}

FieldScalar operator+(const FieldScalar& a, const FieldScalar& b) {
  require_same(a, b);
  const unsigned p = a.characteristic_;
  if (a.den_ == b.den_) return FieldScalar(p, poly_add(a.num_, b.num_, p), a.den_);
  return FieldScalar(p,
                     poly_add(poly_mul(a.num_, b.den_, p), poly_mul(b.num_, a.den_, p), p),
                     poly_mul(a.den_, b.den_, p));
}

FieldScalar operator-(const FieldScalar& a, const FieldScalar& b) { return a + (-b); }

FieldScalar operator*(const FieldScalar& a, const FieldScalar& b) {
  require_same(a, b);
  const unsigned p = a.characteristic_;
  return FieldScalar(p, poly_mul(a.num_, b.num_, p), poly_mul(a.den_, b.den_, p));
}

FieldScalar operator/(const FieldScalar& a, const FieldScalar& b) { return a * b.inverse(); }

bool operator==(const FieldScalar& a, const FieldScalar& b) {
  return a.characteristic_ == b.characteristic_ && a.num_ == b.num_ && a.den_ == b.den_;
}

std::string FieldScalar::str() const {
  std::string num = poly_str(num_);
  if (den_.size() == 1) return num;
  if (term_count(num_) > 1) num = "(" + num + ")";
  std::string den = poly_str(den_);
  if (term_count(den_) > 1) den = "(" + den + ")";
  return num + "/" + den;
}

FieldScalar FieldScalar::parse(std::string_view text, unsigned characteristic) {
  return ExprReader(text, characteristic).read();
}

std::size_t matrix_rank(const std::vector<FieldScalar>& entries, std::size_t rows, std::size_t cols) {
  if (entries.size() != rows * cols) throw std::invalid_argument("matrix_rank: size mismatch");
  std::vector<FieldScalar> m = entries;
  auto at = [&](std::size_t r, std::size_t c) -> FieldScalar& { return m[r * cols + c]; };
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && at(pivot, c).is_zero()) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank)
      for (std::size_t k = 0; k < cols; ++k) std::swap(at(pivot, k), at(rank, k));
    const FieldScalar inv = at(rank, c).inverse();
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (at(r, c).is_zero()) continue;
      const FieldScalar f = at(r, c) * inv;
      for (std::size_t k = c; k < cols; ++k) at(r, k) -= f * at(rank, k);
    }
    ++rank;
  }
  return rank;
}

}  // namespace weylgpd
