#ifndef WEYLGPD_FIELD_SCALAR_HPP
#define WEYLGPD_FIELD_SCALAR_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace weylgpd {

/// Element of F(t), F the prime field of characteristic `characteristic`
/// (Q when it is 0, F_l otherwise).
///
/// Values are stored as num/den with den monic and gcd(num, den) = 1;
/// coefficients are reduced to {0, ..., l-1} in positive characteristic.
/// Mixing characteristics in arithmetic throws std::invalid_argument.
class FieldScalar {
 public:
  using Poly = std::vector<mpq_class>;  // coefficient of t^k at index k, no trailing zeros

  /// Zero of characteristic 0.
  FieldScalar() : FieldScalar(0u) {}
  explicit FieldScalar(unsigned characteristic);

  static FieldScalar integer(long value, unsigned characteristic);
  static FieldScalar rational(const mpq_class& value, unsigned characteristic);
  /// The formal parameter t.
  static FieldScalar variable(unsigned characteristic);

  unsigned characteristic() const noexcept { return characteristic_; }
  const Poly& numerator() const noexcept { return num_; }
  const Poly& denominator() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.empty(); }
  bool is_one() const noexcept;
  /// True iff the value is a constant, i.e. lies in the prime field.
  bool in_prime_field() const noexcept { return num_.size() <= 1 && den_.size() == 1; }
  /// The constant value, when in_prime_field(); in positive characteristic it is the
  /// representative in {0, ..., l-1}.
  std::optional<mpq_class> constant() const;

  FieldScalar operator-() const;
  FieldScalar inverse() const;  // throws std::domain_error on zero
  friend FieldScalar operator+(const FieldScalar& a, const FieldScalar& b);
  friend FieldScalar operator-(const FieldScalar& a, const FieldScalar& b);
  friend FieldScalar operator*(const FieldScalar& a, const FieldScalar& b);
  friend FieldScalar operator/(const FieldScalar& a, const FieldScalar& b);
  FieldScalar& operator+=(const FieldScalar& o) { return *this = *this + o; }
  FieldScalar& operator-=(const FieldScalar& o) { return *this = *this - o; }
  FieldScalar& operator*=(const FieldScalar& o) { return *this = *this * o; }
  FieldScalar& operator/=(const FieldScalar& o) { return *this = *this / o; }
  friend FieldScalar operator*(long k, const FieldScalar& a) {
    return integer(k, a.characteristic_) * a;
  }

  friend bool operator==(const FieldScalar& a, const FieldScalar& b);

  /// "0", "2", "-1/2", "t", "t^2+1", "(t+1)/(t-1)", ...
  std::string str() const;
  /// Accepts integers, fractions and rational expressions in t built with
  /// + - * / ^ (nonnegative integer powers) and parentheses.
  static FieldScalar parse(std::string_view text, unsigned characteristic);

 private:
  FieldScalar(unsigned characteristic, Poly num, Poly den);
  void canonicalize();

  unsigned characteristic_;
  Poly num_;
  Poly den_;
};

/// Rank of a rows x cols matrix (row-major) over the fraction field, by exact
/// Gaussian elimination.
std::size_t matrix_rank(const std::vector<FieldScalar>& entries, std::size_t rows, std::size_t cols);

}  // namespace weylgpd

#endif  // WEYLGPD_FIELD_SCALAR_HPP
