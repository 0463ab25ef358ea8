#ifndef WEYLGPD_CYCLO_MONOMIAL_HPP
#define WEYLGPD_CYCLO_MONOMIAL_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace weylgpd {

/// Multiplicative order; std::nullopt stands for infinity.
using Order = std::optional<std::int64_t>;

/// An element e^{2 pi i r} * t_1^{e_1} ... t_m^{e_m} of the group (Q/Z) x Z^m.
///
/// This is the scalar domain for braiding matrices: roots of unity times
/// Laurent monomials in formal parameters. The phase r is kept reduced in
/// [0, 1); trailing zero exponents are dropped so that values built with
/// different parameter counts compare equal when they agree.
class CycloMonomial {
 public:
  /// The identity.
  CycloMonomial() = default;

  /// e^{2 pi i num/den} for den >= 1.
  static CycloMonomial root_of_unity(std::int64_t num, std::int64_t den);
  /// t_{index+1}^power.
  static CycloMonomial parameter(std::size_t index, std::int64_t power = 1);
  static CycloMonomial minus_one() { return root_of_unity(1, 2); }

  std::int64_t phase_numerator() const noexcept { return num_; }
  std::int64_t phase_denominator() const noexcept { return den_; }
  /// Exponent of t_{index+1} (zero beyond the stored length).
  std::int64_t exponent(std::size_t index) const noexcept;
  const std::vector<std::int64_t>& exponents() const noexcept { return exps_; }
  /// Number of formal parameters actually present (index of the last nonzero exponent + 1).
  std::size_t parameter_span() const noexcept { return exps_.size(); }

  bool is_one() const noexcept { return num_ == 0 && exps_.empty(); }
  bool is_root_of_unity() const noexcept { return exps_.empty(); }

  CycloMonomial inverse() const;
  CycloMonomial pow(std::int64_t k) const;

  /// Denominator of r when no parameter occurs, infinity otherwise.
  Order multiplicative_order() const noexcept;

  friend CycloMonomial operator*(const CycloMonomial& a, const CycloMonomial& b);
  CycloMonomial& operator*=(const CycloMonomial& other) { return *this = *this * other; }

  friend bool operator==(const CycloMonomial&, const CycloMonomial&) = default;
  friend std::strong_ordering operator<=>(const CycloMonomial& a, const CycloMonomial& b);

  /// Renders in the scalar literal grammar: "1", "-1", "z3^2", "z3^2*t", "t2^-1", ...
  std::string str() const;

  /// Parses a scalar literal. When `max_parameters` is given, parameter
  /// indices above it are rejected.
  static CycloMonomial parse(std::string_view text,
                             std::optional<std::size_t> max_parameters = std::nullopt);

 private:
  void normalize();

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::vector<std::int64_t> exps_;
};

/// True iff (n+1)_q = 1 + q + ... + q^n vanishes, i.e. q != 1 is a root of
/// unity whose order divides n+1.
bool qnum_is_zero(const CycloMonomial& q, std::int64_t n);

}  // namespace weylgpd

#endif  // WEYLGPD_CYCLO_MONOMIAL_HPP
