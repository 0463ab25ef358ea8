#ifndef WEYLGPD_ROOT_HPP
#define WEYLGPD_ROOT_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace weylgpd {

/// Simple-root index, 0-based (vertex i renders as i+1).
using Vertex = std::size_t;

/// Element of Z^theta in the basis of simple roots.
struct Root {
  std::vector<std::int64_t> coords;

  Root() = default;
  explicit Root(std::vector<std::int64_t> c) : coords(std::move(c)) {}
  static Root simple(std::size_t rank, Vertex i);
  static Root zero(std::size_t rank) { return Root(std::vector<std::int64_t>(rank, 0)); }

  std::size_t rank() const noexcept { return coords.size(); }
  std::int64_t operator[](std::size_t i) const { return coords[i]; }
  std::int64_t& operator[](std::size_t i) { return coords[i]; }

  bool is_zero() const noexcept;
  /// All coordinates >= 0 (the zero vector included).
  bool is_nonnegative() const noexcept;
  bool is_positive() const noexcept { return is_nonnegative() && !is_zero(); }
  bool is_negative() const noexcept;
  /// Sum of coordinates.
  std::int64_t height() const noexcept;

  Root operator-() const;
  friend Root operator+(const Root& a, const Root& b);
  friend Root operator-(const Root& a, const Root& b);
  friend Root operator*(std::int64_t k, const Root& a);

  friend bool operator==(const Root&, const Root&) = default;
  friend auto operator<=>(const Root&, const Root&) = default;

  /// Multiplicative notation: (1,2,1) -> "12^23". Indices above 9 are
  /// wrapped in parentheses, "(10)^2", and so are exponents above 9, "1^(12)".
  /// Negative roots get a leading '-'; mixed-sign vectors render as "(1,-1)".
  std::string str() const;
  static Root parse(std::string_view text, std::size_t rank);
};

/// Square integer matrix, row-major. Used for generalized Cartan matrices and
/// for elements of GL(Z^theta).
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n, std::int64_t fill = 0) : n_(n), a_(n * n, fill) {}
  static IntMatrix identity(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return a_[r * n_ + c]; }
  std::int64_t& operator()(std::size_t r, std::size_t c) { return a_[r * n_ + c]; }
  Root column(std::size_t c) const;
  std::vector<std::int64_t> row(std::size_t r) const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  Root apply(const Root& v) const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
  friend auto operator<=>(const IntMatrix&, const IntMatrix&) = default;

  std::string str() const;

 private:
  std::size_t n_ = 0;
  std::vector<std::int64_t> a_;
};

/// Generalized Cartan matrix: c_ii = 2, c_ij <= 0, c_ij = 0 iff c_ji = 0.
using Gcm = IntMatrix;

/// True iff `c` satisfies the GCM axioms.
bool is_gcm(const IntMatrix& c);

/// The reflection s_i in GL(Z^theta) defined by row i of a Cartan matrix:
/// s_i(alpha_j) = alpha_j - c_ij alpha_i. Columns are images of simple roots.
IntMatrix simple_reflection(const Gcm& cartan, Vertex i);

}  // namespace weylgpd

#endif  // WEYLGPD_ROOT_HPP
