#ifndef WEYLGPD_TESTS_ORACLES_HPP
#define WEYLGPD_TESTS_ORACLES_HPP

// Independent reference implementations used only by the tests. None of them
// calls into the library; they work on plain integer vectors.

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using Vec = std::vector<std::int64_t>;
using Mat = std::vector<Vec>;

/// 1 + z + ... + z^n == 0 for z = e^{2 pi i a / d}, decided in Z[x] / Phi_d(x).
bool cyclotomic_sum_is_zero(std::int64_t a, std::int64_t d, std::int64_t n);

/// Integer coefficients of the d-th cyclotomic polynomial, constant term first.
Vec cyclotomic_polynomial(std::int64_t d);

/// Rank-2 diagram with labels e^{2 pi i k / kDen}: q11, q22 and the edge q12 q21.
inline constexpr std::int64_t kDen = 60;
struct Rank2 {
  std::int64_t q11, q22, edge;  // exponents mod kDen
  auto operator<=>(const Rank2&) const = default;
};

/// Positive roots obtained by closing {+-alpha_1, +-alpha_2} under all s_i^x over
/// all objects reachable from `seed`. Nullopt when some object is not admissible
/// or more than `cap` roots appear at some object (the system is then infinite).
std::optional<std::set<Vec>> rank2_closure(const Rank2& seed, std::size_t cap = 400);

/// Positive roots of the finite root system with Cartan matrix c (c_ij = <alpha_j, alpha_i^v>),
/// generated by alpha-strings.
std::set<Vec> classical_positive_roots(const Mat& c);

/// |W| for a classical type: 'A'..'G' with rank n.
std::uint64_t weyl_group_order(char type, int n);

/// Cartan matrix of a finite type (Bourbaki numbering, c_ij = <alpha_j, alpha_i^v>).
Mat cartan_of_type(char type, int n);

/// Distinguished simple system of sl(m|n): positive roots, odd positive roots and
/// the superdimension of sl(m|n) (m != n).
struct SlSuper {
  std::set<Vec> positive;
  std::set<Vec> odd;
  std::int64_t even_dim = 0;
  std::int64_t odd_dim = 0;
};
SlSuper sl_super(int m, int n);

}  // namespace oracle

#endif
