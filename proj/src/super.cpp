#include "weylgpd/super.hpp"

#include <stdexcept>

#include "weylgpd/errors.hpp"

namespace weylgpd {

SuperPair::SuperPair(unsigned characteristic, std::size_t rank, std::vector<FieldScalar> a,
                     std::vector<Parity> parity)
    : characteristic_(characteristic), rank_(rank), a_(std::move(a)), parity_(std::move(parity)) {
  if (rank_ == 0) throw std::invalid_argument("SuperPair rank must be >= 1");
  if (a_.size() != rank_ * rank_) throw std::invalid_argument("SuperPair matrix must be square");
  if (parity_.size() != rank_) throw std::invalid_argument("SuperPair parity vector has wrong length");
  for (const auto& v : a_)
    if (v.characteristic() != characteristic_)
      throw std::invalid_argument("SuperPair entry has characteristic " +
                                  std::to_string(v.characteristic()) + ", expected " +
                                  std::to_string(characteristic_));
  for (std::size_t i = 0; i < rank_; ++i)
    for (std::size_t j = i + 1; j < rank_; ++j)
      if ((*this)(i, j).is_zero() != (*this)(j, i).is_zero())
        throw std::invalid_argument("SuperPair violates a_ij = 0 <=> a_ji = 0 at (" +
                                    std::to_string(i + 1) + ", " + std::to_string(j + 1) + ")");
}

std::string SuperPair::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < rank_; ++i)
    out += std::string(i ? " " : "") + (parity_[i] == Parity::Even ? "+" : "-");
  out += ") [";
  for (std::size_t i = 0; i < rank_; ++i) {
    if (i) out += "; ";
    for (std::size_t j = 0; j < rank_; ++j) out += (j ? " " : "") + (*this)(i, j).str();
  }
  return out + "]";
}

SuperPair row_canonical(const SuperPair& x) {
  const unsigned p = x.characteristic();
  const std::size_t n = x.rank();
  // In characteristic 2 the diagonal cannot be normalized to 2; use 1 instead.
  const FieldScalar target = FieldScalar::integer(p == 2 ? 1 : 2, p);
  std::vector<FieldScalar> a = x.entries();
  for (std::size_t i = 0; i < n; ++i) {
    FieldScalar scale = FieldScalar::integer(1, p);
    if (!x(i, i).is_zero()) {
      scale = target / x(i, i);
    } else {
      for (std::size_t j = 0; j < n; ++j)
        if (!x(i, j).is_zero()) {
          scale = x(i, j).inverse();
          break;
        }
    }
    if (scale.is_one()) continue;
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] *= scale;
  }
  return SuperPair(p, n, std::move(a), x.parities());
}

std::size_t matrix_rank(const SuperPair& x) { return matrix_rank(x.entries(), x.rank(), x.rank()); }

std::optional<std::int64_t> integer_representative(const FieldScalar& a) {
  const auto c = a.constant();
  if (!c) return std::nullopt;
  const unsigned p = a.characteristic();
  if (p == 0) {
    if (c->get_den() != 1 || !c->get_num().fits_slong_p()) return std::nullopt;
    return c->get_num().get_si();
  }
  const std::int64_t v = c->get_num().get_si();  // already in {0, ..., p-1}
  return v == 0 ? 0 : v - static_cast<std::int64_t>(p);
}

Gcm super_cartan_matrix(const SuperPair& x) {
  const SuperPair y = row_canonical(x);
  const std::size_t n = y.rank();
  const auto ell = static_cast<std::int64_t>(y.characteristic());
  Gcm c(n);
  for (std::size_t i = 0; i < n; ++i) {
    c(i, i) = 2;
    const bool odd = y.parity(i) == Parity::Odd;
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const FieldScalar& aij = y(i, j);
      std::int64_t value = 0;
      if (!y(i, i).is_zero()) {
        if (aij.in_prime_field()) {
          const auto rep = integer_representative(aij);
          if (!rep || *rep > 0)
            throw NotAdmissible(i, j, "a_ij = " + aij.str() + " is not a nonpositive integer");
          const bool rep_odd = (*rep % 2) != 0;
          value = (!odd || !rep_odd) ? *rep : *rep - ell;
        } else {
          if (ell == 0)
            throw NotAdmissible(i, j, "a_ij = " + aij.str() + " is not a constant in characteristic 0");
          value = 1 - (odd ? 2 : 1) * ell;
        }
      } else if (aij.is_zero()) {
        value = 0;
      } else if (odd) {
        value = -1;
      } else {
        if (ell == 0) throw NotAdmissible(i, j, "a_ii = 0 with even parity in characteristic 0");
        value = 1 - ell;
      }
      c(i, j) = value;
    }
  }
  return c;
}

SuperPair reflect_pair(const SuperPair& x, Vertex i, const Gcm& c) {
  const std::size_t n = x.rank();
  if (i >= n) throw std::out_of_range("reflect_pair: vertex out of range");
  const unsigned p = x.characteristic();
  const SuperPair y = row_canonical(x);
  auto a = [&y](std::size_t r, std::size_t s) -> const FieldScalar& { return y(r, s); };

  std::vector<FieldScalar> b(n * n, FieldScalar(p));
  for (std::size_t k = 0; k < n; ++k) b[i * n + k] = c(i, k) * a(i, i) - a(i, k);
  for (std::size_t j = 0; j < n; ++j) {
    if (j == i) continue;
    if (a(i, j).is_zero()) {
      // Disconnected from i: the coroot h_j is unchanged.
      for (std::size_t k = 0; k < n; ++k) b[j * n + k] = a(j, k);
      continue;
    }
    for (std::size_t k = 0; k < n; ++k)
      b[j * n + k] = (c(i, j) * c(i, k)) * a(j, i) * a(i, i) - c(i, j) * a(j, i) * a(i, k) -
                     c(i, k) * a(j, i) * a(i, j) + a(i, j) * a(j, k);
  }

  std::vector<Parity> parity = y.parities();
  if (y.parity(i) == Parity::Odd)
    for (std::size_t j = 0; j < n; ++j)
      if (c(i, j) % 2 != 0)
        parity[j] = parity[j] == Parity::Odd ? Parity::Even : Parity::Odd;

  return row_canonical(SuperPair(p, n, std::move(b), std::move(parity)));
}

SuperPair reflect_pair(const SuperPair& x, Vertex i) { return reflect_pair(x, i, super_cartan_matrix(x)); }

std::string Superdimension::str() const {
  return "(" + std::to_string(even) + "|" + std::to_string(odd) + ")";
}

SuperRootResult compute_super_roots(const SuperPair& x) {
  SuperRootResult result;
  result.rank = x.rank();
  const SuperPair seed = row_canonical(x);

  auto visit = [&result](const SuperPair& current, Vertex i, const Gcm&, const Root& root) {
    if (current.parity(i) != Parity::Odd) return;
    result.odd_roots.push_back(root);
    if (!current(i, i).is_zero()) result.ond_roots.push_back(root);
  };
  auto reflect = [](const SuperPair& current, Vertex i, const Gcm& c) {
    return reflect_pair(current, i, c);
  };
  auto cartan = [](const SuperPair& current) { return super_cartan_matrix(current); };

  WalkOutcome walk = longest_word_walk(seed, seed.rank(), cartan, reflect, visit);
  result.positive_roots = std::move(walk.roots);
  result.longest_word = std::move(walk.word);
  result.verdict = walk.verdict;
  result.diagnostic = std::move(walk.diagnostic);
  result.cartan_subalgebra_dim = 2 * seed.rank() - matrix_rank(seed);

  for (const Root& beta : result.positive_roots) {
    result.nabla_plus.push_back(beta);
    for (const Root& ond : result.ond_roots)
      if (ond == beta) result.nabla_plus.push_back(2 * beta);
  }
  if (result.verdict == Verdict::Finite) {
    const auto nabla = static_cast<std::int64_t>(result.nabla_plus.size());
    const auto odd = static_cast<std::int64_t>(result.odd_roots.size());
    result.sdim.even = 2 * nabla + static_cast<std::int64_t>(result.cartan_subalgebra_dim) - 2 * odd;
    result.sdim.odd = 2 * odd;
  }
  return result;
}

}  // namespace weylgpd
