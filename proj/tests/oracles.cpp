#include "oracles.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace oracle {

namespace {

// Polynomial long division over Z by a monic divisor; returns the remainder.
Vec poly_mod(Vec a, const Vec& m) {
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const std::int64_t lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t k = 0; k <= dm; ++k) a[shift + k] -= lead * m[k];
    a.pop_back();
  }
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

Vec poly_div_exact(Vec a, const Vec& m) {
  const std::size_t dm = m.size() - 1;
  Vec q(a.size() - dm, 0);
  while (a.size() > dm) {
    const std::int64_t lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    q[shift] = lead;
    for (std::size_t k = 0; k <= dm; ++k) a[shift + k] -= lead * m[k];
    a.pop_back();
  }
  for (auto v : a)
    if (v != 0) throw std::logic_error("inexact cyclotomic division");
  return q;
}

std::int64_t mod(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

}  // namespace

Vec cyclotomic_polynomial(std::int64_t d) {
  Vec p(static_cast<std::size_t>(d) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(d)] = 1;
  for (std::int64_t e = 1; e < d; ++e)
    if (d % e == 0) p = poly_div_exact(p, cyclotomic_polynomial(e));
  return p;
}

bool cyclotomic_sum_is_zero(std::int64_t a, std::int64_t d, std::int64_t n) {
  Vec sum(static_cast<std::size_t>(d), 0);
  for (std::int64_t j = 0; j <= n; ++j) ++sum[static_cast<std::size_t>(mod(a * j, d))];
  while (!sum.empty() && sum.back() == 0) sum.pop_back();
  return poly_mod(sum, cyclotomic_polynomial(d)).empty();
}

namespace {

std::int64_t quad(const Rank2& x, const Vec& v) {
  return mod(x.q11 * v[0] * v[0] + x.q22 * v[1] * v[1] + x.edge * v[0] * v[1], kDen);
}

std::int64_t polar(const Rank2& x, const Vec& u, const Vec& v) {
  const Vec s{u[0] + v[0], u[1] + v[1]};
  return mod(quad(x, s) - quad(x, u) - quad(x, v), kDen);
}

// -c_ij for i != j, or nullopt when the defining set is empty.
std::optional<std::int64_t> neg_cartan(std::int64_t qii, std::int64_t edge) {
  for (std::int64_t n = 0; n <= 2 * kDen; ++n) {
    if (qii != 0 && mod((n + 1) * qii, kDen) == 0) return n;
    if (mod(n * qii + edge, kDen) == 0) return n;
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::set<Vec>> rank2_closure(const Rank2& seed, std::size_t cap) {
  struct Info {
    std::int64_t c[2];  // c_12, c_21
    Rank2 next[2];
  };
  std::map<Rank2, Info> objects;
  std::deque<Rank2> todo{seed};
  while (!todo.empty()) {
    const Rank2 x = todo.front();
    todo.pop_front();
    if (objects.count(x)) continue;
    const auto n1 = neg_cartan(x.q11, x.edge);
    const auto n2 = neg_cartan(x.q22, x.edge);
    if (!n1 || !n2) return std::nullopt;
    Info info{};
    info.c[0] = -*n1;
    info.c[1] = -*n2;
    for (int i = 0; i < 2; ++i) {
      // s_i(alpha_i) = -alpha_i, s_i(alpha_j) = alpha_j - c_ij alpha_i
      Vec a(2, 0), b(2, 0);
      a[i] = -1;
      b[1 - i] = 1;
      b[i] = -info.c[i];
      const Vec& u = i == 0 ? a : b;
      const Vec& v = i == 0 ? b : a;
      info.next[i] = Rank2{quad(x, u), quad(x, v), polar(x, u, v)};
      todo.push_back(info.next[i]);
    }
    objects.emplace(x, info);
    if (objects.size() > 1000) return std::nullopt;
  }

  std::map<Rank2, std::set<Vec>> roots;
  std::deque<std::pair<Rank2, Vec>> work;
  for (const auto& [x, info] : objects)
    for (const Vec& r : {Vec{1, 0}, Vec{0, 1}, Vec{-1, 0}, Vec{0, -1}}) {
      roots[x].insert(r);
      work.emplace_back(x, r);
    }
  // r in Delta at next[i] gives s_i(r) in Delta at x (next[i] of next[i] is x).
  while (!work.empty()) {
    const auto [y, r] = work.front();
    work.pop_front();
    const Info& at_y = objects.at(y);
    for (int i = 0; i < 2; ++i) {
      const Rank2 x = at_y.next[i];
      const Info& info = objects.at(x);
      Vec s = r;
      const std::int64_t pairing = i == 0 ? 2 * r[0] + info.c[0] * r[1] : info.c[1] * r[0] + 2 * r[1];
      s[static_cast<std::size_t>(i)] -= pairing;
      if (roots[x].insert(s).second) {
        if (roots[x].size() > 2 * cap) return std::nullopt;
        work.emplace_back(x, s);
      }
    }
  }
  std::set<Vec> positive;
  for (const Vec& r : roots[seed])
    if (r[0] >= 0 && r[1] >= 0) positive.insert(r);
  return positive;
}

std::set<Vec> classical_positive_roots(const Mat& c) {
  const std::size_t n = c.size();
  std::set<Vec> roots;
  std::vector<Vec> level;
  for (std::size_t i = 0; i < n; ++i) {
    Vec a(n, 0);
    a[i] = 1;
    roots.insert(a);
    level.push_back(a);
  }
  while (!level.empty()) {
    std::set<Vec> next;
    for (const Vec& beta : level) {
      for (std::size_t i = 0; i < n; ++i) {
        std::int64_t p = 0;
        for (Vec down = beta;;) {
          down[i] -= 1;
          if (!roots.count(down)) break;
          ++p;
        }
        std::int64_t pairing = 0;
        for (std::size_t j = 0; j < n; ++j) pairing += beta[j] * c[i][j];
        if (p - pairing > 0) {
          Vec up = beta;
          up[i] += 1;
          next.insert(up);
        }
      }
    }
    level.assign(next.begin(), next.end());
    roots.insert(next.begin(), next.end());
  }
  return roots;
}

std::uint64_t weyl_group_order(char type, int n) {
  std::uint64_t fact = 1;
  for (int k = 2; k <= n; ++k) fact *= static_cast<std::uint64_t>(k);
  switch (type) {
    case 'A': return fact * static_cast<std::uint64_t>(n + 1);
    case 'B':
    case 'C': return (std::uint64_t{1} << n) * fact;
    case 'D': return (std::uint64_t{1} << (n - 1)) * fact;
    case 'F': return 1152;
    case 'G': return 12;
  }
  throw std::invalid_argument("unknown type");
}

Mat cartan_of_type(char type, int n) {
  const auto N = static_cast<std::size_t>(n);
  Mat c(N, Vec(N, 0));
  for (std::size_t i = 0; i < N; ++i) c[i][i] = 2;
  auto link = [&](std::size_t i, std::size_t j) { c[i][j] = c[j][i] = -1; };
  switch (type) {
    case 'A':
      for (std::size_t i = 0; i + 1 < N; ++i) link(i, i + 1);
      break;
    case 'B':
      for (std::size_t i = 0; i + 1 < N; ++i) link(i, i + 1);
      c[N - 1][N - 2] = -2;
      break;
    case 'C':
      for (std::size_t i = 0; i + 1 < N; ++i) link(i, i + 1);
      c[N - 2][N - 1] = -2;
      break;
    case 'D':
      for (std::size_t i = 0; i + 2 < N; ++i) link(i, i + 1);
      link(N - 3, N - 1);
      break;
    case 'F':
      link(0, 1);
      link(1, 2);
      link(2, 3);
      c[2][1] = -2;
      break;
    case 'G':
      c[0][1] = -3;
      c[1][0] = -1;
      break;
    default: throw std::invalid_argument("unknown type");
  }
  return c;
}

SlSuper sl_super(int m, int n) {
  SlSuper out;
  const int total = m + n;
  for (int i = 1; i <= total; ++i)
    for (int j = i + 1; j <= total; ++j) {
      Vec r(static_cast<std::size_t>(total - 1), 0);
      for (int k = i; k < j; ++k) r[static_cast<std::size_t>(k - 1)] = 1;
      out.positive.insert(r);
      if (i <= m && j > m) out.odd.insert(r);
    }
  out.even_dim = m * m + n * n - 1;
  out.odd_dim = 2 * m * n;
  return out;
}

}  // namespace oracle
