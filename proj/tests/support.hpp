#ifndef WEYLGPD_TESTS_SUPPORT_HPP
#define WEYLGPD_TESTS_SUPPORT_HPP

#include <fstream>
#include <initializer_list>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "weylgpd/braiding.hpp"
#include "weylgpd/groupoid.hpp"
#include "weylgpd/super.hpp"

namespace testing {

inline std::string read_data(const std::string& name) {
  std::ifstream in(std::string(WEYLGPD_TEST_DATA) + "/" + name);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline weylgpd::BraidingMatrix braiding(std::size_t rank, std::initializer_list<const char*> entries) {
  std::vector<weylgpd::CycloMonomial> q;
  for (const char* e : entries) q.push_back(weylgpd::CycloMonomial::parse(e));
  return weylgpd::BraidingMatrix(rank, std::move(q));
}

inline weylgpd::SuperPair pair(unsigned ell, std::initializer_list<int> parity,
                               std::initializer_list<const char*> entries) {
  std::vector<weylgpd::FieldScalar> a;
  for (const char* e : entries) a.push_back(weylgpd::FieldScalar::parse(e, ell));
  std::vector<weylgpd::Parity> p;
  for (int s : parity) p.push_back(s > 0 ? weylgpd::Parity::Even : weylgpd::Parity::Odd);
  const std::size_t rank = p.size();
  return weylgpd::SuperPair(ell, rank, std::move(a), std::move(p));
}

inline std::vector<weylgpd::Root> roots(std::size_t rank, std::initializer_list<const char*> list) {
  std::vector<weylgpd::Root> out;
  for (const char* r : list) out.push_back(weylgpd::Root::parse(r, rank));
  return out;
}

inline std::set<oracle::Vec> as_set(const std::vector<weylgpd::Root>& rs) {
  std::set<oracle::Vec> out;
  for (const auto& r : rs) out.insert(r.coords);
  return out;
}

/// Realizes a symmetrizable Cartan matrix as a braiding over C(t):
/// q_ii = t^{d_i}, q_ij = t^{d_i c_ij} for i < j, q_ij = 1 for i > j, with d_i c_ij = d_j c_ji.
inline weylgpd::BraidingMatrix cartan_braiding(const oracle::Mat& c) {
  const std::size_t n = c.size();
  std::vector<std::int64_t> d(n, 0);
  d[0] = 1;
  // Propagate symmetrizers along the (connected) diagram, then clear denominators.
  std::vector<std::int64_t> num(n, 0), den(n, 1);
  num[0] = 1;
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (num[i] != 0 && num[j] == 0 && c[i][j] != 0) {
          num[j] = num[i] * c[i][j];
          den[j] = den[i] * c[j][i];
          changed = true;
        }
  }
  std::int64_t common = 1;
  for (std::size_t i = 0; i < n; ++i) common *= den[i] < 0 ? -den[i] : den[i];
  for (std::size_t i = 0; i < n; ++i) {
    d[i] = num[i] * common / den[i];
    if (d[i] < 0) d[i] = -d[i];
  }
  std::int64_t g = 0;
  for (auto v : d) g = std::gcd(g, v);
  for (auto& v : d) v /= g;

  weylgpd::BraidingMatrix q(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j)
        q(i, j) = weylgpd::CycloMonomial::parameter(0, d[i]);
      else if (i < j)
        q(i, j) = weylgpd::CycloMonomial::parameter(0, d[i] * c[i][j]);
    }
  return q;
}

}  // namespace testing

#endif
