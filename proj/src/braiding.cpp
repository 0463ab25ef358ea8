#include "weylgpd/braiding.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "weylgpd/errors.hpp"

namespace weylgpd {

BraidingMatrix::BraidingMatrix(std::size_t rank) : rank_(rank), q_(rank * rank) {
  if (rank == 0) throw std::invalid_argument("braiding matrix rank must be >= 1");
}

BraidingMatrix::BraidingMatrix(std::size_t rank, std::vector<CycloMonomial> entries)
    : rank_(rank), q_(std::move(entries)) {
  if (rank == 0) throw std::invalid_argument("braiding matrix rank must be >= 1");
  if (q_.size() != rank * rank) throw std::invalid_argument("braiding matrix must be square");
}

CycloMonomial BraidingMatrix::bilinear(const Root& a, const Root& b) const {
  CycloMonomial v;
  for (std::size_t i = 0; i < rank_; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < rank_; ++j) {
      if (b[j] == 0) continue;
      v *= (*this)(i, j).pow(a[i] * b[j]);
    }
  }
  return v;
}

BraidingMatrix BraidingMatrix::transpose() const {
  BraidingMatrix t(rank_);
  for (std::size_t i = 0; i < rank_; ++i)
    for (std::size_t j = 0; j < rank_; ++j) t(i, j) = (*this)(j, i);
  return t;
}

std::string BraidingMatrix::str() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < rank_; ++i) {
    for (std::size_t j = 0; j < rank_; ++j) out << (j ? " " : "") << (*this)(i, j).str();
    out << '\n';
  }
  return out.str();
}

CycloMonomial DynkinDiagram::edge(Vertex i, Vertex j) const {
  if (i > j) std::swap(i, j);
  auto it = edges.find({i, j});
  return it == edges.end() ? CycloMonomial{} : it->second;
}

std::string DynkinDiagram::str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < vertices.size(); ++i) out += (i ? " " : "") + vertices[i].str();
  out += "] {";
  bool first = true;
  for (const auto& [key, label] : edges) {
    if (!first) out += ", ";
    first = false;
    out += std::to_string(key.first + 1) + "-" + std::to_string(key.second + 1) + ":" + label.str();
  }
  return out + "}";
}

DynkinDiagram dynkin_diagram(const BraidingMatrix& q) {
  DynkinDiagram d;
  d.vertices.reserve(q.rank());
  for (std::size_t i = 0; i < q.rank(); ++i) d.vertices.push_back(q(i, i));
  for (std::size_t i = 0; i < q.rank(); ++i)
    for (std::size_t j = i + 1; j < q.rank(); ++j) {
      CycloMonomial e = q.edge(i, j);
      if (!e.is_one()) d.edges.emplace(std::pair{i, j}, std::move(e));
    }
  return d;
}

BraidingMatrix representative(const DynkinDiagram& d) {
  BraidingMatrix q(d.rank());
  for (std::size_t i = 0; i < d.rank(); ++i) q(i, i) = d.vertices[i];
  for (const auto& [key, label] : d.edges) q(key.first, key.second) = label;
  return q;
}

bool twist_equivalent(const BraidingMatrix& q, const BraidingMatrix& p) {
  return q.rank() == p.rank() && dynkin_diagram(q) == dynkin_diagram(p);
}

std::int64_t cartan_search_cap(const CycloMonomial& q_ii) {
  const Order n = q_ii.multiplicative_order();
  return std::max<std::int64_t>(n ? 2 * *n : 0, 1000);
}

Gcm cartan_matrix(const BraidingMatrix& q) {
  const std::size_t n = q.rank();
  Gcm c(n);
  for (std::size_t i = 0; i < n; ++i) {
    c(i, i) = 2;
    const CycloMonomial& qii = q(i, i);
    const std::int64_t cap = cartan_search_cap(qii);
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const CycloMonomial edge = q.edge(i, j);
      CycloMonomial power;  // q_ii^m
      std::int64_t m = 0;
      for (; m <= cap; ++m) {
        if (qnum_is_zero(qii, m) || (power * edge).is_one()) break;
        power *= qii;
      }
      if (m > cap)
        throw NotAdmissible(i, j, "no n <= " + std::to_string(cap) + " with (n+1)_q (1 - q_ii^n q~_ij) = 0");
      c(i, j) = -m;
    }
  }
  return c;
}

BraidingMatrix reflect_braiding(const BraidingMatrix& q, Vertex i, const Gcm& c) {
  const std::size_t n = q.rank();
  if (i >= n) throw std::out_of_range("reflect_braiding: vertex out of range");
  BraidingMatrix r(n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      r(j, k) = q(j, k) * q(i, k).pow(-c(i, j)) * q(j, i).pow(-c(i, k)) *
                q(i, i).pow(c(i, j) * c(i, k));
  return r;
}

BraidingMatrix reflect_braiding(const BraidingMatrix& q, Vertex i) {
  return reflect_braiding(q, i, cartan_matrix(q));
}

bool is_cartan_vertex(const BraidingMatrix& q, Vertex i, const Gcm& c) {
  for (std::size_t j = 0; j < q.rank(); ++j) {
    if (j == i) continue;
    if (q.edge(i, j) != q(i, i).pow(c(i, j))) return false;
  }
  return true;
}

bool is_cartan_vertex(const BraidingMatrix& q, Vertex i) {
  return is_cartan_vertex(q, i, cartan_matrix(q));
}

}  // namespace weylgpd
