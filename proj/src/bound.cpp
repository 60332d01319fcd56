#include "lmc/bound.hpp"

#include <algorithm>

#include "lmc/connectivity.hpp"

namespace lmc {

namespace {

int combine_thirds(const CperfectReport& a, const CperfectReport& b, const BoundOptions& o) {
  int thirds = a.numerator;
  if (o.combine == CperfectCombine::Min) thirds = std::min(a.numerator, b.numerator);
  if (o.combine == CperfectCombine::Max) thirds = std::max(a.numerator, b.numerator);
  // mprime(M^T) is the transpose of mprime(M), so both share one rank.
  if (o.rank_cap) thirds = std::min(thirds, 3 * a.nullity);
  return thirds;
}

LmcReport compute(const BinMatrix& m, const BinMatrix& inv, const BoundOptions& o) {
  const int n = m.dim();
  LmcReport r;
  r.n = n;
  r.mode = o.mode;
  r.combine = o.combine;
  r.rank_cap = o.rank_cap;
  const int v = vertex_component_count(m);
  const int e = edge_component_count(m);
  r.ell = n - v;
  r.c = e - v;
  r.z = diag_zero_count(m);
  r.z_inv = diag_zero_count(inv);
  const BinMatrix mp = (m & transpose(inv)) ^ BinMatrix::identity(n);
  r.cperfect_m = cperfect_from_mprime(mp);
  r.cperfect_mt = cperfect_from_mprime(transpose(mp));
  r.cperfect_thirds = combine_thirds(r.cperfect_m, r.cperfect_mt, o);
  const int m_thirds = 3 * n - r.cperfect_thirds;
  r.bound_thirds = 3 * r.ell + std::max({m_thirds + 3 * r.c, 3 * r.z, 3 * r.z_inv});
  if (o.mode == CperfectMode::Floor) {
    r.m = n - r.cperfect_thirds / 3;
    r.bound = r.ell + std::max({r.m + r.c, r.z, r.z_inv});
  } else {
    r.m = (m_thirds + 2) / 3;
    r.bound = (r.bound_thirds + 2) / 3;
  }
  r.depth_lb = n >= 2 ? depth_lower_bound(r.bound, n) : 0;
  return r;
}

int bound_only(const BinMatrix& m, const BinMatrix& inv, const BoundOptions& o) {
  const int n = m.dim();
  const int v = vertex_component_count(m);
  const int ell = n - v;
  const int c = edge_component_count(m) - v;
  const BinMatrix mp = (m & transpose(inv)) ^ BinMatrix::identity(n);
  CperfectReport a;
  CperfectReport b;
  const EmpDup ea = emp_dup(mp);
  a.numerator = n + 2 * ea.emp + ea.dup;
  if (o.combine != CperfectCombine::Matrix) {
    const EmpDup eb = emp_dup(transpose(mp));
    b.numerator = n + 2 * eb.emp + eb.dup;
  }
  a.nullity = o.rank_cap ? n - rank(mp) : 0;
  const int thirds = combine_thirds(a, b, o);
  const int z = diag_zero_count(m);
  const int z_inv = diag_zero_count(inv);
  if (o.mode == CperfectMode::Floor) {
    return ell + std::max({n - thirds / 3 + c, z, z_inv});
  }
  const int total = 3 * ell + std::max({3 * n - thirds + 3 * c, 3 * z, 3 * z_inv});
  return (total + 2) / 3;
}

}  // namespace

std::string LmcReport::m_rational() const {
  const int thirds = 3 * n - cperfect_thirds;
  if (thirds % 3 == 0) return std::to_string(thirds / 3);
  return std::to_string(thirds) + "/3";
}

LmcReport lmc_bound(const BinMatrix& m, const BoundOptions& options) {
  const BinMatrix inv = inverse(m);
  LmcReport best = compute(m, inv, options);
  if (options.strengthen) {
    const BinMatrix mt = transpose(m);
    const BinMatrix inv_t = transpose(inv);
    for (const auto& [form, form_inv] :
         {std::pair{mt, inv_t}, std::pair{inv, m}, std::pair{inv_t, mt}}) {
      LmcReport r = compute(form, form_inv, options);
      if (r.bound > best.bound) best = r;
    }
    best.strengthened = true;
  }
  return best;
}

int lmc_bound_value(const BinMatrix& m, const BoundOptions& options) {
  if (options.strengthen) return lmc_bound(m, options).bound;
  return bound_only(m, inverse(m), options);
}

std::string_view combine_name(CperfectCombine c) {
  switch (c) {
    case CperfectCombine::Min:
      return "min";
    case CperfectCombine::Max:
      return "max";
    case CperfectCombine::Matrix:
      return "matrix";
  }
  return "?";
}

CperfectCombine parse_combine(std::string_view text) {
  for (CperfectCombine c : {CperfectCombine::Min, CperfectCombine::Max, CperfectCombine::Matrix}) {
    if (combine_name(c) == text) return c;
  }
  throw ParseError(0, "unknown c_perfect rule '" + std::string(text) + "' (min, max, matrix)");
}

std::vector<BinMatrix> equivalent_forms(const BinMatrix& m,
                                        const std::vector<Permutation>& conjugators) {
  const BinMatrix inv = inverse(m);
  std::vector<BinMatrix> forms{m, inv, transpose(m), transpose(inv)};
  for (const Permutation& p : conjugators) {
    const BinMatrix pm = permutation_matrix(p);
    forms.push_back(multiply(multiply(inverse(pm), m), pm));
  }
  return forms;
}

int depth_lower_bound(int size_lb, int n) {
  if (n < 2) throw PreconditionError("depth bound needs n >= 2");
  const int per_layer = n / 2;
  return (size_lb + per_layer - 1) / per_layer;
}

}  // namespace lmc
