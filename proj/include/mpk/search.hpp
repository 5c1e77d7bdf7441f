#pragma once

// Brute-force search oracles over finite candidate spaces: Yang-Baxter
// solutions and weighted (relative) Rota-Baxter operators.  Enumeration is
// lexicographic over flattened coefficients and the result order is
// deterministic regardless of the worker count.

#include <cstdlib>
#include <thread>

#include "mpk/post.hpp"

namespace mpk {

struct SearchLimits {
  long limit = -1;              // max results; -1 = unlimited
  long max_space = 5'000'000;   // guard against infeasible enumerations
  int box = 1;                  // rational coefficient box [-box, box]
};

// Worker count: MPKIT_THREADS caps it, 0 or unset means auto.
inline int worker_count() {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (hw > 8) hw = 8;
  if (const char* env = std::getenv("MPKIT_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<int>(v);
  }
  return static_cast<int>(hw);
}

namespace detail {

// Candidate coefficient values in enumeration order.
inline std::vector<Scalar> candidate_values(FieldSpec f, int box) {
  std::vector<Scalar> vals;
  if (f.is_rational()) {
    for (int v = -box; v <= box; ++v) vals.push_back(Scalar::of_int(f, v));
  } else {
    for (std::uint32_t v = 0; v < f.characteristic; ++v)
      vals.push_back(Scalar::of_int(f, v));
  }
  return vals;
}

// Enumerates all assignments of `cells` coefficients from `vals`, calling
// keep(index, coefficients) to test; returns the indices of accepted
// candidates in enumeration order.  Work is partitioned across workers in
// contiguous chunks, so the merged order equals the sequential order.
template <class Keep>
std::vector<long> scan_space(long space, int threads, const Keep& keep) {
  if (threads <= 1 || space < 4096) {
    std::vector<long> hits;
    for (long idx = 0; idx < space; ++idx)
      if (keep(idx)) hits.push_back(idx);
    return hits;
  }
  std::vector<std::vector<long>> per(threads);
  std::vector<std::thread> pool;
  long chunk = (space + threads - 1) / threads;
  for (int t = 0; t < threads; ++t) {
    long lo = t * chunk, hi = std::min(space, lo + chunk);
    pool.emplace_back([&, t, lo, hi]() {
      for (long idx = lo; idx < hi; ++idx)
        if (keep(idx)) per[t].push_back(idx);
    });
  }
  for (auto& th : pool) th.join();
  std::vector<long> hits;
  for (auto& v : per) hits.insert(hits.end(), v.begin(), v.end());
  return hits;
}

inline void decode(long idx, const std::vector<Scalar>& vals, int cells,
                   std::vector<Scalar>& out) {
  long base = static_cast<long>(vals.size());
  out.resize(cells);
  for (int c = cells - 1; c >= 0; --c) {
    out[c] = vals[idx % base];
    idx /= base;
  }
}

inline long space_size(size_t base, int cells, long max_space) {
  long space = 1;
  for (int c = 0; c < cells; ++c) {
    if (space > max_space / static_cast<long>(base))
      throw Error("search space too large (" + std::to_string(base) + "^" +
                  std::to_string(cells) + " candidates)");
    space *= static_cast<long>(base);
  }
  return space;
}

}  // namespace detail

// All r with both MPYBE residuals zero, in enumeration order.  With
// skew_only the scan runs over strictly upper-triangular coefficients and r
// is completed antisymmetrically.
inline std::vector<Tensor> search_ybe(const AlgebraSpec& A, bool skew_only,
                                      const SearchLimits& lim = {}) {
  A.validate();
  if (!A.bracket || !A.product)
    throw Error("search_ybe: A must carry bracket and product");
  int d = A.dim;
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (!skew_only || i < j) cells.emplace_back(i, j);
  auto vals = detail::candidate_values(A.field, lim.box);
  long space = detail::space_size(vals.size(), static_cast<int>(cells.size()),
                                  lim.max_space);

  auto build = [&](long idx) {
    thread_local std::vector<Scalar> coeff;
    detail::decode(idx, vals, static_cast<int>(cells.size()), coeff);
    Tensor r(A.field, {d, d});
    for (size_t c = 0; c < cells.size(); ++c) {
      r.at({cells[c].first, cells[c].second}) = coeff[c];
      if (skew_only) r.at({cells[c].second, cells[c].first}) = -coeff[c];
    }
    return r;
  };
  auto hits = detail::scan_space(space, worker_count(), [&](long idx) {
    auto [C, M] = mpybe_residuals(A, build(idx));
    return C.is_zero() && M.is_zero();
  });
  std::vector<Tensor> out;
  for (long idx : hits) {
    if (lim.limit >= 0 && static_cast<long>(out.size()) >= lim.limit) break;
    out.push_back(build(idx));
  }
  return out;
}

// All R : V -> A passing the weighted relative Rota-Baxter laws at the given
// weight, in enumeration order.
inline std::vector<LinearMap> search_rb(const AlgebraSpec& A,
                                        const ModuleSpec& m,
                                        const Scalar& lambda,
                                        const SearchLimits& lim = {}) {
  if (!m.rho || !m.mu) throw Error("search_rb: module needs rho and mu");
  int rows = A.dim, cols = m.module_dim;
  int cells = rows * cols;
  auto vals = detail::candidate_values(A.field, lim.box);
  long space = detail::space_size(vals.size(), cells, lim.max_space);

  auto build = [&](long idx) {
    thread_local std::vector<Scalar> coeff;
    detail::decode(idx, vals, cells, coeff);
    Mat mat(A.field, rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) mat.at(i, j) = coeff[i * cols + j];
    return LinearMap(cols, rows, mat);
  };
  auto hits = detail::scan_space(space, worker_count(), [&](long idx) {
    LinearMap R = build(idx);
    return all_hold(check_weighted_rrb(A, m, R, lambda));
  });
  std::vector<LinearMap> out;
  for (long idx : hits) {
    if (lim.limit >= 0 && static_cast<long>(out.size()) >= lim.limit) break;
    out.push_back(build(idx));
  }
  return out;
}

}  // namespace mpk
