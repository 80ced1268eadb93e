#include "tweq/local_linalg.hpp"

#include <algorithm>
#include <utility>

#include "tweq/error.hpp"

namespace tweq {

LocalRing::LocalRing(int p, int a) : p_(p), a_(a), q_(1) {
  if (p < 2 || a < 1) throw invalid_parameter("local ring needs p >= 2, a >= 1");
  pow_.push_back(1);
  for (int i = 0; i < a; ++i) {
    q_ *= p;
    if (q_ > (std::int64_t{1} << 31)) throw capacity_error("modulus above 2^31");
    pow_.push_back(q_);
  }
}

int LocalRing::valuation(std::int64_t x) const {
  if (x == 0) return a_;
  int v = 0;
  while (x % p_ == 0) {
    x /= p_;
    ++v;
  }
  return v;
}

std::int64_t LocalRing::unit_inverse(std::int64_t unit) const {
  // Extended Euclid on (unit, q).
  std::int64_t old_r = reduce(unit), r = q_, old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t quo = old_r / r;
    std::swap(old_r, r);
    r -= quo * old_r;
    std::swap(old_s, s);
    s -= quo * old_s;
  }
  if (old_r != 1) throw invalid_parameter("element is not a unit");
  return reduce(old_s);
}

LocalMatrix LocalMatrix::identity(int n) {
  LocalMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

namespace {

// row_dst += c * row_src over the first `len` entries.
void axpy(const LocalRing& ring, std::int64_t* dst, const std::int64_t* src,
          std::int64_t c, int len) {
  const std::int64_t q = ring.modulus();
  for (int k = 0; k < len; ++k) {
    if (src[k] != 0) dst[k] = (dst[k] + c * src[k]) % q;
  }
}

void swap_rows(LocalMatrix& m, int a, int b) {
  if (a == b) return;
  std::swap_ranges(m.row(a), m.row(a) + m.cols(), m.row(b));
}

void swap_cols(LocalMatrix& m, int a, int b) {
  if (a == b) return;
  for (int r = 0; r < m.rows(); ++r) std::swap(m.at(r, a), m.at(r, b));
}

// col_dst += c * col_src
void col_axpy(const LocalRing& ring, LocalMatrix& m, int dst, int src,
              std::int64_t c) {
  const std::int64_t q = ring.modulus();
  for (int r = 0; r < m.rows(); ++r) {
    const std::int64_t s = m.at(r, src);
    if (s != 0) m.at(r, dst) = (m.at(r, dst) + c * s) % q;
  }
}

}  // namespace

SmithForm smith_normal_form(const LocalRing& ring, LocalMatrix m,
                            SmithRequest request) {
  const int rows = m.rows();
  const int cols = m.cols();
  const std::int64_t q = ring.modulus();
  SmithForm out;
  if (request.left) out.left = LocalMatrix::identity(rows);
  if (request.left_inverse) out.left_inverse = LocalMatrix::identity(rows);
  if (request.right) out.right = LocalMatrix::identity(cols);
  if (request.right_inverse) out.right_inverse = LocalMatrix::identity(cols);

  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m.at(r, c) = ring.reduce(m.at(r, c));

  const int limit = std::min(rows, cols);
  for (int t = 0; t < limit; ++t) {
    // Pivot of minimal valuation in the trailing block.
    int best_v = ring.exponent(), pr = -1, pc = -1;
    for (int r = t; r < rows && best_v > 0; ++r) {
      const std::int64_t* row = m.row(r);
      for (int c = t; c < cols; ++c) {
        if (row[c] == 0) continue;
        const int v = ring.valuation(row[c]);
        if (v < best_v) {
          best_v = v;
          pr = r;
          pc = c;
          if (v == 0) break;
        }
      }
    }
    if (pr < 0) break;

    swap_rows(m, t, pr);
    if (request.rhs) swap_rows(*request.rhs, t, pr);
    if (request.left) swap_rows(out.left, t, pr);
    if (request.left_inverse) swap_cols(out.left_inverse, t, pr);
    swap_cols(m, t, pc);
    if (request.right) swap_cols(out.right, t, pc);
    if (request.right_inverse) swap_rows(out.right_inverse, t, pc);

    // Normalize the pivot to exactly p^v.
    const std::int64_t pv = ring.power_of_p(best_v);
    const std::int64_t unit = m.at(t, t) / pv;
    if (unit != 1) {
      const std::int64_t inv = ring.unit_inverse(unit);
      std::int64_t* row = m.row(t);
      for (int c = t; c < cols; ++c) row[c] = (row[c] * inv) % q;
      if (request.rhs) {
        std::int64_t* hrow = request.rhs->row(t);
        for (int c = 0; c < request.rhs->cols(); ++c) hrow[c] = (hrow[c] * inv) % q;
      }
      if (request.left) {
        std::int64_t* lrow = out.left.row(t);
        for (int c = 0; c < rows; ++c) lrow[c] = (lrow[c] * inv) % q;
      }
      if (request.left_inverse) {
        for (int r = 0; r < rows; ++r)
          out.left_inverse.at(r, t) = (out.left_inverse.at(r, t) * unit) % q;
      }
    }

    // Clear column t with row operations.
    for (int r = t + 1; r < rows; ++r) {
      const std::int64_t e = m.at(r, t);
      if (e == 0) continue;
      const std::int64_t c = ring.reduce(-(e / pv));
      axpy(ring, m.row(r) + t, m.row(t) + t, c, cols - t);
      if (request.rhs)
        axpy(ring, request.rhs->row(r), request.rhs->row(t), c,
             request.rhs->cols());
      if (request.left) axpy(ring, out.left.row(r), out.left.row(t), c, rows);
      if (request.left_inverse)
        col_axpy(ring, out.left_inverse, t, r, ring.reduce(-c));
    }
    // Clear row t with column operations; column t is zero below the pivot,
    // so only row t of m changes.
    for (int c = t + 1; c < cols; ++c) {
      const std::int64_t e = m.at(t, c);
      if (e == 0) continue;
      const std::int64_t k = ring.reduce(-(e / pv));
      m.at(t, c) = 0;
      if (request.right) col_axpy(ring, out.right, c, t, k);
      if (request.right_inverse)
        axpy(ring, out.right_inverse.row(t), out.right_inverse.row(c),
             ring.reduce(-k), cols);
    }
    out.valuations.push_back(best_v);
  }
  return out;
}

LocalMatrix kernel_generators(const LocalRing& ring, const LocalMatrix& m) {
  SmithForm s = smith_normal_form(ring, m, {.right = true});
  const int cols = m.cols();
  std::vector<std::pair<int, std::int64_t>> picks;  // (column of V, scale)
  for (int l = 0; l < cols; ++l) {
    if (l < s.rank()) {
      const int v = s.valuations[l];
      if (v == 0) continue;
      picks.emplace_back(l, ring.power_of_p(ring.exponent() - v));
    } else {
      picks.emplace_back(l, 1);
    }
  }
  LocalMatrix k(cols, static_cast<int>(picks.size()));
  for (std::size_t j = 0; j < picks.size(); ++j) {
    for (int r = 0; r < cols; ++r) {
      k.at(r, static_cast<int>(j)) =
          (s.right.at(r, picks[j].first) * picks[j].second) % ring.modulus();
    }
  }
  return k;
}

}  // namespace tweq
