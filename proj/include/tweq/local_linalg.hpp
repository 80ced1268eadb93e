#ifndef TWEQ_LOCAL_LINALG_HPP_
#define TWEQ_LOCAL_LINALG_HPP_

// Linear algebra over the local ring Z/p^a. Every nonzero element is a unit
// times a power of p, so Smith normal form needs no gcd steps: pivot on an
// entry of minimal valuation and it divides its whole row and column.

#include <cstdint>
#include <vector>

namespace tweq {

class LocalRing {
 public:
  LocalRing(int p, int a);

  int prime() const noexcept { return p_; }
  int exponent() const noexcept { return a_; }
  std::int64_t modulus() const noexcept { return q_; }

  std::int64_t reduce(std::int64_t x) const {
    x %= q_;
    return x < 0 ? x + q_ : x;
  }
  // Valuation of a reduced element; valuation(0) == exponent().
  int valuation(std::int64_t x) const;
  std::int64_t unit_inverse(std::int64_t unit) const;
  std::int64_t power_of_p(int k) const { return pow_[k]; }

 private:
  int p_;
  int a_;
  std::int64_t q_;
  std::vector<std::int64_t> pow_;
};

class LocalMatrix {
 public:
  LocalMatrix() = default;
  LocalMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0) {}
  static LocalMatrix identity(int n);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  std::int64_t& at(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  std::int64_t at(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  std::int64_t* row(int r) { return data_.data() + static_cast<std::size_t>(r) * cols_; }
  const std::int64_t* row(int r) const { return data_.data() + static_cast<std::size_t>(r) * cols_; }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::int64_t> data_;
};

// U * M * V = D with D diagonal, D(i,i) = p^{valuations[i]} for i < rank and
// zero afterwards. Each transform is only computed when requested.
struct SmithForm {
  std::vector<int> valuations;  // length == rank; nondecreasing
  LocalMatrix left, left_inverse, right, right_inverse;
  int rank() const noexcept { return static_cast<int>(valuations.size()); }
};

struct SmithRequest {
  bool left = false;
  bool left_inverse = false;
  bool right = false;
  bool right_inverse = false;
  // Optional block of right-hand sides (rows == m.rows()) that receives the
  // same row operations, i.e. ends up multiplied by U.
  LocalMatrix* rhs = nullptr;
};

SmithForm smith_normal_form(const LocalRing& ring, LocalMatrix m,
                            SmithRequest request);

// Generators (as columns of the returned matrix) of {x : M x = 0}.
LocalMatrix kernel_generators(const LocalRing& ring, const LocalMatrix& m);

}  // namespace tweq

#endif  // TWEQ_LOCAL_LINALG_HPP_
