#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

namespace greenhh {

using Int = mpz_class;
using Vec = std::vector<Int>;

/// Non-negative residue of a modulo m (m > 0).
Int mod_pos(const Int& a, const Int& m);

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
bool is_zero(const Vec& v);
void axpy(Vec& y, const Int& a, const Vec& x);  // y += a*x

/// Dense matrix of arbitrary-precision integers, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows,
                             std::size_t cols_if_empty = 0);
  static IntMatrix from_columns(const std::vector<Vec>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Vec column(std::size_t j) const;
  Vec row(std::size_t i) const;
  void set_column(std::size_t j, const Vec& v);

  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix& o) const;
  Vec operator*(const Vec& v) const;
  IntMatrix operator+(const IntMatrix& o) const;
  IntMatrix operator-(const IntMatrix& o) const;
  IntMatrix operator-() const;
  IntMatrix& operator+=(const IntMatrix& o);
  IntMatrix scaled(const Int& s) const;
  bool operator==(const IntMatrix& o) const;
  bool is_zero() const;

  /// [this | o]
  IntMatrix hcat(const IntMatrix& o) const;
  /// [this ; o]
  IntMatrix vcat(const IntMatrix& o) const;
  IntMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  IntMatrix select_columns(const std::vector<std::size_t>& idx) const;
  IntMatrix select_rows(const std::vector<std::size_t>& idx) const;

  /// Kronecker product.
  IntMatrix kron(const IntMatrix& o) const;

  std::vector<std::vector<std::string>> to_strings() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Int> a_;
};

IntMatrix matrix_power(const IntMatrix& m, long e);
std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

}  // namespace greenhh
