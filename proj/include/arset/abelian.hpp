#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace arset {

using Integer = boost::multiprecision::cpp_int;

class Presentation;

// Dense integer matrix, row-major, exact entries.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Integer&       operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  Integer const& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  // row[dst] += k * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, Integer const& k);
  void add_col_multiple(std::size_t dst, std::size_t src, Integer const& k);
  void negate_row(std::size_t r);

  friend bool operator==(IntMatrix const&, IntMatrix const&) = default;

 private:
  std::size_t          rows_ = 0;
  std::size_t          cols_ = 0;
  std::vector<Integer> entries_;
};

IntMatrix operator*(IntMatrix const& x, IntMatrix const& y);

// Fraction-free (Bareiss) elimination. Requires a square matrix.
Integer determinant(IntMatrix const& a);

// Rows of space-separated integers, one row per line.
std::string to_string(IntMatrix const& a);

// U * A * V == D, U and V unimodular, D diagonal with diag[i] | diag[i+1].
struct SmithDecomposition {
  IntMatrix            D;
  IntMatrix            U;
  IntMatrix            V;
  std::vector<Integer> diag;  // length min(rows, cols)
};

SmithDecomposition smith_normal_form(IntMatrix const& a);

// Row j holds the exponent sums of relator j.
IntMatrix abelianization_matrix(Presentation const& p);

// Order of each generator's image in the abelianization; nullopt is infinite.
using GeneratorOrder  = std::optional<Integer>;
using GeneratorOrders = std::vector<GeneratorOrder>;

GeneratorOrders generator_orders(Presentation const& p);
GeneratorOrders generator_orders(IntMatrix const& relator_matrix);

// Invariant factors of the abelianization with the units dropped, one zero
// per free Z summand; empty when the abelianization is trivial.
std::vector<Integer> abelian_invariants(Presentation const& p);

struct GcdCertificate {
  Integer              gcd;
  std::vector<Integer> coefficients;  // sum coefficients[i] * values[i] == gcd
};

// Left fold of the extended Euclidean algorithm. Throws PreconditionError for
// an empty list or a non-positive entry.
GcdCertificate extended_gcd(std::vector<Integer> const& values);

}  // namespace arset
