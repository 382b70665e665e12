#include "arset/abelian.hpp"

#include <sstream>
#include <tuple>

#include "arset/errors.hpp"
#include "arset/presentation.hpp"

namespace arset {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  entries_.reserve(rows_ * cols_);
  for (auto const& r : rows) {
    if (r.size() != cols_) {
      throw InputError("ragged matrix literal");
    }
    for (long v : r) {
      entries_.emplace_back(v);
    }
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = 1;
  }
  return m;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) {
    return;
  }
  for (std::size_t c = 0; c < cols_; ++c) {
    std::swap((*this)(a, c), (*this)(b, c));
  }
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) {
    return;
  }
  for (std::size_t r = 0; r < rows_; ++r) {
    std::swap((*this)(r, a), (*this)(r, b));
  }
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, Integer const& k) {
  for (std::size_t c = 0; c < cols_; ++c) {
    (*this)(dst, c) += k * (*this)(src, c);
  }
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, Integer const& k) {
  for (std::size_t r = 0; r < rows_; ++r) {
    (*this)(r, dst) += k * (*this)(r, src);
  }
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) {
    (*this)(r, c) = -(*this)(r, c);
  }
}

IntMatrix operator*(IntMatrix const& x, IntMatrix const& y) {
  if (x.cols() != y.rows()) {
    throw InputError("matrix dimensions do not agree");
  }
  IntMatrix out(x.rows(), y.cols());
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (std::size_t k = 0; k < x.cols(); ++k) {
      if (x(i, k) == 0) {
        continue;
      }
      for (std::size_t j = 0; j < y.cols(); ++j) {
        out(i, j) += x(i, k) * y(k, j);
      }
    }
  }
  return out;
}

Integer determinant(IntMatrix const& a) {
  if (a.rows() != a.cols()) {
    throw InputError("determinant of a non-square matrix");
  }
  std::size_t const n = a.rows();
  if (n == 0) {
    return 1;
  }
  IntMatrix m    = a;
  Integer   prev = 1;
  int       sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t i = k + 1;
      while (i < n && m(i, k) == 0) {
        ++i;
      }
      if (i == n) {
        return 0;
      }
      m.swap_rows(i, k);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::string to_string(IntMatrix const& a) {
  std::ostringstream out;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      out << (c == 0 ? "" : " ") << a(r, c);
    }
    out << '\n';
  }
  return out.str();
}

namespace {

  // Returns (g, x, y) with a*x + b*y == g == gcd(a, b), for a, b >= 0.
  std::tuple<Integer, Integer, Integer> ext_euclid(Integer const& a, Integer const& b) {
    if (b == 0) {
      return {a, 1, 0};
    }
    auto [g, x1, y1] = ext_euclid(b, a % b);
    return {g, y1, x1 - (a / b) * y1};
  }

  Integer abs_value(Integer const& x) {
    return x < 0 ? Integer(-x) : x;
  }

  bool pivot_block_clear(IntMatrix const& d, std::size_t t) {
    for (std::size_t i = t + 1; i < d.rows(); ++i) {
      if (d(i, t) != 0) {
        return false;
      }
    }
    for (std::size_t j = t + 1; j < d.cols(); ++j) {
      if (d(t, j) != 0) {
        return false;
      }
    }
    return true;
  }

}  // namespace

SmithDecomposition smith_normal_form(IntMatrix const& a) {
  std::size_t const m = a.rows(), n = a.cols();
  IntMatrix         d = a;
  IntMatrix         u = IntMatrix::identity(m);
  IntMatrix         v = IntMatrix::identity(n);
  std::size_t const r = std::min(m, n);

  for (std::size_t t = 0; t < r; ++t) {
    while (true) {
      // Least nonzero |entry| in the trailing block, first in row-major order.
      bool        found = false;
      std::size_t pr = t, pc = t;
      Integer     best;
      for (std::size_t i = t; i < m; ++i) {
        for (std::size_t j = t; j < n; ++j) {
          if (d(i, j) != 0 && (!found || abs_value(d(i, j)) < best)) {
            found = true;
            best  = abs_value(d(i, j));
            pr    = i;
            pc    = j;
          }
        }
      }
      if (!found) {
        break;
      }
      d.swap_rows(t, pr);
      u.swap_rows(t, pr);
      d.swap_cols(t, pc);
      v.swap_cols(t, pc);
      for (std::size_t i = t + 1; i < m; ++i) {
        if (d(i, t) != 0) {
          Integer q = d(i, t) / d(t, t);
          d.add_row_multiple(i, t, -q);
          u.add_row_multiple(i, t, -q);
        }
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d(t, j) != 0) {
          Integer q = d(t, j) / d(t, t);
          d.add_col_multiple(j, t, -q);
          v.add_col_multiple(j, t, -q);
        }
      }
      if (pivot_block_clear(d, t)) {
        break;
      }
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      u.negate_row(t);
    }
  }

  // Divisibility chain. Zeros are already trailing because pivots are taken
  // while any nonzero entry remains.
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i + 1; j < r; ++j) {
      Integer const di = d(i, i), dj = d(j, j);
      if (di == 0 || dj % di == 0) {
        continue;
      }
      auto [g, s, tc] = ext_euclid(di, dj);
      Integer const ai = di / g, aj = dj / g;
      // rows: [s tc; -aj ai], cols: [1 -tc*aj; 1 s*ai]
      auto mix_rows = [&](IntMatrix& x) {
        for (std::size_t c = 0; c < x.cols(); ++c) {
          Integer xi = x(i, c), xj = x(j, c);
          x(i, c)    = s * xi + tc * xj;
          x(j, c)    = -aj * xi + ai * xj;
        }
      };
      auto mix_cols = [&](IntMatrix& x) {
        for (std::size_t rr = 0; rr < x.rows(); ++rr) {
          Integer xi = x(rr, i), xj = x(rr, j);
          x(rr, i)   = xi + xj;
          x(rr, j)   = -tc * aj * xi + s * ai * xj;
        }
      };
      mix_rows(d);
      mix_rows(u);
      mix_cols(d);
      mix_cols(v);
    }
  }

  SmithDecomposition out{d, u, v, {}};
  out.diag.reserve(r);
  for (std::size_t t = 0; t < r; ++t) {
    out.diag.push_back(d(t, t));
  }
  return out;
}

IntMatrix abelianization_matrix(Presentation const& p) {
  auto const& gens = p.generators();
  IntMatrix   a(p.relators().size(), gens.size());
  for (std::size_t j = 0; j < p.relators().size(); ++j) {
    auto sums = exponent_sum(p.relators()[j], gens);
    for (std::size_t i = 0; i < gens.size(); ++i) {
      a(j, i) = sums[i];
    }
  }
  return a;
}

GeneratorOrders generator_orders(IntMatrix const& relator_matrix) {
  auto const        snf = smith_normal_form(relator_matrix);
  std::size_t const n   = relator_matrix.cols();
  GeneratorOrders   orders;
  orders.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    // q * e_i lies in the row lattice iff q * (e_i V)_j is a multiple of d_j
    // for every coordinate j, where d_j = 0 beyond the diagonal.
    GeneratorOrder order = Integer(1);
    for (std::size_t j = 0; j < n && order; ++j) {
      Integer const& c  = snf.V(i, j);
      Integer const  dj = j < snf.diag.size() ? snf.diag[j] : Integer(0);
      if (dj == 0) {
        if (c != 0) {
          order.reset();
        }
        continue;
      }
      Integer const need = dj / gcd(abs_value(c), dj);
      *order             = lcm(*order, need);
    }
    orders.push_back(std::move(order));
  }
  return orders;
}

GeneratorOrders generator_orders(Presentation const& p) {
  return generator_orders(abelianization_matrix(p));
}

std::vector<Integer> abelian_invariants(Presentation const& p) {
  auto const           a   = abelianization_matrix(p);
  auto const           snf = smith_normal_form(a);
  std::vector<Integer> out;
  for (auto const& d : snf.diag) {
    if (d != 1) {
      out.push_back(d);
    }
  }
  for (std::size_t j = snf.diag.size(); j < a.cols(); ++j) {
    out.emplace_back(0);
  }
  return out;
}

GcdCertificate extended_gcd(std::vector<Integer> const& values) {
  if (values.empty()) {
    throw PreconditionError("gcd of an empty list is undefined");
  }
  for (auto const& v : values) {
    if (v < 1) {
      throw PreconditionError("extended_gcd requires positive integers");
    }
  }
  GcdCertificate cert{values[0], {Integer(1)}};
  for (std::size_t k = 1; k < values.size(); ++k) {
    auto [g, s, t] = ext_euclid(cert.gcd, values[k]);
    for (auto& c : cert.coefficients) {
      c *= s;
    }
    cert.coefficients.push_back(t);
    cert.gcd = g;
  }
  return cert;
}

}  // namespace arset
