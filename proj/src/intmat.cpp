#include "parafree/intmat.hpp"

#include <algorithm>
#include <utility>

#include "parafree/errors.hpp"

namespace parafree {

IntMatrix::IntMatrix(int rows, int cols)
    : rows_(rows), cols_(cols),
      entries_(static_cast<std::size_t>(rows) * cols) {
  if (rows < 0 || cols < 0) throw Error("matrix dimensions must be >= 0");
}

IntMatrix::IntMatrix(int rows, int cols, std::vector<BigInt> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows < 0 || cols < 0) throw Error("matrix dimensions must be >= 0");
  if (entries_.size() != static_cast<std::size_t>(rows) * cols)
    throw Error("matrix entries do not match dimensions");
}

BigInt SmithForm::torsion_order() const {
  BigInt n = 1;
  for (const BigInt& d : invariant_factors)
    if (d != 0) n *= d;
  return n;
}

bool SmithForm::is_trivial_group() const {
  return std::all_of(invariant_factors.begin(), invariant_factors.end(),
                     [](const BigInt& d) { return d == 1; });
}

namespace {

BigInt abs_val(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

// Nearest-integer quotient, so the remainder satisfies |r| <= |b|/2.
BigInt rounded_quotient(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  BigInt r = a - q * b;
  if (2 * abs_val(r) > abs_val(b)) q += (a < 0) == (b < 0) ? 1 : -1;
  return q;
}

}  // namespace

SmithForm smith_normal_form(IntMatrix a) {
  const int rows = a.rows(), cols = a.cols();
  const int n = std::min(rows, cols);
  SmithForm out;
  out.invariant_factors.assign(n, 0);

  int t = 0;
  while (t < n) {
    // Pivot: smallest nonzero |entry| in the trailing submatrix.
    int pi = -1, pj = -1;
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j) {
        if (a.at(i, j) == 0) continue;
        if (pi < 0 || abs_val(a.at(i, j)) < abs_val(a.at(pi, pj))) {
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;
    if (pi != t)
      for (int j = 0; j < cols; ++j) std::swap(a.at(t, j), a.at(pi, j));
    if (pj != t)
      for (int i = 0; i < rows; ++i) std::swap(a.at(i, t), a.at(i, pj));

    bool again = true;
    while (again) {
      again = false;
      for (int i = t + 1; i < rows; ++i) {
        if (a.at(i, t) == 0) continue;
        BigInt q = rounded_quotient(a.at(i, t), a.at(t, t));
        for (int j = t; j < cols; ++j) a.at(i, j) -= q * a.at(t, j);
        if (a.at(i, t) != 0) {
          // Remainder is smaller than the pivot: promote it.
          for (int j = t; j < cols; ++j) std::swap(a.at(t, j), a.at(i, j));
          again = true;
        }
      }
      for (int j = t + 1; j < cols; ++j) {
        if (a.at(t, j) == 0) continue;
        BigInt q = rounded_quotient(a.at(t, j), a.at(t, t));
        for (int i = t; i < rows; ++i) a.at(i, j) -= q * a.at(i, t);
        if (a.at(t, j) != 0) {
          for (int i = t; i < rows; ++i) std::swap(a.at(i, t), a.at(i, j));
          again = true;
        }
      }
      if (again) continue;
      // Row and column are clear; enforce divisibility of the rest.
      for (int i = t + 1; i < rows && !again; ++i)
        for (int j = t + 1; j < cols && !again; ++j)
          if (a.at(i, j) % a.at(t, t) != 0) {
            for (int jj = t; jj < cols; ++jj) a.at(t, jj) += a.at(i, jj);
            again = true;
          }
    }
    if (a.at(t, t) < 0) a.at(t, t) = -a.at(t, t);
    out.invariant_factors[t] = a.at(t, t);
    ++t;
  }
  out.rank = t;
  return out;
}

BigInt determinant(IntMatrix a) {
  if (a.rows() != a.cols()) throw Error("determinant: matrix is not square");
  const int n = a.rows();
  if (n == 0) return 1;
  int sign = 1;
  BigInt prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a.at(k, k) == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i)
        if (a.at(i, k) != 0) {
          swap_row = i;
          break;
        }
      if (swap_row < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(swap_row, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
    prev = a.at(k, k);
  }
  return sign * a.at(n - 1, n - 1);
}

IntMatrix relation_matrix(const Presentation& pres) {
  IntMatrix m(static_cast<int>(pres.relators.size()), pres.alphabet.size());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      m.at(i, j) = pres.relators[i].exponent_sum(j);
  return m;
}

SmithForm abelian_invariants(const Presentation& pres) {
  SmithForm s = smith_normal_form(relation_matrix(pres));
  s.invariant_factors.resize(pres.alphabet.size(), 0);
  // Trailing zeros beyond the generator count never occur: the factor list
  // of an r x g matrix has length min(r, g) <= g.
  return s;
}

std::string to_string(const IntMatrix& a) {
  std::string out;
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      if (j) out += ' ';
      out += a.at(i, j).str();
    }
    out += '\n';
  }
  return out;
}

}  // namespace parafree
