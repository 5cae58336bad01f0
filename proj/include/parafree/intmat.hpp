#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "parafree/coset.hpp"

namespace parafree {

using BigInt = boost::multiprecision::cpp_int;

// A dense rectangular matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix(int rows, int cols);
  IntMatrix(int rows, int cols, std::vector<BigInt> entries);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  BigInt& at(int i, int j) { return entries_[static_cast<std::size_t>(i) * cols_ + j]; }
  const BigInt& at(int i, int j) const {
    return entries_[static_cast<std::size_t>(i) * cols_ + j];
  }

  bool operator==(const IntMatrix&) const = default;

 private:
  int rows_;
  int cols_;
  std::vector<BigInt> entries_;
};

// Invariant factors d_1 | d_2 | ... (nonnegative, divisibility chain, zeros
// only at the tail); rank = number of nonzero factors.
struct SmithForm {
  std::vector<BigInt> invariant_factors;
  int rank = 0;

  // Product of nonzero factors: the torsion order of the presented group
  // when the form describes abelian invariants.
  BigInt torsion_order() const;
  bool is_trivial_group() const;  // all factors 1 (and none 0)
};

// Smith normal form via elementary row/column operations with
// smallest-pivot selection. Returns min(rows, cols) factors.
SmithForm smith_normal_form(IntMatrix a);

// Exact determinant by Bareiss fraction-free elimination.
BigInt determinant(IntMatrix a);

// Exponent-sum matrix of a presentation: one row per relator, one column
// per generator.
IntMatrix relation_matrix(const Presentation& pres);

// Abelian invariants of the group presented by `pres`: the Smith form of
// its relation matrix, padded with zero factors for the free rank.
SmithForm abelian_invariants(const Presentation& pres);

std::string to_string(const IntMatrix& a);

}  // namespace parafree
