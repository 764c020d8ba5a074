#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "realk/errors.hpp"

// Exact integer linear algebra: Smith normal form with transforms, kernels,
// cokernels, and canonical finitely generated abelian groups. All entries are
// arbitrary-precision (SNF intermediates explode well before the inputs get
// interesting). Everything here is a pure function of its inputs.

namespace realk {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<Int>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  bool operator==(const IntMatrix& o) const = default;

  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix& o) const;
  IntMatrix operator+(const IntMatrix& o) const;
  IntMatrix operator-(const IntMatrix& o) const;

  bool is_zero() const;
  std::string to_string() const;

 private:
  std::size_t rows_, cols_;
  std::vector<Int> a_;
};

// Canonical f.g. abelian group: Z^free_rank + Z/d_1 + ... + Z/d_k with
// 2 <= d_1 | d_2 | ... | d_k. Two values are isomorphic iff structurally equal.
class FgAbGroup {
 public:
  FgAbGroup() : free_rank_(0) {}
  FgAbGroup(std::size_t free_rank, std::vector<Int> invariant_factors);

  static FgAbGroup trivial() { return FgAbGroup(); }
  static FgAbGroup free_of_rank(std::size_t r) { return FgAbGroup(r, {}); }
  static FgAbGroup cyclic(const Int& n);

  std::size_t free_rank() const { return free_rank_; }
  const std::vector<Int>& invariant_factors() const { return factors_; }
  bool is_trivial() const { return free_rank_ == 0 && factors_.empty(); }

  // Order of the torsion part times Z^rank; finite iff free_rank == 0.
  bool is_finite() const { return free_rank_ == 0; }
  Int torsion_order() const;

  // True when every element is killed by n.
  bool exponent_divides(const Int& n) const;

  FgAbGroup direct_sum(const FgAbGroup& o) const;

  bool operator==(const FgAbGroup& o) const = default;
  auto operator<=>(const FgAbGroup& o) const = default;

  std::string to_string() const;  // e.g. "Z^2 + Z/2 + Z/6", "0"

 private:
  std::size_t free_rank_;
  std::vector<Int> factors_;
};

struct SmithResult {
  std::vector<Int> divisors;  // nonzero diagonal, d_1 | d_2 | ..., all > 0
  std::size_t rank = 0;       // = divisors.size()
  IntMatrix row_ops;          // P with P * M * Q = diag(divisors, 0...)
  IntMatrix col_ops;          // Q (unimodular)
};

// Invariant factors of M (1s included, zeros stripped). Deterministic
// pivoting: smallest nonzero absolute value, ties by lexicographic position.
std::vector<Int> smith_normal_form(const IntMatrix& m);

SmithResult smith_with_transforms(const IntMatrix& m);

// Z^rows / image(M), in canonical form.
FgAbGroup cokernel(const IntMatrix& m);

// Columns form a Z-basis of ker(M).
IntMatrix kernel_basis(const IntMatrix& m);

std::size_t rank(const IntMatrix& m);

// ker(ker_of) / im(im_of); throws ContainmentViolation if the image is not
// contained in the kernel.
FgAbGroup subquotient(const IntMatrix& ker_of, const IntMatrix& im_of);

// Rank of M over the field with two elements.
std::size_t rank_mod2(const IntMatrix& m);

// |det M| for square M (product of invariant factors; 0 if rank-deficient).
Int abs_det(const IntMatrix& m);

// Trial-division factorization n = prod p^e, n >= 2. Desk-scale inputs only.
std::map<Int, unsigned> factor_integer(const Int& n);

// Rebuild an invariant-factor chain from a primary decomposition
// {p^k -> multiplicity}.
std::vector<Int> invariant_factors_from_primary(const std::map<Int, unsigned>& primary);

}  // namespace realk
