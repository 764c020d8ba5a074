#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "realk/intlinalg.hpp"

// Finite groups as full multiplication tables (desk scale), conjugacy class
// data, and the class-algebra matrices feeding the character engine. Tables
// make exhaustive verification of every invariant trivial, which is the point.

namespace realk {

class FiniteGroup {
 public:
  // Closure of a set of permutations of {0..m-1} under composition, with the
  // canonical element ordering: BFS from the identity over the generators,
  // new elements of each layer sorted lexicographically.
  static FiniteGroup from_permutations(const std::vector<std::vector<std::size_t>>& generators,
                                       std::size_t bound = 5000,
                                       std::string name = "G");

  // Multiplication table supplied directly; all group axioms verified.
  static FiniteGroup from_table(const std::vector<std::vector<std::size_t>>& table,
                                std::string name = "G");

  std::size_t order() const { return n_; }
  std::size_t identity() const { return identity_; }
  std::size_t mul(std::size_t a, std::size_t b) const { return mult_[a * n_ + b]; }
  std::size_t inv(std::size_t a) const { return inv_[a]; }
  std::size_t element_order(std::size_t a) const;
  const std::string& name() const { return name_; }

 private:
  FiniteGroup() = default;
  void finish(bool verify_associativity);

  std::size_t n_ = 0;
  std::size_t identity_ = 0;
  std::vector<std::uint16_t> mult_;
  std::vector<std::uint16_t> inv_;
  std::string name_;
};

struct ClassData {
  std::vector<std::vector<std::size_t>> classes;  // partition, each sorted
  std::vector<std::size_t> class_of;              // element -> class index
  std::vector<std::size_t> representatives;       // smallest element index
  std::vector<std::size_t> sizes;
  std::vector<std::size_t> squaring_map;  // class of g^2, verified well-defined
  std::vector<std::size_t> inverse_map;   // class of g^-1, an involution
  std::vector<std::size_t> element_orders;  // order of the elements in the class
};

ClassData conjugacy_data(const FiniteGroup& g);

// (M_i)_{jk} = #{x in C_i : x * rep_j lies in C_k}. These integer matrices
// commute pairwise and their simultaneous eigenvectors are the character
// columns; row sums equal |C_i|.
IntMatrix class_matrix(const FiniteGroup& g, const ClassData& d, std::size_t i);

// Parse {"permutations": [[...],...]} or {"table": [[...],...]} (0-based).
FiniteGroup group_from_json(const std::string& json_text, std::size_t bound = 5000);

namespace builtins {

FiniteGroup quaternion8();          // Q8 via its left regular permutation action
FiniteGroup dihedral8();            // symmetries of the square
FiniteGroup cyclic(std::size_t n);  // Z/n
FiniteGroup symmetric(std::size_t n);  // S_n, n <= 6

// Registry lookup: "Q8", "D8", "Z4" (any Zn), "S3".."S6". Throws FormatError
// for unknown names.
FiniteGroup group_by_name(const std::string& name);

}  // namespace builtins

}  // namespace realk
