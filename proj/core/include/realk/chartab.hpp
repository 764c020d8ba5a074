#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "realk/groups.hpp"

// Complex character tables via simultaneous diagonalization of the integer
// class matrices (a seeded random combination separates the eigenspaces),
// with hard post-verification: both orthogonality relations, integral
// dimensions, and a certified residual bound against the exact class
// matrices. Downstream consumers only ever need integers or conjugation
// pairings, so double precision plus verification is enough; exact cyclotomic
// arithmetic is deliberately out of scope.

namespace realk {

using Cplx = std::complex<double>;

struct CharacterTable {
  std::string group_name;
  std::uint64_t group_order = 0;
  std::vector<std::size_t> class_sizes;      // canonical class order, identity first
  std::vector<std::size_t> squaring_map;     // class of g^2, in table coordinates
  std::vector<std::size_t> element_orders;   // 0 when unknown (ingested tables)
  std::vector<long long> dims;               // row order: by dim, then value tuple
  std::vector<std::vector<Cplx>> values;     // irrep x class
  double certified_bound = 0.0;              // max residual vs the class matrices
  std::size_t identity_class = 0;

  std::size_t num_irreps() const { return dims.size(); }
  std::size_t num_classes() const { return class_sizes.size(); }
};

// Full table of G; deterministic (fixed seed schedule, canonical row and
// column order). Throws DegenerateEigenspaces if no seed separates the
// eigenvalues, TooLarge past the bound.
CharacterTable compute_character_table(const FiniteGroup& g, std::size_t order_bound = 2000);

// Parse and verify an externally supplied table:
// {"group_order": n, "class_sizes": [...], "squaring_map": [...],
//  "characters": [[[re,im],...],...]}.
// Every invariant is checked before acceptance (FormatError /
// OrthogonalityViolation).
CharacterTable ingest_character_table(const std::string& json_text);

std::string character_table_to_json(const CharacterTable& t);

// Max deviation from the two orthogonality relations (used by verification
// and by tests).
double row_orthogonality_residual(const CharacterTable& t);
double column_orthogonality_residual(const CharacterTable& t);

}  // namespace realk
