#include "realk/intlinalg.hpp"

#include <algorithm>
#include <sstream>

namespace realk {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<Int>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  a_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error("IntMatrix: ragged initializer");
    for (const auto& x : r) a_.push_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw Error("IntMatrix: size mismatch in product");
  IntMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& x = at(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += x * o.at(k, j);
    }
  return r;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("IntMatrix: size mismatch in sum");
  IntMatrix r = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
  return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("IntMatrix: size mismatch in difference");
  IntMatrix r = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
  return r;
}

bool IntMatrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Int& x) { return x == 0; });
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j);
  }
  os << "]";
  return os.str();
}

FgAbGroup::FgAbGroup(std::size_t free_rank, std::vector<Int> invariant_factors)
    : free_rank_(free_rank), factors_(std::move(invariant_factors)) {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i] < 2) throw Error("FgAbGroup: invariant factor < 2");
    if (i && factors_[i] % factors_[i - 1] != 0)
      throw Error("FgAbGroup: divisor chain violated");
  }
}

FgAbGroup FgAbGroup::cyclic(const Int& n) {
  if (n == 0) return free_of_rank(1);
  Int a = abs(n);
  if (a == 1) return trivial();
  return FgAbGroup(0, {a});
}

Int FgAbGroup::torsion_order() const {
  Int o = 1;
  for (const auto& d : factors_) o *= d;
  return o;
}

bool FgAbGroup::exponent_divides(const Int& n) const {
  if (free_rank_ > 0) return false;
  for (const auto& d : factors_)
    if (n % d != 0) return false;
  return true;
}

FgAbGroup FgAbGroup::direct_sum(const FgAbGroup& o) const {
  std::map<Int, unsigned> primary;
  auto absorb = [&primary](const std::vector<Int>& fs) {
    for (const auto& d : fs)
      for (const auto& [p, e] : factor_integer(d)) {
        Int pk = 1;
        for (unsigned i = 0; i < e; ++i) pk *= p;
        primary[pk] += 1;
      }
  };
  absorb(factors_);
  absorb(o.factors_);
  return FgAbGroup(free_rank_ + o.free_rank_, invariant_factors_from_primary(primary));
}

std::string FgAbGroup::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  auto sep = [&] {
    if (!first) os << " + ";
    first = false;
  };
  if (free_rank_ == 1) { sep(); os << "Z"; }
  else if (free_rank_ > 1) { sep(); os << "Z^" << free_rank_; }
  for (std::size_t i = 0; i < factors_.size();) {
    std::size_t j = i;
    while (j < factors_.size() && factors_[j] == factors_[i]) ++j;
    sep();
    if (j - i == 1) os << "Z/" << factors_[i];
    else os << "(Z/" << factors_[i] << ")^" << (j - i);
    i = j;
  }
  return os.str();
}

namespace {

struct SnfWork {
  IntMatrix a, p, q;

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < a.cols(); ++k) std::swap(a.at(i, k), a.at(j, k));
    for (std::size_t k = 0; k < p.cols(); ++k) std::swap(p.at(i, k), p.at(j, k));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < a.rows(); ++k) std::swap(a.at(k, i), a.at(k, j));
    for (std::size_t k = 0; k < q.rows(); ++k) std::swap(q.at(k, i), q.at(k, j));
  }
  // row_i -= f * row_j
  void add_row(std::size_t i, std::size_t j, const Int& f) {
    if (f == 0) return;
    for (std::size_t k = 0; k < a.cols(); ++k) a.at(i, k) -= f * a.at(j, k);
    for (std::size_t k = 0; k < p.cols(); ++k) p.at(i, k) -= f * p.at(j, k);
  }
  // col_i -= f * col_j
  void add_col(std::size_t i, std::size_t j, const Int& f) {
    if (f == 0) return;
    for (std::size_t k = 0; k < a.rows(); ++k) a.at(k, i) -= f * a.at(k, j);
    for (std::size_t k = 0; k < q.rows(); ++k) q.at(k, i) -= f * q.at(k, j);
  }
  void negate_row(std::size_t i) {
    for (std::size_t k = 0; k < a.cols(); ++k) a.at(i, k) = -a.at(i, k);
    for (std::size_t k = 0; k < p.cols(); ++k) p.at(i, k) = -p.at(i, k);
  }
};

// Pivot choice: smallest nonzero |entry| in the trailing submatrix, ties
// broken by (row, col) position, so results are reproducible.
bool find_pivot(const IntMatrix& a, std::size_t t, std::size_t& pi, std::size_t& pj) {
  bool found = false;
  Int best;
  for (std::size_t i = t; i < a.rows(); ++i)
    for (std::size_t j = t; j < a.cols(); ++j) {
      const Int& x = a.at(i, j);
      if (x == 0) continue;
      Int ax = abs(x);
      if (!found || ax < best) {
        found = true;
        best = ax;
        pi = i;
        pj = j;
      }
    }
  return found;
}

}  // namespace

SmithResult smith_with_transforms(const IntMatrix& m) {
  SnfWork w{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
  const std::size_t nmin = std::min(m.rows(), m.cols());

  for (std::size_t t = 0; t < nmin; ++t) {
    std::size_t pi = t, pj = t;
    if (!find_pivot(w.a, t, pi, pj)) break;
    w.swap_rows(t, pi);
    w.swap_cols(t, pj);

    for (;;) {
      // Clear column t, re-pivoting on any nonzero remainder.
      bool dirty = true;
      while (dirty) {
        dirty = false;
        for (std::size_t i = t + 1; i < w.a.rows(); ++i) {
          if (w.a.at(i, t) == 0) continue;
          Int f = w.a.at(i, t) / w.a.at(t, t);
          w.add_row(i, t, f);
          if (w.a.at(i, t) != 0) {  // remainder becomes the smaller pivot
            w.swap_rows(t, i);
            dirty = true;
          }
        }
        for (std::size_t j = t + 1; j < w.a.cols(); ++j) {
          if (w.a.at(t, j) == 0) continue;
          Int f = w.a.at(t, j) / w.a.at(t, t);
          w.add_col(j, t, f);
          if (w.a.at(t, j) != 0) {
            w.swap_cols(t, j);
            dirty = true;
          }
        }
      }
      // Divisibility fix: the pivot must divide the trailing submatrix.
      bool fixed = true;
      for (std::size_t i = t + 1; i < w.a.rows() && fixed; ++i)
        for (std::size_t j = t + 1; j < w.a.cols() && fixed; ++j)
          if (w.a.at(i, j) % w.a.at(t, t) != 0) {
            w.add_row(t, i, Int(-1));  // row_t += row_i, then re-clear
            fixed = false;
          }
      if (fixed) break;
    }
    if (w.a.at(t, t) < 0) w.negate_row(t);
  }

  SmithResult r;
  for (std::size_t t = 0; t < nmin; ++t)
    if (w.a.at(t, t) != 0) r.divisors.push_back(w.a.at(t, t));
  r.rank = r.divisors.size();
  r.row_ops = std::move(w.p);
  r.col_ops = std::move(w.q);
  return r;
}

std::vector<Int> smith_normal_form(const IntMatrix& m) {
  return smith_with_transforms(m).divisors;
}

std::size_t rank(const IntMatrix& m) { return smith_with_transforms(m).rank; }

FgAbGroup cokernel(const IntMatrix& m) {
  SmithResult s = smith_with_transforms(m);
  std::vector<Int> factors;
  for (const auto& d : s.divisors)
    if (d > 1) factors.push_back(d);
  return FgAbGroup(m.rows() - s.rank, std::move(factors));
}

IntMatrix kernel_basis(const IntMatrix& m) {
  SmithResult s = smith_with_transforms(m);
  // M * Q has zero columns past the rank; those columns of Q span ker M.
  IntMatrix k(m.cols(), m.cols() - s.rank);
  for (std::size_t j = s.rank; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.cols(); ++i)
      k.at(i, j - s.rank) = s.col_ops.at(i, j);
  return k;
}

FgAbGroup subquotient(const IntMatrix& ker_of, const IntMatrix& im_of) {
  if (ker_of.cols() != im_of.rows())
    throw ContainmentViolation("subquotient: ambient dimensions differ");
  IntMatrix k = kernel_basis(ker_of);

  // Solve K X = B exactly; solvability is the containment check.
  SmithResult s = smith_with_transforms(k);
  IntMatrix c = s.row_ops * im_of;
  for (std::size_t i = s.rank; i < c.rows(); ++i)
    for (std::size_t j = 0; j < c.cols(); ++j)
      if (c.at(i, j) != 0)
        throw ContainmentViolation("subquotient: image not contained in kernel");
  IntMatrix y(k.cols(), im_of.cols());
  for (std::size_t i = 0; i < s.rank; ++i)
    for (std::size_t j = 0; j < c.cols(); ++j) {
      if (c.at(i, j) % s.divisors[i] != 0)
        throw ContainmentViolation("subquotient: image not contained in kernel");
      y.at(i, j) = c.at(i, j) / s.divisors[i];
    }
  // Y differs from X by a unimodular change of kernel basis, which does not
  // change the cokernel.
  return cokernel(y);
}

std::size_t rank_mod2(const IntMatrix& m) {
  std::vector<std::vector<bool>> rows(m.rows(), std::vector<bool>(m.cols(), false));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = (m.at(i, j) % 2) != 0;
  std::size_t r = 0;
  for (std::size_t j = 0; j < m.cols() && r < m.rows(); ++j) {
    std::size_t piv = r;
    while (piv < m.rows() && !rows[piv][j]) ++piv;
    if (piv == m.rows()) continue;
    std::swap(rows[r], rows[piv]);
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (i != r && rows[i][j])
        for (std::size_t k = j; k < m.cols(); ++k)
          rows[i][k] = rows[i][k] != rows[r][k];
    ++r;
  }
  return r;
}

Int abs_det(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw Error("abs_det: matrix not square");
  SmithResult s = smith_with_transforms(m);
  if (s.rank < m.rows()) return 0;
  Int d = 1;
  for (const auto& x : s.divisors) d *= x;
  return d;
}

std::map<Int, unsigned> factor_integer(const Int& n) {
  if (n < 2) throw Error("factor_integer: input < 2");
  std::map<Int, unsigned> f;
  Int m = n;
  for (Int p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
    while (m % p == 0) {
      f[p] += 1;
      m /= p;
    }
  }
  if (m > 1) f[m] += 1;
  return f;
}

std::vector<Int> invariant_factors_from_primary(const std::map<Int, unsigned>& primary) {
  // Group prime powers by prime, sort each list descending, then the k-th
  // invariant factor (from the top) is the product of the k-th largest powers.
  std::map<Int, std::vector<Int>> by_prime;
  for (const auto& [pk, mult] : primary) {
    Int p = factor_integer(pk).begin()->first;
    for (unsigned i = 0; i < mult; ++i) by_prime[p].push_back(pk);
  }
  std::size_t chain_len = 0;
  for (auto& [p, v] : by_prime) {
    std::sort(v.begin(), v.end(), std::greater<Int>());
    chain_len = std::max(chain_len, v.size());
  }
  std::vector<Int> chain(chain_len, Int(1));
  for (auto& [p, v] : by_prime)
    for (std::size_t i = 0; i < v.size(); ++i) chain[i] *= v[i];
  std::reverse(chain.begin(), chain.end());
  return chain;
}

}  // namespace realk
