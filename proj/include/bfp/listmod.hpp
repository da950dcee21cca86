#pragma once

// Matrix lists {A_{k,n}}, the generating matrix A(t), its H^e_n(tau)
// expansion, list test modules and their jump sets.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bfp/modgb.hpp"
#include "bfp/snapping.hpp"
#include "bfp/testideal.hpp"

namespace bfp {

/// Dense matrix of polynomials over one ring.
class Matrix {
 public:
  Matrix(const Ring& ring, std::size_t rows, std::size_t cols);
  static Matrix identity(const Ring& ring, std::size_t n);

  const Ring& ring() const noexcept { return ring_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Poly& at(std::size_t i, std::size_t j) { return data_.at(i * cols_ + j); }
  const Poly& at(std::size_t i, std::size_t j) const { return data_.at(i * cols_ + j); }

  bool is_zero() const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  bool operator==(const Matrix& o) const;
  /// Entrywise map.
  template <class F>
  Matrix map(const Ring& target, F&& fn) const {
    Matrix out(target, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = fn(data_[i]);
    return out;
  }
  std::string to_string() const;

 private:
  Ring ring_;
  std::size_t rows_, cols_;
  std::vector<Poly> data_;
};

/// l x l matrix over R[t].
using TMatrix = Matrix;

/// Entrywise q^e-th power, the distinguished variable included.
Matrix frobenius_power(const Matrix& a, std::uint64_t e, const CharConfig& cfg);

/// Largest exponent of the distinguished variable over all entries; 0 for zero.
Integer extra_degree(const Matrix& a);

struct MatrixList {
  Ring ring;         // the pure ring R
  std::size_t rank;  // l
  std::map<std::pair<Integer, std::size_t>, Matrix> entries;  // (k, n) -> A_{k,n}

  MatrixList(const Ring& r, std::size_t l) : ring(r), rank(l) {}
  /// A_{k,n}; absent indices read as zero.
  Matrix at(const Integer& k, std::size_t n) const;
  void set(const Integer& k, std::size_t n, Matrix m);
};

struct HFamily {
  unsigned e = 0;
  std::size_t rank = 0;
  Integer tau_bound;                // floor(d / (q - 1))
  std::map<Integer, Matrix> table;  // nonzero H^e_n over R[tau], keyed by n
  Ring tau_ring;

  /// H^e_n; zero when absent.
  Matrix at(const Integer& n) const;
};

/// A(t) = sum A_{k,n} t^(kq + n).
TMatrix assemble_A(const MatrixList& list, const CharConfig& cfg);
MatrixList decompose_A(const TMatrix& a, const CharConfig& cfg);

/// The product A^[q^(e-1)] ... A^[q] A split as sum_n H^e_n(t^(q^e)) t^n.
HFamily h_expand(const TMatrix& a, unsigned e, const CharConfig& cfg);

/// Assembles sum_n H_n(t^(q^e)) t^n over R[t].
TMatrix reassemble(const HFamily& h, const CharConfig& cfg);

/// Flattens the columns of a matrix over R[tau] into R^(l(N+1)), index k*l + i.
std::vector<VectorR> flatten_columns(const Matrix& h, const Ring& base, const Integer& tau_bound);

/// Ambient rank l(N+1) of the list test modules.
std::size_t list_ambient_rank(const MatrixList& list, const CharConfig& cfg);

Submodule list_test_module(const MatrixList& list, const Rational& lambda, unsigned e, const CharConfig& cfg);
Submodule list_test_module(const MatrixList& list, const GridRational& lambda, unsigned e, const CharConfig& cfg);

/// Cumulative list test modules at m/q^(e+1), m = 1..q^(e+1).
std::vector<Submodule> list_test_scan(const MatrixList& list, unsigned e, const CharConfig& cfg);

SeReport s_set(const MatrixList& list, unsigned e, const CharConfig& cfg);

struct EstimateReport {
  std::vector<SnappedJump> jumps;
  std::vector<Chain> unresolved;
  std::vector<SeReport> s_sets;  // e = 0..e_max
  unsigned window = 1;
  Integer slack = 1;
};

EstimateReport estimate_jumping_numbers(const MatrixList& list, const CharConfig& cfg, unsigned e_max);

}  // namespace bfp
