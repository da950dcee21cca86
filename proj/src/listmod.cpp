#include "bfp/listmod.hpp"

#include <algorithm>

#include "bfp/errors.hpp"

namespace bfp {

Matrix::Matrix(const Ring& ring, std::size_t rows, std::size_t cols)
    : ring_(ring), rows_(rows), cols_(cols), data_(rows * cols, Poly(ring)) {}

Matrix Matrix::identity(const Ring& ring, std::size_t n) {
  Matrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Poly::constant(ring, 1);
  return m;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Poly& f) { return f.is_zero(); });
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ValidationError("matrix shape mismatch");
  Matrix out(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += o.data_[i];
  return out;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw ValidationError("matrix shape mismatch");
  Matrix out(ring_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Poly& a = at(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Poly& b = o.at(k, j);
        if (!b.is_zero()) out.at(i, j) += a * b;
      }
    }
  return out;
}

bool Matrix::operator==(const Matrix& o) const {
  return ring_ == o.ring_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

std::string Matrix::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i != 0) out += ", ";
    out += "[";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j != 0) out += ", ";
      out += at(i, j).to_string();
    }
    out += "]";
  }
  return out + "]";
}

Matrix frobenius_power(const Matrix& a, std::uint64_t e, const CharConfig& cfg) {
  return a.map(a.ring(), [&](const Poly& f) { return frobenius_power(f, e, cfg); });
}

Integer extra_degree(const Matrix& a) {
  if (a.ring().extra == Extra::none) throw ValidationError("matrix has no distinguished variable");
  Integer d = 0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) d = std::max(d, a.at(i, j).degree_in(a.ring().num_vars));
  return d;
}

Matrix MatrixList::at(const Integer& k, std::size_t n) const {
  auto it = entries.find({k, n});
  if (it == entries.end()) return Matrix(ring, rank, rank);
  return it->second;
}

void MatrixList::set(const Integer& k, std::size_t n, Matrix m) {
  if (m.rows() != rank || m.cols() != rank) throw ValidationError("list matrix has the wrong shape");
  if (!(m.ring() == ring)) throw ValidationError("list matrix lives in a different ring");
  if (k < 0) throw ValidationError("list index k must be non-negative");
  if (m.is_zero())
    entries.erase({k, n});
  else
    entries.insert_or_assign({k, n}, std::move(m));
}

namespace {

// Splits the last exponent of every term of f by base: v = base*k + n.
// Returns (n, k) -> coefficient polynomial in target (pure ring, no slot).
std::map<std::pair<Integer, Integer>, Poly> split_extra(const Poly& f, const Integer& base, const Ring& target) {
  std::map<std::pair<Integer, Integer>, std::vector<Term>> buckets;
  const std::size_t nv = target.num_vars;
  for (const auto& t : f.terms()) {
    std::vector<Integer> ex(t.mono.exponents().begin(), t.mono.exponents().begin() + static_cast<std::ptrdiff_t>(nv));
    Integer k, n;
    divide_qr(t.mono[nv], base, k, n);
    buckets[{n, k}].push_back(Term{Monomial(std::move(ex)), t.coeff});
  }
  std::map<std::pair<Integer, Integer>, Poly> out;
  for (auto& [key, terms] : buckets) out.emplace(key, Poly::from_terms(target, std::move(terms)));
  return out;
}

// c * x^w * v^power in a ring with a distinguished variable.
Poly lift(const Poly& c, const Ring& target, const Integer& power) {
  std::vector<Term> terms;
  for (const auto& t : c.terms()) {
    std::vector<Integer> ex = t.mono.exponents();
    ex.resize(target.num_vars);
    ex.push_back(power);
    terms.push_back(Term{Monomial(std::move(ex)), t.coeff});
  }
  return Poly::from_terms(target, std::move(terms));
}

void check_tmatrix(const TMatrix& a, const CharConfig& cfg) {
  if (a.ring().extra != Extra::t) throw ValidationError("generating matrix must live over R[t]");
  if (a.ring().p != cfg.p()) throw ValidationError("matrix characteristic does not match configuration");
  if (a.rows() != a.cols()) throw ValidationError("generating matrix must be square");
}

}  // namespace

TMatrix assemble_A(const MatrixList& list, const CharConfig& cfg) {
  const Ring tr = list.ring.with_extra(Extra::t);
  TMatrix out(tr, list.rank, list.rank);
  for (const auto& [key, m] : list.entries) {
    const Integer power = key.first * cfg.q() + key.second;
    out = out + m.map(tr, [&](const Poly& f) { return lift(f, tr, power); });
  }
  return out;
}

MatrixList decompose_A(const TMatrix& a, const CharConfig& cfg) {
  check_tmatrix(a, cfg);
  const Ring base = a.ring().with_extra(Extra::none);
  MatrixList list(base, a.rows());
  std::map<std::pair<Integer, std::size_t>, Matrix> acc;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (auto& [key, c] : split_extra(a.at(i, j), cfg.q(), base)) {
        const std::pair<Integer, std::size_t> kn{key.second, static_cast<std::size_t>(key.first)};
        auto it = acc.find(kn);
        if (it == acc.end()) it = acc.emplace(kn, Matrix(base, a.rows(), a.cols())).first;
        it->second.at(i, j) = c;
      }
  for (auto& [kn, m] : acc) list.set(kn.first, kn.second, std::move(m));
  return list;
}

Matrix HFamily::at(const Integer& n) const {
  auto it = table.find(n);
  if (it == table.end()) return Matrix(tau_ring, rank, rank);
  return it->second;
}

HFamily h_expand(const TMatrix& a, unsigned e, const CharConfig& cfg) {
  check_tmatrix(a, cfg);
  if (e < 1) throw ValidationError("h_expand needs e >= 1");
  const Ring base = a.ring().with_extra(Extra::none);
  const Ring tau = a.ring().with_extra(Extra::tau);
  TMatrix prod = a;
  for (unsigned i = 1; i < e; ++i) prod = frobenius_power(a, i, cfg) * prod;

  HFamily h;
  h.e = e;
  h.rank = a.rows();
  h.tau_ring = tau;
  h.tau_bound = extra_degree(a) / (cfg.q() - 1);
  const Integer Q = cfg.q_pow(e);
  for (std::size_t i = 0; i < prod.rows(); ++i)
    for (std::size_t j = 0; j < prod.cols(); ++j)
      for (auto& [key, c] : split_extra(prod.at(i, j), Q, base)) {
        auto it = h.table.find(key.first);
        if (it == h.table.end()) it = h.table.emplace(key.first, Matrix(tau, h.rank, h.rank)).first;
        it->second.at(i, j) += lift(c, tau, key.second);
      }
  for (const auto& [n, m] : h.table)
    if (extra_degree(m) > h.tau_bound)
      throw InternalError("tau-degree bound violated in H^" + std::to_string(e) + "_" + n.str());
  if (!(reassemble(h, cfg) == prod)) throw InternalError("H expansion does not reassemble A^(e-1)");
  return h;
}

TMatrix reassemble(const HFamily& h, const CharConfig& cfg) {
  const Ring tr = h.tau_ring.with_extra(Extra::t);
  const Integer Q = cfg.q_pow(h.e);
  TMatrix out(tr, h.rank, h.rank);
  for (const auto& [n, m] : h.table) {
    out = out + m.map(tr, [&](const Poly& f) {
      std::vector<Term> terms;
      for (const auto& t : f.terms()) {
        std::vector<Integer> ex = t.mono.exponents();
        ex.back() = ex.back() * Q + n;
        terms.push_back(Term{Monomial(std::move(ex)), t.coeff});
      }
      return Poly::from_terms(tr, std::move(terms));
    });
  }
  return out;
}

std::vector<VectorR> flatten_columns(const Matrix& h, const Ring& base, const Integer& tau_bound) {
  const std::size_t l = h.rows();
  const std::size_t slots = static_cast<std::size_t>(tau_bound) + 1;
  std::vector<VectorR> out;
  for (std::size_t j = 0; j < h.cols(); ++j) {
    VectorR v = zero_vector(base, l * slots);
    for (std::size_t i = 0; i < l; ++i)
      for (auto& [key, c] : split_extra(h.at(i, j), tau_bound + 1, base)) {
        if (key.second != 0) throw InternalError("tau power above the bound while flattening");
        const Integer& k = key.first;
        v[static_cast<std::size_t>(k) * l + i] += c;
      }
    out.push_back(std::move(v));
  }
  return out;
}

std::size_t list_ambient_rank(const MatrixList& list, const CharConfig& cfg) {
  const Integer n = extra_degree(assemble_A(list, cfg)) / (cfg.q() - 1);
  return list.rank * (static_cast<std::size_t>(n) + 1);
}

namespace {

struct ListScanner {
  const MatrixList& list;
  const CharConfig& cfg;
  unsigned e;
  HFamily h;
  std::size_t ambient;

  ListScanner(const MatrixList& l, unsigned level, const CharConfig& c)
      : list(l), cfg(c), e(level), h(h_expand(assemble_A(l, c), level + 1, c)) {
    ambient = list.rank * (static_cast<std::size_t>(h.tau_bound) + 1);
  }

  Submodule image_root(const Matrix& hn) const {
    return Submodule(list.ring, ambient, root_vectors(flatten_columns(hn, list.ring, h.tau_bound), e + 1, cfg));
  }
};

Integer grid_index(const Rational& lambda, unsigned e, const CharConfig& cfg) {
  if (lambda <= 0 || lambda > 1) throw ValidationError("lambda must lie in (0, 1]");
  return ceil(lambda * cfg.q_pow(e + 1));
}

}  // namespace

Submodule list_test_module(const MatrixList& list, const Rational& lambda, unsigned e, const CharConfig& cfg) {
  const Integer m = grid_index(lambda, e, cfg);
  ListScanner sc(list, e, cfg);
  ModuleAccumulator acc(list.ring, sc.ambient);
  for (const auto& [n, hn] : sc.h.table) {
    if (n + 1 > m) break;
    acc.add(sc.image_root(hn));
  }
  return acc.value();
}

Submodule list_test_module(const MatrixList& list, const GridRational& lambda, unsigned e, const CharConfig& cfg) {
  return list_test_module(list, lambda.value(), e, cfg);
}

std::vector<Submodule> list_test_scan(const MatrixList& list, unsigned e, const CharConfig& cfg) {
  ListScanner sc(list, e, cfg);
  const std::size_t Q = static_cast<std::size_t>(cfg.q_pow(e + 1));
  std::vector<Submodule> out;
  out.reserve(Q);
  ModuleAccumulator acc(list.ring, sc.ambient);
  for (std::size_t m = 1; m <= Q; ++m) {
    auto it = sc.h.table.find(Integer(m - 1));
    if (it != sc.h.table.end()) acc.add(sc.image_root(it->second));
    out.push_back(acc.value());
  }
  return out;
}

SeReport s_set(const MatrixList& list, unsigned e, const CharConfig& cfg) {
  ListScanner sc(list, e, cfg);
  SeReport rep;
  rep.e = e;
  ModuleAccumulator acc(list.ring, sc.ambient);
  // H_n with n = m - 1 enters at grid point m; zero matrices change nothing.
  for (const auto& [n, hn] : sc.h.table) {
    if (acc.add(sc.image_root(hn))) {
      const Integer m = n + 1;
      if (m >= 2) rep.jumps.push_back(GridRational{n, e, cfg.q()});
      rep.chain.emplace_back(GridRational{m, e, cfg.q()}, acc.value());
    }
  }
  return rep;
}

EstimateReport estimate_jumping_numbers(const MatrixList& list, const CharConfig& cfg, unsigned e_max) {
  if (e_max < 2) throw ValidationError("e_max must be at least 2");
  EstimateReport rep;
  rep.window = std::max(1U, e_max / 2);
  rep.slack = ipow(cfg.q(), rep.window);
  std::vector<std::vector<GridRational>> levels;
  for (unsigned e = 0; e <= e_max; ++e) {
    rep.s_sets.push_back(s_set(list, e, cfg));
    levels.push_back(rep.s_sets.back().jumps);
  }
  Estimate est = estimate_from_levels(levels, cfg, rep.window, rep.slack);
  rep.jumps = std::move(est.jumps);
  rep.unresolved = std::move(est.unresolved);
  return rep;
}

}  // namespace bfp
