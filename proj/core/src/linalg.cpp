#include "aslab/linalg.hpp"

#include <algorithm>

#include "echelon.hpp"

namespace aslab {

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_->zero()) {}

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols, std::vector<Value> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) throw PreconditionError("matrix entry count does not match its shape");
}

Matrix Matrix::identity(Field field, std::size_t n) {
  const Value one = field->one();
  return scalar(std::move(field), n, one);
}

Matrix Matrix::scalar(Field field, std::size_t n, const Value& c) {
  Matrix m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = c;
  return m;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [&](const Value& v) { return field_->is_zero(v); });
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::scaled(const Value& c) const {
  Matrix r = *this;
  for (auto& v : r.data_) v = field_->mul(v, c);
  return r;
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw PreconditionError("matrix-vector size mismatch");
  Vector out(rows_, field_->zero());
  for (std::size_t i = 0; i < rows_; ++i) {
    Value acc = field_->zero();
    for (std::size_t j = 0; j < cols_; ++j) {
      const Value& a = (*this)(i, j);
      if (field_->is_zero(a) || field_->is_zero(v[j])) continue;
      acc = field_->add(acc, field_->mul(a, v[j]));
    }
    out[i] = std::move(acc);
  }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_same_field(a.field_, b.field_, "matrix addition");
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw PreconditionError("matrix addition shape mismatch");
  Matrix r = a;
  for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] = a.field_->add(a.data_[i], b.data_[i]);
  return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  require_same_field(a.field_, b.field_, "matrix subtraction");
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw PreconditionError("matrix subtraction shape mismatch");
  Matrix r = a;
  for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] = a.field_->sub(a.data_[i], b.data_[i]);
  return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_same_field(a.field_, b.field_, "matrix multiplication");
  if (a.cols_ != b.rows_) throw PreconditionError("matrix multiplication shape mismatch");
  const auto& F = *a.field_;
  Matrix r(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Value& x = a(i, k);
      if (F.is_zero(x)) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Value& y = b(k, j);
        if (F.is_zero(y)) continue;
        r(i, j) = F.add(r(i, j), F.mul(x, y));
      }
    }
  return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return same_field(a.field_, b.field_) && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

void check_size_cap(const Matrix& m) {
  const std::size_t cap = m.field()->is_finite() ? kMaxFiniteMatrixDim : kMaxRationalMatrixDim;
  if (m.rows() > cap || m.cols() > cap)
    throw CapExceeded("matrix dimension " + std::to_string(std::max(m.rows(), m.cols())) + " exceeds the cap " +
                      std::to_string(cap) + " for " + m.field()->spec());
}

namespace {

void require_square(const Matrix& m, const char* where) {
  if (!m.is_square()) throw PreconditionError(std::string(where) + " needs a square matrix");
}

}  // namespace

Matrix companion(const Poly& f) {
  if (!f.degree() || *f.degree() < 1 || !f.is_monic())
    throw PreconditionError("companion needs a monic polynomial of degree >= 1");
  const std::size_t m = *f.degree();
  Matrix c(f.field(), m, m);
  for (std::size_t i = 1; i < m; ++i) c(i, i - 1) = f.field()->one();
  for (std::size_t i = 0; i < m; ++i) c(i, m - 1) = f.field()->neg(f.coeffs()[i]);
  return c;
}

Matrix jordan_block(const Field& field, const Value& alpha, std::size_t n) {
  if (n == 0) throw PreconditionError("Jordan block of size 0");
  Matrix j(field, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    j(i, i) = alpha;
    if (i + 1 < n) j(i, i + 1) = field->one();
  }
  return j;
}

Matrix pascal_matrix(const Field& field, const Value& b, std::size_t m) {
  const std::uint32_t p = field->characteristic();
  // Pascal triangle mod p.
  std::vector<std::vector<std::uint32_t>> binom(m, std::vector<std::uint32_t>(m, 0));
  for (std::size_t r = 0; r < m; ++r) {
    binom[r][0] = 1 % p;
    for (std::size_t c = 1; c <= r; ++c) binom[r][c] = (binom[r - 1][c - 1] + binom[r - 1][c]) % p;
  }
  Matrix s(field, m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j)
      s(i, j) = field->mul(field->from_int(binom[j][i]), field->pow(b, j - i));
  return s;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
  require_same_field(a.field(), b.field(), "kronecker");
  const auto& F = *a.field();
  Matrix r(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (F.is_zero(a(i, j))) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) r(i * b.rows() + k, j * b.cols() + l) = F.mul(a(i, j), b(k, l));
    }
  return r;
}

Matrix direct_sum(const std::vector<Matrix>& blocks) {
  if (blocks.empty()) throw PreconditionError("direct sum of no blocks");
  std::size_t rows = 0, cols = 0;
  for (const auto& b : blocks) {
    require_same_field(blocks[0].field(), b.field(), "direct_sum");
    rows += b.rows();
    cols += b.cols();
  }
  Matrix r(blocks[0].field(), rows, cols);
  std::size_t r0 = 0, c0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) r(r0 + i, c0 + j) = b(i, j);
    r0 += b.rows();
    c0 += b.cols();
  }
  return r;
}

Matrix ad_matrix(const Matrix& a) {
  require_square(a, "ad_matrix");
  const std::size_t m = a.rows();
  const auto& F = *a.field();
  Matrix r(a.field(), m * m, m * m);
  check_size_cap(r);
  // ad[(i,j),(k,l)] = A_ik [j == l] - [i == k] A_lj
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) {
        Value& left = r(i * m + j, k * m + j);
        left = F.add(left, a(i, k));
        Value& right = r(i * m + j, i * m + k);
        right = F.sub(right, a(k, j));
      }
  return r;
}

Matrix pow(const Matrix& m, std::uint64_t k) {
  require_square(m, "matrix power");
  Matrix result = Matrix::identity(m.field(), m.rows());
  Matrix base = m;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

Matrix evaluate(const Poly& f, const Matrix& m) {
  require_square(m, "polynomial evaluation");
  require_same_field(f.field(), m.field(), "polynomial evaluation");
  Matrix acc(m.field(), m.rows(), m.cols());
  for (std::size_t i = f.coeffs().size(); i-- > 0;)
    acc = acc * m + Matrix::scalar(m.field(), m.rows(), f.coeffs()[i]);
  return acc;
}

std::size_t rank(const Matrix& m) {
  detail::SemiEchelon ech(*m.field(), m.cols(), false);
  for (std::size_t i = 0; i < m.rows() && ech.rank() < m.cols(); ++i)
    ech.insert(Vector(m.entries().begin() + static_cast<std::ptrdiff_t>(i * m.cols()),
                      m.entries().begin() + static_cast<std::ptrdiff_t>((i + 1) * m.cols())));
  return ech.rank();
}

RowEchelon rref(const Matrix& m) {
  const auto& F = *m.field();
  Matrix r = m;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < r.cols() && row < r.rows(); ++col) {
    std::size_t sel = row;
    while (sel < r.rows() && F.is_zero(r(sel, col))) ++sel;
    if (sel == r.rows()) continue;
    if (sel != row)
      for (std::size_t j = 0; j < r.cols(); ++j) std::swap(r(sel, j), r(row, j));
    const Value inv = F.inv(r(row, col));
    for (std::size_t j = col; j < r.cols(); ++j) r(row, j) = F.mul(r(row, j), inv);
    for (std::size_t i = 0; i < r.rows(); ++i) {
      if (i == row || F.is_zero(r(i, col))) continue;
      const Value factor = r(i, col);
      for (std::size_t j = col; j < r.cols(); ++j)
        if (!F.is_zero(r(row, j))) r(i, j) = F.sub(r(i, j), F.mul(factor, r(row, j)));
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(r), std::move(pivots)};
}

std::vector<Vector> kernel(const Matrix& m) {
  const auto& F = *m.field();
  const auto [r, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols(), F.zero());
    v[free] = F.one();
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = F.neg(r(k, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Vector> eigenspace(const Matrix& m, const Value& lambda) {
  require_square(m, "eigenspace");
  return kernel(m - Matrix::scalar(m.field(), m.rows(), lambda));
}

bool is_invertible(const Matrix& m) { return m.is_square() && rank(m) == m.rows(); }

Matrix inverse(const Matrix& m) {
  require_square(m, "inverse");
  const std::size_t n = m.rows();
  Matrix aug(m.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = m.field()->one();
  }
  const auto [r, pivots] = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw PreconditionError("matrix is singular");
  Matrix inv(m.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r(i, n + j);
  return inv;
}

// ---------------------------------------------------------------------------
// Normal forms over F[X]

InvariantFactorList smith_invariant_factors(PolyMatrix a) {
  const std::size_t k = a.size();
  for (const auto& row : a)
    if (row.size() != k) throw PreconditionError("smith form needs a square polynomial matrix");
  std::vector<Poly> diag;
  for (std::size_t t = 0; t < k; ++t) {
    for (;;) {
      // Minimal-degree pivot; leftmost column first, then topmost row.
      std::size_t pr = k, pc = k, best = 0;
      for (std::size_t j = t; j < k; ++j)
        for (std::size_t i = t; i < k; ++i) {
          if (a[i][j].is_zero()) continue;
          const std::size_t d = *a[i][j].degree();
          if (pr == k || d < best) {
            pr = i;
            pc = j;
            best = d;
          }
        }
      if (pr == k) break;
      std::swap(a[t], a[pr]);
      for (auto& row : a) std::swap(row[t], row[pc]);

      bool clean = true;
      const Poly& pivot = a[t][t];
      for (std::size_t i = t + 1; i < k; ++i) {
        if (a[i][t].is_zero()) continue;
        const Poly q = divmod(a[i][t], pivot).quotient;
        for (std::size_t j = t; j < k; ++j)
          if (!a[t][j].is_zero()) a[i][j] = a[i][j] - q * a[t][j];
        if (!a[i][t].is_zero()) clean = false;
      }
      for (std::size_t j = t + 1; j < k; ++j) {
        if (a[t][j].is_zero()) continue;
        const Poly q = divmod(a[t][j], pivot).quotient;
        for (std::size_t i = t; i < k; ++i)
          if (!a[i][t].is_zero()) a[i][j] = a[i][j] - q * a[i][t];
        if (!a[t][j].is_zero()) clean = false;
      }
      if (!clean) continue;
      // The pivot must divide the remaining block.
      bool divides = true;
      for (std::size_t i = t + 1; i < k && divides; ++i)
        for (std::size_t j = t + 1; j < k; ++j) {
          if (a[i][j].is_zero() || (a[i][j] % pivot).is_zero()) continue;
          for (std::size_t c = t; c < k; ++c) a[t][c] = a[t][c] + a[i][c];
          divides = false;
          break;
        }
      if (divides) break;
    }
    if (a[t][t].is_zero()) break;
    diag.push_back(a[t][t].monic());
  }
  InvariantFactorList out;
  for (auto& d : diag)
    if (*d.degree() >= 1) out.factors.push_back(std::move(d));
  std::stable_sort(out.factors.begin(), out.factors.end(),
                   [](const Poly& x, const Poly& y) { return *x.degree() < *y.degree(); });
  return out;
}

PolyMatrix characteristic_matrix(const Matrix& m) {
  require_square(m, "characteristic_matrix");
  const auto& F = m.field();
  PolyMatrix c(m.rows(), std::vector<Poly>(m.cols(), Poly(F)));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      c[i][j] = Poly::constant(F, F->neg(m(i, j)));
      if (i == j) c[i][j] = c[i][j] + Poly::x(F);
    }
  return c;
}

InvariantFactorList invariant_factors(const Matrix& m) {
  require_square(m, "invariant_factors");
  check_size_cap(m);
  const auto& Fp = m.field();
  const auto& F = *Fp;
  const std::size_t n = m.rows();
  if (n == 0) return {};

  // Cyclic flag: w_i, M w_i, ..., M^{d_i - 1} w_i with w_i the first standard
  // vector outside the span so far; M^{d_i} w_i = sum of tracked combinations.
  struct Block {
    std::size_t start;
    std::size_t size;
    std::vector<Value> relation;
  };
  std::vector<Block> blocks;
  detail::SemiEchelon ech(F, n, true);
  for (std::size_t j = 0; j < n && ech.rank() < n; ++j) {
    Vector v(n, F.zero());
    v[j] = F.one();
    if (ech.insert(v)) continue;
    const std::size_t start = ech.rank() - 1;
    for (;;) {
      Vector w = m.apply(v);
      auto dep = ech.insert(w);
      if (dep) {
        blocks.push_back({start, ech.rank() - start, std::move(*dep)});
        break;
      }
      v = std::move(w);
    }
  }

  const std::size_t k = blocks.size();
  PolyMatrix rel(k, std::vector<Poly>(k, Poly(Fp)));
  for (std::size_t i = 0; i < k; ++i) {
    const auto& c = blocks[i].relation;
    for (std::size_t j = 0; j <= i; ++j) {
      std::vector<Value> g(blocks[j].size, F.zero());
      for (std::size_t l = 0; l < blocks[j].size; ++l) g[l] = F.neg(c[blocks[j].start + l]);
      Poly entry(Fp, std::move(g));
      if (j == i) entry = entry + Poly::monomial(Fp, F.one(), blocks[i].size);
      rel[i][j] = std::move(entry);
    }
  }
  if (k == 1) return {{rel[0][0]}};
  return smith_invariant_factors(std::move(rel));
}

Poly minimal_polynomial(const Matrix& m) {
  auto f = invariant_factors(m).factors;
  if (f.empty()) return Poly::constant(m.field(), m.field()->one());
  return f.back();
}

Poly characteristic_polynomial(const Matrix& m) {
  Poly acc = Poly::constant(m.field(), m.field()->one());
  for (const auto& f : invariant_factors(m).factors) acc = acc * f;
  return acc;
}

bool similar(const Matrix& a, const Matrix& b) {
  require_square(a, "similar");
  require_square(b, "similar");
  require_same_field(a.field(), b.field(), "similar");
  if (a.rows() != b.rows()) throw PreconditionError("similar needs matrices of the same size");
  return invariant_factors(a) == invariant_factors(b);
}

std::vector<ElementaryDivisor> elementary_divisors(const InvariantFactorList& inv) {
  std::vector<ElementaryDivisor> out;
  for (const auto& f : inv.factors)
    for (const auto& [g, m] : factor_finite(f)) {
      Poly d = pow(g, m);
      auto it = std::find_if(out.begin(), out.end(), [&](const ElementaryDivisor& x) { return x.divisor == d; });
      if (it == out.end()) out.push_back({std::move(d), 1});
      else ++it->multiplicity;
    }
  std::sort(out.begin(), out.end(),
            [](const ElementaryDivisor& a, const ElementaryDivisor& b) { return a.divisor < b.divisor; });
  return out;
}

InvariantFactorList invariant_factors_from_elementary(const std::vector<ElementaryDivisor>& divs) {
  // Group powers by their irreducible base, largest first.
  std::vector<std::pair<Poly, std::vector<Poly>>> groups;
  std::size_t count = 0;
  for (const auto& d : divs) {
    const auto fs = factor_finite(d.divisor);
    if (fs.size() != 1) throw PreconditionError(format_poly(d.divisor) + " is not a prime power");
    auto it = std::find_if(groups.begin(), groups.end(), [&](const auto& g) { return g.first == fs[0].factor; });
    if (it == groups.end()) {
      groups.push_back({fs[0].factor, {}});
      it = groups.end() - 1;
    }
    for (std::size_t k = 0; k < d.multiplicity; ++k) it->second.push_back(d.divisor);
  }
  for (auto& [base, powers] : groups) {
    std::sort(powers.begin(), powers.end(), [](const Poly& a, const Poly& b) { return b < a; });
    count = std::max(count, powers.size());
  }
  if (groups.empty()) return {};
  const Field& F = groups[0].first.field();
  std::vector<Poly> factors(count, Poly::constant(F, F->one()));
  for (const auto& [base, powers] : groups)
    for (std::size_t i = 0; i < powers.size(); ++i) factors[count - 1 - i] = factors[count - 1 - i] * powers[i];
  return {std::move(factors)};
}

std::size_t JordanType::dimension() const {
  std::size_t d = 0;
  for (const auto& b : blocks) d += b.size;
  return d;
}

std::vector<std::size_t> JordanType::sizes() const {
  std::vector<std::size_t> s;
  for (const auto& b : blocks) s.push_back(b.size);
  return s;
}

void JordanType::normalize() {
  std::sort(blocks.begin(), blocks.end(), [](const JordanBlock& x, const JordanBlock& y) {
    if (x.eigenvalue != y.eigenvalue) return x.eigenvalue < y.eigenvalue;
    return x.size > y.size;
  });
}

JordanType nilpotent_jordan_type(const Matrix& n) {
  require_square(n, "nilpotent_jordan_type");
  const std::size_t dim = n.rows();
  std::vector<std::size_t> ranks{dim};
  Matrix power = Matrix::identity(n.field(), dim);
  while (ranks.back() > 0) {
    if (ranks.size() > dim) throw PreconditionError("matrix is not nilpotent");
    power = power * n;
    const std::size_t r = rank(power);
    if (r == ranks.back()) throw PreconditionError("matrix is not nilpotent");
    ranks.push_back(r);
  }
  // at_least[k] = number of blocks of size >= k = r_{k-1} - r_k.
  JordanType jt;
  for (std::size_t k = 1; k < ranks.size(); ++k) {
    const std::size_t at_least = ranks[k - 1] - ranks[k];
    const std::size_t longer = k + 1 < ranks.size() ? ranks[k] - ranks[k + 1] : 0;
    for (std::size_t c = 0; c < at_least - longer; ++c) jt.blocks.push_back({n.field()->zero(), k});
  }
  jt.normalize();
  return jt;
}

Matrix pascal_similarity(const Poly& f, const Value& b) {
  if (!f.degree() || *f.degree() < 1 || !f.is_monic())
    throw PreconditionError("pascal_similarity needs a monic polynomial of degree >= 1");
  const Field& F = f.field();
  const std::size_t m = *f.degree();
  const Poly shifted = compose(f, Poly(F, {b, F->one()}));
  const Matrix s = pascal_matrix(F, b, m);
  const Matrix lhs = inverse(s) * (companion(shifted) + Matrix::scalar(F, m, b)) * s;
  if (!(lhs == companion(f))) throw ConsistencyError("Pascal similarity identity failed");
  return s;
}

bool verify_ind2(const Poly& f, const Poly& g) {
  if (!f.degree() || *f.degree() < 1 || !f.is_monic()) throw PreconditionError("verify_ind2 needs f monic of degree >= 1");
  if (!g.degree() || *g.degree() < 1) throw PreconditionError("verify_ind2 needs deg g >= 1");
  require_same_field(f.field(), g.field(), "verify_ind2");
  const Field& F = f.field();
  const std::size_t m = *f.degree();
  const std::size_t d = *g.degree();
  const Value scale = F->inv(F->pow(g.leading(), m));
  const Matrix c = companion(compose(f, g).scaled(scale));
  const Matrix gc = evaluate(g, c);
  return similar(gc, direct_sum(std::vector<Matrix>(d, companion(f))));
}

}  // namespace aslab
