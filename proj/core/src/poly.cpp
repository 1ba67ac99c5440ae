#include "aslab/poly.hpp"

#include <algorithm>

#include "echelon.hpp"
#include "expr_parser.hpp"
#include "text_format.hpp"

namespace aslab {

Poly::Poly(Field field) : field_(std::move(field)) {}

Poly::Poly(Field field, std::vector<Value> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::constant(Field field, Value c) {
  std::vector<Value> v;
  v.push_back(std::move(c));
  return Poly(std::move(field), std::move(v));
}

Poly Poly::x(Field field) {
  std::vector<Value> v{field->zero(), field->one()};
  return Poly(std::move(field), std::move(v));
}

Poly Poly::monomial(Field field, Value c, std::size_t k) {
  std::vector<Value> v(k + 1, field->zero());
  v[k] = std::move(c);
  return Poly(std::move(field), std::move(v));
}

Poly Poly::from_ints(Field field, std::initializer_list<std::int64_t> coeffs) {
  std::vector<Value> v;
  for (auto c : coeffs) v.push_back(field->from_int(c));
  return Poly(std::move(field), std::move(v));
}

void Poly::trim() {
  while (!coeffs_.empty() && field_->is_zero(coeffs_.back())) coeffs_.pop_back();
}

std::optional<std::size_t> Poly::degree() const noexcept {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

bool Poly::is_one() const noexcept { return coeffs_.size() == 1 && field_->is_one(coeffs_[0]); }

bool Poly::is_monic() const noexcept { return !coeffs_.empty() && field_->is_one(coeffs_.back()); }

const Value& Poly::leading() const {
  if (coeffs_.empty()) throw PreconditionError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Value Poly::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : field_->zero(); }

Poly Poly::monic() const {
  if (coeffs_.empty() || field_->is_one(coeffs_.back())) return *this;
  return scaled(field_->inv(coeffs_.back()));
}

Poly Poly::derivative() const {
  std::vector<Value> d;
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    d.push_back(field_->mul(coeffs_[i], field_->from_int(static_cast<std::int64_t>(i % field_->characteristic()))));
  return Poly(field_, std::move(d));
}

Poly Poly::scaled(const Value& c) const {
  if (field_->is_zero(c)) return Poly(field_);
  if (field_->is_one(c)) return *this;
  std::vector<Value> v;
  v.reserve(coeffs_.size());
  for (const auto& a : coeffs_) v.push_back(field_->mul(a, c));
  return Poly(field_, std::move(v));
}

Value Poly::evaluate(const Value& x) const {
  Value acc = field_->zero();
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = field_->add(field_->mul(acc, x), coeffs_[i]);
  return acc;
}

Poly Poly::operator-() const {
  std::vector<Value> v;
  v.reserve(coeffs_.size());
  for (const auto& a : coeffs_) v.push_back(field_->neg(a));
  return Poly(field_, std::move(v));
}

Poly operator+(const Poly& a, const Poly& b) {
  require_same_field(a.field_, b.field_, "polynomial addition");
  const auto& f = *a.field_;
  std::vector<Value> v(std::max(a.coeffs_.size(), b.coeffs_.size()), f.zero());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i < a.coeffs_.size() && i < b.coeffs_.size()) v[i] = f.add(a.coeffs_[i], b.coeffs_[i]);
    else if (i < a.coeffs_.size()) v[i] = a.coeffs_[i];
    else v[i] = b.coeffs_[i];
  }
  return Poly(a.field_, std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  require_same_field(a.field_, b.field_, "polynomial multiplication");
  if (a.is_zero() || b.is_zero()) return Poly(a.field_);
  const auto& f = *a.field_;
  std::vector<Value> v(a.coeffs_.size() + b.coeffs_.size() - 1, f.zero());
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (f.is_zero(a.coeffs_[i])) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (f.is_zero(b.coeffs_[j])) continue;
      v[i + j] = f.add(v[i + j], f.mul(a.coeffs_[i], b.coeffs_[j]));
    }
  }
  return Poly(a.field_, std::move(v));
}

bool operator==(const Poly& a, const Poly& b) { return same_field(a.field_, b.field_) && a.coeffs_ == b.coeffs_; }

bool operator<(const Poly& a, const Poly& b) {
  if (a.coeffs_.size() != b.coeffs_.size()) return a.coeffs_.size() < b.coeffs_.size();
  for (std::size_t i = a.coeffs_.size(); i-- > 0;)
    if (a.coeffs_[i] != b.coeffs_[i]) return a.coeffs_[i] < b.coeffs_[i];
  return false;
}

DivMod divmod(const Poly& a, const Poly& b) {
  require_same_field(a.field(), b.field(), "polynomial division");
  if (b.is_zero()) throw PreconditionError("polynomial division by zero");
  const auto& f = *a.field();
  const std::size_t db = b.coeffs().size();
  if (a.coeffs().size() < db) return {Poly(a.field()), a};
  std::vector<Value> r = a.coeffs();
  std::vector<Value> q(r.size() - db + 1, f.zero());
  const bool monic = f.is_one(b.leading());
  const Value lead_inv = monic ? f.one() : f.inv(b.leading());
  for (std::size_t top = r.size(); top >= db; --top) {
    const std::size_t shift = top - db;
    if (f.is_zero(r[top - 1])) continue;
    Value c = monic ? r[top - 1] : f.mul(r[top - 1], lead_inv);
    for (std::size_t j = 0; j < db; ++j) {
      if (f.is_zero(b.coeffs()[j])) continue;
      r[shift + j] = f.sub(r[shift + j], f.mul(c, b.coeffs()[j]));
    }
    q[shift] = std::move(c);
  }
  r.resize(db - 1);
  return {Poly(a.field(), std::move(q)), Poly(a.field(), std::move(r))};
}

Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).remainder; }

Poly exact_div(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw ConsistencyError("inexact polynomial division");
  return q;
}

Poly gcd(const Poly& a_in, const Poly& b_in) {
  require_same_field(a_in.field(), b_in.field(), "polynomial gcd");
  Poly a = a_in, b = b_in;
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Poly lcm(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly(a.field());
  return exact_div(a * b, gcd(a, b)).monic();
}

Poly pow(const Poly& a, std::uint64_t k) {
  Poly result = Poly::constant(a.field(), a.field()->one());
  Poly base = a;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

Poly mul_mod(const Poly& a, const Poly& b, const Poly& mod) { return (a * b) % mod; }

Poly pow_mod(const Poly& a, std::uint64_t k, const Poly& mod) {
  Poly result = Poly::constant(a.field(), a.field()->one()) % mod;
  Poly base = a % mod;
  while (k > 0) {
    if (k & 1) result = mul_mod(result, base, mod);
    k >>= 1;
    if (k > 0) base = mul_mod(base, base, mod);
  }
  return result;
}

Poly compose(const Poly& f, const Poly& g) {
  require_same_field(f.field(), g.field(), "polynomial composition");
  Poly acc(f.field());
  for (std::size_t i = f.coeffs().size(); i-- > 0;) acc = acc * g + Poly::constant(f.field(), f.coeffs()[i]);
  return acc;
}

Poly inflate(const Poly& f, std::uint64_t k) {
  if (f.is_zero() || k == 1) return f;
  std::vector<Value> v((f.coeffs().size() - 1) * k + 1, f.field()->zero());
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) v[i * k] = f.coeffs()[i];
  return Poly(f.field(), std::move(v));
}

// ---------------------------------------------------------------------------
// Text

namespace {

detail::TermCoeff coeff_text(const FieldDescriptor& f, const Value& c) {
  detail::TermCoeff tc;
  tc.plain = f.format(c);
  const Value n = f.neg(c);
  tc.negated = f.format(n);
  tc.self_negating = c == n;
  tc.plain_is_one = f.is_one(c);
  tc.negated_is_one = f.is_one(n);
  const FieldDescriptor& k = f.constant_field();
  const std::uint32_t minus_one = k.fneg(1);
  if (f.is_finite()) tc.negative = c.index == minus_one;
  else tc.negative = !c.num.empty() && c.num.back() == minus_one;
  return tc;
}

struct PolyRing {
  using value_type = Poly;
  const Field& field;
  char var;
  Poly from_int(std::int64_t k) const { return Poly::constant(field, field->from_int(k)); }
  std::optional<Poly> variable(char name) const {
    if (name == var) return Poly::x(field);
    try {
      return Poly::constant(field, field->parse(std::string(1, name)));
    } catch (const ParseError&) {
      return std::nullopt;
    }
  }
  Poly add(const Poly& a, const Poly& b) const { return a + b; }
  Poly sub(const Poly& a, const Poly& b) const { return a - b; }
  Poly mul(const Poly& a, const Poly& b) const { return a * b; }
  Poly div(const Poly& a, const Poly& b) const {
    if (b.is_zero()) throw ParseError("division by zero");
    if (!b.is_constant()) {
      auto [q, r] = divmod(a, b);
      if (!r.is_zero()) throw ParseError("polynomial division leaves a remainder");
      return q;
    }
    return a.scaled(field->inv(b.coeffs()[0]));
  }
  Poly neg(const Poly& a) const { return -a; }
  Poly pow(const Poly& a, std::uint64_t k) const { return aslab::pow(a, k); }
};

}  // namespace

std::string format_poly(const Poly& f, char var) {
  std::vector<detail::Term> terms;
  const auto& c = f.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    if (f.field()->is_zero(c[i])) continue;
    terms.push_back({coeff_text(*f.field(), c[i]), i});
  }
  return detail::join_terms(terms, var);
}

Poly parse_poly(const Field& field, std::string_view text, char var) {
  return detail::parse_expression(PolyRing{field, var}, text);
}

// ---------------------------------------------------------------------------
// Characteristic-p structure

bool is_separable(const Poly& f) {
  if (f.is_zero()) return false;
  return gcd(f, f.derivative()).is_one();
}

SeparableDecomposition separable_part(const Poly& h) {
  const std::uint32_t p = h.field()->characteristic();
  if (p == 0) throw PreconditionError("separable_part needs a field of prime characteristic");
  if (!h.degree() || *h.degree() < 1) throw PreconditionError("separable_part needs degree >= 1");
  if (!h.is_monic()) throw PreconditionError("separable_part needs a monic polynomial");
  Poly q = h;
  unsigned e = 0;
  // h' = 0 exactly when only exponents divisible by p occur.
  while (q.derivative().is_zero() && *q.degree() >= p) {
    std::vector<Value> v;
    for (std::size_t i = 0; i < q.coeffs().size(); i += p) v.push_back(q.coeffs()[i]);
    q = Poly(q.field(), std::move(v));
    ++e;
  }
  return {std::move(q), e};
}

Poly min_poly_in_quotient(const Poly& u, const Poly& q) {
  require_same_field(u.field(), q.field(), "min_poly_in_quotient");
  if (!q.is_monic() || *q.degree() < 1) throw PreconditionError("min_poly_in_quotient needs a monic modulus of degree >= 1");
  if (u.degree() && *u.degree() >= *q.degree()) throw PreconditionError("min_poly_in_quotient needs deg u < deg q");
  const auto& f = *q.field();
  const std::size_t dim = *q.degree();
  detail::SemiEchelon basis(f, dim, true);
  Poly power = Poly::constant(q.field(), f.one());
  for (std::size_t k = 0; k <= dim; ++k) {
    std::vector<Value> vec(dim, f.zero());
    for (std::size_t i = 0; i < power.coeffs().size(); ++i) vec[i] = power.coeffs()[i];
    auto dep = basis.insert(std::move(vec));
    if (dep) {
      // u^k = sum dep[j] u^j
      std::vector<Value> coeffs(k + 1, f.zero());
      for (std::size_t j = 0; j < dep->size(); ++j) coeffs[j] = f.neg((*dep)[j]);
      coeffs[k] = f.one();
      return Poly(q.field(), std::move(coeffs));
    }
    power = mul_mod(power, u, q);
  }
  throw ConsistencyError("no linear dependence among the first deg(q)+1 powers");
}

bool is_pth_power_coeffs(const Poly& g) {
  const auto& f = *g.field();
  if (f.is_finite()) return true;
  // K(Z): a fraction is a p-th power iff numerator and denominator only use
  // exponents divisible by p (K is perfect).
  const std::uint32_t p = f.characteristic();
  for (const auto& c : g.coeffs()) {
    for (std::size_t i = 0; i < c.num.size(); ++i)
      if (c.num[i] != 0 && i % p != 0) return false;
    for (std::size_t i = 0; i < c.den.size(); ++i)
      if (c.den[i] != 0 && i % p != 0) return false;
  }
  return true;
}

}  // namespace aslab
