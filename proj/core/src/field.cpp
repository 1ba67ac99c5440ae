#include "aslab/field.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <sstream>

#include "expr_parser.hpp"
#include "kpoly.hpp"
#include "text_format.hpp"

namespace aslab {

using detail::KPoly;

struct FieldDescriptor::Tables {
  std::vector<std::uint16_t> add;  // q*q
  std::vector<std::uint16_t> neg;
  std::vector<std::uint16_t> exp;  // 2(q-1), exp[i] = g^i
  std::vector<std::uint32_t> log;  // log[0] unused
  std::vector<std::uint16_t> inv;
  std::vector<std::uint16_t> frob_inv;  // p-th roots
};

namespace {

std::uint32_t ipow(std::uint32_t b, std::uint32_t e) {
  std::uint32_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Multiplies two residues (digit vectors) modulo `modulus` over F_p.
std::vector<std::uint32_t> slow_mul(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                                    const std::vector<std::uint32_t>& modulus, std::uint32_t p) {
  const std::size_t n = modulus.size() - 1;
  std::vector<std::uint64_t> prod(2 * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{a[i]} * b[j]) % p;
  for (std::size_t i = 2 * n; i-- > n;) {
    const std::uint64_t c = prod[i];
    if (c == 0) continue;
    prod[i] = 0;
    for (std::size_t j = 0; j < n; ++j) prod[i - n + j] = (prod[i - n + j] + (p - c) * modulus[j]) % p;
  }
  std::vector<std::uint32_t> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
  return out;
}

std::string finite_spec(std::uint32_t p, std::uint32_t n, const std::vector<std::uint32_t>& modulus);

// Prints an F_p polynomial in t with '+' separators only ("2t^2+t+1").
std::string format_fp_poly(const std::vector<std::uint32_t>& coeffs, char var) {
  std::string out;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    const std::uint32_t c = coeffs[i];
    if (c == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(c);
    } else {
      if (c != 1) out += std::to_string(c);
      out.push_back(var);
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

std::mutex& registry_mutex() {
  static std::mutex m;
  return m;
}

std::map<std::string, Field>& registry() {
  static std::map<std::string, Field> r;
  return r;
}

Field intern(const std::string& key, const std::function<Field()>& make) {
  std::lock_guard lock(registry_mutex());
  auto it = registry().find(key);
  if (it != registry().end()) return it->second;
  Field f = make();
  registry().emplace(key, f);
  return f;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_irreducible_mod_p(const std::vector<std::uint32_t>& f_in, std::uint32_t p) {
  std::vector<std::uint32_t> f = f_in;
  while (!f.empty() && f.back() == 0) f.pop_back();
  if (f.size() < 2) return false;
  const std::size_t n = f.size() - 1;
  if (n == 1) return true;
  // Trial division by every monic polynomial of degree 1..n/2.
  for (std::size_t d = 1; d <= n / 2; ++d) {
    const std::uint32_t count = ipow(p, static_cast<std::uint32_t>(d));
    for (std::uint32_t code = 0; code < count; ++code) {
      std::vector<std::uint32_t> g(d + 1);
      std::uint32_t c = code;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = c % p;
        c /= p;
      }
      g[d] = 1;
      std::vector<std::uint64_t> r(f.begin(), f.end());
      for (std::size_t i = r.size(); i-- > d;) {
        const std::uint64_t q = r[i] % p;
        if (q == 0) continue;
        for (std::size_t j = 0; j <= d; ++j) r[i - d + j] = (r[i - d + j] + (p - q) * g[j]) % p;
      }
      bool zero = true;
      for (std::size_t i = 0; i < d; ++i) zero = zero && (r[i] % p == 0);
      if (zero) return false;
    }
  }
  return true;
}

std::vector<std::uint32_t> default_modulus(std::uint32_t p, std::uint32_t n) {
  if (n == 1) return {0, 1};
  // Lexicographic order on (c_0, c_1, ..., c_{n-1}) compared low degree first
  // is the order of the code with c_0 as the most significant digit.
  const std::uint32_t count = ipow(p, n);
  for (std::uint32_t code = 0; code < count; ++code) {
    std::vector<std::uint32_t> f(n + 1);
    std::uint32_t c = code;
    for (std::size_t i = n; i-- > 0;) {
      f[i] = c % p;
      c /= p;
    }
    f[n] = 1;
    if (f[0] == 0) continue;
    if (is_irreducible_mod_p(f, p)) return f;
  }
  throw ConsistencyError("no irreducible polynomial found");
}

FieldDescriptor::FieldDescriptor(FieldKind kind, std::uint32_t p, std::uint32_t n,
                                 std::vector<std::uint32_t> modulus, Field base)
    : kind_(kind), p_(p), n_(n), modulus_(std::move(modulus)), base_(std::move(base)) {
  if (kind_ == FieldKind::rational_function) {
    spec_ = base_->spec() + "(Z)";
    return;
  }
  q_ = ipow(p_, n_);
  spec_ = finite_spec(p_, n_, modulus_);
  auto t = std::make_unique<Tables>();
  const std::uint32_t q = q_;
  t->add.resize(std::size_t{q} * q);
  t->neg.resize(q);
  std::vector<std::vector<std::uint32_t>> dig(q);
  for (std::uint32_t i = 0; i < q; ++i) dig[i] = digits(i);
  for (std::uint32_t a = 0; a < q; ++a) {
    for (std::uint32_t b = 0; b < q; ++b) {
      std::uint32_t r = 0, place = 1;
      for (std::uint32_t k = 0; k < n_; ++k) {
        r += ((dig[a][k] + dig[b][k]) % p_) * place;
        place *= p_;
      }
      t->add[std::size_t{a} * q + b] = static_cast<std::uint16_t>(r);
    }
    std::uint32_t r = 0, place = 1;
    for (std::uint32_t k = 0; k < n_; ++k) {
      r += ((p_ - dig[a][k]) % p_) * place;
      place *= p_;
    }
    t->neg[a] = static_cast<std::uint16_t>(r);
  }
  // Multiplicative structure from a primitive element.
  std::vector<std::uint32_t> mod = n_ == 1 ? std::vector<std::uint32_t>{0, 1} : modulus_;
  auto mul_digits = [&](std::uint32_t a, std::uint32_t b) -> std::uint32_t {
    if (n_ == 1) return static_cast<std::uint32_t>(std::uint64_t{a} * b % p_);
    return from_digits(slow_mul(dig[a], dig[b], mod, p_));
  };
  t->exp.assign(2 * std::size_t{q - 1} + 1, 0);
  t->log.assign(q, 0);
  for (std::uint32_t g = 1; g < q; ++g) {
    std::uint32_t x = 1, order = 0;
    do {
      x = mul_digits(x, g);
      ++order;
    } while (x != 1 && order < q);
    if (order != q - 1) continue;
    x = 1;
    for (std::uint32_t i = 0; i < q - 1; ++i) {
      t->exp[i] = static_cast<std::uint16_t>(x);
      t->log[x] = i;
      x = mul_digits(x, g);
    }
    break;
  }
  for (std::uint32_t i = q - 1; i < t->exp.size(); ++i) t->exp[i] = t->exp[i - (q - 1)];
  t->inv.assign(q, 0);
  for (std::uint32_t a = 1; a < q; ++a) t->inv[a] = t->exp[(q - 1 - t->log[a]) % (q - 1)];
  tables_ = std::move(t);
  tables_->frob_inv.assign(q, 0);
  for (std::uint32_t a = 0; a < q; ++a) tables_->frob_inv[fpow(a, p_)] = static_cast<std::uint16_t>(a);
}

FieldDescriptor::~FieldDescriptor() = default;

std::uint32_t FieldDescriptor::size() const {
  if (!is_finite()) throw PreconditionError("field " + spec_ + " is infinite");
  return q_;
}

const FieldDescriptor& FieldDescriptor::constant_field() const noexcept {
  return is_finite() ? *this : *base_;
}

std::uint32_t FieldDescriptor::fadd(std::uint32_t a, std::uint32_t b) const noexcept {
  return tables_->add[std::size_t{a} * q_ + b];
}
std::uint32_t FieldDescriptor::fneg(std::uint32_t a) const noexcept { return tables_->neg[a]; }
std::uint32_t FieldDescriptor::fsub(std::uint32_t a, std::uint32_t b) const noexcept {
  return tables_->add[std::size_t{a} * q_ + tables_->neg[b]];
}
std::uint32_t FieldDescriptor::fmul(std::uint32_t a, std::uint32_t b) const noexcept {
  if (a == 0 || b == 0) return 0;
  return tables_->exp[tables_->log[a] + tables_->log[b]];
}
std::uint32_t FieldDescriptor::finv(std::uint32_t a) const noexcept { return tables_->inv[a]; }
std::uint32_t FieldDescriptor::fpow(std::uint32_t a, std::uint64_t k) const noexcept {
  if (k == 0) return 1;
  if (a == 0) return 0;
  return tables_->exp[(std::uint64_t{tables_->log[a]} * (k % (q_ - 1))) % (q_ - 1)];
}

std::vector<std::uint32_t> FieldDescriptor::digits(std::uint32_t index) const {
  std::vector<std::uint32_t> d(n_);
  for (std::uint32_t k = 0; k < n_; ++k) {
    d[k] = index % p_;
    index /= p_;
  }
  return d;
}

std::uint32_t FieldDescriptor::from_digits(const std::vector<std::uint32_t>& d) const {
  std::uint32_t r = 0, place = 1;
  for (std::uint32_t k = 0; k < n_; ++k) {
    r += (k < d.size() ? d[k] % p_ : 0) * place;
    place *= p_;
  }
  return r;
}

namespace {

Value make_fraction(const FieldDescriptor& k, KPoly num, KPoly den) {
  if (den.empty()) throw PreconditionError("division by zero");
  if (num.empty()) return Value{0, {}, {1}};
  if (!(den.size() == 1 && den[0] == 1)) {
    KPoly g = detail::kgcd(k, num, den);
    if (!detail::is_one_poly(g)) {
      num = detail::kdivmod(k, num, g).first;
      den = detail::kdivmod(k, den, g).first;
    }
    const std::uint32_t li = k.finv(den.back());
    if (li != 1) {
      num = detail::kscale(k, num, li);
      den = detail::kscale(k, den, li);
    }
  }
  return Value{0, std::move(num), std::move(den)};
}

}  // namespace

Value FieldDescriptor::zero() const {
  if (is_finite()) return Value{};
  return Value{0, {}, {1}};
}

Value FieldDescriptor::one() const {
  if (is_finite()) return Value{1, {}, {}};
  return Value{0, {1}, {1}};
}

Value FieldDescriptor::from_int(std::int64_t k) const {
  std::int64_t r = k % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return constant(static_cast<std::uint32_t>(r));
}

Value FieldDescriptor::element(std::uint32_t index) const {
  if (!is_finite() || index >= q_) throw PreconditionError("element index out of range for " + spec_);
  return Value{index, {}, {}};
}

Value FieldDescriptor::generator() const {
  switch (kind_) {
    case FieldKind::prime:
      throw PreconditionError("prime field " + spec_ + " has no generator variable");
    case FieldKind::extension:
      return Value{p_, {}, {}};
    case FieldKind::rational_function:
      return Value{0, {0, 1}, {1}};
  }
  return {};
}

Value FieldDescriptor::constant(std::uint32_t k) const {
  if (is_finite()) return Value{k, {}, {}};
  if (k == 0) return zero();
  return Value{0, {k}, {1}};
}

std::optional<std::uint32_t> FieldDescriptor::constant_index(const Value& x) const {
  if (is_finite()) return x.index;
  if (x.den.size() != 1 || x.num.size() > 1) return std::nullopt;
  return x.num.empty() ? 0u : x.num[0];
}

bool FieldDescriptor::is_zero(const Value& x) const noexcept {
  return is_finite() ? x.index == 0 : x.num.empty();
}

bool FieldDescriptor::is_one(const Value& x) const noexcept {
  return is_finite() ? x.index == 1 : (detail::is_one_poly(x.num) && detail::is_one_poly(x.den));
}

Value FieldDescriptor::add(const Value& a, const Value& b) const {
  if (is_finite()) return Value{fadd(a.index, b.index), {}, {}};
  const FieldDescriptor& k = *base_;
  if (a.num.empty()) return b;
  if (b.num.empty()) return a;
  if (a.den == b.den) {
    KPoly num = detail::kadd(k, a.num, b.num);
    if (detail::is_one_poly(a.den)) return Value{0, std::move(num), {1}};
    return make_fraction(k, std::move(num), a.den);
  }
  KPoly num = detail::kadd(k, detail::kmul(k, a.num, b.den), detail::kmul(k, b.num, a.den));
  return make_fraction(k, std::move(num), detail::kmul(k, a.den, b.den));
}

Value FieldDescriptor::neg(const Value& a) const {
  if (is_finite()) return Value{fneg(a.index), {}, {}};
  return Value{0, detail::kneg(*base_, a.num), a.den};
}

Value FieldDescriptor::sub(const Value& a, const Value& b) const {
  if (is_finite()) return Value{fsub(a.index, b.index), {}, {}};
  return add(a, neg(b));
}

Value FieldDescriptor::mul(const Value& a, const Value& b) const {
  if (is_finite()) return Value{fmul(a.index, b.index), {}, {}};
  const FieldDescriptor& k = *base_;
  if (a.num.empty() || b.num.empty()) return zero();
  const bool a_poly = detail::is_one_poly(a.den);
  const bool b_poly = detail::is_one_poly(b.den);
  if (a_poly && b_poly) return Value{0, detail::kmul(k, a.num, b.num), {1}};
  // Cross-cancel so the result is already reduced.
  KPoly an = a.num, ad = a.den, bn = b.num, bd = b.den;
  if (!b_poly) {
    KPoly g = detail::kgcd(k, an, bd);
    if (!detail::is_one_poly(g)) {
      an = detail::kdivmod(k, an, g).first;
      bd = detail::kdivmod(k, bd, g).first;
    }
  }
  if (!a_poly) {
    KPoly g = detail::kgcd(k, bn, ad);
    if (!detail::is_one_poly(g)) {
      bn = detail::kdivmod(k, bn, g).first;
      ad = detail::kdivmod(k, ad, g).first;
    }
  }
  KPoly num = detail::kmul(k, an, bn);
  KPoly den = detail::kmul(k, ad, bd);
  const std::uint32_t li = k.finv(den.back());
  if (li != 1) {
    num = detail::kscale(k, num, li);
    den = detail::kscale(k, den, li);
  }
  return Value{0, std::move(num), std::move(den)};
}

Value FieldDescriptor::inv(const Value& a) const {
  if (is_zero(a)) throw PreconditionError("inverse of zero in " + spec_);
  if (is_finite()) return Value{finv(a.index), {}, {}};
  const FieldDescriptor& k = *base_;
  const std::uint32_t li = k.finv(a.num.back());
  return Value{0, detail::kscale(k, a.den, li), detail::kscale(k, a.num, li)};
}

Value FieldDescriptor::div(const Value& a, const Value& b) const { return mul(a, inv(b)); }

Value FieldDescriptor::pow(const Value& a, std::uint64_t k) const {
  if (is_finite()) return Value{fpow(a.index, k), {}, {}};
  Value result = one();
  Value base = a;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    k >>= 1;
    if (k > 0) base = mul(base, base);
  }
  return result;
}

Value FieldDescriptor::frobenius(const Value& x) const {
  if (!is_finite()) throw PreconditionError("Frobenius is only supported on finite fields, not " + spec_);
  return Value{fpow(x.index, p_), {}, {}};
}

Value FieldDescriptor::pth_root(const Value& x) const {
  if (!is_finite()) throw PreconditionError("p-th roots are only supported on finite fields, not " + spec_);
  return Value{tables_->frob_inv[x.index], {}, {}};
}

bool FieldDescriptor::is_canonical(const Value& x) const {
  if (is_finite()) return x.index < q_ && x.num.empty() && x.den.empty();
  const FieldDescriptor& k = *base_;
  const std::uint32_t kq = k.size();
  for (auto c : x.num)
    if (c >= kq) return false;
  for (auto c : x.den)
    if (c >= kq) return false;
  if (x.den.empty() || x.den.back() != 1) return false;
  if (!x.num.empty() && x.num.back() == 0) return false;
  if (x.num.empty()) return detail::is_one_poly(x.den);
  return detail::is_one_poly(detail::kgcd(k, x.num, x.den));
}

bool operator==(const FieldDescriptor& a, const FieldDescriptor& b) {
  if (&a == &b) return true;
  if (a.kind_ != b.kind_ || a.p_ != b.p_ || a.n_ != b.n_) return false;
  if (a.kind_ == FieldKind::rational_function) return *a.base_ == *b.base_;
  return a.modulus_ == b.modulus_;
}

bool same_field(const Field& a, const Field& b) noexcept {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

void require_same_field(const Field& a, const Field& b, std::string_view where) {
  if (!same_field(a, b))
    throw PreconditionError(std::string(where) + ": field mismatch (" + (a ? a->spec() : "null") + " vs " +
                            (b ? b->spec() : "null") + ")");
}

// ---------------------------------------------------------------------------
// Text

namespace {

detail::TermCoeff constant_term_coeff(const FieldDescriptor& k, std::uint32_t c) {
  detail::TermCoeff tc;
  tc.plain = k.format(k.element(c));
  const std::uint32_t n = k.fneg(c);
  tc.negated = k.format(k.element(n));
  tc.negative = c == k.fneg(1);
  tc.self_negating = c == n;
  tc.plain_is_one = c == 1;
  tc.negated_is_one = n == 1;
  return tc;
}

std::string format_kpoly(const FieldDescriptor& k, const KPoly& a, char var) {
  std::vector<detail::Term> terms;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] == 0) continue;
    terms.push_back({constant_term_coeff(k, a[i]), i});
  }
  return detail::join_terms(terms, var);
}

std::string wrap(const std::string& s) { return detail::is_compound(s) ? "(" + s + ")" : s; }

struct ValueRing {
  using value_type = Value;
  const FieldDescriptor& f;
  Value from_int(std::int64_t k) const { return f.from_int(k); }
  std::optional<Value> variable(char name) const {
    if (name == 't') {
      if (f.kind() == FieldKind::extension) return f.generator();
      if (f.kind() == FieldKind::rational_function && f.base()->kind() == FieldKind::extension)
        return f.constant(f.base()->generator().index);
      return std::nullopt;
    }
    if (name == 'Z' && f.kind() == FieldKind::rational_function) return f.generator();
    return std::nullopt;
  }
  Value add(const Value& a, const Value& b) const { return f.add(a, b); }
  Value sub(const Value& a, const Value& b) const { return f.sub(a, b); }
  Value mul(const Value& a, const Value& b) const { return f.mul(a, b); }
  Value div(const Value& a, const Value& b) const {
    if (f.is_zero(b)) throw ParseError("division by zero");
    return f.div(a, b);
  }
  Value neg(const Value& a) const { return f.neg(a); }
  Value pow(const Value& a, std::uint64_t k) const { return f.pow(a, k); }
};

std::string finite_spec(std::uint32_t p, std::uint32_t n, const std::vector<std::uint32_t>& modulus) {
  const std::string size = std::to_string(ipow(p, n));
  if (n == 1 || modulus == default_modulus(p, n)) return "GF(" + size + ")";
  return "GF(" + size + "; mod=" + format_fp_poly(modulus, 't') + ")";
}

}  // namespace

std::string FieldDescriptor::format(const Value& x) const {
  switch (kind_) {
    case FieldKind::prime:
      return std::to_string(x.index);
    case FieldKind::extension:
      return format_fp_poly(digits(x.index), 't');
    case FieldKind::rational_function: {
      const std::string num = format_kpoly(*base_, x.num, 'Z');
      if (detail::is_one_poly(x.den)) return num;
      return wrap(num) + "/" + wrap(format_kpoly(*base_, x.den, 'Z'));
    }
  }
  return {};
}

Value FieldDescriptor::parse(std::string_view text) const {
  return detail::parse_expression(ValueRing{*this}, text);
}

// ---------------------------------------------------------------------------
// Construction

Field prime_field(std::uint32_t p) {
  if (!is_prime(p)) throw PreconditionError("GF(" + std::to_string(p) + "): " + std::to_string(p) + " is not prime");
  if (p > kMaxFiniteFieldSize) throw CapExceeded("GF(" + std::to_string(p) + ") exceeds the 729-element cap");
  return intern("GF(" + std::to_string(p) + ")",
                [&] { return std::make_shared<const FieldDescriptor>(FieldKind::prime, p, 1, std::vector<std::uint32_t>{}, nullptr); });
}

Field extension_field(std::uint32_t p, std::uint32_t n) {
  if (n == 0) throw PreconditionError("extension degree must be at least 1");
  if (n == 1) return prime_field(p);
  if (!is_prime(p)) throw PreconditionError(std::to_string(p) + " is not prime");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    q *= p;
    if (q > kMaxFiniteFieldSize) throw CapExceeded("GF(" + std::to_string(p) + "^" + std::to_string(n) + ") exceeds the 729-element cap");
  }
  return extension_field(p, n, default_modulus(p, n));
}

Field extension_field(std::uint32_t p, std::uint32_t n, std::vector<std::uint32_t> modulus) {
  if (!is_prime(p)) throw PreconditionError(std::to_string(p) + " is not prime");
  if (n == 0) throw PreconditionError("extension degree must be at least 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    q *= p;
    if (q > kMaxFiniteFieldSize) throw CapExceeded("GF(" + std::to_string(p) + "^" + std::to_string(n) + ") exceeds the 729-element cap");
  }
  for (auto& c : modulus) c %= p;
  while (!modulus.empty() && modulus.back() == 0) modulus.pop_back();
  if (modulus.size() != n + 1) throw PreconditionError("modulus must have degree " + std::to_string(n));
  if (modulus.back() != 1) throw PreconditionError("modulus must be monic");
  if (!is_irreducible_mod_p(modulus, p)) throw PreconditionError("modulus is reducible over GF(" + std::to_string(p) + ")");
  if (n == 1) return prime_field(p);
  const std::string key = finite_spec(p, n, modulus);
  return intern(key, [&] { return std::make_shared<const FieldDescriptor>(FieldKind::extension, p, n, modulus, nullptr); });
}

Field rational_function_field(const Field& base) {
  if (!base || !base->is_finite()) throw PreconditionError("K(Z) requires a finite coefficient field K");
  return intern(base->spec() + "(Z)", [&] {
    return std::make_shared<const FieldDescriptor>(FieldKind::rational_function, base->characteristic(), base->degree(),
                                                   std::vector<std::uint32_t>{}, base);
  });
}

namespace {

std::string strip(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

std::uint32_t parse_uint(const std::string& s, std::string_view spec) {
  if (s.empty() || s.size() > 9 || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw ParseError("malformed field spec \"" + std::string(spec) + "\"");
  return static_cast<std::uint32_t>(std::stoul(s));
}

// Parses an F_p polynomial in t (used for explicit moduli).
std::vector<std::uint32_t> parse_fp_poly(std::string_view text, std::uint32_t p) {
  struct Ring {
    using value_type = std::vector<std::int64_t>;
    std::int64_t p;
    value_type norm(value_type v) const {
      for (auto& c : v) c = ((c % p) + p) % p;
      while (!v.empty() && v.back() == 0) v.pop_back();
      return v;
    }
    value_type from_int(std::int64_t k) const { return norm({k}); }
    std::optional<value_type> variable(char name) const {
      if (name == 't' || name == 'X' || name == 'x') return value_type{0, 1};
      return std::nullopt;
    }
    value_type add(const value_type& a, const value_type& b) const {
      value_type r(std::max(a.size(), b.size()), 0);
      for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
      for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
      return norm(r);
    }
    value_type neg(const value_type& a) const {
      value_type r = a;
      for (auto& c : r) c = -c;
      return norm(r);
    }
    value_type sub(const value_type& a, const value_type& b) const { return add(a, neg(b)); }
    value_type mul(const value_type& a, const value_type& b) const {
      if (a.empty() || b.empty()) return {};
      value_type r(a.size() + b.size() - 1, 0);
      for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
      return norm(r);
    }
    value_type div(const value_type&, const value_type&) const { throw ParseError("division not allowed in a modulus"); }
    value_type pow(const value_type& a, std::uint64_t k) const {
      value_type r{1};
      for (std::uint64_t i = 0; i < k; ++i) r = mul(r, a);
      return r;
    }
  };
  auto v = detail::parse_expression(Ring{p}, text);
  return {v.begin(), v.end()};
}

}  // namespace

Field make_field(std::string_view spec_in) {
  std::string s = strip(spec_in);
  bool rational = false;
  if (s.size() > 3 && s.ends_with("(Z)")) {
    rational = true;
    s.resize(s.size() - 3);
  }
  if (!s.starts_with("GF(") || !s.ends_with(")")) throw ParseError("malformed field spec \"" + std::string(spec_in) + "\"");
  std::string inner = s.substr(3, s.size() - 4);
  std::string mod_text;
  if (auto semi = inner.find(';'); semi != std::string::npos) {
    mod_text = inner.substr(semi + 1);
    inner.resize(semi);
    if (!mod_text.starts_with("mod=")) throw ParseError("malformed field spec \"" + std::string(spec_in) + "\"");
    mod_text = mod_text.substr(4);
  }
  std::uint32_t p = 0, n = 1;
  if (auto caret = inner.find('^'); caret != std::string::npos) {
    p = parse_uint(inner.substr(0, caret), spec_in);
    n = parse_uint(inner.substr(caret + 1), spec_in);
    if (!is_prime(p)) throw PreconditionError("GF(" + inner + "): " + std::to_string(p) + " is not prime");
  } else {
    const std::uint32_t q = parse_uint(inner, spec_in);
    if (q > kMaxFiniteFieldSize) throw CapExceeded("GF(" + inner + ") exceeds the 729-element cap");
    // q must be a prime power.
    for (std::uint32_t d = 2; d <= q; ++d) {
      if (q % d == 0) {
        p = d;
        break;
      }
    }
    if (p == 0) throw PreconditionError("GF(" + inner + "): not a prime power");
    std::uint32_t r = q;
    n = 0;
    while (r % p == 0) {
      r /= p;
      ++n;
    }
    if (r != 1) throw PreconditionError("GF(" + inner + "): " + inner + " is not a prime power");
  }
  if (n == 0) throw PreconditionError("extension degree must be at least 1");
  Field base;
  if (!mod_text.empty()) base = extension_field(p, n, parse_fp_poly(mod_text, p));
  else base = extension_field(p, n);
  return rational ? rational_function_field(base) : base;
}

// ---------------------------------------------------------------------------
// FieldElement

FieldElement::FieldElement(Field field, Value value) : field_(std::move(field)), value_(std::move(value)) {}

FieldElement FieldElement::operator-() const { return {field_, field_->neg(value_)}; }
FieldElement FieldElement::inverse() const { return {field_, field_->inv(value_)}; }
FieldElement FieldElement::pow(std::uint64_t k) const { return {field_, field_->pow(value_, k)}; }

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  require_same_field(a.field_, b.field_, "element addition");
  return {a.field_, a.field_->add(a.value_, b.value_)};
}
FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  require_same_field(a.field_, b.field_, "element subtraction");
  return {a.field_, a.field_->sub(a.value_, b.value_)};
}
FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  require_same_field(a.field_, b.field_, "element multiplication");
  return {a.field_, a.field_->mul(a.value_, b.value_)};
}
FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  require_same_field(a.field_, b.field_, "element division");
  return {a.field_, a.field_->div(a.value_, b.value_)};
}
bool operator==(const FieldElement& a, const FieldElement& b) {
  return same_field(a.field_, b.field_) && a.value_ == b.value_;
}

FieldElement parse_element(const Field& field, std::string_view text) { return {field, field->parse(text)}; }

FieldElement frobenius(const FieldElement& x) { return {x.field(), x.field()->frobenius(x.value())}; }

std::vector<FieldElement> enumerate_elements(const Field& field) {
  const std::uint32_t q = field->size();
  std::vector<FieldElement> out;
  out.reserve(q);
  for (std::uint32_t i = 0; i < q; ++i) out.emplace_back(field, field->element(i));
  return out;
}

// ---------------------------------------------------------------------------
// Subfields

std::vector<std::uint32_t> subfield_embedding(const Field& small, const Field& large) {
  if (!small->is_finite() || !large->is_finite() || small->characteristic() != large->characteristic() ||
      large->degree() % small->degree() != 0)
    throw PreconditionError(small->spec() + " does not embed in " + large->spec());
  static std::shared_mutex mutex;
  static std::map<std::pair<std::string, std::string>, std::vector<std::uint32_t>> cache;
  const auto key = std::make_pair(small->spec(), large->spec());
  {
    std::shared_lock lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  const std::uint32_t p = small->characteristic();
  std::vector<std::uint32_t> map(small->size());
  if (small->degree() == 1) {
    for (std::uint32_t i = 0; i < p; ++i) map[i] = i;  // F_p sits at indices 0..p-1
  } else {
    const auto& mod = small->modulus();
    std::uint32_t root = 0;
    bool found = false;
    for (std::uint32_t x = 0; x < large->size() && !found; ++x) {
      std::uint32_t acc = 0;
      for (std::size_t i = mod.size(); i-- > 0;) acc = large->fadd(large->fmul(acc, x), mod[i]);
      if (acc == 0) {
        root = x;
        found = true;
      }
    }
    if (!found) throw ConsistencyError("no root of the modulus of " + small->spec() + " in " + large->spec());
    for (std::uint32_t i = 0; i < small->size(); ++i) {
      const auto d = small->digits(i);
      std::uint32_t acc = 0;
      for (std::size_t k = d.size(); k-- > 0;) acc = large->fadd(large->fmul(acc, root), d[k]);
      map[i] = acc;
    }
  }
  std::unique_lock lock(mutex);
  cache.emplace(key, map);
  return map;
}

bool contains_subfield(const FieldDescriptor& field, std::uint32_t n) noexcept {
  if (n == 0) return false;
  return field.constant_field().degree() % n == 0;
}

std::vector<Value> subfield_elements(const FieldDescriptor& field, std::uint32_t n) {
  if (!contains_subfield(field, n))
    throw PreconditionError(field.spec() + " does not contain GF(" + std::to_string(field.characteristic()) + "^" +
                            std::to_string(n) + ")");
  const FieldDescriptor& k = field.constant_field();
  std::uint64_t pn = 1;
  for (std::uint32_t i = 0; i < n; ++i) pn *= k.characteristic();
  std::vector<Value> out;
  for (std::uint32_t x = 0; x < k.size(); ++x)
    if (k.fpow(x, pn) == x) out.push_back(field.constant(x));
  return out;
}

}  // namespace aslab
