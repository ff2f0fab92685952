#include "hcoh/field.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace hcoh {

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::non_prime: return "non_prime";
    case Errc::bad_degree: return "bad_degree";
    case Errc::field_too_large: return "field_too_large";
    case Errc::zero_inverse: return "zero_inverse";
    case Errc::field_mismatch: return "field_mismatch";
    case Errc::index_out_of_range: return "index_out_of_range";
    case Errc::dimension_mismatch: return "dimension_mismatch";
    case Errc::not_a_subspace: return "not_a_subspace";
    case Errc::unsupported_degree: return "unsupported_degree";
    case Errc::out_of_range: return "out_of_range";
    case Errc::not_a_cocycle: return "not_a_cocycle";
    case Errc::parse_error: return "parse_error";
    case Errc::invalid_argument: return "invalid_argument";
  }
  return "unknown";
}

}  // namespace hcoh

namespace hcoh::gf {

struct Field::Tables {
  int p = 0;
  int k = 0;
  int q = 0;
  std::vector<int> modulus;
  std::vector<Elem> add, mul, neg, inv, frob;
};

bool is_prime(int p) noexcept {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

namespace {

using Poly = std::vector<int>;  // constant term first, coefficients mod p

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int inv_mod(int a, int p) {
  int r = 1;
  for (int e = p - 2, b = a % p; e > 0; e >>= 1, b = b * b % p)
    if (e & 1) r = r * b % p;
  return r;
}

// Remainder of a modulo b over GF(p); b nonzero.
Poly poly_mod(Poly a, const Poly& b, int p) {
  trim(a);
  const int db = static_cast<int>(b.size()) - 1;
  const int lead_inv = inv_mod(b.back(), p);
  while (static_cast<int>(a.size()) - 1 >= db) {
    const int shift = static_cast<int>(a.size()) - 1 - db;
    const int c = a.back() * lead_inv % p;
    for (int i = 0; i <= db; ++i) a[shift + i] = ((a[shift + i] - c * b[i]) % p + p) % p;
    trim(a);
  }
  return a;
}

Poly decode(int code, int p, int len) {
  Poly r(len);
  for (int i = 0; i < len; ++i, code /= p) r[i] = code % p;
  return r;
}

bool irreducible(const Poly& f, int p) {
  const int deg = static_cast<int>(f.size()) - 1;
  for (int d = 1; 2 * d <= deg; ++d) {
    int count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (int code = 0; code < count; ++code) {
      Poly g = decode(code, p, d);
      g.push_back(1);
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

// Non-leading coefficients enumerated in increasing base-p code, constant term
// as the least significant digit; the first irreducible hit is returned.
Poly least_irreducible(int p, int k) {
  if (k == 1) return {0, 1};
  int count = 1;
  for (int i = 0; i < k; ++i) count *= p;
  for (int code = 0; code < count; ++code) {
    Poly f = decode(code, p, k);
    f.push_back(1);
    if (irreducible(f, p)) return f;
  }
  throw Error(Errc::bad_degree, "no irreducible polynomial found");
}

}  // namespace

Field Field::make(int p, int k) {
  if (!is_prime(p)) throw Error(Errc::non_prime, "characteristic " + std::to_string(p) + " is not prime");
  if (k < 1) throw Error(Errc::bad_degree, "extension degree must be >= 1, got " + std::to_string(k));
  long long q = 1;
  for (int i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxOrder)
      throw Error(Errc::field_too_large, "field order " + std::to_string(p) + "^" + std::to_string(k) +
                                             " exceeds " + std::to_string(kMaxOrder));
  }
  auto t = std::make_shared<Tables>();
  t->p = p;
  t->k = k;
  t->q = static_cast<int>(q);
  t->modulus = least_irreducible(p, k);
  const int n = t->q;
  t->add.resize(static_cast<size_t>(n) * n);
  t->mul.resize(static_cast<size_t>(n) * n);
  t->neg.resize(n);
  t->inv.assign(n, 0);
  t->frob.resize(n);

  std::vector<Poly> el(n);
  for (int a = 0; a < n; ++a) el[a] = decode(a, p, k);
  auto encode = [&](const Poly& c) {
    int code = 0;
    for (int i = k - 1; i >= 0; --i) code = code * p + (i < static_cast<int>(c.size()) ? c[i] : 0);
    return static_cast<Elem>(code);
  };
  for (int a = 0; a < n; ++a) {
    Poly ng(k);
    for (int i = 0; i < k; ++i) ng[i] = (p - el[a][i]) % p;
    t->neg[a] = encode(ng);
    for (int b = 0; b < n; ++b) {
      Poly s(k);
      for (int i = 0; i < k; ++i) s[i] = (el[a][i] + el[b][i]) % p;
      t->add[static_cast<size_t>(a) * n + b] = encode(s);
      Poly prod(2 * k - 1, 0);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + el[a][i] * el[b][j]) % p;
      t->mul[static_cast<size_t>(a) * n + b] = encode(k == 1 ? prod : poly_mod(prod, t->modulus, p));
    }
  }
  for (int a = 1; a < n; ++a)
    for (int b = 1; b < n; ++b)
      if (t->mul[static_cast<size_t>(a) * n + b] == 1) {
        t->inv[a] = static_cast<Elem>(b);
        break;
      }
  for (int a = 0; a < n; ++a) {
    Elem r = 1;
    for (int i = 0; i < p; ++i) r = t->mul[static_cast<size_t>(r) * n + a];
    t->frob[a] = r;
  }
  return Field(std::move(t));
}

int Field::characteristic() const noexcept { return t_->p; }
int Field::degree() const noexcept { return t_->k; }
int Field::order() const noexcept { return t_->q; }
const std::vector<int>& Field::modulus() const noexcept { return t_->modulus; }
Elem Field::generator() const noexcept { return t_->k == 1 ? Elem{1} : static_cast<Elem>(t_->p); }

Elem Field::add(Elem a, Elem b) const noexcept { return t_->add[static_cast<size_t>(a) * t_->q + b]; }
Elem Field::sub(Elem a, Elem b) const noexcept { return add(a, t_->neg[b]); }
Elem Field::mul(Elem a, Elem b) const noexcept { return t_->mul[static_cast<size_t>(a) * t_->q + b]; }
Elem Field::neg(Elem a) const noexcept { return t_->neg[a]; }
const Elem* Field::mul_row(Elem a) const noexcept { return t_->mul.data() + static_cast<size_t>(a) * t_->q; }

Elem Field::inv(Elem a) const {
  if (a == 0) throw Error(Errc::zero_inverse, "inverse of zero");
  return t_->inv[a];
}

Elem Field::pow(Elem a, std::uint64_t e) const noexcept {
  Elem r = 1;
  for (; e > 0; e >>= 1, a = mul(a, a))
    if (e & 1) r = mul(r, a);
  return r;
}

Elem Field::frobenius(Elem a) const noexcept { return t_->frob[a]; }

Elem Field::from_int(long long v) const noexcept {
  const long long p = t_->p;
  return static_cast<Elem>(((v % p) + p) % p);
}

Elem Field::from_coeffs(std::span<const int> coeffs) const {
  if (static_cast<int>(coeffs.size()) != t_->k)
    throw Error(Errc::dimension_mismatch, "expected " + std::to_string(t_->k) + " coefficients, got " +
                                              std::to_string(coeffs.size()));
  int code = 0;
  for (int i = t_->k - 1; i >= 0; --i) {
    if (coeffs[i] < 0 || coeffs[i] >= t_->p)
      throw Error(Errc::out_of_range, "coefficient " + std::to_string(coeffs[i]) + " not reduced mod " +
                                          std::to_string(t_->p));
    code = code * t_->p + coeffs[i];
  }
  return static_cast<Elem>(code);
}

std::vector<int> Field::coeffs(Elem a) const { return decode(a, t_->p, t_->k); }

std::string Field::format(Elem a) const {
  const auto c = coeffs(a);
  if (t_->k == 1) return std::to_string(c[0]);
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < t_->k; ++i) {
    if (c[i] == 0) continue;
    if (!first) os << '+';
    first = false;
    if (i == 0) {
      os << c[i];
    } else {
      if (c[i] != 1) os << c[i] << '*';
      os << 't';
      if (i > 1) os << '^' << i;
    }
  }
  return first ? "0" : os.str();
}

Elem Field::parse(const std::string& text) const {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw Error(Errc::parse_error, "empty scalar");
  std::vector<int> c(t_->k, 0);
  size_t pos = 0;
  while (pos < s.size()) {
    int sgn = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sgn = s[pos] == '-' ? -1 : 1;
      ++pos;
    }
    long long coef = 1;
    bool have_num = false;
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      coef = 0;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        coef = coef * 10 + (s[pos++] - '0');
        if (coef > 1'000'000'000) throw Error(Errc::parse_error, "scalar literal too large: " + text);
      }
      have_num = true;
    }
    int exp = 0;
    if (pos < s.size() && s[pos] == '*') {
      if (!have_num) throw Error(Errc::parse_error, "malformed scalar: " + text);
      ++pos;
    }
    if (pos < s.size() && s[pos] == 't') {
      ++pos;
      exp = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
          throw Error(Errc::parse_error, "malformed exponent: " + text);
        exp = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) exp = exp * 10 + (s[pos++] - '0');
      }
    } else if (!have_num) {
      throw Error(Errc::parse_error, "malformed scalar: " + text);
    }
    if (exp >= t_->k) throw Error(Errc::parse_error, "power of t too large for GF(p^k): " + text);
    c[exp] = static_cast<int>(((c[exp] + sgn * (coef % t_->p)) % t_->p + t_->p) % t_->p);
    if (pos < s.size() && s[pos] != '+' && s[pos] != '-') throw Error(Errc::parse_error, "malformed scalar: " + text);
  }
  return from_coeffs(c);
}

bool operator==(const Field& a, const Field& b) noexcept {
  if (a.t_ == b.t_) return true;
  return a.t_->p == b.t_->p && a.t_->k == b.t_->k && a.t_->modulus == b.t_->modulus;
}

Scalar::Scalar(Field f, Elem v) : f_(std::move(f)), v_(v) {
  if (!f_.valid(v_)) throw Error(Errc::out_of_range, "element code out of range");
}

void Scalar::check_same(const Scalar& o) const {
  if (!(f_ == o.f_)) throw Error(Errc::field_mismatch, "operands belong to different fields");
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same(o);
  return {f_, f_.add(v_, o.v_)};
}
Scalar Scalar::operator-(const Scalar& o) const {
  check_same(o);
  return {f_, f_.sub(v_, o.v_)};
}
Scalar Scalar::operator*(const Scalar& o) const {
  check_same(o);
  return {f_, f_.mul(v_, o.v_)};
}

}  // namespace hcoh::gf
