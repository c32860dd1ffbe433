#include "bhc/exactnum.hpp"

#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <sstream>

namespace bhc {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::ok: return "Ok";
    case Errc::division_by_zero: return "DivisionByZero";
    case Errc::field_mismatch: return "FieldMismatch";
    case Errc::space_mismatch: return "SpaceMismatch";
    case Errc::object_not_in_category: return "ObjectNotInCategory";
    case Errc::not_a_morphism: return "NotAMorphism";
    case Errc::precondition_failed: return "PreconditionFailed";
    case Errc::host_mismatch: return "HostMismatch";
    case Errc::induced_map_undefined: return "InducedMapUndefined";
    case Errc::restriction_undefined: return "RestrictionUndefined";
    case Errc::degree_out_of_range: return "DegreeOutOfRange";
    case Errc::calibration_failed: return "CalibrationFailed";
    case Errc::unsupported_mode: return "UnsupportedMode";
    case Errc::truncation_overflow: return "TruncationOverflow";
    case Errc::truncation_too_small: return "TruncationTooSmall";
    case Errc::unknown_name: return "UnknownName";
    case Errc::verification_failed: return "VerificationFailed";
    case Errc::parse_error: return "ParseError";
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::io_error: return "IoError";
    case Errc::cap_exceeded: return "CapExceeded";
    case Errc::internal: return "Internal";
  }
  return "Unknown";
}

namespace detail {

struct FieldData {
  unsigned order = 1;  // 0 marks the rationals
  std::vector<mpz_class> modulus;
};

namespace {

using IntPoly = std::vector<mpz_class>;

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
  IntPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

// Exact division by a monic polynomial.
IntPoly poly_div_monic(IntPoly num, const IntPoly& den) {
  const std::size_t dd = den.size() - 1;
  IntPoly q(num.size() - dd, 0);
  for (std::size_t k = num.size(); k-- > dd;) {
    mpz_class c = num[k];
    q[k - dd] = c;
    for (std::size_t i = 0; i <= dd; ++i) num[k - dd + i] -= c * den[i];
  }
  for (std::size_t i = 0; i < dd; ++i)
    if (num[i] != 0) throw Error(Errc::internal, "cyclotomic polynomial division left a remainder");
  return q;
}

int mobius(unsigned n) {
  int mu = 1;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      mu = -mu;
    }
  }
  if (n > 1) mu = -mu;
  return mu;
}

// Phi_n = prod_{d | n} (x^d - 1)^{mu(n/d)}
IntPoly cyclotomic_polynomial(unsigned n) {
  IntPoly num{1}, den{1};
  for (unsigned d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    int mu = mobius(n / d);
    if (mu == 0) continue;
    IntPoly f(d + 1, 0);
    f[0] = -1;
    f[d] = 1;
    if (mu > 0)
      num = poly_mul(num, f);
    else
      den = poly_mul(den, f);
  }
  // den is monic up to sign: a product of (x^d - 1) is monic.
  return poly_div_monic(num, den);
}

const FieldData* field_registry(unsigned order) {
  static std::mutex mutex;
  static std::map<unsigned, std::unique_ptr<FieldData>> fields;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = fields[order];
  if (!slot) {
    slot = std::make_unique<FieldData>();
    slot->order = order;
    if (order == 0)
      slot->modulus = {mpz_class(0), mpz_class(1)};  // x, so constants only
    else
      slot->modulus = cyclotomic_polynomial(order);
  }
  return slot.get();
}

}  // namespace
}  // namespace detail

Field::Field() : data_(detail::field_registry(0)) {}

Field Field::rational() { return Field(); }

Field Field::cyclotomic(unsigned n) {
  if (n == 0) throw Error(Errc::invalid_argument, "cyclotomic order must be positive");
  return Field(detail::field_registry(n));
}

Field Field::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s == "rational" || s == "Q") return rational();
  auto parse_order = [&](std::string_view digits) -> unsigned {
    if (digits.empty()) throw Error(Errc::parse_error, "bad field descriptor '" + std::string(text) + "'");
    unsigned n = 0;
    for (char c : digits) {
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw Error(Errc::parse_error, "bad field descriptor '" + std::string(text) + "'");
      n = n * 10 + static_cast<unsigned>(c - '0');
    }
    return n;
  };
  const std::string_view sv(s);
  if (sv.starts_with("cyclotomic(") && sv.ends_with(")"))
    return cyclotomic(parse_order(sv.substr(11, sv.size() - 12)));
  if (sv.starts_with("cyclotomic:")) return cyclotomic(parse_order(sv.substr(11)));
  throw Error(Errc::parse_error, "bad field descriptor '" + std::string(text) + "'");
}

bool Field::is_rational() const noexcept { return data_->order == 0; }
unsigned Field::order() const noexcept { return data_->order == 0 ? 1 : data_->order; }
unsigned Field::degree() const noexcept { return static_cast<unsigned>(data_->modulus.size() - 1); }
const std::vector<mpz_class>& Field::modulus() const noexcept { return data_->modulus; }

bool Field::contains_root_of_unity(unsigned m) const noexcept {
  if (m == 1 || m == 2) return true;
  if (is_rational()) return false;
  const unsigned n = order();
  return n % m == 0 || (n % 2 == 1 && (2 * n) % m == 0);
}

std::string Field::name() const {
  return is_rational() ? std::string("rational") : "cyclotomic(" + std::to_string(order()) + ")";
}

// --- Scalar ---------------------------------------------------------------

Scalar::Scalar(Field f, long value) : field_(f) {
  if (value != 0) coeffs_.emplace_back(value);
}

Scalar::Scalar(Field f, const mpq_class& value) : field_(f) {
  if (value != 0) {
    coeffs_.push_back(value);
    coeffs_.back().canonicalize();
  }
}

Scalar embed_rational(const mpq_class& q, Field f) { return Scalar(f, q); }

void Scalar::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

void Scalar::check_same_field(const Scalar& other) const {
  if (field_ != other.field_)
    throw Error(Errc::field_mismatch, "scalar fields differ: " + field_.name() + " vs " + other.field_.name());
}

bool Scalar::is_one() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == 1; }

std::optional<mpq_class> Scalar::as_rational() const {
  if (coeffs_.empty()) return mpq_class(0);
  if (coeffs_.size() == 1) return coeffs_[0];
  return std::nullopt;
}

Scalar& Scalar::operator+=(const Scalar& other) {
  check_same_field(other);
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), mpq_class(0));
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) {
  check_same_field(other);
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), mpq_class(0));
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Scalar& Scalar::operator*=(const Scalar& other) {
  check_same_field(other);
  if (coeffs_.empty()) return *this;
  if (other.coeffs_.empty()) {
    coeffs_.clear();
    return *this;
  }
  if (coeffs_.size() == 1 && other.coeffs_.size() == 1) {
    coeffs_[0] *= other.coeffs_[0];
    return *this;
  }
  std::vector<mpq_class> prod(coeffs_.size() + other.coeffs_.size() - 1, mpq_class(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) prod[i + j] += coeffs_[i] * other.coeffs_[j];
  }
  const auto& mod = field_.modulus();
  const std::size_t deg = mod.size() - 1;
  for (std::size_t k = prod.size(); k-- > deg;) {
    if (prod[k] == 0) continue;
    const mpq_class c = prod[k];
    for (std::size_t i = 0; i <= deg; ++i)
      if (mod[i] != 0) prod[k - deg + i] -= c * mpq_class(mod[i]);
  }
  if (prod.size() > deg) prod.resize(deg);
  coeffs_ = std::move(prod);
  trim();
  return *this;
}

Scalar Scalar::inv() const {
  if (coeffs_.empty()) throw Error(Errc::division_by_zero, "inverse of zero");
  if (coeffs_.size() == 1) {
    Scalar r(field_);
    r.coeffs_.push_back(1 / coeffs_[0]);
    r.coeffs_[0].canonicalize();
    return r;
  }
  // Solve (multiplication-by-this) * b = e_0 over Q.
  const std::size_t d = field_.degree();
  std::vector<std::vector<mpq_class>> a(d, std::vector<mpq_class>(d + 1, mpq_class(0)));
  Scalar power(field_, 1L);
  Scalar z(field_);
  z.coeffs_ = {mpq_class(0), mpq_class(1)};
  z.trim();
  for (std::size_t j = 0; j < d; ++j) {
    Scalar col = *this * power;
    for (std::size_t i = 0; i < col.coeffs_.size(); ++i) a[i][j] = col.coeffs_[i];
    power *= z;
  }
  a[0][d] = 1;
  for (std::size_t c = 0; c < d; ++c) {
    std::size_t p = c;
    while (p < d && a[p][c] == 0) ++p;
    if (p == d) throw Error(Errc::internal, "singular multiplication matrix in cyclotomic inverse");
    std::swap(a[p], a[c]);
    const mpq_class pivot = a[c][c];
    for (std::size_t k = c; k <= d; ++k) a[c][k] /= pivot;
    for (std::size_t r = 0; r < d; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const mpq_class f = a[r][c];
      for (std::size_t k = c; k <= d; ++k) a[r][k] -= f * a[c][k];
    }
  }
  Scalar r(field_);
  r.coeffs_.resize(d);
  for (std::size_t i = 0; i < d; ++i) {
    r.coeffs_[i] = a[i][d];
    r.coeffs_[i].canonicalize();
  }
  r.trim();
  return r;
}

bool operator==(const Scalar& a, const Scalar& b) {
  return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
}

Scalar Scalar::root_of_unity(Field f, unsigned m, long k) {
  if (m == 0 || !f.contains_root_of_unity(m))
    throw Error(Errc::field_mismatch, "field " + f.name() + " has no primitive " + std::to_string(m) + "-th root of unity");
  const long mm = static_cast<long>(m);
  k = ((k % mm) + mm) % mm;
  if (m == 1 || k == 0) return Scalar(f, 1L);
  if (m == 2) return Scalar(f, -1L);
  const unsigned n = f.order();
  // zeta_m = z^(n/m), or for odd n and even m: zeta_2n = -z^((n+1)/2).
  Scalar zm(f);
  Scalar z(f);
  z.coeffs_ = {mpq_class(0), mpq_class(1)};
  z.trim();
  auto power = [&](Scalar base, unsigned e) {
    Scalar r(f, 1L);
    while (e) {
      if (e & 1U) r *= base;
      base *= base;
      e >>= 1U;
    }
    return r;
  };
  if (n % m == 0)
    zm = power(z, n / m);
  else {
    Scalar zeta2n = -power(z, (n + 1) / 2);
    zm = power(zeta2n, (2 * n) / m);
  }
  return power(zm, static_cast<unsigned>(k));
}

namespace {

mpq_class parse_rational(std::string_view s, std::string_view whole) {
  if (s.empty()) throw Error(Errc::parse_error, "empty coefficient in scalar literal '" + std::string(whole) + "'");
  for (char c : s)
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/'))
      throw Error(Errc::parse_error, "bad coefficient '" + std::string(s) + "' in scalar literal '" + std::string(whole) + "'");
  mpq_class q;
  if (q.set_str(std::string(s), 10) != 0 || q.get_den() == 0)
    throw Error(Errc::parse_error, "bad coefficient '" + std::string(s) + "' in scalar literal '" + std::string(whole) + "'");
  q.canonicalize();
  return q;
}

}  // namespace

Scalar Scalar::parse(Field f, std::string_view literal) {
  std::string s;
  for (char c : literal)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw Error(Errc::parse_error, "empty scalar literal");

  Scalar result(f);
  std::size_t pos = 0;
  bool first = true;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!first) {
      throw Error(Errc::parse_error, "expected '+' or '-' in scalar literal '" + std::string(literal) + "'");
    }
    first = false;
    std::size_t end = pos;
    while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
    std::string_view term(s.data() + pos, end - pos);
    pos = end;
    if (term.empty()) throw Error(Errc::parse_error, "dangling sign in scalar literal '" + std::string(literal) + "'");

    mpq_class coeff(1);
    long exponent = 0;
    const auto zpos = term.find('z');
    if (zpos == std::string_view::npos) {
      coeff = parse_rational(term, literal);
    } else {
      if (f.is_rational())
        throw Error(Errc::parse_error, "'z' is not available over the rationals: '" + std::string(literal) + "'");
      std::string_view head = term.substr(0, zpos);
      std::string_view tail = term.substr(zpos + 1);
      if (!head.empty()) {
        if (head.back() != '*') throw Error(Errc::parse_error, "expected '*' before z in '" + std::string(literal) + "'");
        coeff = parse_rational(head.substr(0, head.size() - 1), literal);
      }
      exponent = 1;
      if (!tail.empty()) {
        if (tail[0] != '^' || tail.size() < 2)
          throw Error(Errc::parse_error, "bad exponent in scalar literal '" + std::string(literal) + "'");
        exponent = 0;
        for (char c : tail.substr(1)) {
          if (!std::isdigit(static_cast<unsigned char>(c)))
            throw Error(Errc::parse_error, "bad exponent in scalar literal '" + std::string(literal) + "'");
          exponent = exponent * 10 + (c - '0');
        }
      }
    }
    Scalar t = exponent == 0 ? Scalar(f, mpq_class(coeff)) : Scalar(f, mpq_class(coeff)) * root_of_unity(f, f.order(), exponent);
    if (sign < 0) t = -t;
    result += t;
  }
  return result;
}

std::string Scalar::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const mpq_class& c = coeffs_[i];
    if (c == 0) continue;
    mpq_class mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << '*';
      os << 'z';
      if (i > 1) os << '^' << i;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace bhc
