#include "supchar/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

#include "supchar/error.hpp"

namespace supchar {

Rational ratio(long num, long den) {
  if (den == 0) throw InputError("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

Rational parse_rational(const std::string& text) {
  Rational r;
  if (text.empty() || r.set_str(text, 10) != 0) {
    throw InputError("not a rational number: '" + text + "'");
  }
  if (r.get_den() == 0) throw InputError("zero denominator: '" + text + "'");
  r.canonicalize();
  return r;
}

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<long> cyclotomic_polynomial(int n) {
  // x^n - 1 divided by Phi_d for every proper divisor d.
  std::vector<long> poly(n + 1, 0);
  poly[0] = -1;
  poly[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    auto divisor = cyclotomic_polynomial(d);
    const int dd = static_cast<int>(divisor.size()) - 1;
    const int pd = static_cast<int>(poly.size()) - 1;
    std::vector<long> quotient(pd - dd + 1, 0);
    for (int i = pd; i >= dd; --i) {
      long q = poly[i];  // divisor is monic
      quotient[i - dd] = q;
      for (int j = 0; j <= dd; ++j) poly[i - dd + j] -= q * divisor[j];
    }
    poly = std::move(quotient);
  }
  return poly;
}

namespace detail {

struct CyclotomicField {
  int n = 1;
  int degree = 1;
  // reduction[k] = coefficients of x^k mod Phi_n, for 0 <= k < n.
  std::vector<std::vector<long>> reduction;

  explicit CyclotomicField(int conductor) : n(conductor), degree(euler_phi(conductor)) {
    auto phi_poly = cyclotomic_polynomial(n);
    reduction.assign(n, std::vector<long>(degree, 0));
    for (int k = 0; k < std::min(n, degree); ++k) reduction[k][k] = 1;
    for (int k = degree; k < n; ++k) {
      const auto& prev = reduction[k - 1];
      auto& cur = reduction[k];
      long top = prev[degree - 1];
      for (int i = degree - 1; i >= 1; --i) cur[i] = prev[i - 1];
      cur[0] = 0;
      for (int i = 0; i < degree; ++i) cur[i] -= top * phi_poly[i];
    }
  }

  // Reduces a polynomial in x taken modulo x^n - 1 (size n) to the power basis.
  std::vector<Rational> reduce(const std::vector<Rational>& residues) const {
    std::vector<Rational> out(degree, 0);
    for (int k = 0; k < n; ++k) {
      if (residues[k] == 0) continue;
      const auto& row = reduction[k];
      for (int i = 0; i < degree; ++i) {
        if (row[i] != 0) out[i] += residues[k] * row[i];
      }
    }
    return out;
  }
};

const CyclotomicField* field_for(int n) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<CyclotomicField>> fields;
  std::lock_guard lock(mutex);
  auto& slot = fields[n];
  if (!slot) slot = std::make_unique<CyclotomicField>(n);
  return slot.get();
}

}  // namespace detail

namespace {

long positive_mod(long a, long n) {
  long r = a % n;
  return r < 0 ? r + n : r;
}

}  // namespace

Cyclotomic::Cyclotomic() : field_(detail::field_for(1)), coeffs_(1, 0) {}

Cyclotomic::Cyclotomic(long value) : field_(detail::field_for(1)), coeffs_(1, value) {}

Cyclotomic::Cyclotomic(const Rational& value, int conductor)
    : field_(detail::field_for(conductor)), coeffs_(field_->degree, 0) {
  coeffs_[0] = value;
}

Cyclotomic::Cyclotomic(const detail::CyclotomicField* field, std::vector<Rational> coeffs)
    : field_(field), coeffs_(std::move(coeffs)) {}

Cyclotomic Cyclotomic::zeta(int n, long power) {
  if (n < 1) throw InputError("cyclotomic conductor must be positive");
  const auto* field = detail::field_for(n);
  const auto& row = field->reduction[positive_mod(power, n)];
  return Cyclotomic(field, std::vector<Rational>(row.begin(), row.end()));
}

Cyclotomic Cyclotomic::from_exponent_counts(int n, std::span<const long> counts) {
  if (n < 1 || static_cast<int>(counts.size()) != n) {
    throw InputError("exponent count vector must have length equal to the conductor");
  }
  const auto* field = detail::field_for(n);
  std::vector<Rational> out(field->degree, 0);
  for (int k = 0; k < n; ++k) {
    if (counts[k] == 0) continue;
    const auto& row = field->reduction[k];
    for (int i = 0; i < field->degree; ++i) out[i] += row[i] * counts[k];
  }
  return Cyclotomic(field, std::move(out));
}

int Cyclotomic::conductor() const { return field_->n; }

Cyclotomic Cyclotomic::lifted(int m) const {
  const int n = field_->n;
  if (m == n) return *this;
  if (m < 1 || m % n != 0) throw InputError("lift target must be a multiple of the conductor");
  const auto* target = detail::field_for(m);
  const int step = m / n;
  std::vector<Rational> residues(m, 0);
  for (int i = 0; i < field_->degree; ++i) residues[(i * step) % m] += coeffs_[i];
  return Cyclotomic(target, target->reduce(residues));
}

Cyclotomic Cyclotomic::conj() const {
  const int n = field_->n;
  std::vector<Rational> residues(n, 0);
  for (int i = 0; i < field_->degree; ++i) residues[(n - i) % n] += coeffs_[i];
  return Cyclotomic(field_, field_->reduce(residues));
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

std::optional<Rational> Cyclotomic::as_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return std::nullopt;
  }
  return coeffs_[0];
}

void Cyclotomic::align_with(Cyclotomic& other) {
  if (field_ == other.field_) return;
  const int m = std::lcm(field_->n, other.field_->n);
  if (field_->n != m) *this = lifted(m);
  if (other.field_->n != m) other = other.lifted(m);
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& other) {
  if (field_ == other.field_) {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    return *this;
  }
  Cyclotomic rhs = other;
  align_with(rhs);
  return *this += rhs;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& other) { return *this += -other; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& other) {
  if (field_ != other.field_) {
    Cyclotomic rhs = other;
    align_with(rhs);
    return *this *= rhs;
  }
  const int n = field_->n;
  const int d = field_->degree;
  std::vector<Rational> residues(n, 0);
  for (int i = 0; i < d; ++i) {
    if (coeffs_[i] == 0) continue;
    for (int j = 0; j < d; ++j) {
      if (other.coeffs_[j] == 0) continue;
      residues[(i + j) % n] += coeffs_[i] * other.coeffs_[j];
    }
  }
  coeffs_ = field_->reduce(residues);
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

Cyclotomic& Cyclotomic::operator/=(const Rational& scalar) {
  if (scalar == 0) throw InputError("division of a cyclotomic by zero");
  for (auto& c : coeffs_) c /= scalar;
  return *this;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.field_ == b.field_) return a.coeffs_ == b.coeffs_;
  Cyclotomic x = a, y = b;
  x.align_with(y);
  return x.coeffs_ == y.coeffs_;
}

std::strong_ordering operator<=>(const Cyclotomic& a, const Cyclotomic& b) {
  Cyclotomic x = a, y = b;
  x.align_with(y);
  for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
    int c = cmp(x.coeffs_[i], y.coeffs_[i]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string Cyclotomic::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    std::string power;
    if (i == 1) {
      power = "z" + std::to_string(field_->n);
    } else if (i > 1) {
      power = "z" + std::to_string(field_->n) + "^" + std::to_string(i);
    }
    std::string coeff = c.get_str();
    if (coeff[0] != '-' && !first) out << '+';
    if (power.empty()) {
      out << coeff;
    } else if (c == 1) {
      out << power;
    } else if (c == -1) {
      out << '-' << power;
    } else {
      out << coeff << '*' << power;
    }
    first = false;
  }
  if (first) return "0";
  return out.str();
}

}  // namespace supchar
