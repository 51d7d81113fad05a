#include "scalar.hpp"

#include <vector>

namespace mhd {

namespace {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

}  // namespace

Field Field::prime(std::uint64_t q) {
  if (!is_prime(q)) throw ConfigError("field modulus must be prime, got " + std::to_string(q));
  return Field{q};
}

std::string Field::str() const {
  return p == 0 ? std::string("Q") : "F" + std::to_string(p);
}

Scalar::Scalar(const Field& f, std::int64_t n) : f_(f) {
  if (f_.p) {
    std::int64_t m = n % static_cast<std::int64_t>(f_.p);
    if (m < 0) m += static_cast<std::int64_t>(f_.p);
    r_ = static_cast<std::uint64_t>(m);
  } else {
    q_ = n;
  }
}

Scalar::Scalar(const Field& f, const mpq_class& q) : f_(f) {
  if (f_.p) {
    mpq_class c = q;
    c.canonicalize();
    mpz_class num = c.get_num() % static_cast<long>(f_.p);
    mpz_class den = c.get_den() % static_cast<long>(f_.p);
    std::int64_t n = num.get_si(), d = den.get_si();
    if (n < 0) n += static_cast<std::int64_t>(f_.p);
    if (d < 0) d += static_cast<std::int64_t>(f_.p);
    if (d == 0) throw DomainError("denominator vanishes in F" + std::to_string(f_.p));
    r_ = mulmod(static_cast<std::uint64_t>(n),
                powmod(static_cast<std::uint64_t>(d), f_.p - 2, f_.p), f_.p);
  } else {
    q_ = q;
    q_.canonicalize();
  }
}

Scalar Scalar::parse(const Field& f, const std::string& s) {
  try {
    return Scalar(f, mpq_class(s));
  } catch (const std::invalid_argument&) {
    throw ConfigError("cannot parse scalar '" + s + "'");
  }
}

bool Scalar::is_zero() const { return f_.p ? r_ == 0 : q_ == 0; }
bool Scalar::is_one() const { return f_.p ? r_ == 1 % f_.p : q_ == 1; }

Scalar Scalar::operator+(const Scalar& o) const {
  if (f_.p) {
    Scalar s(f_, 0);
    s.r_ = (r_ + o.r_) % f_.p;
    return s;
  }
  return Scalar(f_, mpq_class(q_ + o.q_));
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  if (f_.p) {
    Scalar s(f_, 0);
    s.r_ = mulmod(r_, o.r_, f_.p);
    return s;
  }
  return Scalar(f_, mpq_class(q_ * o.q_));
}

Scalar Scalar::operator-() const {
  if (f_.p) {
    Scalar s(f_, 0);
    s.r_ = r_ ? f_.p - r_ : 0;
    return s;
  }
  return Scalar(f_, mpq_class(-q_));
}

Scalar Scalar::inv() const {
  if (is_zero()) throw DomainError("inverse of zero");
  if (f_.p) {
    Scalar s(f_, 0);
    s.r_ = powmod(r_, f_.p - 2, f_.p);
    return s;
  }
  return Scalar(f_, mpq_class(1 / q_));
}

Scalar Scalar::pow(std::int64_t e) const {
  Scalar base = e < 0 ? inv() : *this;
  std::uint64_t k = e < 0 ? static_cast<std::uint64_t>(-(e + 1)) + 1
                          : static_cast<std::uint64_t>(e);
  Scalar acc = one(f_);
  while (k) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

bool Scalar::operator==(const Scalar& o) const {
  if (!(f_ == o.f_)) return false;
  return f_.p ? r_ == o.r_ : q_ == o.q_;
}

std::string Scalar::str() const {
  return f_.p ? std::to_string(r_) : q_.get_str();
}

Scalar qint(const Scalar& q, std::int64_t n) {
  Scalar acc = Scalar::zero(q.field());
  Scalar qe = Scalar::one(q.field());
  for (std::int64_t j = 0; j < n; ++j) {
    acc += qe;
    qe = qe * q;
  }
  return acc;
}

Scalar qfact(const Scalar& q, std::int64_t n) {
  Scalar acc = Scalar::one(q.field());
  for (std::int64_t j = 1; j <= n; ++j) acc = acc * qint(q, j);
  return acc;
}

Scalar qbinom(const Scalar& q, std::int64_t n, std::int64_t k) {
  if (q.is_zero()) throw DomainError("q-binomial at q = 0");
  if (n < 0) throw DomainError("q-binomial with negative n");
  if (k < 0 || k > n) return Scalar::zero(q.field());
  // row by row: [n,k] = [n-1,k-1] + q^k [n-1,k]
  std::vector<Scalar> row(1, Scalar::one(q.field()));
  for (std::int64_t r = 1; r <= n; ++r) {
    std::vector<Scalar> next;
    next.reserve(r + 1);
    for (std::int64_t j = 0; j <= r; ++j) {
      Scalar v = Scalar::zero(q.field());
      if (j > 0) v += row[j - 1];
      if (j < r) v += q.pow(j) * row[j];
      next.push_back(v);
    }
    row = std::move(next);
  }
  return row[k];
}

Scalar find_root_of_unity(const Field& f, std::int64_t m) {
  if (m < 1) throw DomainError("root order must be positive");
  auto has_order = [&](const Scalar& x) {
    if (x.is_zero()) return false;
    if (!x.pow(m).is_one()) return false;
    for (std::int64_t d = 1; d < m; ++d)
      if (m % d == 0 && x.pow(d).is_one()) return false;
    return true;
  };
  if (f.p == 0) {
    if (m == 1) return Scalar::one(f);
    if (m == 2) return Scalar(f, -1);
    throw DomainError("rationals have no primitive root of unity of order " + std::to_string(m));
  }
  for (std::uint64_t c = 1; c < f.p; ++c) {
    Scalar x(f, static_cast<std::int64_t>(c));
    if (has_order(x)) return x;
  }
  throw DomainError("F" + std::to_string(f.p) + " has no element of order " + std::to_string(m));
}

}  // namespace mhd
