#include "ordalg/quadratic.hpp"

#include "ordalg/error.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>

namespace ordalg {

namespace {

using I128 = __int128;

constexpr Int kRootScanLimit = 10'000'000;
constexpr Int kUnitSearchLimit = 1'000'000;

Int narrow(I128 v) {
  if (v > std::numeric_limits<Int>::max() || v < std::numeric_limits<Int>::min())
    throw ArithmeticOverflow("intermediate value exceeds 64 bits");
  return static_cast<Int>(v);
}

I128 iabs(I128 v) { return v < 0 ? -v : v; }

I128 gcd128(I128 a, I128 b) {
  a = iabs(a);
  b = iabs(b);
  while (b != 0) {
    I128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

I128 lcm128(I128 a, I128 b) { return a / gcd128(a, b) * b; }

/// g = s*a + t*b with g = gcd(a, b) >= 0.
void ext_gcd(I128 a, I128 b, I128 &g, I128 &s, I128 &t) {
  I128 r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (r1 != 0) {
    I128 q = r0 / r1;
    I128 tmp = r0 - q * r1; r0 = r1; r1 = tmp;
    tmp = s0 - q * s1; s0 = s1; s1 = tmp;
    tmp = t0 - q * t1; t0 = t1; t1 = tmp;
  }
  if (r0 < 0) { r0 = -r0; s0 = -s0; t0 = -t0; }
  g = r0; s = s0; t = t0;
}

I128 floor_mod(I128 a, I128 m) {
  I128 r = a % m;
  return r < 0 ? r + m : r;
}

Int isqrt(I128 n) {
  if (n <= 0) return 0;
  auto r = static_cast<I128>(std::sqrt(static_cast<long double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return narrow(r);
}

using Vec = std::pair<I128, I128>;

/// Integer lattice Z(a,0) + Z(b,c) scaled by 1/den; not necessarily an ideal.
struct Lat {
  I128 a = 0, b = 0, c = 0, den = 1;
};

Lat lat_from_vectors(const std::vector<Vec> &vecs, I128 den) {
  Lat L;
  L.den = den;
  for (auto [x, y] : vecs) {
    if (y != 0) {
      I128 g, s, t;
      ext_gcd(L.c, y, g, s, t);
      I128 rest = (y / g) * L.b - (L.c / g) * x;
      L.b = s * L.b + t * x;
      L.c = g;
      L.a = gcd128(L.a, rest);
    } else {
      L.a = gcd128(L.a, x);
    }
    if (L.a != 0) L.b = floor_mod(L.b, L.a);
  }
  if (L.a == 0 && L.c == 0) throw ZeroIdeal("module generated by zero");
  if (L.a == 0 || L.c == 0) throw InvariantViolation("module has rank below 2");
  I128 g = gcd128(gcd128(L.a, L.b), gcd128(L.c, L.den));
  L.a /= g; L.b /= g; L.c /= g; L.den /= g;
  return L;
}

bool lat_member(const Lat &L, I128 x, I128 y) {
  if (y % L.c != 0) return false;
  I128 k = y / L.c;
  return (x - k * L.b) % L.a == 0;
}

std::vector<Vec> lat_vectors(const Lat &L, I128 to_den) {
  I128 f = to_den / L.den;
  return {{L.a * f, 0}, {L.b * f, L.c * f}};
}

/// {v : v.w in Z for all w in L} with respect to the coordinate pairing.
Lat lat_dual(const Lat &L) {
  I128 det = L.a * L.c;
  return lat_from_vectors({{L.den * L.c, -L.den * L.b}, {0, L.den * L.a}}, det);
}

Lat lat_sum(const Lat &X, const Lat &Y) {
  I128 den = lcm128(X.den, Y.den);
  auto v = lat_vectors(X, den);
  auto w = lat_vectors(Y, den);
  v.insert(v.end(), w.begin(), w.end());
  return lat_from_vectors(v, den);
}

Lat lat_of(const FractionalIdeal &I) { return {I.a(), I.b(), I.c(), I.den()}; }

/// (x + y w)(p + q w)
Vec mul_vec(const QuadraticRing &R, I128 x, I128 y, I128 p, I128 q) {
  return {x * p + R.c0() * y * q, x * q + y * p + R.t() * y * q};
}

void same_ring(const FractionalIdeal &I, const FractionalIdeal &J) {
  if (!(I.ring() == J.ring()))
    throw RingMismatch(I.ring().id() + " vs " + J.ring().id());
}

std::string render_coeffs(I128 a, I128 b) {
  std::ostringstream os;
  auto A = narrow(a), B = narrow(b);
  if (B == 0) {
    os << A;
    return os.str();
  }
  if (A != 0) os << A << (B > 0 ? "+" : "-");
  else if (B < 0) os << '-';
  Int mag = B < 0 ? -B : B;
  if (mag != 1) os << mag;
  os << 'w';
  return os.str();
}

bool is_squarefree(Int d) {
  I128 n = iabs(d);
  for (I128 p = 2; p * p <= n; ++p)
    if (n % (p * p) == 0) return false;
  return true;
}

long double omega_real(const QuadraticRing &R) {
  long double s = std::sqrt(static_cast<long double>(R.d()));
  return R.t() == 1 ? (1 + s) / 2 : s;
}

} // namespace

// ---- ring

QuadraticRing::QuadraticRing(Int d, OrderForm form) : d_(d), form_(form) {
  if (d == 0 || d == 1) throw SchemaError("d must differ from 0 and 1");
  if (!is_squarefree(d)) throw SchemaError("d = " + std::to_string(d) + " is not squarefree");
  bool one_mod_four = floor_mod(d, 4) == 1;
  if (one_mod_four && form == OrderForm::Maximal) {
    t_ = 1;
    c0_ = (d - 1) / 4;
  } else {
    t_ = 0;
    c0_ = d;
    conductor_ = one_mod_four ? 2 : 1;
  }
}

QuadraticRing QuadraticRing::parse(const std::string &text) {
  std::string s = text;
  if (s.rfind("d=", 0) == 0) s = s.substr(2);
  OrderForm form = OrderForm::Maximal;
  auto colon_pos = s.find(':');
  if (colon_pos != std::string::npos) {
    std::string f = s.substr(colon_pos + 1);
    s = s.substr(0, colon_pos);
    if (f == "sqrt" || f == "sqrt_order") form = OrderForm::SqrtOrder;
    else if (f != "maximal") throw SchemaError("unknown order form '" + f + "'");
  }
  Int d = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), d);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw SchemaError("cannot parse ring '" + text + "'");
  return QuadraticRing(d, form);
}

std::string QuadraticRing::id() const {
  std::string s = "d=" + std::to_string(d_);
  if (conductor_ != 1) s += ":sqrt";
  return s;
}

// ---- elements

Int norm(const QuadraticRing &R, const RingElement &x) {
  I128 a = x.a, b = x.b;
  return narrow(a * a + R.t() * a * b - R.c0() * b * b);
}

RingElement mul(const QuadraticRing &R, const RingElement &x, const RingElement &y) {
  auto [p, q] = mul_vec(R, x.a, x.b, y.a, y.b);
  return {narrow(p), narrow(q)};
}

RingElement conj(const QuadraticRing &R, const RingElement &x) {
  return {narrow(static_cast<I128>(x.a) + static_cast<I128>(R.t()) * x.b), -x.b};
}

bool is_unit(const QuadraticRing &R, const RingElement &x) {
  Int n = norm(R, x);
  return n == 1 || n == -1;
}

std::string render(const RingElement &x) { return render_coeffs(x.a, x.b); }

bool element_less(const QuadraticRing &R, const RingElement &x, const RingElement &y) {
  Int nx = norm(R, x), ny = norm(R, y);
  if (nx < 0) nx = -nx;
  if (ny < 0) ny = -ny;
  if (nx != ny) return nx < ny;
  return x < y;
}

RingElement parse_ring_element(const std::string &text) {
  std::string s;
  for (char ch : text)
    if (ch != ' ') s += ch;
  if (s.empty()) throw SchemaError("empty ring element");
  RingElement out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    }
    Int coeff = 1;
    bool has_digits = false;
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      auto [ptr, ec] = std::from_chars(s.data() + pos, s.data() + s.size(), coeff);
      if (ec != std::errc{}) throw SchemaError("cannot parse ring element '" + text + "'");
      pos = static_cast<std::size_t>(ptr - s.data());
      has_digits = true;
    }
    if (pos < s.size() && s[pos] == '*') ++pos;
    if (pos < s.size() && s[pos] == 'w') {
      out.b += sign * coeff;
      ++pos;
    } else if (has_digits) {
      out.a += sign * coeff;
    } else {
      throw SchemaError("cannot parse ring element '" + text + "'");
    }
  }
  return out;
}

// ---- ideals

FractionalIdeal FractionalIdeal::from_lattice(const QuadraticRing &R,
                                              const std::vector<std::pair<Int, Int>> &vecs,
                                              Int den) {
  if (den <= 0) throw InvariantViolation("denominator must be positive");
  std::vector<Vec> v;
  v.reserve(vecs.size());
  for (auto [x, y] : vecs) v.emplace_back(x, y);
  Lat L = lat_from_vectors(v, den);
  auto [p, q] = mul_vec(R, L.b, L.c, 0, 1);
  if (!lat_member(L, 0, L.a) || !lat_member(L, p, q))
    throw InvariantViolation("module is not closed under multiplication by w");
  return FractionalIdeal(R, narrow(L.a), narrow(L.b), narrow(L.c), narrow(L.den));
}

FractionalIdeal FractionalIdeal::from_hermite(const QuadraticRing &R, Int a, Int b, Int c,
                                              Int den) {
  if (a <= 0 || c <= 0 || den <= 0 || b < 0 || b >= a)
    throw InvariantViolation("not a reduced Hermite form");
  FractionalIdeal I = from_lattice(R, {{a, 0}, {b, c}}, den);
  if (I.a_ != a || I.b_ != b || I.c_ != c || I.den_ != den)
    throw InvariantViolation("Hermite form is not reduced");
  return I;
}

FractionalIdeal FractionalIdeal::from_generators(const QuadraticRing &R,
                                                 const std::vector<FieldElement> &gens) {
  if (gens.empty()) throw ZeroIdeal("no generators");
  I128 den = 1;
  for (const auto &g : gens) {
    if (g.den <= 0) throw SchemaError("generator denominator must be positive");
    den = lcm128(den, g.den);
  }
  std::vector<Vec> vecs;
  for (const auto &g : gens) {
    I128 f = den / g.den;
    I128 x = g.a * f, y = g.b * f;
    vecs.emplace_back(x, y);
    vecs.push_back(mul_vec(R, x, y, 0, 1));
  }
  Lat L = lat_from_vectors(vecs, den);
  return FractionalIdeal(R, narrow(L.a), narrow(L.b), narrow(L.c), narrow(L.den));
}

FractionalIdeal FractionalIdeal::from_generators(const QuadraticRing &R,
                                                 const std::vector<RingElement> &gens) {
  std::vector<FieldElement> f;
  f.reserve(gens.size());
  for (const auto &g : gens) f.push_back({g.a, g.b, 1});
  return from_generators(R, f);
}

FractionalIdeal FractionalIdeal::principal(const QuadraticRing &R, const RingElement &x) {
  return from_generators(R, std::vector<RingElement>{x});
}

FractionalIdeal FractionalIdeal::unit(const QuadraticRing &R) {
  return FractionalIdeal(R, 1, 0, 1, 1);
}

std::vector<FieldElement> FractionalIdeal::z_basis() const {
  return {{a_, 0, den_}, {b_, c_, den_}};
}

Rational FractionalIdeal::norm() const {
  I128 num = static_cast<I128>(a_) * c_;
  I128 den = static_cast<I128>(den_) * den_;
  I128 g = gcd128(num, den);
  return {narrow(num / g), narrow(den / g)};
}

bool FractionalIdeal::contains(const FieldElement &x) const {
  I128 X = static_cast<I128>(x.a) * den_, Y = static_cast<I128>(x.b) * den_;
  if (X % x.den != 0 || Y % x.den != 0) return false;
  return lat_member(lat_of(*this), X / x.den, Y / x.den);
}

bool FractionalIdeal::subset_of(const FractionalIdeal &other) const {
  same_ring(*this, other);
  for (const auto &e : z_basis())
    if (!other.contains(e)) return false;
  return true;
}

std::string FractionalIdeal::render() const {
  std::string s = "(" + std::to_string(a_) + ", " + render_coeffs(b_, c_) + ")";
  if (den_ != 1) s += "/" + std::to_string(den_);
  return s;
}

bool FractionalIdeal::operator<(const FractionalIdeal &o) const {
  Rational n = norm(), m = o.norm();
  if (n != m) return n < m;
  return std::tie(c_, b_, a_, den_) < std::tie(o.c_, o.b_, o.a_, o.den_);
}

namespace {

FractionalIdeal ideal_from_lat(const QuadraticRing &R, const Lat &L) {
  return FractionalIdeal::from_lattice(
      R, {{narrow(L.a), 0}, {narrow(L.b), narrow(L.c)}}, narrow(L.den));
}

FractionalIdeal ideal_from_vecs(const QuadraticRing &R, const std::vector<Vec> &vecs,
                                I128 den) {
  return ideal_from_lat(R, lat_from_vectors(vecs, den));
}

} // namespace

FractionalIdeal multiply(const FractionalIdeal &I, const FractionalIdeal &J) {
  same_ring(I, J);
  const auto &R = I.ring();
  std::vector<Vec> vecs;
  for (const auto &e : I.z_basis())
    for (const auto &f : J.z_basis()) vecs.push_back(mul_vec(R, e.a, e.b, f.a, f.b));
  return ideal_from_vecs(R, vecs, static_cast<I128>(I.den()) * J.den());
}

FractionalIdeal sum(const FractionalIdeal &I, const FractionalIdeal &J) {
  same_ring(I, J);
  return ideal_from_lat(I.ring(), lat_sum(lat_of(I), lat_of(J)));
}

FractionalIdeal intersect(const FractionalIdeal &I, const FractionalIdeal &J) {
  same_ring(I, J);
  Lat meet = lat_dual(lat_sum(lat_dual(lat_of(I)), lat_dual(lat_of(J))));
  return ideal_from_lat(I.ring(), meet);
}

FractionalIdeal scale(const FractionalIdeal &I, const FieldElement &x) {
  if (x.a == 0 && x.b == 0) throw ZeroIdeal("scaling by zero");
  if (x.den <= 0) throw SchemaError("denominator must be positive");
  const auto &R = I.ring();
  std::vector<Vec> vecs;
  for (const auto &e : I.z_basis()) vecs.push_back(mul_vec(R, e.a, e.b, x.a, x.b));
  return ideal_from_vecs(R, vecs, static_cast<I128>(I.den()) * x.den);
}

namespace {

FieldElement field_inverse(const QuadraticRing &R, const FieldElement &x) {
  // x = (g / den) * (p + q w) with p, q coprime keeps the norm small.
  I128 g0 = gcd128(x.a, x.b);
  if (g0 == 0) throw ZeroIdeal("inverse of zero");
  I128 p = x.a / g0, q = x.b / g0;
  I128 n = p * p + static_cast<I128>(R.t()) * p * q - static_cast<I128>(R.c0()) * q * q;
  if (n == 0) throw ZeroIdeal("inverse of zero");
  I128 den = n * g0;
  I128 a = (p + static_cast<I128>(R.t()) * q) * x.den, b = -q * x.den;
  if (den < 0) { a = -a; b = -b; den = -den; }
  I128 g = gcd128(gcd128(a, b), den);
  return {narrow(a / g), narrow(b / g), narrow(den / g)};
}

} // namespace

FractionalIdeal colon(const FractionalIdeal &I, const FractionalIdeal &J) {
  same_ring(I, J);
  std::optional<FractionalIdeal> out;
  for (const auto &f : J.z_basis()) {
    FractionalIdeal part = scale(I, field_inverse(I.ring(), f));
    out = out ? intersect(*out, part) : part;
  }
  return *out;
}

FractionalIdeal colon(const QuadraticRing &R, const FractionalIdeal &I,
                      const FractionalIdeal &J) {
  if (!(I.ring() == R)) throw RingMismatch(I.ring().id() + " vs " + R.id());
  return colon(I, J);
}

FractionalIdeal inverse(const FractionalIdeal &I) {
  return colon(FractionalIdeal::unit(I.ring()), I);
}

const char *to_string(StarKind k) {
  switch (k) {
  case StarKind::D: return "d";
  case StarKind::V: return "v";
  case StarKind::T: return "t";
  }
  return "?";
}

FractionalIdeal v_closure(const FractionalIdeal &I) { return inverse(inverse(I)); }

FractionalIdeal t_closure(const FractionalIdeal &I) {
  auto basis = I.z_basis();
  std::optional<FractionalIdeal> acc;
  for (unsigned mask = 1; mask < (1u << basis.size()); ++mask) {
    std::vector<FieldElement> gens;
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (mask & (1u << i)) gens.push_back(basis[i]);
    FractionalIdeal sub = v_closure(FractionalIdeal::from_generators(I.ring(), gens));
    acc = acc ? sum(*acc, sub) : sub;
  }
  if (!(*acc == v_closure(I)))
    throw ContractViolation("t-closure of " + I.render() + " differs from its v-closure");
  return *acc;
}

FractionalIdeal closure(StarKind k, const FractionalIdeal &I) {
  switch (k) {
  case StarKind::D: return I;
  case StarKind::V: return v_closure(I);
  case StarKind::T: return t_closure(I);
  }
  return I;
}

bool is_t_invertible(const FractionalIdeal &I) {
  return t_closure(multiply(I, inverse(I))).is_unit_ideal();
}

// ---- principality

RingElement fundamental_unit(const QuadraticRing &R) {
  if (R.is_imaginary()) throw PreconditionUnmet("imaginary orders have finitely many units");
  for (Int v = 1; v <= kUnitSearchLimit; ++v) {
    // u^2 + t*u*v - c0*v^2 = s  =>  (2u + t v)^2 = D v^2 + 4 s
    I128 Dv2 = static_cast<I128>(R.discriminant()) * v * v;
    for (int s : {-1, 1}) {
      I128 rhs = Dv2 + 4 * s;
      Int r = isqrt(rhs);
      if (static_cast<I128>(r) * r != rhs) continue;
      I128 twice_u = r - static_cast<I128>(R.t()) * v;
      if (twice_u % 2 != 0) continue;
      return {narrow(twice_u / 2), v};
    }
  }
  throw NormTooLarge("fundamental unit beyond search limit");
}

NormSearchBox norm_search_box(const QuadraticRing &R, Int n) {
  NormSearchBox box;
  long double D = static_cast<long double>(R.discriminant());
  if (R.is_imaginary()) {
    // N(u + v w) = (u + t v / 2)^2 + |D| v^2 / 4
    long double vb = 2 * std::sqrt(static_cast<long double>(n) / -D);
    box.b_bound = static_cast<Int>(std::floor(vb)) + 1;
    box.a_bound = static_cast<Int>(std::floor(std::sqrt(static_cast<long double>(n)) +
                                              R.t() * box.b_bound / 2.0L)) + 1;
    box.certified = true;
    box.description = "|u + t*v/2| <= sqrt(n), |v| <= 2*sqrt(n/|D|)";
  } else {
    RingElement eps = fundamental_unit(R);
    long double e = eps.a + eps.b * omega_real(R);
    long double r = std::sqrt(static_cast<long double>(n) * e);
    box.b_bound = static_cast<Int>(std::floor(2 * r / std::sqrt(D))) + 1;
    box.a_bound = static_cast<Int>(std::floor(r + R.t() * box.b_bound / 2.0L)) + 1;
    box.certified = true;
    box.description = "|x|, |x'| <= sqrt(n*eps) with eps = " + render(eps);
  }
  return box;
}

std::vector<RingElement> elements_of_norm(const QuadraticRing &R, Int n) {
  NormSearchBox box = norm_search_box(R, n);
  std::vector<RingElement> hits;
  for (Int v = -box.b_bound; v <= box.b_bound; ++v)
    for (Int u = -box.a_bound; u <= box.a_bound; ++u) {
      RingElement x{u, v};
      Int m = norm(R, x);
      if (m == n || m == -n) hits.push_back(x);
    }
  std::sort(hits.begin(), hits.end(),
            [&](const RingElement &x, const RingElement &y) { return element_less(R, x, y); });
  std::vector<RingElement> out;
  std::vector<FractionalIdeal> seen;
  for (const auto &x : hits) {
    auto I = FractionalIdeal::principal(R, x);
    if (std::find(seen.begin(), seen.end(), I) != seen.end()) continue;
    seen.push_back(I);
    out.push_back(x);
  }
  return out;
}

PrincipalityResult principal_generator(const FractionalIdeal &I) {
  const auto &R = I.ring();
  auto J = FractionalIdeal::from_hermite(R, I.a(), I.b(), I.c(), 1);
  Int n = narrow(static_cast<I128>(J.a()) * J.c());
  PrincipalityResult out;
  out.box = norm_search_box(R, n);
  for (const auto &x : elements_of_norm(R, n)) {
    if (!J.contains(x)) continue;
    if (!(FractionalIdeal::principal(R, x) == J))
      throw ContractViolation("element of matching norm does not generate " + J.render());
    out.generator = FieldElement{x.a, x.b, I.den()};
    break;
  }
  return out;
}

bool is_principal(const FractionalIdeal &I) {
  return principal_generator(I).generator.has_value();
}

// ---- primes

int kronecker(Int D, Int p) {
  if (p == 2) {
    if (D % 2 == 0) return 0;
    Int r = static_cast<Int>(floor_mod(D, 8));
    return (r == 1 || r == 7) ? 1 : -1;
  }
  I128 base = floor_mod(D, p);
  if (base == 0) return 0;
  I128 result = 1, e = (p - 1) / 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result == 1 ? 1 : -1;
}

std::vector<std::pair<Int, unsigned>> factor(Int n, Int limit) {
  if (n < 1) throw PreconditionUnmet("factor expects a positive integer");
  if (n > limit) throw NormTooLarge(std::to_string(n) + " exceeds factoring bound " +
                                    std::to_string(limit));
  std::vector<std::pair<Int, unsigned>> out;
  for (Int p = 2; p * p <= n; ++p) {
    unsigned e = 0;
    while (n % p == 0) { n /= p; ++e; }
    if (e) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<FractionalIdeal> primes_above(const QuadraticRing &R, Int p) {
  if (R.conductor() % p == 0)
    throw Unsupported("prime " + std::to_string(p) + " divides the conductor of " + R.id());
  if (p > kRootScanLimit) throw NormTooLarge("prime " + std::to_string(p) + " too large");
  std::vector<Int> roots;
  for (Int r = 0; r < p; ++r) {
    I128 val = static_cast<I128>(r) * r - static_cast<I128>(R.t()) * r - R.c0();
    if (floor_mod(val, p) == 0) roots.push_back(r);
  }
  int k = kronecker(R.discriminant(), p);
  std::size_t expected = k == 1 ? 2 : k == 0 ? 1 : 0;
  if (roots.size() != expected)
    throw ContractViolation("splitting of " + std::to_string(p) + " disagrees with (D/p)");
  std::vector<FractionalIdeal> out;
  if (roots.empty()) {
    out.push_back(FractionalIdeal::principal(R, {p, 0}));
  } else {
    for (Int r : roots)
      out.push_back(FractionalIdeal::from_generators(R, std::vector<RingElement>{{p, 0}, {-r, 1}}));
  }
  std::sort(out.begin(), out.end());
  return out;
}

FractionalIdeal conductor_ideal(const QuadraticRing &R) {
  if (R.conductor() == 1) return FractionalIdeal::unit(R);
  return FractionalIdeal::from_generators(R, std::vector<RingElement>{{2, 0}, {1, 1}});
}

std::vector<FractionalIdeal> enumerate_integral_ideals(const QuadraticRing &R, Int bound) {
  std::vector<FractionalIdeal> out;
  for (Int c = 1; c <= bound; ++c)
    for (Int a = c; a * c <= bound; a += c)
      for (Int b = 0; b < a; b += c) {
        Lat L{a, b, c, 1};
        auto [p, q] = mul_vec(R, b, c, 0, 1);
        if (!lat_member(L, 0, a) || !lat_member(L, p, q)) continue;
        out.push_back(FractionalIdeal::from_hermite(R, a, b, c, 1));
      }
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace ordalg
