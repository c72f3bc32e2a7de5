#include "tlg/arith.hpp"

#include <algorithm>
#include <cctype>

#include "tlg/errors.hpp"

namespace tlg {

namespace {

bool valid_integer_text(std::string_view text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) return false;
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  }
  return true;
}

}  // namespace

Int parse_int(std::string_view text) {
  if (!valid_integer_text(text)) {
    throw InputError("not an integer: '" + std::string(text) + "'");
  }
  std::string s(text);
  if (s[0] == '+') s.erase(0, 1);
  return Int(s, 10);
}

Rat parse_rat(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_int(text));
  Int num = parse_int(text.substr(0, slash));
  std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && den_text[0] == '-') {
    throw InputError("denominator must be positive: '" + std::string(text) + "'");
  }
  Int den = parse_int(den_text);
  if (den == 0) throw InputError("zero denominator: '" + std::string(text) + "'");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Int& value) { return value.get_str(10); }

std::string to_string(const Rat& value) { return value.get_str(10); }

Rat ratio(const Int& p, const Int& q) {
  if (q == 0) throw InputError("zero denominator");
  Rat r(p, q);
  r.canonicalize();
  return r;
}

Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Int lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

Int floor(const Rat& value) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return q;
}

Int ceil(const Rat& value) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return q;
}

Rat frac(const Rat& value) { return value - Rat(floor(value)); }

Int content(const IntVector& v) {
  Int g = 0;
  for (const auto& x : v) g = gcd(g, x);
  return g;
}

bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

bool is_zero(const RatVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
}

RatVector to_rat(const IntVector& v) {
  RatVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

IntVector primitive_direction(const RatVector& v) {
  Int den = 1;
  for (const auto& x : v) den = lcm(den, x.get_den());
  IntVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(Int(x * den));
  Int g = content(out);
  if (g > 1) {
    for (auto& x : out) x /= g;
  }
  return out;
}

bool all_integral(const RatVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x.get_den() == 1; });
}

IntVector to_int(const RatVector& v) {
  IntVector out;
  out.reserve(v.size());
  for (const auto& x : v) {
    if (x.get_den() != 1) throw ConsistencyError("expected integral vector");
    out.push_back(x.get_num());
  }
  return out;
}

Rat dot(const IntVector& a, const RatVector& b) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
  return s;
}

Int dot(const IntVector& a, const IntVector& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rat dot(const RatVector& a, const RatVector& b) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::strong_ordering compare(const Int& a, const Int& b) {
  int c = ::cmp(a, b);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::strong_ordering compare(const Rat& a, const Rat& b) {
  int c = ::cmp(a, b);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

template <typename V>
static std::strong_ordering lex_compare_impl(const V& a, const V& b) {
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    auto c = compare(a[i], b[i]);
    if (c != 0) return c;
  }
  return a.size() <=> b.size();
}

std::strong_ordering lex_compare(const IntVector& a, const IntVector& b) {
  return lex_compare_impl(a, b);
}

std::strong_ordering lex_compare(const RatVector& a, const RatVector& b) {
  return lex_compare_impl(a, b);
}

RatVector real_parts(const LiftVector& v) {
  RatVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.re);
  return out;
}

RatVector imaginary_parts(const LiftVector& v) {
  RatVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.im);
  return out;
}

LiftVector imaginary_lift(const RatVector& im) {
  LiftVector out;
  out.reserve(im.size());
  for (const auto& x : im) out.push_back(ComplexLift::imaginary(x));
  return out;
}

IntVector ints(std::initializer_list<long> values) {
  IntVector out;
  for (long v : values) out.emplace_back(v);
  return out;
}

RatVector rats(std::initializer_list<long> values) {
  RatVector out;
  for (long v : values) out.emplace_back(v);
  return out;
}

}  // namespace tlg
