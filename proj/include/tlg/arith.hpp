#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace tlg {

using Int = mpz_class;
using Rat = mpq_class;

using IntVector = std::vector<Int>;
using RatVector = std::vector<Rat>;

/// Parses "p", "-p", "p/q". Throws InputError on malformed text or q == 0.
Rat parse_rat(std::string_view text);
Int parse_int(std::string_view text);

/// Canonical text: "p" for integers, "p/q" in lowest terms otherwise.
std::string to_string(const Int& value);
std::string to_string(const Rat& value);

/// p/q in lowest terms (mpq_class(p, q) alone does not canonicalize).
Rat ratio(const Int& p, const Int& q);

Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);
Int floor(const Rat& value);
Int ceil(const Rat& value);

/// Fractional part in [0, 1).
Rat frac(const Rat& value);

/// gcd of all entries (0 for an empty or all-zero vector).
Int content(const IntVector& v);

bool is_zero(const IntVector& v);
bool is_zero(const RatVector& v);

RatVector to_rat(const IntVector& v);

/// Smallest positive integer multiple of v that is integral, divided by its content.
/// Zero stays zero.
IntVector primitive_direction(const RatVector& v);

bool all_integral(const RatVector& v);
IntVector to_int(const RatVector& v);  // requires all_integral

Rat dot(const IntVector& a, const RatVector& b);
Int dot(const IntVector& a, const IntVector& b);
Rat dot(const RatVector& a, const RatVector& b);

/// Lexicographic three-way comparison for deterministic ordering.
std::strong_ordering lex_compare(const IntVector& a, const IntVector& b);
std::strong_ordering lex_compare(const RatVector& a, const RatVector& b);

struct LexLess {
  bool operator()(const IntVector& a, const IntVector& b) const { return lex_compare(a, b) < 0; }
  bool operator()(const RatVector& a, const RatVector& b) const { return lex_compare(a, b) < 0; }
};

std::strong_ordering compare(const Int& a, const Int& b);
std::strong_ordering compare(const Rat& a, const Rat& b);

/// Lift of an element of C/Z: exact rational real part kept in [0, 1) and an
/// exact rational imaginary part. The coefficient it stands for is
/// exp(2*pi*i*(re + i*im)) = exp(2*pi*i*re) * exp(-2*pi*im).
struct ComplexLift {
  Rat re = 0;
  Rat im = 0;

  ComplexLift() = default;
  ComplexLift(Rat real, Rat imag) : re(frac(real)), im(std::move(imag)) {}
  static ComplexLift imaginary(Rat imag) { return ComplexLift(Rat(0), std::move(imag)); }

  bool operator==(const ComplexLift& other) const { return re == other.re && im == other.im; }
};

using LiftVector = std::vector<ComplexLift>;

RatVector real_parts(const LiftVector& v);
RatVector imaginary_parts(const LiftVector& v);
LiftVector imaginary_lift(const RatVector& im);

IntVector ints(std::initializer_list<long> values);
RatVector rats(std::initializer_list<long> values);

}  // namespace tlg
