#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <type_traits>
#include <vector>

#include <gmpxx.h>

#include "rescurv/errors.hpp"

namespace rescurv {

/// Exact rational scalar. All decision procedures and certificates run on
/// this type; floating point is only used for iterative fitting.
using Rat = mpq_class;

/// Canonical string form of a rational: "p/q" in lowest terms, "p" when the
/// denominator is 1.
inline std::string rat_str(const Rat& q) { return q.get_str(); }

/// p/q in lowest terms. The mpq_class two-argument constructor does not
/// reduce, and GMP arithmetic assumes canonical operands, so every
/// runtime-valued fraction must go through here.
inline Rat rat_frac(long num, long den) {
    if (den == 0) throw ParameterError("zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline double rat_to_double(const Rat& q) { return q.get_d(); }

inline Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

/// Parses "p/q", integer, or plain decimal literals ("0.25", "-3.5") into an
/// exact rational.
Rat rat_parse(const std::string& text);

/// q^k for integer k (k may be negative; q must be nonzero then).
Rat rat_pow(const Rat& base, long exp);

/// Exact rational from a double (used when ingesting numeric-mode data into
/// exact reports; the double is taken at face value).
Rat rat_from_double(double d);

// Scalar glue shared by the templated linear-algebra and transform code.
// Exact mode compares with ==; numeric mode with an absolute tolerance.
template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<Rat> {
    static constexpr bool exact = true;
    static Rat from_int(long v) { return Rat(v); }
    static Rat from_rat(const Rat& v) { return v; }
    static bool is_zero(const Rat& v) { return v == 0; }
    static bool close(const Rat& a, const Rat& b, double /*tol*/) { return a == b; }
    static double to_double(const Rat& v) { return v.get_d(); }
};

template <>
struct ScalarTraits<double> {
    static constexpr bool exact = false;
    static double from_int(long v) { return static_cast<double>(v); }
    static double from_rat(const Rat& v) { return v.get_d(); }
    static bool is_zero(double v) { return v == 0.0; }
    static bool close(double a, double b, double tol) { return std::fabs(a - b) <= tol; }
    static double to_double(double v) { return v; }
};

/// splitmix64; used to derive independent per-sample seeds from a master
/// seed so sample i is reproducible in isolation.
inline uint64_t split_seed(uint64_t master, uint64_t index) {
    uint64_t z = master + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace rescurv
