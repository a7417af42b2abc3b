#include "rescurv/rational.hpp"

#include <cctype>
#include <cstdio>

namespace rescurv {

Rat rat_parse(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw ParameterError("empty rational literal");

    if (s.find('/') != std::string::npos) {
        mpq_class q;
        if (q.set_str(s, 10) != 0) throw ParameterError("bad rational literal '" + text + "'");
        if (q.get_den() == 0) throw ParameterError("zero denominator in '" + text + "'");
        q.canonicalize();
        return q;
    }

    auto epos = s.find_first_of("eE");
    long exp10 = 0;
    if (epos != std::string::npos) {
        try {
            exp10 = std::stol(s.substr(epos + 1));
        } catch (const std::exception&) {
            throw ParameterError("bad exponent in '" + text + "'");
        }
        s = s.substr(0, epos);
        if (s.empty()) throw ParameterError("bad rational literal '" + text + "'");
    }

    std::string digits = s;
    long frac_digits = 0;
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        frac_digits = static_cast<long>(s.size() - dot - 1);
        digits = s.substr(0, dot) + s.substr(dot + 1);
    }
    if (digits.empty() || digits == "-" || digits == "+")
        throw ParameterError("bad rational literal '" + text + "'");
    for (size_t i = 0; i < digits.size(); ++i) {
        char ch = digits[i];
        if (i == 0 && (ch == '-' || ch == '+')) continue;
        if (!std::isdigit(static_cast<unsigned char>(ch)))
            throw ParameterError("bad rational literal '" + text + "'");
    }

    mpz_class num(digits, 10);
    Rat q(num);
    long net = exp10 - frac_digits;
    mpz_class p10;
    mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(net < 0 ? -net : net));
    if (net >= 0)
        q *= Rat(p10);
    else
        q /= Rat(p10);
    q.canonicalize();
    return q;
}

Rat rat_pow(const Rat& base, long exp) {
    if (exp == 0) return Rat(1);
    if (base == 0 && exp < 0) throw ParameterError("zero base with negative exponent");
    Rat b = exp > 0 ? base : Rat(1 / base);
    unsigned long k = static_cast<unsigned long>(exp > 0 ? exp : -exp);
    Rat acc(1);
    while (k) {
        if (k & 1) acc *= b;
        b *= b;
        k >>= 1;
    }
    return acc;
}

Rat rat_from_double(double d) {
    if (!std::isfinite(d)) throw ParameterError("non-finite value cannot become a rational");
    mpq_class q(d);
    q.canonicalize();
    return q;
}

} // namespace rescurv
