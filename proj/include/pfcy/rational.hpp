#ifndef PFCY_RATIONAL_HPP
#define PFCY_RATIONAL_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace pfcy {

using Int = mpz_class;
using Rat = mpq_class;

struct error : std::runtime_error {
    explicit error(const std::string &msg) : std::runtime_error(msg) {}
};

// Parses "123", "-4/7", "2.5" is NOT accepted (decimal strings only, exactness).
inline Rat rat_from_string(const std::string &s)
{
    Rat r;
    if (r.set_str(s, 10) != 0)
        throw error("bad rational literal: '" + s + "'");
    r.canonicalize();
    return r;
}

inline std::string rat_to_string(const Rat &r) { return r.get_str(); }
inline std::string int_to_string(const Int &z) { return z.get_str(); }

inline Int int_from_string(const std::string &s)
{
    Int z;
    if (z.set_str(s, 10) != 0)
        throw error("bad integer literal: '" + s + "'");
    return z;
}

inline Rat rat_pow(const Rat &base, long e)
{
    if (e == 0)
        return Rat(1);
    Rat b = base;
    bool inv = e < 0;
    unsigned long n = inv ? -(unsigned long)e : (unsigned long)e;
    if (inv) {
        if (b == 0)
            throw error("rat_pow: zero to negative power");
        b = Rat(1) / b;
    }
    Rat out(1);
    while (n) {
        if (n & 1)
            out *= b;
        b *= b;
        n >>= 1;
    }
    return out;
}

inline Int int_pow(const Int &base, unsigned long e)
{
    Int out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

inline bool is_integer(const Rat &r) { return r.get_den() == 1; }

inline Int numerator(const Rat &r) { return r.get_num(); }
inline Int denominator(const Rat &r) { return r.get_den(); }

inline Int binomial(unsigned long n, unsigned long k)
{
    Int out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

inline Int factorial(unsigned long n)
{
    Int out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

// n! / (k1! k2! ... ), parts must sum to n.
inline Int multinomial(const std::vector<unsigned long> &parts)
{
    unsigned long n = 0;
    for (auto p : parts)
        n += p;
    Int out = factorial(n);
    for (auto p : parts)
        out /= factorial(p);
    return out;
}

} // namespace pfcy

#endif
