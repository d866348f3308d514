#ifndef SYMBREAK_RATIONAL_HPP
#define SYMBREAK_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace symbreak {

/// Exact rational scalar used by every symbolic computation.
using Rat = mpq_class;

/// Parse "num", "num/den" or a signed variant thereof. Throws std::invalid_argument.
inline Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    Rat q;
    try {
        q = Rat(s);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad rational literal: '" + s + "'");
    }
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

/// "num" when the denominator is 1, otherwise "num/den".
inline std::string rat_to_string(const Rat& q) { return q.get_str(); }

inline double rat_to_double(const Rat& q) { return q.get_d(); }

/// Exact square root when q is the square of a rational; returns false otherwise.
inline bool rat_sqrt_exact(const Rat& q, Rat& out) {
    if (q < 0) return false;
    const mpz_class num = q.get_num(), den = q.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return false;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    out = Rat(rn, rd);
    out.canonicalize();
    return true;
}

}  // namespace symbreak

#endif
