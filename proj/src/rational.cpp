#include "monocert/rational.hpp"

#include <cctype>

#include "monocert/errors.hpp"

namespace mono {

std::string rat_to_string(const Rat& x) {
    Rat c = x;
    c.canonicalize();
    return c.get_str();
}

Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw BadParameters("empty rational literal");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    bool seen_digit = false, seen_slash = false;
    for (; i < s.size(); ++i) {
        if (std::isdigit(static_cast<unsigned char>(s[i]))) {
            seen_digit = true;
        } else if (s[i] == '/' && seen_digit && !seen_slash) {
            seen_slash = true;
            seen_digit = false;
        } else {
            throw BadParameters("malformed rational literal: " + s);
        }
    }
    if (!seen_digit) throw BadParameters("malformed rational literal: " + s);
    Rat x;
    if (x.set_str(s, 10) != 0) throw BadParameters("malformed rational literal: " + s);
    if (x.get_den() == 0) throw BadParameters("zero denominator: " + s);
    x.canonicalize();
    return x;
}

std::size_t rat_bit_size(const Rat& x) {
    return mpz_sizeinbase(x.get_num().get_mpz_t(), 2) +
           mpz_sizeinbase(x.get_den().get_mpz_t(), 2);
}

Rat rat_abs(const Rat& x) {
    Rat r = x;
    if (r < 0) r = -r;
    return r;
}

Rat pow2_neg(unsigned long k) {
    Int den = 1;
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), k);
    Rat r(Int(1), den);
    r.canonicalize();
    return r;
}

}  // namespace mono
