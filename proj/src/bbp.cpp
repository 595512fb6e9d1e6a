#include "farey/bbp.hpp"

#include "farey/rational.hpp"

#include <cctype>

namespace farey {

namespace {

// Bounds lo <= 16^p · π <= hi.  Terms k <= p are rounded outward; every term
// of the series is positive and below 16^-k · 4/(8k+1), so the remaining
// tail is under one unit.
void bbp_bounds(unsigned long p, Int& lo, Int& hi) {
    lo = 0;
    hi = 0;
    for (unsigned long k = 0; k <= p; ++k) {
        Int scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 16, p - k);
        const unsigned long dens[4] = {8 * k + 1, 8 * k + 4, 8 * k + 5, 8 * k + 6};
        const unsigned long nums[4] = {4, 2, 1, 1};
        for (int i = 0; i < 4; ++i) {
            Int numer = scale * nums[i];
            Int fl, cl;
            mpz_fdiv_q_ui(fl.get_mpz_t(), numer.get_mpz_t(), dens[i]);
            mpz_cdiv_q_ui(cl.get_mpz_t(), numer.get_mpz_t(), dens[i]);
            if (i == 0) {
                lo += fl;
                hi += cl;
            } else {
                lo -= cl;
                hi -= fl;
            }
        }
    }
    hi += 1;
}

}  // namespace

std::string bbp_hex_digits(std::size_t count) {
    if (count == 0) return "";
    for (unsigned long guard = 8;; guard += 8) {
        unsigned long p = count + guard;
        Int lo, hi;
        bbp_bounds(p, lo, hi);
        Int three;
        mpz_ui_pow_ui(three.get_mpz_t(), 16, p);
        three *= 3;
        Int drop;
        mpz_ui_pow_ui(drop.get_mpz_t(), 16, guard);
        Int dlo = lo - three;
        Int dhi = hi - three;
        mpz_fdiv_q(dlo.get_mpz_t(), dlo.get_mpz_t(), drop.get_mpz_t());
        mpz_fdiv_q(dhi.get_mpz_t(), dhi.get_mpz_t(), drop.get_mpz_t());
        if (dlo != dhi) continue;
        std::string digits = dlo.get_str(16);
        for (char& c : digits) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
        // Leading zero digits are dropped by get_str.
        return std::string(count - digits.size(), '0') + digits;
    }
}

}  // namespace farey
