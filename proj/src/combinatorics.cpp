#include "zcheb/combinatorics.hpp"

#include <stdexcept>

namespace zcheb {

Integer binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Integer factorial(long n) {
    if (n < 0) throw std::domain_error("factorial: negative argument");
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Integer double_factorial(long k) {
    if (k < -1) throw std::domain_error("double_factorial: argument below -1");
    if (k <= 0) return 1;
    Integer r;
    mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(k));
    return r;
}

}  // namespace zcheb
