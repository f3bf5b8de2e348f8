#include "ihara/numeric.hpp"

namespace ihara {

Int binomial(const Int& n, unsigned long k) {
    Int r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
}

Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Rat rat_pow(const Rat& base, unsigned long e) {
    return rat(int_pow(base.get_num(), e), int_pow(base.get_den(), e));
}

int moebius(int n) {
    if (n == 1) return 1;
    int primes = 0;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;  // squareful
            ++primes;
        }
    }
    if (n > 1) ++primes;
    return (primes % 2 == 0) ? 1 : -1;
}

std::string to_string(const Int& z) { return z.get_str(); }

std::string to_string(const Rat& q) { return q.get_str(); }

}  // namespace ihara
