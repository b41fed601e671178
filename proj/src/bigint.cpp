#include "pxp/bigint.hpp"

#include <stdexcept>

namespace pxp {

BigInt binomial(long a, long b) {
    if (a < 0 || b < 0 || b > a) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
    return r;
}

BigInt fibonacci(long l) {
    if (l < 0) throw std::invalid_argument("fibonacci: negative index");
    BigInt r;
    mpz_fib_ui(r.get_mpz_t(), static_cast<unsigned long>(l));
    return r;
}

BigInt lucas(long l) {
    if (l < 0) throw std::invalid_argument("lucas: negative index");
    BigInt r;
    mpz_lucnum_ui(r.get_mpz_t(), static_cast<unsigned long>(l));
    return r;
}

BigInt totient(long k) {
    if (k < 1) throw std::invalid_argument("totient: argument must be >= 1");
    long n = k;
    long result = k;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

BigInt exact_div(const BigInt& a, const BigInt& d) {
    if (d == 0 || !mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()))
        throw std::logic_error("exact_div: " + a.get_str() + " is not a multiple of " + d.get_str());
    BigInt q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
    return q;
}

BigInt exact_half(const BigInt& a) { return exact_div(a, 2); }

}  // namespace pxp
