#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gtc {

// Exact arithmetic backbone. mpz_class/mpq_class already guarantee
// canonical form (lowest terms, positive denominator).
using Int = mpz_class;
using Rat = mpq_class;

inline Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Int double_factorial(unsigned long n) {
    Int r;
    mpz_2fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Int binomial(unsigned long n, unsigned long k) {
    if (k > n) return Int(0);
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Int pow2(unsigned long e) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return r;
}

// Exact quotient; throws if the division leaves a remainder.
inline Int divexact(const Int& a, const Int& b) {
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (r != 0) throw std::logic_error("divexact: inexact division");
    return q;
}

// Rows of Pascal's triangle up to n inclusive, reused all over the counting code.
class BinomTable {
public:
    explicit BinomTable(int max_n) : rows_(max_n + 1) {
        for (int n = 0; n <= max_n; ++n) {
            rows_[n].resize(n + 1);
            rows_[n][0] = 1;
            for (int k = 1; k <= n; ++k)
                rows_[n][k] = rows_[n - 1][k - 1] + (k <= n - 1 ? rows_[n - 1][k] : Int(0));
        }
    }
    const Int& operator()(int n, int k) const { return rows_[n][k]; }
    int max_n() const { return static_cast<int>(rows_.size()) - 1; }

private:
    std::vector<std::vector<Int>> rows_;
};

// log of a positive big integer, good to ~1e-15 relative error.
inline double log_of(const Int& x) {
    if (x <= 0) throw std::domain_error("log_of: nonpositive argument");
    long exp2;
    double mant = mpz_get_d_2exp(&exp2, x.get_mpz_t());
    return std::log(mant) + static_cast<double>(exp2) * 0.6931471805599453094;
}

inline double log_of(const Rat& x) {
    return log_of(Int(x.get_num())) - log_of(Int(x.get_den()));
}

inline std::string to_string(const Int& x) { return x.get_str(); }

}  // namespace gtc
