#include "polybounds/series.hpp"

#include <mutex>
#include <stdexcept>

#include "polybounds/bernoulli.hpp"

namespace polybounds {

namespace {

mpz_class cached_factorial(unsigned long n) {
    static std::mutex mu;
    static std::vector<mpz_class> table{1, 1};
    std::lock_guard<std::mutex> lock(mu);
    while (table.size() <= n) table.push_back(table.back() * static_cast<unsigned long>(table.size()));
    return table[n];
}

mpz_class pow2(unsigned long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return r;
}

mpz_class pow3(unsigned long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 3, e);
    return r;
}

BigRational wilker_c_rational(unsigned k) {
    if (k <= 2) return BigRational(0);
    const BigRational babs = bernoulli(2 * k + 2).abs();
    BigRational inner = BigRational(static_cast<long>(4 * k + 6)) * babs;
    inner += BigRational(k % 2 == 0 ? -1 : 1);
    return BigRational(pow2(2 * k + 2), cached_factorial(2 * k + 3)) * inner;
}

// The two pieces of D_k(m): the k-free head and the rational factor of k.
BigRational sf_d_head(unsigned m) {
    mpz_class den = cached_factorial(m) * cached_factorial(m);
    den *= 2 * m + 1;
    den *= pow2(2 * m);
    return BigRational(cached_factorial(2 * m), den);
}

BigRational sf_d_k_factor(unsigned m) {
    BigRational s(m % 2 == 0 ? 1 : -1);
    s /= BigRational(pow3(m + 1), 1);
    for (unsigned i = 0; i < m; ++i) {
        const int sgn = (m - 1 - i) % 2 == 0 ? 1 : -1;
        mpz_class den = pow3(m - i) * cached_factorial(i) * cached_factorial(i + 1) * pow2(2 * i + 1);
        s += BigRational(sgn * cached_factorial(2 * i), den);
    }
    return s;
}

BigRational sf_e_rational(unsigned m) {
    if (m == 0) return BigRational(3);
    if (m == 1) return BigRational(0);
    mpz_class den1 = mpz_class(2 * m + 1) * pow2(2 * m - 2) * cached_factorial(m) * cached_factorial(m);
    BigRational first(m * cached_factorial(2 * m - 1), den1);
    mpz_class num2 = mpz_class(2 * m) * pow2(2 * m - 2) * cached_factorial(m - 1) * cached_factorial(m - 1);
    return first - BigRational(num2, cached_factorial(2 * m + 1));
}

// One lazily extended, internally synchronized cache per sequence id.
template <typename Fn>
PiConstant memoized(std::vector<PiConstant>& table, std::mutex& mu, unsigned idx, Fn compute) {
    std::lock_guard<std::mutex> lock(mu);
    while (table.size() <= idx) table.push_back(compute(static_cast<unsigned>(table.size())));
    return table[idx];
}

}  // namespace

PiConstant wilker_c(unsigned k) {
    static std::mutex mu;
    static std::vector<PiConstant> table;
    return memoized(table, mu, k, [](unsigned i) { return PiConstant(wilker_c_rational(i)); });
}

PiConstant sf_d(SfK k, unsigned m) {
    static std::mutex mu3, mupi;
    static std::vector<PiConstant> table3, tablepi;
    if (k == SfK::three) {
        return memoized(table3, mu3, m, [](unsigned i) {
            return PiConstant(sf_d_head(i) - BigRational(3) * sf_d_k_factor(i));
        });
    }
    return memoized(tablepi, mupi, m, [](unsigned i) {
        return PiConstant(sf_d_head(i)) - PiConstant::pi_power(1, sf_d_k_factor(i));
    });
}

PiConstant sf_e(unsigned m) {
    static std::mutex mu;
    static std::vector<PiConstant> table;
    return memoized(table, mu, m, [](unsigned i) { return PiConstant(sf_e_rational(i)); });
}

PiConstant CoeffSeq::at(std::size_t m) const {
    const unsigned idx = static_cast<unsigned>(m);
    switch (id_) {
        case SeqId::wilker_c: return wilker_c(idx);
        case SeqId::sf_d3: return sf_d(SfK::three, idx);
        case SeqId::sf_dpi: return sf_d(SfK::pi, idx);
        case SeqId::sf_e: return sf_e(idx);
    }
    throw std::logic_error("CoeffSeq: bad id");
}

SplitSeries split_nonneg(const std::vector<PiConstant>& coeffs) {
    SplitSeries out;
    out.nonneg.reserve(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        const int s = pi_sign(coeffs[i]);
        if (s > 0) {
            out.nonneg.push_back(coeffs[i]);
        } else {
            out.nonneg.emplace_back();
            if (s < 0) out.negative_terms.emplace_back(i, coeffs[i]);
        }
    }
    return out;
}

}  // namespace polybounds
