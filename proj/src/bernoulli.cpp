#include "polybounds/bernoulli.hpp"

#include <mutex>
#include <vector>

namespace polybounds {

namespace {
std::mutex bernoulli_mutex;
std::vector<BigRational> bernoulli_table;  // guarded by bernoulli_mutex
}  // namespace

BigRational bernoulli(unsigned n) {
    std::lock_guard<std::mutex> lock(bernoulli_mutex);
    if (bernoulli_table.empty()) bernoulli_table.emplace_back(1);
    while (bernoulli_table.size() <= n) {
        const unsigned long m = bernoulli_table.size();
        // B_m = -1/(m+1) * sum_{j<m} C(m+1,j) B_j, binomial updated in place.
        mpz_class binom = 1;
        BigRational sum(0);
        for (unsigned long j = 0; j < m; ++j) {
            const BigRational& bj = bernoulli_table[j];
            if (!bj.is_zero()) sum += BigRational(binom, 1) * bj;
            binom = binom * (m + 1 - j) / (j + 1);
        }
        bernoulli_table.push_back(-sum / BigRational(static_cast<long>(m) + 1));
    }
    return bernoulli_table[n];
}

}  // namespace polybounds
