// Copyright 2026 The dmpl Authors
// SPDX-License-Identifier: Apache-2.0

#include "dmpl/special.hpp"

namespace dmpl {

Scalar gen_binomial(const Scalar& x, long long n)
{
    return std::visit([n](const auto& v) -> Scalar { return gen_binomial(v, n); }, x.storage());
}

Scalar rising_factorial(const Scalar& x, long long n)
{
    return std::visit([n](const auto& v) -> Scalar { return rising_factorial(v, n); }, x.storage());
}

std::vector<std::vector<mpz_class>> stirling_table(int n)
{
    if (n < 0) throw DomainError("negative Stirling order");
    std::vector<std::vector<mpz_class>> s(static_cast<std::size_t>(n) + 1);
    s[0] = {mpz_class(1)};
    for (int m = 0; m < n; ++m) {
        auto& next = s[static_cast<std::size_t>(m) + 1];
        next.assign(static_cast<std::size_t>(m) + 2, mpz_class(0));
        for (int j = 0; j <= m + 1; ++j) {
            mpz_class v = 0;
            if (j >= 1) v += s[m][j - 1];
            if (j <= m) v += mpz_class(m) * s[m][j];
            next[j] = v;
        }
    }
    return s;
}

mpz_class stirling_first(int n, int j)
{
    if (n < 0 || j < 0) throw DomainError("negative Stirling argument");
    if (j > n) return 0;
    return stirling_table(n)[n][j];
}

}  // namespace dmpl
