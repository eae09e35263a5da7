#pragma once

#include <vector>

namespace mlcech::p1 {

/// b_k(P^n): 1 for even k <= 2n, else 0.
long betti_number(long n, long k);
/// h^{p,q}(P^n): 1 for p = q <= n, else 0.
long hodge_number(long n, long p, long q);

struct PnEntry {
    long betti = 0;
    long hodge = 0;
};

/// (b_p(P^n), h^{p,q}(P^n)). MathError unless n >= 1 and p, q >= 0.
PnEntry pn_tables(long n, long p, long q);

struct PnTable {
    long n = 0;
    std::vector<long> betti;               ///< k = 0..2n
    std::vector<std::vector<long>> hodge;  ///< [p][q], 0 <= p, q <= n
};

PnTable pn_full_table(long n);

} // namespace mlcech::p1
