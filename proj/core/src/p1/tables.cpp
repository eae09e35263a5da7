#include "mlcech/p1/tables.hpp"

#include "mlcech/error.hpp"

namespace mlcech::p1 {

long betti_number(long n, long k) { return (k >= 0 && k % 2 == 0 && k <= 2 * n) ? 1 : 0; }

long hodge_number(long n, long p, long q) { return (p == q && p >= 0 && p <= n) ? 1 : 0; }

PnEntry pn_tables(long n, long p, long q) {
    if (n < 1 || p < 0 || q < 0) {
        throw MathError("pn_tables needs n >= 1 and p, q >= 0");
    }
    return {betti_number(n, p), hodge_number(n, p, q)};
}

PnTable pn_full_table(long n) {
    if (n < 1) {
        throw MathError("pn_full_table needs n >= 1");
    }
    PnTable t;
    t.n = n;
    for (long k = 0; k <= 2 * n; ++k) {
        t.betti.push_back(betti_number(n, k));
    }
    t.hodge.assign(static_cast<std::size_t>(n + 1), std::vector<long>(static_cast<std::size_t>(n + 1), 0));
    for (long p = 0; p <= n; ++p) {
        for (long q = 0; q <= n; ++q) {
            t.hodge[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] = hodge_number(n, p, q);
        }
    }
    return t;
}

} // namespace mlcech::p1
