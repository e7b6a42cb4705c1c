#include "rbcoalg/binomial.hpp"

#include <array>
#include <stdexcept>

namespace rbcoalg {

BigInt binom(int x, int y) {
    if (x < 0) throw std::invalid_argument("binom: negative upper argument");
    if (y < 0 || y > x) return 0;
    if (y > x - y) y = x - y;
    BigInt acc(1);
    for (int t = 1; t <= y; ++t) {
        acc *= x - y + t;
        acc /= t;
    }
    return acc;
}

BinomialCoalgebra build_binomial(int max_degree) {
    if (max_degree < 0) throw std::invalid_argument("build_binomial: negative degree");
    const int dim = max_degree + 1;
    BinomialCoalgebra bc;
    bc.max_degree = max_degree;
    Coalgebra& c = bc.underlying;
    c.dim = dim;
    c.basis_names = default_names(dim, "c");
    c.delta.assign(static_cast<std::size_t>(dim), Tensor2(dim));
    for (int n = 0; n < dim; ++n) {
        Tensor2& dn = c.delta[static_cast<std::size_t>(n)];
        for (int j = 0; j <= n; ++j) {
            const BigInt cnj = binom(n, j);
            for (int i = 0; i <= n; ++i) {
                const BigInt coeff = cnj * binom(j, n - i);
                if (coeff == 0) continue;
                const int sign = (i + j + n) % 2 == 0 ? 1 : -1;
                dn.at(i, j) = Rational(sign * coeff);
            }
        }
    }
    Vec eps = zero_vec(dim);
    eps[0] = 1;
    c.counit = eps;
    bc.shift = Matrix(dim, dim);
    for (int n = 1; n < dim; ++n) bc.shift.at(n - 1, n) = 1;
    return bc;
}

Rational lemma_lhs(int n, int k, int l, int j) {
    if (n < 0 || k < 0 || l < 0 || j < 0 || k > n || l > n || j > n) {
        throw std::invalid_argument("lemma_lhs: arguments out of range");
    }
    BigInt acc(0);
    for (int i = 0; i <= n; ++i) acc += binom(j, n - i) * binom(i, l) * binom(l, i - k);
    return Rational(acc);
}

Rational lemma_rhs(int n, int k, int l, int j) {
    if (n < 0 || k < 0 || l < 0 || j < 0 || k > n || l > n || j > n) {
        throw std::invalid_argument("lemma_rhs: arguments out of range");
    }
    BigInt acc(0);
    for (int i = 0; i <= n; ++i) acc += binom(n - j, n - i) * binom(i, n - k) * binom(j, i - l);
    return Rational(acc);
}

LemmaReport lemma_exhaustive_check(int max_n) {
    if (max_n < 0) throw std::invalid_argument("lemma_exhaustive_check: negative bound");
    LemmaReport rep;
    for (int n = 0; n <= max_n; ++n) {
        for (int k = 0; k <= n; ++k)
            for (int l = 0; l <= n; ++l)
                for (int j = 0; j <= n; ++j) {
                    ++rep.tuples;
                    if (lemma_lhs(n, k, l, j) != lemma_rhs(n, k, l, j)) {
                        rep.pass = false;
                        rep.counterexample = std::array<int, 4>{n, k, l, j};
                        return rep;
                    }
                }
    }
    return rep;
}

bool vandermonde_check(int x, int y, int z) {
    if (x < 0 || y < 0 || z < 0) {
        throw std::invalid_argument("vandermonde_check: arguments out of range");
    }
    BigInt acc(0);
    for (int t = 0; t <= x; ++t) acc += binom(x, t) * binom(y, z - t);
    return acc == binom(x + y, z);
}

bool pascal_check(int x, int y) {
    if (x < 1 || y < 0 || y > x) {
        throw std::invalid_argument("pascal_check: arguments out of range");
    }
    return binom(x, y) == binom(x - 1, y - 1) + binom(x - 1, y);
}

}  // namespace rbcoalg
