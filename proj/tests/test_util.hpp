#pragma once

#include <random>

#include "seglie/fields.hpp"

// Shared helpers for deterministic randomized tests. All draws come from the
// raw mt19937_64 stream so runs are identical across platforms.
namespace testutil {

using namespace seglie;

struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}
    long pick(long lo, long hi) {  // inclusive
        return lo + static_cast<long>(eng() % static_cast<unsigned long>(hi - lo + 1));
    }
    Rational rational() { return Rational(pick(-5, 5), pick(1, 3)); }
};

inline Polynomial random_polynomial(Rng& rng, const ContextPtr& ctx, int max_degree, int terms) {
    Polynomial p(ctx);
    for (int t = 0; t < terms; ++t) {
        std::vector<unsigned> e(static_cast<size_t>(ctx->size()), 0);
        int budget = static_cast<int>(rng.pick(0, max_degree));
        for (int b = 0; b < budget; ++b) e[static_cast<size_t>(rng.pick(0, ctx->size() - 1))] += 1;
        p.add_term(MultiIndex{e}, rng.rational());
    }
    return p;
}

inline Series random_series(Rng& rng, const ContextPtr& ctx, int max_degree, int terms) {
    return Series(random_polynomial(rng, ctx, max_degree, terms));
}

inline ConcreteVectorField random_field(Rng& rng, int n, int m, int max_degree) {
    ConcreteVectorField X = ConcreteVectorField::zero(n, m);
    for (int j = 0; j < n; ++j) X.theta[static_cast<size_t>(j)] = random_series(rng, X.zctx, max_degree, 4);
    for (int k = 0; k < m; ++k) X.eta[static_cast<size_t>(k)] = random_series(rng, X.zctx, max_degree, 4);
    return X;
}

}  // namespace testutil
