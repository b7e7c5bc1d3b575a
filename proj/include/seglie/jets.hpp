#pragma once

#include <memory>
#include <vector>

#include "seglie/series.hpp"

namespace seglie {

// A fiber coordinate u^k_alpha of a jet chart: dependent index k (1-based)
// and a non-decreasing tuple of independent indices (1-based, empty for u^k
// itself). Mixed-partial symmetry is baked in: tuples are always sorted.
struct FiberVar {
    int k = 0;
    std::vector<int> alpha;
    bool operator<(const FiberVar& o) const { return k != o.k ? k < o.k : alpha < o.alpha; }
    bool operator==(const FiberVar& o) const { return k == o.k && alpha == o.alpha; }
    int order() const { return static_cast<int>(alpha.size()); }
};

std::vector<int> sorted_tuple(std::vector<int> t);

// Natural coordinates on J^r(n,m): x_1..x_n, u^1..u^m, then u^k_alpha for
// 1 <= |alpha| <= r ordered by (|alpha|, k, alpha). Contexts of increasing
// order extend each other by suffix, so expressions lift for free.
class JetContext {
  public:
    static std::shared_ptr<const JetContext> make(int n, int m, int order);

    int n() const { return n_; }
    int m() const { return m_; }
    int order() const { return order_; }
    const ContextPtr& vars() const { return ctx_; }

    int x_index(int i) const;                        // i in 1..n
    int u_index(int k) const;                        // k in 1..m
    int fiber_index(int k, std::vector<int> alpha) const;  // any tuple order accepted
    // Classification of a context slot; fiber vars of order 0 are the u^k.
    bool is_x(int var) const { return var < n_; }
    FiberVar fiber_of(int var) const;                // valid for var >= n_

    std::shared_ptr<const JetContext> extended(int order) const;

    // All sorted tuples over 1..n of the given length, lexicographically.
    static std::vector<std::vector<int>> tuples(int n, int len);

  private:
    JetContext(int n, int m, int order);
    int n_, m_, order_;
    ContextPtr ctx_;
};

using JetContextPtr = std::shared_ptr<const JetContext>;

// Total derivative D_i on a jet expression; the result lives on the context
// one order up so the recursion can climb without explicit bookkeeping.
Series total_derivative(const JetContextPtr& jc, const Series& e, int i);

struct JetDims {
    std::vector<long> per_order;  // fiber coordinate count at each order 0..r (per all m combined)
    long total = 0;               // n + m * sum C(n+s-1, s)
};

JetDims jet_dimensions(int n, int m, int r);

long binomial(long n, long k);

}  // namespace seglie
