#include "seglie/jets.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace seglie {

std::vector<int> sorted_tuple(std::vector<int> t) {
    std::sort(t.begin(), t.end());
    return t;
}

long binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

static std::string fiber_name(int k, const std::vector<int>& alpha) {
    std::string s = "u" + std::to_string(k);
    if (!alpha.empty()) {
        s += "_";
        for (int a : alpha) s += std::to_string(a);
    }
    return s;
}

std::vector<std::vector<int>> JetContext::tuples(int n, int len) {
    std::vector<std::vector<int>> out;
    if (len == 0) {
        out.push_back({});
        return out;
    }
    std::vector<int> cur(static_cast<size_t>(len), 1);
    while (true) {
        out.push_back(cur);
        int pos = len - 1;
        while (pos >= 0 && cur[static_cast<size_t>(pos)] == n) --pos;
        if (pos < 0) break;
        int v = ++cur[static_cast<size_t>(pos)];
        for (int j = pos + 1; j < len; ++j) cur[static_cast<size_t>(j)] = v;
    }
    return out;
}

JetContext::JetContext(int n, int m, int order) : n_(n), m_(m), order_(order) {
    if (n < 1 || m < 1 || order < 0) throw std::invalid_argument("jet context needs n,m >= 1, order >= 0");
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    for (int k = 1; k <= m; ++k) names.push_back(fiber_name(k, {}));
    for (int s = 1; s <= order; ++s)
        for (int k = 1; k <= m; ++k)
            for (const auto& t : tuples(n, s)) names.push_back(fiber_name(k, t));
    ctx_ = make_context(std::move(names));
}

JetContextPtr JetContext::make(int n, int m, int order) {
    return std::shared_ptr<const JetContext>(new JetContext(n, m, order));
}

int JetContext::x_index(int i) const {
    if (i < 1 || i > n_) throw std::invalid_argument("independent index out of range");
    return i - 1;
}

int JetContext::u_index(int k) const {
    if (k < 1 || k > m_) throw std::invalid_argument("dependent index out of range");
    return n_ + k - 1;
}

int JetContext::fiber_index(int k, std::vector<int> alpha) const {
    alpha = sorted_tuple(std::move(alpha));
    if (alpha.empty()) return u_index(k);
    for (int a : alpha)
        if (a < 1 || a > n_) throw std::invalid_argument("fiber tuple entry out of range");
    auto idx = ctx_->find(fiber_name(k, alpha));
    if (!idx) throw std::invalid_argument("fiber variable beyond jet order: " + fiber_name(k, alpha));
    return *idx;
}

FiberVar JetContext::fiber_of(int var) const {
    if (var < n_ || var >= ctx_->size()) throw std::invalid_argument("not a fiber variable slot");
    int rem = var - n_;
    if (rem < m_) return FiberVar{rem + 1, {}};
    rem -= m_;
    for (int s = 1; s <= order_; ++s) {
        long block = binomial(n_ + s - 1, s);
        for (int k = 1; k <= m_; ++k) {
            if (rem < block) {
                auto ts = tuples(n_, s);
                return FiberVar{k, ts[static_cast<size_t>(rem)]};
            }
            rem -= static_cast<int>(block);
        }
    }
    throw std::logic_error("fiber slot classification failed");
}

JetContextPtr JetContext::extended(int order) const {
    if (order <= order_) return make(n_, m_, order_);
    return make(n_, m_, order);
}

Series total_derivative(const JetContextPtr& jc, const Series& e, int i) {
    if (i < 1 || i > jc->n()) throw std::invalid_argument("total derivative index out of range");
    if (!same_context(e.context(), jc->vars())) throw std::invalid_argument("total derivative: context mismatch");
    JetContextPtr up = jc->extended(jc->order() + 1);
    Series lifted = e.extended_to(up->vars());
    // D_i = d/dx_i + sum over fiber vars v of v' * d/dv with v' = u^k_{alpha+i}.
    Series acc = lifted.diff(up->x_index(i));
    for (int var = jc->n(); var < jc->vars()->size(); ++var) {
        Series part = lifted.diff(var);
        if (part.is_zero()) continue;
        FiberVar f = jc->fiber_of(var);
        std::vector<int> alpha = f.alpha;
        alpha.push_back(i);
        int lift_var = up->fiber_index(f.k, std::move(alpha));
        acc = acc + part * Series::variable(up->vars(), lift_var, part.cap());
    }
    return acc;
}

JetDims jet_dimensions(int n, int m, int r) {
    if (n < 1 || m < 1 || r < 0) throw std::invalid_argument("jet_dimensions needs n,m >= 1, r >= 0");
    JetDims d;
    d.total = n;
    for (int s = 0; s <= r; ++s) {
        long c = m * binomial(n + s - 1, s);
        d.per_order.push_back(c);
        d.total += c;
    }
    return d;
}

}  // namespace seglie
