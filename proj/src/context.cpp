#include "seglie/context.hpp"

#include <stdexcept>

namespace seglie {

Context::Context(std::vector<std::string> names) : names_(std::move(names)) {
    for (int i = 0; i < static_cast<int>(names_.size()); ++i) {
        auto [it, fresh] = index_.emplace(names_[static_cast<size_t>(i)], i);
        if (!fresh) throw std::invalid_argument("duplicate variable name: " + names_[static_cast<size_t>(i)]);
    }
}

std::optional<int> Context::find(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

bool Context::is_prefix_of(const Context& bigger) const {
    if (size() > bigger.size()) return false;
    for (int i = 0; i < size(); ++i)
        if (names_[static_cast<size_t>(i)] != bigger.name(i)) return false;
    return true;
}

ContextPtr make_context(std::vector<std::string> names) {
    return std::make_shared<const Context>(std::move(names));
}

MultiIndex::MultiIndex(std::vector<unsigned> exps) : e_(std::move(exps)), deg_(0) {
    for (unsigned v : e_) deg_ += v;
}

MultiIndex MultiIndex::unit(int nvars, int i) {
    std::vector<unsigned> e(static_cast<size_t>(nvars), 0);
    e.at(static_cast<size_t>(i)) = 1;
    return MultiIndex(std::move(e));
}

MultiIndex MultiIndex::bumped(int i, int by) const {
    std::vector<unsigned> e = e_;
    e.at(static_cast<size_t>(i)) += static_cast<unsigned>(by);
    return MultiIndex(std::move(e));
}

MultiIndex MultiIndex::lowered(int i) const {
    std::vector<unsigned> e = e_;
    if (e.at(static_cast<size_t>(i)) == 0) throw std::logic_error("lowering zero exponent");
    e[static_cast<size_t>(i)] -= 1;
    return MultiIndex(std::move(e));
}

MultiIndex MultiIndex::operator+(const MultiIndex& other) const {
    if (nvars() != other.nvars()) throw std::invalid_argument("multi-index arity mismatch");
    std::vector<unsigned> e = e_;
    for (size_t i = 0; i < e.size(); ++i) e[i] += other.e_[i];
    return MultiIndex(std::move(e));
}

bool MultiIndex::operator<(const MultiIndex& other) const {
    if (deg_ != other.deg_) return deg_ < other.deg_;
    return e_ < other.e_;
}

}  // namespace seglie
