#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace seglie {

// Ordered, immutable variable list. Polynomials and series refer to one of
// these; two contexts are interchangeable exactly when their name lists agree.
class Context {
  public:
    explicit Context(std::vector<std::string> names);

    int size() const { return static_cast<int>(names_.size()); }
    const std::string& name(int i) const { return names_.at(static_cast<size_t>(i)); }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<int> find(const std::string& name) const;

    bool operator==(const Context& other) const { return names_ == other.names_; }
    bool operator!=(const Context& other) const { return !(*this == other); }

    // True when this context's variables form an initial segment of `bigger`.
    bool is_prefix_of(const Context& bigger) const;

  private:
    std::vector<std::string> names_;
    std::map<std::string, int> index_;
};

using ContextPtr = std::shared_ptr<const Context>;

ContextPtr make_context(std::vector<std::string> names);

inline bool same_context(const ContextPtr& a, const ContextPtr& b) {
    return a == b || (a && b && *a == *b);
}

// Exponent vector over a fixed context. Ordered graded-lexicographically:
// first by total degree, ties broken by the exponent vector itself.
class MultiIndex {
  public:
    MultiIndex() : deg_(0) {}
    explicit MultiIndex(std::vector<unsigned> exps);
    static MultiIndex zero(int nvars) { return MultiIndex(std::vector<unsigned>(static_cast<size_t>(nvars), 0)); }
    static MultiIndex unit(int nvars, int i);

    int nvars() const { return static_cast<int>(e_.size()); }
    unsigned operator[](int i) const { return e_.at(static_cast<size_t>(i)); }
    unsigned degree() const { return deg_; }
    bool is_zero() const { return deg_ == 0; }

    MultiIndex bumped(int i, int by = 1) const;
    MultiIndex lowered(int i) const;  // requires e_[i] > 0
    MultiIndex operator+(const MultiIndex& other) const;

    bool operator==(const MultiIndex& other) const { return e_ == other.e_; }
    bool operator!=(const MultiIndex& other) const { return e_ != other.e_; }
    bool operator<(const MultiIndex& other) const;

    const std::vector<unsigned>& exponents() const { return e_; }

  private:
    std::vector<unsigned> e_;
    unsigned deg_;
};

}  // namespace seglie
