#pragma once

#include <variant>

#include "seglie/lieeq.hpp"
#include "seglie/segre.hpp"
#include "seglie/systems.hpp"

namespace seglie {

// Parsed input file: one of the three line-oriented formats.
struct SourceSystem {
    std::variant<PDESystemS, SegreDefining, LinearPDESystem> value;
    std::optional<unsigned> cap;  // header cap (segre/system files)

    explicit SourceSystem(std::variant<PDESystemS, SegreDefining, LinearPDESystem> v,
                          std::optional<unsigned> header_cap = std::nullopt)
        : value(std::move(v)), cap(header_cap) {}

    bool is_system() const { return std::holds_alternative<PDESystemS>(value); }
    bool is_segre() const { return std::holds_alternative<SegreDefining>(value); }
    bool is_linear() const { return std::holds_alternative<LinearPDESystem>(value); }
};

// system n=<n> m=<m> cap=<N|none>  /  F i j = expr  /  G k j = expr
// segre <n> <m> <cap>              /  L<k> = [[..],..]  /  R<k> = expr
// linear vars=<V>                  /  eq = expr in t<j>_<digits>
SourceSystem parse_source(const std::string& text);
SourceSystem load_source(const std::string& path_or_dash);  // "-" reads stdin

std::string print_system(const PDESystemS& S, const std::optional<unsigned>& cap);
std::string print_segre(const SegreDefining& D, unsigned cap);
std::string print_linear(const LinearPDESystem& R);

}  // namespace seglie
