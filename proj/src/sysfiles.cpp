#include "seglie/sysfiles.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "seglie/parser.hpp"
#include "seglie/printer.hpp"

namespace seglie {

namespace {

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(line);
    }
    return lines;
}

bool blank_or_comment(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> toks;
    std::string t;
    while (in >> t) toks.push_back(t);
    return toks;
}

long keyed_int(const std::string& tok, const std::string& key) {
    if (tok.rfind(key + "=", 0) != 0) throw std::invalid_argument("expected " + key + "=<int> in header");
    return std::stol(tok.substr(key.size() + 1));
}

std::optional<unsigned> keyed_cap(const std::string& tok) {
    if (tok.rfind("cap=", 0) != 0) throw std::invalid_argument("expected cap=<N|none> in header");
    std::string v = tok.substr(4);
    if (v == "none") return std::nullopt;
    return static_cast<unsigned>(std::stoul(v));
}

std::string rhs_of(const std::string& line, size_t eq_pos) { return line.substr(eq_pos + 1); }

// [[a,b],[c,d]] with rational entries.
ExactMatrix parse_matrix(const std::string& text, int n) {
    ExactMatrix m(n, n);
    size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto expect = [&](char c) {
        skip();
        if (i >= text.size() || text[i] != c)
            throw std::invalid_argument(std::string("matrix literal: expected '") + c + "'");
        ++i;
    };
    expect('[');
    for (int r = 0; r < n; ++r) {
        expect('[');
        for (int c = 0; c < n; ++c) {
            skip();
            size_t start = i;
            while (i < text.size() && text[i] != ',' && text[i] != ']') ++i;
            m.at(r, c) = parse_rational(text.substr(start, i - start));
            if (c + 1 < n) expect(',');
        }
        expect(']');
        if (r + 1 < n) expect(',');
    }
    expect(']');
    return m;
}

std::string matrix_to_string(const ExactMatrix& m) {
    std::string s = "[";
    for (int r = 0; r < m.rows(); ++r) {
        s += "[";
        for (int c = 0; c < m.cols(); ++c) {
            s += rational_to_string(m.at(r, c));
            if (c + 1 < m.cols()) s += ",";
        }
        s += "]";
        if (r + 1 < m.rows()) s += ",";
    }
    return s + "]";
}

SourceSystem parse_system_file(const std::vector<std::string>& lines) {
    auto head = tokens_of(lines[0]);
    if (head.size() != 4) throw std::invalid_argument("system header: system n=<n> m=<m> cap=<N|none>");
    int n = static_cast<int>(keyed_int(head[1], "n"));
    int m = static_cast<int>(keyed_int(head[2], "m"));
    std::optional<unsigned> cap = keyed_cap(head[3]);
    PDESystemS S(n, m);
    for (size_t ln = 1; ln < lines.size(); ++ln) {
        if (blank_or_comment(lines[ln])) continue;
        auto toks = tokens_of(lines[ln]);
        size_t eq = lines[ln].find('=');
        if (toks.size() < 4 || eq == std::string::npos)
            throw std::invalid_argument("system line " + std::to_string(ln + 1) + ": expected F/G i j = expr");
        Series rhs = eval_series(parse_expression(rhs_of(lines[ln], eq)), S.gctx()).with_cap(cap);
        int a = std::stoi(toks[1]), b = std::stoi(toks[2]);
        if (toks[0] == "F")
            S.set_F(a, b, rhs);
        else if (toks[0] == "G")
            S.set_G(a, b, rhs);
        else
            throw std::invalid_argument("system line " + std::to_string(ln + 1) + ": expected F or G");
    }
    return SourceSystem(std::move(S), cap);
}

SourceSystem parse_segre_file(const std::vector<std::string>& lines) {
    auto head = tokens_of(lines[0]);
    if (head.size() != 4) throw std::invalid_argument("segre header: segre <n> <m> <cap>");
    int n = std::stoi(head[1]);
    int m = std::stoi(head[2]);
    unsigned cap = static_cast<unsigned>(std::stoul(head[3]));
    SegreDefining D;
    D.n = n;
    D.m = m;
    D.L.assign(static_cast<size_t>(m), ExactMatrix(n, n));
    ContextPtr rc = SegreDefining::remainder_context(n, m);
    D.R.assign(static_cast<size_t>(m), Series::zero(rc));
    for (size_t ln = 1; ln < lines.size(); ++ln) {
        if (blank_or_comment(lines[ln])) continue;
        size_t eq = lines[ln].find('=');
        auto toks = tokens_of(lines[ln]);
        if (toks.empty() || eq == std::string::npos)
            throw std::invalid_argument("segre line " + std::to_string(ln + 1) + ": expected L<k>/R<k> = ...");
        const std::string& key = toks[0];
        if (key.size() < 2 || (key[0] != 'L' && key[0] != 'R'))
            throw std::invalid_argument("segre line " + std::to_string(ln + 1) + ": expected L<k> or R<k>");
        int k = std::stoi(key.substr(1));
        if (k < 1 || k > m) throw std::invalid_argument("segre line " + std::to_string(ln + 1) + ": index out of range");
        if (key[0] == 'L')
            D.L[static_cast<size_t>(k - 1)] = parse_matrix(rhs_of(lines[ln], eq), n);
        else
            D.R[static_cast<size_t>(k - 1)] = eval_series(parse_expression(rhs_of(lines[ln], eq)), rc);
    }
    D.validate();
    return SourceSystem(std::move(D), cap);
}

SourceSystem parse_linear_file(const std::vector<std::string>& lines) {
    auto head = tokens_of(lines[0]);
    if (head.size() < 2) throw std::invalid_argument("linear header: linear vars=<V>");
    int V = static_cast<int>(keyed_int(head[1], "vars"));
    int M = V;
    for (size_t i = 2; i < head.size(); ++i)
        if (head[i].rfind("unknowns=", 0) == 0) M = static_cast<int>(keyed_int(head[i], "unknowns"));
    std::vector<std::string> names;
    for (int v = 1; v <= V; ++v) names.push_back("z" + std::to_string(v));
    LinearPDESystem R;
    R.zctx = make_context(std::move(names));
    R.unknown_count = M;
    for (size_t ln = 1; ln < lines.size(); ++ln) {
        if (blank_or_comment(lines[ln])) continue;
        auto toks = tokens_of(lines[ln]);
        size_t eq = lines[ln].find('=');
        if (toks.empty() || toks[0] != "eq" || eq == std::string::npos)
            throw std::invalid_argument("linear line " + std::to_string(ln + 1) + ": expected eq = expr");
        LinearForm f = eval_linear(parse_expression(rhs_of(lines[ln], eq)), R.zctx, M);
        if (!f.is_zero()) R.eqs.push_back(std::move(f));
    }
    return SourceSystem(std::move(R));
}

}  // namespace

SourceSystem parse_source(const std::string& text) {
    auto lines = split_lines(text);
    size_t first = 0;
    while (first < lines.size() && blank_or_comment(lines[first])) ++first;
    if (first == lines.size()) throw std::invalid_argument("empty input");
    std::vector<std::string> rest(lines.begin() + static_cast<long>(first), lines.end());
    auto head = tokens_of(rest[0]);
    if (head.empty()) throw std::invalid_argument("empty header");
    if (head[0] == "system") return parse_system_file(rest);
    if (head[0] == "segre") return parse_segre_file(rest);
    if (head[0] == "linear") return parse_linear_file(rest);
    throw std::invalid_argument("unknown header '" + head[0] + "' (expected system/segre/linear)");
}

SourceSystem load_source(const std::string& path_or_dash) {
    std::string text;
    if (path_or_dash == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
    } else {
        std::ifstream in(path_or_dash);
        if (!in) throw std::invalid_argument("cannot open input file: " + path_or_dash);
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    return parse_source(text);
}

std::string print_system(const PDESystemS& S, const std::optional<unsigned>& cap) {
    std::string out = "system n=" + std::to_string(S.n()) + " m=" + std::to_string(S.m()) +
                      " cap=" + cap_to_string(cap) + "\n";
    for (int i = 1; i <= S.n(); ++i)
        for (int j = i; j <= S.n(); ++j)
            out += "F " + std::to_string(i) + " " + std::to_string(j) + " = " + to_string(S.F(i, j)) + "\n";
    for (int k = 2; k <= S.m(); ++k)
        for (int j = 1; j <= S.n(); ++j)
            out += "G " + std::to_string(k) + " " + std::to_string(j) + " = " + to_string(S.G(k, j)) + "\n";
    return out;
}

std::string print_segre(const SegreDefining& D, unsigned cap) {
    std::string out = "segre " + std::to_string(D.n) + " " + std::to_string(D.m) + " " + std::to_string(cap) + "\n";
    for (int k = 1; k <= D.m; ++k) out += "L" + std::to_string(k) + " = " + matrix_to_string(D.L[static_cast<size_t>(k - 1)]) + "\n";
    for (int k = 1; k <= D.m; ++k) out += "R" + std::to_string(k) + " = " + to_string(D.R[static_cast<size_t>(k - 1)]) + "\n";
    return out;
}

std::string print_linear(const LinearPDESystem& R) {
    std::string out = "linear vars=" + std::to_string(R.zctx->size());
    if (R.unknown_count != R.zctx->size()) out += " unknowns=" + std::to_string(R.unknown_count);
    out += "\n";
    for (const auto& e : R.eqs) out += "eq = " + to_string_linear(e, R.zctx) + "\n";
    return out;
}

}  // namespace seglie
