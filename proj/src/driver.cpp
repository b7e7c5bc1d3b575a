#include "seglie/driver.hpp"

#include <algorithm>
#include <set>

#include "seglie/lintype.hpp"
#include "seglie/parser.hpp"
#include "seglie/printer.hpp"
#include "seglie/report.hpp"
#include "seglie/sysfiles.hpp"

namespace seglie {

namespace {

constexpr const char* kToolVersion = "seglie 1.0.0";

std::string seed_hex(std::uint64_t seed) {
    std::ostringstream os;
    os << "0x" << std::hex << seed;
    return os.str();
}

void echo_config(Report& rep, const RunConfig& cfg) {
    rep.kv(0, "tool", kToolVersion);
    rep.section(0, "config");
    rep.kv(1, "cap", static_cast<long>(cfg.cap));
    rep.kv(1, "seed", seed_hex(cfg.seed));
    rep.kv(1, "rmax", static_cast<long>(cfg.rmax));
    rep.kv(1, "point", cfg.point.empty() ? "origin" : cfg.point);
    rep.list(1, "epsilon", cfg.epsilons);
    rep.kv(1, "oracle-degree", cfg.oracle_degree < 0 ? "none" : std::to_string(cfg.oracle_degree));
}

std::string unknown_legend(int n, int m) {
    return "t1..t" + std::to_string(n) + " = theta_1..theta_" + std::to_string(n) + "; t" +
           std::to_string(n + 1) + "..t" + std::to_string(n + m) + " = eta_1..eta_" + std::to_string(m);
}

void emit_linear_system(Report& rep, const LinearPDESystem& R) {
    rep.section(0, "lie-equations");
    rep.kv(1, "count", static_cast<long>(R.eqs.size()));
    std::vector<std::string> orders;
    for (const auto& e : R.eqs) orders.push_back(std::to_string(e.order()));
    rep.list(1, "orders", orders);
    if (R.noetherian_cutoff >= 0) rep.kv(1, "noetherian-cutoff", static_cast<long>(R.noetherian_cutoff));
    rep.kv(1, "cap", cap_to_string(R.cap));
    for (const auto& w : R.warnings) rep.kv(1, "warning", w);
    rep.section(1, "equations");
    for (const auto& e : R.eqs) rep.item(2, to_string_linear(e, R.zctx));
    rep.section(1, "canonical-rows-at-origin");
    std::vector<Rational> y0(static_cast<size_t>(R.zctx->size()), Rational(0));
    for (const auto& row : canonical_rows_at(R, y0)) rep.item(2, row);
}

void emit_type_sections(Report& rep, const TypeReport& tr, const DimBoundReport* db) {
    rep.section(0, "finite-type");
    rep.kv(1, "decided", tr.decided ? "true" : "false");
    if (tr.decided) {
        rep.kv(1, "finite", tr.finite ? "true" : "false");
        rep.kv(1, "type", static_cast<long>(tr.type));
    }
    rep.kv(1, "order", static_cast<long>(tr.order_q));
    std::vector<std::string> dims;
    for (int d : tr.symbol_dims) dims.push_back(std::to_string(d));
    rep.list(1, "symbol-dims", dims);
    rep.kv(1, "rmax", static_cast<long>(tr.rmax));
    if (db) {
        rep.section(0, "dim-bound");
        rep.kv(1, "jets", db->jet_count);
        rep.kv(1, "algebraic-rank", static_cast<long>(db->algebraic_rank));
        rep.kv(1, "parametric-count", db->parametric_count);
        rep.kv(1, "bound", db->bound);
        rep.list(1, "parametric-derivatives", db->parametric_labels);
    }
}

RunResult input_error(const std::string& msg) {
    RunResult r;
    r.exit_code = kExitInput;
    r.stderr_text = "error: " + msg + "\n";
    return r;
}

template <class Fn>
RunResult guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const ParseError& e) {
        return input_error(e.what());
    } catch (const std::invalid_argument& e) {
        return input_error(e.what());
    } catch (const std::exception& e) {
        return input_error(e.what());
    }
}

struct AnalysisInput {
    LinearPDESystem R;
    int n = 0, m = 0;  // 0 when the source was already a linear system
    bool from_segre = false;
    bool involutive = false;
    std::optional<unsigned> involutive_cap;
    bool have_involutive = false;
    std::string input_summary;
};

AnalysisInput build_analysis(const SourceSystem& src, const RunConfig& cfg) {
    AnalysisInput in;
    if (src.is_linear()) {
        in.R = std::get<LinearPDESystem>(src.value);
        in.input_summary = "linear system, " + std::to_string(in.R.eqs.size()) + " equations, " +
                           std::to_string(in.R.unknown_count) + " unknowns";
        return in;
    }
    PDESystemS S = src.is_system() ? std::get<PDESystemS>(src.value)
                                   : derive_segre_system(std::get<SegreDefining>(src.value),
                                                         src.cap.value_or(cfg.cap));
    in.n = S.n();
    in.m = S.m();
    in.from_segre = src.is_segre();
    InvolutivityReport inv = involutivity_residuals(S);
    in.have_involutive = true;
    in.involutive = inv.involutive;
    in.involutive_cap = inv.checked_cap;
    GenOptions opt;
    opt.seed = cfg.seed;
    in.R = generate_lie_equations(S, opt);
    in.input_summary = std::string(src.is_segre() ? "segre-derived system" : "pde system") +
                       " n=" + std::to_string(S.n()) + " m=" + std::to_string(S.m());
    return in;
}

}  // namespace

std::vector<Rational> parse_point(const std::string& text, int nvars) {
    std::vector<Rational> pt;
    if (text.empty()) {
        pt.assign(static_cast<size_t>(nvars), Rational(0));
        return pt;
    }
    size_t start = 0;
    while (start <= text.size()) {
        size_t comma = text.find(',', start);
        std::string piece = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        pt.push_back(parse_rational(piece));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (static_cast<int>(pt.size()) != nvars)
        throw std::invalid_argument("base point needs " + std::to_string(nvars) + " coordinates");
    return pt;
}

RunResult run_parse(const std::string& text) {
    return guarded([&] {
        ExprPtr ast = parse_expression(text);
        // Infer the smallest jet chart mentioning every variable.
        int n = 1, m = 1, r = 0;
        std::function<void(const ExprPtr&)> walk = [&](const ExprPtr& e) {
            if (!e) return;
            if (e->kind == Expr::Kind::Var) {
                const std::string& nm = e->name;
                size_t us = nm.find('_');
                std::string base = us == std::string::npos ? nm : nm.substr(0, us);
                if (base[0] == 'x') n = std::max(n, std::stoi(base.substr(1)));
                if (base[0] == 'u') m = std::max(m, std::stoi(base.substr(1)));
                if (base[0] != 'x' && base[0] != 'u')
                    throw ParseError("variable '" + nm + "' is not a jet coordinate", e->position);
                if (us != std::string::npos) {
                    r = std::max(r, static_cast<int>(nm.size() - us - 1));
                    for (size_t i = us + 1; i < nm.size(); ++i) n = std::max(n, nm[i] - '0');
                }
            }
            walk(e->lhs);
            walk(e->rhs);
        };
        walk(ast);
        JetContextPtr jc = JetContext::make(n, m, r);
        Series value = eval_series(ast, jc->vars());
        RunResult res;
        Report rep;
        rep.kv(0, "tool", kToolVersion);
        rep.kv(0, "command", "parse");
        rep.kv(0, "jet-context", "n=" + std::to_string(n) + " m=" + std::to_string(m) + " order=" + std::to_string(r));
        rep.kv(0, "canonical", to_string(value));
        res.stdout_text = rep.str();
        return res;
    });
}

RunResult run_prolong(int n, int m, int order) {
    return guarded([&] {
        if (order < 1 || order > 2)
            throw std::invalid_argument("prolong supports order 1 or 2 (the recursion is exposed through the library)");
        SymbolicVectorField X{n, m};
        Prolonged<LinearForm> P = order == 2 ? prolong2_closed(X) : prolong_recursive(X, order);
        Report rep;
        rep.kv(0, "tool", kToolVersion);
        rep.kv(0, "command", "prolong");
        rep.kv(0, "field", "generic symbolic, n=" + std::to_string(n) + " m=" + std::to_string(m));
        rep.kv(0, "unknowns", unknown_legend(n, m));
        rep.section(0, "coefficients");
        for (const auto& [fv, poly] : P.coeff) {
            std::string key = "eta" + std::to_string(fv.k) + "_";
            for (int a : fv.alpha) key += std::to_string(a);
            // list the fiber polynomial with linear-form values
            std::string body;
            for (const auto& [mono, form] : poly.terms()) {
                std::string ms;
                for (int v = 0; v < mono.nvars(); ++v)
                    for (unsigned e = 0; e < mono[v]; ++e)
                        ms += (ms.empty() ? "" : "*") + P.jc->vars()->name(v);
                if (!body.empty()) body += "  +  ";
                body += (ms.empty() ? "" : ms + " * ") + "(" + to_string_linear(form, P.alg.zctx) + ")";
            }
            rep.kv(1, key, body.empty() ? "0" : body);
        }
        RunResult res;
        res.stdout_text = rep.str();
        return res;
    });
}

RunResult run_segre(const std::string& input, const RunConfig& cfg) {
    return guarded([&] {
        SourceSystem src = load_source(input);
        if (!src.is_segre()) throw std::invalid_argument("segre subcommand expects a segre file");
        const auto& D = std::get<SegreDefining>(src.value);
        PDESystemS S = derive_segre_system(D, src.cap.value_or(cfg.cap));
        RunResult res;
        res.stdout_text = print_system(S, S.min_series_cap());
        return res;
    });
}

RunResult run_involutive(const std::string& input, const RunConfig& cfg) {
    return guarded([&] {
        SourceSystem src = load_source(input);
        PDESystemS S = src.is_system() ? std::get<PDESystemS>(src.value)
                                       : src.is_segre()
                                             ? derive_segre_system(std::get<SegreDefining>(src.value),
                                                                   src.cap.value_or(cfg.cap))
                                             : throw std::invalid_argument("involutive expects a system or segre file");
        InvolutivityReport inv = involutivity_residuals(S);
        Report rep;
        echo_config(rep, cfg);
        rep.kv(0, "command", "involutive");
        rep.kv(0, "involutive", inv.involutive ? "true" : "false");
        rep.kv(0, "involutive-cap", cap_to_string(inv.checked_cap));
        rep.kv(0, "residual-count", static_cast<long>(inv.residuals.size()));
        rep.list(0, "nonzero-residuals", inv.nonzero);
        RunResult res;
        res.stdout_text = rep.str();
        return res;
    });
}

RunResult run_lie_eqs(const std::string& input, const RunConfig& cfg) {
    return guarded([&] {
        SourceSystem src = load_source(input);
        if (src.is_linear()) throw std::invalid_argument("lie-eqs expects a system or segre file");
        AnalysisInput in = build_analysis(src, cfg);
        Report rep;
        echo_config(rep, cfg);
        rep.kv(0, "command", "lie-eqs");
        rep.kv(0, "input", in.input_summary);
        rep.kv(0, "involutive", in.involutive ? "true" : "false");
        rep.kv(0, "involutive-cap", cap_to_string(in.involutive_cap));
        rep.kv(0, "unknowns", unknown_legend(in.n, in.m));
        emit_linear_system(rep, in.R);
        RunResult res;
        res.stdout_text = rep.str();
        return res;
    });
}

RunResult run_analyze(const std::string& input, const RunConfig& cfg) {
    return guarded([&] {
        SourceSystem src = load_source(input);
        AnalysisInput in = build_analysis(src, cfg);
        std::vector<Rational> y0 = parse_point(cfg.point, in.R.zctx->size());

        Report rep;
        echo_config(rep, cfg);
        rep.kv(0, "command", "analyze");
        rep.kv(0, "input", in.input_summary);
        if (in.have_involutive) {
            rep.kv(0, "involutive", in.involutive ? "true" : "false");
            rep.kv(0, "involutive-cap", cap_to_string(in.involutive_cap));
        }
        emit_linear_system(rep, in.R);

        TypeReport tr = finite_type(in.R, y0, cfg.rmax);
        RunResult res;
        if (!tr.decided) {
            emit_type_sections(rep, tr, nullptr);
            res.exit_code = kExitUndecided;
            res.stderr_text = "finite type not decided within rmax=" + std::to_string(cfg.rmax) + "\n";
            res.stdout_text = rep.str();
            return res;
        }
        DimBoundReport db = dim_bound(in.R, y0, cfg.rmax);
        emit_type_sections(rep, tr, &db);
        if (cfg.oracle_degree >= 0) {
            PolySolutions ps = polynomial_solutions(in.R, cfg.oracle_degree);
            rep.section(0, "oracle");
            rep.kv(1, "degree", static_cast<long>(ps.degree));
            rep.kv(1, "dimension", ps.dimension);
        }
        if (in.from_segre) rep.kv(0, "aut-bound", aut_bound_line(db.bound));
        res.stdout_text = rep.str();
        return res;
    });
}

RunResult run_flat_dim(const std::string& input, const RunConfig& cfg) {
    return guarded([&] {
        SourceSystem src = load_source(input);
        if (!src.is_system()) throw std::invalid_argument("flat-dim expects a system file");
        const PDESystemS& S = std::get<PDESystemS>(src.value);
        // Flatness: F identically zero, relations linear in w with constant
        // coefficients; extract the A^k blocks.
        for (int i = 1; i <= S.n(); ++i)
            for (int j = i; j <= S.n(); ++j)
                if (!S.F(i, j).is_zero()) throw std::invalid_argument("flat-dim: F is not identically zero");
        std::vector<ExactMatrix> A;
        for (int k = 2; k <= S.m(); ++k) {
            ExactMatrix Ak(S.n(), S.n());
            for (int j = 1; j <= S.n(); ++j) {
                const Series& g = S.G(k, j);
                for (const auto& [mono, c] : g.poly().terms()) {
                    bool ok = mono.degree() == 1;
                    int wslot = -1;
                    for (int v = 0; v < S.gctx()->size() && ok; ++v)
                        if (mono[v] == 1) wslot = v;
                    if (!ok || wslot < S.n() + S.m())
                        throw std::invalid_argument("flat-dim: relations must be constant-coefficient linear in w");
                    Ak.at(j - 1, wslot - S.n() - S.m()) = c;
                }
            }
            A.push_back(std::move(Ak));
        }
        bool nondeg = flat_nondegenerate_check(S.n(), A);

        GenOptions opt;
        opt.seed = cfg.seed;
        LinearPDESystem R = generate_lie_equations(S, opt);
        std::vector<Rational> y0 = parse_point(cfg.point, R.zctx->size());

        Report rep;
        echo_config(rep, cfg);
        rep.kv(0, "command", "flat-dim");
        rep.kv(0, "input", "flat system n=" + std::to_string(S.n()) + " m=" + std::to_string(S.m()));
        rep.kv(0, "nondegenerate", nondeg ? "true" : "false");
        emit_linear_system(rep, R);
        TypeReport tr = finite_type(R, y0, cfg.rmax);
        RunResult res;
        if (!tr.decided) {
            emit_type_sections(rep, tr, nullptr);
            res.exit_code = kExitUndecided;
            res.stderr_text = "finite type not decided within rmax=" + std::to_string(cfg.rmax) + "\n";
            res.stdout_text = rep.str();
            return res;
        }
        DimBoundReport db = dim_bound(R, y0, cfg.rmax);
        emit_type_sections(rep, tr, &db);
        if (cfg.oracle_degree >= 0) {
            PolySolutions ps = polynomial_solutions(R, cfg.oracle_degree);
            rep.section(0, "oracle");
            rep.kv(1, "degree", static_cast<long>(ps.degree));
            rep.kv(1, "dimension", ps.dimension);
        }
        res.stdout_text = rep.str();
        return res;
    });
}

RunResult run_deform_check(const std::string& input, const RunConfig& cfg) {
    return guarded([&] {
        SourceSystem src = load_source(input);
        if (!src.is_segre()) throw std::invalid_argument("deform-check expects a segre file");
        const auto& D = std::get<SegreDefining>(src.value);
        unsigned cap = src.cap.value_or(cfg.cap);

        std::vector<Rational> eps_list;
        eps_list.push_back(Rational(0));
        for (const auto& e : cfg.epsilons) {
            Rational v = parse_rational(e);
            if (std::find(eps_list.begin(), eps_list.end(), v) == eps_list.end()) eps_list.push_back(v);
        }

        GenOptions opt;
        opt.seed = cfg.seed;
        std::vector<std::pair<Rational, LinearPDESystem>> family;
        for (const auto& eps : eps_list) {
            PDESystemS S = derive_segre_system(scale_deform(D, eps), cap);
            family.emplace_back(eps, generate_lie_equations(S, opt));
        }
        std::vector<Rational> y0 = parse_point(cfg.point, family.front().second.zctx->size());
        DeformReport dr = deformation_monotonicity_check(family, y0, cfg.rmax);

        Report rep;
        echo_config(rep, cfg);
        rep.kv(0, "command", "deform-check");
        rep.kv(0, "input", "segre family n=" + std::to_string(D.n) + " m=" + std::to_string(D.m));
        rep.section(0, "base");
        rep.kv(1, "epsilon", "0");
        rep.kv(1, "decided", dr.base.type.decided ? "true" : "false");
        if (dr.base.type.decided) {
            rep.kv(1, "type", static_cast<long>(dr.base.type.type));
            rep.kv(1, "bound", dr.base.bound.bound);
            rep.kv(1, "aut-bound", aut_bound_line(dr.base.bound.bound));
        }
        rep.section(0, "samples");
        for (const auto& s : dr.samples) {
            rep.item(1, "epsilon " + rational_to_string(s.eps));
            rep.kv(2, "decided", s.type.decided ? "true" : "false");
            if (s.type.decided) {
                rep.kv(2, "type", static_cast<long>(s.type.type));
                rep.kv(2, "bound", s.bound.bound);
                rep.kv(2, "type-monotone", s.type_ok ? "true" : "false");
                rep.kv(2, "bound-monotone", s.bound_ok ? "true" : "false");
                rep.kv(2, "aut-bound", aut_bound_line(s.bound.bound));
            }
        }
        rep.kv(0, "monotone", dr.monotone ? "true" : "false");
        RunResult res;
        if (!dr.decided) {
            res.exit_code = kExitUndecided;
            res.stderr_text = "finite type not decided within rmax=" + std::to_string(cfg.rmax) + "\n";
        }
        res.stdout_text = rep.str();
        return res;
    });
}

}  // namespace seglie
