#pragma once

#include "seglie/lieeq.hpp"
#include "seglie/matrix.hpp"

namespace seglie {

// All multi-indices of the given exact degree over nvars variables, ordered
// like sorted index tuples (x-heavy first: 11 < 12 < 22).
std::vector<MultiIndex> degree_multiindices(int nvars, int degree);
std::vector<MultiIndex> multiindices_up_to(int nvars, int degree);

// Completion: every z-derivative of each lower-order equation up to the
// system order (or an explicit target order) is added; the solution space is
// unchanged.
LinearPDESystem complete(const LinearPDESystem& R, int target_order = -1);

// r-prolongation: all partial derivatives of order <= r of every equation.
LinearPDESystem prolong_linear(const LinearPDESystem& R, int r);

struct SymbolSpace {
    int order = 0;
    std::vector<std::pair<int, MultiIndex>> coords;  // (tau, alpha) with |alpha| = order
    int rank = 0;
    std::vector<std::vector<Rational>> basis;  // nullspace vectors of the coefficient matrix
    int dim() const { return static_cast<int>(coords.size()) - rank; }
};

// Nullspace of the order-s coefficient matrix at y0; equations of order > s
// are ignored, lower-order ones contribute nothing.
SymbolSpace symbol_at(const LinearPDESystem& R, const std::vector<Rational>& y0, int s);

struct TypeReport {
    bool decided = false;
    bool finite = false;
    int type = -1;
    int order_q = 0;               // order of the completed system
    std::vector<int> symbol_dims;  // dim G_{q+r} for r = 0,1,...
    int rmax = 0;
};

TypeReport finite_type(const LinearPDESystem& R, const std::vector<Rational>& y0, int rmax = 6);

struct DimBoundReport {
    TypeReport type;
    long jet_count = 0;       // tau-jets of order <= q + type - 1
    int algebraic_rank = 0;   // rank of the evaluated low-order system (L)
    long parametric_count = 0;
    long bound = 0;           // = parametric_count
    std::vector<std::string> parametric_labels;
};

DimBoundReport dim_bound(const LinearPDESystem& R, const std::vector<Rational>& y0, int rmax = 6);

struct PolySolutions {
    int degree = 0;
    long dimension = 0;
    // Basis of coefficient tuples, one series per unknown slot.
    std::vector<std::vector<Series>> basis;
};

// Brute-force oracle: exact linear solve on all polynomial coefficient
// ansatzes of total degree <= d_max.
PolySolutions polynomial_solutions(const LinearPDESystem& R, int d_max);

// Spaces V_s for constant-coefficient, order-homogeneous systems: V_s = 0
// for some s iff the solution space is spanned by polynomials of degree < s.
SymbolSpace constant_coeff_Vs(const LinearPDESystem& R, int s);

struct CharacteristicReport {
    ExactMatrix sigma;  // rows: equations, cols: unknowns
    bool injective = false;
};

CharacteristicReport characteristic_matrix(const LinearPDESystem& R, const std::vector<Rational>& y0,
                                           const std::vector<Rational>& lambda);

struct DeformSample {
    Rational eps;
    TypeReport type;
    DimBoundReport bound;
    bool type_ok = false;
    bool bound_ok = false;
};

struct DeformReport {
    DeformSample base;  // the eps = 0 member
    std::vector<DeformSample> samples;
    bool monotone = true;
    bool decided = true;
};

// Checks type(eps) <= type(0) and dim_bound(eps) <= dim_bound(0) for each
// sampled member of a family; violations are findings, not errors.
DeformReport deformation_monotonicity_check(const std::vector<std::pair<Rational, LinearPDESystem>>& family,
                                            const std::vector<Rational>& y0, int rmax = 6);

}  // namespace seglie
