#pragma once

#include <optional>
#include <vector>

#include "syzlab/arrangements.hpp"
#include "syzlab/eigenscheme.hpp"
#include "syzlab/hpoly.hpp"

namespace syzlab {

/// Two distinct points spanning the zero set of a nonzero linear form.
std::pair<Point, Point> line_points(const HPoly& line);

/// Rank-1 test on the coefficient matrix of the three partials restricted to
/// the line through P and Q: true when the whole line maps to one point.
/// Throws when all three restrictions vanish identically.
bool is_contracted(const HPoly& f, const Point& P, const Point& Q);

/// The degree-1 components of c whose lines the polar map of the product
/// contracts.
std::vector<HPoly> contracted_component_lines(const CurveInput& c);

/// (d-1)^2 - tau(f); meaningful when every singularity is quasihomogeneous
/// (the caller's assertion; true for all built-in families).
int polar_degree_qh(const HPoly& f);

struct FiberReport {
    HPoly line;            // q contracted against the linear column
    HPoly second;          // q contracted against the degree-(d-2) column
    bool identically_zero = false;  // second vanishes on the line (q sits on a contracted image)
    int roots_total = 0;            // d-2 unless identically zero
    int roots_distinct = 0;
};

/// Fiber of the polar map over q for a curve whose Jacobian scheme is an
/// eigenscheme: intersects the fiber line with the residual curve and counts
/// roots exactly (distinct roots via the squarefree part).
FiberReport fiber_over_point(const HPoly& f, const JacobianTensorResult& jt, const Point& q);
FiberReport fiber_over_point(const HPoly& f, const Point& q);

struct HessianReport {
    std::vector<int> divisible_components;  // indices of degree-1 components dividing det Hess
    bool divisible_by_f = false;
    std::vector<Var> quotient_vars;  // variables present in det Hess / f, when divisible
};

/// Divisibility of the Hessian determinant by the line components and by the
/// full product, with the variables surviving in the quotient.
HessianReport hessian_report(const HPoly& f, const CurveInput& c);

struct PolarReport {
    int degree_estimate = 0;
    bool quasihomogeneous_assumed = true;
    std::vector<HPoly> contracted_lines;
    HessianReport hessian;
};

PolarReport polar_report(const CurveInput& c);

}  // namespace syzlab
