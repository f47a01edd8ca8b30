#include "syzlab/polar.hpp"

#include "syzlab/jacobian.hpp"
#include "syzlab/qmat.hpp"

namespace syzlab {

std::pair<Point, Point> line_points(const HPoly& line) {
    if (line.is_zero() || line.degree() != 1)
        throw std::invalid_argument("line_points: need a nonzero linear form");
    Rational a = line.coeff({1, 0, 0});
    Rational b = line.coeff({0, 1, 0});
    Rational c = line.coeff({0, 0, 1});
    if (!a.is_zero()) return {Point{-b, a, Rational(0)}, Point{-c, Rational(0), a}};
    if (!b.is_zero()) return {Point{Rational(1), Rational(0), Rational(0)}, Point{Rational(0), -c, b}};
    return {Point{Rational(1), Rational(0), Rational(0)}, Point{Rational(0), Rational(1), Rational(0)}};
}

bool is_contracted(const HPoly& f, const Point& P, const Point& Q) {
    if (f.degree() < 2) throw std::invalid_argument("is_contracted: need deg f >= 2");
    int d = f.degree();
    auto g = gradient(f);
    std::vector<std::vector<Rational>> rows;
    bool any_nonzero = false;
    for (const auto& p : g) {
        BinaryForm restr = restrict_to_line(p, P, Q);
        if (!restr.is_zero()) any_nonzero = true;
        std::vector<Rational> row(static_cast<size_t>(d), Rational(0));
        for (int i = 0; i <= restr.degree() && i < d; ++i) row[static_cast<size_t>(i)] = restr[i];
        rows.push_back(std::move(row));
    }
    if (!any_nonzero)
        throw std::invalid_argument("is_contracted: all partials vanish on the line; input not reduced");
    return row_rank(rows) == 1;
}

std::vector<HPoly> contracted_component_lines(const CurveInput& c) {
    if (auto diag = validate(c))
        throw std::invalid_argument("contracted_component_lines: invalid input: " + *diag);
    std::vector<HPoly> out;
    for (const auto& comp : c.components) {
        if (comp.degree() != 1) continue;
        auto [p, q] = line_points(comp);
        if (is_contracted(c.product, p, q)) out.push_back(comp);
    }
    return out;
}

int polar_degree_qh(const HPoly& f) {
    int d = f.degree();
    return (d - 1) * (d - 1) - tjurina(f);
}

FiberReport fiber_over_point(const HPoly& f, const JacobianTensorResult& jt, const Point& q) {
    if (!jt.ok()) throw std::invalid_argument("fiber_over_point: Jacobian scheme is not an eigenscheme");
    if (q[0].is_zero() && q[1].is_zero() && q[2].is_zero())
        throw std::invalid_argument("fiber_over_point: all-zero point");
    int d = f.degree();
    FiberReport rep;
    rep.line = jt.linear.a.scaled(q[0]);
    rep.line += jt.linear.b.scaled(q[1]);
    rep.line += jt.linear.c.scaled(q[2]);
    rep.second = HPoly(d - 2);
    if (!jt.second.a.is_zero()) rep.second += jt.second.a.scaled(q[0]);
    if (!jt.second.b.is_zero()) rep.second += jt.second.b.scaled(q[1]);
    if (!jt.second.c.is_zero()) rep.second += jt.second.c.scaled(q[2]);

    auto [P, Q] = line_points(rep.line);
    BinaryForm restr = rep.second.is_zero() ? BinaryForm(d - 2) : restrict_to_line(rep.second, P, Q);
    if (restr.is_zero()) {
        rep.identically_zero = true;
        return rep;
    }
    rep.roots_total = d - 2;
    rep.roots_distinct = binary_gcd_squarefree(restr).squarefree_part.degree();
    return rep;
}

FiberReport fiber_over_point(const HPoly& f, const Point& q) {
    return fiber_over_point(f, jacobian_to_tensor(f), q);
}

HessianReport hessian_report(const HPoly& f, const CurveInput& c) {
    if (f.degree() < 3) throw std::invalid_argument("hessian_report: need deg f >= 3");
    HessianReport rep;
    HPoly h = hessian_det(f);
    for (size_t i = 0; i < c.components.size(); ++i) {
        const HPoly& comp = c.components[i];
        if (comp.degree() != 1) continue;
        if (!h.is_zero() && exact_divide(h, comp)) rep.divisible_components.push_back(static_cast<int>(i));
    }
    if (!h.is_zero()) {
        if (auto quot = exact_divide(h, f)) {
            rep.divisible_by_f = true;
            rep.quotient_vars = variables_present(*quot);
        }
    }
    return rep;
}

PolarReport polar_report(const CurveInput& c) {
    PolarReport rep;
    rep.degree_estimate = polar_degree_qh(c.product);
    rep.quasihomogeneous_assumed = true;
    rep.contracted_lines = contracted_component_lines(c);
    if (c.product.degree() >= 3) rep.hessian = hessian_report(c.product, c);
    return rep;
}

}  // namespace syzlab
