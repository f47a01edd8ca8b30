#include "syzlab/arrangements.hpp"

#include <algorithm>
#include <map>

#include "syzlab/jacobian.hpp"
#include "syzlab/qmat.hpp"

namespace syzlab {

namespace {

const std::array<std::pair<FamilyTag, const char*>, 10> kFamilyNames{{
    {FamilyTag::L, "L"},
    {FamilyTag::C1, "C1"},
    {FamilyTag::C2, "C2"},
    {FamilyTag::CL1, "CL1"},
    {FamilyTag::CL2, "CL2"},
    {FamilyTag::CL3, "CL3"},
    {FamilyTag::CL4, "CL4"},
    {FamilyTag::CL5, "CL5"},
    {FamilyTag::CL6, "CL6"},
    {FamilyTag::None, "None"},
}};

HPoly conic_bitangent(const Rational& a) {
    // xz + a y^2
    HPoly p(2);
    p.add_term({1, 0, 1}, Rational(1));
    p.add_term({0, 2, 0}, a);
    return p;
}

HPoly conic_hyperosculating(const Rational& a) {
    // x^2 + a (xz + y^2)
    HPoly p(2);
    p.add_term({2, 0, 0}, Rational(1));
    p.add_term({1, 0, 1}, a);
    p.add_term({0, 2, 0}, a);
    return p;
}

// 6-entry coefficient vector of a conic: x^2, y^2, z^2, xy, xz, yz
std::vector<Rational> conic_vector(const HPoly& q) {
    return {q.coeff({2, 0, 0}), q.coeff({0, 2, 0}), q.coeff({0, 0, 2}),
            q.coeff({1, 1, 0}), q.coeff({1, 0, 1}), q.coeff({0, 1, 1})};
}

Rational conic_discriminant(const HPoly& q) {
    // det of the symmetric matrix of the quadratic form, times 8
    Rational a = q.coeff({2, 0, 0}), b = q.coeff({0, 2, 0}), c = q.coeff({0, 0, 2});
    Rational d = q.coeff({1, 1, 0}), e = q.coeff({1, 0, 1}), f = q.coeff({0, 1, 1});
    // | 2a d e |
    // | d 2b f |
    // | e f 2c |
    return Rational(2) * a * (Rational(4) * b * c - f * f) - d * (Rational(2) * d * c - f * e) +
           e * (d * f - Rational(2) * b * e);
}

bool is_smooth_conic(const HPoly& q) {
    return q.degree() == 2 && !conic_discriminant(q).is_zero();
}

void require_distinct_nonzero(const std::vector<Rational>& params) {
    for (size_t i = 0; i < params.size(); ++i) {
        if (params[i].is_zero())
            throw std::invalid_argument("generate_family: parameters must be nonzero");
        for (size_t j = i + 1; j < params.size(); ++j)
            if (params[i] == params[j])
                throw std::invalid_argument("generate_family: parameters must be distinct");
    }
}

std::vector<Rational> line_coeffs(const HPoly& l) {
    return {l.coeff({1, 0, 0}), l.coeff({0, 1, 0}), l.coeff({0, 0, 1})};
}

// exact intersection point of two non-proportional lines (cross product)
Point line_intersection(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Point normalize_point(const Point& p) {
    // scale so the first nonzero coordinate is 1
    for (const Rational& c : p) {
        if (c.is_zero()) continue;
        Rational inv = c.inverse();
        return {p[0] * inv, p[1] * inv, p[2] * inv};
    }
    return p;
}

bool point_on_line(const Point& p, const std::vector<Rational>& l) {
    return (l[0] * p[0] + l[1] * p[1] + l[2] * p[2]).is_zero();
}

struct PointCmp {
    bool operator()(const Point& a, const Point& b) const {
        for (int i = 0; i < 3; ++i) {
            if (a[static_cast<size_t>(i)] < b[static_cast<size_t>(i)]) return true;
            if (b[static_cast<size_t>(i)] < a[static_cast<size_t>(i)]) return false;
        }
        return false;
    }
};

}  // namespace

const char* family_name(FamilyTag t) {
    for (const auto& [tag, name] : kFamilyNames)
        if (tag == t) return name;
    return "None";
}

std::optional<FamilyTag> family_from_name(const std::string& name) {
    for (const auto& [tag, n] : kFamilyNames)
        if (name == n) return tag;
    return std::nullopt;
}

CurveInput make_curve(std::vector<HPoly> components) {
    if (components.empty()) throw std::invalid_argument("make_curve: no components");
    HPoly product = HPoly::constant(Rational(1));
    for (const auto& c : components) {
        if (c.is_zero()) throw std::invalid_argument("make_curve: zero component");
        product = product * c;
    }
    return CurveInput{std::move(components), std::move(product)};
}

int family_degree(FamilyTag tag, int m) {
    switch (tag) {
        case FamilyTag::L:
            return m + 1;
        case FamilyTag::C1:
        case FamilyTag::C2:
            return 2 * m;
        case FamilyTag::CL1:
        case FamilyTag::CL2:
        case FamilyTag::CL6:
            return 2 * m + 1;
        case FamilyTag::CL3:
        case FamilyTag::CL4:
            return 2 * m + 2;
        case FamilyTag::CL5:
            return 2 * m + 3;
        default:
            throw std::invalid_argument("family_degree: not a family");
    }
}

std::vector<int> family_degrees_in(FamilyTag tag, int lo, int hi) {
    std::vector<int> out;
    int min_m = tag == FamilyTag::L ? 2 : 2;  // conic families need m >= 2; L needs d >= 3
    for (int m = min_m; ; ++m) {
        int d = family_degree(tag, m);
        if (d > hi) break;
        if (d >= lo) out.push_back(d);
    }
    return out;
}

CurveInput generate_family(FamilyTag tag, const std::vector<Rational>& params, bool normal_form,
                           Rng* rng) {
    std::vector<HPoly> comps;
    if (tag == FamilyTag::L) {
        if (params.size() % 2 != 0 || params.size() < 4)
            throw std::invalid_argument("generate_family: L needs >= 2 slope pairs");
        size_t n = params.size() / 2;
        comps.push_back(HPoly::variable(Var::Z));
        for (size_t i = 0; i < n; ++i) {
            const Rational& a = params[2 * i];
            const Rational& b = params[2 * i + 1];
            if (a.is_zero() && b.is_zero())
                throw std::invalid_argument("generate_family: zero slope pair");
            comps.push_back(HPoly::linear(a, b, Rational(0)));
            for (size_t j = 0; j < i; ++j) {
                // (a_i : b_i) distinct as projective pairs
                if ((params[2 * i] * params[2 * j + 1] - params[2 * i + 1] * params[2 * j]).is_zero())
                    throw std::invalid_argument("generate_family: duplicate slope pair");
            }
        }
    } else {
        if (params.size() < 2)
            throw std::invalid_argument("generate_family: conic families need m >= 2 parameters");
        require_distinct_nonzero(params);
        bool hyper = tag == FamilyTag::C1 || tag == FamilyTag::CL1;
        switch (tag) {
            case FamilyTag::C1:
            case FamilyTag::C2:
                break;
            case FamilyTag::CL1:
            case FamilyTag::CL2:
                comps.push_back(HPoly::variable(Var::X));
                break;
            case FamilyTag::CL3:
                comps.push_back(HPoly::variable(Var::X));
                comps.push_back(HPoly::variable(Var::Z));
                break;
            case FamilyTag::CL4:
                comps.push_back(HPoly::variable(Var::X));
                comps.push_back(HPoly::variable(Var::Y));
                break;
            case FamilyTag::CL5:
                comps.push_back(HPoly::variable(Var::X));
                comps.push_back(HPoly::variable(Var::Y));
                comps.push_back(HPoly::variable(Var::Z));
                break;
            case FamilyTag::CL6:
                comps.push_back(HPoly::variable(Var::Y));
                break;
            default:
                throw std::invalid_argument("generate_family: not a generator tag");
        }
        for (const Rational& a : params)
            comps.push_back(hyper ? conic_hyperosculating(a) : conic_bitangent(a));
    }

    if (!normal_form) {
        if (!rng) throw std::invalid_argument("generate_family: random coordinates need an rng");
        auto m = random_coordinate_change(*rng);
        for (auto& c : comps) c = substitute_linear(c, m);
    }
    return make_curve(std::move(comps));
}

std::vector<Rational> random_family_params(FamilyTag tag, int degree, Rng& rng) {
    if (tag == FamilyTag::L) {
        int n = degree - 1;
        if (n < 2) throw std::invalid_argument("random_family_params: L needs degree >= 3");
        // distinct projective slope pairs with small integer entries
        std::vector<std::pair<long, long>> used;
        std::vector<Rational> out;
        while (static_cast<int>(used.size()) < n) {
            long a = rng.uniform(-9, 9), b = rng.uniform(-9, 9);
            if (a == 0 && b == 0) continue;
            bool dup = false;
            for (auto [ua, ub] : used)
                if (a * ub - b * ua == 0) dup = true;
            if (dup) continue;
            used.emplace_back(a, b);
            out.push_back(Rational(a));
            out.push_back(Rational(b));
        }
        return out;
    }
    int m = 0;
    switch (tag) {
        case FamilyTag::C1:
        case FamilyTag::C2:
            m = degree / 2;
            break;
        case FamilyTag::CL1:
        case FamilyTag::CL2:
        case FamilyTag::CL6:
            m = (degree - 1) / 2;
            break;
        case FamilyTag::CL3:
        case FamilyTag::CL4:
            m = (degree - 2) / 2;
            break;
        case FamilyTag::CL5:
            m = (degree - 3) / 2;
            break;
        default:
            throw std::invalid_argument("random_family_params: not a family");
    }
    if (family_degree(tag, m) != degree)
        throw std::invalid_argument("random_family_params: degree not realizable by family");
    if (m < 2) throw std::invalid_argument("random_family_params: conic families need m >= 2");
    std::vector<long> used;
    std::vector<Rational> out;
    while (static_cast<int>(used.size()) < m) {
        long a = rng.uniform(-9, 9);
        if (a == 0 || std::find(used.begin(), used.end(), a) != used.end()) continue;
        used.push_back(a);
        out.push_back(Rational(a));
    }
    return out;
}

std::array<std::array<Rational, 3>, 3> random_coordinate_change(Rng& rng) {
    while (true) {
        std::array<std::array<long, 3>, 3> m;
        for (auto& row : m)
            for (auto& e : row) e = rng.uniform(-4, 4);
        long det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                   m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                   m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
        if (det < 1 || det > 50) continue;
        std::array<std::array<Rational, 3>, 3> out;
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c)
                out[static_cast<size_t>(r)][static_cast<size_t>(c)] =
                    Rational(m[static_cast<size_t>(r)][static_cast<size_t>(c)]);
        return out;
    }
}

CurveInput random_family_instance(FamilyTag tag, int degree, bool random_coords, Rng& rng) {
    auto params = random_family_params(tag, degree, rng);
    return generate_family(tag, params, !random_coords, &rng);
}

std::optional<std::string> validate(const CurveInput& c) {
    if (c.components.empty()) return "no components";
    for (size_t i = 0; i < c.components.size(); ++i) {
        const HPoly& f = c.components[i];
        if (f.is_zero() || f.degree() < 1) return "component " + std::to_string(i) + " is constant";
        if (f.degree() == 2 && !is_smooth_conic(f))
            return "component " + std::to_string(i) + " is a degenerate conic";
        for (size_t j = i + 1; j < c.components.size(); ++j)
            if (c.components[j].degree() == f.degree() && proportional(f, c.components[j]))
                return "components " + std::to_string(i) + " and " + std::to_string(j) +
                       " are proportional";
    }
    int total = 0;
    for (const auto& f : c.components) total += f.degree();
    if (total != c.product.degree()) return "cached product degree mismatch";
    return std::nullopt;
}

PairKind pair_class(const HPoly& c1, const HPoly& c2) {
    if (!is_smooth_conic(c1) || !is_smooth_conic(c2))
        throw std::invalid_argument("pair_class: both inputs must be smooth conics");
    if (proportional(c1, c2)) throw std::invalid_argument("pair_class: proportional conics");
    int tau = tjurina(c1 * c2);
    if (tau == 6) return PairKind::Tacnodal;
    if (tau == 7) return PairKind::Hyperosculating;
    return PairKind::Other;
}

PencilClass detect_pencil(const std::vector<HPoly>& conics) {
    if (conics.size() < 2) throw std::invalid_argument("detect_pencil: need at least 2 conics");
    PencilClass out;
    std::vector<std::vector<Rational>> vecs;
    vecs.reserve(conics.size());
    for (const auto& q : conics) vecs.push_back(conic_vector(q));
    if (row_rank(vecs) != 2) return out;
    std::optional<PairKind> shared;
    for (size_t i = 0; i < conics.size(); ++i)
        for (size_t j = i + 1; j < conics.size(); ++j) {
            PairKind k = pair_class(conics[i], conics[j]);
            if (k == PairKind::Other) return out;
            if (!shared) shared = k;
            if (k != *shared) return out;
        }
    out.kind = *shared == PairKind::Tacnodal ? PencilKind::Bitangent : PencilKind::Hyperosculating;
    out.basis = {conics[0], conics[1]};
    return out;
}

LineRole line_role(const HPoly& line, const PencilClass& pencil) {
    if (pencil.kind == PencilKind::Other)
        throw std::invalid_argument("line_role: pencil class Other");
    if (line.is_zero() || line.degree() != 1)
        throw std::invalid_argument("line_role: need a nonzero line");

    std::vector<std::vector<Rational>> base{conic_vector(pencil.basis[0]),
                                            conic_vector(pencil.basis[1])};
    auto with_square = base;
    with_square.push_back(conic_vector(line * line));
    bool square_member = row_rank(with_square) == 2;

    auto with_products = base;
    for (Var v : {Var::X, Var::Y, Var::Z})
        with_products.push_back(conic_vector(line * HPoly::variable(v)));
    bool product_member = row_rank(with_products) <= 4;

    if (pencil.kind == PencilKind::Hyperosculating)
        return (square_member || product_member) ? LineRole::TangentLine : LineRole::Generic;
    if (square_member) return LineRole::BaseLine;
    if (product_member) return LineRole::TangentLine;
    return LineRole::Generic;
}

FamilyTag recognize(const CurveInput& c) {
    if (auto diag = validate(c))
        throw std::invalid_argument("recognize: invalid input: " + *diag);
    std::vector<HPoly> lines, conics;
    for (const auto& f : c.components) {
        if (f.degree() == 1)
            lines.push_back(f);
        else if (f.degree() == 2)
            conics.push_back(f);
        else
            throw std::invalid_argument("recognize: component of degree >= 3");
    }
    int d = c.product.degree();
    if (d < 4) return FamilyTag::None;

    if (conics.empty()) {
        // L: d-1 concurrent lines plus one line missing the common point
        std::vector<std::vector<Rational>> coeffs;
        coeffs.reserve(lines.size());
        for (const auto& l : lines) coeffs.push_back(line_coeffs(l));
        std::map<Point, int, PointCmp> counts;
        for (size_t i = 0; i < lines.size(); ++i)
            for (size_t j = i + 1; j < lines.size(); ++j) {
                Point p = normalize_point(line_intersection(coeffs[i], coeffs[j]));
                int through = 0;
                auto it = counts.find(p);
                if (it == counts.end()) {
                    for (const auto& l : coeffs)
                        if (point_on_line(p, l)) ++through;
                    counts.emplace(p, through);
                }
            }
        int best = 0;
        for (const auto& [p, n] : counts) best = std::max(best, n);
        return best == d - 1 ? FamilyTag::L : FamilyTag::None;
    }

    if (conics.size() < 2) return FamilyTag::None;
    PencilClass pencil = detect_pencil(conics);
    if (pencil.kind == PencilKind::Other) return FamilyTag::None;

    int tangent = 0, base = 0;
    for (const auto& l : lines) {
        switch (line_role(l, pencil)) {
            case LineRole::TangentLine:
                ++tangent;
                break;
            case LineRole::BaseLine:
                ++base;
                break;
            case LineRole::Generic:
                return FamilyTag::None;
        }
    }
    if (pencil.kind == PencilKind::Hyperosculating) {
        if (tangent == 0 && base == 0) return FamilyTag::C1;
        if (tangent == 1 && base == 0) return FamilyTag::CL1;
        return FamilyTag::None;
    }
    if (tangent == 0 && base == 0) return FamilyTag::C2;
    if (tangent == 1 && base == 0) return FamilyTag::CL2;
    if (tangent == 2 && base == 0) return FamilyTag::CL3;
    if (tangent == 1 && base == 1) return FamilyTag::CL4;
    if (tangent == 2 && base == 1) return FamilyTag::CL5;
    if (tangent == 0 && base == 1) return FamilyTag::CL6;
    return FamilyTag::None;
}

CurveInput perturb_off_family(const CurveInput& c, FamilyTag tag) {
    auto comps = c.components;
    if (tag == FamilyTag::L) {
        // move one of the concurrent lines off the common point; the point is
        // recovered from pairwise intersections, so this works in any frame
        std::vector<std::vector<Rational>> coeffs;
        for (const auto& l : comps) coeffs.push_back(line_coeffs(l));
        Point common{};
        int best = 0;
        for (size_t i = 0; i < comps.size(); ++i)
            for (size_t j = i + 1; j < comps.size(); ++j) {
                Point p = normalize_point(line_intersection(coeffs[i], coeffs[j]));
                int through = 0;
                for (const auto& l : coeffs)
                    if (point_on_line(p, l)) ++through;
                if (through > best) {
                    best = through;
                    common = p;
                }
            }
        for (int v = 0; v < 3; ++v) {
            if (common[static_cast<size_t>(v)].is_zero()) continue;
            // a line through the common point, pushed off it
            for (auto& l : comps) {
                if (!point_on_line(common, line_coeffs(l))) continue;
                HPoly moved = l + HPoly::variable(static_cast<Var>(v));
                bool clash = moved.is_zero() || moved.degree() != 1;
                for (const auto& other : comps)
                    if (!clash && proportional(other, moved)) clash = true;
                if (clash) continue;
                l = moved;
                return make_curve(std::move(comps));
            }
        }
        throw std::logic_error("perturb_off_family: could not move a line");
    }
    // push the first conic off its pencil span
    std::vector<std::vector<Rational>> span;
    for (const auto& q : comps)
        if (q.degree() == 2) span.push_back(conic_vector(q));
    const std::array<Mono, 6> candidates{{{0, 0, 2}, {2, 0, 0}, {0, 2, 0}, {1, 1, 0}, {0, 1, 1}, {1, 0, 1}}};
    for (const Mono& mono : candidates) {
        HPoly bump = HPoly::monomial(Rational(1), mono);
        auto widened = span;
        widened.push_back(conic_vector(bump));
        if (row_rank(widened) == row_rank(span)) continue;  // stays inside the span
        for (auto& q : comps) {
            if (q.degree() != 2) continue;
            for (long eps = 1; eps < 8; ++eps) {
                HPoly cand = q + bump.scaled(Rational(eps));
                if (!is_smooth_conic(cand)) continue;
                q = cand;
                return make_curve(std::move(comps));
            }
            break;
        }
    }
    throw std::logic_error("perturb_off_family: could not move a conic");
}

}  // namespace syzlab
