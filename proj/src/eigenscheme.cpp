#include "syzlab/eigenscheme.hpp"

#include "syzlab/qmat.hpp"

namespace syzlab {

namespace {

std::vector<Rational> padded_coeff_vector(const HPoly& f, int degree) {
    if (f.is_zero()) return std::vector<Rational>(static_cast<size_t>(graded_dim(degree)));
    if (f.degree() != degree) throw std::invalid_argument("coeff vector: degree mismatch");
    return coeff_vector(f);
}

// minor span == partial span in degree d-1 (both ideals are generated there)
bool minors_match_partials(const Tensor& t, const HPoly& f) {
    int d = f.degree();
    auto minors = minors_ideal(t);
    std::vector<std::vector<Rational>> a, b;
    for (const auto& m : minors) a.push_back(padded_coeff_vector(m, d - 1));
    for (const auto& p : gradient(f)) b.push_back(padded_coeff_vector(p, d - 1));
    return span_equal(a, b);
}

}  // namespace

Tensor make_tensor(HPoly g1, HPoly g2, HPoly g3) {
    if (g1.is_zero() && g2.is_zero() && g3.is_zero())
        throw std::invalid_argument("make_tensor: all components zero");
    int e = std::max({g1.degree(), g2.degree(), g3.degree()});
    if (e < 1) throw std::invalid_argument("make_tensor: degree must be >= 1");
    auto fix = [&](HPoly& g) {
        if (g.is_zero())
            g = HPoly(e);
        else if (g.degree() != e)
            throw std::invalid_argument("make_tensor: mixed degrees");
    };
    fix(g1);
    fix(g2);
    fix(g3);
    return Tensor{std::move(g1), std::move(g2), std::move(g3)};
}

std::array<HPoly, 3> minors_ideal(const Tensor& t) {
    HPoly x = HPoly::variable(Var::X), y = HPoly::variable(Var::Y), z = HPoly::variable(Var::Z);
    return {x * t.g2 - y * t.g1, x * t.g3 - z * t.g1, y * t.g3 - z * t.g2};
}

std::optional<int> eigenscheme_degree(const Tensor& t) {
    auto minors = minors_ideal(t);
    // all-zero minors: every point is an eigenpoint
    if (minors[0].is_zero() && minors[1].is_zero() && minors[2].is_zero()) return std::nullopt;
    IdealPresentation p;
    p.gens.assign(minors.begin(), minors.end());
    // the two determinantal relations among the minors
    SyzygyVec linear{HPoly::variable(Var::Z), -HPoly::variable(Var::Y), HPoly::variable(Var::X)};
    SyzygyVec high{t.g3, -t.g2, t.g1};
    p.relations = {linear, high};
    return stable_presented_quotient_dim(p, t.degree() + 2);
}

bool contains_point(const Tensor& t, const Point& p) {
    if (p[0].is_zero() && p[1].is_zero() && p[2].is_zero())
        throw std::invalid_argument("contains_point: all-zero point");
    for (const auto& m : minors_ideal(t))
        if (!m.is_zero() && !evaluate(m, p).is_zero()) return false;
    return true;
}

const char* tensor_failure_name(TensorFailure f) {
    switch (f) {
        case TensorFailure::NoLinearSyzygy:
            return "no linear syzygy";
        case TensorFailure::MultipleLinearSyzygies:
            return "linear syzygy space has dimension > 1";
        case TensorFailure::DependentEntries:
            return "linear syzygy entries are linearly dependent";
        case TensorFailure::NotFree:
            return "syzygy module is not free with exponents (1, d-2)";
        case TensorFailure::SpanMismatch:
            return "minor ideal does not match the Jacobian ideal";
    }
    return "unknown";
}

JacobianTensorResult jacobian_to_tensor(const HPoly& f) {
    JacobianTensorResult out;
    int d = f.degree();
    int r = mdr(f);
    if (r == 0) throw std::invalid_argument("jacobian_to_tensor: requires mdr >= 1");
    if (r != 1) {
        out.failure = TensorFailure::NoLinearSyzygy;
        return out;
    }
    auto syz1 = syzygy_space(f, 1);
    if (syz1.size() != 1) {
        out.failure = TensorFailure::MultipleLinearSyzygies;
        return out;
    }
    const SyzygyVec& lin = syz1[0];

    // rows of A: coefficients of L1, L2, L3 against (x, y, z)
    QMat a(3, 3);
    const HPoly* entries[3] = {&lin.a, &lin.b, &lin.c};
    for (int i = 0; i < 3; ++i) {
        a.at(i, 0) = entries[i]->coeff({1, 0, 0});
        a.at(i, 1) = entries[i]->coeff({0, 1, 0});
        a.at(i, 2) = entries[i]->coeff({0, 0, 1});
    }
    if (rank(a) < 3) {
        out.failure = TensorFailure::DependentEntries;
        return out;
    }

    Freeness fr = resolution_probe(f);
    if (fr.kind != FreenessKind::Free || fr.d1 != 1 || fr.d2 != d - 2) {
        out.failure = TensorFailure::NotFree;
        return out;
    }

    // a degree-(d-2) syzygy outside R_{d-3} * (L1, L2, L3)
    auto high = syzygy_space(f, d - 2);
    std::vector<std::vector<Rational>> shifts;
    for (const Mono& mu : monomials_of_degree(d - 3)) {
        HPoly m = HPoly::monomial(Rational(1), mu);
        SyzygyVec sh{m * lin.a, m * lin.b, m * lin.c};
        shifts.push_back(sh.coeff_vector());
    }
    int base_rank = row_rank(shifts);
    std::optional<SyzygyVec> second;
    for (const auto& s : high) {
        auto widened = shifts;
        widened.push_back(s.coeff_vector());
        if (row_rank(widened) > base_rank) {
            second = s;
            break;
        }
    }
    if (!second) {
        out.failure = TensorFailure::SpanMismatch;
        return out;
    }

    // T = A^{-1} G via the adjugate
    Rational det = a.at(0, 0) * (a.at(1, 1) * a.at(2, 2) - a.at(1, 2) * a.at(2, 1)) -
                   a.at(0, 1) * (a.at(1, 0) * a.at(2, 2) - a.at(1, 2) * a.at(2, 0)) +
                   a.at(0, 2) * (a.at(1, 0) * a.at(2, 1) - a.at(1, 1) * a.at(2, 0));
    auto cof = [&](int i, int j) {
        int r1 = (i + 1) % 3, r2 = (i + 2) % 3, c1 = (j + 1) % 3, c2 = (j + 2) % 3;
        return a.at(r1, c1) * a.at(r2, c2) - a.at(r1, c2) * a.at(r2, c1);
    };
    const HPoly* g[3] = {&second->a, &second->b, &second->c};
    std::array<HPoly, 3> t;
    for (int i = 0; i < 3; ++i) {
        HPoly acc(d - 2);
        for (int j = 0; j < 3; ++j) {
            // inverse entry (i, j) = cof(j, i) / det
            Rational w = cof(j, i) / det;
            if (!w.is_zero() && !g[j]->is_zero()) acc += g[j]->scaled(w);
        }
        t[static_cast<size_t>(i)] = std::move(acc);
    }
    Tensor tensor = make_tensor(t[0], t[1], t[2]);
    if (!minors_match_partials(tensor, f)) {
        out.failure = TensorFailure::SpanMismatch;
        return out;
    }
    out.tensor = std::move(tensor);
    out.linear = lin;
    out.second = *second;
    return out;
}

HBMatrix buchweitz_conca_matrix(const HPoly& f, const SyzygyVec& s) {
    int d = f.degree();
    if (s.degree() != 1 || !is_syzygy_of(s, f))
        throw std::invalid_argument("buchweitz_conca_matrix: s must be a linear syzygy of f");
    // diagonal shape (a x, b y, c z)
    auto single = [](const HPoly& p, Mono m) -> Rational {
        if (p.is_zero()) return Rational(0);
        if (p.terms().size() != 1 || !(p.leading_monomial() == m)) {
            throw std::invalid_argument("buchweitz_conca_matrix: syzygy is not of shape (ax, by, cz)");
        }
        return p.coeff(m);
    };
    Rational ca = single(s.a, {1, 0, 0});
    Rational cb = single(s.b, {0, 1, 0});
    Rational cc = single(s.c, {0, 0, 1});
    if (ca.is_zero() || cb.is_zero() || cc.is_zero())
        throw std::invalid_argument("buchweitz_conca_matrix: requires abc != 0");

    Rational inv_d2 = Rational(1, d + 2);
    HPoly dyz = partial_derivative(partial_derivative(f, Var::Y), Var::Z);
    HPoly dxz = partial_derivative(partial_derivative(f, Var::X), Var::Z);
    HPoly dxy = partial_derivative(partial_derivative(f, Var::X), Var::Y);

    HBMatrix m;
    m.linear_column = {s.a, s.b, s.c};
    m.high_column = {dyz.scaled((cc.inverse() - cb.inverse()) * inv_d2),
                     dxz.scaled((ca.inverse() - cc.inverse()) * inv_d2),
                     dxy.scaled((cb.inverse() - ca.inverse()) * inv_d2)};

    SyzygyVec second{m.high_column[0], m.high_column[1], m.high_column[2]};
    if (!is_syzygy_of(second, f))
        throw std::logic_error("buchweitz_conca_matrix: second column failed the syzygy check");
    auto minors = hb_minors(m);
    std::vector<std::vector<Rational>> a, b;
    for (const auto& mm : minors) a.push_back(padded_coeff_vector(mm, d - 1));
    for (const auto& p : gradient(f)) b.push_back(padded_coeff_vector(p, d - 1));
    if (!span_equal(a, b))
        throw std::logic_error("buchweitz_conca_matrix: minors do not span the Jacobian ideal");
    return m;
}

std::array<HPoly, 3> hb_minors(const HBMatrix& m) {
    return {m.linear_column[0] * m.high_column[1] - m.linear_column[1] * m.high_column[0],
            m.linear_column[0] * m.high_column[2] - m.linear_column[2] * m.high_column[0],
            m.linear_column[1] * m.high_column[2] - m.linear_column[2] * m.high_column[1]};
}

std::array<Rational, 3> blowup_class(int d) {
    if (d < 3) throw std::invalid_argument("blowup_class: requires d >= 3");
    return {Rational(d - 1), Rational(d), Rational(1)};
}

}  // namespace syzlab
