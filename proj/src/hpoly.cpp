#include "syzlab/hpoly.hpp"

#include <algorithm>

namespace syzlab {

HPoly HPoly::constant(const Rational& c) {
    HPoly p(0);
    p.add_term({0, 0, 0}, c);
    return p;
}

HPoly HPoly::monomial(const Rational& c, Mono m) {
    if (m.i < 0 || m.j < 0 || m.k < 0) throw std::invalid_argument("HPoly: negative exponent");
    HPoly p(m.degree());
    p.add_term(m, c);
    return p;
}

HPoly HPoly::variable(Var v) {
    Mono m;
    (v == Var::X ? m.i : v == Var::Y ? m.j : m.k) = 1;
    return monomial(Rational(1), m);
}

HPoly HPoly::linear(const Rational& a, const Rational& b, const Rational& c) {
    HPoly p(1);
    p.add_term({1, 0, 0}, a);
    p.add_term({0, 1, 0}, b);
    p.add_term({0, 0, 1}, c);
    return p;
}

Rational HPoly::coeff(Mono m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

Mono HPoly::leading_monomial() const {
    if (terms_.empty()) throw std::invalid_argument("HPoly: leading monomial of zero");
    return terms_.begin()->first;
}

void HPoly::add_term(Mono m, const Rational& c) {
    if (c.is_zero()) return;
    if (terms_.empty() && degree_ != m.degree()) {
        degree_ = require_nonneg(m.degree());
    } else if (m.degree() != degree_) {
        throw std::invalid_argument("HPoly: term degree does not match polynomial degree");
    }
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

HPoly HPoly::operator-() const {
    HPoly r(degree_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

HPoly& HPoly::operator+=(const HPoly& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) {
        *this = o;
        return *this;
    }
    if (degree_ != o.degree_) throw std::invalid_argument("HPoly: degree mismatch in add/sub");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

HPoly& HPoly::operator-=(const HPoly& o) { return *this += -o; }

HPoly operator*(const HPoly& a, const HPoly& b) {
    HPoly r(a.degree_ + b.degree_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            r.add_term({ma.i + mb.i, ma.j + mb.j, ma.k + mb.k}, ca * cb);
    return r;
}

HPoly HPoly::scaled(const Rational& c) const {
    if (c.is_zero()) return HPoly(degree_);
    HPoly r(degree_);
    for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
    return r;
}

HPoly HPoly::pow(int e) const {
    if (e < 0) throw std::invalid_argument("HPoly: negative exponent");
    HPoly r = HPoly::constant(Rational(1));
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
}

bool proportional(const HPoly& f, const HPoly& g) {
    if (f.is_zero() || g.is_zero()) return false;
    if (f.degree() != g.degree() || f.terms().size() != g.terms().size()) return false;
    Rational ratio;
    auto itf = f.terms().begin();
    auto itg = g.terms().begin();
    for (; itf != f.terms().end(); ++itf, ++itg) {
        if (!(itf->first == itg->first)) return false;
        Rational r = itf->second / itg->second;
        if (ratio.is_zero())
            ratio = r;
        else if (r != ratio)
            return false;
    }
    return true;
}

HPoly partial_derivative(const HPoly& f, Var v) {
    int d = f.degree();
    HPoly r(d > 0 ? d - 1 : 0);
    for (const auto& [m, c] : f.terms()) {
        int e = m.exp(v);
        if (e == 0) continue;
        Mono n = m;
        (v == Var::X ? n.i : v == Var::Y ? n.j : n.k) = e - 1;
        r.add_term(n, c * Rational(e));
    }
    return r;
}

std::array<HPoly, 3> gradient(const HPoly& f) {
    return {partial_derivative(f, Var::X), partial_derivative(f, Var::Y),
            partial_derivative(f, Var::Z)};
}

Rational evaluate(const HPoly& f, const Point& p) {
    if (p[0].is_zero() && p[1].is_zero() && p[2].is_zero())
        throw std::invalid_argument("evaluate: all-zero point");
    // power tables up to deg f
    int d = f.degree();
    std::array<std::vector<Rational>, 3> pw;
    for (int v = 0; v < 3; ++v) {
        pw[v].resize(static_cast<size_t>(d) + 1);
        pw[v][0] = Rational(1);
        for (int e = 1; e <= d; ++e) pw[v][e] = pw[v][e - 1] * p[static_cast<size_t>(v)];
    }
    Rational acc;
    for (const auto& [m, c] : f.terms()) acc += c * pw[0][m.i] * pw[1][m.j] * pw[2][m.k];
    return acc;
}

namespace {

BinaryForm linear_restriction(const Rational& a, const Rational& b) {
    BinaryForm l(1);
    l[0] = a;
    l[1] = b;
    return l;
}

}  // namespace

BinaryForm restrict_to_line(const HPoly& f, const Point& P, const Point& Q) {
    bool pz = P[0].is_zero() && P[1].is_zero() && P[2].is_zero();
    bool qz = Q[0].is_zero() && Q[1].is_zero() && Q[2].is_zero();
    if (pz || qz) throw std::invalid_argument("restrict_to_line: degenerate point");
    // P, Q span a line iff their cross product is nonzero
    Rational cx = P[1] * Q[2] - P[2] * Q[1];
    Rational cy = P[2] * Q[0] - P[0] * Q[2];
    Rational cz = P[0] * Q[1] - P[1] * Q[0];
    if (cx.is_zero() && cy.is_zero() && cz.is_zero())
        throw std::invalid_argument("restrict_to_line: proportional points");

    int d = f.degree();
    // powers of the three substituted linear forms s*P[v] + t*Q[v]
    std::array<std::vector<BinaryForm>, 3> pw;
    for (int v = 0; v < 3; ++v) {
        pw[v].reserve(static_cast<size_t>(d) + 1);
        BinaryForm one(0);
        one[0] = Rational(1);
        pw[v].push_back(one);
        BinaryForm lin = linear_restriction(P[static_cast<size_t>(v)], Q[static_cast<size_t>(v)]);
        for (int e = 1; e <= d; ++e) pw[v].push_back(pw[v].back() * lin);
    }
    BinaryForm acc(d);
    for (const auto& [m, c] : f.terms())
        acc += (pw[0][m.i] * pw[1][m.j] * pw[2][m.k]).scaled(c);
    return acc;
}

std::optional<HPoly> exact_divide(const HPoly& f, const HPoly& g) {
    if (g.is_zero()) throw std::invalid_argument("exact_divide: zero divisor");
    int qdeg = f.degree() - g.degree();
    if (f.is_zero()) return HPoly(std::max(qdeg, 0));
    if (qdeg < 0) return std::nullopt;

    HPoly rem = f;
    HPoly quot(qdeg);
    Mono lg = g.leading_monomial();
    const Rational& lc = g.terms().begin()->second;
    while (!rem.is_zero()) {
        Mono lr = rem.leading_monomial();
        Mono qm{lr.i - lg.i, lr.j - lg.j, lr.k - lg.k};
        if (qm.i < 0 || qm.j < 0 || qm.k < 0) return std::nullopt;
        Rational qc = rem.terms().begin()->second / lc;
        quot.add_term(qm, qc);
        rem -= HPoly::monomial(qc, qm) * g;
    }
    return quot;
}

HPoly hessian_det(const HPoly& f) {
    if (f.degree() < 2) throw std::invalid_argument("hessian_det: degree < 2");
    std::array<Var, 3> vars{Var::X, Var::Y, Var::Z};
    std::array<std::array<HPoly, 3>, 3> h;
    for (int a = 0; a < 3; ++a)
        for (int b = a; b < 3; ++b) {
            h[a][b] = partial_derivative(partial_derivative(f, vars[static_cast<size_t>(a)]),
                                         vars[static_cast<size_t>(b)]);
            h[b][a] = h[a][b];
        }
    HPoly det = h[0][0] * (h[1][1] * h[2][2] - h[1][2] * h[2][1]);
    det -= h[0][1] * (h[1][0] * h[2][2] - h[1][2] * h[2][0]);
    det += h[0][2] * (h[1][0] * h[2][1] - h[1][1] * h[2][0]);
    return det;
}

HPoly substitute_linear(const HPoly& f, const std::array<std::array<Rational, 3>, 3>& m) {
    int d = f.degree();
    std::array<std::vector<HPoly>, 3> pw;
    for (int v = 0; v < 3; ++v) {
        pw[v].reserve(static_cast<size_t>(d) + 1);
        pw[v].push_back(HPoly::constant(Rational(1)));
        HPoly lin = HPoly::linear(m[static_cast<size_t>(v)][0], m[static_cast<size_t>(v)][1],
                                  m[static_cast<size_t>(v)][2]);
        for (int e = 1; e <= d; ++e) pw[v].push_back(pw[v].back() * lin);
    }
    HPoly acc(d);
    for (const auto& [mono, c] : f.terms())
        acc += (pw[0][mono.i] * pw[1][mono.j] * pw[2][mono.k]).scaled(c);
    return acc;
}

std::vector<Var> variables_present(const HPoly& f) {
    bool seen[3] = {false, false, false};
    for (const auto& [m, c] : f.terms()) {
        if (m.i > 0) seen[0] = true;
        if (m.j > 0) seen[1] = true;
        if (m.k > 0) seen[2] = true;
    }
    std::vector<Var> out;
    for (int v = 0; v < 3; ++v)
        if (seen[v]) out.push_back(static_cast<Var>(v));
    return out;
}

std::vector<Mono> monomials_of_degree(int t) {
    std::vector<Mono> out;
    if (t < 0) return out;
    out.reserve(static_cast<size_t>(graded_dim(t)));
    for (int i = t; i >= 0; --i)
        for (int j = t - i; j >= 0; --j) out.push_back({i, j, t - i - j});
    return out;
}

int graded_dim(int t) { return t < 0 ? 0 : (t + 1) * (t + 2) / 2; }

std::vector<Rational> coeff_vector(const HPoly& f) {
    auto monos = monomials_of_degree(f.degree());
    std::vector<Rational> out(monos.size());
    auto it = f.terms().begin();
    // both sequences run in the same descending order
    for (size_t r = 0; r < monos.size() && it != f.terms().end(); ++r) {
        if (monos[r] == it->first) {
            out[r] = it->second;
            ++it;
        }
    }
    return out;
}

// ---- BinaryForm ----

BinaryForm::BinaryForm(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("BinaryForm: empty coefficient vector");
}

bool BinaryForm::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Rational& c) { return c.is_zero(); });
}

BinaryForm& BinaryForm::operator+=(const BinaryForm& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) {
        *this = o;
        return *this;
    }
    if (degree() != o.degree()) throw std::invalid_argument("BinaryForm: degree mismatch");
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
    BinaryForm r(a.degree() + b.degree());
    for (int i = 0; i <= a.degree(); ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; j <= b.degree(); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

BinaryForm BinaryForm::scaled(const Rational& c) const {
    BinaryForm r(degree());
    if (c.is_zero()) return r;
    for (int i = 0; i <= degree(); ++i) r[i] = coeffs_[static_cast<size_t>(i)] * c;
    return r;
}

BinaryForm BinaryForm::derivative_s() const {
    // d/ds of sum c_i s^(d-i) t^i
    int d = degree();
    BinaryForm r(std::max(d - 1, 0));
    if (d == 0) return r;
    for (int i = 0; i < d; ++i) r[i] = coeffs_[static_cast<size_t>(i)] * Rational(d - i);
    return r;
}

BinaryForm BinaryForm::derivative_t() const {
    int d = degree();
    BinaryForm r(std::max(d - 1, 0));
    if (d == 0) return r;
    for (int i = 1; i <= d; ++i) r[i - 1] = coeffs_[static_cast<size_t>(i)] * Rational(i);
    return r;
}

namespace {

// Univariate view: g = t^m * sum_j p[j] u^j with u = s/t and p.back() != 0.
struct UniView {
    int t_mult = 0;
    std::vector<Rational> p;  // ascending powers of u, nonempty, trailing nonzero
};

UniView to_uni(const BinaryForm& g) {
    int d = g.degree();
    int first = 0;
    while (g[first].is_zero()) ++first;  // caller guarantees g != 0
    UniView v;
    v.t_mult = first;
    // coefficient of u^(d-i) is g[i]; trim to top power d-first
    v.p.resize(static_cast<size_t>(d - first) + 1);
    for (int i = first; i <= d; ++i) v.p[static_cast<size_t>(d - i)] = g[i];
    return v;
}

BinaryForm from_uni(const UniView& v) {
    int pd = static_cast<int>(v.p.size()) - 1;
    BinaryForm g(pd + v.t_mult);
    for (int j = 0; j <= pd; ++j) g[pd - j + v.t_mult] = v.p[static_cast<size_t>(j)];
    return g;
}

void uni_trim(std::vector<Rational>& p) {
    while (p.size() > 1 && p.back().is_zero()) p.pop_back();
}

void uni_make_monic(std::vector<Rational>& p) {
    Rational lead = p.back();
    if (lead.is_zero() || lead.is_one()) return;
    for (auto& c : p) c /= lead;
}

// remainder of a by b, b monic-normalized internally
std::vector<Rational> uni_rem(std::vector<Rational> a, std::vector<Rational> b) {
    uni_trim(a);
    uni_trim(b);
    uni_make_monic(b);
    while (a.size() >= b.size() && !(a.size() == 1 && a[0].is_zero())) {
        Rational c = a.back();
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        uni_trim(a);  // top term cancels exactly, b is monic
    }
    return a;
}

std::vector<Rational> uni_gcd(std::vector<Rational> a, std::vector<Rational> b) {
    uni_trim(a);
    uni_trim(b);
    auto is_zero = [](const std::vector<Rational>& p) {
        return p.size() == 1 && p[0].is_zero();
    };
    while (!is_zero(b)) {
        auto r = uni_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    uni_make_monic(a);
    return a;
}

std::vector<Rational> uni_divexact(std::vector<Rational> a, std::vector<Rational> b) {
    uni_trim(a);
    uni_trim(b);
    std::vector<Rational> q(a.size() >= b.size() ? a.size() - b.size() + 1 : 1);
    while (a.size() >= b.size() && !(a.size() == 1 && a[0].is_zero())) {
        Rational c = a.back() / b.back();
        size_t shift = a.size() - b.size();
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        uni_trim(a);
    }
    if (!(a.size() == 1 && a[0].is_zero()))
        throw std::invalid_argument("binary_divexact: not divisible");
    return q;
}

}  // namespace

BinaryForm binary_gcd(const BinaryForm& a, const BinaryForm& b) {
    if (a.is_zero() || b.is_zero()) throw std::invalid_argument("binary_gcd: zero form");
    UniView va = to_uni(a), vb = to_uni(b);
    UniView g;
    g.t_mult = std::min(va.t_mult, vb.t_mult);
    g.p = uni_gcd(va.p, vb.p);
    return from_uni(g);
}

BinaryForm binary_divexact(const BinaryForm& f, const BinaryForm& g) {
    if (g.is_zero()) throw std::invalid_argument("binary_divexact: zero divisor");
    if (f.is_zero()) return BinaryForm(std::max(f.degree() - g.degree(), 0));
    UniView vf = to_uni(f), vg = to_uni(g);
    if (vf.t_mult < vg.t_mult) throw std::invalid_argument("binary_divexact: not divisible");
    UniView q;
    q.t_mult = vf.t_mult - vg.t_mult;
    q.p = uni_divexact(vf.p, vg.p);
    return from_uni(q);
}

SquarefreeParts binary_gcd_squarefree(const BinaryForm& g) {
    if (g.is_zero()) throw std::invalid_argument("binary_gcd_squarefree: zero form");
    if (g.degree() == 0) {
        BinaryForm one(0);
        one[0] = Rational(1);
        return {one, one};  // constants: no roots
    }
    BinaryForm gs = g.derivative_s();
    BinaryForm gt = g.derivative_t();
    BinaryForm h;
    if (gs.is_zero())
        h = binary_gcd(g, gt);
    else if (gt.is_zero())
        h = binary_gcd(g, gs);
    else
        h = binary_gcd(g, binary_gcd(gs, gt));
    SquarefreeParts out{h, binary_divexact(g, h)};
    return out;
}

}  // namespace syzlab
