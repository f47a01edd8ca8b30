#include "syzlab/jacobian.hpp"

#include <algorithm>
#include <map>

namespace syzlab {

namespace {

// index lookup for monomials of one degree, in canonical order
std::map<Mono, int, MonoCmp> mono_index(int t) {
    std::map<Mono, int, MonoCmp> idx;
    int i = 0;
    for (const Mono& m : monomials_of_degree(t)) idx.emplace(m, i++);
    return idx;
}

std::vector<HPoly> partials(const HPoly& f) {
    auto g = gradient(f);
    return {g[0], g[1], g[2]};
}

// coefficient rows of mono * rel over the (R_s)^3 basis, for every monomial
// shift of every relation into syzygy degree s
QMat relation_shift_matrix(const std::vector<SyzygyVec>& relations, int s) {
    int block = graded_dim(s);
    auto idx = mono_index(s);
    std::vector<std::vector<Rational>> rows;
    for (const auto& rel : relations) {
        int drop = s - rel.degree();
        if (drop < 0) continue;
        const HPoly* comps[3] = {&rel.a, &rel.b, &rel.c};
        for (const Mono& mu : monomials_of_degree(drop)) {
            std::vector<Rational> row(static_cast<size_t>(3 * block));
            for (int blk = 0; blk < 3; ++blk)
                for (const auto& [m, cf] : comps[blk]->terms())
                    row[static_cast<size_t>(blk * block +
                                            idx.at({m.i + mu.i, m.j + mu.j, m.k + mu.k}))] = cf;
            rows.push_back(std::move(row));
        }
    }
    return QMat::from_rows(rows);
}

void verify_relations(const IdealPresentation& p) {
    if (p.gens.size() != 3) throw std::invalid_argument("presentation: need three generators");
    for (const auto& rel : p.relations) {
        HPoly acc = rel.a * p.gens[0];
        acc += rel.b * p.gens[1];
        acc += rel.c * p.gens[2];
        if (!acc.is_zero()) throw std::invalid_argument("presentation: relation does not hold");
    }
}

// exact rank of the multiplication map (R_s)^3 -> R_{s+e}. Fast path: a
// modular lower bound on the matrix rank and a modular lower bound on the
// span of the relation shifts squeeze each other when they meet at 3 dim R_s;
// both bounds are one-sided and exact arithmetic never enters. Falls back to
// the exact elimination engine when the sandwich stays open.
int certified_mult_rank(const IdealPresentation& p, int t) {
    int e = p.gens[0].degree();
    int s = t - e;
    if (s < 0) return 0;
    QMat m = multiplication_matrix(p.gens, t);
    int full = 3 * graded_dim(s);
    QMat shifts = relation_shift_matrix(p.relations, s);
    for (int attempt = 0; attempt < 3; ++attempt) {
        int rank_low = detail::rank_lower_bound(m, attempt);
        int shift_low = shifts.rows() == 0 ? 0 : detail::rank_lower_bound(shifts, attempt);
        if (rank_low + shift_low == full) return rank_low;
    }
    return rank(m);
}

}  // namespace

std::vector<Rational> SyzygyVec::coeff_vector() const {
    int t = degree();
    int dim = graded_dim(t);
    std::vector<Rational> out(static_cast<size_t>(3 * dim));
    auto idx = mono_index(t);
    const HPoly* comps[3] = {&a, &b, &c};
    for (int blk = 0; blk < 3; ++blk)
        for (const auto& [m, cf] : comps[blk]->terms())
            out[static_cast<size_t>(blk * dim + idx.at(m))] = cf;
    return out;
}

QMat multiplication_matrix(const std::vector<HPoly>& gens, int t) {
    if (gens.empty()) throw std::invalid_argument("multiplication_matrix: no generators");
    int e = gens[0].degree();
    for (const auto& g : gens)
        if (g.degree() != e)
            throw std::invalid_argument("multiplication_matrix: mixed generator degrees");
    int s = t - e;
    int nrows = graded_dim(t);
    if (s < 0) return QMat(nrows, 0);
    auto rows_idx = mono_index(t);
    auto source = monomials_of_degree(s);
    int block = static_cast<int>(source.size());
    QMat m(nrows, static_cast<int>(gens.size()) * block);
    for (size_t g = 0; g < gens.size(); ++g) {
        int base = static_cast<int>(g) * block;
        for (int c = 0; c < block; ++c) {
            const Mono& mu = source[static_cast<size_t>(c)];
            for (const auto& [mono, cf] : gens[g].terms()) {
                Mono target{mono.i + mu.i, mono.j + mu.j, mono.k + mu.k};
                m.at(rows_idx.at(target), base + c) = cf;
            }
        }
    }
    return m;
}

int presented_quotient_dim(const IdealPresentation& p, int t) {
    if (t < 0) return 0;
    verify_relations(p);
    int e = p.gens[0].degree();
    if (t < e) return graded_dim(t);
    return graded_dim(t) - certified_mult_rank(p, t);
}

std::optional<int> stable_presented_quotient_dim(const IdealPresentation& p, int eff_d) {
    verify_relations(p);
    int e = p.gens[0].degree();
    int start = std::max(3 * eff_d - 6, 0);
    int win = std::max(eff_d, 4);
    int cap = 6 * eff_d;
    std::vector<int> vals;  // vals[i] = dim at start + i
    auto value_at = [&](int t) {
        while (static_cast<int>(vals.size()) <= t - start) {
            int cur = start + static_cast<int>(vals.size());
            vals.push_back(cur < e ? graded_dim(cur) : graded_dim(cur) - certified_mult_rank(p, cur));
        }
        return vals[static_cast<size_t>(t - start)];
    };
    int end = start + win;
    while (true) {
        value_at(end);
        // earliest t0 with constancy across [t0, t0 + win]
        for (int t0 = start; t0 + win <= end; ++t0) {
            bool flat = true;
            for (int t = t0 + 1; t <= t0 + win && flat; ++t)
                if (value_at(t) != value_at(t0)) flat = false;
            if (flat) return value_at(t0);
        }
        if (end >= cap) return std::nullopt;
        end = std::min(end + eff_d, cap);
    }
}

std::vector<SyzygyVec> syzygy_space(const HPoly& f, int t) {
    if (f.is_zero() || f.degree() < 1)
        throw std::invalid_argument("syzygy_space: need a nonconstant polynomial");
    if (t < 0) return {};
    QMat m = multiplication_matrix(partials(f), t + f.degree() - 1);
    auto kernel = kernel_basis(m);
    auto source = monomials_of_degree(t);
    int block = static_cast<int>(source.size());
    std::vector<SyzygyVec> out;
    out.reserve(kernel.size());
    for (const auto& v : kernel) {
        SyzygyVec s{HPoly(t), HPoly(t), HPoly(t)};
        HPoly* comps[3] = {&s.a, &s.b, &s.c};
        for (int blk = 0; blk < 3; ++blk)
            for (int c = 0; c < block; ++c) {
                const Rational& cf = v[static_cast<size_t>(blk * block + c)];
                if (!cf.is_zero()) comps[blk]->add_term(source[static_cast<size_t>(c)], cf);
            }
        out.push_back(std::move(s));
    }
    return out;
}

int syzygy_space_dim(const HPoly& f, int t) {
    if (f.is_zero() || f.degree() < 1)
        throw std::invalid_argument("syzygy_space: need a nonconstant polynomial");
    if (t < 0) return 0;
    QMat m = multiplication_matrix(partials(f), t + f.degree() - 1);
    return m.cols() - rank(m);
}

namespace {

// Bottom-up discovery of the minimal syzygy generators in degrees 0..d-1.
// Certificate-first: at each degree, if the modular rank of the
// multiplication matrix plus the modular rank of the shifts of the known
// generators already account for all of (R_t)^3, no new generator exists
// there and nothing exact has to run. Otherwise the exact kernel is
// materialized and greedily extended.
struct GeneratorScan {
    std::vector<SyzygyVec> gens;  // minimal generators, degrees ascending
    std::vector<int> degrees;
};

GeneratorScan scan_generators(const HPoly& f) {
    GeneratorScan scan;
    int d = f.degree();
    auto grads = partials(f);
    for (int t = 0; t <= d - 1; ++t) {
        QMat m = multiplication_matrix(grads, t + d - 1);
        int full = 3 * graded_dim(t);
        bool certified = false;
        QMat shifts = relation_shift_matrix(scan.gens, t);
        for (int attempt = 0; attempt < 3 && !certified; ++attempt) {
            int rank_low = detail::rank_lower_bound(m, attempt);
            int shift_low = shifts.rows() == 0 ? 0 : detail::rank_lower_bound(shifts, attempt);
            if (rank_low + shift_low == full) certified = true;
        }
        if (certified) continue;  // no new generators in this degree

        auto basis = syzygy_space(f, t);
        std::vector<std::vector<Rational>> span_rows;
        for (int r = 0; r < shifts.rows(); ++r) {
            std::vector<Rational> row(static_cast<size_t>(shifts.cols()));
            for (int c = 0; c < shifts.cols(); ++c) row[static_cast<size_t>(c)] = shifts.at(r, c);
            span_rows.push_back(std::move(row));
        }
        int current = row_rank(span_rows);
        for (const auto& s : basis) {
            if (current == static_cast<int>(basis.size())) break;  // span saturated Syz_t
            auto widened = span_rows;
            widened.push_back(s.coeff_vector());
            int wr = row_rank(widened);
            if (wr > current) {
                current = wr;
                span_rows.push_back(s.coeff_vector());
                scan.gens.push_back(s);
                scan.degrees.push_back(t);
            }
        }
    }
    return scan;
}

IdealPresentation jacobian_presentation(const HPoly& f, const GeneratorScan& scan) {
    return IdealPresentation{partials(f), scan.gens};
}

}  // namespace

int mdr(const HPoly& f) {
    if (f.is_zero() || f.degree() < 1) throw std::invalid_argument("mdr: need a nonconstant polynomial");
    GeneratorScan scan = scan_generators(f);
    // the scan always finds the Koszul generators by degree d-1
    return scan.degrees.empty() ? f.degree() - 1 : scan.degrees.front();
}

int hilbert_function(const HPoly& f, int t) {
    if (f.is_zero()) throw std::invalid_argument("hilbert_function: zero polynomial");
    if (t < 0) return 0;
    if (t < f.degree() - 1) return graded_dim(t);  // no generators below degree d-1
    GeneratorScan scan = scan_generators(f);
    return presented_quotient_dim(jacobian_presentation(f, scan), t);
}

int tjurina(const HPoly& f) {
    if (f.is_zero() || f.degree() < 1)
        throw std::invalid_argument("tjurina: need a nonconstant polynomial");
    int d = f.degree();
    if (syzygy_space_dim(f, 0) > 0) return (d - 1) * (d - 1);  // concurrent lines
    GeneratorScan scan = scan_generators(f);
    auto stable = stable_presented_quotient_dim(jacobian_presentation(f, scan), d);
    if (!stable)
        throw NoPlateauError("tjurina: Hilbert function of R/J_f does not stabilize; input not reduced?");
    return *stable;
}

DpwResult dpw_check(const HPoly& f) {
    int d = f.degree();
    int r = mdr(f);
    if (r == 0)
        throw std::invalid_argument("dpw_check: bounds do not apply when the partials are dependent");
    DpwResult out;
    out.lower = (d - 1) * (d - r - 1);
    out.upper = out.lower + r * r;
    out.tau = tjurina(f);
    out.holds = out.lower <= out.tau && out.tau <= out.upper;
    return out;
}

Freeness resolution_probe(const HPoly& f) {
    int d = f.degree();
    GeneratorScan scan = scan_generators(f);
    if (!scan.degrees.empty() && scan.degrees.front() == 0)
        throw std::invalid_argument("resolution_probe: requires mdr >= 1");

    Freeness out;
    out.generator_degrees = scan.degrees;
    const auto& g = out.generator_degrees;
    if (g.size() == 2 && g[0] + g[1] == d - 1) {
        out.kind = FreenessKind::Free;
        out.d1 = g[0];
        out.d2 = g[1];
    } else if (g.size() == 3 && g[1] == g[2] && g[0] + g[1] == d && g[0] <= g[1]) {
        out.kind = FreenessKind::NearlyFree;
        out.d1 = g[0];
        out.d2 = g[1];
    } else {
        out.kind = FreenessKind::Neither;
        out.scan_truncated = true;  // generators above d-1 were not probed
    }
    return out;
}

bool is_syzygy_of(const SyzygyVec& s, const HPoly& f) {
    auto g = gradient(f);
    HPoly rel = s.a * g[0];
    rel += s.b * g[1];
    rel += s.c * g[2];
    return rel.is_zero();
}

SyzygyVec lift_syzygy(const SyzygyVec& delta1, const HPoly& f1, const HPoly& f2) {
    if (f2.is_zero() || f2.degree() < 1)
        throw std::invalid_argument("lift_syzygy: second factor must be nonconstant");
    if (delta1.is_zero() || !is_syzygy_of(delta1, f1))
        throw std::invalid_argument("lift_syzygy: delta1 is not a syzygy of f1");
    int d = f1.degree() + f2.degree();
    auto g2 = gradient(f2);
    HPoly pairing = delta1.a * g2[0];
    pairing += delta1.b * g2[1];
    pairing += delta1.c * g2[2];
    Rational inv_d = Rational(1, d);
    SyzygyVec out{f2 * delta1.a, f2 * delta1.b, f2 * delta1.c};
    if (!pairing.is_zero()) {
        HPoly scaled = pairing.scaled(inv_d);
        out.a -= scaled * HPoly::variable(Var::X);
        out.b -= scaled * HPoly::variable(Var::Y);
        out.c -= scaled * HPoly::variable(Var::Z);
    }
    return out;
}

JacobianReport analyze(const HPoly& f) {
    if (f.is_zero() || f.degree() < 1)
        throw std::invalid_argument("analyze: need a nonconstant polynomial");
    JacobianReport rep;
    rep.d = f.degree();
    GeneratorScan scan = scan_generators(f);
    rep.r = scan.degrees.empty() ? rep.d - 1 : scan.degrees.front();
    IdealPresentation pres = jacobian_presentation(f, scan);
    if (rep.r == 0) {
        rep.tau = (rep.d - 1) * (rep.d - 1);
        rep.freeness.kind = FreenessKind::ConcurrentLines;
    } else {
        auto stable = stable_presented_quotient_dim(pres, rep.d);
        if (!stable)
            throw NoPlateauError("analyze: Hilbert function does not stabilize; input not reduced?");
        rep.tau = *stable;
        rep.dpw_lower = (rep.d - 1) * (rep.d - rep.r - 1);
        rep.dpw_upper = *rep.dpw_lower + rep.r * rep.r;
        rep.freeness = resolution_probe(f);
    }
    int table_end = std::max(3 * rep.d - 6, 0) + std::max(rep.d, 4);
    for (int t = 0; t <= table_end; ++t) {
        int v = t < rep.d - 1 ? graded_dim(t) : presented_quotient_dim(pres, t);
        rep.hilbert_table.emplace_back(t, v);
    }
    return rep;
}

}  // namespace syzlab
