// Acceptance suite: one pass/fail line per criterion, exit nonzero when any
// criterion fails. All arithmetic is exact, so every comparison is equality.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "oracle.hpp"
#include "syzlab/arrangements.hpp"
#include "syzlab/eigenscheme.hpp"
#include "syzlab/jacobian.hpp"
#include "syzlab/parse.hpp"
#include "syzlab/polar.hpp"
#include "syzlab/rng.hpp"
#include "syzlab/sweeps.hpp"

using namespace syzlab;

namespace {

struct Criterion {
    int id;
    std::string title;
    std::function<void(std::vector<std::string>&)> run;
};

HPoly P(const std::string& src) { return parse_poly(src); }

void expect(std::vector<std::string>& fails, bool ok, const std::string& what) {
    if (!ok) fails.push_back(what);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ---- criterion 1: golden analyses -----------------------------------------

void criterion_golden(std::vector<std::string>& fails) {
    struct Golden {
        const char* src;
        int r, tau;
        FreenessKind kind;
        int d1, d2;
    };
    const Golden cases[] = {
        {"y^4z + x^5 + x^2y^3", 2, 12, FreenessKind::Free, 2, 2},
        {"y^4z + x^5", 1, 12, FreenessKind::NearlyFree, 1, 4},
        {"(x^2+y^2+z^2)(x^3+y^3+z^3)", 3, 6, FreenessKind::Neither, 0, 0},
    };
    for (const auto& c : cases) {
        auto t0 = std::chrono::steady_clock::now();
        JacobianReport rep = analyze(P(c.src));
        double dt = seconds_since(t0);
        std::ostringstream label;
        label << "analyze(" << c.src << ")";
        expect(fails, rep.r == c.r, label.str() + ": mdr " + std::to_string(rep.r));
        expect(fails, rep.tau == c.tau, label.str() + ": tau " + std::to_string(rep.tau));
        expect(fails, rep.freeness.kind == c.kind, label.str() + ": wrong freeness class");
        if (c.kind != FreenessKind::Neither)
            expect(fails, rep.freeness.d1 == c.d1 && rep.freeness.d2 == c.d2,
                   label.str() + ": wrong exponents");
        expect(fails, dt < 5.0, label.str() + ": runtime " + std::to_string(dt) + "s >= 5s");
    }
}

// ---- criterion 2: Fermat eigenscheme ---------------------------------------

void criterion_fermat(std::vector<std::string>& fails) {
    Tensor t = make_tensor(P("x^2"), P("y^2"), P("z^2"));
    auto deg = eigenscheme_degree(t);
    expect(fails, deg.has_value() && *deg == 7, "Fermat eigenscheme degree != 7");
    int contained = 0, total = 0;
    for (int a = -1; a <= 1; ++a)
        for (int b = -1; b <= 1; ++b)
            for (int c = -1; c <= 1; ++c) {
                if (a == 0 && b == 0 && c == 0) continue;
                int lead = a != 0 ? a : (b != 0 ? b : c);
                if (lead < 0) continue;
                ++total;
                bool inside = contains_point(t, {Rational(a), Rational(b), Rational(c)});
                bool expected = a >= 0 && b >= 0 && c >= 0;  // the {0,1} points
                if (inside) ++contained;
                expect(fails, inside == expected,
                       "Fermat eigenpoint test wrong at (" + std::to_string(a) + "," +
                           std::to_string(b) + "," + std::to_string(c) + ")");
            }
    expect(fails, total == 13, "frame grid should have 13 points");
    expect(fails, contained == 7, "Fermat eigenscheme should contain exactly 7 grid points");
}

// ---- criteria 3/4: theorem sweeps ------------------------------------------

void criterion_max_tau(std::vector<std::string>& fails) {
    auto t0 = std::chrono::steady_clock::now();
    SweepResult res = verify_max_tau(10, 20260809);
    double dt = seconds_since(t0);
    for (const auto& v : res.violations) fails.push_back(v);
    expect(fails, res.checks == 7 * 10 * 4, "unexpected check count");
    expect(fails, dt < 600.0, "max-tau sweep runtime " + std::to_string(dt) + "s >= 600s");
}

void criterion_min_tau(std::vector<std::string>& fails) {
    SweepResult res = verify_min_tau(10, 20260810);
    for (const auto& v : res.violations) fails.push_back(v);
    expect(fails, res.checks == 2 * 10 * 3, "unexpected check count");
}

// ---- criterion 5: recognizer round trip ------------------------------------

void criterion_recognizer(std::vector<std::string>& fails) {
    SweepResult res = verify_recognizer(10, 20260811);
    for (const auto& v : res.violations) fails.push_back(v);
    expect(fails, res.checks == 9 * 10 * 3, "unexpected check count");
}

// ---- criterion 6: product-syzygy suite -------------------------------------

void criterion_product(std::vector<std::string>& fails) {
    SweepResult res = verify_thm_product(100, 20260812);
    for (const auto& v : res.violations) fails.push_back(v);
}

// ---- criterion 7: eigenscheme dichotomy ------------------------------------

void criterion_dichotomy(std::vector<std::string>& fails) {
    SweepResult res = verify_eigen_dichotomy(10, 20260813);
    for (const auto& v : res.violations) fails.push_back(v);
}

// ---- criterion 8: polar geometry -------------------------------------------

void criterion_polar(std::vector<std::string>& fails) {
    Rng rng(20260814);
    for (int d = 4; d <= 8; ++d) {
        Rng sub = rng.split(static_cast<uint64_t>(d));
        CurveInput l = random_family_instance(FamilyTag::L, d, /*random_coords=*/false, sub);
        auto contracted = contracted_component_lines(l);
        expect(fails, static_cast<int>(contracted.size()) == d,
               "L d=" + std::to_string(d) + ": contracted lines != d");
        // no random non-component line is contracted
        for (int i = 0; i < 3; ++i) {
            HPoly probe = HPoly::linear(Rational(sub.uniform(-7, 7)), Rational(sub.uniform(-7, 7)),
                                        Rational(sub.uniform(1, 7)));
            bool is_component = false;
            for (const auto& comp : l.components)
                if (proportional(comp, probe)) is_component = true;
            if (is_component) continue;
            auto [p, q] = line_points(probe);
            expect(fails, !is_contracted(l.product, p, q),
                   "L d=" + std::to_string(d) + ": non-component line reported contracted");
        }
        expect(fails, polar_degree_qh(l.product) == d - 2,
               "L d=" + std::to_string(d) + ": polar degree != d-2");

        HessianReport hess = hessian_report(l.product, l);
        expect(fails, hess.divisible_by_f, "L d=" + std::to_string(d) + ": hessian not divisible");
        bool has_z = false;
        for (Var v : hess.quotient_vars)
            if (v == Var::Z) has_z = true;
        expect(fails, !has_z, "L d=" + std::to_string(d) + ": hessian quotient involves z");
    }
    for (int d : {5, 7, 9}) {
        Rng sub = rng.split(static_cast<uint64_t>(100 + d));
        CurveInput cl2 = random_family_instance(FamilyTag::CL2, d, /*random_coords=*/false, sub);
        auto contracted = contracted_component_lines(cl2);
        bool single_tangent = contracted.size() == 1 && contracted[0].degree() == 1 &&
                              proportional(contracted[0], cl2.components[0]);
        expect(fails, single_tangent,
               "CL2 d=" + std::to_string(d) + ": contracted lines != {tangent}");
        expect(fails, polar_degree_qh(cl2.product) == d - 2,
               "CL2 d=" + std::to_string(d) + ": polar degree != d-2");
    }
    // fiber sampling attains d-2 distinct roots at some seeded generic point
    for (FamilyTag tag : {FamilyTag::L, FamilyTag::CL2}) {
        for (int d : {5, 7}) {
            Rng sub = rng.split(static_cast<uint64_t>(tag) * 31 + static_cast<uint64_t>(d));
            CurveInput inst = random_family_instance(tag, d, /*random_coords=*/false, sub);
            JacobianTensorResult jt = jacobian_to_tensor(inst.product);
            if (!jt.ok()) {
                fails.push_back(std::string(family_name(tag)) + " d=" + std::to_string(d) +
                                ": tensor construction failed");
                continue;
            }
            int best = 0;
            for (int i = 0; i < 20; ++i) {
                Point q{Rational(sub.uniform(-10, 10)), Rational(sub.uniform(-10, 10)),
                        Rational(sub.uniform(-10, 10))};
                if (q[0].is_zero() && q[1].is_zero() && q[2].is_zero()) continue;
                FiberReport rep = fiber_over_point(inst.product, jt, q);
                if (rep.identically_zero) continue;
                expect(fails, rep.roots_distinct <= d - 2,
                       std::string(family_name(tag)) + ": fiber root count above d-2");
                best = std::max(best, rep.roots_distinct);
            }
            expect(fails, best == d - 2,
                   std::string(family_name(tag)) + " d=" + std::to_string(d) +
                       ": no sampled fiber attains d-2 distinct roots");
        }
    }
}

// ---- criterion 9: independent oracle ---------------------------------------

void criterion_oracle(std::vector<std::string>& fails) {
    Rng rng(20260815);
    const std::vector<FamilyTag> pool{FamilyTag::L,   FamilyTag::C1,  FamilyTag::C2,
                                      FamilyTag::CL1, FamilyTag::CL2, FamilyTag::CL6};
    int done = 0;
    for (int i = 0; done < 25; ++i) {
        Rng sub = rng.split(static_cast<uint64_t>(i));
        FamilyTag tag =
            pool[static_cast<size_t>(sub.uniform(0, static_cast<long>(pool.size()) - 1))];
        auto degrees = family_degrees_in(tag, 4, 6);
        if (degrees.empty()) continue;
        int d = degrees[static_cast<size_t>(sub.uniform(0, static_cast<long>(degrees.size()) - 1))];
        CurveInput inst = random_family_instance(tag, d, sub.coin(), sub);
        int engine = tjurina(inst.product);
        int independent = oracle::tau_independent(inst.product);
        expect(fails, engine == independent,
               std::string(family_name(tag)) + " d=" + std::to_string(d) + ": engine tau " +
                   std::to_string(engine) + " != oracle tau " + std::to_string(independent));
        ++done;
    }
}

}  // namespace

int main() {
    std::vector<Criterion> criteria{
        {1, "golden Jacobian reports", criterion_golden},
        {2, "Fermat eigenscheme degree and points", criterion_fermat},
        {3, "maximal-tau family sweep", criterion_max_tau},
        {4, "minimal-tau family sweep", criterion_min_tau},
        {5, "recognizer round trip with negative controls", criterion_recognizer},
        {6, "product-syzygy bounds and lift", criterion_product},
        {7, "eigenscheme dichotomy", criterion_dichotomy},
        {8, "polar-map geometry", criterion_polar},
        {9, "independent elimination oracle", criterion_oracle},
    };
    int failed = 0;
    for (auto& c : criteria) {
        std::vector<std::string> fails;
        auto t0 = std::chrono::steady_clock::now();
        try {
            c.run(fails);
        } catch (const std::exception& e) {
            fails.push_back(std::string("unexpected error: ") + e.what());
        }
        double dt = seconds_since(t0);
        if (fails.empty()) {
            std::cout << "PASS criterion " << c.id << " (" << c.title << ") [" << dt << "s]\n";
        } else {
            ++failed;
            std::cout << "FAIL criterion " << c.id << " (" << c.title << ") [" << dt << "s]\n";
            for (const auto& f : fails) std::cout << "      " << f << "\n";
        }
        std::cout.flush();
    }
    if (failed) std::cout << failed << " criterion(s) failed\n";
    return failed > 0 ? 1 : 0;
}
