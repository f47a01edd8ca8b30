#include "syzlab/sweeps.hpp"

#include <atomic>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <thread>

#include "syzlab/arrangements.hpp"
#include "syzlab/eigenscheme.hpp"
#include "syzlab/jacobian.hpp"
#include "syzlab/parse.hpp"
#include "syzlab/rng.hpp"

namespace syzlab {

namespace {

struct TaskResult {
    int checks = 0;
    std::vector<std::string> violations;
};

// deterministic parallel map: results are merged in task order regardless of
// the number of workers
std::vector<TaskResult> run_tasks(const std::vector<std::function<TaskResult()>>& tasks) {
    std::vector<TaskResult> results(tasks.size());
    int workers = std::min<int>(thread_budget(), static_cast<int>(tasks.size()));
    if (workers <= 1) {
        for (size_t i = 0; i < tasks.size(); ++i) {
            try {
                results[i] = tasks[i]();
            } catch (const std::exception& e) {
                results[i].violations.push_back(std::string("unexpected error: ") + e.what());
            }
        }
        return results;
    }
    std::atomic<size_t> next{0};
    auto body = [&] {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= tasks.size()) break;
            try {
                results[i] = tasks[i]();
            } catch (const std::exception& e) {
                results[i].violations.push_back(std::string("unexpected error: ") + e.what());
            }
        }
    };
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(body);
    for (auto& t : pool) t.join();
    return results;
}

SweepResult collect(const std::string& suite, int trials, uint64_t seed,
                    const std::vector<std::function<TaskResult()>>& tasks) {
    SweepResult out;
    out.suite = suite;
    out.trials = trials;
    out.seed = seed;
    for (auto& r : run_tasks(tasks)) {
        out.checks += r.checks;
        for (auto& v : r.violations) out.violations.push_back(std::move(v));
    }
    return out;
}

int pick_degree(const std::vector<int>& degrees, Rng& rng) {
    return degrees[static_cast<size_t>(rng.uniform(0, static_cast<long>(degrees.size()) - 1))];
}

std::string describe(FamilyTag tag, int d, int trial) {
    std::ostringstream os;
    os << family_name(tag) << " (d=" << d << ", trial " << trial << ")";
    return os.str();
}

const std::vector<FamilyTag> kMaxTauFamilies{FamilyTag::L,   FamilyTag::C1,  FamilyTag::CL1,
                                             FamilyTag::CL2, FamilyTag::CL3, FamilyTag::CL4,
                                             FamilyTag::CL5};
const std::vector<FamilyTag> kMinTauFamilies{FamilyTag::C2, FamilyTag::CL6};
const std::vector<FamilyTag> kAllFamilies{FamilyTag::L,   FamilyTag::C1,  FamilyTag::C2,
                                          FamilyTag::CL1, FamilyTag::CL2, FamilyTag::CL3,
                                          FamilyTag::CL4, FamilyTag::CL5, FamilyTag::CL6};

TaskResult check_max_tau_instance(FamilyTag tag, int trial, uint64_t seed) {
    TaskResult res;
    Rng rng = Rng(seed).split(static_cast<uint64_t>(trial) * 131 + static_cast<uint64_t>(tag));
    auto degrees = family_degrees_in(tag, 5, 10);
    int d = pick_degree(degrees, rng);
    CurveInput inst = random_family_instance(tag, d, /*random_coords=*/true, rng);
    std::string label = describe(tag, d, trial);

    int tau = tjurina(inst.product);
    ++res.checks;
    if (tau != d * d - 3 * d + 3)
        res.violations.push_back(label + ": tau = " + std::to_string(tau) + ", expected " +
                                 std::to_string(d * d - 3 * d + 3));
    int r = mdr(inst.product);
    ++res.checks;
    if (r != 1) res.violations.push_back(label + ": mdr = " + std::to_string(r) + ", expected 1");
    Freeness fr = resolution_probe(inst.product);
    ++res.checks;
    if (fr.kind != FreenessKind::Free || fr.d1 != 1 || fr.d2 != d - 2)
        res.violations.push_back(label + ": not Free(1, d-2)");
    // bounds on the already-computed pair (r, tau)
    int lower = (d - 1) * (d - r - 1);
    int upper = lower + r * r;
    ++res.checks;
    if (!(lower <= tau && tau <= upper))
        res.violations.push_back(label + ": tau outside the degree/syzygy bounds");
    return res;
}

TaskResult check_min_tau_instance(FamilyTag tag, int trial, uint64_t seed) {
    TaskResult res;
    Rng rng = Rng(seed).split(static_cast<uint64_t>(trial) * 137 + static_cast<uint64_t>(tag));
    auto degrees = family_degrees_in(tag, 6, 10);
    int d = pick_degree(degrees, rng);
    CurveInput inst = random_family_instance(tag, d, /*random_coords=*/true, rng);
    std::string label = describe(tag, d, trial);

    int tau = tjurina(inst.product);
    ++res.checks;
    if (tau != d * d - 3 * d + 2)
        res.violations.push_back(label + ": tau = " + std::to_string(tau) + ", expected " +
                                 std::to_string(d * d - 3 * d + 2));
    int r = mdr(inst.product);
    ++res.checks;
    if (r != 1) res.violations.push_back(label + ": mdr = " + std::to_string(r) + ", expected 1");
    Freeness fr = resolution_probe(inst.product);
    ++res.checks;
    if (fr.kind != FreenessKind::NearlyFree || fr.d1 != 1 || fr.d2 != d - 1)
        res.violations.push_back(label + ": not NearlyFree(1, d-1)");
    return res;
}

}  // namespace

int thread_budget() {
    if (const char* env = std::getenv("SYZLAB_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

SweepResult verify_max_tau(int trials, uint64_t seed) {
    std::vector<std::function<TaskResult()>> tasks;
    for (FamilyTag tag : kMaxTauFamilies)
        for (int i = 0; i < trials; ++i)
            tasks.push_back([tag, i, seed] { return check_max_tau_instance(tag, i, seed); });
    return collect("max-tau", trials, seed, tasks);
}

SweepResult verify_min_tau(int trials, uint64_t seed) {
    std::vector<std::function<TaskResult()>> tasks;
    for (FamilyTag tag : kMinTauFamilies)
        for (int i = 0; i < trials; ++i)
            tasks.push_back([tag, i, seed] { return check_min_tau_instance(tag, i, seed); });
    return collect("min-tau", trials, seed, tasks);
}

SweepResult verify_dpw(int trials, uint64_t seed) {
    std::vector<std::function<TaskResult()>> tasks;
    // fixed reference curves alongside the seeded family draws
    tasks.push_back([] {
        TaskResult res;
        for (const char* src :
             {"y^4z + x^5 + x^2y^3", "y^4z + x^5", "(x^2+y^2+z^2)(x^3+y^3+z^3)"}) {
            HPoly f = parse_poly(src);
            ++res.checks;
            if (!dpw_check(f).holds)
                res.violations.push_back(std::string("reference curve violates the bounds: ") + src);
        }
        return res;
    });
    for (int i = 0; i < trials; ++i) {
        tasks.push_back([i, seed] {
            TaskResult res;
            Rng rng = Rng(seed).split(static_cast<uint64_t>(i) * 149 + 7);
            FamilyTag tag = kAllFamilies[static_cast<size_t>(
                rng.uniform(0, static_cast<long>(kAllFamilies.size()) - 1))];
            auto degrees = family_degrees_in(tag, 4, 8);
            int d = pick_degree(degrees, rng);
            bool coords = rng.coin();
            CurveInput inst = random_family_instance(tag, d, coords, rng);
            DpwResult dpw = dpw_check(inst.product);
            ++res.checks;
            if (!dpw.holds)
                res.violations.push_back(describe(tag, d, i) + ": tau outside the bounds [" +
                                         std::to_string(dpw.lower) + ", " +
                                         std::to_string(dpw.upper) + "], tau = " +
                                         std::to_string(dpw.tau));
            return res;
        });
    }
    return collect("dpw", trials, seed, tasks);
}

namespace {

// coprime factored pair builder for the product-syzygy suite
struct FactoredPair {
    CurveInput f1, f2;
};

FactoredPair random_coprime_pair(Rng& rng) {
    // draw distinct small lines and pencil conics, split them across the pair
    std::vector<HPoly> parts;
    auto add_line = [&](long a, long b, long c) {
        if (a == 0 && b == 0 && c == 0) return;
        HPoly l = HPoly::linear(Rational(a), Rational(b), Rational(c));
        for (const auto& p : parts)
            if (p.degree() == 1 && proportional(p, l)) return;
        parts.push_back(l);
    };
    auto add_conic = [&](bool hyper, long a) {
        HPoly q(2);
        if (hyper) {
            q.add_term({2, 0, 0}, Rational(1));
            q.add_term({1, 0, 1}, Rational(a));
            q.add_term({0, 2, 0}, Rational(a));
        } else {
            q.add_term({1, 0, 1}, Rational(1));
            q.add_term({0, 2, 0}, Rational(a));
        }
        for (const auto& p : parts)
            if (p.degree() == 2 && proportional(p, q)) return;
        parts.push_back(q);
    };
    int want = static_cast<int>(rng.uniform(2, 4));
    while (static_cast<int>(parts.size()) < want) {
        long kind = rng.uniform(0, 2);
        if (kind == 0) {
            add_line(rng.uniform(-5, 5), rng.uniform(-5, 5), rng.uniform(-5, 5));
        } else {
            long a = rng.uniform(-9, 9);
            if (a != 0) add_conic(kind == 2, a);
        }
    }
    // split: at least one component each
    size_t cut = static_cast<size_t>(rng.uniform(1, static_cast<long>(parts.size()) - 1));
    std::vector<HPoly> left(parts.begin(), parts.begin() + static_cast<long>(cut));
    std::vector<HPoly> right(parts.begin() + static_cast<long>(cut), parts.end());
    return {make_curve(std::move(left)), make_curve(std::move(right))};
}

}  // namespace

SweepResult verify_thm_product(int trials, uint64_t seed) {
    std::vector<std::function<TaskResult()>> tasks;
    for (int i = 0; i < trials; ++i) {
        tasks.push_back([i, seed] {
            TaskResult res;
            Rng rng = Rng(seed).split(static_cast<uint64_t>(i) * 151 + 3);
            FactoredPair pair = random_coprime_pair(rng);
            const HPoly& f1 = pair.f1.product;
            const HPoly& f2 = pair.f2.product;
            int d1 = f1.degree(), d2 = f2.degree();
            int r1 = mdr(f1), r2 = mdr(f2);
            HPoly prod = f1 * f2;
            int r = mdr(prod);
            std::ostringstream label;
            label << "pair trial " << i << " (d1=" << d1 << ", d2=" << d2 << ")";
            ++res.checks;
            if (!(std::max(r1, r2) <= r && r <= std::min(r1 + d2, r2 + d1)))
                res.violations.push_back(label.str() + ": mdr bounds violated: r=" +
                                         std::to_string(r) + " r1=" + std::to_string(r1) +
                                         " r2=" + std::to_string(r2));
            auto basis = syzygy_space(f1, r1);
            ++res.checks;
            if (basis.empty()) {
                res.violations.push_back(label.str() + ": empty syzygy basis at mdr degree");
                return res;
            }
            SyzygyVec lifted = lift_syzygy(basis.front(), f1, f2);
            ++res.checks;
            if (lifted.is_zero() || !is_syzygy_of(lifted, prod) || lifted.degree() != r1 + d2)
                res.violations.push_back(label.str() + ": lifted syzygy invalid");
            return res;
        });
    }
    return collect("thm-product", trials, seed, tasks);
}

SweepResult verify_eigen_dichotomy(int trials, uint64_t seed) {
    std::vector<std::function<TaskResult()>> tasks;
    for (FamilyTag tag : kAllFamilies) {
        for (int i = 0; i < trials; ++i) {
            tasks.push_back([tag, i, seed] {
                TaskResult res;
                Rng rng = Rng(seed).split(static_cast<uint64_t>(i) * 157 + static_cast<uint64_t>(tag));
                auto degrees = family_degrees_in(tag, 5, 10);
                int d = pick_degree(degrees, rng);
                CurveInput inst = random_family_instance(tag, d, rng.coin(), rng);
                std::string label = describe(tag, d, i);
                bool expect_success = tag == FamilyTag::L || tag == FamilyTag::CL2;
                JacobianTensorResult jt = jacobian_to_tensor(inst.product);
                ++res.checks;
                if (expect_success && !jt.ok()) {
                    res.violations.push_back(label + ": tensor construction failed (" +
                                             tensor_failure_name(*jt.failure) + ")");
                } else if (!expect_success && jt.ok()) {
                    res.violations.push_back(
                        label + ": tensor construction succeeded but the classification expects "
                                "failure for this family");
                }
                return res;
            });
        }
    }
    tasks.push_back([] {
        TaskResult res;
        HPoly f = parse_poly("y(x^3 - y^2z)");
        ++res.checks;
        JacobianTensorResult jt = jacobian_to_tensor(f);
        if (!jt.ok())
            res.violations.push_back("y(x^3 - y^2z): tensor construction failed unexpectedly");
        return res;
    });
    return collect("eigen-dichotomy", trials, seed, tasks);
}

SweepResult verify_recognizer(int trials, uint64_t seed) {
    std::vector<std::function<TaskResult()>> tasks;
    for (FamilyTag tag : kAllFamilies) {
        for (int i = 0; i < trials; ++i) {
            tasks.push_back([tag, i, seed] {
                TaskResult res;
                Rng rng = Rng(seed).split(static_cast<uint64_t>(i) * 163 + static_cast<uint64_t>(tag));
                auto degrees = family_degrees_in(tag, tag == FamilyTag::L ? 4 : 4, 9);
                int d = pick_degree(degrees, rng);
                auto params = random_family_params(tag, d, rng);
                CurveInput normal = generate_family(tag, params, /*normal_form=*/true);
                CurveInput moved = generate_family(tag, params, /*normal_form=*/false, &rng);
                std::string label = describe(tag, d, i);
                ++res.checks;
                if (recognize(normal) != tag)
                    res.violations.push_back(label + ": normal form not recognized");
                ++res.checks;
                if (recognize(moved) != tag)
                    res.violations.push_back(label + ": random-coordinates form not recognized");
                CurveInput control = perturb_off_family(normal, tag);
                ++res.checks;
                if (recognize(control) != FamilyTag::None)
                    res.violations.push_back(label + ": perturbed control still recognized");
                return res;
            });
        }
    }
    return collect("recognizer", trials, seed, tasks);
}

SweepResult run_sweep(const std::string& suite, int trials, uint64_t seed) {
    if (suite == "max-tau") return verify_max_tau(trials, seed);
    if (suite == "min-tau") return verify_min_tau(trials, seed);
    if (suite == "dpw") return verify_dpw(trials, seed);
    if (suite == "thm-product") return verify_thm_product(trials, seed);
    if (suite == "eigen-dichotomy") return verify_eigen_dichotomy(trials, seed);
    if (suite == "recognizer") return verify_recognizer(trials, seed);
    throw std::invalid_argument("unknown verification suite: " + suite);
}

}  // namespace syzlab
