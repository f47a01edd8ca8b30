#include "syzlab/report.hpp"

#include <sstream>

#include "syzlab/parse.hpp"

namespace syzlab {

Json envelope(Json input, Json result, Json diagnostics) {
    Json out;
    out["schema_version"] = 1;
    out["input"] = std::move(input);
    out["result"] = std::move(result);
    out["diagnostics"] = std::move(diagnostics);
    return out;
}

namespace {

const char* freeness_name(FreenessKind k) {
    switch (k) {
        case FreenessKind::Free:
            return "Free";
        case FreenessKind::NearlyFree:
            return "NearlyFree";
        case FreenessKind::Neither:
            return "Neither";
        case FreenessKind::ConcurrentLines:
            return "ConcurrentLines";
    }
    return "?";
}

}  // namespace

Json json_freeness(const Freeness& fr) {
    Json out;
    out["class"] = freeness_name(fr.kind);
    if (fr.kind == FreenessKind::Free || fr.kind == FreenessKind::NearlyFree)
        out["exponents"] = Json::array({fr.d1, fr.d2});
    else
        out["exponents"] = nullptr;
    out["generator_degrees"] = fr.generator_degrees;
    if (fr.kind == FreenessKind::Neither) out["scan_truncated"] = fr.scan_truncated;
    return out;
}

Json json_jacobian_report(const JacobianReport& rep) {
    Json out;
    out["degree"] = rep.d;
    out["mdr"] = rep.r;
    out["tau"] = rep.tau;
    if (rep.dpw_lower) {
        Json dpw;
        dpw["lower"] = *rep.dpw_lower;
        dpw["upper"] = *rep.dpw_upper;
        dpw["holds"] = *rep.dpw_lower <= rep.tau && rep.tau <= *rep.dpw_upper;
        out["dpw"] = std::move(dpw);
    } else {
        out["dpw"] = nullptr;
    }
    out["freeness"] = json_freeness(rep.freeness);
    Json table = Json::array();
    for (auto [t, v] : rep.hilbert_table) table.push_back(Json::array({t, v}));
    out["hilbert_function"] = std::move(table);
    return out;
}

Json json_curve(const CurveInput& c) {
    Json out;
    Json comps = Json::array();
    for (const auto& f : c.components) comps.push_back(print_poly(f));
    out["components"] = std::move(comps);
    out["product"] = print_poly(c.product);
    out["degree"] = c.product.degree();
    return out;
}

Json json_tensor_result(const JacobianTensorResult& jt, const std::optional<int>& eig_degree,
                        const std::array<Rational, 3>& blowup) {
    Json out;
    out["eigenscheme"] = jt.ok();
    if (jt.ok()) {
        out["failure"] = nullptr;
        out["tensor"] = Json::array({print_poly(jt.tensor->g1), print_poly(jt.tensor->g2),
                                     print_poly(jt.tensor->g3)});
        out["linear_syzygy"] =
            Json::array({print_poly(jt.linear.a), print_poly(jt.linear.b), print_poly(jt.linear.c)});
        if (eig_degree)
            out["eigenscheme_degree"] = *eig_degree;
        else
            out["eigenscheme_degree"] = "not_zero_dimensional";
    } else {
        out["failure"] = tensor_failure_name(*jt.failure);
        out["tensor"] = nullptr;
        out["linear_syzygy"] = nullptr;
        out["eigenscheme_degree"] = nullptr;
    }
    out["blowup_class"] = Json::array({blowup[0].str(), blowup[1].str(), blowup[2].str()});
    return out;
}

Json json_polar_report(const PolarReport& rep) {
    Json out;
    out["polar_degree"] = rep.degree_estimate;
    out["quasihomogeneous_assumed"] = rep.quasihomogeneous_assumed;
    Json lines = Json::array();
    for (const auto& l : rep.contracted_lines) lines.push_back(print_poly(l));
    out["contracted_lines"] = std::move(lines);
    Json hess;
    hess["divisible_components"] = rep.hessian.divisible_components;
    hess["divisible_by_curve"] = rep.hessian.divisible_by_f;
    Json vars = Json::array();
    for (Var v : rep.hessian.quotient_vars)
        vars.push_back(v == Var::X ? "x" : v == Var::Y ? "y" : "z");
    hess["quotient_vars"] = std::move(vars);
    out["hessian"] = std::move(hess);
    return out;
}

Json json_sweep_result(const SweepResult& res) {
    Json out;
    out["suite"] = res.suite;
    out["trials"] = res.trials;
    out["seed"] = res.seed;
    out["checks"] = res.checks;
    out["violations"] = res.violations;
    out["ok"] = res.ok();
    return out;
}

std::string render_text_jacobian(const JacobianReport& rep) {
    std::ostringstream os;
    os << "degree d = " << rep.d << "\n";
    os << "mdr      = " << rep.r << "\n";
    os << "tau      = " << rep.tau << "\n";
    if (rep.dpw_lower)
        os << "bounds   = [" << *rep.dpw_lower << ", " << *rep.dpw_upper << "] ("
           << ((*rep.dpw_lower <= rep.tau && rep.tau <= *rep.dpw_upper) ? "hold" : "VIOLATED")
           << ")\n";
    os << "class    = " << freeness_name(rep.freeness.kind);
    if (rep.freeness.kind == FreenessKind::Free || rep.freeness.kind == FreenessKind::NearlyFree)
        os << "(" << rep.freeness.d1 << ", " << rep.freeness.d2 << ")";
    os << "\n";
    os << "hilbert  =";
    for (auto [t, v] : rep.hilbert_table) os << " " << v;
    os << "\n";
    return os.str();
}

std::string render_text_sweep(const SweepResult& res) {
    std::ostringstream os;
    os << "suite " << res.suite << ": " << res.checks << " checks, " << res.violations.size()
       << " violations\n";
    for (const auto& v : res.violations) os << "  VIOLATION: " << v << "\n";
    return os.str();
}

}  // namespace syzlab
