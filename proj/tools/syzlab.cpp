#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "syzlab/parse.hpp"
#include "syzlab/polar.hpp"
#include "syzlab/report.hpp"

namespace {

using namespace syzlab;

constexpr int kExitViolation = 1;
constexpr int kExitInputError = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// argument is either an inline expression or a path to a factored-curve file
HPoly poly_argument(const std::string& arg) {
    if (std::filesystem::exists(arg)) {
        auto comps = parse_curve_components(read_file(arg));
        if (comps.empty()) throw std::runtime_error("file holds no components: " + arg);
        HPoly prod = HPoly::constant(Rational(1));
        for (const auto& c : comps) prod = prod * c;
        return prod;
    }
    return parse_poly(arg);
}

CurveInput curve_argument(const std::string& arg) {
    std::string text = std::filesystem::exists(arg) ? read_file(arg) : arg;
    // inline form: components separated by ';'
    if (!std::filesystem::exists(arg)) {
        for (auto& c : text)
            if (c == ';') c = '\n';
    }
    auto comps = parse_curve_components(text);
    if (comps.empty()) throw std::runtime_error("no curve components given");
    return make_curve(std::move(comps));
}

void emit(const Json& input, const Json& result, const std::string& text, bool json_mode) {
    if (json_mode)
        std::cout << envelope(input, result).dump(2) << "\n";
    else
        std::cout << text;
}

int emit_error(const Json& input, const std::string& message, bool json_mode) {
    if (json_mode) {
        Json diag = Json::array();
        diag.push_back(Json{{"severity", "error"}, {"message", message}});
        std::cout << envelope(input, nullptr, diag).dump(2) << "\n";
    } else {
        std::cerr << "error: " << message << "\n";
    }
    return kExitInputError;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Jacobian-syzygy and eigenscheme toolkit for factored plane curves"};
    app.require_subcommand(1);

    std::string output = "text";
    app.add_option("--output", output, "Output mode: text or json")
        ->check(CLI::IsMember({"text", "json"}));

    std::string analyze_arg;
    auto* cmd_analyze = app.add_subcommand("analyze", "Syzygy/Tjurina report for a curve");
    cmd_analyze->add_option("poly", analyze_arg, "Polynomial expression or factored-curve file")
        ->required();

    std::string gen_family;
    int gen_m = 2;
    int gen_degree = 0;
    std::string gen_params;
    bool gen_random_coords = false;
    uint64_t gen_seed = 1;
    auto* cmd_generate = app.add_subcommand("generate", "Normal-form family instances");
    cmd_generate->add_option("family", gen_family, "L, C1, C2, CL1..CL6")->required();
    cmd_generate->add_option("--m", gen_m, "Number of conics (conic families)");
    cmd_generate->add_option("--degree", gen_degree, "Total degree (alternative to --m)");
    cmd_generate->add_option("--params", gen_params, "Comma-separated rational parameters");
    cmd_generate->add_flag("--random-coords", gen_random_coords,
                           "Apply a seeded random coordinate change");
    cmd_generate->add_option("--seed", gen_seed, "Seed for parameters and coordinates");

    std::string rec_arg;
    auto* cmd_recognize = app.add_subcommand("recognize", "Family recognition for a factored curve");
    cmd_recognize->add_option("curve", rec_arg, "Factored-curve file or ';'-separated components")
        ->required();

    std::string eigen_arg;
    auto* cmd_eigen = app.add_subcommand("eigen", "Eigenscheme decision for the Jacobian scheme");
    cmd_eigen->add_option("poly", eigen_arg, "Polynomial expression or factored-curve file")
        ->required();

    std::string polar_arg;
    auto* cmd_polar = app.add_subcommand("polar", "Polar-map geometry of a factored curve");
    cmd_polar->add_option("curve", polar_arg, "Factored-curve file or ';'-separated components")
        ->required();

    std::string verify_suite;
    int verify_trials = 10;
    uint64_t verify_seed = 1;
    auto* cmd_verify = app.add_subcommand("verify", "Seeded verification sweeps");
    cmd_verify
        ->add_option("suite", verify_suite,
                     "max-tau, min-tau, dpw, thm-product, eigen-dichotomy or recognizer")
        ->required();
    cmd_verify->add_option("--trials", verify_trials, "Trials per family");
    cmd_verify->add_option("--seed", verify_seed, "Sweep seed");

    CLI11_PARSE(app, argc, argv);
    bool json_mode = output == "json";

    try {
        if (cmd_analyze->parsed()) {
            Json input{{"command", "analyze"}, {"poly", analyze_arg}};
            try {
                HPoly f = poly_argument(analyze_arg);
                if (f.degree() < 1) return emit_error(input, "expected a curve of degree >= 1", json_mode);
                JacobianReport rep = analyze(f);
                emit(input, json_jacobian_report(rep), render_text_jacobian(rep), json_mode);
                return 0;
            } catch (const std::exception& e) {
                return emit_error(input, e.what(), json_mode);
            }
        }

        if (cmd_generate->parsed()) {
            Json input{{"command", "generate"}, {"family", gen_family}, {"seed", gen_seed},
                       {"random_coords", gen_random_coords}};
            try {
                auto tag = family_from_name(gen_family);
                if (!tag || *tag == FamilyTag::None)
                    return emit_error(input, "unknown family: " + gen_family, json_mode);
                Rng rng(gen_seed);
                std::vector<Rational> params;
                if (!gen_params.empty()) {
                    std::istringstream ps(gen_params);
                    std::string item;
                    while (std::getline(ps, item, ',')) params.push_back(Rational::from_string(item));
                } else {
                    // L defaults to degree 4; conic families honor --m
                    int degree = gen_degree > 0 ? gen_degree
                                 : *tag == FamilyTag::L ? 4
                                                        : family_degree(*tag, gen_m);
                    input["degree"] = degree;
                    params = random_family_params(*tag, degree, rng);
                }
                CurveInput inst = generate_family(*tag, params, !gen_random_coords, &rng);
                Json result = json_curve(inst);
                std::ostringstream text;
                for (const auto& c : inst.components) text << print_poly(c) << "\n";
                emit(input, result, text.str(), json_mode);
                return 0;
            } catch (const std::exception& e) {
                return emit_error(input, e.what(), json_mode);
            }
        }

        if (cmd_recognize->parsed()) {
            Json input{{"command", "recognize"}, {"curve", rec_arg}};
            try {
                CurveInput c = curve_argument(rec_arg);
                if (auto diag = validate(c)) return emit_error(input, *diag, json_mode);
                FamilyTag tag = recognize(c);
                Json result{{"family", family_name(tag)}};
                emit(input, result, std::string(family_name(tag)) + "\n", json_mode);
                return 0;
            } catch (const std::exception& e) {
                return emit_error(input, e.what(), json_mode);
            }
        }

        if (cmd_eigen->parsed()) {
            Json input{{"command", "eigen"}, {"poly", eigen_arg}};
            try {
                HPoly f = poly_argument(eigen_arg);
                if (f.degree() < 3) return emit_error(input, "expected a curve of degree >= 3", json_mode);
                JacobianTensorResult jt = jacobian_to_tensor(f);
                std::optional<int> deg;
                if (jt.ok()) deg = eigenscheme_degree(*jt.tensor);
                Json result = json_tensor_result(jt, deg, blowup_class(f.degree()));
                std::ostringstream text;
                if (jt.ok()) {
                    text << "eigenscheme: yes\n";
                    text << "tensor: (" << print_poly(jt.tensor->g1) << ", " << print_poly(jt.tensor->g2)
                         << ", " << print_poly(jt.tensor->g3) << ")\n";
                    if (deg) text << "eigenscheme degree: " << *deg << "\n";
                } else {
                    text << "eigenscheme: no (" << tensor_failure_name(*jt.failure) << ")\n";
                }
                emit(input, result, text.str(), json_mode);
                return 0;
            } catch (const std::exception& e) {
                return emit_error(input, e.what(), json_mode);
            }
        }

        if (cmd_polar->parsed()) {
            Json input{{"command", "polar"}, {"curve", polar_arg}};
            try {
                CurveInput c = curve_argument(polar_arg);
                if (auto diag = validate(c)) return emit_error(input, *diag, json_mode);
                PolarReport rep = polar_report(c);
                std::ostringstream text;
                text << "polar degree (quasihomogeneous): " << rep.degree_estimate << "\n";
                text << "contracted lines:";
                for (const auto& l : rep.contracted_lines) text << " [" << print_poly(l) << "]";
                text << "\n";
                emit(input, json_polar_report(rep), text.str(), json_mode);
                return 0;
            } catch (const std::exception& e) {
                return emit_error(input, e.what(), json_mode);
            }
        }

        if (cmd_verify->parsed()) {
            Json input{{"command", "verify"}, {"suite", verify_suite}, {"trials", verify_trials},
                       {"seed", verify_seed}};
            try {
                SweepResult res = run_sweep(verify_suite, verify_trials, verify_seed);
                emit(input, json_sweep_result(res), render_text_sweep(res), json_mode);
                return res.ok() ? 0 : kExitViolation;
            } catch (const std::invalid_argument& e) {
                return emit_error(input, e.what(), json_mode);
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return 0;
}
