#pragma once

#include <json.hpp>

#include "syzlab/arrangements.hpp"
#include "syzlab/eigenscheme.hpp"
#include "syzlab/jacobian.hpp"
#include "syzlab/polar.hpp"
#include "syzlab/sweeps.hpp"

namespace syzlab {

using Json = nlohmann::ordered_json;

/// JSON serializers for the command results. Top-level envelope:
/// {"schema_version": 1, "input": ..., "result": ..., "diagnostics": [...]}.
/// All counts are integers; rationals are "p/q" strings; maps keep insertion
/// order so identical inputs give byte-identical output.
Json envelope(Json input, Json result, Json diagnostics = Json::array());

Json json_freeness(const Freeness& fr);
Json json_jacobian_report(const JacobianReport& rep);
Json json_curve(const CurveInput& c);
Json json_tensor_result(const JacobianTensorResult& jt, const std::optional<int>& eig_degree,
                        const std::array<Rational, 3>& blowup);
Json json_polar_report(const PolarReport& rep);
Json json_sweep_result(const SweepResult& res);

std::string render_text_jacobian(const JacobianReport& rep);
std::string render_text_sweep(const SweepResult& res);

}  // namespace syzlab
