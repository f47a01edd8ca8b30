#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "syzlab/hpoly.hpp"
#include "syzlab/rng.hpp"

namespace syzlab {

/// A reduced curve supplied factored: pairwise non-proportional components of
/// degree 1 or 2 (higher degrees carried but excluded from recognition).
struct CurveInput {
    std::vector<HPoly> components;
    HPoly product;
};

CurveInput make_curve(std::vector<HPoly> components);

enum class FamilyTag { L, C1, C2, CL1, CL2, CL3, CL4, CL5, CL6, None };

const char* family_name(FamilyTag t);
std::optional<FamilyTag> family_from_name(const std::string& name);

enum class PairKind { Tacnodal, Hyperosculating, Other };
enum class PencilKind { Bitangent, Hyperosculating, Other };
enum class LineRole { TangentLine, BaseLine, Generic };

struct PencilClass {
    PencilKind kind = PencilKind::Other;
    std::array<HPoly, 2> basis;  // spans the pencil when kind != Other
};

/// Normal-form generator for the nine families.
///   L   params = flattened slope pairs (a1,b1,...,a_{d-1},b_{d-1}):
///         z * prod (a_i x + b_i y), degree d
///   C1  params = m distinct nonzero a_i: prod (x^2 + a_i(xz + y^2)), d = 2m
///   CL1 x * C1-product, d = 2m+1
///   C2  prod (xz + a_i y^2), d = 2m
///   CL2 x * C2-product, d = 2m+1
///   CL3 xz * C2-product, d = 2m+2
///   CL4 xy * C2-product, d = 2m+2
///   CL5 xyz * C2-product, d = 2m+3
///   CL6 y * C2-product, d = 2m+1
/// With normal_form = false a seeded random invertible integer coordinate
/// change (determinant in [1,50]) is applied to every component.
CurveInput generate_family(FamilyTag tag, const std::vector<Rational>& params, bool normal_form,
                           Rng* rng = nullptr);

/// Degree of the instance generate_family builds from m parameters (or, for
/// L, from m slope pairs plus the general line).
int family_degree(FamilyTag tag, int m);

/// Random valid parameters for the family at the given degree.
std::vector<Rational> random_family_params(FamilyTag tag, int degree, Rng& rng);

/// Degrees the family realizes inside [lo, hi], respecting parity and m >= 2
/// for conic families (L needs d >= 3).
std::vector<int> family_degrees_in(FamilyTag tag, int lo, int hi);

/// nullopt when valid; otherwise a diagnostic naming the offending component.
std::optional<std::string> validate(const CurveInput& c);

/// Classification of a pair of smooth, non-proportional conics by the global
/// Tjurina number of their union: 6 -> Tacnodal, 7 -> Hyperosculating.
PairKind pair_class(const HPoly& c1, const HPoly& c2);

/// Bitangent/hyperosculating pencil detection: coefficient span of rank
/// exactly 2 plus one shared pair class.
PencilClass detect_pencil(const std::vector<HPoly>& conics);

/// Role of a line against a pencil. For bitangent pencils: BaseLine when l^2
/// lies in the pencil span, TangentLine when some l*l' does and l^2 does not.
/// For hyperosculating pencils the squared common tangent is itself the
/// degenerate member, so that line reports TangentLine.
LineRole line_role(const HPoly& line, const PencilClass& pencil);

/// Coordinate-free family recognition (degree >= 4); None when the input
/// matches no family inventory.
FamilyTag recognize(const CurveInput& c);

/// Random invertible integer coordinate change, det in [1, 50].
std::array<std::array<Rational, 3>, 3> random_coordinate_change(Rng& rng);

/// Seeded instance helper: random parameters, optional random coordinates.
CurveInput random_family_instance(FamilyTag tag, int degree, bool random_coords, Rng& rng);

/// A copy of the instance with one component nudged off the family (conic
/// pushed off its pencil, or a concurrent line moved off the common point).
CurveInput perturb_off_family(const CurveInput& c, FamilyTag tag);

}  // namespace syzlab
