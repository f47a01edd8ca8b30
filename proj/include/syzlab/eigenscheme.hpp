#pragma once

#include <array>
#include <optional>

#include "syzlab/hpoly.hpp"
#include "syzlab/jacobian.hpp"

namespace syzlab {

/// Partially symmetric tensor as a triple of forms of one common degree.
struct Tensor {
    HPoly g1, g2, g3;

    int degree() const { return g1.degree(); }
};

Tensor make_tensor(HPoly g1, HPoly g2, HPoly g3);

/// The three 2x2 minors of [[x, y, z], [g1, g2, g3]]:
/// (x g2 - y g1, x g3 - z g1, y g3 - z g2), each of degree e+1.
std::array<HPoly, 3> minors_ideal(const Tensor& t);

/// Stable quotient dimension of R modulo the minor ideal; nullopt when the
/// dimension keeps growing (the scheme is not zero-dimensional).
std::optional<int> eigenscheme_degree(const Tensor& t);

/// All three minors vanish at P (fixed point of the polar map when the
/// tensor is a gradient).
bool contains_point(const Tensor& t, const Point& p);

enum class TensorFailure {
    NoLinearSyzygy,         // mdr != 1
    MultipleLinearSyzygies, // dim Syz_1 > 1
    DependentEntries,       // linear syzygy entries span < 3 dimensions
    NotFree,                // resolution is not Free(1, d-2)
    SpanMismatch,           // minor ideal disagrees with the Jacobian ideal
};

const char* tensor_failure_name(TensorFailure f);

/// Outcome of the Jacobian-scheme-as-eigenscheme decision. On success carries
/// the tensor plus the two syzygies that realize the ideal (the linear one
/// and an independent degree-(d-2) one).
struct JacobianTensorResult {
    std::optional<Tensor> tensor;
    std::optional<TensorFailure> failure;
    SyzygyVec linear;  // valid on success
    SyzygyVec second;  // valid on success

    bool ok() const { return tensor.has_value(); }
};

/// Decides whether J_f is the ideal of an eigenscheme: requires mdr(f) = 1,
/// a one-dimensional linear syzygy space with three independent entries, and
/// a Free(1, d-2) resolution; then solves A T = G for the tensor and checks
/// the minor span against the partials in degree d-1.
JacobianTensorResult jacobian_to_tensor(const HPoly& f);

/// 3x2 matrix with first column a diagonal linear syzygy (ax, by, cz),
/// abc != 0, and second column the scaled mixed second partials; the 2x2
/// minors generate the Jacobian ideal.
struct HBMatrix {
    std::array<HPoly, 3> linear_column;
    std::array<HPoly, 3> high_column;
};

HBMatrix buchweitz_conca_matrix(const HPoly& f, const SyzygyVec& s);

std::array<HPoly, 3> hb_minors(const HBMatrix& m);

/// Class of the graph surface of the polar map in the two hyperplane
/// generators: ((d-1), d, 1).
std::array<Rational, 3> blowup_class(int d);

}  // namespace syzlab
