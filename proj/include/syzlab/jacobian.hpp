#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "syzlab/hpoly.hpp"
#include "syzlab/qmat.hpp"

namespace syzlab {

/// A relation a*g1 + b*g2 + c*g3 = 0 among three equal-degree forms (for the
/// Jacobian ideal: a*f_x + b*f_y + c*f_z = 0), entries of one common degree.
struct SyzygyVec {
    HPoly a, b, c;

    int degree() const { return a.degree(); }
    bool is_zero() const { return a.is_zero() && b.is_zero() && c.is_zero(); }
    std::vector<Rational> coeff_vector() const;  // against (R_t)^3 monomial basis
};

/// Raised when the graded quotient dimension never settles inside the scan
/// window; signals a non-reduced (or otherwise non-zero-dimensional) input.
class NoPlateauError : public std::runtime_error {
public:
    explicit NoPlateauError(const std::string& what) : std::runtime_error(what) {}
};

/// Three equal-degree generators plus any verified relations among them.
/// Relations feed the fast exact path: a modular rank bound on the
/// multiplication matrix plus a modular rank bound on the relation shifts
/// certify each other when they meet, with no reconstruction.
struct IdealPresentation {
    std::vector<HPoly> gens;
    std::vector<SyzygyVec> relations;
};

/// dim (R/(gens))_t, exact.
int presented_quotient_dim(const IdealPresentation& p, int t);

/// Stable value of t -> presented_quotient_dim: requires constancy on a
/// window [t0, t0+max(eff_d,4)] with t0 >= 3*eff_d-6, extending by eff_d up
/// to 6*eff_d. nullopt when no plateau appears.
std::optional<int> stable_presented_quotient_dim(const IdealPresentation& p, int eff_d);

enum class FreenessKind { Free, NearlyFree, Neither, ConcurrentLines };

struct Freeness {
    FreenessKind kind = FreenessKind::Neither;
    int d1 = 0, d2 = 0;                   // exponents, when Free or NearlyFree
    std::vector<int> generator_degrees;   // minimal generator degrees found (scan <= d-1)
    bool scan_truncated = false;          // Neither: degrees above d-1 were not probed
};

struct JacobianReport {
    int d = 0;    // curve degree
    int r = 0;    // minimal syzygy degree
    int tau = 0;  // global Tjurina number
    std::optional<int> dpw_lower, dpw_upper;
    Freeness freeness;
    std::vector<std::pair<int, int>> hilbert_table;  // (t, dim (R/J_f)_t)
};

struct DpwResult {
    int lower = 0, upper = 0, tau = 0;
    bool holds = false;
};

/// Matrix of the multiplication map (R_{t-e})^k -> R_t by the degree-e
/// generators; rows follow monomials_of_degree(t), columns come in one block
/// per generator, each block following monomials_of_degree(t-e).
QMat multiplication_matrix(const std::vector<HPoly>& gens, int t);

/// Basis of the degree-t graded piece of the syzygy module of the partials.
std::vector<SyzygyVec> syzygy_space(const HPoly& f, int t);

/// dim of that piece without materializing basis vectors.
int syzygy_space_dim(const HPoly& f, int t);

/// Minimal degree of a nonzero syzygy; 0 iff the partials are linearly
/// dependent. Koszul relations guarantee a hit by degree deg(f)-1.
int mdr(const HPoly& f);

/// dim (R/J_f)_t.
int hilbert_function(const HPoly& f, int t);

/// Global Tjurina number: (d-1)^2 for linearly dependent partials, otherwise
/// the plateau value of the Hilbert function. Throws NoPlateauError when the
/// input is not reduced.
int tjurina(const HPoly& f);

/// du Plessis-Wall bounds (d-1)(d-r-1) <= tau <= (d-1)(d-r-1)+r^2.
/// Rejects r = 0 (bounds do not apply to concurrent lines).
DpwResult dpw_check(const HPoly& f);

/// Scans minimal syzygy generators in degrees 1..d-1 and classifies the
/// module as Free(d1,d2) with d1+d2 = d-1, NearlyFree(d1,d2) with d1+d2 = d,
/// or Neither (with the collected degree data).
Freeness resolution_probe(const HPoly& f);

/// Product-syzygy lift: for delta1 killing f1, returns
///   f2*delta1 - (1/deg(f1 f2)) * (delta1 . grad f2) * (x, y, z),
/// a nonzero syzygy of f1*f2. delta1 must be a valid syzygy of f1 and f2
/// must be non-constant and coprime to f1.
SyzygyVec lift_syzygy(const SyzygyVec& delta1, const HPoly& f1, const HPoly& f2);

/// True when a*f_x + b*f_y + c*f_z vanishes identically.
bool is_syzygy_of(const SyzygyVec& s, const HPoly& f);

/// Full report: degree, mdr, tau, bounds, freeness class, Hilbert table.
JacobianReport analyze(const HPoly& f);

}  // namespace syzlab
