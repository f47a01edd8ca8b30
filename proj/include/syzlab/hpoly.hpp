#pragma once

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "syzlab/rational.hpp"

namespace syzlab {

enum class Var { X = 0, Y = 1, Z = 2 };

/// Exponent triple of a monomial x^i y^j z^k.
struct Mono {
    int i = 0, j = 0, k = 0;

    int degree() const { return i + j + k; }
    int exp(Var v) const { return v == Var::X ? i : (v == Var::Y ? j : k); }

    friend bool operator==(const Mono&, const Mono&) = default;
};

/// Graded-lex order, descending: higher degree first, then x-major lex.
struct MonoCmp {
    bool operator()(const Mono& a, const Mono& b) const {
        if (a.degree() != b.degree()) return a.degree() > b.degree();
        if (a.i != b.i) return a.i > b.i;
        if (a.j != b.j) return a.j > b.j;
        return a.k > b.k;
    }
};

using Point = std::array<Rational, 3>;

class BinaryForm;

/// Homogeneous polynomial in x, y, z with exact rational coefficients.
/// Stored sparsely; all stored coefficients are nonzero and every exponent
/// triple sums to the degree tag. The zero polynomial keeps its tag so graded
/// operations stay total.
class HPoly {
public:
    using TermMap = std::map<Mono, Rational, MonoCmp>;

    HPoly() = default;
    explicit HPoly(int degree_tag) : degree_(require_nonneg(degree_tag)) {}

    static HPoly zero(int degree_tag = 0) { return HPoly(degree_tag); }
    static HPoly constant(const Rational& c);
    static HPoly monomial(const Rational& c, Mono m);
    static HPoly variable(Var v);
    /// a*x + b*y + c*z
    static HPoly linear(const Rational& a, const Rational& b, const Rational& c);

    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    Rational coeff(Mono m) const;
    Mono leading_monomial() const;  // throws on zero

    HPoly operator-() const;
    HPoly& operator+=(const HPoly& o);
    HPoly& operator-=(const HPoly& o);
    friend HPoly operator+(HPoly a, const HPoly& b) { return a += b; }
    friend HPoly operator-(HPoly a, const HPoly& b) { return a -= b; }
    friend HPoly operator*(const HPoly& a, const HPoly& b);
    friend bool operator==(const HPoly&, const HPoly&) = default;

    HPoly scaled(const Rational& c) const;
    HPoly pow(int e) const;  // e >= 0

    /// Adds c * x^i y^j z^k, pruning a cancelled entry. Degree must match
    /// unless this is the zero polynomial, which adopts the term's degree.
    void add_term(Mono m, const Rational& c);

private:
    static int require_nonneg(int d) {
        if (d < 0) throw std::invalid_argument("HPoly: negative degree tag");
        return d;
    }

    int degree_ = 0;
    TermMap terms_;
};

/// True when f = lambda * g for some nonzero scalar.
bool proportional(const HPoly& f, const HPoly& g);

HPoly partial_derivative(const HPoly& f, Var v);
std::array<HPoly, 3> gradient(const HPoly& f);

/// Exact value at the given affine representative. P must not be all-zero.
Rational evaluate(const HPoly& f, const Point& p);

/// f(s*P + t*Q) as a binary form of degree deg f. P, Q must span a line.
BinaryForm restrict_to_line(const HPoly& f, const Point& P, const Point& Q);

/// Quotient q with f = q*g, or nullopt when g does not divide f. g != 0.
std::optional<HPoly> exact_divide(const HPoly& f, const HPoly& g);

/// Determinant of the matrix of second partials; degree 3(deg f - 2).
HPoly hessian_det(const HPoly& f);

/// f(M * (x,y,z)^T): substitutes row i of M for the i-th variable's dual,
/// i.e. x -> M[0][0] x + M[0][1] y + M[0][2] z and so on.
HPoly substitute_linear(const HPoly& f, const std::array<std::array<Rational, 3>, 3>& m);

/// Variables with a positive exponent somewhere in f.
std::vector<Var> variables_present(const HPoly& f);

/// Monomials of total degree t in the canonical (descending) order.
std::vector<Mono> monomials_of_degree(int t);

/// (t+1)(t+2)/2 for t >= 0, else 0.
int graded_dim(int t);

/// Coefficients of f against monomials_of_degree(f.degree()).
std::vector<Rational> coeff_vector(const HPoly& f);

/// Binary form in s, t of fixed degree; coefficient i multiplies s^(d-i) t^i.
class BinaryForm {
public:
    BinaryForm() : coeffs_(1) {}
    explicit BinaryForm(int degree) : coeffs_(static_cast<size_t>(degree) + 1) {
        if (degree < 0) throw std::invalid_argument("BinaryForm: negative degree");
    }
    explicit BinaryForm(std::vector<Rational> coeffs);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational& operator[](int i) { return coeffs_[static_cast<size_t>(i)]; }
    const Rational& operator[](int i) const { return coeffs_[static_cast<size_t>(i)]; }

    BinaryForm& operator+=(const BinaryForm& o);
    friend BinaryForm operator+(BinaryForm a, const BinaryForm& b) { return a += b; }
    friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b);
    friend bool operator==(const BinaryForm&, const BinaryForm&) = default;

    BinaryForm scaled(const Rational& c) const;
    BinaryForm derivative_s() const;
    BinaryForm derivative_t() const;

private:
    std::vector<Rational> coeffs_;
};

/// gcd normalized so its first nonzero coefficient is 1; zero inputs rejected.
BinaryForm binary_gcd(const BinaryForm& a, const BinaryForm& b);

/// Exact quotient; throws when g does not divide f.
BinaryForm binary_divexact(const BinaryForm& f, const BinaryForm& g);

struct SquarefreeParts {
    BinaryForm gcd_with_derivative;  // gcd(g, dg/ds, dg/dt)
    BinaryForm squarefree_part;      // g / gcd, same distinct roots as g
};

/// Multiplicity split of a nonzero binary form; squarefree_part has degree
/// equal to the number of distinct roots of g in P^1.
SquarefreeParts binary_gcd_squarefree(const BinaryForm& g);

}  // namespace syzlab
