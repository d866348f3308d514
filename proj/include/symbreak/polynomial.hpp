#ifndef SYMBREAK_POLYNOMIAL_HPP
#define SYMBREAK_POLYNOMIAL_HPP

#include <map>
#include <string>
#include <vector>

#include "symbreak/rational.hpp"

namespace symbreak {

/// Exponent vector of a monomial. Length always equals the ambient dimension
/// of the owning polynomial.
struct Monomial {
    std::vector<int> exp;

    Monomial() = default;
    explicit Monomial(int dim) : exp(dim, 0) {}
    explicit Monomial(std::vector<int> e) : exp(std::move(e)) {}

    int degree() const {
        int d = 0;
        for (int e : exp) d += e;
        return d;
    }
    bool operator==(const Monomial& o) const { return exp == o.exp; }
};

/// Graded reverse-lexicographic order: a > b iff deg a > deg b, or degrees are
/// equal and the last nonzero entry of a-b is negative.
bool grevlex_greater(const Monomial& a, const Monomial& b);

/// Comparator putting the largest monomial first; polynomials iterate in this
/// order, which is also the canonical serialization order.
struct GrevlexDesc {
    bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_greater(a, b); }
};

class PolyMap;

/// Canonical coordinate pairing for Poisson brackets: (position, momentum)
/// index pairs partitioning all coordinates.
using Pairing = std::vector<std::pair<int, int>>;

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are kept in descending graded reverse-lexicographic order and never
/// store a zero coefficient, so equal polynomials have identical
/// serializations. Immutable in spirit: all operations return new values.
class Polynomial {
  public:
    using TermMap = std::map<Monomial, Rat, GrevlexDesc>;

    Polynomial() : dim_(0) {}
    explicit Polynomial(int dim) : dim_(dim) {}

    static Polynomial zero(int dim) { return Polynomial(dim); }
    static Polynomial constant(int dim, const Rat& c);
    static Polynomial variable(int dim, int index);
    /// Linear form sum_j c_j x_j.
    static Polynomial linear_form(const std::vector<Rat>& c);
    static Polynomial from_terms(int dim, const std::vector<std::pair<std::vector<int>, Rat>>& terms);

    int dim() const { return dim_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const;  // -1 for the zero polynomial
    int term_count() const { return static_cast<int>(terms_.size()); }
    const TermMap& terms() const { return terms_; }
    bool is_homogeneous() const;

    Rat coeff(const Monomial& m) const;
    void set_coeff(const Monomial& m, const Rat& c);  // erases on c == 0

    bool operator==(const Polynomial& o) const { return dim_ == o.dim_ && terms_ == o.terms_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scaled(const Rat& c) const;
    Polynomial pow(int e) const;

    /// Exact partial derivative with respect to variable var_index.
    Polynomial differentiate(int var_index) const;

    /// Exact evaluation at a rational point.
    Rat evaluate(const std::vector<Rat>& x) const;
    /// Floating evaluation; per-variable power tables, deterministic term order.
    double evaluate(const std::vector<double>& x) const;

    /// Substitute subs[i] for variable i; subs must have dim() components.
    Polynomial compose(const PolyMap& subs) const;
    /// p(M x) for a square matrix given row-major as rational entries.
    Polynomial substitute_linear(const std::vector<std::vector<Rat>>& m) const;
    /// Embed into a larger variable space, keeping variable i at position i.
    Polynomial extend_dim(int new_dim) const;

    PolyMap gradient() const;

    /// Canonical text form, e.g. "2 * x^2*y + -1/2 * y". Zero prints "0".
    std::string to_string(const std::vector<std::string>& names) const;

    /// Parse an expression over named variables: rational literals, + - * ^,
    /// parentheses, unary minus. Throws std::invalid_argument with position.
    static Polynomial parse(const std::string& text, const std::vector<std::string>& names);

  private:
    int dim_;
    TermMap terms_;
    void check_dim(const Polynomial& o) const;
};

/// Canonical Poisson bracket sum_pairs (dp/dq dq/dp - dp/dp dq/dq), exact.
Polynomial poisson_bracket(const Polynomial& p, const Polynomial& q, const Pairing& pairing);

/// Validates that a pairing partitions 0..dim-1 into disjoint (q,p) pairs.
void validate_pairing(const Pairing& pairing, int dim);

/// A list of polynomials over a common variable space; the carrier for
/// equivariant generators, gradients and vector fields.
class PolyMap {
  public:
    PolyMap() = default;
    explicit PolyMap(std::vector<Polynomial> comps) : comps_(std::move(comps)) {}

    int size() const { return static_cast<int>(comps_.size()); }
    int dim() const { return comps_.empty() ? 0 : comps_.front().dim(); }
    const Polynomial& operator[](int i) const { return comps_[i]; }
    Polynomial& operator[](int i) { return comps_[i]; }
    const std::vector<Polynomial>& components() const { return comps_; }
    bool operator==(const PolyMap& o) const { return comps_ == o.comps_; }

    std::vector<Rat> evaluate(const std::vector<Rat>& x) const;
    std::vector<double> evaluate(const std::vector<double>& x) const;

    /// Jacobian as a size() x dim() grid of polynomials.
    std::vector<std::vector<Polynomial>> jacobian() const;

  private:
    std::vector<Polynomial> comps_;
};

}  // namespace symbreak

#endif
