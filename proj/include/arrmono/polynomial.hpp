#ifndef ARRMONO_POLYNOMIAL_HPP
#define ARRMONO_POLYNOMIAL_HPP

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "arrmono/monomial.hpp"
#include "arrmono/rational.hpp"

namespace arrmono {

/// Sparse multivariate polynomial in x,y,z,t with exact rational
/// coefficients. Terms are kept sorted leading-first (descending grlex),
/// never store a zero coefficient, and the degree / homogeneity /
/// integrality flags are maintained on construction. Values are immutable
/// after construction; every operation returns a fresh polynomial.
class Polynomial {
  public:
    struct Term {
        Mono m;
        Rat c;
    };

    Polynomial() = default;  // zero

    static Polynomial constant(const Rat& c);
    static Polynomial monomial(Mono m, const Rat& c = Rat(1));
    static Polynomial variable(int var);  // 0..3 -> x,y,z,t
    /// Any order, duplicates and zeros allowed; normalizes.
    static Polynomial from_terms(std::vector<Term> terms);

    bool is_zero() const { return terms_.empty(); }
    int degree() const { return degree_; }  // -1 for the zero polynomial
    bool homogeneous() const { return homogeneous_; }
    bool homogeneous_of_degree(int d) const { return homogeneous_ && degree_ == d; }
    /// All coefficients have denominator 1.
    bool integer_coeffs() const { return integer_; }
    size_t term_count() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }
    const Term& leading_term() const { return terms_.front(); }
    Rat coeff(Mono m) const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial scaled(const Rat& s) const;
    Polynomial mul_mono(Mono m, const Rat& s = Rat(1)) const;

    /// Formal partial derivative with respect to variable 0..3.
    Polynomial diff(int var) const;

    Rat eval(const std::array<Rat, 4>& point) const;

    /// Exact quotient p/q (this = p); throws NotDivisible with the first
    /// obstructed term if no polynomial r with q*r = p exists.
    Polynomial exact_div(const Polynomial& q) const;

    /// Substitute x_var := sum_i coeffs[i] * x_i (coeffs[var] ignored and
    /// treated as 0). The result has exponent 0 on var.
    Polynomial substitute_linear(int var, const std::array<Rat, 4>& coeffs) const;

    /// Result exponent of variable perm[i] = this exponent of variable i.
    Polynomial permute_vars(const std::array<int, 4>& perm) const;

    /// lcm of coefficient denominators.
    Int denominator_lcm() const;
    /// max |numerator of c*scale| over terms, exact; used for modular
    /// zero-certification bounds.
    Int scaled_height(const Int& scale) const;
    /// sum of |numerator of c*scale| over terms.
    Int scaled_length(const Int& scale) const;

    // ---- POLY4 v1 text format -------------------------------------------
    // Header "POLY4 v1 degree=<d> terms=<n>", then one term per line as
    // "<num>/<den> <e1> <e2> <e3> <e4>" in canonical (leading-first) order.
    // Bit-exact reproducible: parse(serialize(p)) == p and
    // serialize(parse(s)) == s for canonical s.
    std::string to_poly4() const;
    static Polynomial from_poly4(const std::string& text);
    void write_poly4(std::ostream& os) const;
    static Polynomial read_poly4(std::istream& is);

    std::string to_string() const;  // human-readable, debugging and errors

  private:
    std::vector<Term> terms_;
    int degree_ = -1;
    bool homogeneous_ = true;
    bool integer_ = true;

    void recompute_flags();
};

/// Dot product sum_i a[i]*b[i] (sizes must match).
Polynomial poly_dot(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b);

/// Proves sum_i a[i]*b[i] == 0 exactly, without materializing the products
/// over Q: evaluates the sum modulo deterministic 62-bit primes whose
/// product exceeds twice an a-priori bound on the cleared integer
/// coefficients of the sum. All inputs must be homogeneous with matching
/// product degree. Returns true only when the identity is certain.
bool product_sum_vanishes(const std::vector<std::pair<const Polynomial*, const Polynomial*>>& prods);

/// Reduce every coefficient mod p (throws BadPrime if a denominator
/// vanishes). Returned terms keep the canonical order.
std::vector<std::pair<Mono, uint64_t>> poly_mod(const Polynomial& p, uint64_t prime);

}  // namespace arrmono

#endif
