#ifndef ARRMONO_MONOMIAL_HPP
#define ARRMONO_MONOMIAL_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace arrmono {

/// Monomial in x,y,z,t packed into one word:
///   key = (deg << 48) | (e1 << 32) | (e2 << 16) | e3,     e4 = deg-e1-e2-e3.
/// Numeric order on keys is exactly graded-lex with x>y>z>t (degree first,
/// then e1, e2, e3; e4 is determined), so "larger key" = "later variable
/// powers pushed down" and key addition is exponent addition as long as
/// every field stays below 2^16. Total degrees in this project stay <= 170.
class Mono {
  public:
    Mono() : key_(0) {}
    explicit Mono(uint64_t key) : key_(key) {}
    Mono(int e1, int e2, int e3, int e4)
        : key_((static_cast<uint64_t>(e1 + e2 + e3 + e4) << 48) |
               (static_cast<uint64_t>(e1) << 32) | (static_cast<uint64_t>(e2) << 16) |
               static_cast<uint64_t>(e3)) {}

    uint64_t key() const { return key_; }
    int degree() const { return static_cast<int>(key_ >> 48); }
    int e(int var) const {  // var in 0..3
        switch (var) {
            case 0: return static_cast<int>((key_ >> 32) & 0xffff);
            case 1: return static_cast<int>((key_ >> 16) & 0xffff);
            case 2: return static_cast<int>(key_ & 0xffff);
            default: return degree() - e(0) - e(1) - e(2);
        }
    }
    std::array<int, 4> exponents() const { return {e(0), e(1), e(2), e(3)}; }

    Mono operator*(Mono o) const { return Mono(key_ + o.key_); }
    bool divides(Mono o) const {
        return e(0) <= o.e(0) && e(1) <= o.e(1) && e(2) <= o.e(2) && e(3) <= o.e(3);
    }
    /// Quotient o/this; caller guarantees divisibility.
    Mono quotient_into(Mono o) const { return Mono(o.key_ - key_); }

    bool operator==(Mono o) const { return key_ == o.key_; }
    bool operator!=(Mono o) const { return key_ != o.key_; }
    /// grlex comparison: a < b means a precedes b in ascending order.
    bool operator<(Mono o) const { return key_ < o.key_; }

    std::string to_string() const;

  private:
    uint64_t key_;
};

constexpr int kVars = 4;

/// Exact binomial C(n,k) for the small ranges used here (fits int64).
int64_t binom(int64_t n, int k);

/// dim of the space of homogeneous degree-d polynomials: C(d+3,3) in 4
/// variables, C(d+2,2) in the 3-variable restricted mode. Degree < 0 gives 0.
int64_t mono_count(int d, int nvars = 4);

/// All monomials of total degree d, leading (grlex-largest) first.
/// nvars == 3 restricts to monomials with t-exponent 0.
std::vector<Mono> mono_basis(int d, int nvars = 4);

/// Index of m within mono_basis(m.degree(), nvars); O(1), no tables.
int64_t mono_rank(Mono m, int nvars = 4);

}  // namespace arrmono

#endif
