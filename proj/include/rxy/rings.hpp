#pragma once

// Exact arithmetic for the two supported base PIDs:
//   Ring::Int   -- the integers Z
//   Ring::PolyZ -- Q[z], univariate polynomials in z with rational coefficients
// together with their fraction fields and quotient rings R/pR.
//
// All values are immutable after construction and all operations are pure.

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace rxy {

enum class Ring { Int, PolyZ };

inline const char* ring_name(Ring r) { return r == Ring::Int ? "int" : "z"; }

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};
struct DomainMismatch : Error {
    explicit DomainMismatch(const std::string& what) : Error(what) {}
};
struct ZeroModulus : Error {
    ZeroModulus() : Error("zero modulus rejected") {}
};
struct DivisionError : Error {
    explicit DivisionError(const std::string& what) : Error(what) {}
};

// ---------------------------------------------------------------------------
// UniPoly: element of Q[z]
// ---------------------------------------------------------------------------

class UniPoly {
  public:
    UniPoly() = default;
    explicit UniPoly(const mpq_class& constant) {
        if (constant != 0) c_.push_back(constant);
    }
    static UniPoly from_coeffs(std::vector<mpq_class> coeffs) {
        UniPoly p;
        p.c_ = std::move(coeffs);
        p.trim();
        return p;
    }
    // z^k
    static UniPoly monomial(int k, const mpq_class& coeff = 1);

    // degree; -1 for the zero polynomial
    int deg() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const mpq_class& leading() const;
    mpq_class coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[static_cast<size_t>(k)] : mpq_class(0);
    }
    const std::vector<mpq_class>& coeffs() const { return c_; }

    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly operator-() const;
    bool operator==(const UniPoly& o) const { return c_ == o.c_; }

    UniPoly scaled(const mpq_class& k) const;
    UniPoly derivative() const;
    mpq_class eval(const mpq_class& x) const;

    // quotient and remainder, deg(rem) < deg(divisor); divisor nonzero
    static void divmod(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r);

    std::string str() const;

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<mpq_class> c_;  // c_[i] is the coefficient of z^i
};

UniPoly gcd(const UniPoly& a, const UniPoly& b);  // monic (or zero)

// ---------------------------------------------------------------------------
// RingElem: a tagged element of Z or Q[z]
// ---------------------------------------------------------------------------

class RingElem {
  public:
    RingElem() : v_(mpz_class(0)) {}
    explicit RingElem(mpz_class z) : v_(std::move(z)) {}
    explicit RingElem(UniPoly p) : v_(std::move(p)) {}

    static RingElem zero(Ring r) { return r == Ring::Int ? RingElem(mpz_class(0)) : RingElem(UniPoly()); }
    static RingElem one(Ring r) {
        return r == Ring::Int ? RingElem(mpz_class(1)) : RingElem(UniPoly(mpq_class(1)));
    }
    static RingElem from_int(Ring r, long n) {
        return r == Ring::Int ? RingElem(mpz_class(n)) : RingElem(UniPoly(mpq_class(n)));
    }

    Ring ring() const { return std::holds_alternative<mpz_class>(v_) ? Ring::Int : Ring::PolyZ; }
    const mpz_class& as_int() const;
    const UniPoly& as_poly() const;

    bool is_zero() const;
    bool is_one() const;
    bool is_unit() const;

    RingElem operator+(const RingElem& o) const;
    RingElem operator-(const RingElem& o) const;
    RingElem operator*(const RingElem& o) const;
    RingElem operator-() const;
    bool operator==(const RingElem& o) const;
    bool operator!=(const RingElem& o) const { return !(*this == o); }

    std::string str() const;

  private:
    void check_same(const RingElem& o) const;
    std::variant<mpz_class, UniPoly> v_;
};

struct UnitNormal {
    RingElem unit;       // u in R^*
    RingElem canonical;  // w in U(R): positive integer / monic polynomial
};

// r = u*w with w in U(R); rejects r == 0
UnitNormal normalize_unit(const RingElem& r);

// multiplicative inverse of a unit
RingElem unit_inverse(const RingElem& u);

// true division, throws DivisionError unless b divides a exactly
RingElem exact_div(const RingElem& a, const RingElem& b);
bool divides(const RingElem& b, const RingElem& a);

// canonical remainder of a modulo p: in [0,|p|) over Z, deg < deg p over Q[z]
RingElem canonical_rem(const RingElem& a, const RingElem& p);

struct BezoutResult {
    RingElem g, s, t;  // g = s*a + t*b, g in U(R) (or 0)
};
// rejects (0,0); g canonical, t reduced modulo a/g (least-absolute / least-degree)
BezoutResult gcd_bezout(const RingElem& a, const RingElem& b);
RingElem gcd(const RingElem& a, const RingElem& b);  // canonical representative
RingElem lcm(const RingElem& a, const RingElem& b);

RingElem pow(const RingElem& a, unsigned e);
RingElem pow_mod(const RingElem& a, unsigned e, const RingElem& p);

// exponent e with: x nilpotent in R/pR  iff  x^e = 0 mod p
// (bit-length of |p| over Z, deg p over Q[z])
unsigned nilpotency_bound(const RingElem& p);

bool is_nilpotent_mod(const RingElem& a, const RingElem& p);
bool is_unit_mod(const RingElem& a, const RingElem& p);

// inverse of a modulo p; requires is_unit_mod(a, p)
RingElem inverse_mod(const RingElem& a, const RingElem& p);

// squarefree radical. Q[z]: p/gcd(p,p'), exact. Z: trial division up to `budget`,
// nullopt when a cofactor remains unfactored.
std::optional<RingElem> radical(const RingElem& p, unsigned long budget = 100000);

// ---------------------------------------------------------------------------
// FracElem: element of qt(R), canonical form (denominator in U(R), reduced)
// ---------------------------------------------------------------------------

class FracElem {
  public:
    FracElem() : num_(RingElem::zero(Ring::Int)), den_(RingElem::one(Ring::Int)) {}
    explicit FracElem(RingElem n) : num_(std::move(n)), den_(RingElem::one(num_.ring())) {}
    FracElem(RingElem n, RingElem d);  // canonicalizes

    static FracElem zero(Ring r) { return FracElem(RingElem::zero(r)); }
    static FracElem one(Ring r) { return FracElem(RingElem::one(r)); }
    static FracElem from_int(Ring r, long n) { return FracElem(RingElem::from_int(r, n)); }
    static FracElem from_rational(Ring r, const mpq_class& q);

    Ring ring() const { return num_.ring(); }
    const RingElem& num() const { return num_; }
    const RingElem& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_integral() const { return den_.is_one(); }
    // true when the value is a (z-free over PolyZ) rational constant
    bool is_constant() const;
    mpq_class constant_value() const;  // requires is_constant()

    FracElem operator+(const FracElem& o) const;
    FracElem operator-(const FracElem& o) const;
    FracElem operator*(const FracElem& o) const;
    FracElem operator/(const FracElem& o) const;
    FracElem operator-() const;
    bool operator==(const FracElem& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const FracElem& o) const { return !(*this == o); }

    FracElem inverse() const;
    RingElem to_ring() const;  // requires is_integral()

    std::string str() const;

  private:
    RingElem num_, den_;
};

// ---------------------------------------------------------------------------
// QuotElem: element of R/pR, canonical representative
// ---------------------------------------------------------------------------

class QuotElem {
  public:
    QuotElem(RingElem rep, RingElem mod);

    const RingElem& rep() const { return rep_; }
    const RingElem& mod() const { return mod_; }
    Ring ring() const { return rep_.ring(); }

    bool is_zero() const { return rep_.is_zero(); }
    bool is_unit() const { return is_unit_mod(rep_, mod_); }
    bool is_nilpotent() const { return is_nilpotent_mod(rep_, mod_); }

    QuotElem operator+(const QuotElem& o) const;
    QuotElem operator-(const QuotElem& o) const;
    QuotElem operator*(const QuotElem& o) const;
    bool operator==(const QuotElem& o) const { return rep_ == o.rep_ && mod_ == o.mod_; }

    std::string str() const;

  private:
    void check_same(const QuotElem& o) const;
    RingElem rep_, mod_;
};

}  // namespace rxy
