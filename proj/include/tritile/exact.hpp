#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace tritile {

using Int = boost::multiprecision::cpp_int;

/// Thrown when two values from distinct quadratic extensions are combined.
struct field_error : std::runtime_error {
    explicit field_error(const std::string& what) : std::runtime_error(what) {}
};

/// Arbitrary-precision rational, always reduced, denominator > 0.
class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(Int n) : num_(std::move(n)), den_(1) {}
    Rational(Int n, Int d);

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ == 0 ? 0 : (num_ > 0 ? 1 : -1); }

    Rational operator-() const { return Rational(-num_, den_); }
    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return (a - b).sign() < 0;
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    std::string str() const;
    double to_double() const;

  private:
    Int num_;
    Int den_;
};

/// Exact square root of a nonnegative rational, if the result is rational.
std::optional<Rational> rational_sqrt(const Rational& q);

/// Element r + s*sqrt(d) of a real quadratic extension of the rationals.
///
/// Invariants: d is square-free and >= 0; when the irrational part is zero
/// the radicand collapses to 0, so purely rational values compare equal
/// regardless of the extension they were computed in.  Values from distinct
/// extensions (both with nonzero irrational part) cannot be combined.
class QuadNum {
  public:
    QuadNum() : rat_(0), irr_(0), radicand_(0) {}
    QuadNum(long long n) : rat_(n), irr_(0), radicand_(0) {}
    QuadNum(Rational r) : rat_(std::move(r)), irr_(0), radicand_(0) {}
    QuadNum(Rational r, Rational s, long long d);

    const Rational& rat() const { return rat_; }
    const Rational& irr() const { return irr_; }
    long long radicand() const { return radicand_; }

    bool is_rational() const { return irr_.is_zero(); }
    bool is_zero() const { return rat_.is_zero() && irr_.is_zero(); }

    /// Exact sign, decided by comparing rat^2 against irr^2 * d.
    int sign() const;

    QuadNum operator-() const { return QuadNum(-rat_, -irr_, radicand_); }
    friend QuadNum operator+(const QuadNum& a, const QuadNum& b);
    friend QuadNum operator-(const QuadNum& a, const QuadNum& b);
    friend QuadNum operator*(const QuadNum& a, const QuadNum& b);
    friend QuadNum operator/(const QuadNum& a, const QuadNum& b);
    QuadNum& operator+=(const QuadNum& o) { return *this = *this + o; }
    QuadNum& operator-=(const QuadNum& o) { return *this = *this - o; }
    QuadNum& operator*=(const QuadNum& o) { return *this = *this * o; }
    QuadNum& operator/=(const QuadNum& o) { return *this = *this / o; }

    friend bool operator==(const QuadNum& a, const QuadNum& b) {
        return (a - b).is_zero();
    }
    friend bool operator!=(const QuadNum& a, const QuadNum& b) { return !(a == b); }
    friend bool operator<(const QuadNum& a, const QuadNum& b) {
        return (a - b).sign() < 0;
    }
    friend bool operator<=(const QuadNum& a, const QuadNum& b) { return !(b < a); }
    friend bool operator>(const QuadNum& a, const QuadNum& b) { return b < a; }
    friend bool operator>=(const QuadNum& a, const QuadNum& b) { return !(a < b); }

    /// Canonical textual form, e.g. "3/2", "-7", "0+2*sqrt(3)", "1/2-1/3*sqrt(5)".
    std::string str() const;
    double to_double() const;

  private:
    Rational rat_;
    Rational irr_;
    long long radicand_;
};

/// Radicand shared by two values, or throws field_error.
long long common_radicand(const QuadNum& a, const QuadNum& b);

/// Exact square root of a nonnegative rational as a QuadNum with square-free
/// radicand.  Throws std::domain_error on negative input.
QuadNum normalize_sqrt(const Rational& q);

/// Square root of q inside Q(sqrt(d)) for the given square-free d, when it
/// exists there; nullopt otherwise.  The result is the nonnegative root.
std::optional<QuadNum> sqrt_in_field(const QuadNum& q, long long d);

/// Parses the whitespace-free grammar
///   INT | INT/INT | (INT|INT/INT)(+|-)(INT|INT/INT)*sqrt(INT)
/// Throws std::invalid_argument on malformed input.
QuadNum parse_quadnum(const std::string& text);
Rational parse_rational(const std::string& text);

/// Removes the largest square factor: q = s^2 * f with f square-free.
/// Returns {s, f}; q must be nonnegative.
std::pair<Int, Int> squarefree_decompose(const Int& q);

}  // namespace tritile
