#ifndef INFSIMP_SCALAR_HPP
#define INFSIMP_SCALAR_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace infsimp {

/// Raised for malformed user input (bad keys, shapes, file contents).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when an operation needs field coefficients but got the integers.
class UnsupportedCoefficients : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Coefficient ring selector: the integers, the rationals, or Z/p.
struct Ring {
    enum class Kind { Int, Rat, ModP };
    Kind kind = Kind::Int;
    std::uint64_t p = 0;

    static Ring integers() { return {}; }
    static Ring rationals() { return {Kind::Rat, 0}; }
    static Ring mod(std::uint64_t prime);
    /// Parses "int", "rat" or "mod:p".
    static Ring parse(const std::string& text);

    bool is_field() const { return kind != Kind::Int; }
    std::string name() const;
    bool operator==(const Ring&) const = default;
};

bool is_prime(std::uint64_t p);

/// Exact ring element. Integer-ring values promote into any other ring when
/// combined with it, so literal signs can be written as Scalar(-1).
class Scalar {
public:
    Scalar() = default;
    Scalar(long v) : v_(v) {}  // NOLINT: implicit integer literal
    Scalar(long v, Ring r) : ring_(r), v_(v) { normalize(); }
    Scalar(const mpq_class& q, Ring r) : ring_(r), v_(q) { normalize(); }

    static Scalar parse(const std::string& text, Ring r);

    const Ring& ring() const { return ring_; }
    const mpq_class& value() const { return v_; }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }

    /// Multiplicative inverse; throws UnsupportedCoefficients over Z unless the value is a unit.
    Scalar inverse() const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// Decimal text: "n" for integers and residues, "a/b" for rationals.
    std::string str() const;

private:
    void normalize();
    static Ring join(const Ring& a, const Ring& b);

    Ring ring_{};
    mpq_class v_{0};
};

/// (-1)^e as an integer scalar.
inline Scalar sign_of(long e) { return Scalar((e % 2 == 0) ? 1 : -1); }
inline bool odd(long e) { return (e % 2) != 0; }

}  // namespace infsimp

#endif
