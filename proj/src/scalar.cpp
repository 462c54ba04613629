#include "infsimp/scalar.hpp"

#include <cctype>

namespace infsimp {

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

Ring Ring::mod(std::uint64_t prime) {
    if (!is_prime(prime)) throw InputError("modulus " + std::to_string(prime) + " is not prime");
    return {Kind::ModP, prime};
}

Ring Ring::parse(const std::string& text) {
    if (text == "int") return integers();
    if (text == "rat") return rationals();
    if (text.rfind("mod:", 0) == 0) {
        std::string digits = text.substr(4);
        if (digits.empty() || digits.size() > 18) throw InputError("bad modulus in '" + text + "'");
        for (char c : digits)
            if (!std::isdigit(static_cast<unsigned char>(c))) throw InputError("bad modulus in '" + text + "'");
        return mod(std::stoull(digits));
    }
    throw InputError("unknown coefficient ring '" + text + "' (expected int, rat or mod:p)");
}

std::string Ring::name() const {
    switch (kind) {
        case Kind::Int: return "int";
        case Kind::Rat: return "rat";
        case Kind::ModP: return "mod:" + std::to_string(p);
    }
    return "?";
}

Ring Scalar::join(const Ring& a, const Ring& b) {
    if (a == b) return a;
    if (a.kind == Ring::Kind::Int) return b;
    if (b.kind == Ring::Kind::Int) return a;
    throw std::logic_error("mixing scalars from " + a.name() + " and " + b.name());
}

void Scalar::normalize() {
    switch (ring_.kind) {
        case Ring::Kind::Int:
            if (v_.get_den() != 1) throw InputError("non-integral value in integer ring");
            break;
        case Ring::Kind::Rat:
            v_.canonicalize();
            break;
        case Ring::Kind::ModP: {
            mpz_class m(static_cast<unsigned long>(ring_.p));
            mpz_class num = v_.get_num();
            mpz_class den = v_.get_den();
            if (den != 1) {
                mpz_class inv;
                if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t()) == 0)
                    throw std::domain_error("denominator not invertible mod p");
                num *= inv;
            }
            mpz_class r;
            mpz_fdiv_r(r.get_mpz_t(), num.get_mpz_t(), m.get_mpz_t());
            v_ = mpq_class(r);
            break;
        }
    }
}

Scalar Scalar::parse(const std::string& text, Ring r) {
    if (text.empty()) throw InputError("empty coefficient");
    mpq_class q;
    try {
        if (q.set_str(text, 10) != 0) throw InputError("bad coefficient '" + text + "'");
    } catch (const std::invalid_argument&) {
        throw InputError("bad coefficient '" + text + "'");
    }
    if (q.get_den() == 0) throw InputError("zero denominator in '" + text + "'");
    q.canonicalize();
    if (r.kind == Ring::Kind::Int && q.get_den() != 1)
        throw InputError("coefficient '" + text + "' is not an integer");
    return Scalar(q, r);
}

Scalar Scalar::operator-() const {
    Scalar s = *this;
    s.v_ = -s.v_;
    s.normalize();
    return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    ring_ = join(ring_, o.ring_);
    v_ += o.v_;
    normalize();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    ring_ = join(ring_, o.ring_);
    v_ -= o.v_;
    normalize();
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    ring_ = join(ring_, o.ring_);
    v_ *= o.v_;
    normalize();
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    if (ring_.kind == Ring::Kind::Int) {
        if (v_ == 1 || v_ == -1) return *this;
        throw UnsupportedCoefficients("division requires field coefficients (use rat or mod:p)");
    }
    Scalar s = *this;
    s.v_ = 1 / s.v_;
    s.normalize();
    return s;
}

bool Scalar::operator==(const Scalar& o) const {
    if (ring_ == o.ring_) return v_ == o.v_;
    Ring r = join(ring_, o.ring_);
    return Scalar(v_, r).v_ == Scalar(o.v_, r).v_;
}

std::string Scalar::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_str();
}

}  // namespace infsimp
