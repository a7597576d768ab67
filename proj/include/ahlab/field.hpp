#pragma once

#include <cassert>
#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "ahlab/arith.hpp"
#include "ahlab/errors.hpp"

namespace ahlab {

inline constexpr std::uint64_t kDefaultPrime = 2147483647ULL;  // 2^31 - 1

// Element of F_p for a word-size prime p. Canonical representative in [0, p),
// so equality is plain value comparison. 64-bit intermediates are enough
// because p < 2^32.
class Fp {
public:
    Fp() : v_(0), p_(kDefaultPrime) {}
    Fp(std::uint64_t v, std::uint64_t p) : v_(v % p), p_(p) {}

    static Fp from_integer(const BigInt& z, std::uint64_t p) {
        BigInt r = z % BigInt(p);
        if (r < 0) r += p;
        return Fp(static_cast<std::uint64_t>(r), p);
    }

    std::uint64_t value() const { return v_; }
    std::uint64_t modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }

    friend Fp operator+(Fp a, Fp b) {
        assert(a.p_ == b.p_);
        std::uint64_t s = a.v_ + b.v_;
        if (s >= a.p_) s -= a.p_;
        return Fp::raw(s, a.p_);
    }
    friend Fp operator-(Fp a, Fp b) {
        assert(a.p_ == b.p_);
        std::uint64_t s = a.v_ + a.p_ - b.v_;
        if (s >= a.p_) s -= a.p_;
        return Fp::raw(s, a.p_);
    }
    friend Fp operator*(Fp a, Fp b) {
        assert(a.p_ == b.p_);
        return Fp::raw((a.v_ * b.v_) % a.p_, a.p_);
    }
    Fp operator-() const { return Fp::raw(v_ == 0 ? 0 : p_ - v_, p_); }

    Fp inv() const {
        if (v_ == 0) throw DivisionByZero();
        return pow(p_ - 2);
    }
    friend Fp operator/(Fp a, Fp b) { return a * b.inv(); }

    Fp pow(std::uint64_t e) const {
        Fp base = *this, out = Fp::raw(1, p_);
        while (e) {
            if (e & 1) out = out * base;
            base = base * base;
            e >>= 1;
        }
        return out;
    }

    friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_ && a.p_ == b.p_; }
    friend bool operator!=(Fp a, Fp b) { return !(a == b); }

private:
    static Fp raw(std::uint64_t v, std::uint64_t p) {
        Fp f;
        f.v_ = v;
        f.p_ = p;
        return f;
    }
    std::uint64_t v_;
    std::uint64_t p_;
};

// Exact rational scalar, canonical reduced form handled by boost.
using Rat = boost::multiprecision::cpp_rational;

inline bool is_zero(const Fp& x) { return x.is_zero(); }
inline bool is_zero(const Rat& x) { return x == 0; }

// Which exact field a computation runs over.
struct FieldSpec {
    enum class Mode { Prime, Rational };
    Mode mode = Mode::Prime;
    std::uint64_t prime = kDefaultPrime;

    static FieldSpec prime_field(std::uint64_t p = kDefaultPrime) {
        return FieldSpec{Mode::Prime, p};
    }
    static FieldSpec rational() { return FieldSpec{Mode::Rational, 0}; }

    bool is_prime() const { return mode == Mode::Prime; }
    std::string describe() const {
        return is_prime() ? "p=" + std::to_string(prime) : "rational";
    }
    friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
        return a.mode == b.mode && (a.mode == Mode::Rational || a.prime == b.prime);
    }
};

}  // namespace ahlab
