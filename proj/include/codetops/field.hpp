#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "codetops/errors.hpp"

namespace codetops {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// A finite field GF(p^m) with explicit polynomial-basis representation.
///
/// Elements are carried around as canonical integer values in [0, q):
/// the element with coefficient vector (c_0, ..., c_{m-1}) against the
/// polynomial basis {1, x, ..., x^{m-1}} is encoded as sum c_i * p^i.
/// Under this encoding 0 encodes the zero element, 1 the identity, and
/// integer order on values is the canonical element order (for GF(4):
/// 0, 1, x, x+1).  For m = 1 the value is just the residue mod p.
///
/// For small fields (q <= 256) full operation tables are precomputed at
/// construction; larger fields fall back to direct modular / polynomial
/// arithmetic.
class Field {
public:
    /// Constructs GF(p^m).  The modulus is a monic degree-m polynomial
    /// over GF(p), listed as m+1 coefficients c_0, ..., c_m (c_m = 1).
    /// When omitted and m > 1, a built-in modulus is used for
    /// q in {4, 8, 9, 16, 25, 27, 32, 49, 64, 81}.
    ///
    /// Throws NonPrimeError, ReducibleModulusError, NoBuiltinModulusError.
    static FieldPtr make(uint64_t p, uint32_t m = 1,
                         std::optional<std::vector<uint32_t>> modulus = std::nullopt);

    /// GF(q) for any prime power q, factoring q = p^m itself.
    /// Throws NonPrimeError when q is not a prime power.
    static FieldPtr from_order(uint64_t q);

    uint64_t p() const { return p_; }
    uint32_t m() const { return m_; }
    uint64_t q() const { return q_; }

    /// Modulus coefficients c_0..c_m; empty for prime fields.
    const std::vector<uint32_t>& modulus() const { return modulus_; }

    uint32_t add(uint32_t a, uint32_t b) const;
    uint32_t sub(uint32_t a, uint32_t b) const;
    uint32_t mul(uint32_t a, uint32_t b) const;
    uint32_t neg(uint32_t a) const;

    /// Multiplicative inverse.  Throws DivisionByZeroError on 0.
    uint32_t inv(uint32_t a) const;

    /// a / b.  Throws DivisionByZeroError when b = 0.
    uint32_t div(uint32_t a, uint32_t b) const;

    /// a^e for a non-negative integer exponent (0^0 = 1).
    uint32_t pow(uint32_t a, uint64_t e) const;

    /// The field automorphism a |-> a^(p^e).  e is reduced mod m, so any
    /// non-negative power is accepted; e = 0 (and every e for prime
    /// fields) is the identity.
    uint32_t frobenius(uint32_t a, uint32_t e) const;

    /// All q elements in canonical order: 0, 1, then ascending values.
    std::vector<uint32_t> elements() const;

    /// Coefficient vector (c_0, ..., c_{m-1}) of an element value.
    std::vector<uint32_t> digits(uint32_t a) const;
    uint32_t from_digits(const std::vector<uint32_t>& c) const;

    /// Text form used in matrix files: a plain residue for prime fields,
    /// a base-p numeral of the canonical value (most significant digit
    /// first) for extension fields.  Extension-field text requires
    /// p <= 10 so that single characters are digits.
    std::string format(uint32_t a) const;

    /// Parses the format() syntax; std::nullopt on malformed/out-of-range.
    std::optional<uint32_t> parse_element(std::string_view text) const;

    std::string describe() const;  // e.g. "GF(9)"

    bool operator==(const Field& other) const {
        return p_ == other.p_ && m_ == other.m_ && modulus_ == other.modulus_;
    }
    bool operator!=(const Field& other) const { return !(*this == other); }

private:
    Field(uint64_t p, uint32_t m, std::vector<uint32_t> modulus);

    uint32_t mul_raw(uint32_t a, uint32_t b) const;

    uint64_t p_;
    uint32_t m_;
    uint64_t q_;
    std::vector<uint32_t> modulus_;

    // Operation tables, built when q <= 256.
    bool tabled_ = false;
    std::vector<uint32_t> add_tab_;   // q*q
    std::vector<uint32_t> mul_tab_;   // q*q
    std::vector<uint32_t> inv_tab_;   // q (entry 0 unused)
    std::vector<uint32_t> frob_tab_;  // m*q
};

/// Throws FieldMismatchError unless both operands live in the same field.
void check_same_field(const Field& a, const Field& b);

}  // namespace codetops
