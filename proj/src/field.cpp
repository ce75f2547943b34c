#include "codetops/field.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace codetops {

namespace {

bool is_prime(uint64_t p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (uint64_t d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

// Polynomials over GF(p) as little-endian coefficient vectors.
// Trailing zero coefficients are allowed; deg() ignores them.

int poly_deg(const std::vector<uint32_t>& f) {
    for (size_t i = f.size(); i-- > 0;)
        if (f[i] != 0) return static_cast<int>(i);
    return -1;
}

uint64_t mod_inv_prime(uint64_t a, uint64_t p) {
    // Fermat: a^(p-2) mod p.
    uint64_t r = 1, b = a % p, e = p - 2;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

// Remainder of f by a monic-leading divisor g (g need not be literally
// monic; its leading coefficient is inverted mod p).
std::vector<uint32_t> poly_mod(std::vector<uint32_t> f,
                               const std::vector<uint32_t>& g, uint64_t p) {
    int dg = poly_deg(g);
    uint64_t lead_inv = mod_inv_prime(g[static_cast<size_t>(dg)], p);
    for (int i = poly_deg(f); i >= dg; i = poly_deg(f)) {
        uint64_t c = f[static_cast<size_t>(i)] * lead_inv % p;
        for (int j = 0; j <= dg; ++j) {
            uint64_t sub = c * g[static_cast<size_t>(j)] % p;
            uint64_t cur = f[static_cast<size_t>(i - dg + j)];
            f[static_cast<size_t>(i - dg + j)] =
                static_cast<uint32_t>((cur + p - sub) % p);
        }
    }
    return f;
}

// Trial division by every monic polynomial of degree 1..m/2.
bool is_irreducible(const std::vector<uint32_t>& f, uint64_t p, uint32_t m) {
    for (uint32_t d = 1; 2 * d <= m; ++d) {
        // Enumerate monic divisor candidates of degree d.
        std::vector<uint32_t> g(d + 1, 0);
        g[d] = 1;
        uint64_t count = 1;
        for (uint32_t i = 0; i < d; ++i) count *= p;
        for (uint64_t code = 0; code < count; ++code) {
            uint64_t c = code;
            for (uint32_t i = 0; i < d; ++i) {
                g[i] = static_cast<uint32_t>(c % p);
                c /= p;
            }
            if (poly_deg(poly_mod(f, g, p)) < 0) return false;
        }
    }
    return true;
}

const std::map<uint64_t, std::vector<uint32_t>>& builtin_moduli() {
    // Monic irreducible polynomials, little-endian c_0..c_m.
    static const std::map<uint64_t, std::vector<uint32_t>> table = {
        {4, {1, 1, 1}},             // x^2 + x + 1
        {8, {1, 1, 0, 1}},          // x^3 + x + 1
        {9, {2, 2, 1}},             // x^2 + 2x + 2
        {16, {1, 1, 0, 0, 1}},      // x^4 + x + 1
        {25, {2, 4, 1}},            // x^2 + 4x + 2
        {27, {1, 2, 0, 1}},         // x^3 + 2x + 1
        {32, {1, 0, 1, 0, 0, 1}},   // x^5 + x^2 + 1
        {49, {3, 6, 1}},            // x^2 + 6x + 3
        {64, {1, 1, 0, 1, 1, 0, 1}},// x^6 + x^4 + x^3 + x + 1
        {81, {2, 0, 0, 2, 1}},      // x^4 + 2x^3 + 2
    };
    return table;
}

constexpr uint64_t kTableLimit = 256;
constexpr uint64_t kExtensionLimit = 1u << 20;

}  // namespace

FieldPtr Field::from_order(uint64_t q) {
    if (q < 2) throw NonPrimeError(q);
    uint64_t p = q;
    for (uint64_t d = 2; d * d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    uint32_t m = 0;
    uint64_t rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++m;
    }
    if (rest != 1) throw NonPrimeError(q);
    return make(p, m);
}

FieldPtr Field::make(uint64_t p, uint32_t m,
                     std::optional<std::vector<uint32_t>> modulus) {
    if (!is_prime(p)) throw NonPrimeError(p);
    if (m == 0) throw std::invalid_argument("m must be >= 1");
    if (m == 1) {
        if (p > (uint64_t{1} << 31))
            throw std::invalid_argument("prime field too large");
        if (modulus && !modulus->empty())
            throw std::invalid_argument("prime fields take no modulus");
        return FieldPtr(new Field(p, 1, {}));
    }

    uint64_t q = 1;
    for (uint32_t i = 0; i < m; ++i) {
        q *= p;
        if (q > kExtensionLimit)
            throw std::invalid_argument("extension field too large");
    }

    std::vector<uint32_t> mod;
    if (modulus && !modulus->empty()) {
        mod = *modulus;
        if (mod.size() != m + 1)
            throw std::invalid_argument("modulus needs m+1 coefficients");
        for (uint32_t c : mod)
            if (c >= p) throw std::invalid_argument("modulus coefficient out of range");
        if (mod[m] != 1)
            throw std::invalid_argument("modulus must be monic");
        if (!is_irreducible(mod, p, m))
            throw ReducibleModulusError("modulus is reducible over GF(" +
                                        std::to_string(p) + ")");
    } else {
        auto it = builtin_moduli().find(q);
        if (it == builtin_moduli().end()) throw NoBuiltinModulusError(q);
        mod = it->second;
    }
    return FieldPtr(new Field(p, m, std::move(mod)));
}

Field::Field(uint64_t p, uint32_t m, std::vector<uint32_t> modulus)
    : p_(p), m_(m), modulus_(std::move(modulus)) {
    q_ = 1;
    for (uint32_t i = 0; i < m_; ++i) q_ *= p_;

    if (q_ <= kTableLimit) {
        tabled_ = true;
        add_tab_.resize(q_ * q_);
        mul_tab_.resize(q_ * q_);
        inv_tab_.assign(q_, 0);
        for (uint32_t a = 0; a < q_; ++a) {
            for (uint32_t b = 0; b < q_; ++b) {
                uint32_t s;
                if (m_ == 1) {
                    s = static_cast<uint32_t>((uint64_t{a} + b) % p_);
                } else {
                    uint32_t r = 0, pw = 1, x = a, y = b;
                    for (uint32_t i = 0; i < m_; ++i) {
                        uint32_t da = x % p_, db = y % p_;
                        x /= p_;
                        y /= p_;
                        r += ((da + db) % p_) * pw;
                        pw *= p_;
                    }
                    s = r;
                }
                add_tab_[a * q_ + b] = s;
                uint32_t prod = mul_raw(a, b);
                mul_tab_[a * q_ + b] = prod;
                if (prod == 1) inv_tab_[a] = b;
            }
        }
        frob_tab_.resize(size_t{m_} * q_);
        for (uint32_t a = 0; a < q_; ++a) frob_tab_[a] = a;
        for (uint32_t e = 1; e < m_; ++e)
            for (uint32_t a = 0; a < q_; ++a) {
                uint32_t prev = frob_tab_[size_t{e - 1} * q_ + a];
                uint32_t acc = 1, base = prev;
                uint64_t exp = p_;
                while (exp) {
                    if (exp & 1) acc = mul_tab_[size_t{acc} * q_ + base];
                    base = mul_tab_[size_t{base} * q_ + base];
                    exp >>= 1;
                }
                frob_tab_[size_t{e} * q_ + a] = acc;
            }
    }
}

uint32_t Field::add(uint32_t a, uint32_t b) const {
    if (tabled_) return add_tab_[size_t{a} * q_ + b];
    if (m_ == 1) return static_cast<uint32_t>((uint64_t{a} + b) % p_);
    uint32_t r = 0, pw = 1;
    for (uint32_t i = 0; i < m_; ++i) {
        uint32_t da = a % p_, db = b % p_;
        a /= static_cast<uint32_t>(p_);
        b /= static_cast<uint32_t>(p_);
        r += ((da + db) % p_) * pw;
        pw *= static_cast<uint32_t>(p_);
    }
    return r;
}

uint32_t Field::neg(uint32_t a) const {
    if (m_ == 1) return a == 0 ? 0 : static_cast<uint32_t>(p_ - a);
    uint32_t r = 0, pw = 1;
    for (uint32_t i = 0; i < m_; ++i) {
        uint32_t d = a % p_;
        a /= static_cast<uint32_t>(p_);
        r += (d == 0 ? 0 : static_cast<uint32_t>(p_ - d)) * pw;
        pw *= static_cast<uint32_t>(p_);
    }
    return r;
}

uint32_t Field::sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }

uint32_t Field::mul_raw(uint32_t a, uint32_t b) const {
    if (m_ == 1) return static_cast<uint32_t>(uint64_t{a} * b % p_);
    // Schoolbook polynomial product, then reduction by the modulus.
    std::vector<uint32_t> da = digits(a), db = digits(b);
    std::vector<uint32_t> prod(2 * m_ - 1, 0);
    for (uint32_t i = 0; i < m_; ++i) {
        if (da[i] == 0) continue;
        for (uint32_t j = 0; j < m_; ++j)
            prod[i + j] = static_cast<uint32_t>(
                (prod[i + j] + uint64_t{da[i]} * db[j]) % p_);
    }
    std::vector<uint32_t> rem = poly_mod(std::move(prod), modulus_, p_);
    rem.resize(m_, 0);
    return from_digits(rem);
}

uint32_t Field::mul(uint32_t a, uint32_t b) const {
    if (tabled_) return mul_tab_[size_t{a} * q_ + b];
    return mul_raw(a, b);
}

uint32_t Field::inv(uint32_t a) const {
    if (a == 0) throw DivisionByZeroError();
    if (tabled_) return inv_tab_[a];
    return pow(a, q_ - 2);
}

uint32_t Field::div(uint32_t a, uint32_t b) const { return mul(a, inv(b)); }

uint32_t Field::pow(uint32_t a, uint64_t e) const {
    uint32_t r = 1, base = a;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

uint32_t Field::frobenius(uint32_t a, uint32_t e) const {
    e %= m_;
    if (e == 0) return a;
    if (tabled_) return frob_tab_[size_t{e} * q_ + a];
    uint64_t exp = 1;
    for (uint32_t i = 0; i < e; ++i) exp *= p_;
    return pow(a, exp);
}

std::vector<uint32_t> Field::elements() const {
    std::vector<uint32_t> out(q_);
    std::iota(out.begin(), out.end(), 0u);
    return out;
}

std::vector<uint32_t> Field::digits(uint32_t a) const {
    std::vector<uint32_t> c(m_);
    for (uint32_t i = 0; i < m_; ++i) {
        c[i] = a % static_cast<uint32_t>(p_);
        a /= static_cast<uint32_t>(p_);
    }
    return c;
}

uint32_t Field::from_digits(const std::vector<uint32_t>& c) const {
    uint32_t v = 0, pw = 1;
    for (uint32_t i = 0; i < m_ && i < c.size(); ++i) {
        v += c[i] * pw;
        pw *= static_cast<uint32_t>(p_);
    }
    return v;
}

std::string Field::format(uint32_t a) const {
    if (m_ == 1) return std::to_string(a);
    if (p_ > 10)
        throw std::invalid_argument(
            "text form of extension-field elements needs p <= 10");
    // Base-p numeral, most significant digit first, no leading zeros.
    std::string s;
    uint32_t v = a;
    do {
        s.push_back(static_cast<char>('0' + v % p_));
        v /= static_cast<uint32_t>(p_);
    } while (v);
    std::reverse(s.begin(), s.end());
    return s;
}

std::optional<uint32_t> Field::parse_element(std::string_view text) const {
    if (text.empty()) return std::nullopt;
    if (m_ == 1) {
        if (text.size() > 10) return std::nullopt;
        uint64_t v = 0;
        for (char ch : text) {
            if (ch < '0' || ch > '9') return std::nullopt;
            v = v * 10 + static_cast<uint64_t>(ch - '0');
        }
        if (v >= p_) return std::nullopt;
        return static_cast<uint32_t>(v);
    }
    if (p_ > 10 || text.size() > m_) return std::nullopt;
    uint64_t v = 0;
    for (char ch : text) {
        if (ch < '0' || ch >= static_cast<char>('0' + p_)) return std::nullopt;
        v = v * p_ + static_cast<uint64_t>(ch - '0');
    }
    return static_cast<uint32_t>(v);
}

std::string Field::describe() const { return "GF(" + std::to_string(q_) + ")"; }

void check_same_field(const Field& a, const Field& b) {
    if (!(a == b)) throw FieldMismatchError();
}

}  // namespace codetops
