#include "kneser/gf.hpp"

#include <array>

#include "kneser/error.hpp"

namespace kneser {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int f = 2; f * f <= n; ++f)
        if (n % f == 0) return false;
    return true;
}

namespace {

// Returns (p, e) with n = p^e, or p = 0 if n is not a prime power.
std::pair<int, int> prime_power_split(int n) {
    if (n < 2) return {0, 0};
    for (int p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        int e = 0, m = n;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        return m == 1 ? std::pair{p, e} : std::pair{0, 0};
    }
    return {n, 1};  // n itself is prime
}

// Monic irreducible polynomials over GF(p), low-degree coefficients first,
// for the prime powers <= 32 that need an extension field.
//   9  = 3^2 : x^2 + 1
//   25 = 5^2 : x^2 + 2
//   27 = 3^3 : x^3 + 2x + 1
//   16/32 (char 2) are never needed by the odd constructions but kept for
//   completeness: x^4 + x + 1 and x^5 + x^2 + 1.
std::vector<int> modulus_poly(int p, int e) {
    if (p == 3 && e == 2) return {1, 0, 1};
    if (p == 5 && e == 2) return {2, 0, 1};
    if (p == 3 && e == 3) return {1, 2, 0, 1};
    if (p == 2 && e == 2) return {1, 1, 1};
    if (p == 2 && e == 3) return {1, 1, 0, 1};
    if (p == 2 && e == 4) return {1, 1, 0, 0, 1};
    if (p == 2 && e == 5) return {1, 0, 1, 0, 0, 1};
    fail("GaloisField: no modulus polynomial for this prime power");
}

std::vector<int> digits_of(int value, int p, int e) {
    std::vector<int> out(static_cast<std::size_t>(e), 0);
    for (int i = 0; i < e; ++i) {
        out[static_cast<std::size_t>(i)] = value % p;
        value /= p;
    }
    return out;
}

int value_of(const std::vector<int>& digits, int p) {
    int value = 0;
    for (std::size_t i = digits.size(); i-- > 0;) value = value * p + digits[i];
    return value;
}

}  // namespace

bool is_odd_prime_power(int n) {
    return prime_power_split(n).first % 2 == 1;
}

GaloisField::GaloisField(int q) {
    require(q >= 2 && q <= 32, "GaloisField: q must be in 2..32");
    const auto [p, e] = prime_power_split(q);
    require(p != 0, "GaloisField: q must be a prime power");
    q_ = q;
    p_ = p;
    degree_ = e;

    add_.assign(static_cast<std::size_t>(q) * q, 0);
    mul_.assign(static_cast<std::size_t>(q) * q, 0);
    neg_.assign(static_cast<std::size_t>(q), 0);
    inv_.assign(static_cast<std::size_t>(q), 0);
    square_.assign(static_cast<std::size_t>(q), false);

    const std::vector<int> mod = e > 1 ? modulus_poly(p, e) : std::vector<int>{};

    for (int a = 0; a < q; ++a) {
        const std::vector<int> da = digits_of(a, p, e);
        for (int b = 0; b < q; ++b) {
            const std::vector<int> db = digits_of(b, p, e);

            std::vector<int> sum(static_cast<std::size_t>(e), 0);
            for (int i = 0; i < e; ++i)
                sum[static_cast<std::size_t>(i)] =
                    (da[static_cast<std::size_t>(i)] + db[static_cast<std::size_t>(i)]) % p;
            add_[idx(a, b)] = value_of(sum, p);

            std::vector<int> prod(static_cast<std::size_t>(2 * e - 1), 0);
            for (int i = 0; i < e; ++i)
                for (int j = 0; j < e; ++j)
                    prod[static_cast<std::size_t>(i + j)] =
                        (prod[static_cast<std::size_t>(i + j)] +
                         da[static_cast<std::size_t>(i)] * db[static_cast<std::size_t>(j)]) %
                        p;
            // Reduce by the monic modulus, highest degree first.
            for (int deg = 2 * e - 2; deg >= e; --deg) {
                const int coeff = prod[static_cast<std::size_t>(deg)];
                if (coeff == 0) continue;
                prod[static_cast<std::size_t>(deg)] = 0;
                for (int i = 0; i < e; ++i) {
                    auto& slot = prod[static_cast<std::size_t>(deg - e + i)];
                    slot = ((slot - coeff * mod[static_cast<std::size_t>(i)]) % p + p) % p;
                }
            }
            prod.resize(static_cast<std::size_t>(e));
            mul_[idx(a, b)] = value_of(prod, p);
        }
    }

    for (int a = 0; a < q; ++a) {
        for (int b = 0; b < q; ++b) {
            if (add_[idx(a, b)] == 0) neg_[static_cast<std::size_t>(a)] = b;
            if (mul_[idx(a, b)] == 1) inv_[static_cast<std::size_t>(a)] = b;
        }
        if (a != 0) square_[static_cast<std::size_t>(mul_[idx(a, a)])] = true;
    }
}

int GaloisField::inv(int a) const {
    require(a != 0, "GaloisField: zero has no inverse");
    return inv_[static_cast<std::size_t>(a)];
}

}  // namespace kneser
