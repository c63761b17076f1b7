#pragma once

#include <vector>

namespace kneser {

bool is_prime(int n);
bool is_odd_prime_power(int n);

// Arithmetic in GF(q) for prime powers q <= 32. Elements are encoded as
// 0..q-1, the base-p digit expansion of the coefficient vector of the
// residue polynomial. Built on full add/mul tables.
class GaloisField {
public:
    explicit GaloisField(int q);

    int q() const { return q_; }
    int characteristic() const { return p_; }

    int add(int a, int b) const { return add_[idx(a, b)]; }
    int mul(int a, int b) const { return mul_[idx(a, b)]; }
    int neg(int a) const { return neg_[static_cast<std::size_t>(a)]; }
    int sub(int a, int b) const { return add(a, neg(b)); }
    int inv(int a) const;

    bool is_square(int a) const { return square_[static_cast<std::size_t>(a)]; }

private:
    std::size_t idx(int a, int b) const {
        return static_cast<std::size_t>(a) * static_cast<std::size_t>(q_) +
               static_cast<std::size_t>(b);
    }

    int q_ = 0, p_ = 0, degree_ = 0;
    std::vector<int> add_, mul_, neg_, inv_;
    std::vector<bool> square_;
};

}  // namespace kneser
