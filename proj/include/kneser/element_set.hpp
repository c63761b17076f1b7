#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "kneser/error.hpp"
#include "kneser/params.hpp"

namespace kneser {

// Subset of the ground set [v] = {1..v}, v <= 64. Bit x-1 holds element x.
// Immutable in spirit: operations return new sets; the two mutators exist
// for construction loops only.
class ElementSet {
public:
    ElementSet() = default;

    explicit ElementSet(int ground) : ground_(ground) {
        require(ground >= 0 && ground <= kMaxGroundSet, "ground set size out of range");
    }

    static ElementSet of(std::initializer_list<int> xs, int ground) {
        ElementSet s(ground);
        for (int x : xs) {
            require(!s.contains(x), "duplicate element");
            s.insert(x);
        }
        return s;
    }

    static ElementSet from_elements(const std::vector<int>& xs, int ground) {
        ElementSet s(ground);
        for (int x : xs) {
            require(!s.contains(x), "duplicate element");
            s.insert(x);
        }
        return s;
    }

    static ElementSet full(int ground) {
        ElementSet s(ground);
        s.bits_ = ground == 64 ? ~0ull : ((1ull << ground) - 1);
        return s;
    }

    // Comma-separated ascending integers; empty string or "-" is the empty set.
    static ElementSet parse(std::string_view text, int ground);

    int ground() const { return ground_; }
    int size() const { return std::popcount(bits_); }
    bool empty() const { return bits_ == 0; }

    bool contains(int x) const {
        return x >= 1 && x <= ground_ && ((bits_ >> (x - 1)) & 1ull) != 0;
    }

    void insert(int x) {
        check_element(x);
        bits_ |= 1ull << (x - 1);
    }

    void erase(int x) {
        check_element(x);
        bits_ &= ~(1ull << (x - 1));
    }

    ElementSet with(int x) const {
        ElementSet s = *this;
        s.insert(x);
        return s;
    }

    ElementSet without(int x) const {
        ElementSet s = *this;
        s.erase(x);
        return s;
    }

    ElementSet complement() const {
        ElementSet s(ground_);
        s.bits_ = full(ground_).bits_ & ~bits_;
        return s;
    }

    bool subset_of(const ElementSet& o) const {
        return ground_ == o.ground_ && (bits_ & ~o.bits_) == 0;
    }

    ElementSet operator|(const ElementSet& o) const {
        check_same_ground(o);
        ElementSet s(ground_);
        s.bits_ = bits_ | o.bits_;
        return s;
    }

    ElementSet operator&(const ElementSet& o) const {
        check_same_ground(o);
        ElementSet s(ground_);
        s.bits_ = bits_ & o.bits_;
        return s;
    }

    ElementSet operator-(const ElementSet& o) const {
        check_same_ground(o);
        ElementSet s(ground_);
        s.bits_ = bits_ & ~o.bits_;
        return s;
    }

    std::vector<int> elements() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        std::uint64_t b = bits_;
        while (b) {
            out.push_back(std::countr_zero(b) + 1);
            b &= b - 1;
        }
        return out;
    }

    long long sum() const {
        long long s = 0;
        std::uint64_t b = bits_;
        while (b) {
            s += std::countr_zero(b) + 1;
            b &= b - 1;
        }
        return s;
    }

    std::uint64_t bits() const { return bits_; }

    bool operator==(const ElementSet&) const = default;

    std::string to_string() const;

private:
    void check_element(int x) const {
        require(x >= 1 && x <= ground_, "element outside the ground set");
    }
    void check_same_ground(const ElementSet& o) const {
        require(ground_ == o.ground_, "ground set mismatch");
    }

    std::uint64_t bits_ = 0;
    int ground_ = 0;
};

}  // namespace kneser
