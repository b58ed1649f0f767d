#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "weylchar/bigint.hpp"

namespace weylchar {

// A weight in fundamental-weight coordinates: coords[i] = m_{alpha_i}(lambda).
struct Weight {
    std::vector<Coord> coords;

    Weight() = default;
    explicit Weight(std::vector<Coord> c) : coords(std::move(c)) {}
    static Weight zero(int rank) { return Weight(std::vector<Coord>(rank, 0)); }

    int rank() const { return static_cast<int>(coords.size()); }
    Coord operator[](int i) const { return coords[static_cast<std::size_t>(i)]; }
    Coord& operator[](int i) { return coords[static_cast<std::size_t>(i)]; }

    bool is_zero() const {
        for (Coord c : coords)
            if (c != 0) return false;
        return true;
    }
    bool dominant() const {
        for (Coord c : coords)
            if (c < 0) return false;
        return true;
    }
    bool regular() const {
        for (Coord c : coords)
            if (c == 0) return false;
        return true;
    }

    bool operator==(const Weight& o) const { return coords == o.coords; }
    bool operator!=(const Weight& o) const { return !(*this == o); }
    // Plain lexicographic order, used for enumeration and map keys.
    bool operator<(const Weight& o) const { return coords < o.coords; }

    Weight operator+(const Weight& o) const {
        Weight r = *this;
        for (std::size_t i = 0; i < coords.size(); ++i) r.coords[i] += o.coords[i];
        return r;
    }
    Weight operator-(const Weight& o) const {
        Weight r = *this;
        for (std::size_t i = 0; i < coords.size(); ++i) r.coords[i] -= o.coords[i];
        return r;
    }
    Weight operator-() const {
        Weight r = *this;
        for (auto& c : r.coords) c = -c;
        return r;
    }
    Weight operator*(Coord d) const {
        Weight r = *this;
        for (auto& c : r.coords) c *= d;
        return r;
    }

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < coords.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(coords[i]);
        }
        return s + ")";
    }
};

// mu divides lambda if every coordinate of mu divides the matching one of lambda.
inline bool weight_divides(const Weight& mu, const Weight& lambda) {
    for (int i = 0; i < mu.rank(); ++i) {
        if (mu[i] == 0) {
            if (lambda[i] != 0) return false;
        } else if (lambda[i] % mu[i] != 0) {
            return false;
        }
    }
    return true;
}

inline Coord coord_gcd(const Weight& w) {
    Coord g = 0;
    for (Coord c : w.coords) g = ll_gcd(g, c);
    return g;
}

struct WeightHash {
    std::size_t operator()(const std::vector<Coord>& v) const {
        std::size_t h = 0x9e3779b97f4a7c15ull;
        for (Coord c : v) {
            std::size_t x = static_cast<std::size_t>(c);
            x *= 0xbf58476d1ce4e5b9ull;
            x ^= x >> 31;
            h = (h ^ x) * 0x94d049bb133111ebull;
        }
        return h;
    }
};

}  // namespace weylchar
