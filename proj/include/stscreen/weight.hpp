#pragma once

#include <boost/rational.hpp>
#include <compare>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace stscreen {

using Rat = boost::rational<long long>;

// Integral weight in fundamental-weight coordinates: coords[i] = <lambda, alpha_i^vee>.
struct Weight {
    std::vector<int> coords;

    Weight() = default;
    explicit Weight(std::vector<int> c) : coords(std::move(c)) {}
    Weight(std::initializer_list<int> c) : coords(c) {}

    int rank() const { return static_cast<int>(coords.size()); }
    int operator[](int i) const { return coords[static_cast<size_t>(i)]; }
    int& operator[](int i) { return coords[static_cast<size_t>(i)]; }

    bool is_dominant() const {
        for (int c : coords)
            if (c < 0) return false;
        return true;
    }

    bool is_zero() const {
        for (int c : coords)
            if (c != 0) return false;
        return true;
    }

    friend Weight operator+(const Weight& a, const Weight& b) {
        check_same_rank(a, b);
        Weight r = a;
        for (size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += b.coords[i];
        return r;
    }
    friend Weight operator-(const Weight& a, const Weight& b) {
        check_same_rank(a, b);
        Weight r = a;
        for (size_t i = 0; i < r.coords.size(); ++i) r.coords[i] -= b.coords[i];
        return r;
    }
    friend Weight operator*(int k, const Weight& a) {
        Weight r = a;
        for (auto& c : r.coords) c *= k;
        return r;
    }
    Weight operator-() const { return -1 * *this; }

    friend bool operator==(const Weight& a, const Weight& b) = default;
    // Lexicographic order; used for map keys and deterministic output.
    friend auto operator<=>(const Weight& a, const Weight& b) { return a.coords <=> b.coords; }

    std::string str() const {
        std::ostringstream os;
        os << '(';
        for (size_t i = 0; i < coords.size(); ++i) {
            if (i) os << ',';
            os << coords[i];
        }
        os << ')';
        return os.str();
    }

private:
    static void check_same_rank(const Weight& a, const Weight& b) {
        if (a.coords.size() != b.coords.size())
            throw std::invalid_argument("weight rank mismatch");
    }
};

inline std::ostream& operator<<(std::ostream& os, const Weight& w) { return os << w.str(); }

// Lattice vector expressed in the simple-root basis with exact rational coefficients.
struct RootVector {
    std::vector<Rat> coeffs;

    RootVector() = default;
    explicit RootVector(std::vector<Rat> c) : coeffs(std::move(c)) {}

    int rank() const { return static_cast<int>(coeffs.size()); }

    bool is_integral() const {
        for (const auto& q : coeffs)
            if (q.denominator() != 1) return false;
        return true;
    }
    bool is_nonnegative() const {
        for (const auto& q : coeffs)
            if (q < 0) return false;
        return true;
    }

    friend bool operator==(const RootVector& a, const RootVector& b) = default;
};

struct WeightHash {
    size_t operator()(const Weight& w) const {
        size_t h = 1469598103934665603ull;
        for (int c : w.coords) {
            h ^= static_cast<size_t>(static_cast<uint32_t>(c));
            h *= 1099511628211ull;
        }
        return h;
    }
};

// Parses "a,b,c" or "(a,b,c)" into a Weight.
inline Weight parse_weight(const std::string& text) {
    std::string s = text;
    if (!s.empty() && s.front() == '(') s.erase(s.begin());
    if (!s.empty() && s.back() == ')') s.pop_back();
    std::vector<int> coords;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        if (tok.empty()) throw std::invalid_argument("bad weight string: " + text);
        coords.push_back(std::stoi(tok));
    }
    if (coords.empty()) throw std::invalid_argument("bad weight string: " + text);
    return Weight(std::move(coords));
}

} // namespace stscreen
