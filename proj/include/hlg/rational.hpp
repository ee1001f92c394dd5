#pragma once

#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "hlg/errors.hpp"

namespace hlg {

using Rat = boost::rational<std::int64_t>;

inline std::string to_string(const Rat& r) {
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

/// Short form: "3", "-1/2".
inline std::string to_short_string(const Rat& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return to_string(r);
}

inline Rat parse_rational(const std::string& s) {
    try {
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rat(std::stoll(s));
        std::int64_t den = std::stoll(s.substr(slash + 1));
        if (den == 0) throw DomainError("zero denominator in '" + s + "'");
        return Rat(std::stoll(s.substr(0, slash)), den);
    } catch (const std::logic_error&) {
        throw DomainError("malformed rational '" + s + "'");
    }
}

inline bool is_integer(const Rat& r) { return r.denominator() == 1; }

inline std::int64_t floor_rat(const Rat& r) {
    std::int64_t q = r.numerator() / r.denominator();
    if (r.numerator() < 0 && q * r.denominator() != r.numerator()) --q;
    return q;
}

inline int sign(const Rat& r) { return r.numerator() > 0 ? 1 : (r.numerator() < 0 ? -1 : 0); }

/// Exact rational vector in ε-coordinates.
class RootVec {
public:
    RootVec() = default;
    explicit RootVec(std::size_t dim) : c_(dim, Rat(0)) {}
    explicit RootVec(std::vector<Rat> coords) : c_(std::move(coords)) {}
    RootVec(std::initializer_list<Rat> coords) : c_(coords) {}

    static RootVec from_ints(const std::vector<std::int64_t>& v) {
        RootVec r(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) r.c_[i] = Rat(v[i]);
        return r;
    }

    std::size_t size() const { return c_.size(); }
    const Rat& operator[](std::size_t i) const { return c_[i]; }
    Rat& operator[](std::size_t i) { return c_[i]; }
    const std::vector<Rat>& coords() const { return c_; }

    bool is_zero() const {
        for (const auto& x : c_)
            if (x.numerator() != 0) return false;
        return true;
    }

    RootVec& operator+=(const RootVec& o) {
        check_dim(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    RootVec& operator-=(const RootVec& o) {
        check_dim(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }
    RootVec& operator*=(const Rat& s) {
        for (auto& x : c_) x *= s;
        return *this;
    }

    friend RootVec operator+(RootVec a, const RootVec& b) { return a += b; }
    friend RootVec operator-(RootVec a, const RootVec& b) { return a -= b; }
    friend RootVec operator*(const Rat& s, RootVec a) { return a *= s; }
    friend RootVec operator*(RootVec a, const Rat& s) { return a *= s; }
    RootVec operator-() const {
        RootVec r(*this);
        for (auto& x : r.c_) x = -x;
        return r;
    }

    friend bool operator==(const RootVec& a, const RootVec& b) { return a.c_ == b.c_; }
    friend bool operator!=(const RootVec& a, const RootVec& b) { return !(a == b); }
    friend bool operator<(const RootVec& a, const RootVec& b) {
        if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] < b.c_[i]) return true;
            if (b.c_[i] < a.c_[i]) return false;
        }
        return false;
    }

    /// "(1, 1/2, 0)"
    std::string str() const {
        std::ostringstream os;
        os << '(';
        for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? ", " : "") << to_short_string(c_[i]);
        os << ')';
        return os.str();
    }

    std::vector<std::string> to_strings() const {
        std::vector<std::string> out;
        for (const auto& x : c_) out.push_back(to_string(x));
        return out;
    }
    static RootVec from_strings(const std::vector<std::string>& s) {
        RootVec r(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) r.c_[i] = parse_rational(s[i]);
        return r;
    }

    void check_dim(const RootVec& o) const {
        if (o.size() != size())
            throw DomainError("dimension mismatch: " + std::to_string(size()) + " vs " +
                              std::to_string(o.size()));
    }

private:
    std::vector<Rat> c_;
};

inline std::ostream& operator<<(std::ostream& os, const RootVec& v) { return os << v.str(); }

/// Euclidean pairing in ε-coordinates.
inline Rat dot(const RootVec& a, const RootVec& b) {
    a.check_dim(b);
    Rat s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace hlg
