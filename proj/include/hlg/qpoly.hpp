#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hlg/errors.hpp"

namespace hlg {

/// Polynomial in one variable with integer coefficients, ascending powers, no trailing zeros.
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(std::vector<std::int64_t> coeffs) : c_(std::move(coeffs)) { normalize(); }
    static QPoly constant(std::int64_t c) { return QPoly(std::vector<std::int64_t>{c}); }
    static QPoly monomial(int degree, std::int64_t c = 1) {
        std::vector<std::int64_t> v(static_cast<std::size_t>(degree) + 1, 0);
        v.back() = c;
        return QPoly(std::move(v));
    }
    /// q^t (q − 1)^r
    static QPoly cell(int t, int r) {
        QPoly p = monomial(t);
        const QPoly qm1(std::vector<std::int64_t>{-1, 1});
        for (int k = 0; k < r; ++k) p *= qm1;
        return p;
    }

    const std::vector<std::int64_t>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    std::int64_t coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(k)] : 0;
    }
    std::int64_t leading() const {
        if (is_zero()) throw DomainError("leading coefficient of the zero polynomial");
        return c_.back();
    }

    std::int64_t eval(std::int64_t x) const {
        std::int64_t s = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) s = s * x + *it;
        return s;
    }

    QPoly& operator+=(const QPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        normalize();
        return *this;
    }
    QPoly& operator-=(const QPoly& o) { return *this += -o; }
    QPoly operator-() const {
        QPoly r(*this);
        for (auto& x : r.c_) x = -x;
        return r;
    }
    QPoly& operator*=(const QPoly& o) {
        if (is_zero() || o.is_zero()) {
            c_.clear();
            return *this;
        }
        std::vector<std::int64_t> r(c_.size() + o.c_.size() - 1, 0);
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
        c_ = std::move(r);
        normalize();
        return *this;
    }
    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
    friend QPoly operator*(QPoly a, const QPoly& b) { return a *= b; }
    friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const QPoly& a, const QPoly& b) { return !(a == b); }

    /// Exact division; throws if the divisor does not divide.
    QPoly exact_div(const QPoly& d) const {
        if (d.is_zero()) throw ConsistencyError("division by the zero polynomial");
        if (is_zero()) return {};
        std::vector<std::int64_t> rem = c_;
        const int dd = d.degree();
        if (degree() < dd) throw ConsistencyError("inexact polynomial division");
        std::vector<std::int64_t> quot(static_cast<std::size_t>(degree() - dd) + 1, 0);
        for (int k = degree() - dd; k >= 0; --k) {
            std::int64_t top = rem[static_cast<std::size_t>(k + dd)];
            if (top % d.leading() != 0) throw ConsistencyError("inexact polynomial division");
            std::int64_t f = top / d.leading();
            quot[static_cast<std::size_t>(k)] = f;
            for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k + j)] -= f * d.coeff(j);
        }
        for (auto x : rem)
            if (x != 0) throw ConsistencyError("inexact polynomial division");
        return QPoly(std::move(quot));
    }

    /// "2q^4 - 2q^3", "1", "0".
    std::string str(const std::string& var = "q") const {
        if (is_zero()) return "0";
        std::string out;
        for (int k = degree(); k >= 0; --k) {
            std::int64_t c = coeff(k);
            if (c == 0) continue;
            std::int64_t a = c < 0 ? -c : c;
            if (out.empty()) out += c < 0 ? "-" : "";
            else out += c < 0 ? " - " : " + ";
            if (a != 1 || k == 0) out += std::to_string(a);
            if (k >= 1) out += var;
            if (k >= 2) out += "^" + std::to_string(k);
        }
        return out;
    }

private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<std::int64_t> c_;
};

struct LeadingData {
    int degree = 0;
    std::int64_t coefficient = 0;
};

inline LeadingData leading_data(const QPoly& p) {
    if (p.is_zero()) throw DomainError("leading_data: zero polynomial");
    return {p.degree(), p.leading()};
}

}  // namespace hlg
