#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "hlg/errors.hpp"
#include "hlg/rational.hpp"

namespace hlg {

/// The family letter names the coroot system, i.e. the Lie algebra whose weights are
/// the coweights of the apartment. Walls of the apartment come from the dual roots.
enum class Family { A, B, C };

inline char family_letter(Family f) { return f == Family::A ? 'A' : (f == Family::B ? 'B' : 'C'); }

struct RootSystemSpec {
    Family family = Family::A;
    int rank = 1;

    int ambient_dim() const { return family == Family::A ? rank + 1 : rank; }
    std::string name() const { return std::string(1, family_letter(family)) + std::to_string(rank); }

    /// Parses "A2", "b3", ...
    static RootSystemSpec parse(const std::string& s) {
        if (s.size() < 2) throw ConfigError("bad root system '" + s + "'");
        RootSystemSpec spec;
        switch (std::toupper(static_cast<unsigned char>(s[0]))) {
            case 'A': spec.family = Family::A; break;
            case 'B': spec.family = Family::B; break;
            case 'C': spec.family = Family::C; break;
            default: throw ConfigError("unsupported family in '" + s + "'");
        }
        try {
            std::size_t used = 0;
            spec.rank = std::stoi(s.substr(1), &used);
            if (used != s.size() - 1) throw ConfigError("bad rank in '" + s + "'");
        } catch (const std::logic_error&) {
            throw ConfigError("bad rank in '" + s + "'");
        }
        spec.check();
        return spec;
    }

    void check() const {
        if (rank < 1) throw ConfigError("rank must be >= 1");
        if ((family == Family::A && rank > 5) || (family != Family::A && rank > 4))
            throw ConfigError("rank too large for " + name() + " (supported: A<=5, B/C<=4)");
    }
};

using WeylIndex = std::uint32_t;

/// Signed permutation: (w v)[perm[i]] = sign[i] * v[i].
struct WeylElement {
    std::vector<int> perm;
    std::vector<int> sign;
    int length = 0;

    RootVec act(const RootVec& v) const {
        RootVec out(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) out[perm[i]] = sign[i] == 1 ? v[i] : -v[i];
        return out;
    }
    std::vector<int> key() const {
        std::vector<int> k(perm.size());
        for (std::size_t i = 0; i < perm.size(); ++i) k[i] = sign[i] * (perm[i] + 1);
        return k;
    }
};

/// Bit matrix used for the Bruhat relation.
class BitMatrix {
public:
    BitMatrix() = default;
    explicit BitMatrix(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}
    bool get(std::size_t r, std::size_t c) const { return (bits_[r * words_ + c / 64] >> (c % 64)) & 1u; }
    void set(std::size_t r, std::size_t c) { bits_[r * words_ + c / 64] |= (std::uint64_t{1} << (c % 64)); }
    void or_row(std::size_t dst, std::size_t src) {
        for (std::size_t k = 0; k < words_; ++k) bits_[dst * words_ + k] |= bits_[src * words_ + k];
    }

private:
    std::size_t n_ = 0, words_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// Exact root data, Weyl group, and Bruhat order for A_n, B_n, C_n.
class RootSystem {
public:
    explicit RootSystem(RootSystemSpec spec) : spec_(spec) {
        spec.check();
        dim_ = spec.ambient_dim();
        build_roots();
        build_group();
        build_bruhat();
    }

    const RootSystemSpec& spec() const { return spec_; }
    Family family() const { return spec_.family; }
    int rank() const { return spec_.rank; }
    int dim() const { return dim_; }
    std::string name() const { return spec_.name(); }

    const std::vector<RootVec>& positive_roots() const { return positive_; }
    const std::vector<RootVec>& roots() const { return roots_; }
    const std::vector<RootVec>& simple_roots() const { return simple_; }
    /// ω_1..ω_n stored at indices 0..n-1.
    const RootVec& fundamental_coweight(int i) const { return omega_.at(static_cast<std::size_t>(i - 1)); }
    const std::vector<RootVec>& fundamental_coweights() const { return omega_; }
    const RootVec& rho() const { return rho_; }
    const RootVec& rho_check() const { return rho_check_; }
    const RootVec& generic() const { return v0_; }
    const RootVec& highest_root() const { return highest_; }

    static RootVec coroot(const RootVec& a) { return (Rat(2) / dot(a, a)) * a; }

    Rat pairing(const RootVec& weight, const RootVec& covector) const {
        if (weight.size() != static_cast<std::size_t>(dim_) || covector.size() != static_cast<std::size_t>(dim_))
            throw DomainError("pairing: vectors must have dimension " + std::to_string(dim_));
        return dot(weight, covector);
    }

    bool is_positive_root(const RootVec& a) const { return dot(a, v0_) > 0; }

    bool is_minuscule(int i) const {
        for (const auto& a : positive_) if (dot(a, fundamental_coweight(i)) > 1) return false;
        return true;
    }

    /// Σ c_i ω_i.
    RootVec to_ambient(const std::vector<std::int64_t>& coeffs) const {
        if (coeffs.size() != static_cast<std::size_t>(rank()))
            throw DomainError("expected " + std::to_string(rank()) + " coefficients, got " +
                              std::to_string(coeffs.size()));
        RootVec v(dim_);
        for (int i = 0; i < rank(); ++i) v += Rat(coeffs[i]) * omega_[i];
        return v;
    }
    /// Coefficients ⟨α_i, v⟩ in the fundamental-coweight basis.
    std::vector<Rat> coweight_coordinates(const RootVec& v) const {
        std::vector<Rat> c;
        for (const auto& a : simple_) c.push_back(pairing(v, a));
        return c;
    }
    bool is_coweight(const RootVec& v) const {
        for (const auto& c : coweight_coordinates(v)) if (!is_integer(c)) return false;
        return true;
    }
    bool is_dominant(const RootVec& v) const {
        for (const auto& c : coweight_coordinates(v)) if (c < 0) return false;
        return true;
    }
    /// Canonical representative: in type A the all-ones direction is invisible to the
    /// roots, so vectors are normalized to last coordinate 0.
    RootVec canonical(const RootVec& v) const {
        if (spec_.family != Family::A) return v;
        RootVec r(v);
        Rat last = v[v.size() - 1];
        for (std::size_t i = 0; i < r.size(); ++i) r[i] -= last;
        return r;
    }
    bool same_point(const RootVec& a, const RootVec& b) const { return canonical(a) == canonical(b); }

    // Weyl group.
    std::size_t order() const { return elems_.size(); }
    const WeylElement& element(WeylIndex w) const { return elems_[w]; }
    const std::vector<WeylElement>& elements() const { return elems_; }
    WeylIndex identity() const { return id_; }
    WeylIndex longest() const { return w0_; }
    WeylIndex mul(WeylIndex a, WeylIndex b) const { return mul_[a * elems_.size() + b]; }
    WeylIndex inverse(WeylIndex a) const { return inv_[a]; }
    int length(WeylIndex a) const { return elems_[a].length; }
    RootVec act(WeylIndex w, const RootVec& v) const { return elems_[w].act(v); }
    WeylIndex simple_reflection(int i) const { return simple_refl_.at(static_cast<std::size_t>(i)); }
    /// Reflection in the hyperplane orthogonal to root a (either sign).
    WeylIndex reflection(const RootVec& a) const {
        RootVec ac = coroot(a);
        WeylElement e;
        e.perm.assign(dim_, 0);
        e.sign.assign(dim_, 1);
        for (int i = 0; i < dim_; ++i) {
            RootVec ei(dim_);
            ei[i] = 1;
            RootVec img = ei - dot(a, ei) * ac;
            for (int j = 0; j < dim_; ++j) {
                if (img[j].numerator() != 0) {
                    e.perm[i] = j;
                    e.sign[i] = img[j] > 0 ? 1 : -1;
                }
            }
        }
        return index_of(e);
    }
    WeylIndex index_of(const WeylElement& e) const {
        auto it = index_.find(e.key());
        if (it == index_.end()) throw DomainError("element not in Weyl group");
        return it->second;
    }

    bool bruhat_leq(WeylIndex u, WeylIndex w) const { return below_.get(w, u); }

    /// Lexicographically least reduced word (simple reflections 0-based).
    std::vector<int> reduced_word(WeylIndex w) const {
        std::vector<int> word;
        while (length(w) > 0) {
            for (int i = 0; i < rank(); ++i) {
                WeylIndex s = simple_refl_[i];
                WeylIndex sw = mul(s, w);
                if (length(sw) < length(w)) {
                    word.push_back(i);
                    w = sw;
                    break;
                }
            }
        }
        return word;
    }
    WeylIndex from_word(const std::vector<int>& word) const {
        WeylIndex w = id_;
        for (int i : word) w = mul(w, simple_refl_.at(static_cast<std::size_t>(i)));
        return w;
    }

    /// {w : d ∈ w(C̄⁺)}, sorted by index.
    std::vector<WeylIndex> chamber_classes_of_direction(const RootVec& d) const {
        if (d.is_zero()) throw DomainError("chamber_classes_of_direction: zero vector");
        std::vector<WeylIndex> out;
        for (WeylIndex w = 0; w < elems_.size(); ++w) {
            RootVec x = act(inv_[w], d);
            bool ok = true;
            for (const auto& a : simple_) if (dot(a, x) < 0) { ok = false; break; }
            if (ok) out.push_back(w);
        }
        return out;
    }

    /// Dominant W-conjugate of v.
    RootVec dominant_conjugate(const RootVec& v) const {
        for (WeylIndex w = 0; w < elems_.size(); ++w) {
            RootVec x = act(w, v);
            if (is_dominant(x)) return x;
        }
        throw ConsistencyError("no dominant conjugate");
    }

    /// Deterministic tie-break: length first, then lexicographic reduced word.
    bool word_order_less(WeylIndex a, WeylIndex b) const {
        if (length(a) != length(b)) return length(a) < length(b);
        return reduced_word(a) < reduced_word(b);
    }

private:
    void build_roots() {
        const int n = spec_.rank;
        auto e = [&](int i) { RootVec v(dim_); v[i] = 1; return v; };
        if (spec_.family == Family::A) {
            for (int i = 0; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j) positive_.push_back(e(i) - e(j));
            for (int i = 0; i < n; ++i) simple_.push_back(e(i) - e(i + 1));
            for (int i = 1; i <= n; ++i) {
                RootVec w(dim_);
                for (int k = 0; k < i; ++k) w[k] = 1;
                omega_.push_back(w);
            }
        } else {
            // B_n coweights sit against C-type walls, C_n coweights against B-type walls.
            const Rat longcoef = spec_.family == Family::B ? Rat(2) : Rat(1);
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    positive_.push_back(e(i) - e(j));
                    positive_.push_back(e(i) + e(j));
                }
            for (int i = 0; i < n; ++i) positive_.push_back(longcoef * e(i));
            for (int i = 0; i + 1 < n; ++i) simple_.push_back(e(i) - e(i + 1));
            simple_.push_back(longcoef * e(n - 1));
            for (int i = 1; i <= n; ++i) {
                RootVec w(dim_);
                Rat c = (spec_.family == Family::B && i == n) ? Rat(1, 2) : Rat(1);
                for (int k = 0; k < i; ++k) w[k] = c;
                omega_.push_back(w);
            }
        }
        v0_ = RootVec(dim_);
        for (int i = 0; i < dim_; ++i) v0_[i] = Rat(dim_ - i);
        std::sort(positive_.begin(), positive_.end());
        rho_ = RootVec(dim_);
        rho_check_ = RootVec(dim_);
        for (const auto& a : positive_) {
            rho_ += Rat(1, 2) * a;
            rho_check_ += Rat(1, 2) * coroot(a);
            roots_.push_back(a);
            roots_.push_back(-a);
        }
        std::sort(roots_.begin(), roots_.end());
        Rat best(-1);
        for (const auto& a : positive_) {
            Rat h(0);
            for (const auto& w : omega_) h += dot(a, w);
            if (h > best) { best = h; highest_ = a; }
        }
    }

    void build_group() {
        std::vector<int> perm(dim_);
        std::iota(perm.begin(), perm.end(), 0);
        const int nsign = spec_.family == Family::A ? 1 : (1 << dim_);
        do {
            for (int mask = 0; mask < nsign; ++mask) {
                WeylElement e;
                e.perm = perm;
                e.sign.assign(dim_, 1);
                for (int i = 0; i < dim_; ++i)
                    if (mask & (1 << i)) e.sign[i] = -1;
                int len = 0;
                for (const auto& a : positive_)
                    if (!is_positive_root(e.act(a))) ++len;
                e.length = len;
                elems_.push_back(std::move(e));
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        std::stable_sort(elems_.begin(), elems_.end(),
                         [](const WeylElement& a, const WeylElement& b) { return a.length < b.length; });
        for (WeylIndex i = 0; i < elems_.size(); ++i) index_[elems_[i].key()] = i;
        const std::size_t N = elems_.size();
        mul_.assign(N * N, 0);
        inv_.assign(N, 0);
        for (WeylIndex a = 0; a < N; ++a) {
            for (WeylIndex b = 0; b < N; ++b) {
                const auto& u = elems_[a];
                const auto& w = elems_[b];
                WeylElement c;
                c.perm.resize(dim_);
                c.sign.resize(dim_);
                for (int i = 0; i < dim_; ++i) {
                    c.perm[i] = u.perm[w.perm[i]];
                    c.sign[i] = u.sign[w.perm[i]] * w.sign[i];
                }
                WeylIndex ab = index_.at(c.key());
                mul_[a * N + b] = ab;
            }
        }
        for (WeylIndex a = 0; a < N; ++a) {
            if (elems_[a].length == 0) id_ = a;
            if (elems_[a].length == static_cast<int>(positive_.size())) w0_ = a;
        }
        for (WeylIndex a = 0; a < N; ++a)
            for (WeylIndex b = 0; b < N; ++b)
                if (mul_[a * N + b] == id_) inv_[a] = b;
        for (const auto& a : simple_) simple_refl_.push_back(reflection(a));
    }

    void build_bruhat() {
        const std::size_t N = elems_.size();
        std::vector<WeylIndex> refl;
        for (const auto& a : positive_) refl.push_back(reflection(a));
        below_ = BitMatrix(N);
        // Elements are sorted by length, so covered elements are finished first.
        for (WeylIndex w = 0; w < N; ++w) {
            below_.set(w, w);
            for (WeylIndex t : refl) {
                WeylIndex u = mul(t, w);
                if (length(u) + 1 == length(w)) below_.or_row(w, u);
            }
        }
    }

    RootSystemSpec spec_;
    int dim_ = 0;
    std::vector<RootVec> positive_, roots_, simple_, omega_;
    RootVec rho_, rho_check_, v0_, highest_;
    std::vector<WeylElement> elems_;
    std::map<std::vector<int>, WeylIndex> index_;
    std::vector<WeylIndex> mul_, inv_, simple_refl_;
    WeylIndex id_ = 0, w0_ = 0;
    BitMatrix below_;
};

inline RootSystem build_root_system(const RootSystemSpec& spec) { return RootSystem(spec); }

}  // namespace hlg
