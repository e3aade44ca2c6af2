#pragma once

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "numbers.hpp"
#include "partitions.hpp"
#include "polynomial.hpp"

namespace multilie {

namespace symdetail {
// guards every conversion cache below; recursive because the character
// computation re-enters itself
inline std::recursive_mutex& cache_mutex() {
    static std::recursive_mutex m;
    return m;
}
}  // namespace symdetail

/// Exact symmetric function in one alphabet, held internally in the power-sum
/// basis (products and plethystic twists are diagonal there). Conversions to
/// and from the m/e/h/p/s bases are exact; evaluations specialize late.
class Sym {
public:
    Sym() = default;
    explicit Sym(Rat c) {
        if (c != 0) terms_[IntegerPartition{}] = std::move(c);
    }

    static Sym p_term(const IntegerPartition& lambda, Rat c = 1) {
        Sym f;
        if (c != 0) f.terms_[lambda] = std::move(c);
        return f;
    }

    const std::map<IntegerPartition, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Sym homogeneous_part(int d) const {
        Sym f;
        for (const auto& [l, c] : terms_)
            if (l.size() == d) f.terms_[l] = c;
        return f;
    }

    int max_degree() const {
        int d = 0;
        for (const auto& [l, c] : terms_) d = std::max(d, l.size());
        return d;
    }

    Sym& operator+=(const Sym& o) {
        for (const auto& [l, c] : o.terms_) {
            Rat& v = terms_[l];
            v += c;
            if (v == 0) terms_.erase(l);
        }
        return *this;
    }

    Sym operator+(const Sym& o) const {
        Sym r(*this);
        r += o;
        return r;
    }

    Sym operator-() const {
        Sym r(*this);
        for (auto& [l, c] : r.terms_) c = -c;
        return r;
    }

    Sym operator-(const Sym& o) const { return *this + (-o); }
    Sym& operator-=(const Sym& o) { return *this += -o; }

    Sym operator*(const Sym& o) const {
        Sym r;
        for (const auto& [l1, c1] : terms_)
            for (const auto& [l2, c2] : o.terms_) {
                std::vector<int> parts(l1.parts());
                parts.insert(parts.end(), l2.parts().begin(), l2.parts().end());
                IntegerPartition merged(std::move(parts));
                Rat& v = r.terms_[merged];
                v += c1 * c2;
                if (v == 0) r.terms_.erase(merged);
            }
        return r;
    }

    Sym operator*(const Rat& c) const {
        Sym r;
        if (c == 0) return r;
        for (const auto& [l, v] : terms_) r.terms_[l] = v * c;
        return r;
    }

    Sym& operator*=(const Sym& o) { return *this = *this * o; }
    Sym& operator*=(const Rat& c) { return *this = *this * c; }

    bool operator==(const Sym& o) const = default;

    // omega involution: p_i -> (-1)^{i-1} p_i
    Sym omega() const {
        Sym r;
        for (const auto& [l, c] : terms_) {
            int even_parts = 0;
            for (int p : l.parts())
                if (p % 2 == 0) ++even_parts;
            r.terms_[l] = even_parts % 2 == 0 ? c : -c;
        }
        return r;
    }

    // plethystic twist p_j -> p_{j*m} (substitute m-th powers of the variables)
    Sym frobenius_twist(int m) const {
        Sym r;
        for (const auto& [l, c] : terms_) {
            std::vector<int> parts;
            for (int p : l.parts()) parts.push_back(p * m);
            r.terms_[IntegerPartition(std::move(parts))] = c;
        }
        return r;
    }

    // f(1^k): p_i(1^k) = k
    Rat eval_ones(int k) const {
        Rat total = 0;
        for (const auto& [l, c] : terms_) {
            Rat t = c;
            for (size_t i = 0; i < l.parts().size(); ++i) t *= k;
            total += t;
        }
        return total;
    }

    // f(values..., 0, 0, ...) via p_i = sum_j values[j]^i
    Rat eval_at(const std::vector<Rat>& values) const {
        Rat total = 0;
        for (const auto& [l, c] : terms_) {
            Rat t = c;
            for (int p : l.parts()) {
                Rat power_sum = 0;
                for (const Rat& x : values) {
                    Rat xp = 1;
                    for (int e = 0; e < p; ++e) xp *= x;
                    power_sum += xp;
                }
                t *= power_sum;
            }
            total += t;
        }
        return total;
    }

    // polynomial expansion in x_1..x_k
    Poly expand(int k) const {
        Poly total;
        for (const auto& [l, c] : terms_) {
            Poly t{Rat(1)};
            for (int p : l.parts()) {
                Poly ps;
                for (int j = 1; j <= k; ++j) {
                    std::vector<int> mono(j, 0);
                    mono[j - 1] = p;
                    ps += Poly::monomial(WeakComposition(std::move(mono)));
                }
                t = t * ps;
            }
            total += t * c;
        }
        return total;
    }

private:
    std::map<IntegerPartition, Rat> terms_;
};

inline Sym operator*(const Rat& c, const Sym& f) { return f * c; }

namespace symdetail {

// Exact dense solve M x = b for square nonsingular M.
inline std::vector<Rat> solve_dense(std::vector<std::vector<Rat>> M, std::vector<Rat> b) {
    int n = static_cast<int>(M.size());
    std::vector<int> pivot_of_col(n, -1);
    int row = 0;
    for (int col = 0; col < n && row < n; ++col) {
        int pr = -1;
        for (int i = row; i < n; ++i)
            if (M[i][col] != 0) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        std::swap(M[pr], M[row]);
        std::swap(b[pr], b[row]);
        Rat lead = M[row][col];
        for (int j = col; j < n; ++j) M[row][j] /= lead;
        b[row] /= lead;
        for (int i = 0; i < n; ++i) {
            if (i == row || M[i][col] == 0) continue;
            Rat f = M[i][col];
            for (int j = col; j < n; ++j) M[i][j] -= f * M[row][j];
            b[i] -= f * b[row];
        }
        pivot_of_col[col] = row;
        ++row;
    }
    std::vector<Rat> x(n, Rat(0));
    for (int col = 0; col < n; ++col) {
        if (pivot_of_col[col] >= 0)
            x[col] = b[pivot_of_col[col]];
        else if (row < n)
            throw std::logic_error("solve_dense: singular system");
    }
    return x;
}

// Newton-identity expansions of e_n and h_n in the p basis, memoized.
inline const Sym& e_in_p(int n) {
    std::lock_guard lock(cache_mutex());
    static std::vector<Sym> cache{Sym(Rat(1))};
    while (static_cast<int>(cache.size()) <= n) {
        int m = static_cast<int>(cache.size());
        Sym acc;
        for (int i = 1; i <= m; ++i) {
            Sym term = cache[m - i] * Sym::p_term(IntegerPartition{i});
            acc += i % 2 == 1 ? term : -term;
        }
        cache.push_back(acc * Rat(1, m));
    }
    return cache[n];
}

inline const Sym& h_in_p(int n) {
    std::lock_guard lock(cache_mutex());
    static std::vector<Sym> cache{Sym(Rat(1))};
    while (static_cast<int>(cache.size()) <= n) {
        int m = static_cast<int>(cache.size());
        Sym acc;
        for (int i = 1; i <= m; ++i) acc += cache[m - i] * Sym::p_term(IntegerPartition{i});
        cache.push_back(acc * Rat(1, m));
    }
    return cache[n];
}

// Murnaghan-Nakayama via beta numbers: removing a border strip of size s
// means lowering one beta number by s, keeping all distinct; the sign is
// (-1)^(number of beta values jumped over).
inline Int character(const IntegerPartition& lambda, const IntegerPartition& nu) {
    if (lambda.size() != nu.size())
        throw std::invalid_argument("character: |lambda| != |nu|");
    std::lock_guard lock(cache_mutex());
    static std::map<std::pair<IntegerPartition, IntegerPartition>, Int> memo;
    if (lambda.size() == 0) return 1;
    auto key = std::make_pair(lambda, nu);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    int s = nu.parts().front();
    IntegerPartition rest(std::vector<int>(nu.parts().begin() + 1, nu.parts().end()));
    int L = lambda.length();
    std::vector<int> beta(L);
    for (int i = 0; i < L; ++i) beta[i] = lambda.parts()[i] + (L - 1 - i);

    Int total = 0;
    for (int i = 0; i < L; ++i) {
        int nb = beta[i] - s;
        if (nb < 0) continue;
        int jumped = 0;
        bool clash = false;
        for (int j = 0; j < L; ++j) {
            if (j == i) continue;
            if (beta[j] == nb) {
                clash = true;
                break;
            }
            if (beta[j] > nb && beta[j] < beta[i]) ++jumped;
        }
        if (clash) continue;
        std::vector<int> nbeta(beta);
        nbeta[i] = nb;
        std::sort(nbeta.begin(), nbeta.end(), std::greater<int>());
        std::vector<int> parts;
        for (int j = 0; j < L; ++j) {
            int p = nbeta[j] - (L - 1 - j);
            if (p > 0) parts.push_back(p);
        }
        Int sub = character(IntegerPartition(std::move(parts)), rest);
        total += jumped % 2 == 0 ? sub : -sub;
    }
    memo[key] = total;
    return total;
}

// s_lambda = sum_nu chi^lambda(nu) p_nu / z_nu
inline Sym schur_in_p(const IntegerPartition& lambda) {
    std::lock_guard lock(cache_mutex());
    static std::map<IntegerPartition, Sym> memo;
    if (auto it = memo.find(lambda); it != memo.end()) return it->second;
    Sym f;
    for (const IntegerPartition& nu : integer_partitions(lambda.size()))
        f += Sym::p_term(nu, Rat(character(lambda, nu)) / Rat(z_lambda(nu)));
    return memo[lambda] = f;
}

// Coefficients of m_mu in the monomial expansion of p_lambda (an alphabet of
// deg(lambda) variables suffices; the coefficient of m_mu is the coefficient
// of the dominant monomial x^mu).
inline const std::map<IntegerPartition, Rat>& p_to_m_row(const IntegerPartition& lambda) {
    std::lock_guard lock(cache_mutex());
    static std::map<IntegerPartition, std::map<IntegerPartition, Rat>> memo;
    if (auto it = memo.find(lambda); it != memo.end()) return it->second;
    int d = std::max(lambda.size(), 1);
    Poly poly{Rat(1)};
    for (int p : lambda.parts()) {
        Poly ps;
        for (int j = 1; j <= d; ++j) {
            std::vector<int> mono(j, 0);
            mono[j - 1] = p;
            ps += Poly::monomial(WeakComposition(std::move(mono)));
        }
        poly = poly * ps;
    }
    std::map<IntegerPartition, Rat> row;
    for (const auto& [mono, c] : poly.terms()) {
        bool dominant = true;
        for (size_t i = 0; i + 1 < mono.parts().size(); ++i)
            if (mono.parts()[i] < mono.parts()[i + 1]) dominant = false;
        if (!dominant) continue;
        std::vector<int> exps(mono.parts());
        row[IntegerPartition(std::move(exps))] = c;
    }
    return memo[lambda] = row;
}

}  // namespace symdetail

inline Sym e_sym(int n) { return symdetail::e_in_p(n); }
inline Sym h_sym(int n) { return symdetail::h_in_p(n); }
inline Sym p_sym(int n) { return Sym::p_term(IntegerPartition{n}); }

inline Sym e_sym(const IntegerPartition& lambda) {
    Sym f{Rat(1)};
    for (int p : lambda.parts()) f *= e_sym(p);
    return f;
}

inline Sym h_sym(const IntegerPartition& lambda) {
    Sym f{Rat(1)};
    for (int p : lambda.parts()) f *= h_sym(p);
    return f;
}

inline Sym p_sym(const IntegerPartition& lambda) { return Sym::p_term(lambda); }
inline Sym s_sym(const IntegerPartition& lambda) { return symdetail::schur_in_p(lambda); }

/// m_lambda, solved per degree from the p -> m transition.
inline Sym m_sym(const IntegerPartition& lambda) {
    std::lock_guard lock(cache_mutex());
    static std::map<IntegerPartition, Sym> memo;
    if (auto it = memo.find(lambda); it != memo.end()) return it->second;
    auto nus = integer_partitions(lambda.size());
    int n = static_cast<int>(nus.size());
    std::map<IntegerPartition, int> idx;
    for (int i = 0; i < n; ++i) idx[nus[i]] = i;
    std::vector<std::vector<Rat>> M(n, std::vector<Rat>(n, Rat(0)));
    for (int col = 0; col < n; ++col)
        for (const auto& [mu, c] : symdetail::p_to_m_row(nus[col])) M[idx.at(mu)][col] = c;
    std::vector<Rat> b(n, Rat(0));
    b[idx.at(lambda)] = 1;
    std::vector<Rat> x = symdetail::solve_dense(std::move(M), std::move(b));
    Sym f;
    for (int i = 0; i < n; ++i) f += Sym::p_term(nus[i], x[i]);
    return memo[lambda] = f;
}

enum class Basis { m, e, h, p, s };

/// A symmetric function presented in a declared basis.
struct SymExpansion {
    Basis basis = Basis::p;
    std::map<IntegerPartition, Rat> coeffs;

    bool operator==(const SymExpansion&) const = default;
};

inline Sym from_basis(const SymExpansion& f) {
    Sym r;
    for (const auto& [l, c] : f.coeffs) {
        switch (f.basis) {
            case Basis::p: r += Sym::p_term(l, c); break;
            case Basis::e: r += e_sym(l) * c; break;
            case Basis::h: r += h_sym(l) * c; break;
            case Basis::s: r += s_sym(l) * c; break;
            case Basis::m: r += m_sym(l) * c; break;
        }
    }
    return r;
}

/// Expand f exactly in the requested basis, degree by degree. The e and h
/// coefficients solve a small linear system against their p expansions; the
/// Schur coefficients come from the character pairing
/// <f, s_lambda> = sum_nu f_nu chi^lambda(nu).
inline SymExpansion to_basis(const Sym& f, Basis target) {
    SymExpansion out;
    out.basis = target;
    if (target == Basis::p) {
        out.coeffs = f.terms();
        return out;
    }
    std::map<int, Sym> by_degree;
    for (const auto& [l, c] : f.terms()) by_degree[l.size()] += Sym::p_term(l, c);

    for (auto& [d, part] : by_degree) {
        if (target == Basis::s) {
            for (const IntegerPartition& l : integer_partitions(d)) {
                Rat coef = 0;
                for (const auto& [nu, c] : part.terms())
                    coef += c * Rat(symdetail::character(l, nu));
                if (coef != 0) out.coeffs[l] = coef;
            }
            continue;
        }
        if (target == Basis::m) {
            std::map<IntegerPartition, Rat> coeffs;
            for (const auto& [nu, c] : part.terms())
                for (const auto& [mu, v] : symdetail::p_to_m_row(nu)) coeffs[mu] += c * v;
            for (auto& [mu, c] : coeffs)
                if (c != 0) out.coeffs[mu] = c;
            continue;
        }
        // e or h
        auto lambdas = integer_partitions(d);
        int n = static_cast<int>(lambdas.size());
        std::map<IntegerPartition, int> idx;
        for (int i = 0; i < n; ++i) idx[lambdas[i]] = i;
        std::vector<std::vector<Rat>> M(n, std::vector<Rat>(n, Rat(0)));
        for (int col = 0; col < n; ++col) {
            Sym b = target == Basis::e ? e_sym(lambdas[col]) : h_sym(lambdas[col]);
            for (const auto& [nu, c] : b.terms()) M[idx.at(nu)][col] = c;
        }
        std::vector<Rat> rhs(n, Rat(0));
        for (const auto& [nu, c] : part.terms()) rhs[idx.at(nu)] = c;
        std::vector<Rat> x = symdetail::solve_dense(std::move(M), std::move(rhs));
        for (int i = 0; i < n; ++i)
            if (x[i] != 0) out.coeffs[lambdas[i]] = x[i];
    }
    return out;
}

inline SymExpansion basis_convert(const SymExpansion& f, Basis target) {
    return to_basis(from_basis(f), target);
}

inline std::string partition_key(const IntegerPartition& l) {
    std::string out;
    for (size_t i = 0; i < l.parts().size(); ++i) {
        if (i) out += ",";
        out += std::to_string(l.parts()[i]);
    }
    return out;
}

}  // namespace multilie
