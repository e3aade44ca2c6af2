#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "symfunc.hpp"

namespace multilie {

/// Truncated exponential generating function sum_{n>=1} c_n y^n / n! with
/// coefficients in an exact ring R (Rat or Sym).
template <class R>
struct Egf {
    int degree = 0;              // truncation order N
    std::vector<R> coeff;        // coeff[n] for 1 <= n <= degree; coeff[0] unused

    explicit Egf(int N) : degree(N), coeff(N + 1) {}

    R& operator[](int n) { return coeff.at(n); }
    const R& operator[](int n) const { return coeff.at(n); }

    bool operator==(const Egf&) const = default;
};

/// Composition F(G(y)) through the common truncation, by the exponential
/// composition formula: (F o G)_n = sum_{lambda |- n} n!/(prod lambda_i! m!)
/// f_{len(lambda)} prod g_{lambda_i}. Requires G_0 = 0 (always, by shape).
template <class R>
Egf<R> egf_compose(const Egf<R>& F, const Egf<R>& G) {
    int N = std::min(F.degree, G.degree);
    Egf<R> H(N);
    for (int n = 1; n <= N; ++n) {
        R acc{};
        for (const IntegerPartition& lambda : integer_partitions(n)) {
            if (lambda.length() > F.degree) continue;
            Rat mult = Rat(multinomial(n, lambda.parts())) / Rat(lambda.multiplicity_factorial());
            R term = F[lambda.length()];
            for (int p : lambda.parts()) term = term * G[p];
            acc = acc + term * mult;
        }
        H[n] = acc;
    }
    return H;
}

/// Compositional inverse of F (requires F_1 = 1): G with F(G(y)) = y,
/// solved degree by degree.
template <class R>
Egf<R> egf_comp_inverse(const Egf<R>& F) {
    if (!(F[1] == R{Rat(1)})) throw std::invalid_argument("egf_comp_inverse: F_1 must be 1");
    int N = F.degree;
    Egf<R> G(N);
    G[1] = R{Rat(1)};
    for (int n = 2; n <= N; ++n) {
        // (F o G)_n = f_1 g_n + (terms with all parts < n); demand it vanish
        R acc{};
        for (const IntegerPartition& lambda : integer_partitions(n)) {
            if (lambda.parts().front() == n) continue;  // the unknown g_n term
            if (lambda.length() > F.degree) continue;
            Rat mult = Rat(multinomial(n, lambda.parts())) / Rat(lambda.multiplicity_factorial());
            R term = F[lambda.length()];
            for (int p : lambda.parts()) term = term * G[p];
            acc = acc + term * mult;
        }
        G[n] = -acc;
    }
    return G;
}

/// Truncated element of the completed ring Lambda_R in alphabet y with
/// coefficients in Lambda_Q(x): a finite sum of c_lambda(x) p_lambda(y) with
/// |lambda| <= degree. Plethysm twists both alphabets.
struct LambdaY {
    int degree = 0;
    std::map<IntegerPartition, Sym> terms;  // y-partition -> x-coefficient

    explicit LambdaY(int N) : degree(N) {}

    void add(const IntegerPartition& lambda, const Sym& c) {
        if (lambda.size() > degree || c.is_zero()) return;
        Sym& v = terms[lambda];
        v += c;
        if (v.is_zero()) terms.erase(lambda);
    }

    LambdaY truncated(int N) const {
        LambdaY out(N);
        for (const auto& [l, c] : terms)
            if (l.size() <= N) out.terms.emplace(l, c);
        return out;
    }

    // the y-degree-d component
    LambdaY component(int d) const {
        LambdaY out(degree);
        for (const auto& [l, c] : terms)
            if (l.size() == d) out.terms.emplace(l, c);
        return out;
    }

    LambdaY operator+(const LambdaY& o) const {
        LambdaY out(std::min(degree, o.degree));
        for (const auto& [l, c] : terms) out.add(l, c);
        for (const auto& [l, c] : o.terms) out.add(l, c);
        return out;
    }

    LambdaY operator-() const {
        LambdaY out(degree);
        for (const auto& [l, c] : terms) out.terms.emplace(l, -c);
        return out;
    }

    LambdaY operator-(const LambdaY& o) const { return *this + (-o); }

    LambdaY operator*(const LambdaY& o) const {
        LambdaY out(std::min(degree, o.degree));
        for (const auto& [l1, c1] : terms)
            for (const auto& [l2, c2] : o.terms) {
                if (l1.size() + l2.size() > out.degree) continue;
                std::vector<int> parts(l1.parts());
                parts.insert(parts.end(), l2.parts().begin(), l2.parts().end());
                out.add(IntegerPartition(std::move(parts)), c1 * c2);
            }
        return out;
    }

    LambdaY scaled(const Sym& c) const {
        LambdaY out(degree);
        for (const auto& [l, v] : terms) out.add(l, v * c);
        return out;
    }

    LambdaY scaled(const Rat& c) const { return scaled(Sym(c)); }

    // omega involution on the y alphabet
    LambdaY omega_y() const {
        LambdaY out(degree);
        for (const auto& [l, c] : terms) {
            int even_parts = 0;
            for (int p : l.parts())
                if (p % 2 == 0) ++even_parts;
            out.terms.emplace(l, even_parts % 2 == 0 ? c : -c);
        }
        return out;
    }

    bool operator==(const LambdaY& o) const { return terms == o.terms; }
};

inline LambdaY p1_y(int N) {
    LambdaY f(N);
    f.add(IntegerPartition{1}, Sym(Rat(1)));
    return f;
}

inline LambdaY h_y(int n, int N) {
    LambdaY f(N);
    Sym hn = h_sym(n);
    for (const auto& [l, c] : hn.terms()) f.add(l, Sym(c));
    return f;
}

/// p_m[G]: raise every variable (in both alphabets) to the m-th power.
inline LambdaY plethysm_power(int m, const LambdaY& G) {
    LambdaY out(G.degree);
    for (const auto& [l, c] : G.terms) {
        std::vector<int> parts;
        for (int p : l.parts()) parts.push_back(p * m);
        IntegerPartition scaled(std::move(parts));
        if (scaled.size() > out.degree) continue;
        out.add(scaled, c.frobenius_twist(m));
    }
    return out;
}

/// Plethysm F[G]: substitute G into F, extending p_m[G] multiplicatively over
/// p_lambda(y) and linearly over the x-coefficients of F (which are not
/// twisted). G must have no constant term (guaranteed by the representation).
inline LambdaY plethysm(const LambdaY& F, const LambdaY& G) {
    int N = std::min(F.degree, G.degree);
    LambdaY out(N);
    std::map<int, LambdaY> powers;  // m -> p_m[G]
    for (const auto& [lambda, coef] : F.terms) {
        LambdaY term(N);
        term.add(IntegerPartition{}, Sym(Rat(1)));
        bool dead = false;
        for (int m : lambda.parts()) {
            auto it = powers.find(m);
            if (it == powers.end()) it = powers.emplace(m, plethysm_power(m, G)).first;
            term = term * it->second;
            if (term.terms.empty()) {
                dead = true;
                break;
            }
        }
        if (dead) continue;
        out = out + term.scaled(coef);
    }
    return out;
}

/// Plethystic inverse: G with F[G] = p_1, for F whose degree-1 part is
/// c * p_1 with c a nonzero rational. Solved degree by degree: the degree-d
/// unknown enters only through the p_1 term of F.
inline LambdaY plethystic_inverse(const LambdaY& F) {
    int N = F.degree;
    auto it = F.terms.find(IntegerPartition{1});
    if (it == F.terms.end()) throw std::invalid_argument("plethystic_inverse: no p_1 term");
    const Sym& c1_sym = it->second;
    if (c1_sym.terms().size() != 1 || c1_sym.terms().begin()->first != IntegerPartition{})
        throw std::invalid_argument("plethystic_inverse: p_1 coefficient must be scalar");
    Rat c1 = c1_sym.terms().begin()->second;

    LambdaY G(N);
    G.add(IntegerPartition{1}, Sym(Rat(1) / c1));
    for (int d = 2; d <= N; ++d) {
        // all terms of F[G]|_d not involving G_d
        LambdaY partial(N);
        for (const auto& [lambda, coef] : F.terms) {
            if (lambda == IntegerPartition{1}) continue;
            LambdaY term(N);
            term.add(IntegerPartition{}, Sym(Rat(1)));
            for (int m : lambda.parts()) term = term * plethysm_power(m, G);
            partial = partial + term.scaled(coef);
        }
        // demand component d of F[G] vanish: c1 * G_d = -(everything else)
        LambdaY residue = partial.component(d);
        for (const auto& [l, c] : residue.terms) G.add(l, -(c * (Rat(1) / c1)));
    }
    return G;
}

/// The specialization E(p_i(y)) = y delta_{i,1}: only the p_{1^m}(y) terms
/// survive. Returned as an EGF in y: coefficient of y^m/m! is
/// m! * c_{(1^m)}(x), so applying E to a Frobenius characteristic yields the
/// EGF of dimensions.
inline Egf<Sym> specialize_E(const LambdaY& F) {
    Egf<Sym> out(F.degree);
    for (const auto& [l, c] : F.terms) {
        if (l.length() != l.size()) continue;  // not all parts 1
        int m = l.size();
        if (m >= 1) out[m] = c * Rat(factorial(m));
    }
    return out;
}

}  // namespace multilie
