#pragma once

#include <map>
#include <string>
#include <vector>

#include "colored_trees.hpp"
#include "series.hpp"
#include "stirling.hpp"
#include "symfunc.hpp"

namespace multilie {

/// The EGF sum_{n>=1} (-1)^{n-1} h_{n-1}(x) y^n/n! whose compositional
/// inverse generates the multibracket dimension symmetric functions.
inline Egf<Sym> signed_h_egf(int N) {
    Egf<Sym> F(N);
    for (int n = 1; n <= N; ++n) F[n] = n % 2 == 1 ? h_sym(n - 1) : -h_sym(n - 1);
    return F;
}

/// L_m(x) = sum_{|mu| = m} dim Lie(mu) x^mu, computed through the
/// compositional inverse; degree m coefficient of the inverse series at
/// y^(m+1).
inline Sym L_sym(int m) {
    static std::map<int, Sym> cache;
    if (auto it = cache.find(m); it != cache.end()) return it->second;
    Egf<Sym> G = egf_comp_inverse(signed_h_egf(m + 1));
    for (int n = 1; n <= m + 1; ++n) cache[n - 1] = G[n];
    return cache.at(m);
}

/// The four enumerative routes to L_{n-1}(x), plus the generating-function
/// route, with the e-positivity verdict.
struct FourWays {
    Sym lyn, comb, aa, tn, egf;
    bool all_equal = false;
    SymExpansion e_expansion;  // of the common value
    bool e_positive = false;   // nonnegative integer e-coefficients
};

inline FourWays L_fourways(int n) {
    FourWays out;
    std::vector<int> ground(n);
    for (int i = 0; i < n; ++i) ground[i] = i + 1;
    for (const Tree& t : enumerate_nor(ground)) {
        auto rep = tree_types(t);
        out.lyn += e_sym(rep.lyn_type);
        out.comb += e_sym(rep.comb_type);
    }
    if (n >= 2) {
        std::vector<int> small(n - 1);
        for (int i = 0; i < n - 1; ++i) small[i] = i + 1;
        for (const Word& w : enumerate_stirling(small)) {
            out.aa += e_sym(aa_type(w));
            out.tn += e_sym(tn_type(w));
        }
    } else {
        out.aa = Sym(Rat(1));
        out.tn = Sym(Rat(1));
    }
    out.egf = L_sym(n - 1);
    out.all_equal = out.lyn == out.comb && out.comb == out.aa && out.aa == out.tn &&
                    out.tn == out.egf;
    out.e_expansion = to_basis(out.lyn, Basis::e);
    out.e_positive = true;
    for (const auto& [l, c] : out.e_expansion.coeffs)
        if (c < 0 || denominator(c) != 1) out.e_positive = false;
    return out;
}

/// Weighted Whitney numbers in closed form:
///   w_r = (-1)^r sum_{lambda |- n, len = n-r} (n choose lambda)/m(lambda)!
///         L_{lambda - (1^{n-r})}(x),
/// and W_r likewise with h in place of L.
inline Sym whitney_first_sym(int n, int r) {
    Sym acc;
    for (const IntegerPartition& lambda : integer_partitions(n)) {
        if (lambda.length() != n - r) continue;
        Rat mult = Rat(multinomial(n, lambda.parts())) / Rat(lambda.multiplicity_factorial());
        Sym term{Rat(1)};
        for (int p : lambda.parts()) term *= L_sym(p - 1);
        acc += term * mult;
    }
    return r % 2 == 0 ? acc : -acc;
}

inline Sym whitney_second_sym(int n, int r) {
    Sym acc;
    for (const IntegerPartition& lambda : integer_partitions(n)) {
        if (lambda.length() != n - r) continue;
        Rat mult = Rat(multinomial(n, lambda.parts())) / Rat(lambda.multiplicity_factorial());
        Sym term{Rat(1)};
        for (int p : lambda.parts()) term *= h_sym(p - 1);
        acc += term * mult;
    }
    return acc;
}

/// Evaluated forms, as polynomials in x_1..x_k (the shape whitney_direct
/// produces).
inline std::pair<Poly, Poly> whitney_formula(int n, int r, int k) {
    return {whitney_first_sym(n, r).expand(k), whitney_second_sym(n, r).expand(k)};
}

/// The (n x n) matrices A = [w_{i-j} of Pi_i^k] and B = [W_{i-j} of Pi_i^k]
/// (indices 0..n-1) multiply to the identity, symbolically in x.
struct WhitneyMatrixReport {
    bool symbolic_inverse = false;
    bool stirling_specialization = false;   // x = (1, 0, ...)
    bool two_ones_specialization = false;   // x = (1, 1, 0, ...)
};

inline WhitneyMatrixReport whitney_matrix_check(int n, int bound = 6) {
    if (n > bound) throw bound_exceeded("whitney_matrix_check: n exceeds bound");
    WhitneyMatrixReport rep;
    std::vector<std::vector<Sym>> A(n, std::vector<Sym>(n)), B(n, std::vector<Sym>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j) {
            A[i][j] = whitney_first_sym(i, i - j);
            B[i][j] = whitney_second_sym(i, i - j);
        }
    rep.symbolic_inverse = true;
    for (int i = 0; i < n && rep.symbolic_inverse; ++i)
        for (int j = 0; j < n && rep.symbolic_inverse; ++j) {
            Sym entry;
            for (int l = 0; l < n; ++l) entry += A[i][l] * B[l][j];
            Sym expected = i == j ? Sym(Rat(1)) : Sym();
            if (!(entry == expected)) rep.symbolic_inverse = false;
        }

    // x = (1, 0, ...): the Stirling-number inverse pair
    auto stirling1 = [&](int i, int j) {  // signed
        std::vector<std::vector<Int>> s(n + 1, std::vector<Int>(n + 1, 0));
        s[0][0] = 1;
        for (int a = 1; a <= n; ++a)
            for (int b = 1; b <= a; ++b) s[a][b] = s[a - 1][b - 1] - (a - 1) * s[a - 1][b];
        return s[i][j];
    };
    auto stirling2 = [&](int i, int j) {
        std::vector<std::vector<Int>> S(n + 1, std::vector<Int>(n + 1, 0));
        S[0][0] = 1;
        for (int a = 1; a <= n; ++a)
            for (int b = 1; b <= a; ++b) S[a][b] = S[a - 1][b - 1] + b * S[a - 1][b];
        return S[i][j];
    };
    rep.stirling_specialization = true;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j) {
            Rat a = A[i][j].eval_at({Rat(1)});
            Rat b = B[i][j].eval_at({Rat(1)});
            if (a != Rat(stirling1(i, j)) || b != Rat(stirling2(i, j)))
                rep.stirling_specialization = false;
        }

    // x = (1, 1, 0, ...): A -> (-1)^{i-j} C(i-1, j-1) i^{i-j}, B -> C(i, j) j^{i-j}
    auto ipow = [](Int base, int e) {
        Int r = 1;
        for (int t = 0; t < e; ++t) r *= base;
        return r;
    };
    rep.two_ones_specialization = true;
    for (int i = 1; i < n; ++i)
        for (int j = 1; j <= i; ++j) {
            Rat a = A[i][j].eval_at({Rat(1), Rat(1)});
            Rat b = B[i][j].eval_at({Rat(1), Rat(1)});
            Int ea = binomial(i - 1, j - 1) * ipow(i, i - j);
            if ((i - j) % 2 == 1) ea = -ea;
            Int eb = binomial(i, j) * ipow(j, i - j);
            if (a != Rat(ea) || b != Rat(eb)) rep.two_ones_specialization = false;
        }
    return rep;
}

/// dim of the multilinear exterior powers: entry r (0..n-1) is
/// sum_{lambda |- n, len = r} (n choose lambda)/m! L_{lambda-(1^r)}(1^k);
/// the total also satisfies the exponential formula.
struct ExteriorDims {
    std::vector<Int> by_rank;  // indexed by r = number of factors, 1..n (0 unused)
    Int total = 0;
    bool matches_exponential_formula = false;
    bool matches_whitney = false;  // |w_{n-r}|(1^k) agreement
};

inline ExteriorDims exterior_dims(int n, int k, int bound = 8) {
    if (n > bound) throw bound_exceeded("exterior_dims: n exceeds bound");
    ExteriorDims out;
    out.by_rank.assign(n + 1, 0);
    for (int r = 1; r <= n; ++r) {
        Rat acc = 0;
        for (const IntegerPartition& lambda : integer_partitions(n)) {
            if (lambda.length() != r) continue;
            Rat mult = Rat(multinomial(n, lambda.parts())) / Rat(lambda.multiplicity_factorial());
            Rat term = mult;
            for (int p : lambda.parts()) term *= L_sym(p - 1).eval_ones(k);
            acc += term;
        }
        if (denominator(acc) != 1) throw std::logic_error("exterior_dims: non-integer dimension");
        out.by_rank[r] = numerator(acc);
        out.total += out.by_rank[r];
    }
    // exponential formula: total = n! [x^n] exp(sum L_{i-1}(1^k) x^i / i!)
    {
        std::vector<Rat> expo(n + 1, Rat(0));  // coefficients of x^j in the running product
        expo[0] = 1;
        std::vector<Rat> inner(n + 1, Rat(0));
        for (int i = 1; i <= n; ++i) inner[i] = L_sym(i - 1).eval_ones(k) / Rat(factorial(i));
        // exp via powers
        std::vector<Rat> result(n + 1, Rat(0));
        result[0] = 1;
        std::vector<Rat> power(n + 1, Rat(0));
        power[0] = 1;
        Rat fact = 1;
        for (int j = 1; j <= n; ++j) {
            // power = inner^j
            std::vector<Rat> next(n + 1, Rat(0));
            for (int a = 0; a <= n; ++a)
                for (int b = 1; a + b <= n; ++b) next[a + b] += power[a] * inner[b];
            power = next;
            fact *= j;
            for (int a = 0; a <= n; ++a) result[a] += power[a] / fact;
        }
        Rat total = result[n] * Rat(factorial(n));
        out.matches_exponential_formula = denominator(total) == 1 && numerator(total) == out.total;
    }
    // agreement with |w_{n-r}|(1^k)
    out.matches_whitney = true;
    for (int r = 1; r <= n; ++r) {
        Rat w = whitney_first_sym(n, n - r).eval_ones(k);
        if (abs(numerator(w)) != out.by_rank[r] * denominator(w)) out.matches_whitney = false;
    }
    return out;
}

/// gamma-positivity of the single-variable specialization L_{n-1}(t,1,0,...):
/// expanded in the basis t^i (1+t)^{n-1-2i} all coefficients are nonnegative.
inline bool gamma_positive(int n) {
    // L in e basis, substitute e_1 = 1+t, e_2 = t, e_j = 0 (j >= 3)
    SymExpansion e = to_basis(L_sym(n - 1), Basis::e);
    int deg = n - 1;
    std::vector<Rat> poly(deg + 1, Rat(0));
    for (const auto& [l, c] : e.coeffs) {
        std::vector<Rat> term(deg + 1, Rat(0));
        term[0] = c;
        int shift = 0;
        bool dead = false;
        for (int p : l.parts()) {
            if (p == 1) {
                // multiply by (1+t)
                for (int i = deg; i >= 1; --i) term[i] += term[i - 1];
            } else if (p == 2) {
                ++shift;  // multiply by t
            } else {
                dead = true;
                break;
            }
        }
        if (dead) continue;
        for (int i = deg; i >= 0; --i) {
            int src = i - shift;
            term[i] = src >= 0 ? term[src] : Rat(0);
        }
        for (int i = 0; i <= deg; ++i) poly[i] += term[i];
    }
    // peel off gamma_i t^i (1+t)^(deg-2i)
    for (int i = 0; 2 * i <= deg; ++i) {
        Rat g = poly[i];
        if (g < 0) return false;
        // subtract g * t^i (1+t)^(deg-2i)
        std::vector<Rat> basis(deg + 1, Rat(0));
        basis[i] = g;
        for (int rep = 0; rep < deg - 2 * i; ++rep)
            for (int j = deg; j >= 1; --j) basis[j] += basis[j - 1];
        for (int j = 0; j <= deg; ++j) poly[j] -= basis[j];
    }
    for (const Rat& c : poly)
        if (c != 0) return false;
    return true;
}

/// The series sum_n sum_mu ch Lie(mu) x^mu y^n/n! as the negated plethystic
/// inverse of -sum h_{n-1}(x) h_n(y), truncated at y-degree N.
inline LambdaY lie_character_series(int N) {
    LambdaY F(N);
    for (int n = 1; n <= N; ++n) {
        LambdaY hn = h_y(n, N);
        F = F + hn.scaled(-h_sym(n - 1));
    }
    return -plethystic_inverse(F);
}

/// Per-mu Frobenius characteristics at leaf count n, with the e-coefficient
/// Schur reports.
struct FrobeniusReport {
    // ch Lie(mu) for each content mu (as a partition; rearrangements agree),
    // as a symmetric function of degree n in y (p basis).
    std::map<IntegerPartition, Sym> ch_by_content;
    // C_lambda(y) with its Schur expansion and positivity verdict
    struct CLambda {
        Sym value;
        SymExpansion schur;
        bool schur_positive = false;
    };
    std::map<IntegerPartition, CLambda> c_lambda;
    bool dims_match_lyndon = false;  // E-dimensions equal |Lyn_mu|
};

inline FrobeniusReport frobenius_table(int n, int truncation) {
    if (truncation < n) throw std::invalid_argument("frobenius_table: truncation below n");
    LambdaY series = lie_character_series(truncation);
    LambdaY comp = series.component(n);

    FrobeniusReport rep;
    // regroup: for each y-partition nu with x-coefficient c_nu(x), expand
    // c_nu over m_mu (giving ch Lie(mu)) and over e_lambda (giving C_lambda)
    std::map<IntegerPartition, Sym> by_content;
    std::map<IntegerPartition, Sym> by_elementary;
    for (const auto& [nu, cx] : comp.terms) {
        for (const auto& [mu, c] : to_basis(cx, Basis::m).coeffs)
            by_content[mu] += Sym::p_term(nu, c);
        for (const auto& [lam, c] : to_basis(cx, Basis::e).coeffs)
            by_elementary[lam] += Sym::p_term(nu, c);
    }
    rep.ch_by_content = std::move(by_content);
    for (auto& [lam, val] : by_elementary) {
        FrobeniusReport::CLambda cl;
        cl.value = val;
        cl.schur = to_basis(val, Basis::s);
        cl.schur_positive = true;
        for (const auto& [sl, c] : cl.schur.coeffs)
            if (c < 0 || denominator(c) != 1) cl.schur_positive = false;
        rep.c_lambda.emplace(lam, std::move(cl));
    }

    rep.dims_match_lyndon = true;
    for (const auto& [mu, ch] : rep.ch_by_content) {
        // dim = n! * coefficient of p_{1^n} (E specialization)
        Rat dim = 0;
        auto it = ch.terms().find(IntegerPartition(std::vector<int>(n, 1)));
        if (it != ch.terms().end()) dim = it->second * Rat(factorial(n));
        WeakComposition mu_comp(std::vector<int>(mu.parts().rbegin(), mu.parts().rend()));
        Int lyn = static_cast<Int>(enumerate_lyn(mu_comp).size());
        if (dim != Rat(lyn)) rep.dims_match_lyndon = false;
    }
    return rep;
}

}  // namespace multilie
