#pragma once

#include <map>
#include <string>

#include "compositions.hpp"
#include "numbers.hpp"

namespace multilie {

/// Exact multivariate polynomial in x_1, x_2, ...; monomials are weak
/// compositions (exponent vectors), coefficients rational.
class Poly {
public:
    Poly() = default;
    explicit Poly(Rat c) {
        if (c != 0) terms_[WeakComposition{}] = std::move(c);
    }

    static Poly monomial(const WeakComposition& m, Rat c = 1) {
        Poly p;
        if (c != 0) p.terms_[m] = std::move(c);
        return p;
    }

    static Poly variable(int i) { return monomial(unit_composition(i)); }

    const std::map<WeakComposition, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Poly& operator+=(const Poly& o) {
        for (const auto& [m, c] : o.terms_) {
            Rat& v = terms_[m];
            v += c;
            if (v == 0) terms_.erase(m);
        }
        return *this;
    }

    Poly operator+(const Poly& o) const {
        Poly r(*this);
        r += o;
        return r;
    }

    Poly operator-() const {
        Poly r(*this);
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }

    Poly operator-(const Poly& o) const { return *this + (-o); }
    Poly& operator-=(const Poly& o) { return *this += -o; }

    Poly operator*(const Poly& o) const {
        Poly r;
        for (const auto& [m1, c1] : terms_)
            for (const auto& [m2, c2] : o.terms_) {
                Rat& v = r.terms_[composition_add(m1, m2)];
                v += c1 * c2;
                if (v == 0) r.terms_.erase(composition_add(m1, m2));
            }
        return r;
    }

    Poly operator*(const Rat& c) const {
        Poly r;
        if (c == 0) return r;
        for (const auto& [m, v] : terms_) r.terms_[m] = v * c;
        return r;
    }

    bool operator==(const Poly& o) const = default;

    // substitute x_i -> values[i-1] (missing entries are zero)
    Rat evaluate(const std::vector<Rat>& values) const {
        Rat total = 0;
        for (const auto& [m, c] : terms_) {
            Rat t = c;
            bool dead = false;
            for (int i = 1; i <= m.max_support() && !dead; ++i)
                for (int e = 0; e < m.part(i); ++e) {
                    Rat x = i <= static_cast<int>(values.size()) ? values[i - 1] : Rat(0);
                    if (x == 0) {
                        dead = true;
                        break;
                    }
                    t *= x;
                }
            if (!dead) total += t;
        }
        return total;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [m, c] : terms_) {
            if (!out.empty()) out += " + ";
            out += c.str();
            for (int i = 1; i <= m.max_support(); ++i)
                if (m.part(i) > 0) {
                    out += "*x" + std::to_string(i);
                    if (m.part(i) > 1) out += "^" + std::to_string(m.part(i));
                }
        }
        return out;
    }

private:
    std::map<WeakComposition, Rat> terms_;
};

inline Poly operator*(const Rat& c, const Poly& p) { return p * c; }

}  // namespace multilie
