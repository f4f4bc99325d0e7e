#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "kerov/exact.hpp"

namespace kerov {

namespace detail {

template <class C>
void trim_coeffs(std::vector<C>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

template <class C>
std::string poly_to_string(const std::vector<C>& coeffs) {
    if (coeffs.empty()) return "0";
    std::string out;
    for (int i = int(coeffs.size()) - 1; i >= 0; --i) {
        const C& c = coeffs[std::size_t(i)];
        if (c == 0) continue;
        const bool neg = c < 0;
        C mag = neg ? C(-c) : c;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        std::string m = mag.str();
        if (i == 0) {
            out += m;
        } else {
            if (m != "1") out += m + "*";
            out += "alpha";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

}  // namespace detail

/** Polynomial in alpha with exact integer coefficients; coeffs[i] multiplies alpha^i. */
struct AlphaPoly {
    std::vector<BigInt> coeffs;

    AlphaPoly() = default;
    explicit AlphaPoly(std::vector<BigInt> c) : coeffs(std::move(c)) { detail::trim_coeffs(coeffs); }
    static AlphaPoly constant(BigInt v) { return AlphaPoly({std::move(v)}); }
    static AlphaPoly alpha() { return AlphaPoly({0, 1}); }

    int degree() const { return int(coeffs.size()) - 1; }  // -1 for the zero polynomial

    BigInt coeff(int i) const {
        return (i >= 0 && i < int(coeffs.size())) ? coeffs[std::size_t(i)] : BigInt(0);
    }

    void add_term(int power, const BigInt& c) {
        if (power >= int(coeffs.size())) coeffs.resize(std::size_t(power) + 1, BigInt(0));
        coeffs[std::size_t(power)] += c;
        detail::trim_coeffs(coeffs);
    }

    friend AlphaPoly operator+(const AlphaPoly& a, const AlphaPoly& b) {
        AlphaPoly r = a;
        if (b.coeffs.size() > r.coeffs.size()) r.coeffs.resize(b.coeffs.size(), BigInt(0));
        for (std::size_t i = 0; i < b.coeffs.size(); ++i) r.coeffs[i] += b.coeffs[i];
        detail::trim_coeffs(r.coeffs);
        return r;
    }

    friend AlphaPoly operator*(const AlphaPoly& a, const AlphaPoly& b) {
        if (a.coeffs.empty() || b.coeffs.empty()) return {};
        AlphaPoly r;
        r.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, BigInt(0));
        for (std::size_t i = 0; i < a.coeffs.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs.size(); ++j)
                r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
        detail::trim_coeffs(r.coeffs);
        return r;
    }

    bool operator==(const AlphaPoly& o) const { return coeffs == o.coeffs; }

    double eval(double alpha_value) const {
        double r = 0.0;
        for (std::size_t i = coeffs.size(); i-- > 0;)
            r = r * alpha_value + coeffs[i].convert_to<double>();
        return r;
    }

    Rational eval_exact(const Rational& alpha_value) const {
        Rational r = 0;
        for (std::size_t i = coeffs.size(); i-- > 0;) r = r * alpha_value + Rational(coeffs[i]);
        return r;
    }

    std::string to_string() const { return detail::poly_to_string(coeffs); }
};

/** Polynomial in alpha with exact rational coefficients (the series transforms divide by k). */
struct AlphaPolyQ {
    std::vector<Rational> coeffs;

    AlphaPolyQ() = default;
    explicit AlphaPolyQ(std::vector<Rational> c) : coeffs(std::move(c)) { detail::trim_coeffs(coeffs); }
    static AlphaPolyQ constant(Rational v) { return AlphaPolyQ({std::move(v)}); }
    static AlphaPolyQ from(const AlphaPoly& p) {
        AlphaPolyQ r;
        r.coeffs.reserve(p.coeffs.size());
        for (const auto& c : p.coeffs) r.coeffs.emplace_back(c);
        return r;
    }

    Rational coeff(int i) const {
        return (i >= 0 && i < int(coeffs.size())) ? coeffs[std::size_t(i)] : Rational(0);
    }

    friend AlphaPolyQ operator+(const AlphaPolyQ& a, const AlphaPolyQ& b) {
        AlphaPolyQ r = a;
        if (b.coeffs.size() > r.coeffs.size()) r.coeffs.resize(b.coeffs.size(), Rational(0));
        for (std::size_t i = 0; i < b.coeffs.size(); ++i) r.coeffs[i] += b.coeffs[i];
        detail::trim_coeffs(r.coeffs);
        return r;
    }

    friend AlphaPolyQ operator-(const AlphaPolyQ& a, const AlphaPolyQ& b) {
        AlphaPolyQ r = a;
        if (b.coeffs.size() > r.coeffs.size()) r.coeffs.resize(b.coeffs.size(), Rational(0));
        for (std::size_t i = 0; i < b.coeffs.size(); ++i) r.coeffs[i] -= b.coeffs[i];
        detail::trim_coeffs(r.coeffs);
        return r;
    }

    friend AlphaPolyQ operator*(const AlphaPolyQ& a, const AlphaPolyQ& b) {
        if (a.coeffs.empty() || b.coeffs.empty()) return {};
        AlphaPolyQ r;
        r.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.coeffs.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs.size(); ++j)
                r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
        detail::trim_coeffs(r.coeffs);
        return r;
    }

    AlphaPolyQ scaled(const Rational& s) const {
        AlphaPolyQ r = *this;
        for (auto& c : r.coeffs) c *= s;
        detail::trim_coeffs(r.coeffs);
        return r;
    }

    bool operator==(const AlphaPolyQ& o) const { return coeffs == o.coeffs; }

    std::string to_string() const { return detail::poly_to_string(coeffs); }
};

/** Polynomial in alpha and beta, exact integer coefficients; key = (alpha power, beta power). */
struct AlphaBetaPoly {
    std::map<std::pair<int, int>, BigInt> coeffs;

    static AlphaBetaPoly one() {
        AlphaBetaPoly p;
        p.coeffs[{0, 0}] = 1;
        return p;
    }
    static AlphaBetaPoly alpha() {
        AlphaBetaPoly p;
        p.coeffs[{1, 0}] = 1;
        return p;
    }
    static AlphaBetaPoly beta() {
        AlphaBetaPoly p;
        p.coeffs[{0, 1}] = 1;
        return p;
    }

    void prune() {
        for (auto it = coeffs.begin(); it != coeffs.end();)
            it = (it->second == 0) ? coeffs.erase(it) : std::next(it);
    }

    friend AlphaBetaPoly operator+(const AlphaBetaPoly& a, const AlphaBetaPoly& b) {
        AlphaBetaPoly r = a;
        for (const auto& [k, v] : b.coeffs) r.coeffs[k] += v;
        r.prune();
        return r;
    }

    friend AlphaBetaPoly operator*(const AlphaBetaPoly& a, const AlphaBetaPoly& b) {
        AlphaBetaPoly r;
        for (const auto& [ka, va] : a.coeffs)
            for (const auto& [kb, vb] : b.coeffs)
                r.coeffs[{ka.first + kb.first, ka.second + kb.second}] += va * vb;
        r.prune();
        return r;
    }

    bool operator==(const AlphaBetaPoly& o) const { return coeffs == o.coeffs; }

    AlphaBetaPoly d_beta() const {
        AlphaBetaPoly r;
        for (const auto& [k, v] : coeffs)
            if (k.second > 0) r.coeffs[{k.first, k.second - 1}] = v * k.second;
        return r;
    }

    AlphaPoly at_beta_one() const {
        AlphaPoly r;
        for (const auto& [k, v] : coeffs) r.add_term(k.first, v);
        return r;
    }

    /** Substitute beta := alpha. */
    AlphaPoly at_beta_alpha() const {
        AlphaPoly r;
        for (const auto& [k, v] : coeffs) r.add_term(k.first + k.second, v);
        return r;
    }
};

}  // namespace kerov
