#include "indpoly/polynomial.hpp"

#include <stdexcept>

namespace indpoly {

Polynomial Polynomial::from_strings(const std::vector<std::string>& decimal) {
    std::vector<BigInt> c;
    c.reserve(decimal.size());
    for (const auto& s : decimal) c.emplace_back(s, 10);
    return Polynomial(std::move(c));
}

std::vector<std::string> Polynomial::to_strings() const {
    std::vector<std::string> out;
    out.reserve(c_.size());
    for (const auto& v : c_) out.push_back(v.get_str());
    return out;
}

std::string Polynomial::to_string() const {
    if (c_.empty()) return "0";
    std::string s;
    for (size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        if (!s.empty()) s += " + ";
        if (k == 0 || c_[k] != 1) s += c_[k].get_str();
        if (k >= 1) {
            s += "x";
            if (k >= 2) s += "^" + std::to_string(k);
        }
    }
    return s.empty() ? "0" : s;
}

Polynomial add(const Polynomial& p, const Polynomial& q) {
    std::vector<BigInt> c(std::max(p.coeffs().size(), q.coeffs().size()), BigInt(0));
    for (size_t i = 0; i < p.coeffs().size(); ++i) c[i] += p.coeffs()[i];
    for (size_t i = 0; i < q.coeffs().size(); ++i) c[i] += q.coeffs()[i];
    return Polynomial(std::move(c));
}

Polynomial sub(const Polynomial& p, const Polynomial& q) {
    std::vector<BigInt> c(std::max(p.coeffs().size(), q.coeffs().size()), BigInt(0));
    for (size_t i = 0; i < p.coeffs().size(); ++i) c[i] += p.coeffs()[i];
    for (size_t i = 0; i < q.coeffs().size(); ++i) c[i] -= q.coeffs()[i];
    return Polynomial(std::move(c));
}

Polynomial mul(const Polynomial& p, const Polynomial& q) {
    if (p.is_zero() || q.is_zero()) return Polynomial();
    std::vector<BigInt> c(p.coeffs().size() + q.coeffs().size() - 1, BigInt(0));
    for (size_t i = 0; i < p.coeffs().size(); ++i)
        for (size_t j = 0; j < q.coeffs().size(); ++j) c[i + j] += p.coeffs()[i] * q.coeffs()[j];
    return Polynomial(std::move(c));
}

Polynomial power(const Polynomial& p, long e) {
    if (e < 0) throw std::invalid_argument("power: negative exponent");
    Polynomial r = Polynomial::one();
    Polynomial base = p;
    while (e > 0) {
        if (e & 1) r = mul(r, base);
        e >>= 1;
        if (e > 0) base = mul(base, base);
    }
    return r;
}

Polynomial add_scalar(const Polynomial& p, const BigInt& c) {
    std::vector<BigInt> v = p.coeffs();
    if (v.empty()) v.emplace_back(0);
    v[0] += c;
    return Polynomial(std::move(v));
}

Polynomial scale(const Polynomial& p, const BigInt& c) {
    std::vector<BigInt> v = p.coeffs();
    for (auto& x : v) x *= c;
    return Polynomial(std::move(v));
}

Polynomial shift_up(const Polynomial& p) {
    if (p.is_zero()) return p;
    std::vector<BigInt> v;
    v.reserve(p.coeffs().size() + 1);
    v.emplace_back(0);
    v.insert(v.end(), p.coeffs().begin(), p.coeffs().end());
    return Polynomial(std::move(v));
}

ShapeReport shape(const Polynomial& p) {
    const auto& a = p.coeffs();
    for (const auto& v : a)
        if (v < 0) throw std::invalid_argument("shape: negative coefficient");

    ShapeReport r;
    if (a.empty()) return r;

    const int n = int(a.size()) - 1;

    // climb to the first peak, then require a non-increasing tail
    int i = 0;
    while (i < n && a[i] <= a[i + 1]) ++i;
    int j = i;
    while (j < n && a[j] >= a[j + 1]) ++j;
    if (j < n) {
        r.unimodal = false;
        r.dip_index = j;  // a[j] < a[j+1] and the peak before it was strictly larger
    }

    for (int k = 1; k < n; ++k) {
        if (a[k] * a[k] < a[k - 1] * a[k + 1]) {
            r.log_concave = false;
            r.lc_violation_index = k;
            break;
        }
    }

    const BigInt* mx = &a[0];
    for (const auto& v : a)
        if (v > *mx) mx = &v;
    for (int k = 0; k <= n; ++k)
        if (a[k] == *mx) r.modes.push_back(k);

    return r;
}

}  // namespace indpoly
