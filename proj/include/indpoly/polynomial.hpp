#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace indpoly {

using BigInt = mpz_class;

// Dense polynomial over arbitrary-precision integers. coeff(k) is the number
// of stable sets of size k when produced by the engines. Always normalized:
// no trailing zero coefficients, the zero polynomial is the empty vector.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { normalize(); }
    Polynomial(std::initializer_list<long> coeffs) {
        for (long v : coeffs) c_.emplace_back(v);
        normalize();
    }

    static Polynomial one() { return Polynomial({1}); }
    static Polynomial from_strings(const std::vector<std::string>& decimal);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return int(c_.size()) - 1; }  // -1 for the zero polynomial
    BigInt coeff(int k) const { return (k >= 0 && k < int(c_.size())) ? c_[k] : BigInt(0); }
    const std::vector<BigInt>& coeffs() const { return c_; }

    bool operator==(const Polynomial& o) const { return c_ == o.c_; }

    std::vector<std::string> to_strings() const;
    std::string to_string() const;  // "1 + 4x + 3x^2 + x^3" style, for messages

private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<BigInt> c_;
};

Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial sub(const Polynomial& p, const Polynomial& q);
Polynomial mul(const Polynomial& p, const Polynomial& q);
Polynomial power(const Polynomial& p, long e);
Polynomial add_scalar(const Polynomial& p, const BigInt& c);
Polynomial scale(const Polynomial& p, const BigInt& c);
Polynomial shift_up(const Polynomial& p);  // multiply by x

struct ShapeReport {
    bool unimodal = true;
    // valley witness: some earlier coefficient exceeds s_j and s_j < s_{j+1}
    std::optional<int> dip_index;
    bool log_concave = true;
    std::optional<int> lc_violation_index;  // s_i^2 < s_{i-1} * s_{i+1}
    std::vector<int> modes;                 // all indices attaining the maximum
    std::optional<bool> real_rooted;        // filled by callers that ran the root test
};

// Coefficient-sequence shape verdicts. Rejects negative coefficients.
ShapeReport shape(const Polynomial& p);

// true iff every complex root of p is real; exact Sturm-sequence count over
// rationals, multiplicities removed through gcd with the derivative first.
bool real_rooted(const Polynomial& p);

}  // namespace indpoly
