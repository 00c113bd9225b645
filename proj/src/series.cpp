#include "laygraph/series.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace laygraph {

namespace {

void append_term(std::ostringstream& os, const Int& c, std::size_t k, bool first) {
    Int magnitude = abs(c);
    if (first) {
        if (c < 0) os << "-";
    } else {
        os << (c < 0 ? " - " : " + ");
    }
    if (k == 0 || magnitude != 1) os << magnitude;
    if (k >= 1) os << "t";
    if (k >= 2) os << "^" << k;
}

}  // namespace

IntPoly::IntPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPoly::IntPoly(std::initializer_list<long long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long long c : coeffs) coeffs_.emplace_back(c);
    normalize();
}

IntPoly IntPoly::constant(Int c) { return IntPoly(std::vector<Int>{std::move(c)}); }

IntPoly IntPoly::monomial(Int c, std::size_t degree) {
    std::vector<Int> coeffs(degree + 1);
    coeffs[degree] = std::move(c);
    return IntPoly(std::move(coeffs));
}

void IntPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::size_t IntPoly::degree() const {
    if (is_zero()) throw Error(ErrorKind::OutOfRange, "degree of the zero polynomial");
    return coeffs_.size() - 1;
}

Int IntPoly::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Int(0); }

Int IntPoly::evaluate(const Int& x) const {
    Int acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
    normalize();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
    normalize();
    return *this;
}

IntPoly& IntPoly::operator*=(const IntPoly& rhs) { return *this = *this * rhs; }

IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    std::vector<Int> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        if (lhs.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
    return IntPoly(std::move(out));
}

IntPoly operator-(const IntPoly& p) {
    IntPoly out = p;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

IntPoly pow(const IntPoly& base, unsigned exponent) {
    IntPoly result = IntPoly::constant(1);
    IntPoly square = base;
    while (exponent != 0) {
        if (exponent & 1U) result *= square;
        exponent >>= 1U;
        if (exponent != 0) square *= square;
    }
    return result;
}

IntPoly substitute_neg(const IntPoly& p) {
    std::vector<Int> coeffs = p.coeffs();
    for (std::size_t k = 1; k < coeffs.size(); k += 2) coeffs[k] = -coeffs[k];
    return IntPoly(std::move(coeffs));
}

IntPoly div_exact(const IntPoly& p, const IntPoly& q) {
    if (q.is_zero()) throw Error(ErrorKind::OutOfRange, "division by the zero polynomial");
    if (p.is_zero()) return {};
    const std::size_t dq = q.degree();
    if (p.degree() < dq) throw Error(ErrorKind::NotDivisible, to_string(p) + " by " + to_string(q));

    std::vector<Int> rem = p.coeffs();
    std::vector<Int> quot(p.degree() - dq + 1);
    const Int& lead = q.coeffs().back();
    for (std::size_t k = quot.size(); k-- > 0;) {
        const Int& top = rem[k + dq];
        if (top == 0) continue;
        if (top % lead != 0) throw Error(ErrorKind::NotDivisible, to_string(p) + " by " + to_string(q));
        Int c = top / lead;
        for (std::size_t j = 0; j <= dq; ++j) rem[k + j] -= c * q.coeffs()[j];
        quot[k] = std::move(c);
    }
    if (std::any_of(rem.begin(), rem.end(), [](const Int& c) { return c != 0; }))
        throw Error(ErrorKind::NotDivisible, to_string(p) + " by " + to_string(q));
    return IntPoly(std::move(quot));
}

IntSeries::IntSeries(std::vector<Int> coeffs, std::size_t truncation) : coeffs_(std::move(coeffs)) {
    coeffs_.resize(truncation + 1);
}

IntSeries IntSeries::from_poly(const IntPoly& p, std::size_t truncation) {
    return IntSeries(p.coeffs(), truncation);
}

IntSeries IntSeries::one(std::size_t truncation) { return IntSeries({Int(1)}, truncation); }

IntSeries IntSeries::truncated(std::size_t truncation) const {
    return IntSeries(coeffs_, std::min(truncation, this->truncation()));
}

IntSeries& IntSeries::operator+=(const IntSeries& rhs) {
    coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
    return *this;
}

IntSeries& IntSeries::operator-=(const IntSeries& rhs) {
    coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
    return *this;
}

IntSeries operator*(const IntSeries& lhs, const IntSeries& rhs) {
    const std::size_t n = std::min(lhs.coeffs_.size(), rhs.coeffs_.size());
    std::vector<Int> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (lhs.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; i + j < n; ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
    return IntSeries(std::move(out), n - 1);
}

IntSeries operator*(const IntPoly& lhs, const IntSeries& rhs) {
    return IntSeries::from_poly(lhs, rhs.truncation()) * rhs;
}

IntSeries inverse(const IntSeries& s) {
    const Int& c0 = s[0];
    if (c0 != 1 && c0 != -1) throw Error(ErrorKind::NonUnitConstantTerm, "constant term " + c0.str());
    const auto& a = s.coeffs();
    std::vector<Int> b(a.size());
    // a0 = +-1 is its own inverse, so b_k = -a0 * sum_{j>=1} a_j b_{k-j}.
    b[0] = c0;
    for (std::size_t k = 1; k < a.size(); ++k) {
        Int acc = 0;
        for (std::size_t j = 1; j <= k; ++j) {
            if (a[j] != 0) acc += a[j] * b[k - j];
        }
        b[k] = -c0 * acc;
    }
    return IntSeries(std::move(b), s.truncation());
}

IntSeries substitute_neg(const IntSeries& s) {
    std::vector<Int> coeffs = s.coeffs();
    for (std::size_t k = 1; k < coeffs.size(); k += 2) coeffs[k] = -coeffs[k];
    return IntSeries(std::move(coeffs), s.truncation());
}

RationalFn::RationalFn(IntPoly numerator, IntPoly denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_.coeff(0) != 1)
        throw Error(ErrorKind::NonUnitConstantTerm, "denominator " + to_string(den_) + " must have constant term 1");
}

IntSeries RationalFn::expand(std::size_t truncation) const {
    return num_ * inverse(IntSeries::from_poly(den_, truncation));
}

std::string to_string(const IntPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
        if (p.coeffs()[k] == 0) continue;
        append_term(os, p.coeffs()[k], k, first);
        first = false;
    }
    return os.str();
}

std::string to_string(const IntSeries& s) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < s.coeffs().size(); ++k) {
        if (s[k] == 0) continue;
        append_term(os, s[k], k, first);
        first = false;
    }
    if (first) os << "0";
    os << " + O(t^" << s.truncation() + 1 << ")";
    return os.str();
}

}  // namespace laygraph
