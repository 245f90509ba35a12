#include "pcw/poly.hpp"

#include <algorithm>
#include <numeric>

#include <json.hpp>

#include "pcw/errors.hpp"

namespace pcw {

int total_degree(const ExponentVector& e) {
    return std::accumulate(e.begin(), e.end(), 0);
}

ExponentVector add_exponents(const ExponentVector& a, const ExponentVector& b) {
    if (a.size() != b.size()) throw DimensionError("exponent vector size mismatch");
    ExponentVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

bool GradedLex::operator()(const ExponentVector& a, const ExponentVector& b) const {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return a < b;
}

SparsePolynomial SparsePolynomial::constant(int nvars, const Integer& c) {
    SparsePolynomial p(nvars);
    p.add_term(ExponentVector(nvars, 0), c);
    return p;
}

SparsePolynomial SparsePolynomial::variable(int nvars, int v) {
    if (v < 0 || v >= nvars) throw DimensionError("variable index out of range");
    SparsePolynomial p(nvars);
    ExponentVector e(nvars, 0);
    e[v] = 1;
    p.add_term(e, 1);
    return p;
}

Integer SparsePolynomial::coefficient(const ExponentVector& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Integer(0) : it->second;
}

Integer SparsePolynomial::constant_term() const {
    return coefficient(ExponentVector(nvars_, 0));
}

int SparsePolynomial::degree() const {
    if (terms_.empty()) return -1;
    return total_degree(terms_.rbegin()->first); // graded order: last is largest
}

void SparsePolynomial::add_term(const ExponentVector& e, const Integer& c) {
    if (static_cast<int>(e.size()) != nvars_)
        throw DimensionError("exponent vector has " + std::to_string(e.size()) +
                             " entries, polynomial has " + std::to_string(nvars_) +
                             " variables");
    for (int x : e)
        if (x < 0) throw DomainError("negative exponent");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

SparsePolynomial SparsePolynomial::operator+(const SparsePolynomial& other) const {
    SparsePolynomial out = *this;
    out += other;
    return out;
}

SparsePolynomial& SparsePolynomial::operator+=(const SparsePolynomial& other) {
    if (nvars_ != other.nvars_) throw DimensionError("variable count mismatch");
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

SparsePolynomial SparsePolynomial::operator-(const SparsePolynomial& other) const {
    if (nvars_ != other.nvars_) throw DimensionError("variable count mismatch");
    SparsePolynomial out = *this;
    for (const auto& [e, c] : other.terms_) out.add_term(e, -c);
    return out;
}

SparsePolynomial SparsePolynomial::operator*(const SparsePolynomial& other) const {
    return multiply_truncated(other, -1);
}

bool SparsePolynomial::operator==(const SparsePolynomial& other) const {
    return nvars_ == other.nvars_ &&
           std::equal(terms_.begin(), terms_.end(), other.terms_.begin(),
                      other.terms_.end());
}

SparsePolynomial SparsePolynomial::multiply_truncated(const SparsePolynomial& other,
                                                      int max_degree) const {
    if (nvars_ != other.nvars_) throw DimensionError("variable count mismatch");
    SparsePolynomial out(nvars_);
    for (const auto& [ea, ca] : terms_) {
        int da = total_degree(ea);
        if (max_degree >= 0 && da > max_degree) break; // graded order
        for (const auto& [eb, cb] : other.terms_) {
            if (max_degree >= 0 && da + total_degree(eb) > max_degree) break;
            out.add_term(add_exponents(ea, eb), ca * cb);
        }
    }
    return out;
}

SparsePolynomial SparsePolynomial::truncated(int max_degree) const {
    SparsePolynomial out(nvars_);
    for (const auto& [e, c] : terms_) {
        if (total_degree(e) > max_degree) break;
        out.add_term(e, c);
    }
    return out;
}

std::string SparsePolynomial::to_json() const {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& [e, c] : terms_) {
        nlohmann::ordered_json term;
        term["exponents"] = e;
        term["coeff"] = c.str();
        arr.push_back(std::move(term));
    }
    return arr.dump(2);
}

TruncatedSeries series_expand(const SparsePolynomial& f, int degree) {
    if (degree < 0) throw DomainError("truncation degree must be nonnegative");
    if (f.constant_term() != 1)
        throw DomainError("series inverse needs constant term 1, got " +
                          f.constant_term().str());
    // 1/f = sum_k g^k with g = 1 - f; g has no constant term, so g^k only
    // produces monomials of degree >= k and the sum below is finite.
    SparsePolynomial g = SparsePolynomial::constant(f.nvars(), 1) - f;
    g = g.truncated(degree);
    SparsePolynomial acc = SparsePolynomial::constant(f.nvars(), 1);
    SparsePolynomial power = SparsePolynomial::constant(f.nvars(), 1);
    for (int k = 1; k <= degree; ++k) {
        power = power.multiply_truncated(g, degree);
        if (power.is_zero()) break;
        acc += power;
    }
    return {std::move(acc), degree};
}

Integer coefficient_of(const TruncatedSeries& s, const ExponentVector& e) {
    if (total_degree(e) > s.degree)
        throw DomainError("monomial of degree " + std::to_string(total_degree(e)) +
                          " is beyond the truncation degree " +
                          std::to_string(s.degree));
    return s.poly.coefficient(e);
}

} // namespace pcw
