#ifndef PCW_POLY_HPP
#define PCW_POLY_HPP

#include <map>
#include <string>
#include <vector>

#include "pcw/rational.hpp"

namespace pcw {

// Exponent vector of a monomial; entry v is the power of u_{v+1}.
using ExponentVector = std::vector<int>;

int total_degree(const ExponentVector& e);
ExponentVector add_exponents(const ExponentVector& a, const ExponentVector& b);

// Graded lexicographic: lower total degree first, then lexicographic.
struct GradedLex {
    bool operator()(const ExponentVector& a, const ExponentVector& b) const;
};

// Multivariate polynomial with arbitrary-precision integer coefficients,
// stored sparsely in graded-lex order.  Zero coefficients are never kept.
class SparsePolynomial {
public:
    using TermMap = std::map<ExponentVector, Integer, GradedLex>;

    explicit SparsePolynomial(int nvars = 0) : nvars_(nvars) {}
    static SparsePolynomial constant(int nvars, const Integer& c);
    static SparsePolynomial variable(int nvars, int v);

    int nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Integer coefficient(const ExponentVector& e) const;
    Integer constant_term() const;
    int degree() const; // max total degree, -1 for the zero polynomial

    void add_term(const ExponentVector& e, const Integer& c);

    SparsePolynomial operator+(const SparsePolynomial& other) const;
    SparsePolynomial operator-(const SparsePolynomial& other) const;
    SparsePolynomial operator*(const SparsePolynomial& other) const;
    SparsePolynomial& operator+=(const SparsePolynomial& other);
    bool operator==(const SparsePolynomial& other) const;

    // Product with every monomial above max_degree dropped.
    SparsePolynomial multiply_truncated(const SparsePolynomial& other,
                                        int max_degree) const;
    SparsePolynomial truncated(int max_degree) const;

    std::string to_json() const; // [{"exponents":[...],"coeff":"..."}] graded-lex

private:
    int nvars_;
    TermMap terms_;
};

// Polynomial identities that only hold modulo monomials of degree > degree.
struct TruncatedSeries {
    SparsePolynomial poly;
    int degree = 0;

    std::string to_json() const { return poly.to_json(); }
};

// Multiplicative inverse of f as a power series, truncated past total degree
// D.  The constant term of f must be 1.
TruncatedSeries series_expand(const SparsePolynomial& f, int degree);

// Coefficient lookup that refuses to answer past the truncation degree:
// absent monomials below it are genuinely 0, beyond it unknown.
Integer coefficient_of(const TruncatedSeries& s, const ExponentVector& e);

} // namespace pcw

#endif
