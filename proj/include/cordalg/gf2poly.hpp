#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cordalg {

/// Cord generator a_{i,j}, normalized so that i < j.  The diagonal symbol
/// a_{ii} is identified with zero and the transpose a_{ji} is folded to
/// a_{ij}, so neither is ever represented.
struct Generator {
    int i = 0;
    int j = 0;

    /// Folds (i, j) into canonical form; returns nullopt for i == j (the
    /// zero symbol a_{ii}).
    static std::optional<Generator> make(int i, int j);

    auto operator<=>(const Generator&) const = default;

    std::string str() const;  // "a_{i,j}"
};

/// Variable id encoding (i << 16) | j.  Numeric order on VarId equals
/// lexicographic order on the pair (i, j), which is the fixed generator
/// ordering of the whole library.
using VarId = std::uint32_t;

VarId var_id(const Generator& g);
Generator var_gen(VarId v);

/// Sparse monomial: sorted (variable, exponent) pairs, exponents >= 1.
struct Monomial {
    std::vector<std::pair<VarId, std::uint32_t>> factors;

    bool operator==(const Monomial&) const = default;

    std::uint32_t degree() const;
    bool is_one() const { return factors.empty(); }

    static Monomial one() { return {}; }
    static Monomial var(VarId v, std::uint32_t exp = 1) { return Monomial{{{v, exp}}}; }

    Monomial times(const Monomial& other) const;
    /// Quotient this / d, or nullopt if d does not divide this.
    std::optional<Monomial> divide(const Monomial& d) const;
    bool coprime(const Monomial& other) const;
    static Monomial lcm(const Monomial& a, const Monomial& b);

    std::string str() const;  // "a_{1,2}^2*a_{3,4}", "1" for the empty monomial
};

/// Graded reverse lexicographic comparison over the VarId ordering.
/// Returns true when a < b.
bool grevlex_less(const Monomial& a, const Monomial& b);

/// Polynomial over GF(2): a set of monomials with implicit coefficient 1,
/// stored sorted in descending grevlex order.  Addition is symmetric
/// difference.
class Gf2Poly {
public:
    Gf2Poly() = default;
    explicit Gf2Poly(Monomial m) : terms_{std::move(m)} {}

    static Gf2Poly zero() { return {}; }
    static Gf2Poly one() { return Gf2Poly(Monomial::one()); }
    /// a_{i,j} as a polynomial; zero when i == j.
    static Gf2Poly var(int i, int j);
    /// Builds from an arbitrary monomial list; duplicates cancel in pairs.
    static Gf2Poly from_terms(std::vector<Monomial> terms);

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const std::vector<Monomial>& terms() const { return terms_; }

    /// Leading monomial in grevlex; polynomial must be nonzero.
    const Monomial& leading() const { return terms_.front(); }

    bool operator==(const Gf2Poly&) const = default;

    friend Gf2Poly operator+(const Gf2Poly& a, const Gf2Poly& b);
    friend Gf2Poly operator*(const Gf2Poly& a, const Gf2Poly& b);
    Gf2Poly& operator+=(const Gf2Poly& b);

    /// Multiplies by a single monomial.
    Gf2Poly shifted(const Monomial& m) const;

    /// Sorted list of distinct variables occurring in the polynomial.
    std::vector<VarId> variables() const;

    std::string str() const;  // canonical textual form, "0" when zero

private:
    friend class GroebnerBasis;
    std::vector<Monomial> terms_;  // descending grevlex, no duplicates
};

/// Resource limits for buchberger().  A computation that would exceed the
/// limits throws ResourceBudgetExceeded instead of running away.
struct Budget {
    std::uint64_t max_spairs = 1'000'000;
    std::uint64_t max_monomials = 10'000'000;
};

/// Reduced Groebner basis under grevlex; normal_form against it decides
/// membership in the generated ideal.
class GroebnerBasis {
public:
    GroebnerBasis() = default;

    const std::vector<Gf2Poly>& polys() const { return polys_; }

    /// Unique remainder of p modulo the basis.
    Gf2Poly normal_form(const Gf2Poly& p) const;

    /// Computes the reduced basis of the ideal generated by `relations`.
    static GroebnerBasis compute(std::vector<Gf2Poly> relations, const Budget& budget = {});

private:
    void index_insert(std::size_t k);
    /// Index of a basis element whose leading monomial divides m, or npos.
    std::size_t find_divisor(const Monomial& m) const;
    /// normal_form with an optional work budget (monomials touched during
    /// reduction); decrements *work and throws ResourceBudgetExceeded at zero.
    Gf2Poly reduce_budgeted(const Gf2Poly& p, std::uint64_t* work) const;

    std::vector<Gf2Poly> polys_;  // sorted by leading monomial ascending
    // divisor lookup: basis indices bucketed by smallest variable of the
    // leading monomial (degree-0 leading terms cannot occur in a reduced
    // nontrivial basis except the unit ideal)
    std::vector<std::pair<VarId, std::vector<std::size_t>>> buckets_;
};

}  // namespace cordalg
