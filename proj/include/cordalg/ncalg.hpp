#pragma once

#include <array>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace cordalg::nc {

/// Symbols carrying a formal inverse.  l, m and a start out invertible; s
/// does not.  Building or inverting a word through a non-invertible symbol
/// raises NonInvertibleSymbol.
bool is_invertible(const std::string& name);
void declare_invertible(const std::string& name);

/// Freely reduced word in named symbols with integer exponents; adjacent
/// runs of the same symbol are merged and zero exponents dropped, and any
/// maximal block containing only l and m letters is sorted to l^p m^q
/// (those two symbols commute).  The empty word is the identity.
class NcWord {
public:
    NcWord() = default;
    static NcWord sym(const std::string& name, int exp = 1);

    const std::vector<std::pair<std::string, int>>& runs() const { return runs_; }
    bool is_identity() const { return runs_.empty(); }

    NcWord operator*(const NcWord& other) const;
    NcWord inverse() const;

    auto operator<=>(const NcWord&) const = default;

    std::string str() const;  // "l*m^6*s", "1" for the identity

private:
    void push(const std::string& name, int exp);
    void normalize();
    std::vector<std::pair<std::string, int>> runs_;
};

/// GF(2) formal sum of words; addition is symmetric difference.
class NcPoly {
public:
    NcPoly() = default;
    explicit NcPoly(NcWord w) : words_{std::move(w)} {}

    static NcPoly zero() { return {}; }
    static NcPoly one() { return NcPoly(NcWord{}); }
    static NcPoly sym(const std::string& name, int exp = 1) {
        return NcPoly(NcWord::sym(name, exp));
    }

    bool is_zero() const { return words_.empty(); }
    const std::set<NcWord>& words() const { return words_; }

    NcPoly operator+(const NcPoly& other) const;
    NcPoly operator*(const NcPoly& other) const;

    bool operator==(const NcPoly&) const = default;

    std::string str() const;

private:
    std::set<NcWord> words_;
};

/// Substitutes symbols by polynomials.  A symbol occurring with a negative
/// exponent needs an invertible image: a single word (whose inverse is the
/// reversed word with negated exponents).  Missing images raise
/// MissingImage; non-word images of inverted symbols raise
/// NonInvertibleImage.
NcPoly substitute(const NcPoly& p, const std::map<std::string, NcPoly>& images);

/// 2x2 matrix over GF(2).
struct Mat2 {
    std::array<std::array<int, 2>, 2> e{{{0, 0}, {0, 0}}};

    static Mat2 identity() { return Mat2{{{{1, 0}, {0, 1}}}}; }
    bool operator==(const Mat2&) const = default;

    Mat2 add(const Mat2& o) const;
    Mat2 mul(const Mat2& o) const;
    int det() const { return (e[0][0] & e[1][1]) ^ (e[0][1] & e[1][0]); }
    Mat2 inverse() const;  // throws SingularImage when det == 0

    std::string str() const;  // "[[a,b],[c,d]]"
};

/// Garside normal form Delta^power * factor_1 * ... * factor_k in the
/// braid group B3 = <a, m | mam = ama> (a, m the two elementary braids).
/// Factors are the underlying permutations of the canonical left-weighted
/// permutation braids, each different from the identity and from Delta.
struct B3NormalForm {
    int delta_power = 0;
    std::vector<std::array<int, 3>> factors;

    bool operator==(const B3NormalForm&) const = default;
    bool operator<(const B3NormalForm&) const;

    std::string str() const;  // "D^p * s1 * s1s2" style listing
};

/// Canonical form of a word over {a, m} in B3; words are equal in the
/// group iff their normal forms are identical.
B3NormalForm b3_normal_form(const NcWord& w);

/// Equality in the group algebra GF(2)[B3]: p + q cancels to zero after
/// every word is replaced by its Garside normal form.
bool group_algebra_equal(const NcPoly& p, const NcPoly& q);

/// Letter multiplication order when a word is evaluated as matrices.
enum class MatrixConvention { LeftToRight, RightToLeft };

/// Evaluates under a matrix assignment; inverted symbols need invertible
/// images (SingularImage otherwise), absent symbols raise MissingImage.
Mat2 eval(const NcPoly& p, const std::map<std::string, Mat2>& rep, MatrixConvention conv);

/// The noncommutative cord presentation of the trefoil: relators in the
/// symbols l (longitude), m (meridian), s, and the embedding of that
/// presentation into words in a and m.
std::vector<NcPoly> trefoil_relators();
std::map<std::string, NcPoly> trefoil_embedding();
std::map<std::string, Mat2> trefoil_matrix_rep();

}  // namespace cordalg::nc
