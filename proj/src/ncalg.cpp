#include "cordalg/ncalg.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "cordalg/errors.hpp"

namespace cordalg::nc {

namespace {

std::set<std::string>& invertible_registry() {
    static std::set<std::string> reg{"l", "m", "a"};
    return reg;
}

}  // namespace

bool is_invertible(const std::string& name) { return invertible_registry().count(name) > 0; }
void declare_invertible(const std::string& name) { invertible_registry().insert(name); }

void NcWord::push(const std::string& name, int exp) {
    if (exp == 0) return;
    if (!runs_.empty() && runs_.back().first == name) {
        runs_.back().second += exp;
        if (runs_.back().second == 0) runs_.pop_back();
        return;
    }
    runs_.emplace_back(name, exp);
}

void NcWord::normalize() {
    bool changed = true;
    while (changed) {
        changed = false;
        // merge adjacent equal-symbol runs, drop zero exponents
        std::vector<std::pair<std::string, int>> merged;
        for (auto& [name, exp] : runs_) {
            if (exp == 0) {
                changed = true;
                continue;
            }
            if (!merged.empty() && merged.back().first == name) {
                merged.back().second += exp;
                changed = true;
                if (merged.back().second == 0) merged.pop_back();
            } else {
                merged.emplace_back(name, exp);
            }
        }
        runs_ = std::move(merged);

        // sort maximal l/m blocks to l^p m^q (the two symbols commute)
        auto is_lm = [](const std::string& n) { return n == "l" || n == "m"; };
        std::vector<std::pair<std::string, int>> out;
        std::size_t k = 0;
        while (k < runs_.size()) {
            if (!is_lm(runs_[k].first)) {
                out.push_back(runs_[k++]);
                continue;
            }
            std::size_t end = k;
            int pl = 0, pm = 0;
            while (end < runs_.size() && is_lm(runs_[end].first)) {
                (runs_[end].first == "l" ? pl : pm) += runs_[end].second;
                ++end;
            }
            std::vector<std::pair<std::string, int>> canon;
            if (pl != 0) canon.emplace_back("l", pl);
            if (pm != 0) canon.emplace_back("m", pm);
            if (canon.size() != end - k ||
                !std::equal(canon.begin(), canon.end(), runs_.begin() + static_cast<long>(k)))
                changed = true;
            out.insert(out.end(), canon.begin(), canon.end());
            k = end;
        }
        runs_ = std::move(out);
    }
}

NcWord NcWord::sym(const std::string& name, int exp) {
    if (exp < 0 && !is_invertible(name))
        throw NonInvertibleSymbol("symbol " + name + " has no declared inverse");
    NcWord w;
    w.push(name, exp);
    w.normalize();
    return w;
}

NcWord NcWord::operator*(const NcWord& other) const {
    NcWord r = *this;
    for (auto& [name, exp] : other.runs_) r.push(name, exp);
    r.normalize();
    return r;
}

NcWord NcWord::inverse() const {
    NcWord r;
    for (auto it = runs_.rbegin(); it != runs_.rend(); ++it) {
        if (!is_invertible(it->first))
            throw NonInvertibleSymbol("symbol " + it->first + " has no declared inverse");
        r.push(it->first, -it->second);
    }
    r.normalize();
    return r;
}

std::string NcWord::str() const {
    if (runs_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (auto& [name, exp] : runs_) {
        if (!first) os << "*";
        first = false;
        os << name;
        if (exp != 1) os << "^" << exp;
    }
    return os.str();
}

NcPoly NcPoly::operator+(const NcPoly& other) const {
    NcPoly r = *this;
    for (const auto& w : other.words_) {
        auto [it, fresh] = r.words_.insert(w);
        if (!fresh) r.words_.erase(it);
    }
    return r;
}

NcPoly NcPoly::operator*(const NcPoly& other) const {
    NcPoly r;
    for (const auto& a : words_)
        for (const auto& b : other.words_) r = r + NcPoly(a * b);
    return r;
}

std::string NcPoly::str() const {
    if (words_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& w : words_) {
        if (!first) os << "+";
        first = false;
        os << w.str();
    }
    return os.str();
}

NcPoly substitute(const NcPoly& p, const std::map<std::string, NcPoly>& images) {
    NcPoly out;
    for (const auto& w : p.words()) {
        NcPoly acc = NcPoly::one();
        for (auto& [name, exp] : w.runs()) {
            auto it = images.find(name);
            if (it == images.end()) throw MissingImage("no image for symbol " + name);
            NcPoly base = it->second;
            int count = exp;
            if (exp < 0) {
                if (base.words().size() != 1)
                    throw NonInvertibleImage("image of inverted symbol " + name +
                                             " is not a single word");
                base = NcPoly(base.words().begin()->inverse());
                count = -exp;
            }
            for (int k = 0; k < count; ++k) acc = acc * base;
        }
        out = out + acc;
    }
    return out;
}

Mat2 Mat2::add(const Mat2& o) const {
    Mat2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r.e[i][j] = e[i][j] ^ o.e[i][j];
    return r;
}

Mat2 Mat2::mul(const Mat2& o) const {
    Mat2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            r.e[i][j] = (e[i][0] & o.e[0][j]) ^ (e[i][1] & o.e[1][j]);
    return r;
}

Mat2 Mat2::inverse() const {
    if (det() == 0) throw SingularImage("matrix image is singular");
    // over GF(2) with det 1 the adjugate is the inverse
    Mat2 r;
    r.e[0][0] = e[1][1];
    r.e[0][1] = e[0][1];
    r.e[1][0] = e[1][0];
    r.e[1][1] = e[0][0];
    return r;
}

std::string Mat2::str() const {
    std::ostringstream os;
    os << "[[" << e[0][0] << "," << e[0][1] << "],[" << e[1][0] << "," << e[1][1] << "]]";
    return os.str();
}

Mat2 eval(const NcPoly& p, const std::map<std::string, Mat2>& rep, MatrixConvention conv) {
    Mat2 total;
    for (const auto& w : p.words()) {
        std::vector<Mat2> letters;
        for (auto& [name, exp] : w.runs()) {
            auto it = rep.find(name);
            if (it == rep.end()) throw MissingImage("no matrix for symbol " + name);
            Mat2 base = it->second;
            int count = exp;
            if (exp < 0) {
                base = base.inverse();
                count = -exp;
            }
            for (int k = 0; k < count; ++k) letters.push_back(base);
        }
        Mat2 prod = Mat2::identity();
        if (conv == MatrixConvention::LeftToRight) {
            for (const auto& m : letters) prod = prod.mul(m);
        } else {
            for (auto it = letters.rbegin(); it != letters.rend(); ++it) prod = prod.mul(*it);
        }
        total = total.add(prod);
    }
    return total;
}

namespace {

using Perm = std::array<int, 3>;
constexpr Perm PID{0, 1, 2};
constexpr Perm T1{1, 0, 2};   // elementary braid a
constexpr Perm T2{0, 2, 1};   // elementary braid m
constexpr Perm PDELTA{2, 1, 0};

// braid composition "u then v"
Perm pthen(const Perm& u, const Perm& v) {
    return Perm{v[static_cast<std::size_t>(u[0])], v[static_cast<std::size_t>(u[1])],
                v[static_cast<std::size_t>(u[2])]};
}

int inversions(const Perm& p) {
    int c = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (p[static_cast<std::size_t>(i)] > p[static_cast<std::size_t>(j)]) ++c;
    return c;
}

Perm letter(int i) { return i == 1 ? T1 : T2; }

bool left_descent(const Perm& p, int i) { return inversions(pthen(letter(i), p)) < inversions(p); }
bool right_descent(const Perm& p, int i) { return inversions(pthen(p, letter(i))) < inversions(p); }

// conjugation by Delta (swaps the two elementary braids)
Perm tau(const Perm& p) { return pthen(pthen(PDELTA, p), PDELTA); }

}  // namespace

bool B3NormalForm::operator<(const B3NormalForm& o) const {
    if (delta_power != o.delta_power) return delta_power < o.delta_power;
    return factors < o.factors;
}

std::string B3NormalForm::str() const {
    static const std::map<Perm, std::string> names{
        {PID, "e"},          {T1, "a"},           {T2, "m"},
        {Perm{2, 0, 1}, "am"}, {Perm{1, 2, 0}, "ma"}, {PDELTA, "ama"}};
    std::ostringstream os;
    os << "D^" << delta_power;
    for (const auto& f : factors) os << " * " << names.at(f);
    return os.str();
}

B3NormalForm b3_normal_form(const NcWord& w) {
    int dpow = 0;
    std::vector<Perm> pos;
    for (auto& [name, exp] : w.runs()) {
        int i;
        if (name == "a") i = 1;
        else if (name == "m") i = 2;
        else throw Error("braid normal form needs words over a and m only");
        int count = exp < 0 ? -exp : exp;
        for (int k = 0; k < count; ++k) {
            if (exp > 0) {
                pos.push_back(letter(i));
            } else {
                // x^-1 = Delta^-1 * (Delta x^-1); slide the Delta^-1 to
                // the front, conjugating the factors gathered so far
                --dpow;
                for (auto& f : pos) f = tau(f);
                pos.push_back(pthen(PDELTA, letter(i)));  // Delta then x^-1
            }
        }
    }

    // left-weighted normalization: push weight from each factor into its
    // left neighbour until every adjacent pair satisfies S(b) <= F(a)
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t k = 0; k + 1 < pos.size(); ++k) {
            Perm &a = pos[k], &b = pos[k + 1];
            bool moved = true;
            while (moved) {
                moved = false;
                for (int i = 1; i <= 2; ++i) {
                    if (left_descent(b, i) && !right_descent(a, i)) {
                        a = pthen(a, letter(i));
                        b = pthen(letter(i), b);
                        moved = changed = true;
                    }
                }
            }
        }
        std::size_t before = pos.size();
        pos.erase(std::remove(pos.begin(), pos.end(), PID), pos.end());
        if (pos.size() != before) changed = true;
    }
    while (!pos.empty() && pos.front() == PDELTA) {
        ++dpow;
        pos.erase(pos.begin());
    }
    return B3NormalForm{dpow, std::move(pos)};
}

bool group_algebra_equal(const NcPoly& p, const NcPoly& q) {
    std::set<B3NormalForm> acc;
    auto toggle = [&](const NcWord& w) {
        auto nf = b3_normal_form(w);
        auto [it, fresh] = acc.insert(nf);
        if (!fresh) acc.erase(it);
    };
    for (const auto& w : p.words()) toggle(w);
    for (const auto& w : q.words()) toggle(w);
    return acc.empty();
}

std::vector<NcPoly> trefoil_relators() {
    auto l = [](int e = 1) { return NcPoly::sym("l", e); };
    auto m = [](int e = 1) { return NcPoly::sym("m", e); };
    auto s = [] { return NcPoly::sym("s"); };
    auto one = NcPoly::one();
    std::vector<NcPoly> rels;
    rels.push_back(l() * m() + m() * l());
    rels.push_back(l() * m(6) * s() + s() * l() * m(6));
    rels.push_back(one + m() + s() + l() * m(5) * s() * m(-3) * s() * m(-1));
    rels.push_back(one + m() + l() * m(4) * s() * m(-2) + l() * m(5) * s() * m(-2) * s() * m(-1));
    return rels;
}

std::map<std::string, NcPoly> trefoil_embedding() {
    auto a = [](int e = 1) { return NcPoly::sym("a", e); };
    auto m = [](int e = 1) { return NcPoly::sym("m", e); };
    std::map<std::string, NcPoly> phi;
    phi["m"] = m();
    phi["l"] = a() * m() * a(-1) * m() * a() * m(-3);
    phi["s"] = (NcPoly::one() + m()) * a() * m(-1) * a(-1);
    return phi;
}

std::map<std::string, Mat2> trefoil_matrix_rep() {
    std::map<std::string, Mat2> rep;
    rep["a"] = Mat2{{{{0, 1}, {1, 0}}}};
    rep["m"] = Mat2{{{{1, 1}, {0, 1}}}};
    return rep;
}

}  // namespace cordalg::nc
