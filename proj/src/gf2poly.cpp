#include "cordalg/gf2poly.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>
#include <cstdio>
#include <cstdlib>

#include "cordalg/errors.hpp"

namespace cordalg {

std::optional<Generator> Generator::make(int i, int j) {
    if (i == j) return std::nullopt;
    if (i > j) std::swap(i, j);
    return Generator{i, j};
}

std::string Generator::str() const {
    std::ostringstream os;
    os << "a_{" << i << "," << j << "}";
    return os.str();
}

VarId var_id(const Generator& g) {
    return (static_cast<VarId>(g.i) << 16) | static_cast<VarId>(g.j);
}

Generator var_gen(VarId v) {
    return Generator{static_cast<int>(v >> 16), static_cast<int>(v & 0xffff)};
}

std::uint32_t Monomial::degree() const {
    std::uint32_t d = 0;
    for (auto& [v, e] : factors) d += e;
    return d;
}

Monomial Monomial::times(const Monomial& other) const {
    Monomial r;
    r.factors.reserve(factors.size() + other.factors.size());
    auto a = factors.begin(), b = other.factors.begin();
    while (a != factors.end() && b != other.factors.end()) {
        if (a->first < b->first) r.factors.push_back(*a++);
        else if (b->first < a->first) r.factors.push_back(*b++);
        else {
            r.factors.emplace_back(a->first, a->second + b->second);
            ++a, ++b;
        }
    }
    r.factors.insert(r.factors.end(), a, factors.end());
    r.factors.insert(r.factors.end(), b, other.factors.end());
    return r;
}

std::optional<Monomial> Monomial::divide(const Monomial& d) const {
    Monomial q;
    auto a = factors.begin();
    for (auto& [v, e] : d.factors) {
        while (a != factors.end() && a->first < v) q.factors.push_back(*a++);
        if (a == factors.end() || a->first != v || a->second < e) return std::nullopt;
        if (a->second > e) q.factors.emplace_back(v, a->second - e);
        ++a;
    }
    q.factors.insert(q.factors.end(), a, factors.end());
    return q;
}

bool Monomial::coprime(const Monomial& other) const {
    auto a = factors.begin(), b = other.factors.begin();
    while (a != factors.end() && b != other.factors.end()) {
        if (a->first < b->first) ++a;
        else if (b->first < a->first) ++b;
        else return false;
    }
    return true;
}

Monomial Monomial::lcm(const Monomial& x, const Monomial& y) {
    Monomial r;
    auto a = x.factors.begin(), b = y.factors.begin();
    while (a != x.factors.end() && b != y.factors.end()) {
        if (a->first < b->first) r.factors.push_back(*a++);
        else if (b->first < a->first) r.factors.push_back(*b++);
        else {
            r.factors.emplace_back(a->first, std::max(a->second, b->second));
            ++a, ++b;
        }
    }
    r.factors.insert(r.factors.end(), a, x.factors.end());
    r.factors.insert(r.factors.end(), b, y.factors.end());
    return r;
}

std::string Monomial::str() const {
    if (factors.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (auto& [v, e] : factors) {
        if (!first) os << "*";
        first = false;
        os << var_gen(v).str();
        if (e > 1) os << "^" << e;
    }
    return os.str();
}

bool grevlex_less(const Monomial& a, const Monomial& b) {
    std::uint32_t da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    // reverse lexicographic tie-break: scan from the largest variable down;
    // at the first variable where exponents differ, the monomial with the
    // larger exponent is the smaller monomial
    auto ia = a.factors.rbegin(), ib = b.factors.rbegin();
    while (ia != a.factors.rend() && ib != b.factors.rend()) {
        if (ia->first > ib->first) return true;   // a has extra weight on a later var
        if (ib->first > ia->first) return false;
        if (ia->second != ib->second) return ia->second > ib->second;
        ++ia, ++ib;
    }
    // equal degrees and one list exhausted simultaneously (else degrees differ)
    return false;
}

namespace {

struct GrevlexDesc {
    bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_less(b, a); }
};

// cancels adjacent equal monomials in pairs; input sorted descending
void cancel_sorted(std::vector<Monomial>& v) {
    std::size_t out = 0;
    std::size_t k = 0;
    while (k < v.size()) {
        std::size_t run = k + 1;
        while (run < v.size() && v[run] == v[k]) ++run;
        if ((run - k) % 2 == 1) {
            if (out != k) v[out] = std::move(v[k]);
            ++out;
        }
        k = run;
    }
    v.resize(out);
}

}  // namespace

Gf2Poly Gf2Poly::var(int i, int j) {
    auto g = Generator::make(i, j);
    if (!g) return zero();
    return Gf2Poly(Monomial::var(var_id(*g)));
}

Gf2Poly Gf2Poly::from_terms(std::vector<Monomial> terms) {
    std::sort(terms.begin(), terms.end(), GrevlexDesc{});
    cancel_sorted(terms);
    Gf2Poly p;
    p.terms_ = std::move(terms);
    return p;
}

Gf2Poly operator+(const Gf2Poly& a, const Gf2Poly& b) {
    Gf2Poly r;
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto ia = a.terms_.begin(), ib = b.terms_.begin();
    while (ia != a.terms_.end() && ib != b.terms_.end()) {
        if (*ia == *ib) { ++ia, ++ib; continue; }  // cancellation over GF(2)
        if (grevlex_less(*ib, *ia)) r.terms_.push_back(*ia++);
        else r.terms_.push_back(*ib++);
    }
    r.terms_.insert(r.terms_.end(), ia, a.terms_.end());
    r.terms_.insert(r.terms_.end(), ib, b.terms_.end());
    return r;
}

Gf2Poly& Gf2Poly::operator+=(const Gf2Poly& b) {
    *this = *this + b;
    return *this;
}

Gf2Poly operator*(const Gf2Poly& a, const Gf2Poly& b) {
    std::vector<Monomial> terms;
    terms.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& ma : a.terms_)
        for (const auto& mb : b.terms_) terms.push_back(ma.times(mb));
    return Gf2Poly::from_terms(std::move(terms));
}

Gf2Poly Gf2Poly::shifted(const Monomial& m) const {
    if (m.is_one()) return *this;
    Gf2Poly r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back(t.times(m));
    // multiplying by a fixed monomial preserves the grevlex order
    return r;
}

std::vector<VarId> Gf2Poly::variables() const {
    std::set<VarId> vs;
    for (const auto& t : terms_)
        for (auto& [v, e] : t.factors) vs.insert(v);
    return {vs.begin(), vs.end()};
}

std::string Gf2Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    for (std::size_t k = 0; k < terms_.size(); ++k) {
        if (k) os << "+";
        os << terms_[k].str();
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Groebner machinery

void GroebnerBasis::index_insert(std::size_t k) {
    const Monomial& lm = polys_[k].leading();
    VarId v = lm.is_one() ? 0 : lm.factors.front().first;
    auto it = std::lower_bound(buckets_.begin(), buckets_.end(), v,
                               [](const auto& b, VarId x) { return b.first < x; });
    if (it == buckets_.end() || it->first != v)
        it = buckets_.insert(it, {v, {}});
    it->second.push_back(k);
}

std::size_t GroebnerBasis::find_divisor(const Monomial& m) const {
    constexpr std::size_t npos = static_cast<std::size_t>(-1);
    // a unit basis element divides everything
    if (!buckets_.empty() && buckets_.front().first == 0)
        return buckets_.front().second.front();
    for (auto& [v, e] : m.factors) {
        auto it = std::lower_bound(buckets_.begin(), buckets_.end(), v,
                                   [](const auto& b, VarId x) { return b.first < x; });
        if (it == buckets_.end() || it->first != v) continue;
        for (std::size_t k : it->second)
            if (m.divide(polys_[k].leading())) return k;
    }
    return npos;
}

Gf2Poly GroebnerBasis::normal_form(const Gf2Poly& p) const {
    return reduce_budgeted(p, nullptr);
}

namespace {

// Geobucket accumulator for polynomial reduction over GF(2): terms live in
// a few descending, duplicate-free lists of geometrically growing size, so
// adding a reducer tail costs the size of that tail (amortized) instead of
// the size of the whole working polynomial.
class Geobucket {
public:
    void add(std::vector<Monomial> terms) {
        if (terms.empty()) return;
        std::size_t k = 0;
        while (cap(k) < terms.size()) ++k;
        for (;; ++k) {
            if (k >= buckets_.size()) buckets_.resize(k + 1);
            Bucket& b = buckets_[k];
            if (b.start == b.terms.size()) {
                b.terms = std::move(terms);
                b.start = 0;
                return;
            }
            terms = merge_cancel(b, terms);
            b.terms.clear();
            b.start = 0;
            if (terms.empty()) return;
            if (terms.size() <= cap(k)) {
                b.terms = std::move(terms);
                return;
            }
        }
    }

    // Removes and returns the grevlex-largest monomial with odd multiplicity.
    std::optional<Monomial> pop_leading() {
        for (;;) {
            Bucket* best = nullptr;
            for (auto& b : buckets_)
                if (b.start < b.terms.size() &&
                    (!best || grevlex_less(best->terms[best->start], b.terms[b.start])))
                    best = &b;
            if (!best) return std::nullopt;
            Monomial m = best->terms[best->start];  // copy: the advance loop below compares against it
            int parity = 0;
            for (auto& b : buckets_)
                if (b.start < b.terms.size() && b.terms[b.start] == m) ++b.start, parity ^= 1;
            if (parity) return m;
        }
    }

private:
    struct Bucket {
        std::vector<Monomial> terms;  // descending, duplicate-free
        std::size_t start = 0;        // terms before start are consumed
    };

    static std::size_t cap(std::size_t k) { return std::size_t{4} << (2 * k); }

    static std::vector<Monomial> merge_cancel(Bucket& a, std::vector<Monomial>& b) {
        std::vector<Monomial> r;
        r.reserve((a.terms.size() - a.start) + b.size());
        std::size_t ia = a.start, ib = 0;
        while (ia < a.terms.size() && ib < b.size()) {
            if (a.terms[ia] == b[ib]) ++ia, ++ib;  // cancellation over GF(2)
            else if (grevlex_less(b[ib], a.terms[ia])) r.push_back(std::move(a.terms[ia++]));
            else r.push_back(std::move(b[ib++]));
        }
        while (ia < a.terms.size()) r.push_back(std::move(a.terms[ia++]));
        while (ib < b.size()) r.push_back(std::move(b[ib++]));
        return r;
    }

    std::vector<Bucket> buckets_;
};

}  // namespace

Gf2Poly GroebnerBasis::reduce_budgeted(const Gf2Poly& p, std::uint64_t* budget) const {
    constexpr std::size_t npos = static_cast<std::size_t>(-1);
    if (polys_.empty()) return p;
    Geobucket acc;
    acc.add(p.terms_);
    std::vector<Monomial> out;
    std::vector<Monomial> shifted;
    while (auto m = acc.pop_leading()) {
        std::size_t k = find_divisor(*m);
        if (k == npos) {
            // everything still in the buckets is strictly smaller, so the
            // popped terms come out in normal-form order
            out.push_back(std::move(*m));
            continue;
        }
        const std::vector<Monomial>& red = polys_[k].terms_;
        if (budget) {
            if (red.size() > *budget)
                throw ResourceBudgetExceeded("buchberger: monomial work budget exceeded");
            *budget -= red.size();
        }
        Monomial q = *m->divide(red.front());
        shifted.clear();
        shifted.reserve(red.size() - 1);
        for (std::size_t b = 1; b < red.size(); ++b) shifted.push_back(red[b].times(q));
        acc.add(std::move(shifted));
        shifted = {};
    }
    Gf2Poly r;
    r.terms_ = std::move(out);  // strictly descending by construction
    return r;
}

namespace {

struct Pair {
    std::size_t i, j;
    Monomial lcm;
    std::uint32_t deg;
};

struct PairOrder {
    // normal selection strategy: smallest lcm first
    bool operator()(const Pair& a, const Pair& b) const {
        if (a.deg != b.deg) return a.deg > b.deg;
        if (grevlex_less(a.lcm, b.lcm)) return false;
        if (grevlex_less(b.lcm, a.lcm)) return true;
        if (a.i != b.i) return a.i > b.i;
        return a.j > b.j;
    }
};

}  // namespace

GroebnerBasis GroebnerBasis::compute(std::vector<Gf2Poly> relations, const Budget& budget) {
    GroebnerBasis gb;
    const bool stats = std::getenv("CORDALG_GB_STATS") != nullptr;
    // shared work budget: every monomial touched while reducing counts
    std::uint64_t work_left = budget.max_monomials;

    auto rebuild_index = [&]() {
        gb.buckets_.clear();
        for (std::size_t k = 0; k < gb.polys_.size(); ++k) gb.index_insert(k);
    };

    // interreduction: rewrite every relation modulo the earlier (smaller)
    // ones and iterate to a fixpoint.  This performs the linear variable
    // elimination that collapses large cable ideals before any S-pairs
    // are formed.
    {
        std::vector<Gf2Poly> work;
        for (auto& r : relations)
            if (!r.is_zero()) work.push_back(std::move(r));
        bool changed = true;
        while (changed) {
            changed = false;
            std::sort(work.begin(), work.end(), [](const Gf2Poly& a, const Gf2Poly& b) {
                return grevlex_less(a.leading(), b.leading());
            });
            work.erase(std::unique(work.begin(), work.end()), work.end());
            gb.polys_.clear();
            gb.buckets_.clear();
            for (auto& p : work) {
                Gf2Poly r = gb.reduce_budgeted(p, &work_left);
                if (r != p) changed = true;
                if (r.is_zero()) continue;
                gb.polys_.push_back(std::move(r));
                gb.index_insert(gb.polys_.size() - 1);
            }
            work = gb.polys_;
            if (stats) {
                std::uint64_t terms = 0;
                for (const auto& p : work) terms += p.size();
                std::fprintf(stderr, "[gb] interreduce pass: %zu polys, %llu terms, work left %llu\n",
                             work.size(), (unsigned long long)terms,
                             (unsigned long long)work_left);
            }
        }
        rebuild_index();
    }

    // Buchberger main loop with Gebauer-Moeller pair pruning
    std::set<Pair, PairOrder> queue;
    std::vector<char> redundant(gb.polys_.size(), 0);
    auto divides = [](const Monomial& d, const Monomial& m) { return m.divide(d).has_value(); };

    // the Update routine: prunes the standing queue against the new element
    // t, then admits only the non-redundant new pairs (i, t)
    auto update_pairs = [&](std::size_t t) {
        const Monomial& lt = gb.polys_[t].leading();

        // queue maintenance is the dominant cost on runaway inputs, so it
        // draws from the same work budget as reduction
        std::uint64_t upkeep = queue.size() + 2 * t;
        if (work_left <= upkeep)
            throw ResourceBudgetExceeded("buchberger: monomial work budget exceeded");
        work_left -= upkeep;

        // old-pair criterion: (i, j) is superfluous once lt divides its lcm
        // while both mixed pairs (i, t), (j, t) have strictly smaller lcms
        for (auto it = queue.begin(); it != queue.end();) {
            if (divides(lt, it->lcm) &&
                Monomial::lcm(gb.polys_[it->i].leading(), lt) != it->lcm &&
                Monomial::lcm(gb.polys_[it->j].leading(), lt) != it->lcm)
                it = queue.erase(it);
            else
                ++it;
        }

        // candidate pairs, smallest lcm first
        std::vector<Pair> cand;
        for (std::size_t i = 0; i < t; ++i) {
            if (redundant[i]) continue;
            Monomial l = Monomial::lcm(gb.polys_[i].leading(), lt);
            cand.push_back(Pair{i, t, std::move(l), 0});
        }
        for (auto& c : cand) c.deg = c.lcm.degree();
        std::sort(cand.begin(), cand.end(), [](const Pair& a, const Pair& b) {
            if (a.deg != b.deg) return a.deg < b.deg;
            return grevlex_less(a.lcm, b.lcm);
        });

        // keep a pair only if no kept lcm divides its lcm; pairs with
        // coprime leading monomials are kept as killers but never queued
        std::vector<Pair> kept;
        for (auto& c : cand) {
            bool drop = false;
            for (const auto& k : kept)
                if (divides(k.lcm, c.lcm)) {
                    drop = true;
                    break;
                }
            if (!drop) kept.push_back(std::move(c));
        }
        for (auto& k : kept) {
            if (gb.polys_[k.i].leading().coprime(lt)) continue;  // product criterion
            queue.insert(std::move(k));
        }

        // older elements whose leading monomial lt divides are redundant for
        // future pair formation (they stay available as reducers)
        for (std::size_t i = 0; i < t; ++i)
            if (!redundant[i] && divides(lt, gb.polys_[i].leading())) redundant[i] = 1;
    };

    for (std::size_t t = 1; t < gb.polys_.size(); ++t) update_pairs(t);

    std::uint64_t spairs = 0;
    while (!queue.empty()) {
        Pair pr = *queue.rbegin();
        queue.erase(std::prev(queue.end()));

        if (++spairs > budget.max_spairs)
            throw ResourceBudgetExceeded("buchberger: S-pair budget exceeded");

        const Gf2Poly &f = gb.polys_[pr.i], &g = gb.polys_[pr.j];
        Gf2Poly s = f.shifted(*pr.lcm.divide(f.leading())) + g.shifted(*pr.lcm.divide(g.leading()));
        Gf2Poly r = gb.reduce_budgeted(s, &work_left);
        if (r.is_zero()) continue;

        gb.polys_.push_back(std::move(r));
        gb.index_insert(gb.polys_.size() - 1);
        redundant.push_back(0);
        update_pairs(gb.polys_.size() - 1);
        if (stats && gb.polys_.size() % 50 == 0)
            std::fprintf(stderr,
                         "[gb] main loop: %zu polys, queue %zu, spairs %llu, last size %zu deg %u, work left %llu\n",
                         gb.polys_.size(), queue.size(), (unsigned long long)spairs,
                         gb.polys_.back().size(), gb.polys_.back().leading().degree(),
                         (unsigned long long)work_left);
    }

    // minimal basis: drop any element whose leading monomial is divisible
    // by another's
    {
        std::sort(gb.polys_.begin(), gb.polys_.end(), [](const Gf2Poly& a, const Gf2Poly& b) {
            return grevlex_less(a.leading(), b.leading());
        });
        gb.polys_.erase(std::unique(gb.polys_.begin(), gb.polys_.end()), gb.polys_.end());
        GroebnerBasis kept;
        for (auto& p : gb.polys_) {
            if (kept.find_divisor(p.leading()) != static_cast<std::size_t>(-1)) continue;
            kept.polys_.push_back(std::move(p));
            kept.index_insert(kept.polys_.size() - 1);
        }
        gb = std::move(kept);
    }

    // reduced basis: replace each tail by its normal form.  A leading
    // monomial never divides a term of its own tail (the quotient would be
    // grevlex-larger), so reducing against the full basis is safe, and one
    // pass suffices because leading monomials do not change.
    for (auto& p : gb.polys_) {
        Gf2Poly tail;
        tail.terms_.assign(p.terms_.begin() + 1, p.terms_.end());
        Gf2Poly red = gb.reduce_budgeted(tail, &work_left);
        p.terms_.resize(1);
        p.terms_.insert(p.terms_.end(), red.terms_.begin(), red.terms_.end());
    }
    return gb;
}

}  // namespace cordalg
