#include "mult/monomial.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <stdexcept>

namespace mult {

bool divides(const Exponent& a, const Exponent& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) return false;
    }
    return true;
}

std::size_t ExponentHash::operator()(const Exponent& e) const noexcept {
    // FNV-1a over the entries
    std::size_t h = 1469598103934665603ull;
    for (unsigned v : e) {
        h ^= v;
        h *= 1099511628211ull;
    }
    return h;
}

namespace {

void check_arity(std::size_t arity, const std::vector<Exponent>& gens) {
    for (const Exponent& g : gens) {
        if (g.size() != arity) throw std::invalid_argument("generator arity mismatch");
    }
}

std::vector<Exponent> minimalize(std::vector<Exponent> gens) {
    // ascending pass first: a divisor is componentwise <= its multiple, hence
    // earlier in ascending lex, so checking against already-kept entries works
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Exponent> kept;
    kept.reserve(gens.size());
    for (const Exponent& g : gens) {
        bool dominated = false;
        for (const Exponent& h : kept) {
            if (divides(h, g)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) kept.push_back(g);
    }
    // canonical storage order is descending lex, first variable first
    std::sort(kept.begin(), kept.end(), std::greater<Exponent>());
    return kept;
}

}  // namespace

MonomialIdeal MonomialIdeal::zero(std::size_t arity) {
    MonomialIdeal a;
    a.arity_ = arity;
    return a;
}

MonomialIdeal MonomialIdeal::unit(std::size_t arity) {
    MonomialIdeal a;
    a.arity_ = arity;
    a.gens_.push_back(Exponent(arity, 0));
    return a;
}

MonomialIdeal MonomialIdeal::make(std::size_t arity, std::vector<Exponent> gens) {
    check_arity(arity, gens);
    MonomialIdeal a;
    a.arity_ = arity;
    a.gens_ = minimalize(std::move(gens));
    return a;
}

MonomialIdeal MonomialIdeal::from_antichain(std::size_t arity, std::vector<Exponent> gens) {
    check_arity(arity, gens);
#ifndef NDEBUG
    std::vector<Exponent> reduced = minimalize(gens);
    std::vector<Exponent> sorted = gens;
    std::sort(sorted.begin(), sorted.end(), std::greater<Exponent>());
    assert(reduced == sorted);
#endif
    std::sort(gens.begin(), gens.end(), std::greater<Exponent>());
    MonomialIdeal a;
    a.arity_ = arity;
    a.gens_ = std::move(gens);
    return a;
}

bool MonomialIdeal::is_unit() const {
    return gens_.size() == 1 &&
           std::all_of(gens_[0].begin(), gens_[0].end(), [](unsigned v) { return v == 0; });
}

bool contains_monomial(const MonomialIdeal& a, const Exponent& w) {
    if (w.size() != a.arity()) throw std::invalid_argument("monomial arity mismatch");
    for (const Exponent& g : a.generators()) {
        if (divides(g, w)) return true;
    }
    return false;
}

bool contains(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.arity() != b.arity()) throw std::invalid_argument("ideal arity mismatch");
    for (const Exponent& g : b.generators()) {
        if (!contains_monomial(a, g)) return false;
    }
    return true;
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.arity() != b.arity()) throw std::invalid_argument("ideal arity mismatch");
    std::vector<Exponent> gens = a.generators();
    gens.insert(gens.end(), b.generators().begin(), b.generators().end());
    return MonomialIdeal::make(a.arity(), std::move(gens));
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.arity() != b.arity()) throw std::invalid_argument("ideal arity mismatch");
    std::vector<Exponent> gens;
    gens.reserve(a.generators().size() * b.generators().size());
    for (const Exponent& g : a.generators()) {
        for (const Exponent& h : b.generators()) {
            Exponent s(g.size());
            for (std::size_t i = 0; i < g.size(); ++i) s[i] = g[i] + h[i];
            gens.push_back(std::move(s));
        }
    }
    return MonomialIdeal::make(a.arity(), std::move(gens));
}

MonomialIdeal power(const MonomialIdeal& a, unsigned k) {
    MonomialIdeal acc = MonomialIdeal::unit(a.arity());
    for (unsigned i = 0; i < k; ++i) acc = product(acc, a);
    return acc;
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.arity() != b.arity()) throw std::invalid_argument("ideal arity mismatch");
    std::vector<Exponent> gens;
    gens.reserve(a.generators().size() * b.generators().size());
    for (const Exponent& g : a.generators()) {
        for (const Exponent& h : b.generators()) {
            Exponent s(g.size());
            for (std::size_t i = 0; i < g.size(); ++i) s[i] = std::max(g[i], h[i]);
            gens.push_back(std::move(s));
        }
    }
    return MonomialIdeal::make(a.arity(), std::move(gens));
}

MonomialIdeal max_ideal_power(std::size_t arity, long p) {
    if (p <= 0) return MonomialIdeal::unit(arity);
    if (arity == 0) return MonomialIdeal::zero(0);
    // all exponent vectors of total degree exactly p, an antichain by equal degree
    std::vector<Exponent> gens;
    Exponent cur(arity, 0);
    // lexicographic enumeration of compositions of p into arity parts
    auto rec = [&](auto&& self, std::size_t pos, unsigned remaining) -> void {
        if (pos + 1 == arity) {
            cur[pos] = remaining;
            gens.push_back(cur);
            return;
        }
        for (unsigned v = remaining + 1; v-- > 0;) {
            cur[pos] = v;
            self(self, pos + 1, remaining - v);
        }
    };
    rec(rec, 0, static_cast<unsigned>(p));
    return MonomialIdeal::from_antichain(arity, std::move(gens));
}

MonomialIdeal embed_product(const MonomialIdeal& a, std::size_t offset, std::size_t total_arity) {
    if (offset + a.arity() > total_arity) throw std::invalid_argument("embedding out of range");
    if (a.is_zero()) return MonomialIdeal::zero(total_arity);
    std::vector<Exponent> gens;
    gens.reserve(a.generators().size());
    for (const Exponent& g : a.generators()) {
        Exponent w(total_arity, 0);
        std::copy(g.begin(), g.end(), w.begin() + static_cast<std::ptrdiff_t>(offset));
        gens.push_back(std::move(w));
    }
    return MonomialIdeal::from_antichain(total_arity, std::move(gens));
}

MonomialIdeal restrict_to_subspace(const MonomialIdeal& a, const std::vector<std::size_t>& keep) {
    for (std::size_t i = 0; i < keep.size(); ++i) {
        if (keep[i] >= a.arity()) throw std::invalid_argument("kept position out of range");
        if (i > 0 && keep[i] <= keep[i - 1]) throw std::invalid_argument("kept positions must ascend");
    }
    std::vector<bool> kept(a.arity(), false);
    for (std::size_t i : keep) kept[i] = true;
    std::vector<Exponent> gens;
    for (const Exponent& g : a.generators()) {
        bool supported = true;
        for (std::size_t i = 0; i < g.size(); ++i) {
            if (!kept[i] && g[i] != 0) {
                supported = false;
                break;
            }
        }
        if (!supported) continue;
        Exponent w(keep.size());
        for (std::size_t i = 0; i < keep.size(); ++i) w[i] = g[keep[i]];
        gens.push_back(std::move(w));
    }
    return MonomialIdeal::make(keep.size(), std::move(gens));
}

}  // namespace mult
