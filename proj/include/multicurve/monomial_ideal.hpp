#ifndef MULTICURVE_MONOMIAL_IDEAL_HPP
#define MULTICURVE_MONOMIAL_IDEAL_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "polynomial.hpp"
#include "vec3.hpp"

namespace multicurve {

// A monomial ideal held by its minimal (pairwise incomparable) generators.
// Generator order is preserved as given after minimalization so callers can
// pick a presentation order; canonical() sorts graded-lex ascending.
class MonomialIdeal {
public:
    MonomialIdeal() = default;

    static MonomialIdeal from_generators(std::vector<Exponent> gens) {
        MonomialIdeal ideal;
        // Keep a generator unless a distinct generator divides it; among exact
        // duplicates keep the first occurrence.
        for (std::size_t i = 0; i < gens.size(); ++i) {
            bool keep = true;
            for (std::size_t j = 0; j < gens.size(); ++j) {
                if (i == j)
                    continue;
                if (gens[j] == gens[i]) {
                    if (j < i)
                        keep = false;
                } else if (divides(gens[j], gens[i])) {
                    keep = false;
                }
                if (!keep)
                    break;
            }
            if (keep)
                ideal.gens_.push_back(gens[i]);
        }
        return ideal;
    }

    const std::vector<Exponent>& generators() const { return gens_; }
    bool empty() const { return gens_.empty(); }

    bool contains(const Exponent& m) const {
        for (const auto& g : gens_)
            if (divides(g, m))
                return true;
        return false;
    }

    MonomialIdeal canonical() const {
        MonomialIdeal c = *this;
        std::sort(c.gens_.begin(), c.gens_.end(), GrlexLess{});
        return c;
    }

    bool operator==(const MonomialIdeal& o) const {
        return canonical().gens_ == o.canonical().gens_;
    }

private:
    std::vector<Exponent> gens_;
};

// "(y^2, x*z, ...)" in stored generator order.
inline std::string to_string(const MonomialIdeal& ideal) {
    std::string out = "(";
    bool first = true;
    for (const auto& g : ideal.generators()) {
        if (!first)
            out += ", ";
        std::string mono = monomial_string(g);
        out += mono.empty() ? "1" : mono;
        first = false;
    }
    out += ")";
    return out;
}

} // namespace multicurve

#endif
