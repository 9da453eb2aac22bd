#pragma once

#include <gmpxx.h>

#include <map>
#include <memory>
#include <string>

#include "ribbon/decorated.hpp"

namespace ribbon {

using Rational = mpq_class;

// Finite rational combination of canonical classes.  Never stores a zero
// coefficient or a class that vanishes by symmetry.
class ChainVector {
public:
    struct Term {
        Rational coeff;
        std::shared_ptr<const OrientedGraph> rep;  // canonical representative, reference orientation
    };
    using Map = std::map<std::string, Term>;

    void add(const std::string& key, const Rational& c, std::shared_ptr<const OrientedGraph> rep);
    void add(const ChainVector& other, const Rational& scale = 1);
    bool contains(const std::string& key) const { return terms_.count(key) != 0; }
    Rational coefficient(const std::string& key) const;

    ChainVector scaled(const Rational& s) const;
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const Map& terms() const { return terms_; }

    friend bool operator==(const ChainVector& a, const ChainVector& b);

private:
    Map terms_;
};

// Canonicalize raw and add coeff * raw.  Classes that vanish are skipped.
void add_graph(ChainVector& out, const OrientedGraph& raw, const Rational& coeff, std::uint8_t family_tag,
               const OrientationRule& rule);

}  // namespace ribbon
