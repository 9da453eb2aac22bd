#include "ribbon/chain_vector.hpp"

#include "ribbon/canonical.hpp"

namespace ribbon {

void ChainVector::add(const std::string& key, const Rational& c, std::shared_ptr<const OrientedGraph> rep) {
    if (c == 0) return;
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, Term{c, std::move(rep)});
        return;
    }
    it->second.coeff += c;
    if (it->second.coeff == 0) terms_.erase(it);
}

void ChainVector::add(const ChainVector& other, const Rational& scale) {
    if (scale == 0) return;
    for (const auto& [k, t] : other.terms_) add(k, t.coeff * scale, t.rep);
}

Rational ChainVector::coefficient(const std::string& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second.coeff;
}

ChainVector ChainVector::scaled(const Rational& s) const {
    ChainVector out;
    out.add(*this, s);
    return out;
}

bool operator==(const ChainVector& a, const ChainVector& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    auto i = a.terms_.begin();
    auto j = b.terms_.begin();
    for (; i != a.terms_.end(); ++i, ++j)
        if (i->first != j->first || i->second.coeff != j->second.coeff) return false;
    return true;
}

void add_graph(ChainVector& out, const OrientedGraph& raw, const Rational& coeff, std::uint8_t family_tag,
               const OrientationRule& rule) {
    if (coeff == 0) return;
    auto cf = canonical_form(raw, family_tag);
    if (cf.is_zero) return;
    std::shared_ptr<const OrientedGraph> rep;
    if (!out.contains(cf.key)) rep = std::make_shared<OrientedGraph>(canonical_representative(raw, cf, rule));
    out.add(cf.key, cf.sign > 0 ? coeff : Rational(-coeff), std::move(rep));
}

}  // namespace ribbon
