#include "hodisc/gf2poly.hpp"

#include <bit>
#include <stdexcept>

namespace hodisc {

void GF2Poly::trim() {
    while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

GF2Poly GF2Poly::monomial(unsigned e) {
    GF2Poly p;
    p.set_coeff(e, true);
    return p;
}

GF2Poly GF2Poly::from_encoding(std::uint64_t bits) {
    GF2Poly p;
    if (bits) p.words_.push_back(bits);
    return p;
}

int GF2Poly::degree() const {
    if (words_.empty()) return -1;
    unsigned top = 63 - std::countl_zero(words_.back());
    return static_cast<int>(64 * (words_.size() - 1) + top);
}

bool GF2Poly::coeff(unsigned i) const {
    std::size_t w = i / 64;
    if (w >= words_.size()) return false;
    return (words_[w] >> (i % 64)) & 1u;
}

void GF2Poly::set_coeff(unsigned i, bool v) {
    std::size_t w = i / 64;
    if (w >= words_.size()) {
        if (!v) return;
        words_.resize(w + 1, 0);
    }
    if (v)
        words_[w] |= std::uint64_t(1) << (i % 64);
    else
        words_[w] &= ~(std::uint64_t(1) << (i % 64));
    trim();
}

GF2Poly GF2Poly::operator+(const GF2Poly& o) const {
    GF2Poly r;
    r.words_.resize(std::max(words_.size(), o.words_.size()), 0);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] ^= words_[i];
    for (std::size_t i = 0; i < o.words_.size(); ++i) r.words_[i] ^= o.words_[i];
    r.trim();
    return r;
}

GF2Poly GF2Poly::shifted_left(unsigned k) const {
    if (is_zero() || k == 0) {
        GF2Poly r = *this;
        return r;
    }
    GF2Poly r;
    unsigned wshift = k / 64, bshift = k % 64;
    r.words_.assign(words_.size() + wshift + 1, 0);
    for (std::size_t i = 0; i < words_.size(); ++i) {
        r.words_[i + wshift] |= words_[i] << bshift;
        if (bshift) r.words_[i + wshift + 1] |= words_[i] >> (64 - bshift);
    }
    r.trim();
    return r;
}

GF2Poly GF2Poly::operator*(const GF2Poly& o) const {
    GF2Poly acc;
    if (is_zero() || o.is_zero()) return acc;
    int da = degree();
    for (int i = 0; i <= da; ++i)
        if (coeff(static_cast<unsigned>(i))) acc = acc + o.shifted_left(static_cast<unsigned>(i));
    return acc;
}

GF2Poly GF2Poly::pow(unsigned e) const {
    GF2Poly r = one();
    GF2Poly base = *this;
    while (e) {
        if (e & 1u) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

std::pair<GF2Poly, GF2Poly> GF2Poly::divmod(const GF2Poly& a, const GF2Poly& b) {
    if (b.is_zero()) throw std::domain_error("GF2Poly: division by zero polynomial");
    GF2Poly q, r = a;
    int db = b.degree();
    while (!r.is_zero() && r.degree() >= db) {
        unsigned shift = static_cast<unsigned>(r.degree() - db);
        q.set_coeff(shift, true);
        r = r + b.shifted_left(shift);
    }
    return {q, r};
}

std::uint64_t GF2Poly::encoding() const {
    if (words_.size() > 1) throw std::overflow_error("GF2Poly::encoding: degree > 63");
    return words_.empty() ? 0 : words_[0];
}

std::string GF2Poly::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
        if (!coeff(static_cast<unsigned>(i))) continue;
        if (!s.empty()) s += "+";
        if (i == 0)
            s += "1";
        else if (i == 1)
            s += "x";
        else
            s += "x^" + std::to_string(i);
    }
    return s;
}

bool is_irreducible(const GF2Poly& p) {
    int d = p.degree();
    if (d < 1) return false;
    if (d == 1) return true;
    // any factorization has a factor of degree <= d/2
    for (std::uint64_t enc = 2; ; ++enc) {
        GF2Poly div = GF2Poly::from_encoding(enc);
        if (div.degree() > d / 2) break;
        if (GF2Poly::divmod(p, div).second.is_zero()) return false;
    }
    return true;
}

std::vector<GF2Poly> irreducibles_up_to(std::size_t count) {
    if (count == 0) throw std::invalid_argument("irreducibles_up_to: count must be >= 1");
    std::vector<GF2Poly> out;
    out.reserve(count);
    // increasing encoding order is exactly (degree asc, encoding asc)
    for (std::uint64_t enc = 2; out.size() < count; ++enc) {
        GF2Poly cand = GF2Poly::from_encoding(enc);
        if (is_irreducible(cand)) out.push_back(cand);
    }
    return out;
}

}  // namespace hodisc
