#include "wq/uh.hpp"

#include <bit>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace wq {

MaskProduct mask_mul(std::uint32_t a, std::uint32_t b) {
    MaskProduct out{1, 0, {}};
    // Merge the two ascending generator lists. Bringing an element of b to its
    // sorted position moves it past every remaining larger element of a; each
    // transposition flips the sign, and a coincident pair squares to x_i.
    int i = 0, j = 0;
    std::vector<int> as, bs;
    for (int k = 0; k < 32; ++k) {
        if (a >> k & 1u) as.push_back(k);
        if (b >> k & 1u) bs.push_back(k);
    }
    std::uint32_t mask = 0;
    const int na = static_cast<int>(as.size());
    while (i < static_cast<int>(as.size()) || j < static_cast<int>(bs.size())) {
        if (j == static_cast<int>(bs.size()) || (i < na && as[i] < bs[j])) {
            mask |= 1u << as[i];
            ++i;
        } else if (i == na || bs[j] < as[i]) {
            if ((na - i) % 2 != 0) out.sign = -out.sign;
            mask |= 1u << bs[j];
            ++j;
        } else {
            // equal: b's element passes the na-i-1 elements after as[i]
            if ((na - i - 1) % 2 != 0) out.sign = -out.sign;
            out.squares.push_back(as[i] + 1);
            ++i;
            ++j;
        }
    }
    out.mask = mask;
    return out;
}

UhElement::UhElement(int arity) : arity_(arity) {
    if (arity < 0 || arity > ExpVec::kMaxVars) throw std::invalid_argument("UhElement: bad arity");
}

UhElement UhElement::one(int arity) {
    UhElement u(arity);
    u.terms_.emplace(0u, MultiPoly::one(arity));
    return u;
}

UhElement UhElement::xi(int arity, int index) {
    if (index < 1 || index > arity) throw std::invalid_argument("UhElement: xi index out of range");
    UhElement u(arity);
    u.terms_.emplace(1u << (index - 1), MultiPoly::one(arity));
    return u;
}

UhElement UhElement::x(int arity, int index) {
    UhElement u(arity);
    u.terms_.emplace(0u, MultiPoly::variable(arity, index));
    return u;
}

UhElement UhElement::from_poly(MultiPoly p) {
    UhElement u(p.arity());
    if (!p.is_zero()) u.terms_.emplace(0u, std::move(p));
    return u;
}

UhElement UhElement::monomial(int arity, std::uint32_t mask, MultiPoly coeff) {
    UhElement u(arity);
    u.add_term(mask, coeff);
    return u;
}

MultiPoly UhElement::coeff(std::uint32_t mask) const {
    auto it = terms_.find(mask);
    return it == terms_.end() ? MultiPoly::zero(arity_) : it->second;
}

void UhElement::add_term(std::uint32_t mask, const MultiPoly& coeff) {
    if (coeff.is_zero()) return;
    if (mask >= (1u << arity_)) throw std::invalid_argument("UhElement: mask out of range");
    auto [it, inserted] = terms_.emplace(mask, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

UhElement UhElement::operator-() const {
    UhElement r = *this;
    for (auto& [m, p] : r.terms_) p = -p;
    return r;
}

UhElement& UhElement::operator+=(const UhElement& o) {
    if (arity_ != o.arity_) throw std::invalid_argument("UhElement: arity mismatch");
    for (const auto& [m, p] : o.terms_) add_term(m, p);
    return *this;
}

UhElement& UhElement::operator-=(const UhElement& o) {
    if (arity_ != o.arity_) throw std::invalid_argument("UhElement: arity mismatch");
    for (const auto& [m, p] : o.terms_) add_term(m, -p);
    return *this;
}

UhElement operator*(const UhElement& a, const UhElement& b) {
    if (a.arity_ != b.arity_) throw std::invalid_argument("UhElement: arity mismatch");
    UhElement r(a.arity_);
    for (const auto& [ma, pa] : a.terms_) {
        for (const auto& [mb, pb] : b.terms_) {
            MaskProduct mp = mask_mul(ma, mb);
            MultiPoly c = pa * pb;
            for (int idx : mp.squares) c *= MultiPoly::variable(a.arity_, idx);
            if (mp.sign < 0) c = -c;
            r.add_term(mp.mask, c);
        }
    }
    return r;
}

UhElement& UhElement::scale(const GaussianRational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, p] : terms_) p.scale(c);
    return *this;
}

bool operator==(const UhElement& a, const UhElement& b) {
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
}

std::pair<UhElement, UhElement> UhElement::parity_split() const {
    UhElement even(arity_), odd(arity_);
    for (const auto& [m, p] : terms_) {
        if (std::popcount(m) % 2 == 0)
            even.terms_.emplace(m, p);
        else
            odd.terms_.emplace(m, p);
    }
    return {even, odd};
}

bool UhElement::is_homogeneous() const {
    int seen = -1;
    for (const auto& [m, p] : terms_) {
        int par = std::popcount(m) % 2;
        if (seen < 0) seen = par;
        if (par != seen) return false;
    }
    return true;
}

int UhElement::parity() const {
    if (terms_.empty() || !is_homogeneous()) throw std::domain_error("UhElement: parity of non-homogeneous element");
    return std::popcount(terms_.begin()->first) % 2;
}

int UhElement::grading_degree() const {
    int d = -1;
    for (const auto& [m, p] : terms_)
        d = std::max(d, 2 * p.total_degree() + std::popcount(m));
    return d;
}

UhElement UhElement::top_term() const {
    if (terms_.empty()) throw std::domain_error("UhElement: top term of zero");
    int d = grading_degree();
    UhElement r(arity_);
    for (const auto& [m, p] : terms_) {
        MultiPoly keep = MultiPoly::zero(arity_);
        int want = d - std::popcount(m);
        for (const auto& [e, c] : p.terms())
            if (2 * e.total_degree() == want) keep.add_term(e, c);
        r.add_term(m, keep);
    }
    return r;
}

UhElement UhElement::substitute_x(std::span<const GaussianRational> s) const {
    if (static_cast<int>(s.size()) != arity_) throw std::invalid_argument("UhElement: substitution length mismatch");
    UhElement r(arity_);
    for (const auto& [m, p] : terms_) r.add_term(m, MultiPoly::constant(arity_, p.eval(s)));
    return r;
}

UhElement UhElement::substitute_x(int index, const MultiPoly& image) const {
    UhElement r(arity_);
    for (const auto& [m, p] : terms_) r.add_term(m, p.substitute(index, image));
    return r;
}

std::string UhElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, p] : terms_) {
        std::string xis;
        for (int k = 0; k < arity_; ++k) {
            if (!(m >> k & 1u)) continue;
            if (!xis.empty()) xis += "*";
            xis += "xi" + std::to_string(k + 1);
        }
        // Render coefficient polynomial term-by-term so signs stay readable.
        for (auto pit = p.terms().rbegin(); pit != p.terms().rend(); ++pit) {
            const auto& [e, c] = *pit;
            MultiPoly single = MultiPoly::zero(arity_);
            single.add_term(e, c);
            std::string body = single.str();
            std::string sign = " + ";
            if (body.size() && body[0] == '-') {
                sign = " - ";
                body = body.substr(1);
            }
            if (!xis.empty()) {
                if (body == "1")
                    body = xis;
                else
                    body += "*" + xis;
            }
            if (first) {
                os << (sign == " - " ? "-" : "") << body;
                first = false;
            } else {
                os << sign << body;
            }
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const UhElement& u) { return os << u.str(); }

UhElement super_commutator(const UhElement& a, const UhElement& b) {
    UhElement r(a.arity());
    auto [a0, a1] = a.parity_split();
    auto [b0, b1] = b.parity_split();
    const UhElement* as[2] = {&a0, &a1};
    const UhElement* bs[2] = {&b0, &b1};
    for (int pa = 0; pa < 2; ++pa)
        for (int pb = 0; pb < 2; ++pb) {
            if (as[pa]->is_zero() || bs[pb]->is_zero()) continue;
            UhElement ab = *as[pa] * *bs[pb];
            UhElement ba = *bs[pb] * *as[pa];
            r += (pa * pb) % 2 ? ab + ba : ab - ba;
        }
    return r;
}

void TensorElement::add_term(std::uint32_t lmask, std::uint32_t rmask, const MultiPoly& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.emplace(Key{lmask, rmask}, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
    if (left_ != o.left_ || right_ != o.right_) throw std::invalid_argument("TensorElement: shape mismatch");
    for (const auto& [k, p] : o.terms_) add_term(k.first, k.second, p);
    return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o) {
    if (left_ != o.left_ || right_ != o.right_) throw std::invalid_argument("TensorElement: shape mismatch");
    for (const auto& [k, p] : o.terms_) add_term(k.first, k.second, -p);
    return *this;
}

TensorElement operator*(const TensorElement& a, const TensorElement& b) {
    if (a.left_ != b.left_ || a.right_ != b.right_) throw std::invalid_argument("TensorElement: shape mismatch");
    TensorElement r(a.left_, a.right_);
    const int total = a.left_ + a.right_;
    for (const auto& [ka, pa] : a.terms_) {
        for (const auto& [kb, pb] : b.terms_) {
            MaskProduct lm = mask_mul(ka.first, kb.first);
            MaskProduct rm = mask_mul(ka.second, kb.second);
            int sign = lm.sign * rm.sign;
            // Koszul: right factor of a moves past left factor of b.
            if ((std::popcount(ka.second) * std::popcount(kb.first)) % 2 != 0) sign = -sign;
            MultiPoly c = pa * pb;
            for (int idx : lm.squares) c *= MultiPoly::variable(total, idx);
            for (int idx : rm.squares) c *= MultiPoly::variable(total, idx + a.left_);
            if (sign < 0) c = -c;
            r.add_term(lm.mask, rm.mask, c);
        }
    }
    return r;
}

TensorElement& TensorElement::scale(const GaussianRational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, p] : terms_) p.scale(c);
    return *this;
}

bool operator==(const TensorElement& a, const TensorElement& b) {
    return a.left_ == b.left_ && a.right_ == b.right_ && a.terms_ == b.terms_;
}

TensorElement TensorElement::left(const UhElement& a, int right_arity) {
    TensorElement r(a.arity(), right_arity);
    const int total = a.arity() + right_arity;
    for (const auto& [m, p] : a.terms()) r.add_term(m, 0u, p.extend_arity(total));
    return r;
}

TensorElement TensorElement::right(int left_arity, const UhElement& b) {
    TensorElement r(left_arity, b.arity());
    const int total = left_arity + b.arity();
    for (const auto& [m, p] : b.terms()) {
        // shift polynomial variables into the second block
        std::vector<int> perm(total);
        for (int k = 0; k < b.arity(); ++k) perm[k] = left_arity + k + 1;
        for (int k = b.arity(); k < total; ++k) perm[k] = k - b.arity() + 1;
        r.add_term(0u, m, p.extend_arity(total).permute_vars(perm));
    }
    return r;
}

TensorElement TensorElement::tensor(const UhElement& a, const UhElement& b) {
    return left(a, b.arity()) * right(a.arity(), b);
}

TensorElement TensorElement::flip(bool koszul) const {
    TensorElement r(right_, left_);
    const int total = left_ + right_;
    // old block 1 (vars 1..left) becomes block 2, old block 2 becomes block 1
    std::vector<int> perm(total);
    for (int k = 0; k < left_; ++k) perm[k] = right_ + k + 1;
    for (int k = 0; k < right_; ++k) perm[left_ + k] = k + 1;
    for (const auto& [k, p] : terms_) {
        MultiPoly q = p.permute_vars(perm);
        if (koszul && (std::popcount(k.first) * std::popcount(k.second)) % 2 != 0) q = -q;
        r.add_term(k.second, k.first, q);
    }
    return r;
}

std::string TensorElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, p] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << p.str() << ")*[";
        for (int q = 0; q < left_; ++q)
            if (k.first >> q & 1u) os << "xi" << q + 1;
        os << "|";
        for (int q = 0; q < right_; ++q)
            if (k.second >> q & 1u) os << "xi" << q + 1;
        os << "]";
    }
    return os.str();
}

TensorElement split_embed(const UhElement& a, int n1, int n2) {
    if (n1 < 0 || n2 < 0 || n1 + n2 != a.arity()) throw std::invalid_argument("split_embed: invalid split");
    TensorElement r(n1, n2);
    const std::uint32_t low = (n1 >= 32) ? ~0u : ((1u << n1) - 1u);
    for (const auto& [m, p] : a.terms()) {
        // generators inside a monomial are ascending, so block-1 generators
        // already precede block-2 ones: no sign
        r.add_term(m & low, m >> n1, p);
    }
    return r;
}

}  // namespace wq
