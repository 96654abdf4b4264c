#include "wq/multipoly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace wq {

namespace {

ExpVec add_exps(const ExpVec& a, const ExpVec& b) {
    ExpVec r;
    for (int k = 0; k < ExpVec::kMaxVars; ++k) {
        int s = a.e[k] + b.e[k];
        if (s > 255) throw std::overflow_error("MultiPoly: exponent overflow");
        r.e[k] = static_cast<std::uint8_t>(s);
    }
    return r;
}

bool exp_divides(const ExpVec& d, const ExpVec& m) {
    for (int k = 0; k < ExpVec::kMaxVars; ++k)
        if (d.e[k] > m.e[k]) return false;
    return true;
}

ExpVec sub_exps(const ExpVec& m, const ExpVec& d) {
    ExpVec r;
    for (int k = 0; k < ExpVec::kMaxVars; ++k) r.e[k] = static_cast<std::uint8_t>(m.e[k] - d.e[k]);
    return r;
}

}  // namespace

MultiPoly MultiPoly::constant(int arity, GaussianRational c) {
    if (arity < 0 || arity > ExpVec::kMaxVars) throw std::invalid_argument("MultiPoly: bad arity");
    MultiPoly p;
    p.arity_ = arity;
    p.set_constant_term(std::move(c));
    return p;
}

MultiPoly MultiPoly::variable(int arity, int index) {
    if (arity < 1 || arity > ExpVec::kMaxVars) throw std::invalid_argument("MultiPoly: bad arity");
    if (index < 1 || index > arity) throw std::invalid_argument("MultiPoly: variable index out of range");
    MultiPoly p;
    p.arity_ = arity;
    ExpVec e;
    e.e[index - 1] = 1;
    p.terms_.emplace(e, GaussianRational(1));
    return p;
}

void MultiPoly::set_constant_term(GaussianRational c) {
    terms_.clear();
    if (!c.is_zero()) terms_.emplace(ExpVec{}, std::move(c));
}

GaussianRational MultiPoly::constant_value() const {
    if (terms_.empty()) return GaussianRational(0);
    if (terms_.size() == 1 && terms_.begin()->first == ExpVec{}) return terms_.begin()->second;
    throw std::domain_error("MultiPoly: not a constant");
}

int MultiPoly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.total_degree());
    return d;
}

int MultiPoly::combined_arity(const MultiPoly& a, const MultiPoly& b) {
    if (a.arity_ == 0) return b.arity_;
    if (b.arity_ == 0) return a.arity_;
    if (a.arity_ != b.arity_) throw std::invalid_argument("MultiPoly: arity mismatch");
    return a.arity_;
}

void MultiPoly::add_term(const ExpVec& exp, const GaussianRational& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.emplace(exp, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    arity_ = combined_arity(*this, o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    arity_ = combined_arity(*this, o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r;
    r.arity_ = MultiPoly::combined_arity(a, b);
    if (a.terms_.empty() || b.terms_.empty()) return r;
    // Iterate the smaller factor outside; inner keys arrive in ascending
    // order, so each pass merges into the map from a moving hint.
    const MultiPoly& outer = a.terms_.size() <= b.terms_.size() ? a : b;
    const MultiPoly& inner = a.terms_.size() <= b.terms_.size() ? b : a;
    for (const auto& [ea, ca] : outer.terms_) {
        auto hint = r.terms_.begin();
        for (const auto& [eb, cb] : inner.terms_) {
            ExpVec key = add_exps(ea, eb);
            hint = r.terms_.lower_bound(key);
            if (hint != r.terms_.end() && hint->first == key) {
                hint->second += ca * cb;
                if (hint->second.is_zero()) hint = r.terms_.erase(hint);
            } else {
                hint = r.terms_.emplace_hint(hint, key, ca * cb);
            }
        }
    }
    return r;
}

MultiPoly& MultiPoly::scale(const GaussianRational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    return a.terms_ == b.terms_;
}

std::optional<MultiPoly> MultiPoly::divide_exact(const MultiPoly& d) const {
    if (d.is_zero()) throw std::domain_error("MultiPoly: division by zero polynomial");
    MultiPoly q;
    q.arity_ = combined_arity(*this, d);
    MultiPoly rem = *this;
    const auto& [de, dc] = *d.terms_.rbegin();  // leading term in lex order
    GaussianRational dinv = dc.inv();
    while (!rem.terms_.empty()) {
        const auto& [re, rc] = *rem.terms_.rbegin();
        if (!exp_divides(de, re)) return std::nullopt;
        ExpVec qe = sub_exps(re, de);
        GaussianRational qc = rc * dinv;
        q.add_term(qe, qc);
        MultiPoly t;
        t.arity_ = q.arity_;
        t.terms_.emplace(qe, qc);
        rem -= t * d;
    }
    return q;
}

GaussianRational MultiPoly::eval(std::span<const GaussianRational> point) const {
    if (static_cast<int>(point.size()) < arity_) throw std::invalid_argument("MultiPoly: point too short");
    GaussianRational acc(0);
    for (const auto& [e, c] : terms_) {
        GaussianRational m = c;
        for (int k = 0; k < arity_; ++k)
            for (int j = 0; j < e.e[k]; ++j) m *= point[k];
        acc += m;
    }
    return acc;
}

MultiPoly MultiPoly::substitute(int index, const MultiPoly& image) const {
    if (index < 1 || index > arity_) throw std::invalid_argument("MultiPoly: substitute index out of range");
    // Horner in decreasing powers of x_index.
    std::map<int, MultiPoly> by_power;
    for (const auto& [e, c] : terms_) {
        ExpVec stripped = e;
        int p = stripped.e[index - 1];
        stripped.e[index - 1] = 0;
        auto [it, inserted] = by_power.emplace(p, MultiPoly::zero(arity_));
        it->second.add_term(stripped, c);
    }
    MultiPoly acc = MultiPoly::zero(arity_);
    int current = -1;
    for (auto it = by_power.rbegin(); it != by_power.rend(); ++it) {
        if (current < 0) {
            acc = it->second;
            current = it->first;
        } else {
            while (current > it->first) {
                acc = acc * image;
                --current;
            }
            acc += it->second;
        }
    }
    while (current > 0) {
        acc = acc * image;
        --current;
    }
    return current < 0 ? MultiPoly::zero(arity_) : acc;
}

MultiPoly MultiPoly::extend_arity(int new_arity) const {
    if (new_arity < arity_ || new_arity > ExpVec::kMaxVars)
        throw std::invalid_argument("MultiPoly: bad arity extension");
    MultiPoly r = *this;
    r.arity_ = new_arity;
    return r;
}

MultiPoly MultiPoly::permute_vars(std::span<const int> perm) const {
    if (static_cast<int>(perm.size()) != arity_) throw std::invalid_argument("MultiPoly: bad permutation");
    MultiPoly r;
    r.arity_ = arity_;
    for (const auto& [e, c] : terms_) {
        ExpVec pe;
        for (int k = 0; k < arity_; ++k) pe.e[perm[k] - 1] = e.e[k];
        r.add_term(pe, c);
    }
    return r;
}

MultiPoly MultiPoly::derivative(int index) const {
    if (index < 1 || index > arity_) throw std::invalid_argument("MultiPoly: derivative index out of range");
    MultiPoly r;
    r.arity_ = arity_;
    for (const auto& [e, c] : terms_) {
        int p = e.e[index - 1];
        if (p == 0) continue;
        ExpVec de = e;
        de.e[index - 1] = static_cast<std::uint8_t>(p - 1);
        r.add_term(de, GaussianRational(p) * c);
    }
    return r;
}

MultiPoly MultiPoly::leading_form() const {
    int d = total_degree();
    MultiPoly r;
    r.arity_ = arity_;
    for (const auto& [e, c] : terms_)
        if (e.total_degree() == d) r.terms_.emplace(e, c);
    return r;
}

bool MultiPoly::depends_on(int index) const {
    for (const auto& [e, c] : terms_)
        if (e.e[index - 1] != 0) return true;
    return false;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string mon;
        for (int k = 0; k < ExpVec::kMaxVars; ++k) {
            if (e.e[k] == 0) continue;
            if (!mon.empty()) mon += "*";
            mon += "x" + std::to_string(k + 1);
            if (e.e[k] > 1) mon += "^" + std::to_string(int(e.e[k]));
        }
        GaussianRational coeff = c;
        std::string sign;
        if (first) {
            sign = "";
        } else if (coeff.is_real() && coeff.re() < 0) {
            sign = " - ";
            coeff = -coeff;
        } else {
            sign = " + ";
        }
        std::string cs = coeff.str();
        bool composite = cs.find('+') != std::string::npos ||
                         (cs.rfind('-') != std::string::npos && cs.rfind('-') > 0);
        if (composite) cs = "(" + cs + ")";
        std::string body;
        if (mon.empty())
            body = cs;
        else if (cs == "1")
            body = mon;
        else if (cs == "-1")
            body = "-" + mon;
        else
            body = cs + "*" + mon;
        os << sign << body;
        first = false;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.str(); }

}  // namespace wq
