#include "wq/series.hpp"

#include <sstream>
#include <stdexcept>

namespace wq {

namespace {

void trim_zeros(std::vector<GaussianRational>& v, std::size_t keep = 0) {
    while (v.size() > keep && v.back().is_zero()) v.pop_back();
}

}  // namespace

RationalSeries::RationalSeries(std::vector<GaussianRational> num, std::vector<GaussianRational> den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.empty() || den_[0] != GaussianRational(1))
        throw std::invalid_argument("RationalSeries: denominator constant term must be 1");
    trim_zeros(num_);
    trim_zeros(den_, 1);
}

std::vector<GaussianRational> RationalSeries::expand(int order) const {
    // a_k solves sum_{j<=k} a_{k-j} d_j = n_k for the coefficient of u^-(2k+1).
    std::vector<GaussianRational> a(static_cast<std::size_t>(order) + 1, GaussianRational(0));
    for (int k = 0; k <= order; ++k) {
        GaussianRational acc = k < static_cast<int>(num_.size()) ? num_[k] : GaussianRational(0);
        for (int j = 1; j <= k && j < static_cast<int>(den_.size()); ++j) acc -= den_[j] * a[k - j];
        a[k] = acc;  // d_0 = 1
    }
    return a;
}

bool operator==(const RationalSeries& a, const RationalSeries& b) {
    // num_a * den_b == num_b * den_a as polynomials in u^-1 (odd x even shape).
    auto conv = [](const std::vector<GaussianRational>& n, const std::vector<GaussianRational>& d) {
        std::vector<GaussianRational> out(n.size() + d.size(), GaussianRational(0));
        for (std::size_t i = 0; i < n.size(); ++i)
            for (std::size_t j = 0; j < d.size(); ++j) out[i + j] += n[i] * d[j];
        trim_zeros(out);
        return out;
    };
    return conv(a.num_, b.den_) == conv(b.num_, a.den_);
}

std::string RationalSeries::str() const {
    std::ostringstream os;
    auto part = [&](const std::vector<GaussianRational>& v, int offset) {
        bool first = true;
        for (std::size_t k = 0; k < v.size(); ++k) {
            if (v[k].is_zero()) continue;
            if (!first) os << " + ";
            first = false;
            int pw = 2 * static_cast<int>(k) + offset;
            os << "(" << v[k].str() << ")";
            if (pw > 0) os << "*u^-" << pw;
        }
        if (first) os << "0";
    };
    part(num_, 1);
    os << " / ";
    part(den_, 0);
    return os.str();
}

GaussianRational EvenSeries::at(int k) const {
    if (k == 0) return GaussianRational(1);
    if (k < 0 || k > static_cast<int>(c_.size())) return GaussianRational(0);
    return c_[k - 1];
}

void EvenSeries::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

EvenSeries operator*(const EvenSeries& a, const EvenSeries& b) {
    int deg = a.degree() + b.degree();
    std::vector<GaussianRational> out;
    for (int k = 1; k <= deg; ++k) {
        GaussianRational acc(0);
        for (int i = 0; i <= k; ++i) acc += a.at(i) * b.at(k - i);
        out.push_back(acc);
    }
    return EvenSeries(std::move(out));
}

bool operator<(const EvenSeries& a, const EvenSeries& b) {
    int n = std::max(a.degree(), b.degree());
    for (int k = 1; k <= n; ++k) {
        int c = GaussianRational::cmp(a.at(k), b.at(k));
        if (c != 0) return c < 0;
    }
    return false;
}

EvenSeries EvenSeries::truncate(int K) const {
    std::vector<GaussianRational> out(c_.begin(), c_.begin() + std::min<std::size_t>(c_.size(), K));
    return EvenSeries(std::move(out));
}

std::string EvenSeries::str() const {
    std::ostringstream os;
    os << "1";
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k].is_zero()) continue;
        os << " + (" << c_[k].str() << ")*u^-" << 2 * (k + 1);
    }
    return os.str();
}

}  // namespace wq
