#include "polyfault/series.hpp"

#include <cassert>
#include <stdexcept>

#include "polyfault/enumerate.hpp"

namespace polyfault {

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim();
}

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void IntPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

mpz_class IntPoly::coeff(int k) const {
    if (k < 0 || k > degree()) return 0;
    return coeffs_[k];
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<mpz_class> out(std::max(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (i < coeffs_.size()) out[i] += coeffs_[i];
        if (i < o.coeffs_.size()) out[i] += o.coeffs_[i];
    }
    return IntPoly(std::move(out));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    std::vector<mpz_class> out(std::max(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (i < coeffs_.size()) out[i] += coeffs_[i];
        if (i < o.coeffs_.size()) out[i] -= o.coeffs_[i];
    }
    return IntPoly(std::move(out));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly();
    std::vector<mpz_class> out(coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            out[i + j] += coeffs_[i] * o.coeffs_[j];
    return IntPoly(std::move(out));
}

IntPoly IntPoly::operator*(const mpz_class& s) const {
    std::vector<mpz_class> out(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i] * s;
    return IntPoly(std::move(out));
}

IntPoly IntPoly::shifted(int k) const {
    if (is_zero()) return IntPoly();
    std::vector<mpz_class> out(coeffs_.size() + k);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i + k] = coeffs_[i];
    return IntPoly(std::move(out));
}

IntPoly IntPoly::divided_by_z(int k) const {
    if (is_zero()) return IntPoly();
    for (int i = 0; i < k && i <= degree(); ++i)
        if (coeffs_[i] != 0) throw std::invalid_argument("polynomial not divisible by z^k");
    std::vector<mpz_class> out(coeffs_.begin() + k, coeffs_.end());
    return IntPoly(std::move(out));
}

IntPoly IntPoly::scaled_arg(const mpz_class& a) const {
    std::vector<mpz_class> out(coeffs_.size());
    mpz_class pow = 1;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        out[i] = coeffs_[i] * pow;
        pow *= a;
    }
    return IntPoly(std::move(out));
}

IntPoly IntPoly::squared_arg() const {
    if (is_zero()) return IntPoly();
    std::vector<mpz_class> out(2 * coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[2 * i] = coeffs_[i];
    return IntPoly(std::move(out));
}

bool IntPoly::even_only() const {
    for (std::size_t i = 1; i < coeffs_.size(); i += 2)
        if (coeffs_[i] != 0) return false;
    return true;
}

IntPoly IntPoly::halved_arg() const {
    if (!even_only()) throw std::invalid_argument("polynomial has odd-degree terms");
    std::vector<mpz_class> out((coeffs_.size() + 1) / 2);
    for (std::size_t i = 0; i < coeffs_.size(); i += 2) out[i / 2] = coeffs_[i];
    return IntPoly(std::move(out));
}

RationalGF::RationalGF() : num_(), den_({1}) {}

RationalGF::RationalGF(IntPoly num, IntPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.coeff(0) == 0)
        throw std::invalid_argument("denominator needs a nonzero constant term");
}

RationalGF RationalGF::operator+(const RationalGF& o) const {
    return RationalGF(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalGF RationalGF::operator-(const RationalGF& o) const {
    return RationalGF(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalGF RationalGF::operator*(const RationalGF& o) const {
    return RationalGF(num_ * o.num_, den_ * o.den_);
}

bool RationalGF::equals(const RationalGF& o) const {
    return num_ * o.den_ == o.num_ * den_;
}

RationalGF RationalGF::times_z(int k) const { return RationalGF(num_.shifted(k), den_); }

RationalGF RationalGF::div_z(int k) const { return RationalGF(num_.divided_by_z(k), den_); }

RationalGF RationalGF::times_scalar(const mpz_class& s) const {
    return RationalGF(num_ * s, den_);
}

RationalGF RationalGF::div_scalar(const mpz_class& s) const {
    if (s == 0) throw std::invalid_argument("division by zero");
    return RationalGF(num_, den_ * s);
}

RationalGF RationalGF::scaled_arg(const mpz_class& a) const {
    return RationalGF(num_.scaled_arg(a), den_.scaled_arg(a));
}

RationalGF RationalGF::squared_arg() const {
    return RationalGF(num_.squared_arg(), den_.squared_arg());
}

RationalGF RationalGF::squared_arg_over4() const {
    // z -> z^2/4 on num/den: scale both by 4^D so coefficients stay integral
    const int d = std::max(std::max(num_.degree(), den_.degree()), 0);
    auto scale = [&](const IntPoly& p) {
        std::vector<mpz_class> out(p.degree() < 0 ? 0 : 2 * p.degree() + 1);
        mpz_class pow = 1;  // 4^(d-k), built downward
        for (int k = d; k >= 0; --k) {
            if (k <= p.degree() && p.coeff(k) != 0) {
                if (out.size() < static_cast<std::size_t>(2 * k + 1)) out.resize(2 * k + 1);
                out[2 * k] = p.coeff(k) * pow;
            }
            pow *= 4;
        }
        return IntPoly(std::move(out));
    };
    return RationalGF(scale(num_), scale(den_));
}

RationalGF RationalGF::even_part() const {
    const RationalGF neg = scaled_arg(-1);
    return (*this + neg).div_scalar(2);
}

bool RationalGF::even_only() const { return num_.even_only() && den_.even_only(); }

RationalGF RationalGF::halved_arg() const {
    return RationalGF(num_.halved_arg(), den_.halved_arg());
}

mpz_class RationalGF::coeff(long t) const {
    if (t < 0) throw std::invalid_argument("coefficient index must be non-negative");
    const mpz_class d0 = den_.coeff(0);
    std::vector<mpq_class> series(static_cast<std::size_t>(t) + 1);
    for (long k = 0; k <= t; ++k) {
        mpq_class acc(num_.coeff(static_cast<int>(k)));
        for (int j = 1; j <= den_.degree() && j <= k; ++j)
            acc -= mpq_class(den_.coeff(j)) * series[k - j];
        series[k] = acc / mpq_class(d0);
    }
    mpq_class value = series[t];
    value.canonicalize();
    if (value.get_den() != 1)
        throw std::logic_error("series coefficient is not an integer");
    return value.get_num();
}

// --- families ---

static const IntPoly& moore_denominator() {
    static const IntPoly d({1, -2, -31, -40, -20});
    return d;
}

RationalGF gf_5x3t() {
    // 24z^2 (3 + 10z + 15z^2) / (1 - 2z - 31z^2 - 40z^3 - 20z^4)
    return RationalGF(IntPoly({0, 0, 72, 240, 360}), moore_denominator());
}

RationalGF gf_5x3t_g1() {
    // 8z (1 + 2z + 5z^2)
    return RationalGF(IntPoly({0, 8, 16, 40}), moore_denominator());
}

RationalGF gf_5x3t_g2() {
    // 2z (1 + 14z + 5z^2)
    return RationalGF(IntPoly({0, 2, 28, 10}), moore_denominator());
}

mpz_class closed_form_4x3t(long t) {
    if (t < 2) throw std::invalid_argument("closed form applies for t >= 2");
    if (t == 2) return 2;
    mpz_class v;
    mpz_ui_pow_ui(v.get_mpz_t(), 6, static_cast<unsigned long>(t - 3));
    return 8 * v;
}

mpz_class lower_bound_6x6t(long t) {
    if (t < 2) throw std::invalid_argument("lower bound applies for t >= 2");
    mpz_class v;
    mpz_ui_pow_ui(v.get_mpz_t(), 144, static_cast<unsigned long>(t - 2));
    return 128 * (t + 1) * v;
}

RationalGF q_6x6t() { return RationalGF(IntPoly({0, 0, 384}), IntPoly({1, -144})); }

RationalGF f_6x6t() { return both_sides(q_6x6t(), 2); }

RationalGF both_sides(const RationalGF& q, const mpz_class& c) {
    if (c <= 0) throw std::invalid_argument("c must be positive");
    if (q.is_zero()) return q;
    if (q.coeff(0) != 0 || q.coeff(1) != 0)
        throw std::invalid_argument("first term of Q must be a multiple of z^2");
    return (q * q).div_z(1).div_scalar(4 * c) + q;
}

SevenBySixSystem system_7x6t() {
    static const IntPoly den({1, -448, 9216});
    SevenBySixSystem sys;
    // 16z (1 - 32z)(1 - 288z) = 16z - 5120z^2 + 147456z^3
    sys.H = RationalGF(IntPoly({0, 16, -5120, 147456}), den);
    sys.S = RationalGF(IntPoly({0, 0, 1024, 98304}), den);    // 1024z^2 (1 + 96z)
    sys.T = RationalGF(IntPoly({0, 0, 2048, -196608}), den);  // 2048z^2 (1 - 96z)
    sys.J = sys.S.div_scalar(2);
    sys.K = sys.T.div_scalar(4);
    sys.P = sys.K;
    return sys;
}

MooreGfs moore_gfs() {
    MooreGfs gfs;
    // 4z (1 + z)(1 - z - 10z^2) = 4z - 44z^3 - 40z^4
    gfs.g1p = RationalGF(IntPoly({0, 4, 0, -44, -40}), moore_denominator());
    gfs.g3p = RationalGF(IntPoly({0, 2, 28, 10}), moore_denominator());
    return gfs;
}

SevenBySixGf gf_7x6t() {
    const SevenBySixSystem sys = system_7x6t();
    const MooreGfs moore = moore_gfs();

    SevenBySixGf out;
    // L = J(z^2/4) * (G1' + 2 G3') / (4z); the division by z is exact since
    // both Moore functions vanish at 0
    const RationalGF mix = (moore.g1p + moore.g3p.times_scalar(2)).div_z(1).div_scalar(4);
    out.L = sys.J.squared_arg_over4() * mix;
    out.M = sys.P.squared_arg_over4() * moore.g3p.div_z(1);

    // The printed compositions of L and M carry odd powers pairing terms the
    // extension scheme cannot produce; the scheme only grows by six columns,
    // so odd coefficients are zero and only the even part counts tilings.
    const mpz_class two(2);
    const RationalGF lm_even = (out.L.scaled_arg(two) + out.M.scaled_arg(two)).even_part();
    out.Q1 = (lm_even + sys.H.squared_arg() + sys.K.squared_arg() + sys.S.squared_arg() +
              sys.T.squared_arg())
                 .times_scalar(2);

    const mpz_class minus_two(-2);
    out.A = (moore.g3p.scaled_arg(two) - moore.g3p.scaled_arg(minus_two))
                .times_z(3)
                .times_scalar(160);
    out.B = (moore.g1p.scaled_arg(two) - moore.g1p.scaled_arg(minus_two))
                .times_z(3)
                .times_scalar(136);
    out.Q2 = (out.A + out.B).times_scalar(2);

    // Theorem 7 applies in the family's own step variable w = z^2 (one unit of
    // w is one six-column extension), so square back after combining.
    auto both_sides_even = [](const RationalGF& q, const mpz_class& c) {
        if (!q.even_only()) throw std::logic_error("expected an even generating function");
        return both_sides(q.halved_arg(), c).squared_arg();
    };
    const RationalGF f1 = both_sides_even(out.Q1, 16);
    const RationalGF f2 = both_sides_even(out.Q2, 8);
    out.F = f1 + f2;
    return out;
}

BoundReport tromino_upper_bound(int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("rectangle sides must be positive");
    if (static_cast<long long>(m) * n % 3 != 0)
        throw std::invalid_argument("bound applies when 3 | mn");
    BoundReport report;
    report.rect = Rect{m, n};
    report.tromino_count = count_tromino_dp(Rect{m, n});
    report.domino_wide = count_domino_dp(Rect{m, 2 * n});
    report.domino_tall = count_domino_dp(Rect{2 * m, n});
    mpz_class pow2;
    mpz_ui_pow_ui(pow2.get_mpz_t(), 2, static_cast<unsigned long>(4LL * m * n / 3));
    report.upper_bound = pow2 * std::min(report.domino_wide, report.domino_tall);
    report.holds = report.tromino_count <= report.upper_bound;
    return report;
}

}  // namespace polyfault
