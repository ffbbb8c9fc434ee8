#include "uniqset/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "uniqset/errors.hpp"

namespace uniqset {

namespace {

constexpr unsigned long kMaxOrder = 65536;

std::vector<unsigned long> distinct_prime_factors(unsigned long n) {
    std::vector<unsigned long> ps;
    for (unsigned long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

// Exact division of integer polynomials (ascending coefficients); the
// divisor is monic and the remainder is known to vanish.
std::vector<Integer> poly_div_exact(std::vector<Integer> num, const std::vector<Integer>& den) {
    const size_t dn = num.size() - 1;
    const size_t dd = den.size() - 1;
    std::vector<Integer> q(dn - dd + 1, Integer(0));
    for (size_t k = dn - dd + 1; k-- > 0;) {
        q[k] = num[k + dd];
        if (sgn(q[k]) == 0) continue;
        for (size_t i = 0; i <= dd; ++i) num[k + i] -= q[k] * den[i];
    }
    for (size_t i = 0; i < dd; ++i)
        if (sgn(num[i]) != 0) throw std::logic_error("cyclotomic polynomial division not exact");
    return q;
}

struct FieldTable {
    unsigned long order = 1;
    unsigned long phi = 1;
    std::vector<Integer> poly;               // monic, ascending, size phi+1
    std::vector<std::vector<Integer>> rows;  // x^e mod poly for e < max(order, 2*phi-1)
    std::vector<unsigned long> primes;       // distinct primes dividing order
};

const FieldTable& table(unsigned long order) {
    static std::map<unsigned long, std::unique_ptr<FieldTable>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(order);
    if (it != cache.end()) return *it->second;

    auto t = std::make_unique<FieldTable>();
    t->order = order;
    t->phi = euler_phi(order);
    t->poly = cyclotomic_polynomial(order);
    t->primes = distinct_prime_factors(order);

    const size_t extent = std::max<size_t>(2 * t->phi - 1, order);
    t->rows.reserve(extent);
    for (size_t e = 0; e < extent; ++e) {
        std::vector<Integer> row(t->phi, Integer(0));
        if (e < t->phi) {
            row[e] = 1;
        } else {
            const std::vector<Integer>& prev = t->rows[e - 1];
            const Integer& top = prev[t->phi - 1];
            for (size_t j = 0; j < t->phi; ++j) {
                if (j > 0) row[j] = prev[j - 1];
                row[j] -= top * t->poly[j];
            }
        }
        t->rows.push_back(std::move(row));
    }
    auto [pos, inserted] = cache.emplace(order, std::move(t));
    return *pos->second;
}

}  // namespace

unsigned long euler_phi(unsigned long n) {
    unsigned long result = n;
    for (unsigned long p : distinct_prime_factors(n)) result -= result / p;
    return result;
}

std::vector<Integer> cyclotomic_polynomial(unsigned long n) {
    // Phi_d for every divisor d of n, ascending; Phi_d = (x^d - 1) / prod of
    // the earlier ones.
    std::map<unsigned long, std::vector<Integer>> phi_of;
    for (unsigned long d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        std::vector<Integer> num(d + 1, Integer(0));
        num[0] = -1;
        num[d] = 1;
        for (const auto& [dd, poly] : phi_of)
            if (d % dd == 0) num = poly_div_exact(std::move(num), poly);
        phi_of.emplace(d, std::move(num));
    }
    return phi_of.at(n);
}

namespace {

void fold_row(std::vector<Rational>& acc, const Rational& scale, const std::vector<Integer>& row) {
    if (sgn(scale) == 0) return;
    for (size_t j = 0; j < acc.size(); ++j) {
        if (sgn(row[j]) == 0) continue;
        acc[j] += scale * row[j];
    }
}

// sigma_a: zeta -> zeta^a applied to a raw power-basis vector.
std::vector<Rational> apply_automorphism(const FieldTable& t, const std::vector<Rational>& raw,
                                         unsigned long a) {
    std::vector<Rational> out(t.phi, Rational(0));
    for (size_t e = 0; e < t.phi; ++e) {
        if (sgn(raw[e]) == 0) continue;
        fold_row(out, raw[e], t.rows[(a * e) % t.order]);
    }
    return out;
}

// Solves sum_j c_j * cols[j] = v by Gauss-Jordan elimination. The columns
// are linearly independent and the system is consistent by construction.
std::vector<Rational> solve_consistent(const std::vector<std::vector<Integer>>& cols,
                                       const std::vector<Rational>& v) {
    const size_t nrows = v.size();
    const size_t ncols = cols.size();
    std::vector<std::vector<Rational>> m(nrows, std::vector<Rational>(ncols + 1, Rational(0)));
    for (size_t i = 0; i < nrows; ++i) {
        for (size_t j = 0; j < ncols; ++j) m[i][j] = Rational(cols[j][i]);
        m[i][ncols] = v[i];
    }
    for (size_t j = 0; j < ncols; ++j) {
        size_t piv = j;
        while (piv < nrows && sgn(m[piv][j]) == 0) ++piv;
        if (piv == nrows) throw std::logic_error("subfield basis not independent");
        std::swap(m[j], m[piv]);
        const Rational inv_p = 1 / m[j][j];
        for (size_t k = j; k <= ncols; ++k) m[j][k] *= inv_p;
        for (size_t i = 0; i < nrows; ++i) {
            if (i == j || sgn(m[i][j]) == 0) continue;
            const Rational f = m[i][j];
            for (size_t k = j; k <= ncols; ++k) m[i][k] -= f * m[j][k];
        }
    }
    for (size_t i = ncols; i < nrows; ++i)
        if (sgn(m[i][ncols]) != 0) throw std::logic_error("subfield rewrite inconsistent");
    std::vector<Rational> c(ncols);
    for (size_t j = 0; j < ncols; ++j) c[j] = m[j][ncols];
    return c;
}

// Reduces (order, raw power-basis coords) to the canonical conductor form.
std::pair<unsigned long, std::vector<Rational>> canonical_form(unsigned long order,
                                                               std::vector<Rational> raw) {
    for (;;) {
        const FieldTable& t = table(order);
        size_t nonzero = 0;
        size_t mono = 0;
        for (size_t e = 0; e < t.phi; ++e) {
            if (sgn(raw[e]) != 0) {
                ++nonzero;
                mono = e;
            }
        }
        if (nonzero == 0) return {1, {Rational(0)}};
        if (nonzero == 1 && mono == 0) return {1, {raw[0]}};

        if (nonzero == 1) {
            // value raw[mono] * zeta^mono
            const unsigned long g = std::gcd(mono, order);
            if (g > 1) {
                const Rational c = raw[mono];
                order /= g;
                const FieldTable& tp = table(order);
                std::vector<Rational> next(tp.phi, Rational(0));
                fold_row(next, c, tp.rows[mono / g]);
                raw = std::move(next);
                continue;
            }
            if (order % 4 != 2) return {order, std::move(raw)};
        }

        if (order % 4 == 2) {
            // Q(zeta_L) == Q(zeta_{L/2}) for odd L/2:
            // zeta_L^e = (-1)^e * zeta_{L/2}^{e*(L/2+1)/2 mod L/2}
            const unsigned long half = order / 2;
            const FieldTable& tp = table(half);
            const unsigned long mult = (half + 1) / 2;
            std::vector<Rational> next(tp.phi, Rational(0));
            for (size_t e = 0; e < t.phi; ++e) {
                if (sgn(raw[e]) == 0) continue;
                const Rational c = (e % 2 == 0) ? raw[e] : Rational(-raw[e]);
                fold_row(next, c, tp.rows[(e * mult) % half]);
            }
            order = half;
            raw = std::move(next);
            continue;
        }

        bool reduced = false;
        for (unsigned long p : t.primes) {
            const unsigned long sub = order / p;
            bool fixed = true;
            for (unsigned long step = 1; step < p && fixed; ++step) {
                const unsigned long a = 1 + sub * step;
                if (std::gcd(a, order) != 1) continue;
                if (apply_automorphism(t, raw, a) != raw) fixed = false;
            }
            if (!fixed) continue;
            const FieldTable& tp = table(sub);
            std::vector<std::vector<Integer>> cols;
            cols.reserve(tp.phi);
            for (size_t j = 0; j < tp.phi; ++j) cols.push_back(t.rows[(p * j) % order]);
            raw = solve_consistent(cols, raw);
            order = sub;
            reduced = true;
            break;
        }
        if (!reduced) return {order, std::move(raw)};
    }
}

unsigned long lcm_order(unsigned long a, unsigned long b) {
    const unsigned long l = std::lcm(a, b);
    if (l > kMaxOrder) throw Error("cyclotomic order " + std::to_string(l) + " exceeds the supported range");
    return l;
}

// Raw coords of `value` lifted into the power basis of `order`.
std::vector<Rational> lift_raw(const CyclotomicNumber& value, unsigned long order) {
    const FieldTable& t = table(order);
    const unsigned long stride = order / value.order();
    std::vector<Rational> out(t.phi, Rational(0));
    const auto& cs = value.coeffs();
    for (size_t e = 0; e < cs.size(); ++e) {
        if (sgn(cs[e]) == 0) continue;
        fold_row(out, cs[e], t.rows[(e * stride) % order]);
    }
    return out;
}

}  // namespace

CyclotomicNumber::CyclotomicNumber(unsigned long order, std::vector<Rational> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {}

CyclotomicNumber CyclotomicNumber::from_rational(const Rational& q) {
    return CyclotomicNumber(1, {q});
}

CyclotomicNumber CyclotomicNumber::from_gaussian(const GaussianRational& z) {
    if (sgn(z.im) == 0) return from_rational(z.re);
    // i = -zeta_4, so a + bi = a - b*zeta_4.
    return CyclotomicNumber(4, {z.re, Rational(-z.im)});
}

CyclotomicNumber CyclotomicNumber::root(unsigned long order, long exponent) {
    if (order == 0 || order > kMaxOrder) throw Error("root order out of range");
    long e = exponent % static_cast<long>(order);
    if (e < 0) e += static_cast<long>(order);
    const FieldTable& t = table(order);
    std::vector<Rational> raw(t.phi, Rational(0));
    fold_row(raw, Rational(1), t.rows[static_cast<size_t>(e)]);
    auto [ord, coeffs] = canonical_form(order, std::move(raw));
    return CyclotomicNumber(ord, std::move(coeffs));
}

std::optional<Rational> CyclotomicNumber::to_rational() const {
    if (order_ == 1) return coeffs_[0];
    return std::nullopt;
}

std::optional<GaussianRational> CyclotomicNumber::to_gaussian() const {
    if (order_ == 1) return GaussianRational(coeffs_[0]);
    if (order_ == 4) return GaussianRational(coeffs_[0], Rational(-coeffs_[1]));
    return std::nullopt;
}

CyclotomicNumber CyclotomicNumber::conj() const {
    if (order_ == 1) return *this;
    const FieldTable& t = table(order_);
    std::vector<Rational> out(t.phi, Rational(0));
    for (size_t e = 0; e < coeffs_.size(); ++e) {
        if (sgn(coeffs_[e]) == 0) continue;
        fold_row(out, coeffs_[e], t.rows[(order_ - e) % order_]);
    }
    auto [ord, coeffs] = canonical_form(order_, std::move(out));
    return CyclotomicNumber(ord, std::move(coeffs));
}

CyclotomicNumber CyclotomicNumber::inverse() const {
    if (is_zero()) throw DivisionByZero();
    if (order_ == 1) return from_rational(1 / coeffs_[0]);

    size_t nonzero = 0, mono = 0;
    for (size_t e = 0; e < coeffs_.size(); ++e)
        if (sgn(coeffs_[e]) != 0) {
            ++nonzero;
            mono = e;
        }
    if (nonzero == 1) {
        // (c * zeta^e)^-1 = (1/c) * zeta^{L-e}
        const FieldTable& t = table(order_);
        std::vector<Rational> out(t.phi, Rational(0));
        fold_row(out, 1 / coeffs_[mono], t.rows[(order_ - mono) % order_]);
        auto [ord, coeffs] = canonical_form(order_, std::move(out));
        return CyclotomicNumber(ord, std::move(coeffs));
    }

    // Solve (multiplication-by-this matrix) * u = e_0 over the rationals.
    const FieldTable& t = table(order_);
    std::vector<std::vector<Rational>> cols(t.phi);
    std::vector<Rational> col(coeffs_);
    col.resize(t.phi, Rational(0));
    cols[0] = col;
    for (size_t j = 1; j < t.phi; ++j) {
        std::vector<Rational> next(t.phi, Rational(0));
        const Rational top = col[t.phi - 1];
        for (size_t i = 0; i < t.phi; ++i) {
            if (i > 0) next[i] = col[i - 1];
            if (sgn(top) != 0 && sgn(t.poly[i]) != 0) next[i] -= top * t.poly[i];
        }
        col = std::move(next);
        cols[j] = col;
    }
    const size_t n = t.phi;
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1, Rational(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) m[i][j] = cols[j][i];
    m[0][n] = 1;
    for (size_t j = 0; j < n; ++j) {
        size_t piv = j;
        while (piv < n && sgn(m[piv][j]) == 0) ++piv;
        if (piv == n) throw std::logic_error("nonzero cyclotomic element not invertible");
        std::swap(m[j], m[piv]);
        const Rational inv_p = 1 / m[j][j];
        for (size_t k = j; k <= n; ++k) m[j][k] *= inv_p;
        for (size_t i = 0; i < n; ++i) {
            if (i == j || sgn(m[i][j]) == 0) continue;
            const Rational f = m[i][j];
            for (size_t k = j; k <= n; ++k) m[i][k] -= f * m[j][k];
        }
    }
    std::vector<Rational> u(n);
    for (size_t j = 0; j < n; ++j) u[j] = m[j][n];
    auto [ord, coeffs] = canonical_form(order_, std::move(u));
    return CyclotomicNumber(ord, std::move(coeffs));
}

CyclotomicNumber CyclotomicNumber::operator-() const {
    std::vector<Rational> out(coeffs_);
    for (auto& c : out) c = -c;
    return CyclotomicNumber(order_, std::move(out));
}

CyclotomicNumber operator+(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    if (a.order_ == 1 && b.order_ == 1)
        return CyclotomicNumber::from_rational(a.coeffs_[0] + b.coeffs_[0]);
    const unsigned long order = lcm_order(a.order_, b.order_);
    std::vector<Rational> raw = lift_raw(a, order);
    const std::vector<Rational> rb = lift_raw(b, order);
    for (size_t j = 0; j < raw.size(); ++j) raw[j] += rb[j];
    auto [ord, coeffs] = canonical_form(order, std::move(raw));
    return CyclotomicNumber(ord, std::move(coeffs));
}

CyclotomicNumber operator-(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    return a + (-b);
}

CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    if (a.is_zero() || b.is_zero()) return CyclotomicNumber();
    if (a.order_ == 1 && b.order_ == 1)
        return CyclotomicNumber::from_rational(a.coeffs_[0] * b.coeffs_[0]);
    const unsigned long order = lcm_order(a.order_, b.order_);
    const FieldTable& t = table(order);
    const std::vector<Rational> ra = lift_raw(a, order);
    const std::vector<Rational> rb = lift_raw(b, order);
    std::vector<Rational> conv(2 * t.phi - 1, Rational(0));
    for (size_t i = 0; i < t.phi; ++i) {
        if (sgn(ra[i]) == 0) continue;
        for (size_t j = 0; j < t.phi; ++j) {
            if (sgn(rb[j]) == 0) continue;
            conv[i + j] += ra[i] * rb[j];
        }
    }
    std::vector<Rational> raw(conv.begin(), conv.begin() + t.phi);
    for (size_t e = t.phi; e < conv.size(); ++e) fold_row(raw, conv[e], t.rows[e]);
    auto [ord, coeffs] = canonical_form(order, std::move(raw));
    return CyclotomicNumber(ord, std::move(coeffs));
}

CyclotomicNumber operator/(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    return a * b.inverse();
}

int CyclotomicNumber::compare(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    if (a.order_ != b.order_) return a.order_ < b.order_ ? -1 : 1;
    for (size_t j = 0; j < a.coeffs_.size(); ++j) {
        const int c = cmp(a.coeffs_[j], b.coeffs_[j]);
        if (c != 0) return c;
    }
    return 0;
}

CycloAccumulator::CycloAccumulator(unsigned long order) : order_(order) {
    const FieldTable& t = table(order);
    raw_.assign(t.phi, Rational(0));
}

void CycloAccumulator::add_shifted(const CyclotomicNumber& value, unsigned long shift) {
    if (value.is_zero()) return;
    if (order_ % value.order() != 0)
        throw std::logic_error("accumulator order does not contain the operand");
    const FieldTable& t = table(order_);
    const unsigned long stride = order_ / value.order();
    const auto& cs = value.coeffs();
    for (size_t e = 0; e < cs.size(); ++e) {
        if (sgn(cs[e]) == 0) continue;
        fold_row(raw_, cs[e], t.rows[(e * stride + shift) % order_]);
    }
}

void CycloAccumulator::add_scaled_root(const GaussianRational& scale, unsigned long exponent) {
    if (scale.is_zero()) return;
    const FieldTable& t = table(order_);
    const unsigned long e = exponent % order_;
    fold_row(raw_, scale.re, t.rows[e]);
    if (sgn(scale.im) != 0) {
        if (order_ % 4 != 0) throw std::logic_error("imaginary part requires 4 | accumulator order");
        fold_row(raw_, scale.im, t.rows[(e + 3 * order_ / 4) % order_]);
    }
}

CyclotomicNumber CycloAccumulator::finish() const {
    auto [ord, coeffs] = canonical_form(order_, raw_);
    return CyclotomicNumber(ord, std::move(coeffs));
}

std::optional<GaussianRational> CycloAccumulator::finish_as_gaussian() const {
    if (order_ == 1) return GaussianRational(raw_[0]);
    if (order_ % 4 != 0) return std::nullopt;
    const FieldTable& t = table(order_);
    const std::vector<Integer>& ivec = t.rows[3 * order_ / 4];
    // raw = a * e_0 + b * ivec exactly when the value is a + bi.
    size_t probe = 0;
    for (size_t j = 1; j < t.phi; ++j)
        if (sgn(ivec[j]) != 0) {
            probe = j;
            break;
        }
    if (probe == 0) return std::nullopt;
    const Rational b = raw_[probe] / ivec[probe];
    for (size_t j = 1; j < t.phi; ++j)
        if (raw_[j] != b * ivec[j]) return std::nullopt;
    const Rational a = raw_[0] - b * ivec[0];
    return GaussianRational(a, b);
}

}  // namespace uniqset
