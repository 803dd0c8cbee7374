#include "signedpat/series.hpp"

#include <algorithm>

namespace signedpat {

namespace {

void check_order(int order)
{
    if (order < 0)
        throw DomainError("series order must be non-negative, got " + std::to_string(order));
}

// 1/(1 - c·x)
PowerSeries geometric(long long c, int order)
{
    std::vector<Rational> coeffs(order + 1);
    BigInt term = 1;
    for (int i = 0; i <= order; ++i, term *= c)
        coeffs[i] = Rational(term);
    return PowerSeries(std::move(coeffs), order);
}

} // namespace

PowerSeries::PowerSeries(int order)
{
    check_order(order);
    coeffs_.resize(order + 1);
}

PowerSeries::PowerSeries(std::vector<Rational> coeffs, int order) : coeffs_(std::move(coeffs))
{
    check_order(order);
    coeffs_.resize(order + 1);
}

PowerSeries PowerSeries::constant(const Rational& c, int order)
{
    PowerSeries s(order);
    s.coeffs_[0] = c;
    return s;
}

PowerSeries PowerSeries::variable(int order)
{
    return linear(0, 1, order);
}

PowerSeries PowerSeries::linear(const Rational& a, const Rational& b, int order)
{
    return PowerSeries({a, b}, order);
}

PowerSeries PowerSeries::truncated(int order) const
{
    return PowerSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + std::min(order, this->order()) + 1),
                       order);
}

std::string PowerSeries::to_string() const
{
    std::string out;
    for (int i = 0; i <= order(); ++i) {
        const Rational& c = coeffs_[i];
        if (c == 0 && !(i == 0 && order() == 0))
            continue;
        const bool negative = c < 0 && !out.empty();
        if (!out.empty())
            out += negative ? " - " : " + ";
        const Rational mag = negative ? Rational(-c) : c;
        if (i == 0) {
            out += mag.str();
            continue;
        }
        const std::string power = i == 1 ? "x" : "x^" + std::to_string(i);
        if (mag == 1)
            out += power;
        else if (mag == -1)
            out += "-" + power;
        else
            out += mag.str() + "*" + power;
    }
    return out.empty() ? "0" : out;
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b)
{
    const int n = std::min(a.order(), b.order());
    std::vector<Rational> c(n + 1);
    for (int i = 0; i <= n; ++i)
        c[i] = a[i] + b[i];
    return PowerSeries(std::move(c), n);
}

PowerSeries operator-(const PowerSeries& a)
{
    return Rational(-1) * a;
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b)
{
    return a + (-b);
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b)
{
    const int n = std::min(a.order(), b.order());
    std::vector<Rational> c(n + 1);
    for (int i = 0; i <= n; ++i) {
        if (a[i] == 0)
            continue;
        for (int j = 0; i + j <= n; ++j)
            c[i + j] += a[i] * b[j];
    }
    return PowerSeries(std::move(c), n);
}

PowerSeries operator*(const Rational& k, const PowerSeries& a)
{
    std::vector<Rational> c(a.coeffs().begin(), a.coeffs().end());
    for (auto& x : c)
        x *= k;
    return PowerSeries(std::move(c), a.order());
}

PowerSeries operator/(const PowerSeries& a, const PowerSeries& b)
{
    if (b[0] == 0)
        throw SingularDivisionError("series division by a divisor with zero constant term");
    const int n = std::min(a.order(), b.order());
    std::vector<Rational> q(n + 1);
    for (int i = 0; i <= n; ++i) {
        Rational acc = a[i];
        for (int j = 1; j <= i; ++j)
            acc -= b[j] * q[i - j];
        q[i] = acc / b[0];
    }
    return PowerSeries(std::move(q), n);
}

PowerSeries ps_exp(const PowerSeries& a)
{
    if (a[0] != 0)
        throw DomainError("exp needs a series with zero constant term");
    // f' = a'·f  =>  n·f_n = sum_{k=1..n} k·a_k·f_{n-k}
    const int n = a.order();
    std::vector<Rational> f(n + 1);
    f[0] = 1;
    for (int m = 1; m <= n; ++m) {
        Rational acc = 0;
        for (int k = 1; k <= m; ++k)
            if (a[k] != 0)
                acc += k * a[k] * f[m - k];
        f[m] = acc / m;
    }
    return PowerSeries(std::move(f), n);
}

PowerSeries ps_log(const PowerSeries& a)
{
    if (a[0] != 1)
        throw DomainError("log needs a series with constant term 1");
    // a·g' = a'  =>  m·g_m = m·a_m - sum_{k=1..m-1} k·g_k·a_{m-k}
    const int n = a.order();
    std::vector<Rational> g(n + 1);
    for (int m = 1; m <= n; ++m) {
        Rational acc = m * a[m];
        for (int k = 1; k < m; ++k)
            acc -= k * g[k] * a[m - k];
        g[m] = acc / m;
    }
    return PowerSeries(std::move(g), n);
}

PowerSeries ps_pow_rational(const PowerSeries& a, const Rational& e)
{
    if (a[0] != 1)
        throw DomainError("rational power needs a series with constant term 1");
    return ps_exp(e * ps_log(a));
}

PowerSeries ps_integrate(const PowerSeries& a)
{
    const int n = a.order();
    std::vector<Rational> c(n + 1);
    for (int i = 1; i <= n; ++i)
        c[i] = a[i - 1] / i;
    return PowerSeries(std::move(c), n);
}

PowerSeries ps_derivative(const PowerSeries& a)
{
    const int n = std::max(a.order() - 1, 0);
    std::vector<Rational> c(n + 1);
    for (int i = 1; i <= a.order(); ++i)
        c[i - 1] = i * a[i];
    return PowerSeries(std::move(c), n);
}

PowerSeries egf_d(int r, int order)
{
    if (r < 1)
        throw DomainError("egf_d needs r >= 1");
    const PowerSeries inv = geometric(r - 1, order);  // 1/(1-(r-1)x)
    return ps_exp(PowerSeries::variable(order) * inv) * inv;
}

PowerSeries egf_chain(int r, int l, int order)
{
    if (l < 1 || l > r)
        throw DomainError("egf_chain needs 1 <= l <= r, got l=" + std::to_string(l) + ", r=" + std::to_string(r));
    if (l == 1)
        return egf_d(r, order);
    // ((1-(r-l)x) / (1-(r-1)x)^l)^(1/(l-1))
    const PowerSeries numer = PowerSeries::linear(1, -(r - l), order);
    const PowerSeries inv = geometric(r - 1, order);
    PowerSeries base = numer;
    for (int i = 0; i < l; ++i)
        base = base * inv;
    return ps_pow_rational(base, Rational(1, l - 1));
}

PowerSeries egf_case3(int r, int order)
{
    if (r < 3)
        throw DomainError("egf_case3 needs r >= 3");
    const PowerSeries d = egf_d(r - 1, order);
    const PowerSeries numer = PowerSeries::constant(1, order) + ps_integrate(d * d);
    return numer * geometric(r - 1, order);
}

PowerSeries egf_case4(int r, int order)
{
    if (r < 2)
        throw DomainError("egf_case4 needs r >= 2");
    const PowerSeries inv = geometric(r - 1, order);
    const PowerSeries numer = PowerSeries::constant(1, order) + ps_integrate(egf_d(r - 1, order) * inv);
    return numer * inv;
}

std::vector<BigInt> egf_to_counts(const PowerSeries& f, int nmax)
{
    if (nmax > f.order())
        throw DomainError("requested " + std::to_string(nmax) + " counts from a series of order "
                          + std::to_string(f.order()));
    std::vector<BigInt> counts;
    counts.reserve(nmax + 1);
    BigInt fact = 1;
    for (int n = 0; n <= nmax; ++n) {
        if (n > 0)
            fact *= n;
        const Rational value = f[n] * fact;
        if (denominator(value) != 1)
            throw IntegralityError("n!*[x^" + std::to_string(n) + "] = " + value.str() + " is not an integer");
        counts.push_back(numerator(value));
    }
    return counts;
}

} // namespace signedpat
