#include "stackcount/volume.hpp"

namespace stackcount {

Volume::Volume(long long q, std::vector<Rational> e)
    : base_q(q), entries(std::move(e)) {
    if (!is_prime_power(static_cast<std::uint64_t>(q)))
        throw DomainError("volume base " + std::to_string(q) + " is not a prime power");
}

Volume Volume::constant(long long q, const Rational& c, int len) {
    if (len < 0) throw DomainError("negative validity length");
    return Volume(q, std::vector<Rational>(len, c));
}

bool operator==(const Volume& a, const Volume& b) {
    return a.base_q == b.base_q && a.entries == b.entries;
}

static void check_bases(const Volume& a, const Volume& b) {
    if (a.base_q != b.base_q)
        throw DomainError("volume base mismatch: " + std::to_string(a.base_q) +
                          " vs " + std::to_string(b.base_q));
}

template <typename Op>
static Volume zip(const Volume& a, const Volume& b, Op op) {
    check_bases(a, b);
    Volume r;
    r.base_q = a.base_q;
    size_t n = std::min(a.entries.size(), b.entries.size());
    r.entries.reserve(n);
    for (size_t i = 0; i < n; ++i) r.entries.push_back(op(a.entries[i], b.entries[i]));
    return r;
}

Volume vol_add(const Volume& a, const Volume& b) {
    return zip(a, b, [](const Rational& x, const Rational& y) { return x + y; });
}

Volume vol_sub(const Volume& a, const Volume& b) {
    return zip(a, b, [](const Rational& x, const Rational& y) { return x - y; });
}

Volume vol_mul(const Volume& a, const Volume& b) {
    return zip(a, b, [](const Rational& x, const Rational& y) { return x * y; });
}

Volume vol_div(const Volume& a, const Volume& b) {
    return zip(a, b, [](const Rational& x, const Rational& y) {
        if (y == 0) throw DomainError("division by a volume with a zero entry");
        return Rational(x / y);
    });
}

Volume vol_scale(const Rational& s, const Volume& a) {
    Volume r = a;
    for (auto& e : r.entries) e *= s;
    return r;
}

Volume vol_adams_relaxed(const Volume& a, int m) {
    if (m < 1) throw DomainError("adams operation needs m >= 1");
    Volume r;
    r.base_q = a.base_q;
    for (int n = m; n <= a.len(); n += m) r.entries.push_back(a.entries[n - 1]);
    return r;
}

Volume vol_adams(const Volume& a, int m) {
    Volume r = vol_adams_relaxed(a, m);
    if (r.entries.empty())
        throw DomainError("adams operation exhausted the validity window (len " +
                          std::to_string(a.len()) + ", m " + std::to_string(m) + ")");
    return r;
}

Volume vol_from_ratfun(const QRatFun& f, long long base_q, int len) {
    Volume r = Volume::constant(base_q, Rational(0), 0);
    Rational qn(1);
    for (int n = 1; n <= len; ++n) {
        qn *= static_cast<long>(base_q);
        r.entries.push_back(evaluate_at(f, qn));
    }
    return r;
}

std::variant<QPoly, FitFailure>
detect_polynomial_count(const std::vector<std::pair<long long, Rational>>& samples,
                        int degree_bound) {
    if (degree_bound < 0) throw DomainError("negative degree bound");
    size_t need = static_cast<size_t>(degree_bound) + 2;
    if (samples.size() < need)
        throw DomainError("need at least " + std::to_string(need) + " samples, got " +
                          std::to_string(samples.size()));
    for (size_t i = 0; i < samples.size(); ++i) {
        if (!is_prime_power(static_cast<std::uint64_t>(samples[i].first)))
            throw DomainError("sample point " + std::to_string(samples[i].first) +
                              " is not a prime power");
        for (size_t j = i + 1; j < samples.size(); ++j)
            if (samples[i].first == samples[j].first)
                throw DomainError("duplicate sample point " +
                                  std::to_string(samples[i].first));
    }

    std::vector<std::pair<Rational, Rational>> pts;
    for (size_t i = 0; i <= static_cast<size_t>(degree_bound); ++i)
        pts.push_back({make_rational(samples[i].first), samples[i].second});
    QPoly fit = lagrange_interpolate(pts);

    for (size_t i = degree_bound + 1; i < samples.size(); ++i) {
        Rational have = fit.eval(make_rational(samples[i].first));
        if (have != samples[i].second)
            return FitFailure{i, samples[i].first, have, samples[i].second};
    }
    return fit;
}

} // namespace stackcount
