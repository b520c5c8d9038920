#include "stackcount/json_io.hpp"

namespace stackcount {

namespace {

Json coeff_list(const std::vector<Rational>& cs) {
    Json a = Json::array();
    for (const Rational& c : cs) a.push_back(rat_to_string(c));
    return a;
}

std::vector<Rational> coeff_list_back(const Json& j, const char* what) {
    if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
    std::vector<Rational> out;
    out.reserve(j.size());
    for (const auto& e : j) {
        if (!e.is_string()) throw ParseError(std::string(what) + " entries must be strings");
        out.push_back(rat_from_string(e.get<std::string>()));
    }
    return out;
}

QPoly poly_from_list(const Json& j, const char* what) {
    QPoly p;
    p.c = coeff_list_back(j, what);
    p.trim();
    return p;
}

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw ParseError(std::string("missing key '") + key + "'");
    return j.at(key);
}

long long int_field(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_number_integer()) throw ParseError(std::string("'") + key + "' must be an integer");
    return v.get<long long>();
}

std::vector<int> exp_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("'exp' must be an array");
    std::vector<int> e;
    e.reserve(j.size());
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw ParseError("'exp' entries must be integers");
        e.push_back(v.get<int>());
    }
    return e;
}

/* Shared shape of both series encoders; Coeff(term) renders one coefficient. */
template <class Ring, class Coeff>
Json series_to_json_impl(const MSeries<Ring>& s, Coeff&& coeff) {
    Json out;
    out["vars"] = s.nvars;
    out["bound"] = s.bound;
    if (!s.caps.empty()) out["caps"] = s.caps;
    Json terms = Json::array();
    for (const auto& [e, v] : s.c) {
        Json t;
        t["exp"] = e;
        t["coeff"] = coeff(v);
        terms.push_back(std::move(t));
    }
    out["terms"] = std::move(terms);
    return out;
}

template <class Ring, class Coeff>
MSeries<Ring> series_from_json_impl(const Ring& R, const Json& j, Coeff&& coeff) {
    int nvars = static_cast<int>(int_field(j, "vars"));
    int bound = static_cast<int>(int_field(j, "bound"));
    std::vector<int> caps;
    if (j.contains("caps")) caps = exp_from_json(j.at("caps"));
    MSeries<Ring> s = series_zero(R, nvars, bound, std::move(caps));
    for (const auto& t : field(j, "terms"))
        series_set(R, s, exp_from_json(field(t, "exp")), coeff(field(t, "coeff")));
    return s;
}

long long parse_integer(const std::string& tok, const char* what) {
    size_t used = 0;
    long long v;
    try {
        v = std::stoll(tok, &used);
    } catch (const std::exception&) {
        throw ParseError(std::string("bad ") + what + " '" + tok + "'");
    }
    if (used != tok.size()) throw ParseError(std::string("bad ") + what + " '" + tok + "'");
    return v;
}

std::vector<long long> split_ints(const std::string& s, const char* what) {
    if (s.empty()) throw ParseError(std::string("empty ") + what + " list");
    std::vector<long long> out;
    size_t start = 0;
    while (true) {
        size_t comma = s.find(',', start);
        std::string tok = s.substr(start, comma == std::string::npos ? comma : comma - start);
        out.push_back(parse_integer(tok, what));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

} // namespace

Json qpoly_to_json(const QPoly& p) {
    Json out;
    out["num"] = coeff_list(p.c);
    out["den"] = Json::array({"1"});
    return out;
}

Json qratfun_to_json(const QRatFun& f) {
    Json out;
    out["num"] = coeff_list(f.num.c);
    out["den"] = coeff_list(f.den.c);
    return out;
}

QPoly qpoly_from_json(const Json& j) {
    QRatFun f = qratfun_from_json(j);
    if (!f.is_polynomial() || f.den != QPoly::from_int(1))
        throw ParseError("expected a polynomial, got a proper rational function");
    return f.num;
}

QRatFun qratfun_from_json(const Json& j) {
    QPoly num = poly_from_list(field(j, "num"), "num");
    QPoly den = poly_from_list(field(j, "den"), "den");
    if (den.is_zero()) throw ParseError("zero denominator");
    return QRatFun(std::move(num), std::move(den));
}

Json volume_to_json(const Volume& v) {
    Json out;
    out["base_q"] = v.base_q;
    out["entries"] = coeff_list(v.entries);
    return out;
}

Volume volume_from_json(const Json& j) {
    long long q = int_field(j, "base_q");
    return Volume(q, coeff_list_back(field(j, "entries"), "entries"));
}

Json series_to_json(const QRatRing&, const MSeries<QRatRing>& s) {
    return series_to_json_impl(s, [](const QRatFun& f) { return qratfun_to_json(f); });
}

Json series_to_json(const VolRing&, const MSeries<VolRing>& s) {
    return series_to_json_impl(s, [](const Volume& v) { return volume_to_json(v); });
}

MSeries<QRatRing> series_qratfun_from_json(const Json& j) {
    return series_from_json_impl(QRatRing{}, j,
                                 [](const Json& c) { return qratfun_from_json(c); });
}

MSeries<VolRing> series_volume_from_json(const Json& j) {
    /* The ring parameters are recovered from the payload: base from the first
     * materialized coefficient, validity length from the series bound. */
    int bound = static_cast<int>(int_field(j, "bound"));
    long long base = 0;
    for (const auto& t : field(j, "terms")) {
        const Json& c = field(t, "coeff");
        if (!field(c, "entries").empty()) {
            base = int_field(c, "base_q");
            break;
        }
    }
    if (base == 0) base = 2;   // series with no materialized term: any tower fits
    VolRing R{base, bound};
    return series_from_json_impl(R, j, [](const Json& c) { return volume_from_json(c); });
}

std::vector<int> parse_dim_list(const std::string& s) {
    std::vector<int> out;
    for (long long v : split_ints(s, "dimension")) {
        if (v < -1000000 || v > 1000000)
            throw ParseError("dimension entry out of range: " + std::to_string(v));
        out.push_back(static_cast<int>(v));
    }
    return out;
}

std::vector<long long> parse_field_list(const std::string& s) {
    return split_ints(s, "field");
}

} // namespace stackcount
