#include "qrs/serialize.hpp"

#include "qrs/errors.hpp"
#include "qrs/tensor.hpp"

namespace qrs {

namespace {

nlohmann::json poly_to_json(const LaurentPoly& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& t : p.terms())
        terms.push_back({t.eu, t.ev, rational_str(t.c)});
    return terms;
}

LaurentPoly poly_from_json(const nlohmann::json& j) {
    std::vector<LaurentPoly::Term> terms;
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 3)
            throw ParseError("scalar json: bad polynomial term");
        terms.push_back({t[0].get<int32_t>(), t[1].get<int32_t>(),
                         rational_from_string(t[2].get<std::string>())});
    }
    return LaurentPoly::from_terms(std::move(terms));
}

nlohmann::json exps_to_json(const Monomial& m) {
    nlohmann::json a = nlohmann::json::array();
    for (int32_t e : m.exps)
        a.push_back(e);
    return a;
}

Monomial exps_from_json(const nlohmann::json& j, size_t n) {
    if (!j.is_array() || j.size() != n)
        throw ParseError("element json: exponent vector has wrong length");
    Monomial m;
    for (const auto& e : j)
        m.exps.push_back(e.get<int32_t>());
    return m;
}

}  // namespace

nlohmann::json to_json(const Scalar& x) {
    return {{"num", poly_to_json(x.num())}, {"den", poly_to_json(x.den())}};
}

Scalar scalar_from_json(const nlohmann::json& j) {
    return Scalar::from_num_den(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
}

nlohmann::json to_json(const Element& x) {
    nlohmann::json terms = nlohmann::json::array();
    for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it)
        terms.push_back({{"coeff", to_json(it->second)}, {"exps", exps_to_json(it->first)}});
    return {{"algebra", x.signature()->name()}, {"terms", terms}};
}

Element element_from_json(const nlohmann::json& j) {
    SigPtr sig = AlgebraSignature::preset(j.at("algebra").get<std::string>());
    Element x = Element::zero(sig);
    for (const auto& t : j.at("terms")) {
        Monomial m = exps_from_json(t.at("exps"), sig->size());
        Scalar c = scalar_from_json(t.at("coeff"));
        // route through the validating constructor
        x += Element::monomial(sig, std::move(m), std::move(c));
    }
    return x;
}

nlohmann::json to_json(const TensorElement& x) {
    nlohmann::json terms = nlohmann::json::array();
    for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it)
        terms.push_back({{"coeff", to_json(it->second)},
                         {"left", exps_to_json(it->first.first)},
                         {"right", exps_to_json(it->first.second)}});
    return {{"algebra", x.signature()->name()}, {"terms", terms}};
}

}  // namespace qrs
