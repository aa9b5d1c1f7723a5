#include <dalg/json_io.hpp>

#include <dalg/text.hpp>

namespace dalg
{

namespace
{

const nlohmann::json &field(const nlohmann::json &j, const char *name)
{
    if (!j.is_object() || !j.contains(name)) {
        throw std::invalid_argument(std::string("JSON object lacks field '") + name + "'");
    }
    return j.at(name);
}

const nlohmann::json &array_field(const nlohmann::json &j, const char *name)
{
    const auto &a = field(j, name);
    if (!a.is_array()) {
        throw std::invalid_argument(std::string("JSON field '") + name + "' must be an array");
    }
    return a;
}

std::string poly_string(const nlohmann::json &j)
{
    if (j.is_string()) {
        return j.get<std::string>();
    }
    if (j.is_number_integer()) {
        return std::to_string(j.get<long long>());
    }
    throw std::invalid_argument("polynomial must be given as a string");
}

} // namespace

Rational rational_from_json(const nlohmann::json &j)
{
    if (j.is_string()) {
        return Rational::parse(j.get<std::string>());
    }
    if (j.is_number_integer()) {
        return Rational(j.get<long>());
    }
    throw std::invalid_argument("rational must be a string \"p/q\" or an integer");
}

nlohmann::json to_json(const law_report &r)
{
    nlohmann::json j;
    j["law"] = r.law;
    j["carrier"] = r.carrier;
    j["trials"] = r.trials;
    j["pass"] = r.pass;
    j["seed"] = r.seed;
    if (r.skipped) {
        j["skipped"] = true;
    }
    if (!r.note.empty()) {
        j["note"] = r.note;
    }
    if (r.failure) {
        nlohmann::json inputs = nlohmann::json::object();
        for (const auto &[name, value] : r.failure->inputs) {
            inputs[name] = value;
        }
        j["counterexample"] = {{"inputs", inputs}, {"lhs", r.failure->lhs}, {"rhs", r.failure->rhs}};
    }
    return j;
}

nlohmann::json to_json(const series<Rational> &s)
{
    auto coeffs = nlohmann::json::array();
    for (const auto &c : s.coeffs()) {
        coeffs.push_back(c.str());
    }
    return {{"flavor", flavor_name(s.kind())}, {"coeffs", coeffs}};
}

series<Rational> series_from_json(const nlohmann::json &j)
{
    const auto name = field(j, "flavor").get<std::string>();
    flavor kind;
    if (name == "hurwitz") {
        kind = flavor::hurwitz;
    } else if (name == "power") {
        kind = flavor::power;
    } else {
        throw std::invalid_argument("unknown series flavor '" + name + "'");
    }
    std::vector<Rational> coeffs;
    for (const auto &c : array_field(j, "coeffs")) {
        coeffs.push_back(rational_from_json(c));
    }
    return series<Rational>(std::move(coeffs), kind);
}

namespace
{

nlohmann::json word_json(const rb_word &w)
{
    auto out = nlohmann::json::array();
    for (const auto &m : w) {
        out.push_back(to_string(poly::term(Rational(1), m)));
    }
    return out;
}

} // namespace

nlohmann::json to_json(const rb_elem &e)
{
    auto terms = nlohmann::json::array();
    for (const auto &[k, c] : e.terms()) {
        terms.push_back(
            {{"word", word_json(k.first)}, {"tail", to_string(poly::term(Rational(1), k.second))}, {"coeff", c.str()}});
    }
    return {{"terms", terms}};
}

std::vector<poly> word_from_json(const nlohmann::json &j)
{
    if (!j.is_array()) {
        throw std::invalid_argument("a word must be a JSON array of polynomials");
    }
    std::vector<poly> out;
    for (const auto &letter : j) {
        out.push_back(parse_poly(poly_string(letter)));
    }
    return out;
}

rb_elem rb_elem_from_json(const nlohmann::json &j)
{
    rb_elem out;
    for (const auto &t : array_field(j, "terms")) {
        const auto word = t.contains("word") ? word_from_json(t.at("word")) : std::vector<poly>{};
        const auto tail = t.contains("tail") ? parse_poly(poly_string(t.at("tail"))) : poly(1);
        const auto coeff = t.contains("coeff") ? rational_from_json(t.at("coeff")) : Rational(1);
        out += rb_elem::make(word, tail, coeff);
    }
    return out;
}

nlohmann::json to_json(const word_combination &w)
{
    auto terms = nlohmann::json::array();
    for (const auto &[word, c] : w.terms()) {
        terms.push_back({{"word", word_json(word)}, {"coeff", c.str()}});
    }
    return {{"terms", terms}};
}

nlohmann::json to_json(const rb_tensor &t)
{
    auto terms = nlohmann::json::array();
    for (const auto &[k, c] : t.terms()) {
        terms.push_back({{"word", word_json(std::get<0>(k))},
                         {"tail", to_string(poly::term(Rational(1), std::get<1>(k)))},
                         {"var", std::get<2>(k)},
                         {"coeff", c.str()}});
    }
    return {{"terms", terms}};
}

diff_poly nested_from_json(const nlohmann::json &j)
{
    diff_poly out;
    for (const auto &t : array_field(j, "terms")) {
        diff_poly term(t.contains("coeff") ? rational_from_json(t.at("coeff")) : Rational(1));
        for (const auto &f : array_field(t, "factors")) {
            const auto inner = parse_diff_poly(poly_string(field(f, "inner")));
            const auto order = f.contains("order") ? f.at("order").get<std::size_t>() : std::size_t{0};
            const auto exp = f.contains("exp") ? f.at("exp").get<unsigned>() : 1U;
            term *= pow(dv(encode_nested(inner), order), exp);
        }
        out += term;
    }
    return out;
}

} // namespace dalg
