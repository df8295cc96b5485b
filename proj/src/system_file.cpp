#include <gkres/system_file.hpp>

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include <gkres/errors.hpp>

namespace gkres
{

namespace
{

using nlohmann::json;

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte)
{
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

json parse_json(std::string_view text)
{
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error &e) {
        // byte is 1-based and points just past the offending character.
        const auto [line, column] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
        throw ParseError("invalid JSON", line, column);
    }
}

LaurentPoly polynomial_from_json(const json &terms, std::size_t nvars, const std::string &where)
{
    if (!terms.is_array()) {
        throw ParseError(where + ": expected an array of terms");
    }
    LaurentPoly p(nvars);
    for (std::size_t k = 0; k < terms.size(); ++k) {
        const auto &t = terms[k];
        const std::string at = where + "[" + std::to_string(k) + "]";
        if (!t.is_object() || !t.contains("coeff") || !t.contains("exponent")) {
            throw ParseError(at + ": a term needs \"coeff\" and \"exponent\"");
        }
        const auto &c = t["coeff"];
        Rational coeff;
        if (c.is_string()) {
            try {
                coeff = parse_rational(c.get<std::string>());
            } catch (const ParseError &e) {
                throw ParseError(at + ".coeff: " + e.what());
            }
        } else if (c.is_number_integer()) {
            coeff = Rational(c.get<std::int64_t>());
        } else {
            throw ParseError(at + ".coeff: expected a string \"p/q\"");
        }
        const auto &e = t["exponent"];
        if (!e.is_array()) {
            throw ParseError(at + ".exponent: expected an integer array");
        }
        if (e.size() != nvars) {
            throw ParseError(at + ".exponent: length " + std::to_string(e.size()) + ", expected "
                             + std::to_string(nvars));
        }
        ExponentVector exp;
        for (const auto &x : e) {
            if (!x.is_number_integer()) {
                throw ParseError(at + ".exponent: entries must be integers");
            }
            exp.push_back(x.get<std::int64_t>());
        }
        p.add_term(exp, coeff);
    }
    return p;
}

json polynomial_to_json(const LaurentPoly &p)
{
    json terms = json::array();
    for (const auto &[e, c] : p.terms()) {
        terms.push_back({{"coeff", format_rational(c)}, {"exponent", e}});
    }
    return terms;
}

} // namespace

std::size_t SystemFile::variable_index(std::string_view name) const
{
    for (std::size_t i = 0; i < variables.size(); ++i) {
        if (variables[i] == name) {
            return i;
        }
    }
    throw UnknownVariable("unknown variable '" + std::string(name) + "'");
}

SystemFile parse_system(std::string_view json_text)
{
    const json doc = parse_json(json_text);
    if (!doc.is_object() || !doc.contains("variables") || !doc.contains("system")) {
        throw ParseError("a system file needs \"variables\" and \"system\"");
    }
    SystemFile file;
    const auto &vars = doc["variables"];
    if (!vars.is_array() || vars.empty()) {
        throw ParseError("\"variables\" must be a nonempty array of names");
    }
    for (const auto &v : vars) {
        if (!v.is_string() || v.get<std::string>().empty()) {
            throw ParseError("variable names must be nonempty strings");
        }
        const auto name = v.get<std::string>();
        for (const auto &seen : file.variables) {
            if (seen == name) {
                throw ParseError("duplicate variable '" + name + "'");
            }
        }
        file.variables.push_back(name);
    }
    const std::size_t n = file.variables.size();
    const auto &sys = doc["system"];
    if (!sys.is_array()) {
        throw ParseError("\"system\" must be an array of polynomials");
    }
    if (sys.size() != n) {
        throw DimensionMismatch(std::to_string(sys.size()) + " polynomials for " + std::to_string(n) + " variables");
    }
    for (std::size_t i = 0; i < sys.size(); ++i) {
        const std::string where = "system[" + std::to_string(i) + "]";
        if (sys[i].is_array() && sys[i].empty()) {
            throw ZeroPolynomial(where + " has no terms");
        }
        auto p = polynomial_from_json(sys[i], n, where);
        if (p.is_zero()) {
            throw ZeroPolynomial(where + " is identically zero");
        }
        file.polynomials.push_back(std::move(p));
    }
    return file;
}

SystemFile read_system_file(const std::string &path)
{
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_system(buf.str());
}

std::string write_system(const SystemFile &file)
{
    json doc;
    doc["variables"] = file.variables;
    doc["system"] = json::array();
    for (const auto &p : file.polynomials) {
        doc["system"].push_back(polynomial_to_json(p));
    }
    return doc.dump(2);
}

LaurentPoly parse_polynomial(std::string_view json_text, std::size_t nvars)
{
    return polynomial_from_json(parse_json(json_text), nvars, "q");
}

std::string write_polynomial(const LaurentPoly &p)
{
    return polynomial_to_json(p).dump();
}

} // namespace gkres
