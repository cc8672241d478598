#include "graphcount/output.hpp"

#include <stdexcept>

namespace graphcount {

OutputFormat parse_format(const std::string& name) {
    if (name == "poly") return OutputFormat::Poly;
    if (name == "coeff-list") return OutputFormat::CoeffList;
    if (name == "csv") return OutputFormat::Csv;
    throw std::invalid_argument("unknown format '" + name +
                                "' (expected poly, coeff-list or csv)");
}

std::string format_coeff_list(const std::vector<mpz_class>& coeffs) {
    std::string out;
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (i > 0) out += ',';
        out += coeffs[i].get_str();
    }
    out += '\n';
    return out;
}

std::vector<mpz_class> parse_coeff_list(const std::string& text) {
    std::string body = text;
    while (!body.empty() && (body.back() == '\n' || body.back() == '\r')) body.pop_back();
    if (body.empty()) throw std::invalid_argument("empty coefficient list");
    std::vector<mpz_class> out;
    size_t pos = 0;
    while (true) {
        size_t comma = body.find(',', pos);
        std::string field = body.substr(pos, comma == std::string::npos ? std::string::npos
                                                                        : comma - pos);
        size_t digits = field.size() > 0 && field[0] == '-' ? 1 : 0;
        bool ok = field.size() > digits;
        for (size_t i = digits; ok && i < field.size(); ++i) {
            ok = field[i] >= '0' && field[i] <= '9';
        }
        mpz_class value;
        if (!ok || mpz_set_str(value.get_mpz_t(), field.c_str(), 10) != 0) {
            throw std::invalid_argument("bad coefficient '" + field + "'");
        }
        out.push_back(std::move(value));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

std::string format_poly(const std::vector<mpz_class>& coeffs) {
    std::string out;
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0) continue;
        if (!out.empty()) out += " + ";
        bool unit = coeffs[i] == 1 && i > 0;
        if (!unit) out += coeffs[i].get_str();
        if (i > 0) {
            if (!unit) out += '*';
            out += 'z';
            if (i > 1) out += '^' + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

std::string format_csv(unsigned n, const std::vector<mpz_class>& coeffs) {
    std::string out = "n,i,count\n";
    for (size_t i = 0; i < coeffs.size(); ++i) {
        out += std::to_string(n) + ',' + std::to_string(i) + ',' + coeffs[i].get_str() + '\n';
    }
    return out;
}

std::string render_counts(unsigned n, const std::vector<mpz_class>& coeffs,
                          OutputFormat format) {
    switch (format) {
        case OutputFormat::Poly:
            return format_poly(coeffs) + '\n';
        case OutputFormat::CoeffList:
            return format_coeff_list(coeffs);
        case OutputFormat::Csv:
            return format_csv(n, coeffs);
    }
    throw std::logic_error("unhandled format");
}

namespace {

std::string cycle_index_monomial(const CycleType& exponents) {
    std::string out;
    for (unsigned k = 1; k <= exponents.degree(); ++k) {
        unsigned e = exponents.count(k);
        if (e == 0) continue;
        if (!out.empty()) out += ' ';
        out += "s_" + std::to_string(k);
        if (e > 1) out += '^' + std::to_string(e);
    }
    return out;
}

} // namespace

std::string format_cycle_index(const CycleIndex& zi, OutputFormat format) {
    std::string out;
    if (format == OutputFormat::Csv) {
        out += "coeff";
        for (unsigned k = 1; k <= zi.degree(); ++k) out += ",s_" + std::to_string(k);
        out += '\n';
    }
    bool first = true;
    for (const auto& term : zi.terms()) {
        if (format == OutputFormat::Poly) {
            if (!first) out += " + ";
            std::string mono = cycle_index_monomial(term.exponents);
            out += term.coeff.get_str();
            if (!mono.empty()) out += " * " + mono;
        } else {
            out += term.coeff.get_str();
            for (unsigned k = 1; k <= zi.degree(); ++k) {
                out += ',' + std::to_string(term.exponents.count(k));
            }
            out += '\n';
        }
        first = false;
    }
    if (format == OutputFormat::Poly) {
        if (first) out += "1"; // degree-0 index: the empty average is the constant 1
        out += '\n';
    }
    return out;
}

} // namespace graphcount
