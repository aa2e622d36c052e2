#pragma once

#include <json.hpp>

#include "taftcat/module.hpp"

namespace taftcat {

// Error for malformed module and morphism files; the message carries the
// location (JSON path or offending token).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace io_detail {

using json = nlohmann::ordered_json;

// Scalar syntax: a sum of terms like "1/2", "3*t^2", "-t", over the power
// basis of the cyclotomic field.
inline CyclotomicScalar parse_scalar(const std::string& text, long order) {
    CyclotomicScalar out;
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && text[i] == ' ')
            ++i;
    };
    auto parse_integer = [&]() -> Integer {
        size_t start = i;
        if (i < text.size() && (text[i] == '+' || text[i] == '-'))
            ++i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
            ++i;
        if (i == start || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start]))))
            throw ParseError("scalar: expected integer at '" + text.substr(start) + "'");
        return Integer(text.substr(start, i - start));
    };

    skip_ws();
    if (i == text.size())
        throw ParseError("scalar: empty text");
    bool first = true;
    while (i < text.size()) {
        skip_ws();
        int sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
            skip_ws();
        } else if (!first) {
            throw ParseError("scalar: expected '+' or '-' at '" + text.substr(i) + "'");
        }
        first = false;

        Rational coeff = make_rational(1, 1);
        bool have_coeff = false;
        if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            Integer num = parse_integer();
            Integer den(1);
            if (i < text.size() && text[i] == '/') {
                ++i;
                den = parse_integer();
            }
            coeff = make_rational(num, den);
            have_coeff = true;
        }
        long power = 0;
        bool have_t = false;
        skip_ws();
        if (have_coeff && i < text.size() && text[i] == '*') {
            ++i;
            skip_ws();
        }
        if (i < text.size() && text[i] == 't') {
            ++i;
            have_t = true;
            power = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                power = static_cast<long>(parse_integer().get_si());
            }
        }
        if (!have_coeff && !have_t)
            throw ParseError("scalar: expected term at '" + text.substr(i) + "'");
        CyclotomicScalar term(order, sign < 0 ? Rational(-coeff) : coeff);
        if (have_t)
            term = term * CyclotomicScalar::root_of_unity(order, power);
        out = out + term;
        skip_ws();
    }
    return out;
}

inline json degree_to_json(Degree g) { return json::array({g.a, g.b}); }

inline Degree degree_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
        throw ParseError("degree: expected [a, b] with integers, got " + j.dump());
    return {j[0].get<long>(), j[1].get<long>()};
}

inline json matrix_to_json(const GradedModule::Block& b) {
    json rows = json::array();
    for (size_t i = 0; i < b.rows(); ++i) {
        json row = json::array();
        for (size_t j = 0; j < b.cols(); ++j)
            row.push_back(b(i, j).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

inline GradedModule::Block matrix_from_json(const json& j, size_t rows, size_t cols, long order,
                                            const std::string& where) {
    if (!j.is_array() || j.size() != rows)
        throw ParseError(where + ": expected " + std::to_string(rows) + " rows");
    GradedModule::Block b(rows, cols);
    for (size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols)
            throw ParseError(where + ": row " + std::to_string(i) + " must have " +
                             std::to_string(cols) + " entries");
        for (size_t c = 0; c < cols; ++c) {
            if (!j[i][c].is_string())
                throw ParseError(where + ": entries must be scalar strings");
            b(i, c) = parse_scalar(j[i][c].get<std::string>(), order);
        }
    }
    return b;
}

inline json module_to_json(const GradedModule& M) {
    const GradingScheme& s = M.scheme();
    json out;
    out["scheme"] = s.kind == SchemeKind::Z2 ? "Z2" : "cyclic";
    out["n"] = s.n;
    out["m"] = s.m;
    json comps = json::array();
    for (const auto& [g, d] : M.dims())
        comps.push_back(json{{"degree", degree_to_json(g)}, {"dim", d}});
    out["components"] = std::move(comps);
    for (Direction dir : {Direction::D0, Direction::D1}) {
        json blocks = json::array();
        for (const auto& [g, b] : M.blocks(dir))
            blocks.push_back(json{{"from", degree_to_json(g)}, {"matrix", matrix_to_json(b)}});
        out[dir == Direction::D0 ? "d0" : "d1"] = std::move(blocks);
    }
    return out;
}

inline GradedModule module_from_json(const json& j) {
    if (!j.is_object())
        throw ParseError("module: expected a JSON object");
    for (const char* key : {"scheme", "n", "m", "components", "d0", "d1"})
        if (!j.contains(key))
            throw ParseError(std::string("module: missing field '") + key + "'");
    std::string kind = j["scheme"].get<std::string>();
    if (kind != "Z2" && kind != "cyclic")
        throw ParseError("module: scheme must be \"Z2\" or \"cyclic\", got \"" + kind + "\"");
    if (!j["n"].is_number_integer() || !j["m"].is_number_integer())
        throw ParseError("module: n and m must be integers");
    long n = j["n"].get<long>(), m = j["m"].get<long>();
    GradingScheme scheme;
    try {
        scheme = kind == "Z2" ? GradingScheme::z2(n, m) : GradingScheme::cyclic(n, m);
    } catch (const std::domain_error& e) {
        throw ParseError(std::string("module: ") + e.what());
    }
    long order = scheme.nm();

    GradedModule::DimMap dims;
    if (!j["components"].is_array())
        throw ParseError("module: components must be a list");
    for (const auto& c : j["components"]) {
        if (!c.is_object() || !c.contains("degree") || !c.contains("dim"))
            throw ParseError("module: each component needs degree and dim");
        Degree g = degree_from_json(c["degree"]);
        if (!c["dim"].is_number_integer() || c["dim"].get<long>() < 1)
            throw ParseError("module: dim at " + g.to_string() + " must be a positive integer");
        Degree gn = scheme.normalize(g);
        if (dims.count(gn))
            throw ParseError("module: duplicate component at " + gn.to_string());
        dims[gn] = c["dim"].get<long>();
    }

    auto read_blocks = [&](const char* key) {
        GradedModule::BlockMap out;
        Direction dir = std::string(key) == "d0" ? Direction::D0 : Direction::D1;
        if (!j[key].is_array())
            throw ParseError(std::string("module: ") + key + " must be a list");
        for (const auto& r : j[key]) {
            if (!r.is_object() || !r.contains("from") || !r.contains("matrix"))
                throw ParseError(std::string("module: each ") + key + " record needs from and matrix");
            Degree g = scheme.normalize(degree_from_json(r["from"]));
            if (out.count(g))
                throw ParseError(std::string("module: duplicate ") + key + " block at " + g.to_string());
            auto src_it = dims.find(g);
            long src = src_it == dims.end() ? 0 : src_it->second;
            auto tgt_it = dims.find(scheme.step(g, dir));
            long tgt = tgt_it == dims.end() ? 0 : tgt_it->second;
            out[g] = matrix_from_json(r["matrix"], static_cast<size_t>(tgt),
                                      static_cast<size_t>(src), order,
                                      std::string(key) + " block at " + g.to_string());
        }
        return out;
    };

    GradedModule M = [&] {
        try {
            return GradedModule(scheme, std::move(dims), read_blocks("d0"), read_blocks("d1"));
        } catch (const std::domain_error& e) {
            throw ParseError(std::string("module: ") + e.what());
        }
    }();
    auto violations = M.validate();
    if (!violations.empty())
        throw ParseError("module: invariant violated: " + violations.front());
    return M;
}

}  // namespace io_detail

inline std::string serialize_module(const GradedModule& M) {
    return io_detail::module_to_json(M).dump(2) + "\n";
}

inline GradedModule parse_module(const std::string& text) {
    io_detail::json j;
    try {
        j = io_detail::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("module: invalid JSON: ") + e.what());
    }
    return io_detail::module_from_json(j);
}

// Morphism files carry the two module blocks plus a blocks map keyed by
// degree.
inline std::string serialize_morphism(const ModuleMorphism& f) {
    io_detail::json out;
    out["source"] = io_detail::module_to_json(f.source());
    out["target"] = io_detail::module_to_json(f.target());
    io_detail::json blocks = io_detail::json::array();
    for (const auto& [g, b] : f.blocks())
        blocks.push_back(io_detail::json{{"degree", io_detail::degree_to_json(g)},
                                         {"matrix", io_detail::matrix_to_json(b)}});
    out["blocks"] = std::move(blocks);
    return out.dump(2) + "\n";
}

inline ModuleMorphism parse_morphism(const std::string& text) {
    io_detail::json j;
    try {
        j = io_detail::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("morphism: invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("source") || !j.contains("target") || !j.contains("blocks"))
        throw ParseError("morphism: expected fields source, target, blocks");
    GradedModule src = io_detail::module_from_json(j["source"]);
    GradedModule tgt = io_detail::module_from_json(j["target"]);
    if (src.scheme() != tgt.scheme())
        throw ParseError("morphism: source and target schemes differ");
    ModuleMorphism::BlockMap blocks;
    if (!j["blocks"].is_array())
        throw ParseError("morphism: blocks must be a list");
    for (const auto& r : j["blocks"]) {
        if (!r.is_object() || !r.contains("degree") || !r.contains("matrix"))
            throw ParseError("morphism: each block record needs degree and matrix");
        Degree g = src.scheme().normalize(io_detail::degree_from_json(r["degree"]));
        if (blocks.count(g))
            throw ParseError("morphism: duplicate block at " + g.to_string());
        blocks[g] = io_detail::matrix_from_json(
            r["matrix"], static_cast<size_t>(tgt.dim(g)), static_cast<size_t>(src.dim(g)),
            src.scheme().nm(), "morphism block at " + g.to_string());
    }
    ModuleMorphism f = [&] {
        try {
            return ModuleMorphism(std::move(src), std::move(tgt), std::move(blocks));
        } catch (const std::domain_error& e) {
            throw ParseError(std::string("morphism: ") + e.what());
        }
    }();
    auto violations = f.validate();
    if (!violations.empty())
        throw ParseError("morphism: invariant violated: " + violations.front());
    return f;
}

}  // namespace taftcat
