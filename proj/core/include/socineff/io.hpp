#pragma once

#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "socineff/context.hpp"
#include "socineff/errors.hpp"
#include "socineff/matching.hpp"
#include "socineff/scalar.hpp"

namespace socineff {

namespace detail {

inline const nlohmann::json& require_field(const nlohmann::json& j, const char* key,
                                           const char* what) {
    if (!j.is_object() || !j.contains(key))
        throw ParseError(std::string(what) + ": missing \"" + key + "\"");
    return j.at(key);
}

inline std::vector<std::string> parse_names(const nlohmann::json& j, const char* what) {
    if (!j.is_array() || j.empty()) throw ParseError(std::string(what) + ": expected a non-empty array of names");
    std::vector<std::string> names;
    for (const auto& v : j) {
        if (!v.is_string()) throw ParseError(std::string(what) + ": names must be strings");
        names.push_back(v.get<std::string>());
    }
    return names;
}

template <class T>
T scalar_from_json(const nlohmann::json& v, bool coerce);

template <>
inline Rat scalar_from_json<Rat>(const nlohmann::json& v, bool) {
    if (v.is_number_integer()) return Rat(v.get<long long>());
    if (v.is_number_float()) return Rat(v.get<double>());  // exact binary expansion
    if (v.is_string()) return parse_rational(v.get<std::string>());
    throw ParseError("expected a number or a \"p/q\" string");
}

template <>
inline double scalar_from_json<double>(const nlohmann::json& v, bool coerce) {
    if (v.is_number()) return v.get<double>();
    if (v.is_string()) {
        if (!coerce)
            throw ParseError("rational string \"" + v.get<std::string>() +
                             "\" not allowed in float mode (pass --coerce to round)");
        return convert_to_double(parse_rational(v.get<std::string>()));
    }
    throw ParseError("expected a number or a \"p/q\" string");
}

template <class T>
std::vector<std::vector<T>> parse_matrix(const nlohmann::json& j, bool coerce, const char* what) {
    if (!j.is_array() || j.empty())
        throw ParseError(std::string(what) + ": expected a non-empty array of rows");
    std::vector<std::vector<T>> rows;
    for (const auto& row : j) {
        if (!row.is_array()) throw ParseError(std::string(what) + ": each row must be an array");
        std::vector<T> r;
        for (const auto& v : row) r.push_back(scalar_from_json<T>(v, coerce));
        rows.push_back(std::move(r));
    }
    return rows;
}

inline nlohmann::json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

}  // namespace detail

/// {"alternatives": ["x", ...], "utilities": [[...], ...]} -> Context
template <class T>
Context<T> context_from_json(const nlohmann::json& j, bool coerce = false) {
    auto names = detail::parse_names(detail::require_field(j, "alternatives", "context"), "alternatives");
    auto rows = detail::parse_matrix<T>(detail::require_field(j, "utilities", "context"), coerce,
                                        "utilities");
    return make_context<T>(names, rows);
}

/// {"objects": ["a", ...], "utilities": [[...], ...]} -> AllocationProblem
template <class T>
AllocationProblem<T> allocation_from_json(const nlohmann::json& j, bool coerce = false) {
    auto names = detail::parse_names(detail::require_field(j, "objects", "allocation"), "objects");
    auto rows = detail::parse_matrix<T>(detail::require_field(j, "utilities", "allocation"), coerce,
                                        "utilities");
    return AllocationProblem<T>(names, rows);
}

/// Map from alternative name to probability, over an already-loaded context.
template <class T>
Lottery<T> lottery_from_json(const nlohmann::json& j, const Context<T>& c, bool coerce = false) {
    if (!j.is_object() || j.empty())
        throw ParseError("lottery: expected a non-empty object mapping names to probabilities");
    std::vector<std::pair<std::size_t, T>> weights;
    for (const auto& [name, v] : j.items())
        weights.emplace_back(c.index_of(name), detail::scalar_from_json<T>(v, coerce));
    return Lottery<T>(c.n_alternatives(), weights);
}

template <class T>
Context<T> load_context(const std::string& path, bool coerce = false) {
    return context_from_json<T>(detail::load_json_file(path), coerce);
}

template <class T>
AllocationProblem<T> load_allocation(const std::string& path, bool coerce = false) {
    return allocation_from_json<T>(detail::load_json_file(path), coerce);
}

template <class T>
Lottery<T> load_lottery(const std::string& path, const Context<T>& c, bool coerce = false) {
    return lottery_from_json<T>(detail::load_json_file(path), c, coerce);
}

}  // namespace socineff
