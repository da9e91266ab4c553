#pragma once

#include "priorforge/json_io.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace pf_test {

using priorforge::Rational;

inline std::string example_path(const std::string& name)
{
    return std::string(PRIORFORGE_DATA_DIR) + "/examples/" + name;
}

inline priorforge::InformationStructure example(const std::string& name)
{
    return priorforge::load_structure(example_path(name));
}

inline std::vector<Rational> q(std::initializer_list<const char*> values)
{
    std::vector<Rational> out;
    for (const char* v : values) {
        out.push_back(Rational::parse(v));
    }
    return out;
}

inline priorforge::Distribution dist(std::initializer_list<const char*> values)
{
    return priorforge::Distribution(q(values));
}

inline priorforge::PayoffFamily family(std::initializer_list<std::vector<Rational>> rows)
{
    priorforge::PayoffFamily f;
    for (const auto& r : rows) {
        f.payoffs.emplace_back(r);
    }
    return f;
}

inline std::vector<Rational> negated(const std::vector<Rational>& v)
{
    std::vector<Rational> out;
    for (const auto& x : v) {
        out.push_back(-x);
    }
    return out;
}

}  // namespace pf_test
