// Reference values produced by tests/oracles/generate_frozen.py.
#pragma once

#include "zetacap/rational.hpp"

#include <json.hpp>

#include <fstream>
#include <stdexcept>
#include <string>

#ifndef ZETACAP_FROZEN_JSON
#error "ZETACAP_FROZEN_JSON must point at tests/data/frozen_values.json"
#endif

namespace frozen {

inline const nlohmann::json& table()
{
    static const nlohmann::json j = [] {
        std::ifstream in(ZETACAP_FROZEN_JSON);
        if (!in)
            throw std::runtime_error("cannot open " ZETACAP_FROZEN_JSON);
        return nlohmann::json::parse(in);
    }();
    return j;
}

inline std::string raw(const std::string& key)
{
    return table().at(key).at("value").get<std::string>();
}

template <class Real>
Real value(const std::string& key)
{
    const std::string s = raw(key);
    if (s.find('/') != std::string::npos)
        return zetacap::to_real<Real>(zetacap::q_from_string(s));
    return Real(s);
}

}  // namespace frozen
