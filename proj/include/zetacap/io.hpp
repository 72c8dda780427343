// zetacap/io.hpp
#pragma once

#include "zetacap/invariants.hpp"

#include <json.hpp>

#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

namespace zetacap::io {

using nlohmann::json;
namespace fs = std::filesystem;

inline constexpr int kCacheFormat = 1;

// Reals travel as decimal strings at full working precision; rationals as "p/q".

template <class Real>
json real_json(const Real& x)
{
    return to_string_full(x);
}

template <class Real>
Real real_from(const json& j)
{
    return from_string<Real>(j.template get<std::string>());
}

inline json qpoly_json(const QPoly& p)
{
    json a = json::array();
    for (const auto& q : p.c)
        a.push_back(q_str(q));
    return a;
}

inline QPoly qpoly_from(const json& j)
{
    std::vector<Q> c;
    for (const auto& s : j)
        c.push_back(q_from_string(s.template get<std::string>()));
    return QPoly(std::move(c));
}

// ---------------------------------------------------------------------------
// BaseSpectralData

template <class Real>
json to_json(const basezeta::BaseSpectralData<Real>& b)
{
    json j;
    j["format"] = kCacheFormat;
    j["d"] = b.d;
    j["digits"] = digits10_v<Real>;
    j["D_coeffs"] = json::array();
    for (const auto& q : b.D_coeffs)
        j["D_coeffs"].push_back(q_str(q));
    j["beta"] = qpoly_json(b.beta);
    j["e_alpha"] = qpoly_json(b.e);
    for (const auto& [n, r] : b.residues)
        j["residues"][std::to_string(n)] = q_str(r);
    j["zeta_at_0"] = q_str(b.zeta_at_0);
    j["zeta_at_minus_half"] = q_str(b.zeta_at_minus_half);
    j["res_at_minus_half"] = q_str(b.res_at_minus_half);
    for (const auto& [n, v] : b.pf_values)
        j["pf_values"][std::to_string(n)] = real_json(v);
    j["deriv_at_0"] = real_json(b.deriv_at_0);
    j["deriv_at_minus_half"] = real_json(b.deriv_at_minus_half);
    j["zeta_np1_prime0"] = real_json(b.zeta_np1_prime0);
    j["zeta_np1_at0"] = q_str(b.zeta_np1_at0);
    return j;
}

template <class Real>
basezeta::BaseSpectralData<Real> base_from_json(const json& j)
{
    if (j.at("format").template get<int>() != kCacheFormat)
        throw DomainError("base data: unknown cache format");
    basezeta::BaseSpectralData<Real> b;
    b.d = j.at("d").template get<int>();
    for (const auto& s : j.at("D_coeffs"))
        b.D_coeffs.push_back(q_from_string(s.template get<std::string>()));
    b.beta = qpoly_from(j.at("beta"));
    b.e = qpoly_from(j.at("e_alpha"));
    for (const auto& [k, v] : j.at("residues").items())
        b.residues[std::stoi(k)] = q_from_string(v.template get<std::string>());
    b.zeta_at_0 = q_from_string(j.at("zeta_at_0").get<std::string>());
    b.zeta_at_minus_half = q_from_string(j.at("zeta_at_minus_half").get<std::string>());
    b.res_at_minus_half = q_from_string(j.at("res_at_minus_half").get<std::string>());
    for (const auto& [k, v] : j.at("pf_values").items())
        b.pf_values[std::stoi(k)] = real_from<Real>(v);
    b.deriv_at_0 = real_from<Real>(j.at("deriv_at_0"));
    b.deriv_at_minus_half = real_from<Real>(j.at("deriv_at_minus_half"));
    b.zeta_np1_prime0 = real_from<Real>(j.at("zeta_np1_prime0"));
    b.zeta_np1_at0 = q_from_string(j.at("zeta_np1_at0").get<std::string>());
    return b;
}

/// Cache directory: explicit argument, else $ZETACAP_CACHE_DIR, else $HOME/.cache/zetacap.
inline std::optional<fs::path> cache_dir(const std::optional<fs::path>& explicit_dir = std::nullopt)
{
    if (explicit_dir)
        return explicit_dir;
    if (const char* e = std::getenv("ZETACAP_CACHE_DIR"); e && *e)
        return fs::path(e);
    if (const char* h = std::getenv("HOME"); h && *h)
        return fs::path(h) / ".cache" / "zetacap";
    return std::nullopt;
}

/**
 * @brief Base data for dimension d, read from the cache when present.
 *
 * Keyed by (d, digits). A missing, unreadable or inconsistent file is
 * rebuilt; writes go through a temporary file and a rename so concurrent
 * runs never observe half a file. Cache failures never fail the computation.
 */
template <class Real>
basezeta::BaseSpectralData<Real> load_base(int d, const std::optional<fs::path>& dir = cache_dir())
{
    basezeta::check_dimension(d);
    if (!dir)
        return basezeta::make_base_data<Real>(d);
    const fs::path file = *dir / ("base_d" + std::to_string(d) + "_p" + std::to_string(digits10_v<Real>) + ".json");
    try {
        std::ifstream in(file);
        if (in) {
            auto b = base_from_json<Real>(json::parse(in));
            if (b.d == d)
                return b;
        }
    } catch (const std::exception&) {
        // fall through and rebuild
    }
    auto b = basezeta::make_base_data<Real>(d);
    try {
        fs::create_directories(*dir);
        const fs::path tmp = file.string() + ".tmp." + std::to_string(std::random_device{}());
        {
            std::ofstream out(tmp);
            out << to_json(b).dump(1) << '\n';
        }
        fs::rename(tmp, file);
    } catch (const std::exception&) {
    }
    return b;
}

// ---------------------------------------------------------------------------
// Results

template <class Real>
json ledger_json(const invariants::TermList<Real>& t)
{
    json a = json::array();
    for (const auto& [name, v] : t)
        a.push_back({{"term", name}, {"value", real_json(v)}});
    return a;
}

template <class Real>
json to_json(const invariants::Discrepancy<Real>& r)
{
    return {{"quantity", r.quantity}, {"D", r.D},
            {"sigma", real_json(r.sigma)}, {"theta0", real_json(r.theta0)},
            {"general", real_json(r.general)}, {"printed", real_json(r.printed)},
            {"diff", real_json(r.diff)}, {"tolerance", real_json(r.tolerance)},
            {"agree", r.agree}, {"note", r.note}};
}

inline std::string utc_timestamp()
{
    const std::time_t t = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

template <class Real>
json to_json(const CapGeometry<Real>& g, const invariants::ZetaInvariants<Real>& z, bool explain)
{
    json j;
    j["D"] = g.D();
    j["d"] = g.d;
    j["sigma"] = real_json(g.sigma);
    j["theta0"] = real_json(g.theta0);
    j["digits"] = digits10_v<Real>;
    j["mu_scale"] = real_json(z.mu_scale);
    j["zeta0"] = real_json(z.zeta0);
    j["zeta_prime0"] = real_json(z.zeta_prime0);
    j["gamma"] = real_json(z.gamma);
    j["logdet"] = real_json(z.logdet);
    if (explain)
        j["term_ledger"] = ledger_json(z.term_ledger);
    return j;
}

}  // namespace zetacap::io
