// zetacap: zeta(0), zeta'(0) and log det on a Riemann cap over a d-sphere.
//
//   zetacap compute --D 3 --sigma 0.5 --theta0 pi/2 --format json --explain
//   zetacap sweep   --D 3 --sigma 0.5 --theta0 0.2:2.8:14 --format csv --jobs 2
//   zetacap verify  --D 3
//   zetacap coeffs  --order 4 [--sigma 1/2]
//
// Exit codes: 0 ok, 1 usage / domain error / failed criterion,
// 2 singular determinant or unsupported dimension, 3 quadrature or
// tolerance failure.
#include "zetacap/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>

namespace {

using namespace zetacap;
using io::json;

constexpr const char* kVersion = "1.0.0";

struct RunConfig {
    std::string command;
    std::optional<int> D, d;
    std::string sigma, mass, theta0;
    std::string mu_scale = "1";
    int precision = 50;
    int order = 4;
    std::string format;
    std::string output;
    bool explain = false;
    int jobs = 1;
    std::vector<int> only;
    std::string cache_dir;

    int base_dim() const { return D ? *D - 1 : *d; }
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Parameter parsing. A value is a decimal, or k*pi/m style ("pi/2",
// "2pi/5", "0.5*pi"); a range is start:stop:steps; a list is comma separated.

template <class Real>
Real parse_real(const std::string& s)
{
    static const std::regex pi_form(R"(^\s*([0-9.eE+-]*)\s*\*?\s*pi\s*(?:/\s*([0-9.eE+]+))?\s*$)");
    std::smatch m;
    try {
        if (std::regex_match(s, m, pi_form)) {
            Real f = m[1].str().empty() ? Real(1) : (m[1].str() == "-" ? Real(-1) : Real(m[1].str()));
            Real r = f * pi_v<Real>();
            if (m[2].matched)
                r /= Real(m[2].str());
            return r;
        }
        if (s.find('/') != std::string::npos)
            return to_real<Real>(q_from_string(s));
        return Real(s);
    } catch (const std::exception&) {
        throw UsageError("cannot parse number '" + s + "'");
    }
}

template <class Real>
std::vector<Real> parse_values(const std::string& s)
{
    std::vector<std::string> parts;
    if (std::count(s.begin(), s.end(), ':') == 2) {
        parts.clear();
        std::stringstream ss(s);
        std::string p;
        while (std::getline(ss, p, ':'))
            parts.push_back(p);
        const Real a = parse_real<Real>(parts[0]), b = parse_real<Real>(parts[1]);
        int n = 0;
        try {
            n = std::stoi(parts[2]);
        } catch (const std::exception&) {
            throw UsageError("range steps must be an integer in '" + s + "'");
        }
        if (n < 1)
            throw UsageError("empty range '" + s + "'");
        std::vector<Real> v;
        for (int i = 0; i < n; ++i)
            v.push_back(n == 1 ? a : a + (b - a) * i / (n - 1));
        return v;
    }
    std::vector<Real> v;
    std::stringstream ss(s);
    std::string p;
    while (std::getline(ss, p, ','))
        v.push_back(parse_real<Real>(p));
    if (v.empty())
        throw UsageError("no values in '" + s + "'");
    return v;
}

void check_dims(const RunConfig& c)
{
    if (!c.D == !c.d)
        throw UsageError("give exactly one of --D / --d");
}

void check_mass(const RunConfig& c)
{
    if (c.sigma.empty() == c.mass.empty())
        throw UsageError("give exactly one of --sigma / --mass");
    if (c.theta0.empty())
        throw UsageError("--theta0 is required");
}

template <class Real>
std::vector<Real> sigmas(const RunConfig& c, int d)
{
    if (!c.sigma.empty())
        return parse_values<Real>(c.sigma);
    std::vector<Real> out;
    for (const auto& m : parse_values<Real>(c.mass))
        out.push_back(CapGeometry<Real>::from_mass(d, Real(1), m).sigma);
    return out;
}

std::optional<std::filesystem::path> cache_of(const RunConfig& c)
{
    return io::cache_dir(c.cache_dir.empty() ? std::nullopt : std::optional<std::filesystem::path>(c.cache_dir));
}

/// Writes to --output or stdout; files get a trailing LF.
void emit(const RunConfig& c, const std::string& text)
{
    if (c.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(c.output, std::ios::binary);
    if (!out)
        throw UsageError("cannot open output file " + c.output);
    out << text;
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string r = "\"";
    for (char ch : s)
        r += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return r + "\"";
}

// ---------------------------------------------------------------------------

template <class Real>
json discrepancies(int D, const Real& sigma, const Real& theta0)
{
    json a = json::array();
    if (D < 3 || D > 5)
        return a;
    a.push_back(io::to_json(invariants::compare_zeta0(D, sigma, theta0)));
    a.push_back(io::to_json(invariants::compare_zeta_prime0(D, sigma, theta0)));
    return a;
}

template <class Real>
int cmd_compute(const RunConfig& c)
{
    check_dims(c);
    check_mass(c);
    const int d = c.base_dim();
    basezeta::check_dimension(d);
    const auto sg = sigmas<Real>(c, d);
    const auto th = parse_values<Real>(c.theta0);
    if (sg.size() != 1 || th.size() != 1)
        throw UsageError("compute takes single values; use sweep for ranges");
    const auto geom = CapGeometry<Real>::from_sigma(d, th[0], sg[0]);
    const Real mu = parse_real<Real>(c.mu_scale);
    const auto base = io::load_base<Real>(d, cache_of(c));
    const auto z = invariants::logdet(base, geom.sigma, geom.theta0, mu);
    const std::string fmt = c.format.empty() ? "json" : c.format;
    if (fmt == "json") {
        json j;
        j["kind"] = "compute";
        j["version"] = kVersion;
        j["timestamp"] = io::utc_timestamp();
        j["result"] = io::to_json(geom, z, c.explain);
        if (!c.mass.empty())
            j["result"]["mass"] = io::real_json(parse_real<Real>(c.mass));
        if (c.explain)
            j["discrepancies"] = discrepancies(geom.D(), geom.sigma, geom.theta0);
        emit(c, j.dump(2) + "\n");
    } else {
        std::ostringstream os;
        os << "D,sigma,theta0,mu_scale,zeta0,zeta_prime0,gamma,logdet\n"
           << geom.D() << ',' << to_string_full(geom.sigma) << ',' << to_string_full(geom.theta0) << ','
           << to_string_full(mu) << ',' << to_string_full(z.zeta0) << ',' << to_string_full(z.zeta_prime0) << ','
           << to_string_full(z.gamma) << ',' << to_string_full(z.logdet) << '\n';
        if (c.explain) {
            os << "\nterm,value\n";
            for (const auto& [k, v] : z.term_ledger)
                os << csv_field(k) << ',' << to_string_full(v) << '\n';
        }
        emit(c, os.str());
    }
    return 0;
}

template <class Real>
int cmd_sweep(const RunConfig& c)
{
    check_dims(c);
    check_mass(c);
    const int d = c.base_dim();
    basezeta::check_dimension(d);
    const auto sg = sigmas<Real>(c, d);
    const auto th = parse_values<Real>(c.theta0);
    const Real mu = parse_real<Real>(c.mu_scale);
    const auto base = io::load_base<Real>(d, cache_of(c));

    struct Row {
        Real theta0, sigma;
        std::optional<invariants::ZetaInvariants<Real>> z;
        std::string error;
    };
    std::vector<Row> rows;
    for (const auto& s : sg)
        for (const auto& t : th)
            rows.push_back({t, s, std::nullopt, ""});
    auto work = [&](Row& r) {
        try {
            const auto g = CapGeometry<Real>::from_sigma(d, r.theta0, r.sigma);
            r.z = invariants::logdet(base, g.sigma, g.theta0, mu);
        } catch (const std::exception& e) {
            r.error = e.what();
        }
    };
    const std::size_t jobs = static_cast<std::size_t>(std::max(1, c.jobs));
    for (std::size_t i = 0; i < rows.size(); i += jobs) {
        std::vector<std::future<void>> fs;
        for (std::size_t k = i; k < std::min(rows.size(), i + jobs); ++k)
            fs.push_back(std::async(jobs == 1 ? std::launch::deferred : std::launch::async, [&, k] { work(rows[k]); }));
        for (auto& f : fs)
            f.get();
    }
    int ok = 0;
    for (const auto& r : rows)
        ok += r.z.has_value();

    const std::string fmt = c.format.empty() ? "csv" : c.format;
    if (fmt == "json") {
        json j;
        j["kind"] = "sweep";
        j["version"] = kVersion;
        j["timestamp"] = io::utc_timestamp();
        j["D"] = d + 1;
        j["digits"] = digits10_v<Real>;
        j["mu_scale"] = io::real_json(mu);
        j["rows"] = json::array();
        for (const auto& r : rows) {
            json o = {{"theta0", io::real_json(r.theta0)}, {"sigma", io::real_json(r.sigma)}};
            if (r.z) {
                o["zeta0"] = io::real_json(r.z->zeta0);
                o["zeta_prime0"] = io::real_json(r.z->zeta_prime0);
                o["logdet"] = io::real_json(r.z->logdet);
            } else {
                o["error"] = r.error;
            }
            j["rows"].push_back(o);
        }
        emit(c, j.dump(2) + "\n");
    } else {
        std::ostringstream os;
        os << "theta0,sigma,zeta0,zeta_prime0,logdet,error\n";
        for (const auto& r : rows) {
            os << to_string_full(r.theta0) << ',' << to_string_full(r.sigma) << ',';
            if (r.z)
                os << to_string_full(r.z->zeta0) << ',' << to_string_full(r.z->zeta_prime0) << ','
                   << to_string_full(r.z->logdet) << ",\n";
            else
                os << ",,," << csv_field(r.error) << '\n';
        }
        emit(c, os.str());
    }
    if (ok == 0) {
        std::cerr << "zetacap: every row failed; first error: " << rows.front().error << '\n';
        return 1;
    }
    return 0;
}

template <class Real>
int cmd_verify(const RunConfig& c)
{
    if (c.D && c.d)
        throw UsageError("give at most one of --D / --d");
    verify::Options opt;
    opt.D = c.D ? *c.D : (c.d ? *c.d + 1 : 3);
    basezeta::check_dimension(opt.D - 1);
    if (c.D || c.d)
        opt.zeta0_dims = {opt.D};
    opt.only = {c.only.begin(), c.only.end()};
    opt.jobs = c.jobs;
    const std::string fmt = c.format.empty() ? "text" : c.format;
    const bool live = fmt == "text" && c.output.empty();
    const auto results = verify::run<Real>(opt, [&](const verify::CriterionResult& r) {
        if (live)
            std::cout << verify::line(r) << std::endl;
    });
    int passed = 0;
    for (const auto& r : results)
        passed += r.pass;
    if (fmt == "json") {
        json j;
        j["kind"] = "verify";
        j["version"] = kVersion;
        j["timestamp"] = io::utc_timestamp();
        j["D"] = opt.D;
        j["digits"] = digits10_v<Real>;
        j["passed"] = passed;
        j["total"] = results.size();
        j["criteria"] = json::array();
        for (const auto& r : results)
            j["criteria"].push_back(verify::to_json(r));
        emit(c, j.dump(2) + "\n");
    } else if (fmt == "csv") {
        std::ostringstream os;
        os << "id,pass,measured,tolerance,seconds,title,detail\n";
        for (const auto& r : results)
            os << r.id << ',' << (r.pass ? "true" : "false") << ',' << r.measured << ',' << r.tolerance << ','
               << r.seconds << ',' << csv_field(r.title) << ',' << csv_field(r.detail) << '\n';
        emit(c, os.str());
    } else {
        std::ostringstream os;
        if (!live)
            for (const auto& r : results)
                os << verify::line(r) << '\n';
        os << passed << "/" << results.size() << " criteria pass\n";
        emit(c, os.str());
    }
    return passed == static_cast<int>(results.size()) ? 0 : 1;
}

/// Substitutes sigma^2 = q exactly, leaving a polynomial in S.
BiPoly substitute_sigma2(const BiPoly& p, const Q& q)
{
    BiPoly r;
    for (const auto& [k, v] : p.c) {
        Q f = v;
        for (int i = 0; i < k.first; ++i)
            f *= q;
        r.add_term(0, k.second, f);
    }
    return r;
}

int cmd_coeffs(const RunConfig& c)
{
    if (c.order < 1 || c.order > asympt::kMaxOrder)
        throw UsageError("--order must lie in [1, 8]");
    const auto polys = asympt::limit_cumulant_polys(c.order);
    std::optional<Q> s;
    if (!c.sigma.empty()) {
        try {
            s = q_from_string(c.sigma);
        } catch (const std::exception&) {
            throw UsageError("coeffs --sigma takes an exact rational such as 1/2");
        }
    }
    std::vector<std::string> a, cn;
    for (int n = 1; n <= c.order; ++n) {
        a.push_back(s ? substitute_sigma2(polys[n - 1], *s * *s).str() : polys[n - 1].str());
        cn.push_back(q_str(specfun::riemann_zeta_neg_int(n) / n));
    }
    const std::string fmt = c.format.empty() ? "text" : c.format;
    if (fmt == "json") {
        json j;
        j["kind"] = "coeffs";
        j["version"] = kVersion;
        j["timestamp"] = io::utc_timestamp();
        j["order"] = c.order;
        j["variables"] = "sigma^2 and S = sin^2(theta0/2)";
        if (s)
            j["sigma"] = q_str(*s);
        j["cumulants"] = json::array();
        for (int n = 1; n <= c.order; ++n)
            j["cumulants"].push_back({{"n", n}, {"a", a[n - 1]}, {"C", cn[n - 1]}});
        emit(c, j.dump(2) + "\n");
    } else if (fmt == "csv") {
        std::ostringstream os;
        os << "n,a,C\n";
        for (int n = 1; n <= c.order; ++n)
            os << n << ',' << csv_field(a[n - 1]) << ',' << cn[n - 1] << '\n';
        emit(c, os.str());
    } else {
        std::ostringstream os;
        os << "# u -> 0 cumulants, S = sin^2(theta0/2)" << (s ? ", sigma = " + q_str(*s) : std::string()) << '\n';
        for (int n = 1; n <= c.order; ++n)
            os << "a" << n << " = " << a[n - 1] << '\n';
        for (int n = 1; n <= c.order; ++n)
            os << "C" << n << " = zeta_R(-" << n << ")/" << n << " = " << cn[n - 1] << '\n';
        emit(c, os.str());
    }
    return 0;
}

template <class Real>
int dispatch(const RunConfig& c)
{
    if (c.command == "compute")
        return cmd_compute<Real>(c);
    if (c.command == "sweep")
        return cmd_sweep<Real>(c);
    if (c.command == "verify")
        return cmd_verify<Real>(c);
    return cmd_coeffs(c);
}

int exit_code(const Error& e)
{
    const std::string& k = e.kind();
    if (k == "SingularDeterminant" || k == "UnsupportedDimension")
        return 2;
    if (k == "QuadratureFailure" || k == "TailBoundTooLarge" || k == "DifferentiationUnstable" ||
        k == "DescriptorMismatch" || k == "BracketFailure")
        return 3;
    return 1;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Spectral zeta invariants of the Dirichlet Laplacian on a Riemann cap"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);
    RunConfig c;

    auto geometry = [&](CLI::App* s) {
        auto* oD = s->add_option("--D", c.D, "cap dimension D = d + 1");
        auto* od = s->add_option("--d", c.d, "base dimension d");
        oD->excludes(od);
        auto* os = s->add_option("--sigma", c.sigma, "sigma, value / list a,b / range start:stop:steps");
        auto* om = s->add_option("--mass", c.mass, "mass m, sigma^2 = m^2 + d^2/4");
        os->excludes(om);
        s->add_option("--theta0", c.theta0, "cap angle, value / list / range; 'pi/2' style accepted");
        s->add_option("--mu-scale", c.mu_scale, "renormalisation scale in ln det");
    };
    auto common = [&](CLI::App* s, const std::vector<std::string>& formats) {
        s->add_option("--precision", c.precision, "working decimal digits (<= 100)")->check(CLI::Range(30, 100));
        s->add_option("--format", c.format, "output format")->check(CLI::IsMember(formats));
        s->add_option("--output,-o", c.output, "write to file instead of stdout");
        s->add_option("--cache-dir", c.cache_dir, "base-data cache directory (default $ZETACAP_CACHE_DIR)");
        s->add_option("--jobs,-j", c.jobs, "concurrent rows / criteria")->check(CLI::PositiveNumber);
    };

    auto* compute = app.add_subcommand("compute", "zeta(0), zeta'(0), Gamma and ln det at one point");
    geometry(compute);
    common(compute, {"json", "csv"});
    compute->add_flag("--explain", c.explain, "include the term ledger and the printed-formula comparison");

    auto* sweep = app.add_subcommand("sweep", "table over ranges of theta0 and sigma (or mass)");
    geometry(sweep);
    common(sweep, {"json", "csv"});

    auto* verify = app.add_subcommand("verify", "run the acceptance criteria");
    verify->add_option("--D", c.D, "cap dimension for the D-dependent criteria (default 3)");
    verify->add_option("--d", c.d, "base dimension instead of --D");
    verify->add_option("--only", c.only, "criteria ids, comma separated")->delimiter(',');
    common(verify, {"text", "json", "csv"});

    auto* coeffs = app.add_subcommand("coeffs", "u -> 0 cumulant polynomials a_1..a_N and C_n");
    coeffs->add_option("--order,-N", c.order, "highest order N <= 8");
    coeffs->add_option("--sigma", c.sigma, "substitute an exact rational sigma");
    common(coeffs, {"text", "json", "csv"});

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // help and version print and exit 0; usage errors exit 1
        return app.exit(e) == 0 ? 0 : 1;
    }
    c.command = app.get_subcommands().front()->get_name();

    try {
        Precision{c.precision, std::pow(10.0, 10 - c.precision)}.validate();
        if (c.precision <= 50)
            return dispatch<real50>(c);
        return dispatch<real100>(c);
    } catch (const UsageError& e) {
        std::cerr << "zetacap: " << e.what() << '\n';
        return 1;
    } catch (const Error& e) {
        std::cerr << "zetacap: " << e.what() << '\n';
        return exit_code(e);
    } catch (const std::exception& e) {
        std::cerr << "zetacap: " << e.what() << '\n';
        return 1;
    }
}
