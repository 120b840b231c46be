#include "covrad/covering_radius.hpp"
#include "covrad/errors.hpp"
#include "covrad/json_io.hpp"
#include "covrad/lattice_width.hpp"
#include "covrad/lonely_runner.hpp"
#include "covrad/polytope.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace covrad;

// Exit codes: 0 success / certificate valid, 1 invalid certificate, 2 usage
// error, 3 domain error, 4 resource cap, 70 internal error.
constexpr int kExitInvalidCert = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;
constexpr int kExitResource = 4;
constexpr int kExitInternal = 70;

PolytopeInput load_polytope(const std::string& path)
{
    if (path == "-")
        return read_polytope_json(std::cin);
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot open input file: " + path);
    return read_polytope_json(in);
}

Certificate load_certificate(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot open certificate file: " + path);
    return certificate_from_json(in);
}

std::string upper(std::string s)
{
    for (char& c : s)
        c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    return s;
}

struct CovradOptions {
    std::string input;
    std::string mu0, beta0;
    int threads = 1;
    long lbar_cap = kDefaultLatticeCap;
    bool json = false;
    bool allow_large_n = false;
};

SearchConfig make_config(const CovradOptions& opt)
{
    SearchConfig cfg;
    if (!opt.mu0.empty())
        cfg.mu0_override = parse_rational(opt.mu0);
    if (!opt.beta0.empty())
        cfg.beta0_override = parse_rational(opt.beta0);
    cfg.worker_count = opt.threads;
    cfg.lbar_cap = opt.lbar_cap;
    cfg.allow_large_n = opt.allow_large_n;
    return cfg;
}

int run_covrad(const CovradOptions& opt)
{
    const PolytopeInput in = load_polytope(opt.input);
    const NormalizeResult norm = normalize(in.A, in.b);
    if (norm.duplicate_rows_removed > 0)
        std::cerr << "warning: removed " << norm.duplicate_rows_removed
                  << " duplicate facet(s) during normalization\n";
    const Certificate cert = covering_radius(norm.polytope, make_config(opt));

    if (opt.json) {
        std::cout << certificate_to_json(cert, norm.polytope, norm.translation) << "\n";
        return 0;
    }
    std::cout << "mu = " << to_string(cert.mu) << "\n";
    std::cout << "point = " << to_string(cert.last_covered) << "\n";
    std::cout << "pairs:";
    for (const CertificatePair& pr : cert.pairs)
        std::cout << " (facet " << pr.facet << ", z = " << to_string(pr.z) << ")";
    std::cout << "\n";
    std::cout << "lbar size = " << to_string(cert.lbar_size) << "\n";
    std::cout << "bounds used: mu0 = " << to_string(cert.bounds_used.mu0)
              << ", beta0 = " << to_string(cert.bounds_used.beta0)
              << ", alpha = " << to_string(cert.bounds_used.alpha)
              << ", beta = " << to_string(cert.bounds_used.beta)
              << ", |P|inf = " << to_string(cert.bounds_used.inf_norm) << "\n";
    std::cout << "normalized polytope:\n";
    for (int i = 0; i < norm.polytope.facets(); ++i)
        std::cout << "  " << to_string(norm.polytope.A.row(i))
                  << " . x <= " << to_string(norm.polytope.b[i]) << "\n";
    std::cout << "translation = " << to_string(norm.translation) << "\n";
    return 0;
}

int run_width(const std::string& input)
{
    const PolytopeInput in = load_polytope(input);
    const NormalizeResult norm = normalize(in.A, in.b);
    const WidthResult wr = lattice_width(norm.polytope);
    std::cout << "width = " << to_string(wr.width) << "\n";
    std::cout << "direction = " << to_string(wr.direction) << "\n";
    std::cout << "candidates scanned = " << wr.candidates_scanned << "\n";
    return 0;
}

int run_oracle(const CovradOptions& opt, long q)
{
    const PolytopeInput in = load_polytope(opt.input);
    const NormalizeResult norm = normalize(in.A, in.b);
    const Rational h = grid_oracle(norm.polytope, q, make_config(opt));
    std::cout << "q = " << q << "\n";
    std::cout << "h = " << to_string(h) << "\n";
    return 0;
}

IntVec parse_velocities(const std::vector<std::string>& args)
{
    IntVec v;
    for (const std::string& s : args) {
        const Rational r = parse_rational(s);
        if (r.get_den() != 1)
            throw UsageError("velocities must be integers, got " + s);
        v.push_back(r.get_num());
    }
    return v;
}

int run_lrc_check(const std::vector<std::string>& args, int threads)
{
    const VelocityVector v = normalize_velocities(parse_velocities(args));
    SearchConfig cfg;
    cfg.worker_count = threads;
    const ScanRecord rec = slrc_check(v, cfg);
    std::cout << "v = " << to_string(rec.v.v) << "\n";
    std::cout << "generators = " << "[";
    for (int i = 0; i < rec.generators.rows(); ++i)
        std::cout << (i ? ", " : "") << to_string(rec.generators.row(i));
    std::cout << "]\n";
    std::cout << "mu = " << to_string(rec.mu) << " " << upper(verdict_str(rec.verdict)) << "\n";
    std::cout << "width = " << to_string(rec.width) << "\n";
    std::cout << "spectrum = " << rec.spectrum.str() << "\n";
    return 0;
}

int run_lrc_scan(long max_sum, bool csv, bool json, int threads, long lbar_cap)
{
    SearchConfig cfg;
    cfg.worker_count = threads;
    cfg.lbar_cap = lbar_cap;
    const ScanResult result = scan(max_sum, cfg);

    if (csv) {
        std::cout << scan_records_csv(result.records);
        return 0;
    }
    if (json) {
        std::cout << scan_result_json(result) << "\n";
        return 0;
    }

    for (const ScanRecord& r : result.records) {
        std::cout << to_string(r.v.v) << "  [";
        for (int i = 0; i < r.generators.rows(); ++i)
            std::cout << (i ? ", " : "") << to_string(r.generators.row(i));
        std::cout << "]  mu = " << to_string(r.mu) << "  width = " << to_string(r.width)
                  << "  " << verdict_str(r.verdict) << "  " << r.spectrum.str() << "\n";
    }
    long dismissed = 0, settled = 0;
    std::string survivors;
    for (const ReductionEntry& e : result.reduction) {
        switch (e.status) {
        case ReductionStatus::dismissed_coprime:
            ++dismissed;
            break;
        case ReductionStatus::settled_by_volume:
            ++settled;
            break;
        case ReductionStatus::survivor:
            survivors += " " + to_string(e.v.v);
            break;
        }
    }
    std::cout << "-- reduction --\n";
    std::cout << "triples scanned: " << result.records.size() << "\n";
    std::cout << "dismissed by a pairwise common factor: " << dismissed << "\n";
    std::cout << "settled by the volume bound (sum >= 10): " << settled << "\n";
    std::cout << "survivors (pairwise coprime, sum <= 9):" << survivors << "\n";
    return 0;
}

int run_verify(const std::string& input, const std::string& cert_path)
{
    const PolytopeInput in = load_polytope(input);
    const NormalizeResult norm = normalize(in.A, in.b);
    const Certificate cert = load_certificate(cert_path);
    if (verify_certificate(norm.polytope, cert)) {
        std::cout << "certificate valid\n";
        return 0;
    }
    std::cout << "certificate INVALID\n";
    return kExitInvalidCert;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact covering radii of rational polytopes and shifted lonely runner checks"};
    app.require_subcommand(1);

    CovradOptions copt;
    CLI::App* c = app.add_subcommand("covrad", "compute the covering radius with a certificate");
    c->add_option("--input", copt.input, "polytope JSON file ('-' for stdin)")->required();
    c->add_option("--mu0", copt.mu0, "override the upper bound on the covering radius");
    c->add_option("--beta0", copt.beta0, "override the upper bound on the vertex max-norm");
    c->add_option("--threads", copt.threads, "number of search workers")->check(CLI::PositiveNumber);
    c->add_option("--lbar-cap", copt.lbar_cap, "cap on the candidate lattice point count")
        ->check(CLI::PositiveNumber);
    c->add_flag("--json", copt.json, "emit the certificate as JSON");
    c->add_flag("--allow-large-n", copt.allow_large_n, "permit dimensions above 3");

    std::string winput;
    CLI::App* w = app.add_subcommand("width", "compute the exact lattice width");
    w->add_option("--input", winput, "polytope JSON file ('-' for stdin)")->required();

    CovradOptions oopt;
    long q = 0;
    CLI::App* o = app.add_subcommand("oracle", "grid lower bound on the covering radius");
    o->add_option("--input", oopt.input, "polytope JSON file ('-' for stdin)")->required();
    o->add_option("--denominator", q, "grid denominator q")->required()->check(CLI::PositiveNumber);
    o->add_option("--mu0", oopt.mu0, "override the upper bound on the covering radius");
    o->add_option("--beta0", oopt.beta0, "override the upper bound on the vertex max-norm");
    o->add_option("--lbar-cap", oopt.lbar_cap, "cap on lattice/grid point counts")
        ->check(CLI::PositiveNumber);

    std::vector<std::string> velocities;
    int check_threads = 1;
    CLI::App* lc = app.add_subcommand("lrc-check", "check one velocity triple");
    lc->add_option("velocities", velocities, "three positive integer velocities")
        ->expected(3)
        ->required();
    lc->add_option("--threads", check_threads, "number of search workers")
        ->check(CLI::PositiveNumber);

    long max_sum = 0;
    bool scan_csv = false, scan_json = false;
    int scan_threads = 1;
    long scan_cap = kDefaultLatticeCap;
    CLI::App* ls = app.add_subcommand("lrc-scan", "scan all triples up to a velocity sum");
    ls->add_option("--max-sum", max_sum, "largest velocity sum to scan")->required();
    CLI::Option* csv_opt = ls->add_flag("--csv", scan_csv, "emit CSV");
    ls->add_flag("--json", scan_json, "emit JSON")->excludes(csv_opt);
    ls->add_option("--threads", scan_threads, "number of scan workers")->check(CLI::PositiveNumber);
    ls->add_option("--lbar-cap", scan_cap, "cap on the candidate lattice point count")
        ->check(CLI::PositiveNumber);

    std::string vinput, vcert;
    CLI::App* vf = app.add_subcommand("verify", "verify a covering radius certificate");
    vf->add_option("--input", vinput, "polytope JSON file ('-' for stdin)")->required();
    vf->add_option("--cert", vcert, "certificate JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (c->parsed())
            return run_covrad(copt);
        if (w->parsed())
            return run_width(winput);
        if (o->parsed())
            return run_oracle(oopt, q);
        if (lc->parsed())
            return run_lrc_check(velocities, check_threads);
        if (ls->parsed())
            return run_lrc_scan(max_sum, scan_csv, scan_json, scan_threads, scan_cap);
        if (vf->parsed())
            return run_verify(vinput, vcert);
        std::cerr << "error: no subcommand\n";
        return kExitUsage;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const ResourceError& e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return kExitResource;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
