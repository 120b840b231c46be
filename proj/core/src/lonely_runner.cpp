#include "covrad/lonely_runner.hpp"

#include "covrad/errors.hpp"
#include "covrad/lattice_width.hpp"
#include "covrad/linalg.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace covrad {

Integer VelocityVector::sum() const
{
    Integer s = 0;
    for (const Integer& x : v)
        s += x;
    return s;
}

VelocityVector normalize_velocities(const IntVec& raw)
{
    if (raw.empty())
        throw UsageError("normalize_velocities: empty velocity list");
    for (const Integer& x : raw)
        if (x <= 0)
            throw DomainError("normalize_velocities: velocities must be positive, got " +
                              to_string(x));
    IntVec v = raw;
    std::sort(v.begin(), v.end());
    Integer g = 0;
    for (const Integer& x : v)
        g = gcd(g, x);
    if (g > 1)
        for (Integer& x : v)
            mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i] == v[i - 1])
            throw DomainError("normalize_velocities: repeated velocity " + to_string(v[i]) +
                              " after reduction; velocities must be pairwise distinct");
    return VelocityVector{std::move(v)};
}

CoprimeDispatch pairwise_coprime_filter(const VelocityVector& v)
{
    if (v.d() != 3)
        throw UsageError("pairwise_coprime_filter: expects exactly three velocities");
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            const Integer g = gcd(v.v[i], v.v[j]);
            if (g > 1)
                return CoprimeDispatch{false, i, j, g};
        }
    return CoprimeDispatch{};
}

namespace {

void validate_minors(const IntMat& generators, const IntVec& v, const char* who)
{
    IntVec minors = maximal_minor_abs(generators);
    std::sort(minors.begin(), minors.end());
    if (minors != v)
        throw InternalError(std::string(who) +
                            ": maximal minors do not reproduce the velocities");
}

} // namespace

Zonotope zonotope_from_triple(const VelocityVector& v)
{
    if (v.d() != 3)
        throw UsageError("zonotope_from_triple: expects exactly three velocities");
    const Integer &v1 = v.v[0], &v2 = v.v[1], &v3 = v.v[2];
    if (gcd(v1, v2) != 1)
        return zonotope_general(v);

    // Smallest non-negative a with a v1 = 1 (mod v2); then v3 = kappa v1 +
    // lambda v2 with kappa = a v3 and lambda = (1 - a v1)/v2 * v3.
    Integer a;
    mpz_invert(a.get_mpz_t(), v1.get_mpz_t(), v2.get_mpz_t());
    Integer kappa = a * v3;
    Integer bcoef = 1 - a * v1;
    mpz_divexact(bcoef.get_mpz_t(), bcoef.get_mpz_t(), v2.get_mpz_t());
    Integer lambda = bcoef * v3;

    IntMat G(2, 3);
    G.at(0, 0) = v2;
    G.at(0, 1) = -v1;
    G.at(0, 2) = 0;
    G.at(1, 0) = kappa;
    G.at(1, 1) = lambda;
    G.at(1, 2) = -1;
    validate_minors(G, v.v, "zonotope_from_triple");
    return Zonotope{std::move(G)};
}

Zonotope zonotope_general(const VelocityVector& v)
{
    if (v.d() < 2)
        throw UsageError("zonotope_general: need at least two velocities");
    IntMat G = integer_kernel_basis(v.v);
    validate_minors(G, v.v, "zonotope_general");
    return Zonotope{std::move(G)};
}

HPolytope hexagon_hrep(const Zonotope& Z)
{
    if (Z.d() != 3 || Z.generators.rows() != 2)
        throw UsageError("hexagon_hrep: expects three planar generators");
    for (const Integer& mnr : maximal_minor_abs(Z.generators))
        if (mnr == 0)
            throw DomainError("hexagon_hrep: generators are not in general position");

    // Facet normals are the generators rotated by 90 degrees; the support
    // value of the centered zonotope sum [-u_k/2, u_k/2] is half the sum of
    // |normal . u_k|.
    RatMat A(6, 2);
    RatVec b(6);
    for (int j = 0; j < 3; ++j) {
        const Integer ux = Z.generators.at(0, j);
        const Integer uy = Z.generators.at(1, j);
        const Integer nx = -uy, ny = ux;
        Integer support2 = 0; // twice the support value
        for (int k = 0; k < 3; ++k)
            support2 += abs(nx * Z.generators.at(0, k) + ny * Z.generators.at(1, k));
        const Rational h = make_rational(support2, Integer(2));
        A.at(2 * j, 0) = Rational(nx);
        A.at(2 * j, 1) = Rational(ny);
        b[2 * j] = h;
        A.at(2 * j + 1, 0) = Rational(-nx);
        A.at(2 * j + 1, 1) = Rational(-ny);
        b[2 * j + 1] = h;
    }

    NormalizeResult res = normalize(A, b);
    for (const Rational& t : res.translation)
        if (t != 0)
            throw InternalError("hexagon_hrep: centered zonotope renormalized off-center");
    return std::move(res.polytope);
}

std::string verdict_str(Verdict v)
{
    switch (v) {
    case Verdict::passes:
        return "passes";
    case Verdict::tight:
        return "tight";
    case Verdict::fails:
        return "fails";
    }
    return "?";
}

std::string Spectrum::str() const
{
    switch (kind) {
    case Kind::below_third:
        return "below_third";
    case Kind::kravitz:
        return "kravitz(m=" + std::to_string(m) + ")";
    case Kind::extended:
        return "extended(m=" + std::to_string(m) + ",j=" + std::to_string(j) + ")";
    case Kind::exceptional:
        return "exceptional";
    }
    return "?";
}

Spectrum spectrum_classify(const Rational& mu)
{
    Spectrum s;
    if (mu <= make_rational(Integer(1), Integer(3))) {
        s.kind = Spectrum::Kind::below_third;
        s.exception = false;
        return s;
    }
    // mu = (m+1)/(3m+j)  <=>  m = (1 - j mu) / (3 mu - 1); the original form
    // is j = 1, the extension allows j in {0, -1}.
    const Rational denom = 3 * mu - 1;
    for (int j : {1, 0, -1}) {
        const Rational m_rat = (1 - j * mu) / denom;
        if (m_rat.get_den() == 1 && m_rat.get_num() >= 1) {
            s.m = m_rat.get_num().get_si();
            s.j = j;
            s.kind = (j == 1) ? Spectrum::Kind::kravitz : Spectrum::Kind::extended;
            s.exception = (j != 1);
            return s;
        }
    }
    s.kind = Spectrum::Kind::exceptional;
    s.exception = true;
    return s;
}

ScanRecord slrc_check(const VelocityVector& v, const SearchConfig& cfg)
{
    if (v.d() != 3)
        throw UsageError("slrc_check: expects exactly three velocities");

    Zonotope Z = (gcd(v.v[0], v.v[1]) == 1) ? zonotope_from_triple(v) : zonotope_general(v);
    HPolytope P = hexagon_hrep(Z);

    const WidthResult wr = lattice_width(P);
    if (wr.width.get_den() != 1)
        throw InternalError("slrc_check: hexagon width is not an integer");
    if (wr.width < 3)
        throw InternalError("slrc_check: hexagon of distinct velocities has width < 3");

    SearchConfig scfg = cfg;
    if (!scfg.mu0_override)
        scfg.mu0_override = 2 / wr.width; // planar symmetric flatness bound

    ScanRecord rec;
    rec.v = v;
    rec.generators = Z.generators;
    rec.cert = covering_radius(P, scfg);
    rec.mu = rec.cert.mu;
    rec.width = wr.width.get_num();
    const Rational half = make_rational(Integer(1), Integer(2));
    rec.verdict = rec.mu == half ? Verdict::tight
                                 : (rec.mu < half ? Verdict::passes : Verdict::fails);
    rec.spectrum = spectrum_classify(rec.mu);
    return rec;
}

ScanResult scan(long sum_limit, const SearchConfig& cfg)
{
    if (sum_limit < 6)
        throw UsageError("scan: sum limit must be at least 6");
    if (cfg.worker_count < 1)
        throw UsageError("scan: worker_count must be >= 1");

    std::vector<VelocityVector> triples;
    for (long v1 = 1; 3 * v1 + 3 <= sum_limit; ++v1)
        for (long v2 = v1 + 1; v1 + 2 * v2 + 1 <= sum_limit; ++v2)
            for (long v3 = v2 + 1; v1 + v2 + v3 <= sum_limit; ++v3) {
                IntVec v{Integer(v1), Integer(v2), Integer(v3)};
                Integer g = gcd(gcd(v[0], v[1]), v[2]);
                if (g == 1)
                    triples.push_back(VelocityVector{std::move(v)});
            }

    ScanResult out;
    out.records.resize(triples.size());
    out.reduction.resize(triples.size());

    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(cfg.worker_count);
    auto worker = [&](int wid) {
        try {
            SearchConfig inner = cfg;
            inner.worker_count = 1;
            while (true) {
                const std::size_t t = next.fetch_add(1);
                if (t >= triples.size())
                    break;
                const VelocityVector& v = triples[t];
                out.records[t] = slrc_check(v, inner);

                ReductionEntry red;
                red.v = v;
                const CoprimeDispatch disp = pairwise_coprime_filter(v);
                if (!disp.coprime) {
                    red.status = ReductionStatus::dismissed_coprime;
                    red.pair_i = disp.i;
                    red.pair_j = disp.j;
                    red.ell = disp.ell;
                } else if (v.sum() >= 10) {
                    red.status = ReductionStatus::settled_by_volume;
                } else {
                    red.status = ReductionStatus::survivor;
                }
                out.reduction[t] = std::move(red);
            }
        } catch (...) {
            errors[wid] = std::current_exception();
        }
    };

    if (cfg.worker_count == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(cfg.worker_count);
        for (int w = 0; w < cfg.worker_count; ++w)
            pool.emplace_back(worker, w);
        for (auto& th : pool)
            th.join();
    }
    for (auto& err : errors)
        if (err)
            std::rethrow_exception(err);

    // Deterministic table order: by sum, then lexicographic triple.
    std::vector<std::size_t> order(triples.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const Integer sa = triples[a].sum(), sb = triples[b].sum();
        if (sa != sb)
            return sa < sb;
        return lex_cmp(triples[a].v, triples[b].v) < 0;
    });
    ScanResult sorted;
    sorted.records.reserve(order.size());
    sorted.reduction.reserve(order.size());
    for (std::size_t i : order) {
        sorted.records.push_back(std::move(out.records[i]));
        sorted.reduction.push_back(std::move(out.reduction[i]));
    }
    return sorted;
}

} // namespace covrad
