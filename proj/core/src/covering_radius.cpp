#include "covrad/covering_radius.hpp"

#include "covrad/errors.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <numeric>
#include <thread>

namespace covrad {

namespace {

struct FastBox {
    std::vector<long> lo, hi;

    int dim() const { return static_cast<int>(lo.size()); }
};

FastBox to_fast_box(const LatticeBox& box)
{
    FastBox fb;
    fb.lo.resize(box.lo.size());
    fb.hi.resize(box.hi.size());
    for (std::size_t k = 0; k < box.lo.size(); ++k) {
        if (!box.lo[k].fits_slong_p() || !box.hi[k].fits_slong_p())
            throw ResourceError("candidate box bounds exceed machine range");
        fb.lo[k] = box.lo[k].get_si();
        fb.hi[k] = box.hi[k].get_si();
    }
    return fb;
}

Integer dot_row(const IntMat& A, int i, const std::vector<long>& z)
{
    Integer d = 0;
    for (int j = 0; j < A.cols(); ++j)
        d += A.at(i, j) * z[j];
    return d;
}

// Thresholds a_i . p - mu * b_i; p - z lies in the interior of mu * P exactly
// when thresh_i < a_i . z for every facet.
std::vector<Rational> interior_thresholds(const RatVec& p, const Rational& mu,
                                          const HPolytope& P)
{
    std::vector<Rational> thresh(P.facets());
    for (int i = 0; i < P.facets(); ++i) {
        Rational d(0);
        for (int j = 0; j < P.dim(); ++j)
            d += Rational(P.A.at(i, j)) * p[j];
        thresh[i] = d - mu * Rational(P.b[i]);
    }
    return thresh;
}

bool strictly_inside(const std::vector<Rational>& thresh, const HPolytope& P,
                     const std::vector<long>& z)
{
    for (int i = 0; i < P.facets(); ++i) {
        const Integer d = dot_row(P.A, i, z);
        if (cmp(thresh[i], d) >= 0)
            return false;
    }
    return true;
}

std::vector<long> clamped_rounding(const RatVec& p, const FastBox& box)
{
    std::vector<long> c(p.size());
    for (std::size_t k = 0; k < p.size(); ++k) {
        Integer r = round_nearest(p[k]);
        long v = r.fits_slong_p() ? r.get_si() : (r > 0 ? box.hi[k] : box.lo[k]);
        c[k] = std::clamp(v, box.lo[k], box.hi[k]);
    }
    return c;
}

// Scan the box in rings of increasing max-norm distance from the rounding of
// p, so covered points exit on one of the first few translates.
bool covered_in_box(const RatVec& p, const Rational& mu, const HPolytope& P,
                    const FastBox& box)
{
    if (mu <= 0 || box.dim() == 0)
        return false;
    const int n = box.dim();
    const std::vector<Rational> thresh = interior_thresholds(p, mu, P);
    const std::vector<long> c = clamped_rounding(p, box);

    long maxrad = 0;
    for (int k = 0; k < n; ++k)
        maxrad = std::max({maxrad, c[k] - box.lo[k], box.hi[k] - c[k]});

    std::vector<long> z(n), sublo(n), subhi(n);
    for (long rad = 0; rad <= maxrad; ++rad) {
        for (int k = 0; k < n; ++k) {
            sublo[k] = std::max(box.lo[k], c[k] - rad);
            subhi[k] = std::min(box.hi[k], c[k] + rad);
        }
        z = sublo;
        while (true) {
            long dist = 0;
            for (int k = 0; k < n; ++k)
                dist = std::max(dist, std::abs(z[k] - c[k]));
            if (dist == rad && strictly_inside(thresh, P, z))
                return true;
            int k = n - 1;
            while (k >= 0 && z[k] == subhi[k]) {
                z[k] = sublo[k];
                --k;
            }
            if (k < 0)
                break;
            ++z[k];
        }
    }
    return false;
}

struct Candidate {
    Rational mu;
    RatVec p;
    std::vector<CertificatePair> pairs;
};

int pairs_cmp(const std::vector<CertificatePair>& a, const std::vector<CertificatePair>& b)
{
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].facet != b[i].facet)
            return a[i].facet < b[i].facet ? -1 : 1;
        const int c = lex_cmp(a[i].z, b[i].z);
        if (c != 0)
            return c;
    }
    return a.size() < b.size() ? -1 : (a.size() > b.size() ? 1 : 0);
}

// Total order on accepted candidates: larger mu wins, then lexicographically
// smaller point, then smaller pair list. Independent of discovery order.
bool candidate_better(const Candidate& a, const Candidate& b)
{
    const int c = cmp(a.mu, b.mu);
    if (c != 0)
        return c > 0;
    const int cp = lex_cmp(a.p, b.p);
    if (cp != 0)
        return cp < 0;
    return pairs_cmp(a.pairs, b.pairs) < 0;
}

struct FacetValue {
    Integer r; // a_i . z
    IntVec z;  // lexicographically smallest achiever in the box
};

struct TupleCtx {
    std::vector<int> idx; // n+1 facet indices, ascending
    IntMat adj;           // adjugate of [A_I | -b_I], sign-fixed so D > 0
    Integer D;
};

struct SharedBound {
    std::mutex mtx;
    bool set = false;
    Integer num;
    Integer den{1};
};

struct WorkUnit {
    std::size_t tuple;
    std::size_t begin0, end0; // range in the first slot's value list
};

} // namespace

Certificate covering_radius(const HPolytope& P, const SearchConfig& cfg)
{
    const int n = P.dim();
    const int m = P.facets();
    if (cfg.worker_count < 1)
        throw UsageError("covering_radius: worker_count must be >= 1");
    if (n > 3 && !cfg.allow_large_n)
        throw UsageError("covering_radius: dimension " + std::to_string(n) +
                         " exceeds the default envelope; set allow_large_n");

    PolytopeBounds bnd = bounds(P);
    const Rational mu0 = cfg.mu0_override.value_or(bnd.mu0);
    const Rational beta0 = cfg.beta0_override.value_or(bnd.beta0);
    if (mu0 <= 0 || beta0 <= 0)
        throw UsageError("covering_radius: bounds must be positive");
    bnd.mu0 = mu0;
    bnd.beta0 = beta0;

    const LatticeBox big_box = lbar_box(P, mu0, beta0);
    const Integer lbar_size = big_box.count();
    if (lbar_size > cfg.lbar_cap)
        throw ResourceError("covering_radius: candidate set holds " + to_string(lbar_size) +
                            " lattice points, cap is " + std::to_string(cfg.lbar_cap));
    const FastBox box = to_fast_box(big_box);

    // Group lattice points by their dot product with each facet normal: the
    // linear system depends on z only through a_i . z. Values outside
    // [min_cube a_i . p - mu0 b_i, max_cube a_i . p] cannot appear in a
    // relevant solution and are dropped up front.
    std::vector<std::vector<FacetValue>> values(m);
    {
        IntVec lo_r(m), hi_r(m);
        for (int i = 0; i < m; ++i) {
            Integer neg = 0, pos = 0;
            for (int j = 0; j < n; ++j) {
                const Integer& a = P.A.at(i, j);
                if (a < 0)
                    neg += a;
                else
                    pos += a;
            }
            lo_r[i] = neg - floor_rat(mu0 * Rational(P.b[i]));
            hi_r[i] = pos;
        }
        std::vector<std::map<Integer, IntVec>> buckets(m);
        std::vector<long> z = box.lo;
        IntVec dots(m);
        for (int i = 0; i < m; ++i)
            dots[i] = dot_row(P.A, i, z);
        while (true) {
            for (int i = 0; i < m; ++i)
                if (dots[i] >= lo_r[i] && dots[i] <= hi_r[i]) {
                    auto it = buckets[i].find(dots[i]);
                    if (it == buckets[i].end()) {
                        IntVec zi(n);
                        for (int j = 0; j < n; ++j)
                            zi[j] = z[j];
                        buckets[i].emplace(dots[i], std::move(zi));
                    }
                }
            int k = n - 1;
            while (k >= 0 && z[k] == box.hi[k]) {
                for (int i = 0; i < m; ++i)
                    dots[i] -= P.A.at(i, k) * (z[k] - box.lo[k]);
                z[k] = box.lo[k];
                --k;
            }
            if (k < 0)
                break;
            for (int i = 0; i < m; ++i)
                dots[i] += P.A.at(i, k);
            ++z[k];
        }
        for (int i = 0; i < m; ++i) {
            values[i].reserve(buckets[i].size());
            for (auto& [r, zz] : buckets[i])
                values[i].push_back(FacetValue{r, std::move(zz)});
        }
    }

    // Candidate systems per affinely independent facet tuple. Affine
    // independence of the normalized normals is det([A_I | -b_I]) != 0.
    std::vector<TupleCtx> tuples;
    {
        std::vector<int> idx(n + 1);
        std::iota(idx.begin(), idx.end(), 0);
        if (m >= n + 1) {
            while (true) {
                bool usable = true;
                for (int j = 0; j <= n; ++j)
                    if (values[idx[j]].empty())
                        usable = false;
                if (usable) {
                    IntMat M(n + 1, n + 1);
                    for (int j = 0; j <= n; ++j) {
                        for (int c = 0; c < n; ++c)
                            M.at(j, c) = P.A.at(idx[j], c);
                        M.at(j, n) = -P.b[idx[j]];
                    }
                    Integer D = int_det(M);
                    if (D != 0) {
                        TupleCtx ctx;
                        ctx.idx = idx;
                        ctx.adj = adjugate(M);
                        if (D < 0) {
                            D = -D;
                            for (int r = 0; r <= n; ++r)
                                for (int c = 0; c <= n; ++c)
                                    ctx.adj.at(r, c) = -ctx.adj.at(r, c);
                        }
                        ctx.D = std::move(D);
                        tuples.push_back(std::move(ctx));
                    }
                }
                int i = n;
                while (i >= 0 && idx[i] == m - (n + 1) + i)
                    --i;
                if (i < 0)
                    break;
                ++idx[i];
                for (int j = i + 1; j <= n; ++j)
                    idx[j] = idx[j - 1] + 1;
            }
        }
    }

    std::vector<WorkUnit> units;
    for (std::size_t t = 0; t < tuples.size(); ++t) {
        const std::size_t size0 = values[tuples[t].idx[0]].size();
        const std::size_t parts = cfg.worker_count == 1
                                      ? 1
                                      : std::min<std::size_t>(size0, 4 * cfg.worker_count);
        const std::size_t chunk = (size0 + parts - 1) / parts;
        for (std::size_t b = 0; b < size0; b += chunk)
            units.push_back(WorkUnit{t, b, std::min(size0, b + chunk)});
    }

    SharedBound shared;
    std::atomic<std::size_t> next_unit{0};
    std::mutex result_mtx;
    std::vector<Candidate> results;
    std::vector<std::exception_ptr> worker_errors(cfg.worker_count);

    auto worker = [&](int wid) {
        try {
            std::optional<Candidate> local;
            Integer local_num, local_den{1};
            bool snap_set = false;
            Integer snap_num, snap_den{1};
            Integer mu_num, t1, t2;
            IntVec pnum(n);
            std::vector<std::size_t> k(n + 1);

            while (true) {
                const std::size_t u = next_unit.fetch_add(1);
                if (u >= units.size())
                    break;
                const WorkUnit& unit = units[u];
                const TupleCtx& ctx = tuples[unit.tuple];
                {
                    std::lock_guard<std::mutex> lk(shared.mtx);
                    snap_set = shared.set;
                    if (snap_set) {
                        snap_num = shared.num;
                        snap_den = shared.den;
                    }
                }
                std::vector<const std::vector<FacetValue>*> slot(n + 1);
                for (int j = 0; j <= n; ++j)
                    slot[j] = &values[ctx.idx[j]];

                k[0] = unit.begin0;
                for (int j = 1; j <= n; ++j)
                    k[j] = 0;
                while (true) {
                    // mu = (last adjugate row . r) / D with D > 0
                    mu_num = 0;
                    for (int j = 0; j <= n; ++j)
                        mpz_addmul(mu_num.get_mpz_t(), ctx.adj.at(n, j).get_mpz_t(),
                                   (*slot[j])[k[j]].r.get_mpz_t());
                    bool reject = mu_num <= 0;
                    bool tie_with_local = false;
                    if (!reject && local) {
                        t1 = mu_num * local_den;
                        t2 = local_num * ctx.D;
                        const int c = cmp(t1, t2);
                        if (c < 0)
                            reject = true;
                        else if (c == 0)
                            tie_with_local = true;
                    }
                    if (!reject && snap_set) {
                        t1 = mu_num * snap_den;
                        t2 = snap_num * ctx.D;
                        const int c = cmp(t1, t2);
                        if (c < 0 || (c == 0 && !cfg.deterministic))
                            reject = true;
                    }
                    if (!reject) {
                        for (int c = 0; c < n; ++c) {
                            pnum[c] = 0;
                            for (int j = 0; j <= n; ++j)
                                mpz_addmul(pnum[c].get_mpz_t(), ctx.adj.at(c, j).get_mpz_t(),
                                           (*slot[j])[k[j]].r.get_mpz_t());
                            if (pnum[c] < 0 || pnum[c] > ctx.D) {
                                reject = true;
                                break;
                            }
                        }
                    }
                    if (!reject) {
                        Candidate cand;
                        cand.mu = make_rational(mu_num, ctx.D);
                        cand.p.resize(n);
                        for (int c = 0; c < n; ++c)
                            cand.p[c] = make_rational(pnum[c], ctx.D);
                        cand.pairs.resize(n + 1);
                        for (int j = 0; j <= n; ++j)
                            cand.pairs[j] = CertificatePair{ctx.idx[j], (*slot[j])[k[j]].z};
                        const bool beats_local =
                            !local || !tie_with_local || candidate_better(cand, *local);
                        if (beats_local && !covered_in_box(cand.p, cand.mu, P, box)) {
                            local_num = cand.mu.get_num();
                            local_den = cand.mu.get_den();
                            local = std::move(cand);
                            std::lock_guard<std::mutex> lk(shared.mtx);
                            if (!shared.set ||
                                local_num * shared.den > shared.num * local_den) {
                                shared.set = true;
                                shared.num = local_num;
                                shared.den = local_den;
                            }
                            snap_set = shared.set;
                            snap_num = shared.num;
                            snap_den = shared.den;
                        }
                    }

                    int j = n;
                    while (j >= 1 && k[j] + 1 == slot[j]->size()) {
                        k[j] = 0;
                        --j;
                    }
                    if (j >= 1) {
                        ++k[j];
                        continue;
                    }
                    if (k[0] + 1 < unit.end0) {
                        ++k[0];
                        continue;
                    }
                    break;
                }
            }
            if (local) {
                std::lock_guard<std::mutex> lk(result_mtx);
                results.push_back(std::move(*local));
            }
        } catch (...) {
            worker_errors[wid] = std::current_exception();
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
    for (auto& err : worker_errors)
        if (err)
            std::rethrow_exception(err);

    const Candidate* best = nullptr;
    for (const Candidate& c : results)
        if (!best || candidate_better(c, *best))
            best = &c;
    if (!best)
        throw InternalError("covering_radius: no relevant candidate found; "
                            "the supplied bounds violate the preconditions");
    if (best->mu > mu0)
        throw InternalError("covering_radius: computed radius exceeds mu0; "
                            "the supplied mu0 was not a valid upper bound");

    Certificate cert;
    cert.mu = best->mu;
    cert.last_covered = best->p;
    cert.pairs = best->pairs;
    cert.bounds_used = std::move(bnd);
    cert.lbar_size = lbar_size;
    return cert;
}

bool is_covered(const RatVec& p, const Rational& mu, const HPolytope& P,
                const LatticePointSet& L)
{
    if (static_cast<int>(p.size()) != P.dim())
        throw UsageError("is_covered: point dimension mismatch");
    if (!L.points.empty() && L.dim != P.dim())
        throw UsageError("is_covered: lattice point dimension mismatch");
    if (mu <= 0 || L.points.empty())
        return false;

    IntVec c(p.size());
    for (std::size_t k = 0; k < p.size(); ++k)
        c[k] = round_nearest(p[k]);
    std::vector<std::size_t> order(L.points.size());
    std::iota(order.begin(), order.end(), 0);
    auto dist = [&](std::size_t i) {
        Integer d = 0;
        for (std::size_t k = 0; k < c.size(); ++k)
            d = std::max(d, Integer(abs(L.points[i][k] - c[k])));
        return d;
    };
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const Integer da = dist(a), db = dist(b);
        if (da != db)
            return da < db;
        return lex_cmp(L.points[a], L.points[b]) < 0;
    });

    const std::vector<Rational> thresh = interior_thresholds(p, mu, P);
    for (std::size_t i : order) {
        bool inside = true;
        for (int f = 0; f < P.facets() && inside; ++f) {
            Integer d = 0;
            for (int j = 0; j < P.dim(); ++j)
                d += P.A.at(f, j) * L.points[i][j];
            if (cmp(thresh[f], d) >= 0)
                inside = false;
        }
        if (inside)
            return true;
    }
    return false;
}

bool verify_certificate(const HPolytope& P, const Certificate& cert)
{
    const int n = P.dim();
    const int m = P.facets();

    if (static_cast<int>(cert.pairs.size()) != n + 1)
        return false;
    if (static_cast<int>(cert.last_covered.size()) != n)
        return false;
    if (cert.mu <= 0)
        return false;
    for (const CertificatePair& pr : cert.pairs) {
        if (pr.facet < 0 || pr.facet >= m)
            return false;
        if (static_cast<int>(pr.z.size()) != n)
            return false;
    }

    // Rank condition: the vectors (a_i / b_i, 1) must be linearly independent.
    RatMat R(n + 1, n + 1);
    for (int j = 0; j <= n; ++j) {
        const int f = cert.pairs[j].facet;
        for (int c = 0; c < n; ++c)
            R.at(j, c) = make_rational(P.A.at(f, c), P.b[f]);
        R.at(j, n) = 1;
    }
    if (rank(R) != n + 1)
        return false;

    // System equalities a_i (p - z) = mu b_i, exactly.
    for (const CertificatePair& pr : cert.pairs) {
        Rational lhs(0);
        for (int j = 0; j < n; ++j)
            lhs += Rational(P.A.at(pr.facet, j)) * (cert.last_covered[j] - Rational(pr.z[j]));
        if (lhs != cert.mu * Rational(P.b[pr.facet]))
            return false;
    }

    // Box membership.
    for (const Rational& x : cert.last_covered)
        if (x < 0 || x > 1)
            return false;

    // Uncoveredness over the recorded candidate box.
    if (cert.bounds_used.mu0 <= 0 || cert.bounds_used.beta0 <= 0)
        return false;
    const LatticeBox big_box = lbar_box(P, cert.bounds_used.mu0, cert.bounds_used.beta0);
    if (big_box.count() != cert.lbar_size)
        return false;
    if (big_box.count() > kDefaultLatticeCap)
        throw ResourceError("verify_certificate: candidate box too large to scan");
    const FastBox box = to_fast_box(big_box);
    if (covered_in_box(cert.last_covered, cert.mu, P, box))
        return false;

    return true;
}

Rational grid_oracle(const HPolytope& P, long q, const SearchConfig& cfg)
{
    if (q < 1)
        throw UsageError("grid_oracle: q must be >= 1");
    const int n = P.dim();
    const int m = P.facets();

    PolytopeBounds bnd = bounds(P);
    const Rational mu0 = cfg.mu0_override.value_or(bnd.mu0);
    const Rational beta0 = cfg.beta0_override.value_or(bnd.beta0);
    const LatticeBox big_box = lbar_box(P, mu0, beta0);
    if (big_box.count() > cfg.lbar_cap)
        throw ResourceError("grid_oracle: candidate set holds " + to_string(big_box.count()) +
                            " lattice points, cap is " + std::to_string(cfg.lbar_cap));
    const FastBox box = to_fast_box(big_box);

    Integer grid_count;
    mpz_ui_pow_ui(grid_count.get_mpz_t(), static_cast<unsigned long>(q + 1),
                  static_cast<unsigned long>(n));
    if (grid_count > cfg.lbar_cap)
        throw ResourceError("grid_oracle: grid holds " + to_string(grid_count) +
                            " points, cap is " + std::to_string(cfg.lbar_cap));

    Rational h(0);
    std::vector<long> kvec(n, 0);
    RatVec p(n);
    std::vector<long> z(n), sublo(n), subhi(n);
    while (true) {
        for (int j = 0; j < n; ++j)
            p[j] = make_rational(Integer(kvec[j]), Integer(q));

        // f(p) = min over z of max_i a_i (p - z) / b_i, aborted as soon as it
        // cannot raise the running maximum h.
        RatVec dotp(m);
        for (int i = 0; i < m; ++i) {
            Rational d(0);
            for (int j = 0; j < n; ++j)
                d += Rational(P.A.at(i, j)) * p[j];
            dotp[i] = d;
        }
        const std::vector<long> c = clamped_rounding(p, box);
        long maxrad = 0;
        for (int k2 = 0; k2 < n; ++k2)
            maxrad = std::max({maxrad, c[k2] - box.lo[k2], box.hi[k2] - c[k2]});

        bool have_f = false, aborted = false;
        Rational f;
        for (long rad = 0; rad <= maxrad && !aborted; ++rad) {
            for (int k2 = 0; k2 < n; ++k2) {
                sublo[k2] = std::max(box.lo[k2], c[k2] - rad);
                subhi[k2] = std::min(box.hi[k2], c[k2] + rad);
            }
            z = sublo;
            while (true) {
                long dist = 0;
                for (int k2 = 0; k2 < n; ++k2)
                    dist = std::max(dist, std::abs(z[k2] - c[k2]));
                if (dist == rad) {
                    bool usable = true;
                    Rational val;
                    bool have_val = false;
                    for (int i = 0; i < m; ++i) {
                        const Rational vi = (dotp[i] - Rational(dot_row(P.A, i, z))) /
                                            Rational(P.b[i]);
                        if (!have_val || vi > val) {
                            val = vi;
                            have_val = true;
                        }
                        if (have_f && val >= f) {
                            usable = false; // cannot lower the minimum
                            break;
                        }
                    }
                    if (usable) {
                        f = val;
                        have_f = true;
                        if (f <= h) {
                            aborted = true; // p cannot raise h
                            break;
                        }
                    }
                }
                int k2 = n - 1;
                while (k2 >= 0 && z[k2] == subhi[k2]) {
                    z[k2] = sublo[k2];
                    --k2;
                }
                if (k2 < 0)
                    break;
                ++z[k2];
            }
        }
        if (!aborted && have_f && f > h)
            h = f;

        int j = n - 1;
        while (j >= 0 && kvec[j] == q) {
            kvec[j] = 0;
            --j;
        }
        if (j < 0)
            break;
        ++kvec[j];
    }
    return h;
}

} // namespace covrad
