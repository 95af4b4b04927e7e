#include "rbo/oracle.hpp"

#include <atomic>
#include <chrono>
#include <numeric>
#include <random>
#include <thread>

#include "rbo/rbsystem.hpp"

namespace rbo {

namespace {

/// A weight-zero equation over F_p as a list of coef * x[a] * x[b].
struct CompiledEquation {
    struct Term {
        std::uint32_t coef;
        std::uint8_t a, b;
    };
    std::vector<Term> terms;

    bool vanishes(const std::uint32_t* x, std::uint32_t p) const {
        std::uint32_t acc = 0;
        for (const auto& t : terms) acc += t.coef * x[t.a] * x[t.b];
        return acc % p == 0;
    }
};

class Searcher {
public:
    Searcher(const CayleyTable& t, std::uint32_t p, const std::vector<std::size_t>& order)
        : n_(t.order()), cells_(n_ * n_), p_(p), checks_(cells_) {
        const RboSystem sys = generate_system(t, Rational(0));
        std::vector<std::size_t> idx = order;
        if (idx.empty()) {
            idx.resize(sys.equations.size());
            std::iota(idx.begin(), idx.end(), 0);
        }
        if (idx.size() != sys.equations.size()) throw DimensionMismatch("equation order has the wrong length");
        std::vector<bool> seen(idx.size(), false);
        for (auto k : idx) {
            if (k >= idx.size() || seen[k]) throw DimensionMismatch("equation order is not a permutation");
            seen[k] = true;
        }
        auto slot = [&](const VariableId& v) { return static_cast<std::uint8_t>((v.i - 1) * n_ + (v.j - 1)); };
        for (auto k : idx) {
            CompiledEquation ce;
            std::size_t ready = 0;
            for (const auto& [m, c] : sys.equations[k].poly.terms()) {
                const auto& f = m.factors();
                // Weight zero: every monomial is x*y or x^2.
                const std::uint8_t a = slot(f[0].first);
                const std::uint8_t b = f.size() == 2 ? slot(f[1].first) : a;
                ce.terms.push_back({PrimeField{p}.from(c).value(), a, b});
                ready = std::max<std::size_t>(ready, std::max(a, b));
            }
            if (!ce.terms.empty()) checks_[ready].push_back(std::move(ce));
        }
    }

    std::size_t cells() const { return cells_; }

    /// Solutions whose first `prefix.size()` entries equal `prefix`.
    std::vector<std::uint64_t> run(const std::vector<std::uint32_t>& prefix) const {
        std::vector<std::uint32_t> x(cells_, 0);
        std::vector<std::uint64_t> out;
        for (std::size_t d = 0; d < prefix.size(); ++d) {
            x[d] = prefix[d];
            if (!passes(d, x.data())) return out;
        }
        descend(prefix.size(), x, out);
        return out;
    }

private:
    bool passes(std::size_t depth, const std::uint32_t* x) const {
        for (const auto& eq : checks_[depth])
            if (!eq.vanishes(x, p_)) return false;
        return true;
    }

    void descend(std::size_t depth, std::vector<std::uint32_t>& x, std::vector<std::uint64_t>& out) const {
        if (depth == cells_) {
            out.push_back(MatrixSet::pack(x));
            return;
        }
        for (std::uint32_t v = 0; v < p_; ++v) {
            x[depth] = v;
            if (passes(depth, x.data())) descend(depth + 1, x, out);
        }
        x[depth] = 0;
    }

    std::size_t n_, cells_;
    std::uint32_t p_;
    std::vector<std::vector<CompiledEquation>> checks_;  // by the last cell they read
};

}  // namespace

MatrixSet brute_force_modp(const CayleyTable& t, std::uint32_t p, const BruteForceOptions& options) {
    require_oracle_prime(p);
    if (t.order() > 3) throw UnsupportedOrder("brute force supports orders up to 3");
    const Searcher searcher(t, p, options.equation_order);

    // Partition on the leading one or two entries; task order is key order.
    const std::size_t lead = std::min<std::size_t>(2, searcher.cells());
    std::vector<std::vector<std::uint32_t>> prefixes;
    std::size_t tasks = 1;
    for (std::size_t k = 0; k < lead; ++k) tasks *= p;
    for (std::size_t k = 0; k < tasks; ++k) {
        std::vector<std::uint32_t> pre(lead);
        std::size_t r = k;
        for (std::size_t d = lead; d-- > 0;) {
            pre[d] = static_cast<std::uint32_t>(r % p);
            r /= p;
        }
        prefixes.push_back(std::move(pre));
    }

    std::vector<std::vector<std::uint64_t>> parts(tasks);
    const unsigned workers = std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(tasks)));
    if (workers == 1) {
        for (std::size_t k = 0; k < tasks; ++k) parts[k] = searcher.run(prefixes[k]);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (std::size_t k; (k = next.fetch_add(1)) < tasks;) parts[k] = searcher.run(prefixes[k]);
            });
        for (auto& th : pool) th.join();
    }
    std::vector<std::uint64_t> keys;
    for (auto& part : parts) keys.insert(keys.end(), part.begin(), part.end());
    return MatrixSet(t.order(), p, std::move(keys));
}

nlohmann::json ClassificationReport::to_json() const {
    auto witnesses = [](const MatrixSet& s) {
        nlohmann::json out = nlohmann::json::array();
        for (auto k : s.keys()) out.push_back(pmatrix_to_json(s.unpack(k)));
        return out;
    };
    return {{"semigroup", semigroup},
            {"p", p},
            {"bruteforce_count", bruteforce_count},
            {"family_union_count", family_union_count},
            {"pass", pass()},
            {"missing", witnesses(missing)},
            {"spurious", witnesses(spurious)}};
}

ClassificationReport completeness_check(std::string_view semigroup, std::uint32_t p,
                                        const std::vector<ParametricFamily>& families, unsigned jobs) {
    require_oracle_prime(p);
    const auto start = std::chrono::steady_clock::now();
    const auto& entry = catalog_entry(semigroup);
    const MatrixSet solutions = brute_force_modp(entry.table, p, {jobs, {}});
    const MatrixSet predicted = union_instances(entry.id, p, families);
    ClassificationReport r{entry.id,
                           p,
                           solutions.size(),
                           predicted.size(),
                           solutions.minus(predicted),
                           predicted.minus(solutions),
                           0.0};
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

bool PropertyReport::pass() const {
    for (const auto& r : results)
        if (!r.pass) return false;
    return true;
}

PropertyReport property_suite(const CayleyTable& t, std::uint32_t p, std::size_t samples, std::uint64_t seed,
                              unsigned jobs) {
    require_oracle_prime(p);
    const std::size_t n = t.order();
    std::mt19937_64 rng(seed);
    const BruteForceOptions opts{jobs, {}};
    const MatrixSet sols = brute_force_modp(t, p, opts);
    const ModP zero(0, p);

    std::vector<std::uint64_t> drawn;
    std::uniform_int_distribution<std::size_t> pick(0, sols.size() - 1);
    for (std::size_t k = 0; k < samples; ++k) drawn.push_back(sols.keys()[pick(rng)]);

    PropertyReport report;

    {
        std::uniform_int_distribution<std::uint32_t> scalar(1, p - 1);
        std::size_t bad = 0;
        for (auto key : drawn) {
            const auto c = sols.unpack(key).scaled(ModP(scalar(rng), p));
            if (!sols.contains(c) || !is_rbo(t, c, zero)) ++bad;
        }
        report.results.push_back({"scaling closure", bad == 0, std::to_string(bad) + " of " + std::to_string(samples) + " scaled samples left the solution set"});
    }

    {
        const MatrixSet op = brute_force_modp(opposite(t), p, opts);
        std::size_t bad = 0;
        for (auto key : drawn)
            if (!op.contains(key)) ++bad;
        const bool equal = op == sols;
        report.results.push_back({"opposite invariance", bad == 0 && equal,
                                  std::to_string(bad) + " samples missing from the opposite's solutions; sets " +
                                      (equal ? "equal" : "differ")});
    }

    {
        Permutation pi = identity_permutation(n);
        if (n > 1) {
            do std::shuffle(pi.begin(), pi.end(), rng);
            while (pi == identity_permutation(n));
        }
        const CayleyTable moved = permute(t, pi);
        const MatrixSet moved_sols = brute_force_modp(moved, p, opts);
        std::size_t bad = 0;
        for (auto key : drawn) {
            const auto c = conjugate(sols.unpack(key), pi);
            if (!moved_sols.contains(c) || !is_rbo(moved, c, zero)) ++bad;
        }
        std::vector<std::uint64_t> image;
        for (auto key : sols.keys()) image.push_back(MatrixSet::pack(conjugate(sols.unpack(key), pi)));
        const bool equal = MatrixSet(n, p, std::move(image)) == moved_sols;
        std::string perm;
        for (int v : pi) perm += std::to_string(v);
        report.results.push_back({"isomorphism transport", bad == 0 && equal,
                                  "permutation " + perm + ": " + std::to_string(bad) + " samples failed; sets " +
                                      (equal ? "equal" : "differ")});
    }
    return report;
}

std::size_t cross_check_disagreements(const CayleyTable& t, std::uint32_t p, std::size_t count, std::uint64_t seed,
                                      const MatrixSet* solutions) {
    const std::size_t n = t.order();
    const RboSystem sys = generate_system(t, Rational(0));
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint32_t> entry(0, p - 1);
    const ModP zero(0, p);
    const bool mix = solutions && solutions->size() > 1;
    std::size_t bad = 0;
    for (std::size_t k = 0; k < count; ++k) {
        PMatrix c = PMatrix::zero(n, PrimeField{p});
        if (mix && k % 2 == 1) {
            std::uniform_int_distribution<std::size_t> pick(0, solutions->size() - 1);
            c = solutions->unpack(solutions->keys()[pick(rng)]);
        } else {
            for (std::size_t i = 1; i <= n; ++i)
                for (std::size_t j = 1; j <= n; ++j) c.at(i, j) = ModP(entry(rng), p);
        }
        if (is_rbo(t, c, zero) != system_vanishes(sys, c)) ++bad;
    }
    return bad;
}

}  // namespace rbo
