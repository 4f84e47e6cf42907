#include "sw/verify.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <functional>
#include <sstream>
#include <thread>

namespace sw {

namespace {

using Clock = std::chrono::steady_clock;

struct TaskResult {
    std::int64_t cases = 0;
    std::vector<Violation> violations;
    bool ran = false;
};

using Task = std::function<TaskResult()>;

struct RunOutcome {
    std::int64_t done = 0;
    bool truncated = false;
    std::vector<Violation> violations;
};

RunOutcome run_tasks(std::vector<Task>& tasks, int jobs, Clock::time_point deadline,
                     bool use_deadline) {
    if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
    if (jobs <= 0) jobs = 1;
    std::vector<TaskResult> results(tasks.size());
    std::atomic<std::size_t> next{0};
    std::atomic<bool> expired{false};

    auto worker = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            if (use_deadline && (expired.load() || Clock::now() >= deadline)) {
                expired.store(true);
                continue;  // skip remaining work, but report it honestly
            }
            results[i] = tasks[i]();
            results[i].ran = true;
        }
    };

    std::vector<std::thread> pool;
    const int nthreads = static_cast<int>(
        std::min<std::size_t>(static_cast<std::size_t>(jobs), tasks.size() ? tasks.size() : 1));
    for (int t = 1; t < nthreads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    RunOutcome out;
    for (auto& r : results) {
        if (r.ran) {
            out.done += r.cases;
            for (auto& v : r.violations) out.violations.push_back(std::move(v));
        } else {
            out.truncated = true;
        }
    }
    std::sort(out.violations.begin(), out.violations.end());
    return out;
}

std::string pr_str(std::int64_t p, int r) {
    std::ostringstream os;
    os << "p=" << p << ",r=" << r;
    return os.str();
}

std::string join_masks(const std::vector<std::uint32_t>& ms) {
    std::ostringstream os;
    for (std::size_t i = 0; i < ms.size(); ++i) os << (i ? "," : "") << "0x" << std::hex << ms[i];
    return os.str();
}

std::string vec_str(const std::vector<int>& printed) {
    std::ostringstream os;
    os << "[";
    for (std::size_t k = 0; k < printed.size(); ++k) os << (k ? "," : "") << printed[k];
    os << "]";
    return os.str();
}

// ---------------------------------------------------------------- suites

// For every regular b (a = 0) and subset J, the pair compatible via J sees
// exactly one compatible JH factor, equal to the weight itself.
void build_typeswts(std::vector<Task>& tasks, const FieldContext& ctx) {
    for (const auto& b : enumerate_regular_b(ctx)) {
        tasks.push_back([&ctx, b]() {
            TaskResult res;
            const SerreWeight w{std::vector<int>(ctx.r, 0), b};
            for (std::uint32_t J = 0; J < (1u << ctx.r); ++J) {
                ++res.cases;
                const std::string par = pr_str(ctx.p, ctx.r) + ",b=" + vec_str(to_printed(b)) +
                                        ",J=" + join_masks({J});
                try {
                    const ReducibleData data{b_partial_char(ctx, w, J),
                                             b_partial_char(ctx, w, ~J & full_mask(ctx.r))};
                    const auto rep = verify_unique_jh(ctx, data, w, J);
                    if (!rep.pass)
                        res.violations.push_back(
                            Violation{par, rep.detail + " K=" + join_masks(rep.compatible_K)});
                    if (jh_total_dim(rep.factors) != ctx.pr + 1)
                        res.violations.push_back(Violation{par, "dimension sum != p^r + 1"});
                } catch (const std::exception& e) {
                    res.violations.push_back(Violation{par, e.what()});
                }
            }
            return res;
        });
    }
}

// Same for cuspidal types over all full subsets.
void build_typeswts2(std::vector<Task>& tasks, const FieldContext& ctx) {
    for (const auto& b : enumerate_regular_b(ctx)) {
        tasks.push_back([&ctx, b]() {
            TaskResult res;
            const SerreWeight w{std::vector<int>(ctx.r, 0), b};
            for (std::uint32_t J : full_subsets(ctx.r)) {
                std::int64_t enc = 0;
                for (int k = 0; k < 2 * ctx.r; ++k)
                    if (delta(J, k, 2 * ctx.r))
                        enc = mod_reduce(enc + mul_mod(w.b_at(k % ctx.r), ctx.omega_enc(2, k),
                                                       ctx.e2),
                                         ctx.e2);
                ++res.cases;
                const std::string par = pr_str(ctx.p, ctx.r) + ",b=" + vec_str(to_printed(b)) +
                                        ",J=" + join_masks({J});
                try {
                    const IrreducibleData data = make_irreducible(ctx, enc);
                    const auto rep = verify_unique_jh(ctx, data, w, J);
                    if (!rep.pass)
                        res.violations.push_back(
                            Violation{par, rep.detail + " K=" + join_masks(rep.compatible_K)});
                    if (jh_total_dim(rep.factors) != ctx.pr - 1)
                        res.violations.push_back(Violation{par, "dimension sum != p^r - 1"});
                } catch (const std::exception& e) {
                    res.violations.push_back(Violation{par, e.what()});
                }
            }
            return res;
        });
    }
}

// The two routes to the cuspidal type agree as unordered pairs, for every
// regular weight (all determinant twists a) and full subset.
void build_tau_identity(std::vector<Task>& tasks, const FieldContext& ctx) {
    for (const auto& b : enumerate_regular_b(ctx)) {
        tasks.push_back([&ctx, b]() {
            TaskResult res;
            const auto fulls = full_subsets(ctx.r);
            for (std::int64_t a_enc = 0; a_enc < ctx.e1; ++a_enc) {
                const SerreWeight w{digits_of(ctx, CharExp{1, a_enc}).d, b};
                for (std::uint32_t J : fulls) {
                    ++res.cases;
                    const InertialType lhs = type_irreducible(ctx, w, J).type;
                    const InertialType rhs = type_irreducible_simple(ctx, w, J);
                    if (!(lhs == rhs))
                        res.violations.push_back(
                            Violation{pr_str(ctx.p, ctx.r) + ",a_enc=" + std::to_string(a_enc) +
                                          ",b=" + vec_str(to_printed(b)) + ",J=" + join_masks({J}),
                                      "type_irreducible != type_irreducible_simple"});
                }
            }
            return res;
        });
    }
}

void build_fl_properties(std::vector<Task>& tasks, const FieldContext& ctx) {
    for (const auto& b : enumerate_regular_b(ctx)) {
        tasks.push_back([&ctx, b]() {
            TaskResult res;
            for (std::uint32_t J = 0; J < (1u << ctx.r); ++J) {
                ++res.cases;
                const FlReport rep = fl_check_properties(ctx, b, J);
                for (const FlCheck& c : rep.checks)
                    if (!c.pass)
                        res.violations.push_back(Violation{
                            pr_str(ctx.p, ctx.r) + ",b=" + vec_str(to_printed(b)) +
                                ",J=" + join_masks({J}),
                            "property (" + std::to_string(c.property) + ") fails at index " +
                                std::to_string(c.index)});
                rank2_model_params(ctx, b, J);  // throws on broken invariants
            }
            return res;
        });
    }
}

// Enumerates all (Z, r-choice) assignments for a context, invoking fn.
template <typename Fn>
void for_each_assignment(const FieldContext& ctx, Fn&& fn) {
    const std::uint32_t all = full_mask(ctx.r);
    for (std::uint32_t z = 0; z <= all; ++z) {
        std::uint32_t y = 0;
        for (int j = 0; j < ctx.r; ++j)
            if (delta(z, j, ctx.r) != delta(z, j + 1, ctx.r)) y |= 1u << j;
        const std::uint32_t yc = ~y & all;
        std::uint32_t em = yc;
        for (;;) {
            fn(z, em);
            if (em == 0) break;
            em = (em - 1) & yc;
        }
    }
}

void build_rank1_oracle(std::vector<Task>& tasks, const FieldContext& ctx) {
    for (std::int64_t enc = 1; enc < ctx.e1; ++enc) {
        tasks.push_back([&ctx, enc]() {
            TaskResult res;
            const DigitVector cd = digits_of(ctx, CharExp{1, enc});
            const CharExp theta1{1, enc}, theta2{1, 0};
            // A digit bump at tau_1 used for the c_1-sensitivity check.
            const bool can_bump = digit_at(cd, 1) < ctx.p - 1 &&
                                  mod_reduce(enc + ctx.omega_enc(1, 1), ctx.e1) != 0;
            const CharExp theta1b{1, mod_reduce(enc + ctx.omega_enc(1, 1), ctx.e1)};
            const DigitVector cdb = digits_of(ctx, theta1b);

            for_each_assignment(ctx, [&](std::uint32_t z, std::uint32_t em) {
                ++res.cases;
                const std::string par = pr_str(ctx.p, ctx.r) + ",c_enc=" + std::to_string(enc) +
                                        ",Z=" + join_masks({z}) + ",em=" + join_masks({em});
                const Rank1Assignment asg = rank1_solve(ctx, theta1, theta2, z, em);
                const CharExp cf = rank1_generic_fibre(ctx, cd, asg, theta2);
                const Rank1Oracle orc = rank1_generic_fibre_oracle(ctx, cd, asg, theta2);
                if (!(orc.fibre == cf))
                    res.violations.push_back(Violation{par, "oracle fibre != closed form"});
                const int yz = std::popcount(asg.y_mask & asg.z_mask);
                const int yzc = std::popcount(asg.y_mask & ~asg.z_mask & full_mask(ctx.r));
                if (yz != yzc)
                    res.violations.push_back(Violation{par, "|Y cap Z| != |Y cap Z^c|"});
                // The c_1-coefficient of n1 vanishes mod e: bumping the
                // tau_1-digit leaves n1 unchanged mod e.
                if (can_bump) {
                    const Rank1Assignment asgb = rank1_solve(ctx, theta1b, theta2, z, em);
                    const Rank1Oracle orcb = rank1_generic_fibre_oracle(ctx, cdb, asgb, theta2);
                    if (mod_reduce(orcb.n1 - orc.n1, ctx.e1) != 0)
                        res.violations.push_back(
                            Violation{par, "n1 depends on c_1 modulo e"});
                }
            });
            return res;
        });
    }
}

void build_jhcompat_witness(std::vector<Task>& tasks, const FieldContext& ctx) {
    for (std::int64_t enc = 1; enc < ctx.e1; ++enc) {
        tasks.push_back([&ctx, enc]() {
            TaskResult res;
            const DigitVector cd = digits_of(ctx, CharExp{1, enc});
            const CharExp theta1{1, enc}, theta2{1, 0};
            const auto factors = jh_principal(ctx, theta2, theta1);
            if (jh_total_dim(factors) != ctx.pr + 1)
                res.violations.push_back(
                    Violation{pr_str(ctx.p, ctx.r) + ",c_enc=" + std::to_string(enc),
                              "dimension sum != p^r + 1"});
            for_each_assignment(ctx, [&](std::uint32_t z, std::uint32_t em) {
                ++res.cases;
                const std::string par = pr_str(ctx.p, ctx.r) + ",c_enc=" + std::to_string(enc) +
                                        ",Z=" + join_masks({z}) + ",em=" + join_masks({em});
                const Rank1Assignment asg = rank1_solve(ctx, theta1, theta2, z, em);
                const CharExp psi1 = rank1_generic_fibre(ctx, cd, asg, theta2);
                const JhcompatWitness wit = jhcompat_witness(ctx, asg);
                if (!jhcompat_display_holds(ctx, cd, wit, psi1))
                    res.violations.push_back(Violation{par, "witness display fails"});
                // The certified factor sits at K^c in the reduction of
                // I(theta2, theta1) and must match psi_1 via L.  When a
                // zero digit makes that factor degenerate, the certified
                // compatibility must transfer to an honest factor.
                const std::uint32_t M = ~wit.K & full_mask(ctx.r);
                const JhFactor& f = factors[M];
                if (f.weight) {
                    const CharExp got = char_mul(ctx, weight_det_char(ctx, *f.weight),
                                                 b_partial_char(ctx, *f.weight, wit.L));
                    if (!(got == psi1))
                        res.violations.push_back(
                            Violation{par, "certified factor incompatible via L"});
                } else {
                    bool transfers = false;
                    for (const JhFactor& g : factors) {
                        if (!g.weight) continue;
                        const CharExp det = weight_det_char(ctx, *g.weight);
                        for (std::uint32_t L = 0; L <= full_mask(ctx.r) && !transfers; ++L)
                            if (char_mul(ctx, det, b_partial_char(ctx, *g.weight, L)) == psi1)
                                transfers = true;
                        if (transfers) break;
                    }
                    if (!transfers)
                        res.violations.push_back(
                            Violation{par, "no honest factor matches psi_1"});
                }
            });
            return res;
        });
    }
}

void build_lift_model(std::vector<Task>& tasks, const FieldContext& ctx) {
    for (const auto& b : enumerate_regular_b(ctx)) {
        tasks.push_back([&ctx, b]() {
            TaskResult res;
            for (std::uint32_t J = 0; J < (1u << ctx.r); ++J) {
                ++res.cases;
                if (auto bad = lift_model_check_one(ctx, b, J))
                    res.violations.push_back(Violation{
                        pr_str(ctx.p, ctx.r) + ",b=" + vec_str(to_printed(b)), *bad});
            }
            return res;
        });
    }
}

void build_lemma_compat(std::vector<Task>& tasks, const FieldContext& ctx) {
    // All weakly regular b with a = 0; the all-1 weight needs a separate
    // argument and is out of this sweep.
    std::vector<std::vector<int>> bs;
    std::vector<int> bp(ctx.r, 1);
    for (;;) {
        if (!std::all_of(bp.begin(), bp.end(), [](int v) { return v == 1; }))
            bs.push_back(from_printed(bp));
        int k = ctx.r - 1;
        while (k >= 0 && bp[k] == ctx.p - 1) --k;
        if (k < 0) break;
        ++bp[k];
        std::fill(bp.begin() + k + 1, bp.end(), 1);
    }
    for (const auto& b : bs) {
        tasks.push_back([&ctx, b]() {
            TaskResult res;
            for (std::int64_t p1 = 0; p1 < ctx.e1; ++p1)
                for (std::int64_t p2 = 0; p2 < ctx.e1; ++p2) {
                    ++res.cases;
                    if (auto bad = lemma_compat_check_one(ctx, b, p1, p2))
                        res.violations.push_back(Violation{
                            pr_str(ctx.p, ctx.r) + ",b=" + vec_str(to_printed(b)), *bad});
                }
            return res;
        });
    }
}

void build_weak_regularity(std::vector<Task>& tasks, const FieldContext& ctx) {
    for (const auto& b : enumerate_regular_b(ctx)) {
        tasks.push_back([&ctx, b]() {
            TaskResult res;
            const SerreWeight w{std::vector<int>(ctx.r, 0), b};
            auto check = [&](const std::vector<JhFactor>& factors, std::uint32_t J,
                             const char* kind) {
                for (const JhFactor& f : factors) {
                    const bool ok = f.weight && classify_weight(ctx, *f.weight) !=
                                                    RegularityClass::NotWeaklyRegular;
                    if (!ok)
                        res.violations.push_back(Violation{
                            pr_str(ctx.p, ctx.r) + ",b=" + vec_str(to_printed(b)) + "," + kind +
                                ",J=" + join_masks({J}),
                            f.weight ? "factor not weakly regular" : "factor degenerates"});
                }
            };
            for (std::uint32_t J = 0; J < (1u << ctx.r); ++J) {
                try {
                    const ReducibleType t = type_reducible(ctx, w, J);
                    check(jh_principal(ctx, t.type.first, t.type.second), J, "ps");
                } catch (const std::exception& e) {
                    res.violations.push_back(Violation{
                        pr_str(ctx.p, ctx.r) + ",b=" + vec_str(to_printed(b)) + ",ps,J=" +
                            join_masks({J}),
                        e.what()});
                }
                // Every determinant twist shares these factor b-vectors.
                res.cases += ctx.e1;
            }
            for (std::uint32_t J : full_subsets(ctx.r)) {
                try {
                    const IrreducibleType t = type_irreducible(ctx, w, J);
                    check(jh_cuspidal(ctx, t.c, t.psi), J, "cusp");
                } catch (const std::exception& e) {
                    res.violations.push_back(Violation{
                        pr_str(ctx.p, ctx.r) + ",b=" + vec_str(to_printed(b)) + ",cusp,J=" +
                            join_masks({J}),
                        e.what()});
                }
                res.cases += ctx.e1;
            }
            return res;
        });
    }
}

// Exact dimension bookkeeping over both reduction kinds.
void build_dimension(std::vector<Task>& tasks, const FieldContext& ctx) {
    tasks.push_back([&ctx]() {
        TaskResult res;
        for (std::int64_t enc = 1; enc < ctx.e1; ++enc) {
            ++res.cases;
            const auto factors = jh_principal(ctx, CharExp{1, 0}, CharExp{1, enc});
            if (jh_total_dim(factors) != ctx.pr + 1)
                res.violations.push_back(
                    Violation{pr_str(ctx.p, ctx.r) + ",c_enc=" + std::to_string(enc),
                              "principal-series dimension sum != p^r + 1"});
        }
        return res;
    });
    for (const auto& b : enumerate_regular_b(ctx)) {
        tasks.push_back([&ctx, b]() {
            TaskResult res;
            const SerreWeight w{std::vector<int>(ctx.r, 0), b};
            for (std::uint32_t J : full_subsets(ctx.r)) {
                ++res.cases;
                const IrreducibleType t = type_irreducible(ctx, w, J);
                if (jh_total_dim(jh_cuspidal(ctx, t.c, t.psi)) != ctx.pr - 1)
                    res.violations.push_back(
                        Violation{pr_str(ctx.p, ctx.r) + ",b=" + vec_str(to_printed(b)) +
                                      ",J=" + join_masks({J}),
                                  "cuspidal dimension sum != p^r - 1"});
            }
            return res;
        });
    }
}

}  // namespace

bool is_known_suite(const std::string& name) {
    const auto ks = known_suites();
    return std::find(ks.begin(), ks.end(), name) != ks.end();
}

std::vector<std::string> known_suites() {
    return {"typeswts",        "typeswts2",   "tau-identity", "fl-properties",
            "rank1-oracle",    "jhcompat-witness", "lift-model",  "lemma-compat",
            "weak-regularity", "dimension"};
}

Report run_suite(const std::string& name, const std::vector<std::int64_t>& ps,
                 const std::vector<int>& rs, const VerifyOptions& opt) {
    if (!is_known_suite(name)) throw input_error("unknown verify suite: " + name);
    const auto t0 = Clock::now();
    const bool use_deadline = opt.max_seconds > 0;
    const auto deadline =
        t0 + std::chrono::microseconds(static_cast<std::int64_t>(opt.max_seconds * 1e6));

    Report rep;
    rep.suite = name;
    {
        std::ostringstream os;
        os << "p=";
        for (std::size_t i = 0; i < ps.size(); ++i) os << (i ? "," : "") << ps[i];
        os << ";r=";
        for (std::size_t i = 0; i < rs.size(); ++i) os << (i ? "," : "") << rs[i];
        rep.params = os.str();
    }

    std::vector<FieldContext> ctxs;
    for (std::int64_t p : ps)
        for (int r : rs) {
            // lemma-compat covers r >= 2 only: over the base field (r = 1)
            // the implication is false as stated.
            if (name == "lemma-compat" && r < 2) continue;
            ctxs.push_back(make_context(p, r));
        }

    std::vector<Task> tasks;
    for (const FieldContext& ctx : ctxs) {
        if (name == "typeswts") build_typeswts(tasks, ctx);
        else if (name == "typeswts2") build_typeswts2(tasks, ctx);
        else if (name == "tau-identity") build_tau_identity(tasks, ctx);
        else if (name == "fl-properties") build_fl_properties(tasks, ctx);
        else if (name == "rank1-oracle") build_rank1_oracle(tasks, ctx);
        else if (name == "jhcompat-witness") build_jhcompat_witness(tasks, ctx);
        else if (name == "lift-model") build_lift_model(tasks, ctx);
        else if (name == "lemma-compat") build_lemma_compat(tasks, ctx);
        else if (name == "weak-regularity") build_weak_regularity(tasks, ctx);
        else if (name == "dimension") build_dimension(tasks, ctx);
    }

    RunOutcome out = run_tasks(tasks, opt.jobs, deadline, use_deadline);
    rep.cases_done = out.done;
    rep.truncated = out.truncated;
    rep.violations = std::move(out.violations);
    rep.wall_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    return rep;
}

namespace {

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 8);
    for (char ch : s) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default: out += ch;
        }
    }
    return out;
}

}  // namespace

std::string report_to_json(const Report& rep) {
    std::ostringstream os;
    os << "{\"suite\":\"" << json_escape(rep.suite) << "\",\"params\":\""
       << json_escape(rep.params) << "\",\"cases\":" << rep.cases_done
       << ",\"truncated\":" << (rep.truncated ? "true" : "false") << ",\"violations\":[";
    for (std::size_t i = 0; i < rep.violations.size(); ++i) {
        if (i) os << ",";
        os << "{\"params\":\"" << json_escape(rep.violations[i].params) << "\",\"detail\":\""
           << json_escape(rep.violations[i].detail) << "\"}";
    }
    os << "]}";
    return os.str();
}

}  // namespace sw
