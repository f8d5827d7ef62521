// Copyright 2026 The mmsum authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: catalog browsing, identity verification, parameter
// sweeps, tableaux enumeration, Pfaffian/character/hypergeometric checks and
// the scaled-limit comparison.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "mmsum/continuous.hpp"
#include "mmsum/hypergeo.hpp"
#include "mmsum/pfaffian.hpp"
#include "mmsum/report.hpp"
#include "mmsum/sampling.hpp"
#include "mmsum/tableaux.hpp"

using namespace mmsum;

namespace {

std::vector<HalfInt> parse_range(const std::string& text, const std::string& step_opt) {
    auto pos = text.find("..");
    if (pos == std::string::npos) return {HalfInt::parse(text)};
    HalfInt lo = HalfInt::parse(text.substr(0, pos));
    HalfInt hi = HalfInt::parse(text.substr(pos + 2));
    HalfInt step;
    if (!step_opt.empty())
        step = HalfInt::parse(step_opt);
    else if (lo.is_integer() == hi.is_integer())
        step = HalfInt(1);
    else
        step = HalfInt::half();
    if (step.sgn() <= 0) throw CLI::ValidationError("--step must be positive");
    std::vector<HalfInt> out;
    for (HalfInt v = lo; v <= hi; v += step) out.push_back(v);
    return out;
}

std::vector<Rational> parse_points(const std::string& csv) {
    std::vector<Rational> out;
    size_t start = 0;
    while (start <= csv.size()) {
        size_t comma = csv.find(',', start);
        std::string tok = csv.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (!tok.empty()) out.push_back(Rational::parse(tok));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

ReportFormat parse_format(const std::string& f) {
    if (f == "text") return ReportFormat::Text;
    if (f == "jsonl" || f == "json-lines") return ReportFormat::JsonLines;
    if (f == "csv") return ReportFormat::Csv;
    throw CLI::ValidationError("unknown format: " + f);
}

struct OutStream {
    std::ofstream file;
    std::ostream* os = &std::cout;
    explicit OutStream(const std::string& path) {
        if (!path.empty()) {
            file.open(path);
            if (!file) throw CLI::ValidationError("cannot open " + path);
            os = &file;
        }
    }
};

struct SweepTask {
    std::string id;
    Params params;
    bool symbolic;
    Rational t0;
};

int run_reports(std::vector<SweepTask> tasks, const std::string& format, const std::string& out_path,
                bool timings, int jobs) {
    if (jobs > 0) {
#ifdef _OPENMP
        omp_set_num_threads(jobs);
#endif
    }
    std::vector<VerificationReport> reports(tasks.size());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < static_cast<long>(tasks.size()); ++i) {
        auto& t = tasks[static_cast<size_t>(i)];
        QEnv env = t.symbolic ? QEnv() : QEnv(t.t0);
        reports[static_cast<size_t>(i)] = verify_identity(t.id, t.params, env);
    }
    OutStream out(out_path);
    ReportWriter w(*out.os, parse_format(format), timings);
    for (auto& rep : reports) w.write(rep);
    w.finish();
    return w.failures() == 0 ? 0 : 1;
}

std::vector<SweepTask> make_tasks(const IdentityDescriptor& d, const std::vector<HalfInt>& rs,
                                  const std::vector<HalfInt>& ns, const std::vector<HalfInt>& ms,
                                  const std::vector<HalfInt>& ps, const std::vector<long>& gs,
                                  const std::string& mode, const std::vector<Rational>& points) {
    std::vector<SweepTask> tasks;
    auto push = [&](const Params& q) {
        if (!d.params_ok(q)) return;
        if (!d.is_q || mode == "symbolic") {
            tasks.push_back({d.id, q, true, Rational(0)});
        } else {
            for (auto& t0 : points) tasks.push_back({d.id, q, false, t0});
        }
    };
    for (auto& r : rs)
        for (auto& n : ns) {
            Params q;
            q.r = static_cast<int>(r.to_long());
            q.n = n;
            if (d.uses_g) {
                for (long g : gs) {
                    q.g = g;
                    push(q);
                }
                continue;
            }
            if (!d.uses_m) {
                push(q);
                continue;
            }
            for (auto& m : ms) {
                q.m = m;
                if (!d.uses_p) {
                    push(q);
                    continue;
                }
                for (auto& p : ps) {
                    q.p = p;
                    push(q);
                }
            }
        }
    return tasks;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact evaluation and verification of discrete Macdonald-Mehta sums"};
    app.require_subcommand(1);

    std::string format = "text", out_path, mode = "symbolic", step, t0_csv = "1/2,1/3";
    bool timings = false;
    int jobs = 0;
    unsigned long seed = 12345;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "text | jsonl | csv")->capture_default_str();
        cmd->add_option("--out", out_path, "write the report to a file instead of stdout");
        cmd->add_flag("--timings", timings, "include elapsed_ms in reports");
        cmd->add_option("--jobs", jobs, "parallel worker count (0 = library default)");
    };

    // ---- catalog ----
    auto* c_cat = app.add_subcommand("catalog", "list every identity with its domain");
    std::string cat_out;
    c_cat->add_option("--out", cat_out, "write the catalog to a file");

    // ---- verify ----
    auto* c_ver = app.add_subcommand("verify", "verify one identity over parameter ranges");
    std::string ver_id, ver_r = "1", ver_n = "0", ver_m, ver_p, ver_g;
    c_ver->add_option("id", ver_id, "identity id (see `catalog`)")->required();
    c_ver->add_option("--r", ver_r, "rank range, e.g. 2 or 1..3");
    c_ver->add_option("--n", ver_n, "n range, e.g. 2..6 or 1/2..5/2");
    c_ver->add_option("--m", ver_m, "m range (identities with a second box)");
    c_ver->add_option("--p", ver_p, "p range (identities with a third box)");
    c_ver->add_option("--g", ver_g, "weight exponent range (general-weight sum)");
    c_ver->add_option("--step", step, "range step, e.g. 1/2");
    c_ver->add_option("--mode", mode, "symbolic | points");
    c_ver->add_option("--t0", t0_csv, "evaluation points for --mode points")->capture_default_str();
    add_common(c_ver);

    // ---- sweep ----
    auto* c_sw = app.add_subcommand("sweep", "verify many identities over a grid");
    std::string sw_id = "all", sw_r = "1..2", sw_n = "0..3", sw_m = "0..3", sw_p = "0..2", sw_g = "0..2";
    c_sw->add_option("id", sw_id, "identity id or 'all'");
    c_sw->add_option("--r", sw_r);
    c_sw->add_option("--n", sw_n);
    c_sw->add_option("--m", sw_m);
    c_sw->add_option("--p", sw_p);
    c_sw->add_option("--g", sw_g);
    c_sw->add_option("--step", step, "range step, e.g. 1/2");
    c_sw->add_option("--mode", mode, "symbolic | points");
    c_sw->add_option("--t0", t0_csv)->capture_default_str();
    c_sw->add_option("--seed", seed, "seed (reports are deterministic for a fixed seed+config)");
    add_common(c_sw);

    // ---- tableaux ----
    auto* c_tab = app.add_subcommand("tableaux", "enumerate and count tableaux");
    auto* c_tc = c_tab->add_subcommand("count", "count tableaux in a box");
    auto* c_tl = c_tab->add_subcommand("list", "print tableaux");
    std::string tab_kind = "sundaram", tab_weight = "plain", tab_shape;
    int tab_r = 2, tab_n = 2;
    for (auto* cmd : {c_tc, c_tl}) {
        cmd->add_option("kind", tab_kind, "sundaram | king | even")->required();
        cmd->add_option("--r", tab_r, "maximum width")->required();
        cmd->add_option("--n", tab_n, "maximum height")->required();
    }
    c_tc->add_option("--weight", tab_weight, "plain | sign-size | sign-minf | height-exact");
    c_tl->add_option("--shape", tab_shape, "restrict to one shape, e.g. 2,1");

    // ---- okada ----
    auto* c_ok = app.add_subcommand("okada", "rectangular character-sum checks");
    int ok_rmax = 3, ok_nmax = 2, ok_trials = 3;
    c_ok->add_option("--r-max", ok_rmax);
    c_ok->add_option("--n-max", ok_nmax);
    c_ok->add_option("--trials", ok_trials);
    c_ok->add_option("--seed", seed);

    // ---- pfaffian ----
    auto* c_pf = app.add_subcommand("pfaffian", "minor-summation and Pfaffian evaluation checks");
    int pf_trials = 5;
    c_pf->add_option("--trials", pf_trials);
    c_pf->add_option("--seed", seed);

    // ---- hyper ----
    auto* c_hy = app.add_subcommand("hyper", "hypergeometric summation and transformation checks");
    int hy_trials = 5;
    c_hy->add_option("--trials", hy_trials);
    c_hy->add_option("--seed", seed);
    c_hy->add_option("--t0", t0_csv)->capture_default_str();

    // ---- limit-check ----
    auto* c_lim = app.add_subcommand("limit-check", "scaled convergence to the continuous value");
    int lim_alpha = 2, lim_r = 2;
    long lim_delta = 0;
    std::string lim_gamma = "1/2", lim_ns = "4,8,16,32";
    double lim_tol = 0.05;
    c_lim->add_option("--alpha", lim_alpha);
    c_lim->add_option("--gamma", lim_gamma, "1/2 or 1");
    c_lim->add_option("--delta", lim_delta);
    c_lim->add_option("--r", lim_r);
    c_lim->add_option("--n", lim_ns, "comma-separated increasing n values")->capture_default_str();
    c_lim->add_option("--tol", lim_tol, "final relative error tolerance")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*c_cat) {
            OutStream out(cat_out);
            *out.os << catalog_text();
            return 0;
        }
        if (*c_ver || *c_sw) {
            bool sweep = static_cast<bool>(*c_sw);
            std::string id = sweep ? sw_id : ver_id;
            auto rs = parse_range(sweep ? sw_r : ver_r, step);
            auto ns = parse_range(sweep ? sw_n : ver_n, step.empty() && !sweep ? step : step);
            auto ms = parse_range(sweep ? sw_m : (ver_m.empty() ? ver_n : ver_m), step);
            auto ps = parse_range(sweep ? sw_p : (ver_p.empty() ? "0..2" : ver_p), step);
            std::vector<long> gs;
            for (auto& g : parse_range(sweep ? sw_g : (ver_g.empty() ? "0..2" : ver_g), ""))
                gs.push_back(g.to_long());
            auto points = parse_points(t0_csv);
            std::vector<SweepTask> tasks;
            for (auto& d : catalog()) {
                if (id != "all" && d.id != id) continue;
                auto more = make_tasks(d, rs, ns, ms, ps, gs, mode, points);
                tasks.insert(tasks.end(), more.begin(), more.end());
            }
            if (tasks.empty() && id != "all") {
                find_identity(id);  // throws for unknown ids
                std::cerr << "no in-domain parameters in the requested ranges\n";
                return 1;
            }
            return run_reports(std::move(tasks), format, out_path, timings, jobs);
        }
        if (*c_tc || *c_tl) {
            TabKind kind;
            if (tab_kind == "sundaram") kind = TabKind::Sundaram;
            else if (tab_kind == "king" || tab_kind == "symplectic") kind = TabKind::King;
            else if (tab_kind == "even") kind = TabKind::EvenSundaram;
            else throw CLI::ValidationError("unknown kind " + tab_kind);
            if (*c_tc) {
                TabWeighting w;
                if (tab_weight == "plain") w = TabWeighting::Plain;
                else if (tab_weight == "sign-size") w = TabWeighting::SignSize;
                else if (tab_weight == "sign-minf") w = TabWeighting::SignMInfinity;
                else if (tab_weight == "height-exact") w = TabWeighting::HeightExactN;
                else throw CLI::ValidationError("unknown weight " + tab_weight);
                BigInt generated = tableau_count_generated(kind, tab_r, tab_n, w);
                Rational closed(0);
                bool have_closed = true;
                try {
                    closed = tableau_count_closed(kind, tab_r, tab_n, w);
                } catch (const std::domain_error&) {
                    have_closed = false;
                }
                std::cout << generated.str() << "\n";
                if (have_closed && Rational(generated) != closed) {
                    std::cerr << "closed form disagrees: " << closed.str() << "\n";
                    return 1;
                }
                return 0;
            }
            std::optional<GPartition> shape;
            if (!tab_shape.empty()) {
                std::vector<HalfInt> parts;
                for (auto& v : parse_points(tab_shape)) parts.push_back(HalfInt::from_twice(2 * v.num()));
                shape = GPartition(parts);
            }
            long count = 0;
            tableaux_foreach(kind, tab_r, tab_n, shape, [&](const Tableau& t) {
                std::cout << t.text() << "\n";
                ++count;
            });
            std::cerr << count << " tableaux\n";
            return 0;
        }
        if (*c_ok) {
            std::mt19937_64 rng(seed);
            bool all_ok = true;
            auto show = [&](const std::string& name, const CheckReport& rep) {
                std::cout << (rep.equal ? "PASS" : "FAIL") << "  " << name;
                if (rep.error) std::cout << "  " << rep.message;
                std::cout << "\n";
                if (!rep.equal) all_ok = false;
            };
            for (int r = 0; r <= ok_rmax; ++r)
                for (int n = 1; n <= ok_nmax; ++n)
                    for (int trial = 0; trial < ok_trials; ++trial) {
                        auto y = random_generic_y(rng, static_cast<size_t>(n));
                        for (int eps : {1, -1})
                            show("sum so(2n+1) eps=" + std::to_string(eps) + " r=" + std::to_string(r) +
                                     " n=" + std::to_string(n),
                                 okada_sum_check("sososo", r, n, y, eps));
                        show("sum sp r=" + std::to_string(r) + " n=" + std::to_string(n),
                             okada_sum_check("spspso", r, n, y));
                        if (r >= 1) {
                            show("sum so(2n) r=" + std::to_string(r) + " n=" + std::to_string(n),
                                 okada_sum_check("sososo2", r, n, y));
                            show("sum o(2n) r=" + std::to_string(r) + " n=" + std::to_string(n),
                                 okada_sum_check("ooso", r, n, y));
                        }
                    }
            for (long r = 0; r <= ok_rmax; ++r)
                for (int n = 1; n <= ok_nmax + 1; ++n) {
                    for (const char* cor : {"B-sum-a", "B-sum-b+", "B-sum-b-", "Sp-heel", "Sp-half"})
                        show(std::string(cor) + " r=" + std::to_string(r) + " n=" + std::to_string(n),
                             corollary_spec_check(cor, r, n));
                    if (r >= 1)
                        for (const char* cor : {"D-spec-1", "D-spec-2"})
                            show(std::string(cor) + " r=" + std::to_string(r) + " n=" + std::to_string(n),
                                 corollary_spec_check(cor, r, n));
                }
            return all_ok ? 0 : 1;
        }
        if (*c_pf) {
            std::mt19937_64 rng(seed);
            bool all_ok = true;
            auto flag = [&](const std::string& name, const PfCheckReport& rep) {
                std::cout << (rep.equal ? "PASS" : "FAIL") << "  " << name;
                if (rep.error) std::cout << "  " << rep.message;
                std::cout << "\n";
                if (!rep.equal) all_ok = false;
            };
            std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
            for (auto [n, r] : std::vector<std::pair<size_t, size_t>>{{2, 3}, {2, 6}, {4, 5}, {4, 6}})
                for (int trial = 0; trial < pf_trials; ++trial) {
                    Matrix<Rational> M(n, std::vector<Rational>(r));
                    for (auto& row : M)
                        for (auto& v : row) v = Rational(num(rng), den(rng));
                    flag("minor summation n=" + std::to_string(n) + " r=" + std::to_string(r),
                         minor_summation_check(M));
                }
            for (size_t n : {2u, 4u})
                for (int trial = 0; trial < pf_trials; ++trial) {
                    auto y = random_generic_y(rng, n);
                    std::vector<Rational> x, a, b;
                    for (auto& v : y) x.push_back(v * v);
                    for (size_t i = 0; i < n; ++i) {
                        a.push_back(Rational(num(rng), den(rng)));
                        b.push_back(Rational(num(rng), den(rng)));
                    }
                    flag("pfaffian evaluation n=" + std::to_string(n), okada_pfaffian_check(x, a, b));
                    flag("key minor identity n=" + std::to_string(n),
                         cor_key_check(y, static_cast<long>(n) + 2, HalfInt::half(), trial % 2 ? 1 : -1));
                }
            return all_ok ? 0 : 1;
        }
        if (*c_hy) {
            std::mt19937_64 rng(seed);
            bool all_ok = true;
            auto flag = [&](const std::string& name, const HGReport& rep, bool skip_err = true) {
                if (rep.error && skip_err) return false;
                std::cout << (rep.equal ? "PASS" : "FAIL") << "  " << name;
                if (rep.error) std::cout << "  " << rep.message;
                std::cout << "\n";
                if (!rep.equal) all_ok = false;
                return true;
            };
            std::uniform_int_distribution<int> pn(-6, 8), pd(1, 2), me(-3, 4), Nn(0, 4);
            int done = 0;
            while (done < hy_trials) {
                Rational a(pn(rng), pd(rng)), b(pn(rng), pd(rng));
                if (flag("dixon", dixon_check(a, b, Nn(rng)))) ++done;
            }
            done = 0;
            while (done < hy_trials) {
                Rational a(pn(rng), pd(rng)), b(pn(rng), pd(rng));
                if (flag("4F3 summation", f43sum_check(a, b, Nn(rng)))) ++done;
            }
            done = 0;
            while (done < hy_trials) {
                Rational a(pn(rng), pd(rng)), b(pn(rng), pd(rng)), c(pn(rng), pd(rng)), e(pn(rng), pd(rng)),
                    f(pn(rng), pd(rng));
                if (flag("whipple", whipple_check(a, b, c, e, f, Nn(rng)))) ++done;
            }
            for (auto& t0 : parse_points(t0_csv)) {
                QEnv env(t0);
                done = 0;
                while (done < hy_trials) {
                    QMono a = QMono::q(std::uniform_int_distribution<int>(0, 3)(rng) * 2 / 2);
                    a.e *= 2;
                    QMono b = QMono::q(me(rng)), c = QMono::q(me(rng)), d = QMono::q(me(rng)),
                          e = QMono::q(me(rng));
                    if (flag("watson t0=" + t0.str(), watson_check(env, a, b, c, d, e, Nn(rng)))) ++done;
                }
                for (int r = 1; r <= 3; ++r) {
                    done = 0;
                    int guard = 0;
                    while (done < hy_trials && guard++ < 500) {
                        QMono a = QMono::q(me(rng)), b = QMono::q(me(rng)), c = QMono::q(me(rng)),
                              d = QMono::q(me(rng)), e = QMono::q(me(rng)), f = QMono::q(me(rng));
                        long m = std::uniform_int_distribution<long>(std::max(1, r - 1), 3)(rng);
                        if (flag("series transform r=" + std::to_string(r) + " t0=" + t0.str(),
                                 multiple_series_transform_check(env, a, b, c, d, e, f, m, r)))
                            ++done;
                    }
                }
            }
            return all_ok ? 0 : 1;
        }
        if (*c_lim) {
            std::vector<HalfInt> ns;
            for (auto& v : parse_points(lim_ns)) ns.push_back(HalfInt::from_twice(2 * v.num()));
            auto rep = limit_check(lim_alpha, HalfInt::parse(lim_gamma), lim_delta, lim_r, ns, lim_tol);
            std::cout << "target " << rep.target << "\n";
            for (size_t i = 0; i < rep.scaled.size(); ++i)
                std::cout << "n=" << ns[i].str() << "  scaled=" << rep.scaled[i]
                          << "  rel_err=" << rep.rel_err[i] << "\n";
            std::cout << (rep.pass ? "PASS" : "FAIL") << "  monotone=" << (rep.decreasing ? "yes" : "no")
                      << "  final_rel_err=" << rep.final_rel_err << "\n";
            return rep.pass ? 0 : 1;
        }
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
    return 0;
}
