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

// Compares the serial reference (full enumeration), the serial reduced-cone
// kernel and the OpenMP reduced-cone kernel on a few representative sums.

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "mmsum/catalog.hpp"

using namespace mmsum;

namespace {

double time_of(const std::function<void()>& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void bench_plain(const char* name, const SumSpec& spec) {
    Rational naive, reduced;
    double t_naive = time_of([&] { naive = discrete_mm_sum_naive(spec); });
#ifdef _OPENMP
    int max_threads = omp_get_max_threads();
    omp_set_num_threads(1);
#endif
    double t_serial = time_of([&] { reduced = discrete_mm_sum_exact(spec); });
#ifdef _OPENMP
    omp_set_num_threads(max_threads);
#endif
    double t_par = time_of([&] { reduced = discrete_mm_sum_exact(spec); });
    bool same = naive == reduced;
    std::printf("%-28s naive %8.3fs   reduced(1T) %8.3fs   reduced(omp) %8.3fs   agree=%s\n", name,
                t_naive, t_serial, t_par, same ? "yes" : "NO");
}

void bench_point(const char* name, const char* id, const Params& q) {
    const IdentityDescriptor& d = find_identity(id);
    QEnv env{Rational(1, 2)};
    QWeightSpec w = d.weight(q);
    QV naive, reduced;
    double t_naive =
        time_of([&] { naive = q_sum_eval_naive(env, w, q.r, q.n, q.m.value_or(HalfInt(0)), q.p.value_or(HalfInt(0))); });
#ifdef _OPENMP
    int max_threads = omp_get_max_threads();
    omp_set_num_threads(1);
#endif
    double t_serial =
        time_of([&] { reduced = q_sum_eval(env, w, q.r, q.n, q.m.value_or(HalfInt(0)), q.p.value_or(HalfInt(0))); });
#ifdef _OPENMP
    omp_set_num_threads(max_threads);
#endif
    double t_par =
        time_of([&] { reduced = q_sum_eval(env, w, q.r, q.n, q.m.value_or(HalfInt(0)), q.p.value_or(HalfInt(0))); });
    std::printf("%-28s naive %8.3fs   reduced(1T) %8.3fs   reduced(omp) %8.3fs   agree=%s\n", name,
                t_naive, t_serial, t_par, naive == reduced ? "yes" : "NO");
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("openmp threads: %d\n", omp_get_max_threads());
#else
    std::printf("built without openmp\n");
#endif
    {
        SumSpec s;
        s.alpha = 2;
        s.two_gamma = 1;
        s.delta = 0;
        s.r = 4;
        s.n = HalfInt(16);
        bench_plain("D-type r=4 n=16", s);
    }
    {
        SumSpec s;
        s.alpha = 1;
        s.two_gamma = 2;
        s.delta = 1;
        s.r = 4;
        s.n = HalfInt(12);
        bench_plain("|k|-weight r=4 n=12", s);
    }
    {
        SumSpec s;
        s.alpha = 2;
        s.two_gamma = 2;
        s.delta = 2;
        s.r = 5;
        s.n = HalfInt(8);
        bench_plain("B-type sq r=5 n=8", s);
    }
    {
        Params q;
        q.r = 4;
        q.n = HalfInt(8);
        q.m = HalfInt(8);
        bench_point("q-point S211-q r=4 n=m=8", "S211-q", q);
    }
    return 0;
}
