/*
   Copyright 2026 cenda developers

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Acceptance suite: one pass/fail line per criterion, exact comparisons
// throughout, wall-clock budgets enforced where stated. Exit status is the
// number of failed criteria.

#include <unistd.h>

#include <array>
#include <atomic>
#include <chrono>
#include <future>
#include <mutex>
#include <thread>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cenda/algebras.hpp"
#include "cenda/dist.hpp"
#include "cenda/growth.hpp"
#include "cenda/identities.hpp"
#include "cenda/isom.hpp"
#include "cenda/parse.hpp"
#include "cenda/rng.hpp"
#include "cenda/smith.hpp"
#include "cenda/tensor.hpp"
#include "cenda/weyl.hpp"

using namespace cenda;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool pass = true;
    std::string note;

    void fail(const std::string& why) {
        if (pass) note = why;
        pass = false;
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void enforce_budget(Outcome& out, double elapsed, double budget) {
    std::ostringstream os;
    os << " [" << elapsed << "s";
    if (budget > 0) {
        os << " / budget " << budget << "s";
        if (elapsed >= budget) out.fail("runtime budget exceeded");
    }
    os << "]";
    out.note += os.str();
}

// ---------------------------------------------------------------- criteria

Outcome criterion_axioms() {
    Outcome out;
    auto t0 = std::chrono::steady_clock::now();
    SweepRng rng(1001);
    unsigned long pairs = 0, instances = 0;
    for (int i = 0; i < 500; ++i) {
        std::size_t n = rng.uniform(1, 3);
        ProductCache cache;
        std::size_t a = cache.intern(rng.element(n, 4, 4));
        std::size_t b = cache.intern(rng.element(n, 4, 4));
        ++pairs;
        unsigned loc = cache.locality(a, b);
        // C1: the a-priori degree bound is a vanishing bound
        const ConformalElement& ea = cache.element(a);
        const ConformalElement& eb = cache.element(b);
        unsigned apriori =
            (ea.is_zero() || eb.is_zero())
                ? 0
                : static_cast<unsigned>(ea.deg_D() + eb.deg_D() + eb.deg_x()) + 1;
        if (loc > apriori) out.fail("locality bound exceeds the degree bound");
        for (unsigned k = loc; k <= apriori + 1; ++k, ++instances)
            if (!n_product(ea, eb, k).is_zero()) out.fail("C1 violated beyond the locality bound");
        for (unsigned k = 0; k < loc + 2; ++k) {
            ++instances;
            if (!check_identity_cached(IdentityTag::C2, cache, {a, b}, {k}).ok) out.fail("C2 instance failed");
            if (!check_identity_cached(IdentityTag::C3, cache, {a, b}, {k}).ok) out.fail("C3 instance failed");
        }
        if (!out.pass) break;
    }
    std::ostringstream os;
    os << pairs << " pairs, " << instances << " instances";
    if (!out.pass) os << "; " << out.note;
    out.note = os.str();
    enforce_budget(out, seconds_since(t0), 10.0);
    return out;
}

Outcome criterion_associativity() {
    Outcome out;
    auto t0 = std::chrono::steady_clock::now();
    const std::vector<IdentityTag> tags = {IdentityTag::ConfAss, IdentityTag::ConfAss1, IdentityTag::Eq221,
                                           IdentityTag::Eq222,   IdentityTag::Eq223,    IdentityTag::Eq224};

    // All triples are drawn up front from the seed; the per-triple grids are
    // independent and evaluated in parallel (results merged by index).
    SweepRng rng(2002);
    std::vector<std::vector<ConformalElement>> triples;
    for (int i = 0; i < 200; ++i) {
        std::size_t n = rng.uniform(1, 3);
        triples.push_back({rng.element(n, 4, 4), rng.element(n, 4, 4), rng.element(n, 4, 4)});
    }

    std::atomic<unsigned long> instances{0};
    std::mutex fail_mutex;
    std::string first_fail;
    std::atomic<long> first_fail_index{-1};

    auto worker = [&](std::size_t begin, std::size_t step) {
        for (std::size_t i = begin; i < triples.size(); i += step) {
            ProductCache cache;
            std::vector<std::size_t> ids;
            for (const auto& e : triples[i]) ids.push_back(cache.intern(e));
            // Sound sweep window: the curly-composed sides stay nonzero up to
            // twice the largest pairwise degree bound, so sweep to 2L + 2.
            unsigned L = 0;
            for (const auto& ea : triples[i])
                for (const auto& eb : triples[i]) {
                    if (ea.is_zero() || eb.is_zero()) continue;
                    L = std::max(L, static_cast<unsigned>(ea.deg_D() + eb.deg_D() + eb.deg_x()) + 1);
                }
            unsigned bound = 2 * L + 2;
            unsigned long local = 0;
            for (unsigned nn = 0; nn < bound; ++nn)
                for (unsigned mm = 0; mm < bound; ++mm)
                    for (IdentityTag tag : tags) {
                        ++local;
                        CheckReport r = check_identity_cached(tag, cache, ids, {nn, mm});
                        if (!r.ok) {
                            std::lock_guard<std::mutex> lock(fail_mutex);
                            long prev = first_fail_index.load();
                            if (prev < 0 || static_cast<long>(i) < prev) {
                                first_fail_index = static_cast<long>(i);
                                first_fail = identity_name(tag) + " failed at triple " + std::to_string(i) + " (" +
                                             std::to_string(nn) + "," + std::to_string(mm) + ")";
                            }
                        }
                    }
            instances += local;
        }
    };

    unsigned threads = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
    std::vector<std::future<void>> futures;
    for (unsigned t = 0; t < threads; ++t) futures.push_back(std::async(std::launch::async, worker, t, threads));
    for (auto& f : futures) f.get();

    if (first_fail_index.load() >= 0) out.fail(first_fail);
    std::ostringstream os;
    os << triples.size() << " triples, " << instances.load() << " instances";
    if (!out.pass) os << "; " << out.note;
    out.note = os.str();
    enforce_budget(out, seconds_since(t0), 60.0);
    return out;
}

Outcome criterion_fourier() {
    Outcome out;
    auto t0 = std::chrono::steady_clock::now();
    for (unsigned n = 0; n <= 10 && out.pass; ++n)
        for (unsigned m = 0; m <= 10; ++m) {
            TensorHH t = TensorHH::basis(n, m);
            if (fourier(fourier(t, false), true) != t || fourier(fourier(t, true), false) != t) {
                out.fail("inverse composition failed at (" + std::to_string(n) + "," + std::to_string(m) + ")");
                break;
            }
        }
    if (out.pass) out.note = "121 basis tensors, both compositions";
    enforce_budget(out, seconds_since(t0), 0);
    return out;
}

Outcome criterion_oracles() {
    Outcome out;
    auto t0 = std::chrono::steady_clock::now();
    SweepRng rng(4004);
    unsigned long weyl = 0;
    for (int i = 0; i < 200 && out.pass; ++i) {
        std::size_t n = rng.uniform(1, 2);
        ConformalElement a = rng.element(n, 3, 3);
        ConformalElement b = rng.element(n, 3, 3);
        unsigned np = rng.uniform(0, locality_bound(a, b));
        unsigned m = rng.uniform(0, 5);
        VNElement probe = rng.vn(n, 4);
        ++weyl;
        OracleReport r = oracle_check_product(a, b, np, m, {probe});
        if (!r.ok) out.fail("operator realization disagrees: " + r.detail);
    }
    unsigned long residue = 0;
    for (int i = 0; i < 100 && out.pass; ++i) {
        std::size_t n = rng.uniform(1, 2);
        DistSum a(rng.symbol(n, 3, 2));
        DistSum b(rng.symbol(n, 3, 2));
        unsigned m = rng.uniform(0, 5);
        std::string detail;
        ++residue;
        if (!verify_residue_product(a, b, m, 12, &detail)) out.fail("residue closed form disagrees: " + detail);
    }
    std::ostringstream os;
    os << weyl << " operator tuples, " << residue << " residue pairs";
    if (!out.pass) os << "; " << out.note;
    out.note = os.str();
    enforce_budget(out, seconds_since(t0), 0);
    return out;
}

Outcome criterion_growth() {
    Outcome out;
    auto t0 = std::chrono::steady_clock::now();

    auto p1 = gk_profile(default_generators(AlgebraSpec::curr(2)), 6);
    if (p1.d.size() != 6) out.fail("current-algebra window incomplete");
    for (unsigned d : p1.d)
        if (d != 4) out.fail("current-algebra rank differs from 4");
    if (p1.verdict != GrowthVerdict::Finite) out.fail("current-algebra verdict is not finite");

    auto p2 = gk_profile(default_generators(AlgebraSpec::cend(1)), 8);
    if (p2.d.size() != 8) out.fail("full-algebra window incomplete");
    for (std::size_t i = 0; i < p2.d.size(); ++i)
        if (p2.d[i] != i + 2) out.fail("full-algebra rank differs from n + 1");
    if (p2.verdict != GrowthVerdict::Linear) out.fail("full-algebra verdict is not linear");

    Matrix<Poly1> q(1, 1, Poly1(Var::Y));
    q.at(0, 0) = Poly1::variable(Var::Y);
    auto p3 = gk_profile(default_generators(AlgebraSpec::cendq(1, q)), 6);
    if (p3.verdict != GrowthVerdict::Linear) out.fail("cut-subalgebra verdict is not linear");

    if (out.pass) {
        std::ostringstream os;
        os << "curr2 d=4 finite; cend1 d_n=n+1 linear; cendq(1,y) linear (d_6=" << p3.d.back() << ")";
        out.note = os.str();
    }
    enforce_budget(out, seconds_since(t0), 120.0);
    return out;
}

Outcome criterion_isomorphism() {
    Outcome out;
    auto t0 = std::chrono::steady_clock::now();

    auto pm = [](const Poly1& p) {
        Matrix<Poly1> m(1, 1, Poly1(Var::Y));
        m.at(0, 0) = p;
        return m;
    };
    Poly1 y = Poly1::variable(Var::Y);
    Poly1 y3 = y + Poly1::constant(Var::Y, 3);

    IsoVerdict v = iso_test(pm(y), pm(y3));
    if (!v.isomorphic || !v.alpha) out.fail("shifted pair not recognized");
    if (v.isomorphic && v.canonical_p[0] != v.canonical_q[0].shifted(*v.alpha)) out.fail("returned shift unverified");

    if (iso_test(pm(y), pm(y * y)).isomorphic) out.fail("degree mismatch not refused");

    SweepRng rng(6006);
    for (int i = 0; i < 50 && out.pass; ++i) {
        std::size_t n = rng.uniform(1, 3);
        Matrix<Poly1> Q = rng.nonsingular_pmat(n, 2);
        Matrix<Poly1> U = rng.unimodular(n, 1);
        Matrix<Poly1> V = rng.unimodular(n, 1);
        IsoVerdict w = iso_test(Q, U * Q * V);
        if (!w.isomorphic || !w.alpha || !(*w.alpha == Rat(0)))
            out.fail("unimodular transform not recognized with zero shift");
    }
    for (int i = 0; i < 50 && out.pass; ++i) {
        std::size_t n = rng.uniform(1, 2);
        Matrix<Poly1> Q = rng.nonsingular_pmat(n, 2);
        Rat alpha0 = rng.rat();
        Matrix<Poly1> Qs(n, n, Poly1(Var::Y));
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) Qs.at(r, c) = Q.at(r, c).shifted(alpha0);
        IsoVerdict w = iso_test(Q, Qs);
        if (!w.isomorphic || !w.alpha) {
            out.fail("shifted matrix not recognized");
            break;
        }
        for (std::size_t k = 0; k < w.canonical_p.size(); ++k)
            if (w.canonical_p[k] != w.canonical_q[k].shifted(*w.alpha)) out.fail("shift identity unverified");
    }
    if (out.pass) out.note = "named pairs, 50 unimodular transforms, 50 shifts";
    enforce_budget(out, seconds_since(t0), 0);
    return out;
}

Outcome criterion_snf() {
    Outcome out;
    auto t0 = std::chrono::steady_clock::now();
    SweepRng rng(7007);
    unsigned long count = 0;
    for (int i = 0; i < 200 && out.pass; ++i) {
        std::size_t n = rng.uniform(1, 3);
        Matrix<Poly1> a = rng.pmat(n, 4);
        ++count;
        SNFResult r = smith_normal_form(a);
        if (!(r.U * a * r.V == r.S)) out.fail("transform identity failed");
        if (!is_unimodular(r.U) || !is_unimodular(r.V)) out.fail("transform matrices not unimodular");
        bool seen_zero = false;
        for (std::size_t k = 0; k < n; ++k) {
            const Poly1& d = r.S.at(k, k);
            if (d.is_zero()) {
                seen_zero = true;
                continue;
            }
            if (seen_zero) out.fail("zero factor precedes a nonzero one");
            if (!d.is_monic()) out.fail("factor not monic");
            if (k + 1 < n && !r.S.at(k + 1, k + 1).is_zero() && !Poly1::divides(d, r.S.at(k + 1, k + 1)))
                out.fail("divisibility chain broken");
        }
        for (std::size_t r1 = 0; r1 < n; ++r1)
            for (std::size_t c1 = 0; c1 < n; ++c1)
                if (r1 != c1 && !r.S.at(r1, c1).is_zero()) out.fail("result not diagonal");
    }
    std::ostringstream os;
    os << count << " matrices";
    if (!out.pass) os << "; " << out.note;
    out.note = os.str();
    enforce_budget(out, seconds_since(t0), 30.0);
    return out;
}

Outcome criterion_closure() {
    Outcome out;
    auto t0 = std::chrono::steady_clock::now();
    SweepRng rng(8008);
    unsigned long pairs = 0, checks = 0;
    for (int i = 0; i < 120 && out.pass; ++i) {
        std::size_t n = rng.uniform(1, 2);
        AlgebraSpec spec = AlgebraSpec::curr(n);
        ConformalElement a = rng.element(n, 3, 0), b = rng.element(n, 3, 0);
        ++pairs;
        unsigned bound = locality_bound(a, b) + 1;
        for (unsigned k = 0; k < bound; ++k, ++checks)
            if (!membership(spec, n_product(a, b, k)).member) out.fail("current subalgebra not closed");
    }
    for (int i = 0; i < 120 && out.pass; ++i) {
        std::size_t n = rng.uniform(1, 2);
        AlgebraSpec spec = AlgebraSpec::cendq(n, rng.nonsingular_pmat(n, 2));
        ConformalElement a(rng.element(n, 1, 1).mat() * q_embedded(spec));
        ConformalElement b(rng.element(n, 1, 1).mat() * q_embedded(spec));
        ++pairs;
        unsigned bound = locality_bound(a, b) + 1;
        for (unsigned k = 0; k < bound; ++k, ++checks)
            if (!membership(spec, n_product(a, b, k)).member) out.fail("cut subalgebra not closed");
    }
    std::ostringstream os;
    os << pairs << " pairs, " << checks << " membership checks";
    if (!out.pass) os << "; " << out.note;
    out.note = os.str();
    enforce_budget(out, seconds_since(t0), 0);
    return out;
}

Outcome criterion_unit_idem() {
    Outcome out;
    auto t0 = std::chrono::steady_clock::now();
    for (std::size_t n = 1; n <= 3; ++n) {
        if (!is_unit(ConformalElement::identity(n), default_generators(AlgebraSpec::cend(n))))
            out.fail("identity not certified as unit at size " + std::to_string(n));
    }
    Matrix<Poly1> q(2, 2, Poly1(Var::Y));
    q.at(0, 0) = Poly1::constant(Var::Y, 1);
    q.at(1, 1) = Poly1::variable(Var::Y);
    AlgebraSpec spec = AlgebraSpec::cendq(2, q);
    ConformalElement e11 = ConformalElement::matrix_unit(2, 0, 0);
    if (!is_idempotent(e11)) out.fail("corner unit not certified idempotent");
    if (!membership(spec, e11).member) out.fail("corner unit not a member of the diag(1,y) cut");
    ConformalElement x = element_1x1(Poly2::var_x());
    if (is_unit(x, {x})) out.fail("x wrongly certified as unit");
    if (is_idempotent(x)) out.fail("x wrongly certified idempotent");
    if (out.pass) out.note = "identity units (N=1..3), corner idempotent with membership, x refused";
    enforce_budget(out, seconds_since(t0), 0);
    return out;
}

struct CliRun {
    int exit_code;
    std::string out;
};

CliRun run_cli(const std::string& args) {
    std::string cmd = std::string(CENDA_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string text;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) return {-1, ""};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) text.append(buf.data(), got);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, text};
}

Outcome criterion_cli_determinism() {
    Outcome out;
    auto t0 = std::chrono::steady_clock::now();

    fs::path dir = fs::temp_directory_path() / ("cenda-acceptance-" + std::to_string(::getpid()));
    fs::create_directories(dir);
    auto file = [&](const std::string& name, const std::string& content) {
        fs::path p = dir / name;
        std::ofstream(p) << content;
        return p.string();
    };
    std::string x = file("x.ce", "N=1\n[1,1]: x\n");
    std::string id2 = file("id2.ce", "N=2\n[1,1]: 1\n[2,2]: 1\n");
    std::string p = file("p.pm", "rows=1\ncols=1\n[1,1]: y\n");
    std::string qq = file("q.pm", "rows=1\ncols=1\n[1,1]: y + 3\n");
    std::string snf_in = file("a.pm", "rows=2\ncols=2\n[1,2]: 1\n[2,1]: y^2\n");

    const std::vector<std::string> commands = {
        "product " + x + " " + x + " --n 1",
        "product " + x + " " + x + " --n 1 --format kv",
        "check conf-ass --random 25 --seed 7 --size 2 --deg 3",
        "check commutativity --random 10 --seed 3 --format kv",
        "gk --spec \"curr 2\" --nmax 6",
        "gk --spec \"cend 1\" --nmax 8 --format kv",
        "iso " + p + " " + qq,
        "iso " + p + " " + qq + " --format kv",
        "member --spec \"cendq 1 " + p + "\" --elem " + x,
        "unit --elem " + id2,
        "idem --elem " + id2 + " --format kv",
        "snf " + snf_in,
        "oracle --random 40 --seed 42",
        "oracle --random 40 --seed 42 --format kv",
    };
    unsigned long runs = 0;
    for (const auto& cmd : commands) {
        CliRun first = run_cli(cmd);
        ++runs;
        if (first.exit_code < 0 || first.exit_code > 1) {
            out.fail("command failed outright: " + cmd);
            break;
        }
        for (int r = 1; r < 3; ++r) {
            CliRun again = run_cli(cmd);
            ++runs;
            if (again.out != first.out || again.exit_code != first.exit_code) {
                out.fail("nondeterministic output: " + cmd);
                break;
            }
        }
        if (!out.pass) break;
    }
    fs::remove_all(dir);
    if (out.pass) {
        std::ostringstream os;
        os << commands.size() << " commands x 3 runs byte-identical";
        out.note = os.str();
    }
    enforce_budget(out, seconds_since(t0), 0);
    return out;
}

}  // namespace

int main() {
    struct Entry {
        const char* name;
        std::function<Outcome()> run;
    };
    const std::vector<Entry> criteria = {
        {"1 axiom suite (C1/C2/C3, 500 pairs)", criterion_axioms},
        {"2 associativity suite (200 triples, 6 identities)", criterion_associativity},
        {"3 fourier inverse compositions (n,m <= 10)", criterion_fourier},
        {"4 oracle agreement (operator + residue)", criterion_oracles},
        {"5 growth profiles (reference families)", criterion_growth},
        {"6 isomorphism decision (named cases + random)", criterion_isomorphism},
        {"7 smith normal form contract (200 matrices)", criterion_snf},
        {"8 subalgebra closure (240 pairs)", criterion_closure},
        {"9 unit and idempotent certificates", criterion_unit_idem},
        {"10 cli determinism (3 runs per command)", criterion_cli_determinism},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out.pass = false;
            out.note = std::string("exception: ") + e.what();
        }
        std::printf("%s criterion %s: %s\n", out.pass ? "PASS" : "FAIL", c.name, out.note.c_str());
        std::fflush(stdout);
        if (!out.pass) ++failed;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed;
}
