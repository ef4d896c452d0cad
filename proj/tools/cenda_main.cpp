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

// Command-line front end. All computation lives behind the shared C API;
// this binary only parses flags, reads files, and prints reports.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cenda.h"

namespace {

int g_exit = 0;

std::string read_file_or_die(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::fprintf(stderr, "error: cannot read file: %s\n", path.c_str());
        std::exit(2);
    }
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// Prints the report (when present), frees it, and records the exit code.
void finish(cenda_status st, char* report) {
    if (report != nullptr) {
        std::fputs(report, stdout);
        cenda_string_free(report);
    } else if (st != CENDA_OK) {
        std::fprintf(stderr, "error: %s\n", cenda_last_error());
    }
    g_exit = static_cast<int>(st);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact symbolic calculator for matrix-model conformal endomorphism algebras"};
    app.require_subcommand(1);

    std::string format = "report";
    app.add_option("--format", format, "output format: report or kv")->check(CLI::IsMember({"report", "kv"}));
    std::uint64_t seed = 0;
    app.add_option("--seed", seed, "seed for randomized sweeps");
    unsigned deg_cap = 3;
    app.add_option("--deg", deg_cap, "degree cap for randomized sweeps");
    unsigned size_cap = 2;
    app.add_option("--size", size_cap, "matrix size cap for randomized sweeps");

    auto kv = [&]() { return format == "kv" ? 1 : 0; };

    // product <a.ce> [b.ce] --n <n>
    auto* product = app.add_subcommand("product", "n-th product of two elements");
    std::vector<std::string> product_files;
    unsigned product_n = 0;
    product->add_option("files", product_files, "element file(s); two elements total")->required()->expected(1, 2);
    product->add_option("--n", product_n, "product index")->required();
    product->callback([&]() {
        std::vector<std::string> texts;
        for (const auto& f : product_files) texts.push_back(read_file_or_die(f));
        std::vector<const char*> ptrs;
        for (const auto& t : texts) ptrs.push_back(t.c_str());
        char* report = nullptr;
        cenda_status st = cenda_cmd_product(ptrs.data(), ptrs.size(), product_n, kv(), &report);
        finish(st, report);
    });

    // check <identity> [--elems files...] [--random count]
    auto* check = app.add_subcommand("check", "verify a structural identity");
    std::string check_identity;
    std::vector<std::string> check_elem_files;
    unsigned check_random = 0;
    check->add_option("identity", check_identity,
                      "C2 | C3 | conf-ass | conf-ass1 | eq2.2.1 | eq2.2.2 | eq2.2.3 | eq2.2.4 | anti-iso | "
                      "commutativity")
        ->required();
    check->add_option("--elems", check_elem_files, "element file(s) to sweep");
    check->add_option("--random", check_random, "number of random tuples");
    check->callback([&]() {
        char* report = nullptr;
        if (!check_elem_files.empty()) {
            std::string all;
            for (const auto& f : check_elem_files) all += read_file_or_die(f) + "\n";
            cenda_status st = cenda_cmd_check_elems(check_identity.c_str(), all.c_str(), kv(), &report);
            finish(st, report);
        } else {
            unsigned count = check_random == 0 ? 100 : check_random;
            cenda_status st = cenda_cmd_check_random(check_identity.c_str(), seed, count, size_cap, deg_cap, kv(), &report);
            finish(st, report);
        }
    });

    // gk (--spec "curr 2" | --gens file) --nmax N
    auto* gk = app.add_subcommand("gk", "growth profile of a generated filtration");
    std::string gk_spec;
    std::string gk_gens;
    unsigned gk_nmax = 6;
    gk->add_option("--spec", gk_spec, "algebra spec: cend N | curr N | cendq N <matrix-file>");
    gk->add_option("--gens", gk_gens, "generator element file");
    gk->add_option("--nmax", gk_nmax, "window size");
    gk->callback([&]() {
        char* report = nullptr;
        if (!gk_spec.empty() && gk_gens.empty()) {
            cenda_status st = cenda_cmd_gk_spec(gk_spec.c_str(), gk_nmax, kv(), &report);
            finish(st, report);
        } else if (gk_spec.empty() && !gk_gens.empty()) {
            std::string text = read_file_or_die(gk_gens);
            cenda_status st = cenda_cmd_gk_gens(text.c_str(), gk_nmax, kv(), &report);
            finish(st, report);
        } else {
            std::fprintf(stderr, "error: gk needs exactly one of --spec or --gens\n");
            g_exit = 2;
        }
    });

    // iso <P.pm> <Q.pm>
    auto* iso = app.add_subcommand("iso", "decide isomorphism of two Q-cut subalgebras");
    std::vector<std::string> iso_files;
    iso->add_option("files", iso_files, "two polynomial matrix files")->required()->expected(2);
    iso->callback([&]() {
        std::string p = read_file_or_die(iso_files[0]);
        std::string q = read_file_or_die(iso_files[1]);
        char* report = nullptr;
        cenda_status st = cenda_cmd_iso(p.c_str(), q.c_str(), kv(), &report);
        finish(st, report);
    });

    // member --spec "..." --elem file
    auto* member = app.add_subcommand("member", "membership in a named subalgebra");
    std::string member_spec;
    std::string member_elem;
    member->add_option("--spec", member_spec, "algebra spec")->required();
    member->add_option("--elem", member_elem, "element file")->required();
    member->callback([&]() {
        std::string text = read_file_or_die(member_elem);
        char* report = nullptr;
        cenda_status st = cenda_cmd_member(member_spec.c_str(), text.c_str(), kv(), &report);
        finish(st, report);
    });

    // unit --elem file [--probes file]
    auto* unit = app.add_subcommand("unit", "generator-level conformal unit certificate");
    std::string unit_elem;
    std::string unit_probes;
    unit->add_option("--elem", unit_elem, "element file")->required();
    unit->add_option("--probes", unit_probes, "probe element file (default: full-algebra generators)");
    unit->callback([&]() {
        std::string text = read_file_or_die(unit_elem);
        std::string probes;
        if (!unit_probes.empty()) probes = read_file_or_die(unit_probes);
        char* report = nullptr;
        cenda_status st = cenda_cmd_unit(text.c_str(), unit_probes.empty() ? nullptr : probes.c_str(), kv(), &report);
        finish(st, report);
    });

    // idem --elem file
    auto* idem = app.add_subcommand("idem", "conformal idempotent test");
    std::string idem_elem;
    idem->add_option("--elem", idem_elem, "element file")->required();
    idem->callback([&]() {
        std::string text = read_file_or_die(idem_elem);
        char* report = nullptr;
        cenda_status st = cenda_cmd_idem(text.c_str(), kv(), &report);
        finish(st, report);
    });

    // snf <A.pm>
    auto* snf = app.add_subcommand("snf", "Smith normal form of a univariate polynomial matrix");
    std::string snf_file;
    snf->add_option("file", snf_file, "polynomial matrix file")->required();
    snf->callback([&]() {
        std::string text = read_file_or_die(snf_file);
        char* report = nullptr;
        cenda_status st = cenda_cmd_snf(text.c_str(), kv(), &report);
        finish(st, report);
    });

    // oracle [--random count]
    auto* oracle = app.add_subcommand("oracle", "randomized cross-check sweep of the product realizations");
    unsigned oracle_count = 200;
    oracle->add_option("--random", oracle_count, "number of sweep tuples");
    oracle->callback([&]() {
        char* report = nullptr;
        cenda_status st = cenda_cmd_oracle(seed, oracle_count, size_cap, deg_cap, kv(), &report);
        finish(st, report);
    });

    // global flags may follow the subcommand name
    for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; })) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // bad flags are invalid input
    }
    return g_exit;
}
