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

// Exercises the shared-library C surface: opaque handles, status codes and
// report strings. Links against the shared library only.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>

#include "cenda.h"

namespace {

std::string take(char* s) {
    REQUIRE(s != nullptr);
    std::string out(s);
    cenda_string_free(s);
    return out;
}

}  // namespace

TEST_CASE("version and error reporting") {
    CHECK(std::strlen(cenda_version()) > 0);
    cenda_elem* e = nullptr;
    CHECK(cenda_elem_parse("N=1\n[1,1]: q", &e) == CENDA_INVALID_INPUT);
    CHECK(e == nullptr);
    CHECK(std::strlen(cenda_last_error()) > 0);
}

TEST_CASE("handles: parse, product, locality, print") {
    cenda_elem* x = nullptr;
    REQUIRE(cenda_elem_parse("N=1\n[1,1]: x\n", &x) == CENDA_OK);
    size_t n = 0;
    CHECK(cenda_elem_size(x, &n) == CENDA_OK);
    CHECK(n == 1);

    cenda_elem* prod = nullptr;
    REQUIRE(cenda_elem_product(x, x, 1, &prod) == CENDA_OK);
    char* text = nullptr;
    REQUIRE(cenda_elem_print(prod, &text) == CENDA_OK);
    CHECK(take(text) == "N=1\n[1,1]: x\n");

    unsigned bound = 0;
    CHECK(cenda_elem_locality(x, x, &bound) == CENDA_OK);
    CHECK(bound == 2);

    cenda_elem* wrong = nullptr;
    REQUIRE(cenda_elem_parse("N=2\n[1,1]: 1\n", &wrong) == CENDA_OK);
    cenda_elem* bad = nullptr;
    CHECK(cenda_elem_product(x, wrong, 0, &bad) == CENDA_INVALID_INPUT);
    CHECK(bad == nullptr);

    cenda_elem_free(x);
    cenda_elem_free(prod);
    cenda_elem_free(wrong);
}

TEST_CASE("matrix handles round-trip") {
    cenda_pmat* m = nullptr;
    REQUIRE(cenda_pmat_parse("rows=2\ncols=2\n[1,1]: 1\n[2,2]: y\n", &m) == CENDA_OK);
    char* text = nullptr;
    REQUIRE(cenda_pmat_print(m, &text) == CENDA_OK);
    std::string s = take(text);
    cenda_pmat* back = nullptr;
    REQUIRE(cenda_pmat_parse(s.c_str(), &back) == CENDA_OK);
    char* again = nullptr;
    REQUIRE(cenda_pmat_print(back, &again) == CENDA_OK);
    CHECK(take(again) == s);
    cenda_pmat_free(m);
    cenda_pmat_free(back);
}

TEST_CASE("batch commands and the exit-code discipline") {
    const char* x_text = "N=1\n[1,1]: x\n";
    const char* texts[2] = {x_text, x_text};
    char* report = nullptr;

    CHECK(cenda_cmd_product(texts, 2, 1, 0, &report) == CENDA_OK);
    CHECK(take(report) == "x\n");

    CHECK(cenda_cmd_product(texts, 2, 5, 0, &report) == CENDA_OK);
    CHECK(take(report) == "0\n");

    // kv mode
    CHECK(cenda_cmd_product(texts, 2, 1, 1, &report) == CENDA_OK);
    CHECK(take(report) == "n=1\nsize=1\nentry.1.1=x\n");

    // checked-false: x is not idempotent
    CHECK(cenda_cmd_idem(x_text, 1, &report) == CENDA_CHECK_FAILED);
    CHECK(take(report) == "idempotent=false\n");

    // invalid input
    const char* bad[1] = {"N=1\n[1,1]: ?\n"};
    CHECK(cenda_cmd_product(bad, 1, 0, 0, &report) == CENDA_INVALID_INPUT);
    std::string msg = take(report);
    CHECK(msg.find("error") != std::string::npos);

    // identity sweep passes
    CHECK(cenda_cmd_check_random("conf-ass", 7, 5, 2, 2, 1, &report) == CENDA_OK);
    std::string ok_report = take(report);
    CHECK(ok_report.find("result=pass") != std::string::npos);

    // commutativity fails on a stream containing 1 and x
    CHECK(cenda_cmd_check_elems("commutativity", "N=1; [1,1]: x\nN=1; [1,1]: 1\n", 0, &report) ==
          CENDA_CHECK_FAILED);
    std::string fail_report = take(report);
    CHECK(fail_report.find("result: FAIL") != std::string::npos);

    CHECK(cenda_cmd_check_random("no-such-identity", 0, 1, 1, 1, 0, &report) == CENDA_INVALID_INPUT);
    cenda_string_free(report);

    // growth profile
    CHECK(cenda_cmd_gk_spec("curr 2", 4, 1, &report) == CENDA_OK);
    std::string gk = take(report);
    CHECK(gk.find("verdict=finite") != std::string::npos);

    // oracle sweep
    CHECK(cenda_cmd_oracle(42, 10, 2, 2, 1, &report) == CENDA_OK);
    CHECK(take(report).find("result=pass") != std::string::npos);
}

TEST_CASE("iso and snf through the C surface") {
    char* report = nullptr;
    CHECK(cenda_cmd_iso("rows=1;cols=1;[1,1]: y", "rows=1;cols=1;[1,1]: y + 3", 1, &report) == CENDA_OK);
    std::string s = take(report);
    CHECK(s.find("isomorphic=true") != std::string::npos);
    CHECK(s.find("alpha=-3") != std::string::npos);

    CHECK(cenda_cmd_iso("rows=1;cols=1;[1,1]: y", "rows=1;cols=1;[1,1]: y^2", 1, &report) == CENDA_CHECK_FAILED);
    CHECK(take(report).find("reason=degree-mismatch") != std::string::npos);

    // singular input is invalid
    CHECK(cenda_cmd_iso("rows=1;cols=1;[1,1]: 0", "rows=1;cols=1;[1,1]: y", 1, &report) == CENDA_INVALID_INPUT);
    cenda_string_free(report);

    CHECK(cenda_cmd_snf("rows=2;cols=2;[1,2]: 1;[2,1]: y^2", 1, &report) == CENDA_OK);
    CHECK(take(report).find("invariant_factors=1,y^2") != std::string::npos);

    CHECK(cenda_cmd_member("cendq 1 /nonexistent/q.pm", "N=1\n[1,1]: x\n", 1, &report) == CENDA_INVALID_INPUT);
    cenda_string_free(report);

    CHECK(cenda_cmd_unit("N=2\n[1,1]: 1\n[2,2]: 1\n", nullptr, 1, &report) == CENDA_OK);
    CHECK(take(report).find("unit=true") != std::string::npos);
}
