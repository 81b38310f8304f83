#include <doctest.h>

#include <algorithm>

#include "genseq/core.hpp"
#include "genseq/identities.hpp"

using namespace genseq;

namespace {

const IdentityGrid kSmallGrid{3, 3, 2, 2, 14, 5};

}  // namespace

TEST_SUITE("identities") {

TEST_CASE("registry holds the full set") {
    const auto& registry = identity_registry();
    CHECK(registry.size() >= 21);
    for (const char* id :
         {"ID-LREC", "ID-BLACK", "ID-SUM-K", "ID-SUM-K1", "ID-SUM-I", "ID-SUM-I2",
          "ID-FOURTERM", "ID-CENTRAL", "ID-LSTEP", "ID-2R2", "ID-LAST-I", "ID-SHIFT-IK",
          "ID-SHIFT-MK", "ID-TWOK", "ID-TWOK2", "ID-BREAK", "ID-L-TAIL1", "ID-L-TAIL2",
          "ID-L-TAIL3", "ID-L-MOD", "ID-L-I1"}) {
        CAPTURE(id);
        CHECK(find_identity(id) != nullptr);
    }
    CHECK(find_identity("ID-BREAK")->aux_names == std::vector<std::string>{"m"});
    CHECK(find_identity("ID-NOPE") == nullptr);
}

TEST_CASE("applicability mirrors the stated hypotheses") {
    // The k = 2i identity fixes s = 1.
    CHECK_FALSE(find_identity("ID-2R2")->applicable({{1, 2, 1, 2}, 4, {}}));
    CHECK(find_identity("ID-2R2")->applicable({{1, 2, 1, 1}, 4, {}}));
    CHECK_FALSE(find_identity("ID-2R2")->applicable({{1, 3, 1, 1}, 4, {}}));
    // Lucas identities need k > i.
    CHECK_FALSE(find_identity("ID-LREC")->applicable({{2, 2, 1, 1}, 20, {}}));
    CHECK_THROWS_AS(check_identity("ID-2R2", {1, 2, 1, 2}, {}, 4), InapplicableBinding);
    CHECK_THROWS_AS(check_identity("ID-NOPE", {1, 2, 1, 1}, {}, 4), std::invalid_argument);
}

TEST_CASE("pinned single checks") {
    IdentityCheck c = check_identity("ID-2R2", {1, 2, 1, 1}, {}, 4);
    CHECK(c.lhs == 24);
    CHECK(c.rhs == 24);
    CHECK(c.pass);

    c = check_identity("ID-BREAK", {1, 2, 1, 1}, {{"m", 3}}, 2);
    CHECK(c.lhs == 13);
    CHECK(c.rhs == 13);
    CHECK(c.pass);

    c = check_identity("ID-SUM-K", {2, 3, 1, 1}, {}, 2);
    CHECK(c.lhs == 7);
    CHECK(c.pass);
}

TEST_CASE("the l = 1 expansion is literally the recurrence") {
    for (long i = 1; i <= 3; ++i) {
        for (long k = 1; k <= 3; ++k) {
            Params p{i, k, 2, 3};
            SeqCache cache(p);
            for (long n = std::max(i, k) - 1; n <= 12; ++n) {
                IdentityCheck c = check_identity("ID-LSTEP", p, {{"l", 1}}, n);
                CHECK(c.pass);
                CHECK(c.rhs == p.r * cache.f(n - i) + p.s * cache.f(n - k));
            }
        }
    }
}

TEST_CASE("verify_grid sweeps and skips") {
    VerificationReport rep = verify_identity_grid("ID-FOURTERM", {3, 3, 2, 2, 20, 5});
    CHECK(rep.failed() == 0);
    CHECK(rep.checked() > 0);
    CHECK(rep.checked() == rep.passed() + rep.failed());

    // A grid violating every hypothesis checks nothing: the i >= 2 family
    // on an i <= 1 grid.
    VerificationReport none = verify_identity_grid("ID-L-MOD", {1, 4, 2, 2, 20, 5});
    CHECK(none.checked() == 0);
}

TEST_CASE("verify_all is clean on a reduced grid") {
    VerificationReport rep = verify_all(kSmallGrid);
    CHECK(rep.identities.size() == identity_registry().size());
    CHECK(rep.failed() == 0);
    // Deterministic ordering and per-identity consistency.
    for (std::size_t idx = 0; idx < rep.identities.size(); ++idx) {
        CHECK(rep.identities[idx].id == identity_registry()[idx].id);
        CHECK(rep.identities[idx].checked ==
              rep.identities[idx].passed + rep.identities[idx].failed);
    }
}

TEST_CASE("alternative readings fail where the adopted ones verify") {
    // The ni+k+1 sum: the u-case correction undercounts whenever r >= 2.
    IdentityReport u_diag = diagnose_sum_k1_u_reading(kSmallGrid);
    CHECK(u_diag.failed > 0);
    CHECK(verify_identity_grid("ID-SUM-K1", kSmallGrid).failed() == 0);

    // The two L expansions: the displayed correction terms drop the tail
    // colorings and fail as soon as r or s exceeds 1.
    CHECK(diagnose_l_mod_literal_reading({4, 4, 2, 2, 24, 5}).failed > 0);
    CHECK(diagnose_l_i1_literal_reading(kSmallGrid).failed > 0);
    CHECK(verify_identity_grid("ID-L-MOD", {4, 4, 2, 2, 24, 5}).failed() == 0);
    CHECK(verify_identity_grid("ID-L-I1", kSmallGrid).failed() == 0);
}

TEST_CASE("counterexample lists are capped") {
    IdentityReport u_diag = diagnose_sum_k1_u_reading({4, 4, 3, 3, 24, 5});
    CHECK(u_diag.failed > 16);
    CHECK(u_diag.counterexamples.size() == 16);
}

TEST_CASE("corollary consequences hold through the named sequences") {
    for (const CorollaryReport& rep : verify_corollaries(30, 30)) {
        CAPTURE(rep.name);
        CHECK(rep.checked > 0);
        CHECK(rep.failed == 0);
    }
}

}  // TEST_SUITE
