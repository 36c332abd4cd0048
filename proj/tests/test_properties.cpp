#include "properties.hpp"

#include <doctest.h>

using namespace kisinlab;

namespace {

void require_ok(const testkit::PropertyResult& r) {
    INFO(r.name << ": " << r.failures << "/" << r.cases << " failed; first: " << r.first_failure);
    CHECK(r.ok());
}

constexpr std::size_t kCases = 1000;

}  // namespace

TEST_SUITE("properties") {

TEST_CASE("field axioms") { require_ok(testkit::field_axioms(kCases, 101)); }
TEST_CASE("series ring axioms") { require_ok(testkit::ring_axioms(kCases, 102)); }
TEST_CASE("precision soundness") { require_ok(testkit::precision_soundness(kCases, 103)); }
TEST_CASE("phi is a ring homomorphism") { require_ok(testkit::frobenius_homomorphism(kCases, 104)); }
TEST_CASE("valuation additivity") { require_ok(testkit::valuation_additivity(kCases, 105)); }
TEST_CASE("series inverse") { require_ok(testkit::series_inverse(kCases, 106)); }
TEST_CASE("adjugate identity") { require_ok(testkit::adjugate_identity(kCases, 107)); }
TEST_CASE("Iwasawa round trip") { require_ok(testkit::iwasawa_round_trip(kCases, 108)); }
TEST_CASE("same_lattice is an equivalence") { require_ok(testkit::same_lattice_equivalence(kCases, 109)); }
TEST_CASE("change_basis composes") { require_ok(testkit::change_basis_composition(kCases, 110)); }

}
