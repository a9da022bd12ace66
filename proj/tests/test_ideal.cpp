#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "basex/ideal.hpp"

using namespace basex;

namespace {

MultiGraph k4() {
    return MultiGraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

// Two doubled edges in series: path 0-1-2 with both edges doubled.
MultiGraph doubled_path() {
    return MultiGraph(3, {{0, 1}, {0, 1}, {1, 2}, {1, 2}});
}

// Formal expansion of a certificate's signed terms plus rhs; checks equality
// with lhs by exact multiset arithmetic, independent of verify_certificate.
std::map<BaseMonomial, long long> expand(const QuadricCertificate& cert) {
    std::map<BaseMonomial, long long> acc;
    acc[canon_monomial(cert.binomial.lhs)] += 1;
    acc[canon_monomial(cert.binomial.rhs)] -= 1;
    for (const CertTerm& t : cert.terms) {
        BaseMonomial m1 = t.cofactor, m2 = t.cofactor;
        m1.push_back(t.quadric.lhs[0]);
        m1.push_back(t.quadric.lhs[1]);
        m2.push_back(t.quadric.rhs[0]);
        m2.push_back(t.quadric.rhs[1]);
        acc[canon_monomial(m1)] -= t.sign;
        acc[canon_monomial(m2)] += t.sign;
    }
    return acc;
}

}  // namespace

TEST_CASE("theta counts edge occurrences") {
    MultiGraph g = k4();
    REQUIRE(theta(g, {{0, 1, 2}}) == std::vector<int>{1, 1, 1, 0, 0, 0});
    REQUIRE(theta(g, {}) == std::vector<int>(6, 0));
    REQUIRE(theta(g, {{0, 1, 2}, {3, 4, 5}}) == std::vector<int>(6, 1));
    REQUIRE_THROWS_AS(theta(g, {{0, 9}}), std::invalid_argument);
}

TEST_CASE("in_ideal compares exponents and enforces the contract") {
    MultiGraph g = k4();
    BaseMonomial star{{0, 1, 2}};
    REQUIRE(in_ideal(g, star, star));
    // One double swap: equal theta.
    REQUIRE(in_ideal(g, {{0, 3, 5}, {1, 2, 4}}, {{2, 3, 5}, {0, 1, 4}}));
    REQUIRE_FALSE(in_ideal(g, {{0, 1, 2}}, {{0, 1, 4}}));
    REQUIRE_THROWS_AS(in_ideal(g, {{0, 1, 2}}, {}), std::invalid_argument);
    REQUIRE_THROWS_AS(in_ideal(g, {{0, 1, 3}}, {{0, 1, 3}}), std::invalid_argument);
}

TEST_CASE("decompose_step telescopes degree-3 binomials") {
    MultiGraph g = doubled_path();
    BaseMonomial lhs = {{0, 2}, {0, 3}, {1, 2}};
    BaseMonomial rhs = {{0, 2}, {0, 2}, {1, 3}};
    REQUIRE(in_ideal(g, lhs, rhs));
    auto terms = decompose_step(g, lhs, rhs);
    REQUIRE_FALSE(terms.empty());
    // The signed sum of shared * (lhs' - rhs') formally equals lhs - rhs.
    std::map<BaseMonomial, long long> acc;
    acc[canon_monomial(lhs)] += 1;
    acc[canon_monomial(rhs)] -= 1;
    for (const DecomposeTerm& t : terms) {
        REQUIRE(t.lhs.size() == 2);
        REQUIRE(in_ideal(g, t.lhs, t.rhs));
        BaseMonomial a = t.lhs, b = t.rhs;
        a.push_back(t.shared);
        b.push_back(t.shared);
        acc[canon_monomial(a)] -= 1;
        acc[canon_monomial(b)] += 1;
    }
    for (auto& [mono, coeff] : acc) REQUIRE(coeff == 0);

    REQUIRE(decompose_step(g, lhs, lhs).empty());
    // Reordered equal multisets are the zero binomial.
    BaseMonomial reordered = {{1, 2}, {0, 3}, {0, 2}};
    REQUIRE(decompose_step(g, lhs, reordered).empty());
    REQUIRE_THROWS_AS(decompose_step(g, {{0, 2}, {1, 3}}, {{0, 3}, {1, 2}}),
                      std::invalid_argument);
}

TEST_CASE("decompose reports the exponent mismatch position") {
    MultiGraph g = doubled_path();
    try {
        decompose_to_quadrics(g, {{0, 2}, {0, 3}}, {{1, 2}, {1, 3}});
        FAIL("expected rejection");
    } catch (const std::invalid_argument& e) {
        REQUIRE(std::string(e.what()) == "binomial not in I_M (exponent mismatch at edge 0)");
    }
}

TEST_CASE("decompose_to_quadrics base cases") {
    MultiGraph g = k4();
    // Zero binomial: empty certificate.
    auto zero = decompose_to_quadrics(g, {{0, 3, 5}, {1, 2, 4}}, {{1, 2, 4}, {0, 3, 5}});
    REQUIRE(zero.terms.empty());
    REQUIRE(verify_certificate(g, zero).ok);

    // A pair one double swap apart: single term, empty cofactor.
    BaseMonomial lhs = {{0, 3, 5}, {1, 2, 4}};
    BaseMonomial rhs = {{2, 3, 5}, {0, 1, 4}};
    auto cert = decompose_to_quadrics(g, lhs, rhs);
    REQUIRE(cert.terms.size() == 1);
    REQUIRE(cert.terms[0].cofactor.empty());
    REQUIRE(verify_certificate(g, cert).ok);
}

TEST_CASE("decompose_to_quadrics round-trips on sampled degree-3 binomials") {
    std::vector<MultiGraph> graphs = {doubled_path(),
                                      MultiGraph(3, {{0, 1}, {0, 1}, {0, 2}, {1, 2}})};
    std::mt19937 rng(12345);
    for (const MultiGraph& g : graphs) {
        auto bases = enumerate_bases(g);
        std::map<std::vector<int>, std::vector<BaseMonomial>> fibers;
        for (size_t i = 0; i < bases.size(); ++i)
            for (size_t j = i; j < bases.size(); ++j)
                for (size_t l = j; l < bases.size(); ++l) {
                    BaseMonomial m = {bases[i], bases[j], bases[l]};
                    fibers[theta(g, m)].push_back(m);
                }
        for (auto& [expo, members] : fibers) {
            if (members.size() < 2) continue;
            for (int trial = 0; trial < 4; ++trial) {
                const BaseMonomial& lhs = members[rng() % members.size()];
                const BaseMonomial& rhs = members[rng() % members.size()];
                auto cert = decompose_to_quadrics(g, lhs, rhs);
                auto vr = verify_certificate(g, cert);
                INFO(vr.message);
                REQUIRE(vr.ok);
                for (auto& [mono, coeff] : expand(cert)) REQUIRE(coeff == 0);
                for (const CertTerm& t : cert.terms) {
                    auto cands = double_swap_candidates(g, t.quadric.lhs[0], t.quadric.lhs[1],
                                                        t.quadric.swap_out);
                    REQUIRE(base_contains(cands, t.quadric.swap_in));
                }
            }
        }
    }
}

TEST_CASE("verify_certificate rejects corrupted certificates") {
    MultiGraph g = k4();
    BaseMonomial lhs = {{0, 3, 5}, {1, 2, 4}};
    BaseMonomial rhs = {{2, 3, 5}, {0, 1, 4}};
    auto cert = decompose_to_quadrics(g, lhs, rhs);
    REQUIRE(verify_certificate(g, cert).ok);

    auto flipped = cert;
    flipped.terms[0].sign = -flipped.terms[0].sign;
    auto vr = verify_certificate(g, flipped);
    REQUIRE_FALSE(vr.ok);
    REQUIRE_FALSE(vr.message.empty());

    auto bad_swap = cert;
    bad_swap.terms[0].quadric.swap_out = bad_swap.terms[0].quadric.swap_in;
    REQUIRE_FALSE(verify_certificate(g, bad_swap).ok);

    auto bad_sign = cert;
    bad_sign.terms[0].sign = 2;
    REQUIRE_FALSE(verify_certificate(g, bad_sign).ok);

    auto bad_base = cert;
    bad_base.terms[0].quadric.lhs[0] = {0, 1, 3};  // triangle, not a base
    REQUIRE_FALSE(verify_certificate(g, bad_base).ok);
}
