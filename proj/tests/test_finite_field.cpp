#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "cyclift/fq.hpp"

using namespace cyclift;

namespace {

// exhaustive root search over F_p: the oracle behind the irreducibility
// examples for quadratic moduli
bool has_root_mod_p(const std::vector<std::uint32_t>& coeffs, std::uint32_t p) {
    for (std::uint32_t r = 0; r < p; ++r) {
        std::uint64_t acc = 0, pw = 1;
        for (std::uint32_t c : coeffs) {
            acc = (acc + c * pw) % p;
            pw = (pw * r) % p;
        }
        if (acc == 0) return true;
    }
    return false;
}

FqElem random_elem(const Field& f, std::mt19937_64& rng) {
    return f->element_at(rng() % f->q());
}

} // namespace

TEST_CASE("field construction and modulus search", "[fq]") {
    Field f3 = make_field(3, 1);
    CHECK(f3->serialize() == "3^1:0,1"); // modulus x
    CHECK(f3->q() == 3);

    Field f9 = make_field(3, 2, std::vector<std::uint32_t>{1, 0, 1});
    CHECK(f9->q() == 9);
    CHECK(f9->serialize() == "3^2:1,0,1");
    // oracle: x^2+1 has no root mod 3, x^2+2 does
    CHECK_FALSE(has_root_mod_p({1, 0, 1}, 3));
    CHECK(has_root_mod_p({2, 0, 1}, 3));
    CHECK_THROWS_MATCHES(make_field(3, 2, std::vector<std::uint32_t>{2, 0, 1}), error,
                         Catch::Matchers::Predicate<error>([](const error& e) {
                             return e.code() == errc::reducible_modulus;
                         }));

    // the search must return the lexicographically smallest irreducible
    Field f9_auto = make_field(3, 2);
    CHECK(f9_auto->modulus() == std::vector<std::uint32_t>{1, 0, 1});

    CHECK_THROWS_MATCHES(make_field(4, 1), error, Catch::Matchers::Predicate<error>([](const error& e) {
                             return e.code() == errc::non_prime_p;
                         }));
    CHECK_THROWS_MATCHES(make_field(2, 21), error, Catch::Matchers::Predicate<error>([](const error& e) {
                             return e.code() == errc::size_overflow;
                         }));
}

TEST_CASE("arithmetic in small fields", "[fq]") {
    Field f9 = make_field(3, 2, std::vector<std::uint32_t>{1, 0, 1});
    FqElem g = f9->gen();
    CHECK(g * g == f9->from_int(2)); // g^2 = -1 = 2

    Field f5 = make_field(5, 1);
    CHECK(f5->from_int(3) / f5->from_int(2) == f5->from_int(4)); // 2*4 = 8 = 3 mod 5

    std::mt19937_64 rng(7);
    for (int i = 0; i < 50; ++i) {
        FqElem a = random_elem(f9, rng);
        CHECK(a + f9->zero() == a);
        FqElem b = random_elem(f9, rng), c = random_elem(f9, rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!b.is_zero()) CHECK((a / b) * b == a);
        if (!a.is_zero()) CHECK(a * a.inv() == f9->one());
    }

    Field f3 = make_field(3, 1);
    CHECK_THROWS_MATCHES(f3->one() + f5->one(), error, Catch::Matchers::Predicate<error>([](const error& e) {
                             return e.code() == errc::field_mismatch;
                         }));
    CHECK_THROWS_MATCHES(f5->one() / f5->zero(), error, Catch::Matchers::Predicate<error>([](const error& e) {
                             return e.code() == errc::division_by_zero;
                         }));
}

TEST_CASE("frobenius", "[fq]") {
    Field f9 = make_field(3, 2, std::vector<std::uint32_t>{1, 0, 1});
    FqElem g = f9->gen();
    // g^3 = g * g^2 = 2g
    CHECK(g.frobenius() == g.mul_int(2));

    for (long long c = 0; c < 3; ++c)
        CHECK(f9->from_int(c).frobenius() == f9->from_int(c));

    std::mt19937_64 rng(11);
    for (int i = 0; i < 50; ++i) {
        FqElem a = random_elem(f9, rng), b = random_elem(f9, rng);
        CHECK(a.frobenius().frobenius() == a);
        CHECK((a + b).frobenius() == a.frobenius() + b.frobenius());
        CHECK((a * b).frobenius() == a.frobenius() * b.frobenius());
        CHECK(a.frobenius_inv().frobenius() == a);
    }
}

TEST_CASE("roots of unity", "[fq]") {
    Field f5 = make_field(5, 1);
    CHECK(primitive_root_of_unity(f5, 4) == f5->from_int(2));
    CHECK(primitive_root_of_unity(f5, 1) == f5->one());

    Field f7 = make_field(7, 1);
    CHECK_THROWS_MATCHES(primitive_root_of_unity(f7, 4), error,
                         Catch::Matchers::Predicate<error>([](const error& e) {
                             return e.code() == errc::order_not_dividing;
                         }));

    Field f25 = make_field(5, 2); // q-1 = 24
    for (std::uint64_t N : {2, 3, 4, 6, 12, 24}) {
        FqElem zeta = primitive_root_of_unity(f25, N);
        CHECK(zeta.pow(N) == f25->one());
        for (std::uint64_t k = 1; k < N; ++k) CHECK(zeta.pow(k) != f25->one());
    }

    CHECK(roots_of_unity(f5, 2) == std::vector<FqElem>{f5->from_int(1), f5->from_int(4)});
}

TEST_CASE("mu-th power test in the unit group", "[fq]") {
    Field f5 = make_field(5, 1);
    auto r = mu_power_test_unit(f5->from_int(4), 2);
    REQUIRE(r.has_value());
    CHECK(*r == f5->from_int(2)); // smallest of {2, 3}
    CHECK_FALSE(mu_power_test_unit(f5->from_int(2), 2).has_value()); // squares mod 5 are {1,4}
    CHECK(*mu_power_test_unit(f5->one(), 17) == f5->one());
    CHECK_THROWS_MATCHES(mu_power_test_unit(f5->zero(), 2), error,
                         Catch::Matchers::Predicate<error>([](const error& e) {
                             return e.code() == errc::zero_input;
                         }));

    // exhaustive cross-check against brute-force search for q <= 121
    for (auto [p, n] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
             {5, 1}, {7, 1}, {3, 2}, {2, 3}, {11, 2}}) {
        Field f = make_field(p, n);
        for (std::uint64_t mu = 1; mu <= 6; ++mu) {
            for (std::uint64_t idx = 1; idx < f->q(); ++idx) {
                FqElem c = f->element_at(idx);
                bool brute = false;
                for (std::uint64_t j = 1; j < f->q() && !brute; ++j)
                    brute = f->element_at(j).pow(mu) == c;
                auto root = mu_power_test_unit(c, mu);
                CHECK(root.has_value() == brute);
                if (root) CHECK(root->pow(mu) == c);
            }
        }
    }
}
