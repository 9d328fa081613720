#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "cyclift/witt.hpp"

using namespace cyclift;

namespace {

WittElem w(const Field& f, long long a0, long long a1) {
    return WittElem(f->from_int(a0), f->from_int(a1));
}

WittElem random_witt(const Field& f, std::mt19937_64& rng) {
    return WittElem(f->element_at(rng() % f->q()), f->element_at(rng() % f->q()));
}

} // namespace

TEST_CASE("Witt coordinate laws against the Z/p^2 oracle", "[witt]") {
    // iso_zp2 must be a bijective ring homomorphism; exhaustive over all
    // operand pairs for small primes (the acceptance suite redoes 2,3,5,7).
    for (std::uint32_t p : {2u, 3u}) {
        Field f = make_field(p, 1);
        const std::uint64_t p2 = static_cast<std::uint64_t>(p) * p;
        std::vector<bool> seen(p2, false);
        for (std::uint64_t i = 0; i < p2; ++i) {
            WittElem x = w(f, static_cast<long long>(i % p), static_cast<long long>(i / p));
            std::uint64_t phi = iso_zp2(x);
            CHECK_FALSE(seen[phi]);
            seen[phi] = true;
            for (std::uint64_t j = 0; j < p2; ++j) {
                WittElem y = w(f, static_cast<long long>(j % p), static_cast<long long>(j / p));
                CHECK(iso_zp2(x + y) == (iso_zp2(x) + iso_zp2(y)) % p2);
                CHECK(iso_zp2(x * y) == (iso_zp2(x) * iso_zp2(y)) % p2);
            }
        }
    }
}

TEST_CASE("Witt arithmetic worked values", "[witt]") {
    Field f3 = make_field(3, 1);
    CHECK(w(f3, 1, 0) + w(f3, 1, 0) == w(f3, 2, 1));
    CHECK(w(f3, 2, 0) + w(f3, 2, 0) == w(f3, 1, 2));
    CHECK(w(f3, 2, 0) * w(f3, 2, 0) == w(f3, 1, 0));
    CHECK(w(f3, 0, 1) * w(f3, 0, 1) == w(f3, 0, 0)); // p*p = 0
    CHECK(w(f3, 1, 1).inv() == w(f3, 1, 2));
    CHECK(w(f3, 1, 1) * w(f3, 1, 2) == w(f3, 1, 0));
    CHECK_THROWS_MATCHES(w(f3, 0, 1).inv(), error, Catch::Matchers::Predicate<error>([](const error& e) {
                             return e.code() == errc::non_unit;
                         }));

    // iso_zp2 worked values
    CHECK(iso_zp2(w(f3, 1, 0)) == 1);
    CHECK(iso_zp2(w(f3, 2, 1)) == 2); // 8 + 3 = 11 = 2 mod 9
    CHECK(iso_zp2(w(f3, 0, 2)) == 6);
    Field f9 = make_field(3, 2);
    CHECK_THROWS_MATCHES(iso_zp2(WittElem(f9->one(), f9->zero())), error,
                         Catch::Matchers::Predicate<error>([](const error& e) {
                             return e.code() == errc::not_prime_field;
                         }));
}

TEST_CASE("reduction, Teichmueller section and times_p", "[witt]") {
    Field f3 = make_field(3, 1);
    CHECK(times_p(f3->zero()) == w(f3, 0, 0));
    CHECK(times_p(f3->from_int(2)) == w(f3, 0, 2)); // 2^3 = 8 = 2 mod 3

    Field f9 = make_field(3, 2);
    std::mt19937_64 rng(23);
    for (int i = 0; i < 40; ++i) {
        FqElem a = f9->element_at(rng() % 9), b = f9->element_at(rng() % 9);
        CHECK(w_reduce(teichmuller(a)) == a);
        CHECK(teichmuller(a) * teichmuller(b) == teichmuller(a * b));
        WittElem x = random_witt(f9, rng), y = random_witt(f9, rng);
        CHECK(w_reduce(x + y) == w_reduce(x) + w_reduce(y));
        CHECK(w_reduce(x * y) == w_reduce(x) * w_reduce(y));

        // p-fold sum of any lift of a equals times_p(a), whatever the lift
        WittElem lift(a, b);
        WittElem sum = w_zero(f9);
        for (std::uint32_t k = 0; k < f9->p(); ++k) sum = sum + lift;
        CHECK(sum == times_p(a));

        // the kernel of reduction is exactly the image of times_p
        CHECK(w_reduce(times_p(a)).is_zero());
        if (x.a0().is_zero()) CHECK(x == times_p(x.a1().frobenius_inv()));
    }
}

TEST_CASE("ring axioms on random samples", "[witt]") {
    for (auto [p, n] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 1}, {3, 2}, {5, 1}, {7, 1}}) {
        Field f = make_field(p, n);
        std::mt19937_64 rng(100 + p + n);
        for (int i = 0; i < 30; ++i) {
            WittElem x = random_witt(f, rng), y = random_witt(f, rng), z = random_witt(f, rng);
            CHECK((x + y) + z == x + (y + z));
            CHECK(x + y == y + x);
            CHECK(x + w_zero(f) == x);
            CHECK(x - x == w_zero(f));
            CHECK((x * y) * z == x * (y * z));
            CHECK(x * y == y * x);
            CHECK(x * w_one(f) == x);
            CHECK(x * (y + z) == x * y + x * z);
            CHECK((x.is_unit()) == !w_reduce(x).is_zero());
            if (x.is_unit()) {
                CHECK(x * x.inv() == w_one(f));
                CHECK(x.inv().inv() == x);
            }
        }
    }
}

TEST_CASE("principal unit roots", "[witt]") {
    Field f3 = make_field(3, 1);
    CHECK(principal_unit_root(w(f3, 1, 2), 1) == w(f3, 1, 2));
    CHECK(principal_unit_root(w(f3, 1, 1), 2) == w(f3, 1, 2));
    CHECK(w(f3, 1, 2).pow(2) == w(f3, 1, 1));
    CHECK_THROWS_MATCHES(principal_unit_root(w(f3, 1, 1), 3), error,
                         Catch::Matchers::Predicate<error>([](const error& e) {
                             return e.code() == errc::mu_divisible_by_p;
                         }));
    CHECK_THROWS_MATCHES(principal_unit_root(w(f3, 2, 0), 2), error,
                         Catch::Matchers::Predicate<error>([](const error& e) {
                             return e.code() == errc::not_principal_unit;
                         }));

    for (auto [p, n] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{3, 1}, {3, 2}, {5, 1}, {7, 2}}) {
        Field f = make_field(p, n);
        std::mt19937_64 rng(55 + p);
        for (std::uint64_t mu = 1; mu < 20; ++mu) {
            if (mu % p == 0) continue;
            WittElem u(f->one(), f->element_at(rng() % f->q()));
            WittElem v = principal_unit_root(u, mu);
            CHECK(v.pow(mu) == u);
            CHECK(w_reduce(v) == f->one());
        }
    }
}
