#include "doctest.h"

#include "eccir/gf.hpp"
#include "eccir/numtheory.hpp"

#include <stdexcept>
#include <vector>

using namespace eccir;
using Poly = std::vector<std::uint64_t>;  // low degree first

namespace {

// Schoolbook polynomial arithmetic over F_p, used as the reference.
Poly trim(Poly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

Poly pmod(Poly a, const Poly& m, std::uint64_t p) {
    a = trim(a);
    const Poly mm = trim(m);
    const std::uint64_t lead_inv = nt::invmod(mm.back(), p);
    while (a.size() >= mm.size()) {
        const std::uint64_t f = a.back() * lead_inv % p;
        const std::size_t shift = a.size() - mm.size();
        for (std::size_t i = 0; i < mm.size(); ++i) a[shift + i] = (a[shift + i] + p * p - f * mm[i] % p) % p;
        a = trim(a);
    }
    return a;
}

Poly pmul(const Poly& a, const Poly& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return trim(r);
}

// Irreducible iff no monic factor of degree 1 .. m/2.
bool irreducible_by_trial_division(const Poly& f, std::uint64_t p) {
    const std::size_t m = f.size() - 1;
    for (std::size_t d = 1; d <= m / 2; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t t = 0; t < count; ++t) {
            Poly g(d + 1, 0);
            std::uint64_t r = t;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = r % p;
                r /= p;
            }
            g[d] = 1;
            if (pmod(f, g, p).empty()) return false;
        }
    }
    return true;
}

Poly digits(std::uint64_t a, std::uint64_t p, unsigned m) {
    Poly d(m, 0);
    for (unsigned i = 0; i < m; ++i) {
        d[i] = a % p;
        a /= p;
    }
    return trim(d);
}

std::uint64_t from_digits(const Poly& d, std::uint64_t p) {
    std::uint64_t v = 0;
    for (std::size_t i = d.size(); i-- > 0;) v = v * p + d[i];
    return v;
}

// Lexicographically smallest monic irreducible, coefficients compared c_0 first.
Poly smallest_irreducible(std::uint64_t p, unsigned m) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < m; ++i) count *= p;
    Poly best;
    for (std::uint64_t t = 0; t < count; ++t) {
        Poly f(m + 1, 0);
        std::uint64_t r = t;
        for (unsigned i = 0; i < m; ++i) {
            f[i] = r % p;
            r /= p;
        }
        f[m] = 1;
        if (!irreducible_by_trial_division(f, p)) continue;
        if (best.empty() || std::lexicographical_compare(f.begin(), f.end(), best.begin(), best.end())) best = f;
    }
    return best;
}

}  // namespace

TEST_CASE("number theory helpers") {
    CHECK(nt::gcd(12, 18) == 6);
    CHECK(nt::powmod(3, 200, 1000003) == nt::mulmod(nt::powmod(3, 100, 1000003), nt::powmod(3, 100, 1000003), 1000003));
    CHECK(nt::invmod(5, 31) * 5 % 31 == 1);
    CHECK_THROWS_AS(nt::invmod(6, 9), std::domain_error);
    for (std::uint64_t n = 0; n < 2000; ++n) {
        bool prime = n >= 2;
        for (std::uint64_t d = 2; d * d <= n && prime; ++d) prime = n % d != 0;
        CHECK(nt::is_prime(n) == prime);
    }
    CHECK(nt::is_prime(2305843009213693951ULL));  // 2^61 - 1
    const auto f = nt::factorize((1ULL << 36) - 1);
    std::uint64_t prod = 1;
    for (auto [p, e] : f)
        for (unsigned i = 0; i < e; ++i) prod *= p;
    CHECK(prod == (1ULL << 36) - 1);
    CHECK(nt::multiplicative_order(2, 31) == 5);
    CHECK(nt::multiplicative_order(2, 109) == 36);
    CHECK(nt::divisors(12) == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12});
    CHECK(nt::prime_power(243) == std::pair<std::uint64_t, unsigned>{3, 5});
    CHECK_THROWS_AS(nt::prime_power(12), std::invalid_argument);
    CHECK_THROWS_AS(nt::checked_pow(2, 64), std::overflow_error);
}

TEST_CASE("modulus is the lexicographically smallest irreducible") {
    const std::pair<std::uint64_t, unsigned> cases[] = {{2, 1}, {2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {2, 8},
                                                        {3, 1}, {3, 2}, {3, 3}, {5, 2}, {7, 2}, {11, 1}};
    for (auto [p, m] : cases) {
        CAPTURE(p);
        CAPTURE(m);
        const auto f = gf::field_create(p, m);
        if (m == 1) {
            CHECK(f->modulus() == Poly{0, 1});
        } else {
            CHECK(f->modulus() == smallest_irreducible(p, m));
        }
        CHECK(gf::is_irreducible(p, f->modulus()));
    }
}

TEST_CASE("Rabin test agrees with trial division") {
    for (std::uint64_t p : {2u, 3u}) {
        for (unsigned m = 1; m <= (p == 2 ? 8u : 5u); ++m) {
            std::uint64_t count = 1;
            for (unsigned i = 0; i < m; ++i) count *= p;
            for (std::uint64_t t = 0; t < count; ++t) {
                Poly f(m + 1, 0);
                std::uint64_t r = t;
                for (unsigned i = 0; i < m; ++i) {
                    f[i] = r % p;
                    r /= p;
                }
                f[m] = 1;
                CAPTURE(f);
                CHECK(gf::is_irreducible(p, f) == irreducible_by_trial_division(f, p));
            }
        }
    }
}

TEST_CASE("field arithmetic matches polynomial arithmetic mod the modulus") {
    const std::pair<std::uint64_t, unsigned> cases[] = {{2, 3}, {2, 4}, {2, 6}, {3, 2}, {3, 3}, {5, 2}, {7, 1}, {11, 1}};
    for (auto [p, m] : cases) {
        CAPTURE(p);
        CAPTURE(m);
        const auto f = gf::field_create(p, m);
        const std::uint64_t q = f->order();
        for (std::uint64_t a = 0; a < q; ++a) {
            for (std::uint64_t b = 0; b < q; ++b) {
                const Poly pa = digits(a, p, m), pb = digits(b, p, m);
                const std::uint64_t prod = from_digits(pmod(pmul(pa, pb, p), f->modulus(), p), p);
                REQUIRE(f->mul(a, b) == prod);
                Poly sum(m, 0);
                const Poly da = digits(a, p, m), db = digits(b, p, m);
                for (unsigned i = 0; i < m; ++i) sum[i] = ((i < da.size() ? da[i] : 0) + (i < db.size() ? db[i] : 0)) % p;
                REQUIRE(f->add(a, b) == from_digits(trim(sum), p));
                REQUIRE(f->sub(f->add(a, b), b) == a);
            }
            if (a != 0) REQUIRE(f->mul(a, f->inv(a)) == 1);
        }
        CHECK_THROWS(f->inv(0));
    }
}

TEST_CASE("primitive element is the smallest of full order") {
    for (std::uint64_t q : {4u, 8u, 9u, 16u, 25u, 27u, 64u, 11u, 13u}) {
        const auto f = gf::field_of_order(q);
        std::uint64_t smallest = 0;
        for (std::uint64_t g = 1; g < q && !smallest; ++g) {
            std::uint64_t x = g, order = 1;
            while (x != 1) {
                x = f->mul(x, g);
                ++order;
            }
            if (order == q - 1) smallest = g;
        }
        CHECK(f->primitive() == smallest);
        CHECK(f->element_order(f->primitive()) == q - 1);
    }
}

TEST_CASE("binary fields of large degree") {
    const auto f = gf::field_create(2, 36);
    const gf::Elem a = 0x123456789ULL, b = 0xfedcba987ULL;
    CHECK(f->mul(a, f->inv(a)) == 1);
    CHECK(f->mul(a, b) == f->mul(b, a));
    CHECK(f->pow(f->primitive(), f->order() - 1) == 1);
    CHECK(f->pow(a, f->order()) == a);
    CHECK_THROWS_AS(gf::field_create(2, 64), std::invalid_argument);
    CHECK_THROWS_AS(gf::field_create(4, 2), std::invalid_argument);
}

TEST_CASE("roots of unity") {
    for (auto [n, q] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{{31, 2}, {9, 2}, {23, 2}, {13, 3}, {11, 5}}) {
        const auto r = gf::nth_root_of_unity(n, q);
        CHECK(r.field->element_order(r.alpha) == n);
        CHECK(r.extension == nt::multiplicative_order(q % n, n));
    }
    CHECK_THROWS_AS(gf::nth_root_of_unity(10, 2), std::domain_error);
}

TEST_CASE("field elements refuse mixed fields") {
    const auto f8 = gf::field_create(2, 3), f16 = gf::field_create(2, 4);
    gf::FieldElement a(f8, 3), b(f16, 3);
    CHECK_THROWS_AS(a * b, std::invalid_argument);
    CHECK_THROWS_AS(gf::FieldElement(f8, 8), std::invalid_argument);
    CHECK((a * a.inv()).value() == 1);
    CHECK(((a + a)).is_zero());
    CHECK(gf::primitive_element(f8).pow(7).value() == 1);
}
