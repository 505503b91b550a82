#include "eccir/numtheory.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace eccir::nt {

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    if (m == 1) return 0;
    std::uint64_t result = 1;
    base %= m;
    while (exp) {
        if (exp & 1) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t m) {
    __int128 old_r = static_cast<__int128>(a % m), r = m;
    __int128 old_s = 1, s = 0;
    while (r != 0) {
        const __int128 quot = old_r / r;
        std::swap(old_r, r);
        r -= quot * old_r;
        std::swap(old_s, s);
        s -= quot * old_s;
    }
    if (old_r != 1) throw std::domain_error("invmod: " + std::to_string(a) + " is not a unit modulo " + std::to_string(m));
    __int128 x = old_s % static_cast<__int128>(m);
    if (x < 0) x += m;
    return static_cast<std::uint64_t>(x);
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

namespace {

std::uint64_t pollard_rho(std::uint64_t n) {
    if (n % 2 == 0) return 2;
    for (std::uint64_t c = 1;; ++c) {
        auto f = [&](std::uint64_t x) { return (mulmod(x, x, n) + c) % n; };
        std::uint64_t x = 2, y = 2, d = 1;
        while (d == 1) {
            x = f(x);
            y = f(f(y));
            d = std::gcd(x > y ? x - y : y - x, n);
        }
        if (d != n) return d;
    }
}

void factor_into(std::uint64_t n, std::vector<std::uint64_t>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    for (std::uint64_t p = 2; p < 1000; ++p) {
        if (n % p == 0) {
            out.push_back(p);
            factor_into(n / p, out);
            return;
        }
    }
    const std::uint64_t d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
    std::vector<std::uint64_t> primes;
    factor_into(n, primes);
    std::sort(primes.begin(), primes.end());
    std::vector<std::pair<std::uint64_t, unsigned>> result;
    for (std::uint64_t p : primes) {
        if (!result.empty() && result.back().first == p)
            ++result.back().second;
        else
            result.emplace_back(p, 1u);
    }
    return result;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
    std::vector<std::uint64_t> result{1};
    for (auto [p, e] : factorize(n)) {
        const std::size_t count = result.size();
        std::uint64_t pk = 1;
        for (unsigned i = 0; i < e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < count; ++j) result.push_back(result[j] * pk);
        }
    }
    std::sort(result.begin(), result.end());
    return result;
}

std::uint64_t multiplicative_order(std::uint64_t q, std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("multiplicative_order: modulus must be positive");
    if (n == 1) return 1;
    if (std::gcd(q % n, n) != 1) throw std::domain_error("multiplicative_order: gcd(q, n) != 1");
    // ord divides phi(n); walk the divisors of phi(n) in ascending order.
    std::uint64_t phi = n;
    for (auto [p, e] : factorize(n)) phi = phi / p * (p - 1);
    for (std::uint64_t d : divisors(phi)) {
        if (powmod(q, d, n) == 1) return d;
    }
    throw std::logic_error("multiplicative_order: no divisor of phi(n) works");
}

std::uint64_t checked_pow(std::uint64_t p, unsigned m) {
    unsigned __int128 acc = 1;
    for (unsigned i = 0; i < m; ++i) {
        acc *= p;
        if (acc > (static_cast<unsigned __int128>(1) << 63))
            throw std::overflow_error("checked_pow: " + std::to_string(p) + "^" + std::to_string(m) + " exceeds 2^63");
    }
    return static_cast<std::uint64_t>(acc);
}

std::pair<std::uint64_t, unsigned> prime_power(std::uint64_t q) {
    if (q < 2) throw std::invalid_argument("prime_power: q must be at least 2");
    auto f = factorize(q);
    if (f.size() != 1) throw std::invalid_argument("prime_power: " + std::to_string(q) + " is not a prime power");
    return f.front();
}

}  // namespace eccir::nt
