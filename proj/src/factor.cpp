#include "cuboid/factor.hpp"

#include <cstdlib>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cuboid/error.hpp"

namespace cuboid {

namespace {

constexpr int kPrimalityReps = 30;
constexpr std::size_t kPrimesPerBlock = 512;

/// Primes up to a bound plus products of consecutive blocks of them, so a
/// large cofactor can be screened with one gcd per block.
struct PrimeTable {
  std::vector<unsigned long> primes;
  std::vector<Integer> block_products;
};

std::shared_ptr<const PrimeTable> build_table(std::uint64_t bound) {
  auto table = std::make_shared<PrimeTable>();
  std::vector<bool> composite(bound + 1, false);
  for (std::uint64_t i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    table->primes.push_back(static_cast<unsigned long>(i));
    for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
  }
  for (std::size_t start = 0; start < table->primes.size(); start += kPrimesPerBlock) {
    Integer product = 1;
    const std::size_t end = std::min(start + kPrimesPerBlock, table->primes.size());
    for (std::size_t i = start; i < end; ++i) product *= table->primes[i];
    table->block_products.push_back(std::move(product));
  }
  return table;
}

std::shared_ptr<const PrimeTable> prime_table(std::uint64_t bound) {
  static std::mutex mutex;
  static std::map<std::uint64_t, std::shared_ptr<const PrimeTable>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[bound];
  if (!slot) slot = build_table(bound);
  return slot;
}

/// Divides every prime <= bound out of `n`, recording exponents.
void trial_divide(Integer& n, const PrimeTable& table, std::map<Integer, unsigned>& out) {
  Integer g;
  for (std::size_t block = 0; block < table.block_products.size() && n != 1; ++block) {
    mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), table.block_products[block].get_mpz_t());
    if (g == 1) continue;
    const std::size_t start = block * kPrimesPerBlock;
    const std::size_t end = std::min(start + kPrimesPerBlock, table.primes.size());
    for (std::size_t i = start; i < end; ++i) {
      const unsigned long p = table.primes[i];
      if (mpz_divisible_ui_p(g.get_mpz_t(), p) == 0) continue;
      unsigned e = 0;
      while (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) {
        mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
        ++e;
      }
      out[Integer(p)] += e;
    }
  }
}

/// Brent's cycle-finding variant of Pollard rho. Returns a nontrivial factor
/// of the odd composite `n`, or nothing once `budget` runs out.
std::optional<Integer> pollard_brent(const Integer& n, std::uint64_t& budget) {
  std::mt19937_64 rng(mpz_get_ui(n.get_mpz_t()) ^ 0x9e3779b97f4a7c15ULL);
  constexpr std::uint64_t kBatch = 128;

  while (budget > 0) {
    Integer y = Integer(static_cast<unsigned long>(rng() >> 2)) % n;
    const Integer c = Integer(static_cast<unsigned long>(rng() >> 2)) % (n - 1) + 1;
    Integer x, ys, q = 1, g = 1;
    std::uint64_t r = 1;

    auto step = [&](Integer& v) {
      v = v * v + c;
      mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    };

    while (g == 1 && budget > 0) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) step(y);
      std::uint64_t k = 0;
      while (k < r && g == 1 && budget > 0) {
        ys = y;
        const std::uint64_t batch = std::min({kBatch, r - k, budget});
        for (std::uint64_t i = 0; i < batch; ++i) {
          step(y);
          q *= Integer(abs(x - y));
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        budget -= batch;
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += batch;
      }
      r *= 2;
    }

    if (g == n) {
      // Batched product overshot; replay one step at a time from the checkpoint.
      do {
        step(ys);
        Integer diff = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != 1 && g != n) return g;
    // Degenerate cycle: retry with a fresh polynomial.
  }
  return std::nullopt;
}

bool is_probable_prime(const Integer& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), kPrimalityReps) != 0;
}

void factor_cofactor(const Integer& n, const FactorConfig& config, std::uint64_t& budget,
                     std::map<Integer, unsigned>& out, unsigned multiplicity) {
  if (n == 1) return;
  const Integer bound_sq = Integer(static_cast<unsigned long>(config.trial_bound)) *
                           static_cast<unsigned long>(config.trial_bound);
  if (n < bound_sq || is_probable_prime(n)) {
    out[n] += multiplicity;
    return;
  }
  if (mpz_perfect_square_p(n.get_mpz_t()) != 0) {
    Integer root;
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    factor_cofactor(root, config, budget, out, multiplicity * 2);
    return;
  }
  auto factor = pollard_brent(n, budget);
  if (!factor) {
    throw Error(Errc::factorization_exceeded,
                "no factor of " + std::to_string(mpz_sizeinbase(n.get_mpz_t(), 10)) +
                    "-digit cofactor within the rho iteration budget");
  }
  factor_cofactor(*factor, config, budget, out, multiplicity);
  factor_cofactor(n / *factor, config, budget, out, multiplicity);
}

Integer squarefree_of_cofactor(const Integer& n, const FactorConfig& config, std::uint64_t& budget) {
  if (n == 1) return 1;
  const Integer bound_sq = Integer(static_cast<unsigned long>(config.trial_bound)) *
                           static_cast<unsigned long>(config.trial_bound);
  if (n < bound_sq || is_probable_prime(n)) return n;
  if (mpz_perfect_square_p(n.get_mpz_t()) != 0) return 1;
  auto factor = pollard_brent(n, budget);
  if (!factor) {
    throw Error(Errc::factorization_exceeded,
                "no factor of " + std::to_string(mpz_sizeinbase(n.get_mpz_t(), 10)) +
                    "-digit cofactor within the rho iteration budget");
  }
  // sf(uv) = sf(u) sf(v) / gcd(sf(u), sf(v))^2
  Integer u = squarefree_of_cofactor(*factor, config, budget);
  Integer v = squarefree_of_cofactor(n / *factor, config, budget);
  Integer g;
  mpz_gcd(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t());
  return (u / g) * (v / g);
}

}  // namespace

FactorConfig FactorConfig::from_environment() {
  FactorConfig config;
  if (const char* env = std::getenv("CUBOID_FACTOR_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) config.rho_iterations = v;
  }
  return config;
}

std::map<Integer, unsigned> factorize(const Integer& n, const FactorConfig& config) {
  if (n == 0) throw Error(Errc::trivial_input, "cannot factor zero");
  Integer rest = abs(n);
  std::map<Integer, unsigned> out;
  trial_divide(rest, *prime_table(config.trial_bound), out);
  std::uint64_t budget = config.rho_iterations;
  factor_cofactor(rest, config, budget, out, 1);
  return out;
}

Integer squarefree_part(const Integer& n, const FactorConfig& config) {
  if (n == 0) throw Error(Errc::trivial_input, "squarefree part of zero");
  Integer rest = abs(n);
  std::map<Integer, unsigned> small;
  trial_divide(rest, *prime_table(config.trial_bound), small);
  Integer kernel = 1;
  for (const auto& [p, e] : small) {
    if (e % 2 == 1) kernel *= p;
  }
  std::uint64_t budget = config.rho_iterations;
  return kernel * squarefree_of_cofactor(rest, config, budget);
}

Integer squarefree_kernel(const Rational& r, const FactorConfig& config) {
  if (r.is_zero()) throw Error(Errc::trivial_input, "squarefree kernel of zero");
  // num and den are coprime, so their squarefree parts multiply.
  return squarefree_part(r.num(), config) * squarefree_part(r.den(), config);
}

}  // namespace cuboid
