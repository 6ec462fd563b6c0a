#include <atomic>
#include <cstddef>
#include <limits>

#include "ddo/kernels.hpp"

namespace ddo::kernels {

std::optional<B1Witness> find_b1_violation_serial(SubSemigroup const& s) {
  auto const& xs = s.elements();
  for (auto e : s.idempotents()) {
    for (auto f : s.idempotents()) {
      for (auto x : xs) {
        for (auto y : xs) {
          for (auto u : xs) {  // plays s
            for (auto t : xs) {
              B1Witness w{e, f, u, t, x, y};
              if (!b1_check_equation(s, w)) {
                return w;
              }
            }
          }
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<B1Witness> find_b1_violation(SubSemigroup const& s) {
  auto const& m = s.parent();
  auto const& xs = s.elements();
  auto const idem = s.idempotents();
  std::size_t const k = xs.size();
  std::size_t const pairs = idem.size() * idem.size();
  constexpr std::size_t none = std::numeric_limits<std::size_t>::max();

  // Per (e, f): index into x, y, s, t of the first violation.
  std::vector<std::size_t> hit(pairs, none);
  std::atomic<std::size_t> best_pair{none};

#pragma omp parallel
  {
    std::vector<Element> p(k * k), q(k * k), exf(k), esf(k);
#pragma omp for schedule(dynamic, 1)
    for (std::ptrdiff_t pi = 0; pi < static_cast<std::ptrdiff_t>(pairs); ++pi) {
      auto pair = static_cast<std::size_t>(pi);
      if (pair > best_pair.load(std::memory_order_relaxed)) {
        continue;
      }
      Element e = idem[pair / idem.size()];
      Element f = idem[pair % idem.size()];
      for (std::size_t i = 0; i < k; ++i) {
        exf[i] = m.mul(e, xs[i], f);
        esf[i] = exf[i];
        for (std::size_t j = 0; j < k; ++j) {
          // p[x][y] = (exfy)^omega, q[s][t] = (tesf)^omega
          p[i * k + j] = m.idempotent_power(m.mul(exf[i], xs[j]));
          q[i * k + j] = m.idempotent_power(m.mul(xs[j], exf[i]));
        }
      }
      std::size_t found = none;
      for (std::size_t ix = 0; ix < k && found == none; ++ix) {
        for (std::size_t iy = 0; iy < k && found == none; ++iy) {
          Element pxy = p[ix * k + iy];
          Element left = m.mul(pxy, exf[ix]);
          for (std::size_t is = 0; is < k && found == none; ++is) {
            Element right_mid = m.mul(pxy, esf[is]);
            for (std::size_t it = 0; it < k; ++it) {
              Element qst = q[is * k + it];
              if (m.mul(left, qst) != m.mul(right_mid, qst)) {
                found = ((ix * k + iy) * k + is) * k + it;
                break;
              }
            }
          }
        }
      }
      if (found != none) {
        hit[pair] = found;
        auto cur = best_pair.load();
        while (pair < cur && !best_pair.compare_exchange_weak(cur, pair)) {
        }
      }
    }
  }

  auto pair = best_pair.load();
  if (pair == none) {
    return std::nullopt;
  }
  std::size_t code = hit[pair];
  std::size_t it = code % k;
  code /= k;
  std::size_t is = code % k;
  code /= k;
  std::size_t iy = code % k;
  std::size_t ix = code / k;
  return B1Witness{idem[pair / idem.size()], idem[pair % idem.size()], xs[is],
                   xs[it], xs[ix], xs[iy]};
}

}  // namespace ddo::kernels
