#include <cstddef>
#include <map>

#include "ddo/kernels.hpp"

namespace ddo::kernels {

namespace {

bool acc(AcceptBits const& accept, std::size_t n, Element s, Element e) {
  return accept[static_cast<std::size_t>(s) * n + e] != 0;
}

// Assigns dense ids to equal rows, numbered by first occurrence.
template <typename Row>
std::vector<std::uint32_t> dedup(std::vector<Row> const& rows) {
  std::map<Row, std::uint32_t> ids;
  std::vector<std::uint32_t> out(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    auto [it, fresh] = ids.try_emplace(rows[i],
                                       static_cast<std::uint32_t>(ids.size()));
    out[i] = it->second;
  }
  return out;
}

}  // namespace

std::vector<std::uint32_t> congruence_classes(FiniteMonoid const& m,
                                              AcceptBits const& accept) {
  auto const n = m.size();
  auto const sn = static_cast<std::ptrdiff_t>(n);
  auto const idem = m.idempotents();

  // lin[z] = (Accept(z e, e))_e  over idempotents e (w^omega = e)
  std::vector<std::vector<char>> lin(n);
  // cyc[z] = (Accept(u e, e))_u  with e = idem(z)  (the context u (z)^omega)
  std::vector<std::vector<char>> cyc(n);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t zi = 0; zi < sn; ++zi) {
    auto z = static_cast<Element>(zi);
    lin[z].resize(idem.size());
    for (std::size_t i = 0; i < idem.size(); ++i) {
      lin[z][i] = acc(accept, n, m.mul(z, idem[i]), idem[i]);
    }
    Element e = m.idempotent_power(z);
    cyc[z].resize(n);
    for (Element u = 0; u < n; ++u) {
      cyc[z][u] = acc(accept, n, m.mul(u, e), e);
    }
  }
  auto lin_id = dedup(lin);
  auto cyc_id = dedup(cyc);

  // right[x] = (lin_id(x v))_v : agreement for all right contexts v, e
  std::vector<std::vector<std::uint32_t>> right(n);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t xi = 0; xi < sn; ++xi) {
    auto x = static_cast<Element>(xi);
    right[x].resize(n);
    for (Element v = 0; v < n; ++v) {
      right[x][v] = lin_id[m.mul(x, v)];
    }
  }
  auto right_id = dedup(right);

  // signature(p) = (right_id(u p))_u ++ (cyc_id(p v))_v
  std::vector<std::vector<std::uint32_t>> sig(n);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t pi = 0; pi < sn; ++pi) {
    auto p = static_cast<Element>(pi);
    if (p == m.identity()) {
      sig[p].assign(1, UINT32_MAX);  // never equal to a real signature
      continue;
    }
    sig[p].resize(2 * n);
    for (Element u = 0; u < n; ++u) {
      sig[p][u] = right_id[m.mul(u, p)];
      sig[p][n + u] = cyc_id[m.mul(p, u)];
    }
  }
  return dedup(sig);
}

std::vector<std::uint32_t> congruence_classes_serial(FiniteMonoid const& m,
                                                     AcceptBits const& accept) {
  auto const n = m.size();
  auto congruent = [&](Element p, Element q) {
    for (Element u = 0; u < n; ++u) {
      for (Element v = 0; v < n; ++v) {
        for (Element w = 0; w < n; ++w) {
          Element e = m.idempotent_power(w);
          if (acc(accept, n, m.mul(u, p, v, e), e)
              != acc(accept, n, m.mul(u, q, v, e), e)) {
            return false;
          }
        }
        Element ep = m.idempotent_power(m.mul(p, v));
        Element eq = m.idempotent_power(m.mul(q, v));
        if (acc(accept, n, m.mul(u, ep), ep) != acc(accept, n, m.mul(u, eq), eq)) {
          return false;
        }
      }
    }
    return true;
  };

  std::vector<std::uint32_t> cls(n, UINT32_MAX);
  std::vector<Element> reps;
  for (Element p = 0; p < n; ++p) {
    if (p == m.identity()) {
      cls[p] = static_cast<std::uint32_t>(reps.size());
      reps.push_back(p);
      continue;
    }
    for (std::size_t r = 0; r < reps.size(); ++r) {
      if (reps[r] != m.identity() && congruent(p, reps[r])) {
        cls[p] = static_cast<std::uint32_t>(r);
        break;
      }
    }
    if (cls[p] == UINT32_MAX) {
      cls[p] = static_cast<std::uint32_t>(reps.size());
      reps.push_back(p);
    }
  }
  return cls;
}

}  // namespace ddo::kernels
